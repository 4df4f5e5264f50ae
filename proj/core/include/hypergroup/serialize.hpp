#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypergroup/algebra.hpp"
#include "hypergroup/error.hpp"
#include "hypergroup/freegroup.hpp"
#include "hypergroup/spectra.hpp"
#include "hypergroup/transform.hpp"

/// JSON and CSV renderings. Every JSON document carries
/// "schema": "hypergroup-spectra/1". Doubles are written with 17 significant
/// digits, so identical inputs give byte-identical output.
namespace hypergroup::io {

inline constexpr const char* kSchema = "hypergroup-spectra/1";

/// Shortest round-trip decimal for a double ("nan", "inf", "-inf" for non-finite values).
std::string format_double(double x);

/// {"degree": "p/q", ...}, degrees ascending.
std::string element_json(const algebra::ExactElement& e);
/// degree,coefficient rows with exact "p/q" coefficients.
std::string element_csv(const algebra::ExactElement& e);

struct ProductCheck {
  std::string name;
  bool agrees = false;
  std::string detail;
};

std::string product_json(algebra::Degree m, algebra::Degree n, const Param& r, const algebra::ExactElement& e,
                         const std::vector<ProductCheck>& checks);

std::string regime_json(const spectra::Lambda& lambda, const Param& r, const spectra::Regime& regime);

/// {schema, family, r, lambda, atoms:[{t, w, w_im, t_exact?, w_exact?}], support:[a, b], ...}.
std::string measure_json(const spectra::SpectralMeasure& mu, const std::optional<spectra::Regime>& regime,
                         std::size_t samples);
/// t,re_density,im_density,residual on `samples` interior points; residual is 0 for closed forms.
std::string measure_csv(const spectra::SpectralMeasure& mu, std::size_t samples);

struct InversionComparison {
  double max_density_error = 0.0;  ///< over the sampled grid
  double max_atom_error = 0.0;     ///< closed-form atoms against the numeric residues
  bool atoms_found = true;         ///< every closed-form atom was detected
};

/// Compares a numeric inversion with a closed-form measure.
InversionComparison compare(const transform::InversionResult& res, const spectra::SpectralMeasure& reference);

/// reference, when given, adds closed-form columns and the comparison summary.
std::string inversion_json(const transform::InversionResult& res, const spectra::SpectralMeasure* reference,
                           const std::optional<spectra::Regime>& regime);
std::string inversion_csv(const transform::InversionResult& res);

/// n,expected_re,expected_im,computed_re,computed_im,abs_error.
std::string moments_csv(const spectra::VerificationReport& rep);
std::string moments_json(const spectra::VerificationReport& rep);

std::string gram_json(const freegroup::GramReport& rep, std::optional<bool> sign_twist);

struct ConvolutionRow {
  algebra::Degree m = 0;
  algebra::Degree n = 0;
  algebra::ExactElement radial;
  algebra::ExactElement hypergroup;
  bool agrees = false;
};

std::string convolution_json(int l, const std::vector<ConvolutionRow>& rows);
/// m,n,k,radial,hypergroup,agrees.
std::string convolution_csv(const std::vector<ConvolutionRow>& rows);

std::string positivity_json(const spectra::Lambda& lambda, const Param& r, const spectra::PositivityReport& rep);

/// n followed by the coefficients of P_n in the monomial basis, lowest degree first.
std::string poly_table_csv(algebra::Degree max_degree, const Param& r);

std::string error_json(ErrorKind kind, const std::string& message);

}  // namespace hypergroup::io
