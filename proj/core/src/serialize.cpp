#include "hypergroup/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <sstream>

#include "hypergroup/orthopoly.hpp"

namespace hypergroup::io {

namespace {

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

json num(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

json doc() {
  json j;
  j["schema"] = kSchema;
  return j;
}

json element_object(const algebra::ExactElement& e) {
  json j = json::object();
  for (const auto& [n, c] : e.terms()) j[std::to_string(n)] = to_string(c);
  return j;
}

json regime_object(const spectra::Regime& reg) {
  json j;
  j["case"] = spectra::to_string(reg.kind);
  j["reduced_continuous"] = reg.reduced_continuous;
  j["boundary_proximity"] = {{"modulus_gap", num(reg.proximity.modulus_gap)},
                             {"unit_gap", num(reg.proximity.unit_gap)},
                             {"exact", reg.proximity.exact}};
  if (!reg.note.empty()) j["note"] = reg.note;
  return j;
}

json param_value(const Param& r) { return r.to_string(); }

std::vector<double> sample_points(const spectra::SpectralMeasure& mu, std::size_t samples) {
  std::vector<double> pts;
  if (!mu.has_continuous_part() || samples == 0) return pts;
  // Open grid: midpoints of equal cells, so the endpoints themselves are never sampled.
  const double lo = mu.support.lo, hi = mu.support.hi;
  const double h = (hi - lo) / static_cast<double>(samples);
  for (std::size_t k = 0; k < samples; ++k) pts.push_back(lo + (static_cast<double>(k) + 0.5) * h);
  return pts;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string element_json(const algebra::ExactElement& e) {
  json j = doc();
  j["terms"] = element_object(e);
  return dump(j);
}

std::string element_csv(const algebra::ExactElement& e) {
  std::string out = "degree,coefficient\n";
  for (const auto& [n, c] : e.terms()) out += std::to_string(n) + "," + to_string(c) + "\n";
  return out;
}

std::string product_json(algebra::Degree m, algebra::Degree n, const Param& r, const algebra::ExactElement& e,
                         const std::vector<ProductCheck>& checks) {
  json j = doc();
  j["m"] = m;
  j["n"] = n;
  j["r"] = param_value(r);
  j["terms"] = element_object(e);
  if (!checks.empty()) {
    json arr = json::array();
    for (const auto& c : checks) {
      json item = {{"name", c.name}, {"agrees", c.agrees}};
      if (!c.detail.empty()) item["detail"] = c.detail;
      arr.push_back(item);
    }
    j["checks"] = arr;
  }
  return dump(j);
}

std::string regime_json(const spectra::Lambda& lambda, const Param& r, const spectra::Regime& regime) {
  json j = doc();
  j["lambda"] = lambda.to_string();
  j["r"] = param_value(r);
  j["regime"] = regime_object(regime);
  return dump(j);
}

std::string measure_json(const spectra::SpectralMeasure& mu, const std::optional<spectra::Regime>& regime,
                         std::size_t samples) {
  json j = doc();
  j["family"] = mu.family;
  j["r"] = param_value(mu.r);
  if (mu.lambda) j["lambda"] = mu.lambda->to_string();
  if (regime) j["regime"] = regime_object(*regime);
  json atoms = json::array();
  for (const auto& a : mu.atoms) {
    json item = {{"t", num(a.location)}, {"w", num(a.weight.real())}, {"w_im", num(a.weight.imag())}};
    if (a.exact_location) item["t_exact"] = to_string(*a.exact_location);
    if (a.exact_weight) item["w_exact"] = to_string(*a.exact_weight);
    atoms.push_back(item);
  }
  j["atoms"] = atoms;
  j["support"] = {num(mu.support.lo), num(mu.support.hi)};
  j["continuous"] = mu.has_continuous_part();
  if (mu.has_continuous_part()) {
    j["density_scale"] = {num(mu.density_scale.real()), num(mu.density_scale.imag())};
    if (mu.pole) j["pole"] = {num(mu.pole->real()), num(mu.pole->imag())};
    json dens = json::array();
    for (double t : sample_points(mu, samples)) {
      const cplx d = mu.density(t);
      dens.push_back({num(t), num(d.real()), num(d.imag())});
    }
    j["density"] = dens;
  }
  return dump(j);
}

std::string measure_csv(const spectra::SpectralMeasure& mu, std::size_t samples) {
  std::string out = "t,re_density,im_density,residual\n";
  for (double t : sample_points(mu, samples)) {
    const cplx d = mu.density(t);
    out += format_double(t) + "," + format_double(d.real()) + "," + format_double(d.imag()) + ",0\n";
  }
  return out;
}

InversionComparison compare(const transform::InversionResult& res, const spectra::SpectralMeasure& reference) {
  InversionComparison cmp;
  for (const auto& s : res.grid) {
    const double dev = std::abs(s.density - reference.density(s.t));
    if (!(dev <= cmp.max_density_error)) cmp.max_density_error = dev;
  }
  for (const auto& atom : reference.atoms) {
    const auto it = std::find_if(res.atoms.begin(), res.atoms.end(), [&](const transform::AtomEstimate& a) {
      return std::abs(a.location - atom.location) <= 1e-12 * std::max(1.0, std::abs(atom.location));
    });
    if (it == res.atoms.end() || !it->present) {
      cmp.atoms_found = false;
      continue;
    }
    const double dev = std::abs(it->weight - atom.weight);
    if (!(dev <= cmp.max_atom_error)) cmp.max_atom_error = dev;
  }
  return cmp;
}

std::string inversion_json(const transform::InversionResult& res, const spectra::SpectralMeasure* reference,
                           const std::optional<spectra::Regime>& regime) {
  json j = doc();
  if (regime) j["regime"] = regime_object(*regime);
  j["epsilon_schedule"] = res.epsilon_schedule;
  j["exclusion_radius"] = num(res.exclusion_radius);
  j["excluded_points"] = res.excluded_points;
  j["densities_converged"] = res.densities_converged();
  j["max_residual"] = num(res.max_residual());
  json atoms = json::array();
  for (const auto& a : res.atoms)
    atoms.push_back({{"t", num(a.location)},
                     {"w", num(a.weight.real())},
                     {"w_im", num(a.weight.imag())},
                     {"residual", num(a.residual)},
                     {"converged", a.converged},
                     {"present", a.present}});
  j["atoms"] = atoms;
  json grid = json::array();
  for (const auto& s : res.grid) {
    json item = {{"t", num(s.t)},
                 {"re", num(s.density.real())},
                 {"im", num(s.density.imag())},
                 {"residual", num(s.residual)},
                 {"converged", s.converged}};
    if (reference) {
      const cplx ref = reference->density(s.t);
      item["closed_re"] = num(ref.real());
      item["closed_im"] = num(ref.imag());
      item["abs_error"] = num(std::abs(s.density - ref));
    }
    grid.push_back(item);
  }
  j["grid"] = grid;
  if (reference) {
    const auto cmp = compare(res, *reference);
    json closed_atoms = json::array();
    for (const auto& a : reference->atoms)
      closed_atoms.push_back({{"t", num(a.location)}, {"w", num(a.weight.real())}, {"w_im", num(a.weight.imag())}});
    j["closed_form"] = {{"atoms", closed_atoms},
                        {"max_density_error", num(cmp.max_density_error)},
                        {"max_atom_error", num(cmp.max_atom_error)},
                        {"atoms_found", cmp.atoms_found}};
  }
  return dump(j);
}

std::string inversion_csv(const transform::InversionResult& res) {
  std::string out = "t,re_density,im_density,residual\n";
  for (const auto& s : res.grid)
    out += format_double(s.t) + "," + format_double(s.density.real()) + "," + format_double(s.density.imag()) + "," +
           format_double(s.residual) + "\n";
  return out;
}

std::string moments_csv(const spectra::VerificationReport& rep) {
  std::string out = "n,expected_re,expected_im,computed_re,computed_im,abs_error\n";
  for (const auto& row : rep.rows)
    out += std::to_string(row.n) + "," + format_double(row.expected.real()) + "," +
           format_double(row.expected.imag()) + "," + format_double(row.computed.real()) + "," +
           format_double(row.computed.imag()) + "," + format_double(row.abs_error) + "\n";
  return out;
}

std::string moments_json(const spectra::VerificationReport& rep) {
  json j = doc();
  j["family"] = rep.family;
  if (rep.regime) j["regime"] = regime_object(*rep.regime);
  j["tol"] = num(rep.tol);
  j["pass"] = rep.pass;
  json rows = json::array();
  for (const auto& row : rep.rows)
    rows.push_back({{"n", row.n},
                    {"expected_re", num(row.expected.real())},
                    {"expected_im", num(row.expected.imag())},
                    {"computed_re", num(row.computed.real())},
                    {"computed_im", num(row.computed.imag())},
                    {"abs_error", num(row.abs_error)}});
  j["rows"] = rows;
  return dump(j);
}

std::string gram_json(const freegroup::GramReport& rep, std::optional<bool> sign_twist) {
  json j = doc();
  j["lambda"] = num(rep.lambda);
  j["l"] = rep.l;
  j["radius"] = rep.radius;
  j["dimension"] = rep.dimension;
  j["min_eigenvalue"] = num(rep.min_eigenvalue);
  j["residual"] = num(rep.residual);
  j["psd"] = rep.psd;
  if (sign_twist) j["sign_twist"] = *sign_twist;
  j["evidence"] = "finite-radius Gram matrix only";
  return dump(j);
}

std::string convolution_json(int l, const std::vector<ConvolutionRow>& rows) {
  json j = doc();
  j["l"] = l;
  j["r"] = "1/" + std::to_string(2 * l);
  bool all = true;
  json arr = json::array();
  for (const auto& row : rows) {
    all = all && row.agrees;
    arr.push_back({{"m", row.m},
                   {"n", row.n},
                   {"radial", element_object(row.radial)},
                   {"hypergroup", element_object(row.hypergroup)},
                   {"agrees", row.agrees}});
  }
  j["rows"] = arr;
  j["all_agree"] = all;
  return dump(j);
}

std::string convolution_csv(const std::vector<ConvolutionRow>& rows) {
  std::string out = "m,n,k,radial,hypergroup,agrees\n";
  for (const auto& row : rows) {
    algebra::Degree top = std::max(row.radial.max_degree(), row.hypergroup.max_degree());
    for (algebra::Degree k = 0; k <= top; ++k) {
      const Rational a = row.radial.coeff(k), b = row.hypergroup.coeff(k);
      if (a == 0 && b == 0) continue;
      out += std::to_string(row.m) + "," + std::to_string(row.n) + "," + std::to_string(k) + "," + to_string(a) + "," +
             to_string(b) + "," + (a == b ? "1" : "0") + "\n";
    }
  }
  return out;
}

std::string positivity_json(const spectra::Lambda& lambda, const Param& r, const spectra::PositivityReport& rep) {
  json j = doc();
  j["lambda"] = lambda.to_string();
  j["r"] = param_value(r);
  j["real"] = rep.real;
  j["positive"] = rep.positive;
  j["scan_agrees"] = rep.scan_agrees;
  j["min_density_re"] = num(rep.min_density_re);
  j["max_density_im"] = num(rep.max_density_im);
  return dump(j);
}

std::string poly_table_csv(algebra::Degree max_degree, const Param& r) {
  std::ostringstream out;
  out << "n";
  for (algebra::Degree k = 0; k <= max_degree; ++k) out << ",c" << k;
  out << "\n";
  for (algebra::Degree n = 0; n <= max_degree; ++n) {
    const auto c = orthopoly::coeffs_P(n, r);
    out << n;
    for (algebra::Degree k = 0; k <= max_degree; ++k)
      out << "," << (static_cast<std::size_t>(k) < c.size() ? to_string(c[static_cast<std::size_t>(k)]) : "0");
    out << "\n";
  }
  return out.str();
}

std::string error_json(ErrorKind kind, const std::string& message) {
  json j = doc();
  j["error"] = {{"kind", to_string(kind)}, {"message", message}};
  return dump(j);
}

}  // namespace hypergroup::io
