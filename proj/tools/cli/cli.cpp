#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "hypergroup/algebra.hpp"
#include "hypergroup/error.hpp"
#include "hypergroup/freegroup.hpp"
#include "hypergroup/functional.hpp"
#include "hypergroup/serialize.hpp"
#include "hypergroup/spectra.hpp"
#include "hypergroup/transform.hpp"
#include "svg.hpp"

namespace hypergroup::cli {

namespace {

using algebra::Degree;

struct FunctionalArgs {
  std::string family;
  std::string lambda;
  double c = 0.0;
};

struct Functional {
  spectra::FunctionalSpec functional;
  std::optional<spectra::Lambda> lambda;
  std::string label;
};

void add_functional_options(CLI::App* cmd, FunctionalArgs& f) {
  cmd->add_option("--lambda,-L", f.lambda, "geometric parameter: 3/2, -1.5, 1+1i, sqrt(3), 2@30 (polar, degrees)");
  cmd->add_option("--family", f.family, "geometric (default with --lambda), plancherel or point")
      ->check(CLI::IsMember({"geometric", "plancherel", "point"}));
  cmd->add_option("--c", f.c, "character value for --family point");
}

Functional resolve(const FunctionalArgs& f) {
  std::string family = f.family;
  if (family.empty()) family = f.lambda.empty() ? "" : "geometric";
  if (family == "geometric") {
    if (f.lambda.empty()) throw DomainError("--lambda is required for the geometric family");
    auto lam = spectra::Lambda::parse(f.lambda);
    return {spectra::FunctionalSpec::geometric(lam.value), lam, "lambda = " + lam.to_string()};
  }
  if (family == "plancherel") return {spectra::FunctionalSpec::delta_at_0(), std::nullopt, "plancherel"};
  if (family == "point") return {spectra::FunctionalSpec::point_eval(f.c), std::nullopt, "c = " + io::format_double(f.c)};
  throw DomainError("give --lambda or --family");
}

spectra::SpectralMeasure measure_of(const Functional& fn, const Param& r) {
  if (fn.lambda) return spectra::geometric_measure(*fn.lambda, r);
  return spectra::measure_for(fn.functional, r);
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ResourceError("cannot open output file " + path);
  f << text;
  if (!f) throw ResourceError("failed writing output file " + path);
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::domain:
    case ErrorKind::regime: return kDomain;
    case ErrorKind::resource: return kResource;
    case ErrorKind::verification: return kVerification;
  }
  return kDomain;
}

void check_degree_bound(Degree n, Degree bound, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + " must be non-negative");
  if (n > bound)
    throw ResourceError(std::string(what) + " = " + std::to_string(n) + " exceeds --max-degree " +
                        std::to_string(bound));
}

// l when r = 1/(2l) for an integer l >= 2.
std::optional<int> free_group_rank(const Param& r) {
  if (!r.is_exact() || r.exact() <= 0) return std::nullopt;
  const Rational inv = 1 / r.exact();
  if (inv.get_den() != 1 || inv.get_num() % 2 != 0) return std::nullopt;
  const mpz_class l = inv.get_num() / 2;
  if (l < 2 || !l.fits_sint_p()) return std::nullopt;
  return static_cast<int>(l.get_si());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Polynomial hypergroup toolkit: structure constants, spectral measures, Stieltjes inversion"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hypergroup 0.1.0");

  std::string output;
  std::string r_text;
  std::string format;
  Degree max_degree = 5000;
  freegroup::Limits limits;
  transform::InversionTolerances inv_tol;

  auto add_common = [&](CLI::App* cmd, const std::string& default_format, std::vector<std::string> formats) {
    cmd->add_option("-o,--output", output, "write the result to this file instead of stdout");
    format = default_format;
    if (!formats.empty())
      cmd->add_option("--format,-f", format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
  };
  auto add_r = [&](CLI::App* cmd) { cmd->add_option("-r", r_text, "hypergroup parameter, e.g. 1/4 or 0.25")->required(); };
  auto add_max_degree = [&](CLI::App* cmd) {
    cmd->add_option("--max-degree", max_degree, "largest degree accepted")
        ->envname("HYPERGROUP_MAX_DEGREE")
        ->capture_default_str();
  };
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-words", limits.max_words, "largest sphere enumerated")
        ->envname("HYPERGROUP_MAX_WORDS")
        ->capture_default_str();
    cmd->add_option("--max-dimension", limits.max_dimension, "largest Gram matrix")
        ->envname("HYPERGROUP_MAX_DIMENSION")
        ->capture_default_str();
  };
  auto add_inversion_tolerances = [&](CLI::App* cmd) {
    cmd->add_option("--density-residual", inv_tol.density_residual, "density convergence threshold")
        ->envname("HYPERGROUP_DENSITY_RESIDUAL")
        ->capture_default_str();
    cmd->add_option("--atom-threshold", inv_tol.atom_threshold, "weights below this count as zero")
        ->envname("HYPERGROUP_ATOM_THRESHOLD")
        ->capture_default_str();
    cmd->add_option("--atom-residual", inv_tol.atom_residual, "atom convergence threshold")
        ->envname("HYPERGROUP_ATOM_RESIDUAL")
        ->capture_default_str();
  };

  // product
  Degree m = 0, n = 0;
  bool check = false;
  auto* product = app.add_subcommand("product", "exact structure constants of h_m h_n");
  product->add_option("-m", m, "first degree")->required();
  product->add_option("-n", n, "second degree")->required();
  add_r(product);
  product->add_flag("--check", check, "cross-check recursion, closed form and (at r = 1/(2l)) free-group counting");
  add_max_degree(product);
  add_limits(product);

  // measure / plot / invert / moments share the functional options
  FunctionalArgs fargs;
  std::size_t grid = 200;
  auto* measure = app.add_subcommand("measure", "closed-form spectral measure: regime, atoms, density samples");
  add_functional_options(measure, fargs);
  add_r(measure);
  measure->add_option("--grid", grid, "number of density samples")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "SVG of the spectral measure");
  add_functional_options(plot, fargs);
  add_r(plot);
  plot->add_option("--grid", grid, "number of density samples")->capture_default_str();

  double band = 0.05, eps_first = 1e-2, cmp_tol = 1e-4, atom_tol = 1e-6;
  std::size_t eps_count = 9;
  auto* invert = app.add_subcommand("invert", "numeric Stieltjes inversion compared with the closed form");
  add_functional_options(invert, fargs);
  add_r(invert);
  invert->add_option("--grid", grid, "number of interior grid points")->capture_default_str();
  invert->add_option("--band", band, "fraction of I_r left out at each end")->capture_default_str();
  invert->add_option("--eps-first", eps_first, "largest offset from the real axis")->capture_default_str();
  invert->add_option("--eps-count", eps_count, "number of halvings of the offset")->capture_default_str();
  invert->add_option("--tol", cmp_tol, "allowed density deviation from the closed form")
      ->envname("HYPERGROUP_INVERT_TOL")
      ->capture_default_str();
  invert->add_option("--atom-tol", atom_tol, "allowed atom weight deviation from the closed form")
      ->envname("HYPERGROUP_ATOM_TOL")
      ->capture_default_str();
  add_inversion_tolerances(invert);

  Degree moments_n = 15;
  double moments_tol = 1e-7;
  auto* moments = app.add_subcommand("moments", "check int P_n dmu = phi_n for n <= N");
  add_functional_options(moments, fargs);
  add_r(moments);
  moments->add_option("-N", moments_n, "largest degree")->capture_default_str();
  moments->add_option("--tol", moments_tol, "allowed absolute error")->envname("HYPERGROUP_TOL")->capture_default_str();
  add_max_degree(moments);

  std::string lambda_text;
  auto* classify = app.add_subcommand("classify", "regime of the geometric functional lambda^{-n}");
  classify->add_option("--lambda,-L", lambda_text, "geometric parameter")->required();
  add_r(classify);

  auto* positivity = app.add_subcommand("positivity", "whether the measure of lambda is real and positive");
  positivity->add_option("--lambda,-L", lambda_text, "geometric parameter")->required();
  add_r(positivity);

  int rank = 2;
  Degree maxlen = 6;
  auto* oracle = app.add_subcommand("oracle", "radial convolution in F_l against the hypergroup at r = 1/(2l)");
  oracle->add_option("-l", rank, "number of generators")->capture_default_str();
  oracle->add_option("--maxlen", maxlen, "all products with m + n <= maxlen")->capture_default_str();
  add_limits(oracle);

  Degree radius = 2;
  bool sign_twist = false;
  auto* gram = app.add_subcommand("gram", "Gram matrix of lambda^{-|g|} over a ball in F_l");
  gram->add_option("--lambda,-L", lambda_text, "real, nonzero")->required();
  gram->add_option("-l", rank, "number of generators")->capture_default_str();
  gram->add_option("-N", radius, "ball radius")->capture_default_str();
  gram->add_flag("--sign-twist", sign_twist, "also compare with -lambda");
  gram->add_flag("--check", check, "exit 4 unless positive semidefinite (and twist-invariant with --sign-twist)");
  add_limits(gram);

  Degree poly_n = 10;
  auto* poly = app.add_subcommand("poly", "monomial coefficients of P_0 .. P_N");
  poly->add_option("-N", poly_n, "largest degree")->capture_default_str();
  add_r(poly);
  add_max_degree(poly);

  // Options shared by every subcommand are added last so that -o is accepted everywhere.
  add_common(product, "json", {"json", "csv"});
  add_common(measure, "json", {"json", "csv", "svg"});
  add_common(plot, "svg", {});
  add_common(invert, "json", {"json", "csv"});
  add_common(moments, "csv", {"csv", "json"});
  add_common(classify, "json", {});
  add_common(positivity, "json", {});
  add_common(oracle, "json", {"json", "csv"});
  add_common(gram, "json", {});
  add_common(poly, "csv", {});
  format.clear();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << io::error_json(ErrorKind::domain, e.what());
    return kDomain;
  }

  auto fmt_or = [&](const char* dflt) { return format.empty() ? std::string(dflt) : format; };

  try {
    if (*product) {
      const Param r = Param::parse(r_text);
      if (!r.is_exact()) throw DomainError("product needs an exact r");
      check_degree_bound(m, max_degree, "m");
      check_degree_bound(n, max_degree, "n");
      const auto e = algebra::mul_basis_recursive(m, n, r);
      std::vector<io::ProductCheck> checks;
      bool ok = true;
      if (check) {
        const Degree lo = std::min(m, n), hi = std::max(m, n);
        if (lo == 0) {
          const bool same = e == algebra::ExactElement::basis(hi);
          checks.push_back({"identity", same, "h_0 is the unit"});
          ok = ok && same;
        } else if (r.exact() == 0) {
          checks.push_back({"closed_form", true, "skipped: the closed form is not used at r = 0"});
        } else {
          const bool same = e == algebra::mul_basis_closed(lo, hi, r);
          checks.push_back({"closed_form", same, ""});
          ok = ok && same;
        }
        const auto recomputed = algebra::mul_basis_recursive(n, m, r, nullptr);
        const bool commute = recomputed == e;
        checks.push_back({"commutativity", commute, "uncached recursion for h_n h_m"});
        ok = ok && commute;
        if (auto l = free_group_rank(r)) {
          try {
            const bool same = freegroup::radial_convolve(m, n, *l, limits) == e;
            checks.push_back({"free_group", same, "radial convolution in F_" + std::to_string(*l)});
            ok = ok && same;
          } catch (const ResourceError& err) {
            checks.push_back({"free_group", true, std::string("skipped: ") + err.what()});
          }
        }
      }
      emit(out, output, fmt_or("json") == "csv" ? io::element_csv(e) : io::product_json(m, n, r, e, checks));
      return ok ? kOk : kVerification;
    }

    if (*measure || *plot) {
      const Param r = Param::parse(r_text);
      const auto fn = resolve(fargs);
      std::optional<spectra::Regime> regime;
      if (fn.lambda) {
        regime = spectra::classify(*fn.lambda, r);
        if (regime->kind == spectra::Case::not_in_astar) {
          emit(out, output, io::regime_json(*fn.lambda, r, *regime));
          return kDomain;
        }
      }
      const auto mu = measure_of(fn, r);
      const std::string f = *plot ? "svg" : fmt_or("json");
      if (f == "svg")
        emit(out, output, render_svg(mu, grid, mu.family + " measure, " + fn.label + ", r = " + r.to_string()));
      else if (f == "csv")
        emit(out, output, io::measure_csv(mu, grid));
      else
        emit(out, output, io::measure_json(mu, regime, grid));
      return kOk;
    }

    if (*invert) {
      const Param r = Param::parse(r_text);
      const auto fn = resolve(fargs);
      std::optional<spectra::Regime> regime;
      std::optional<spectra::SpectralMeasure> reference;
      if (fn.lambda) {
        regime = spectra::classify(*fn.lambda, r);
        if (regime->kind != spectra::Case::not_in_astar) reference = measure_of(fn, r);
      } else {
        reference = measure_of(fn, r);
      }
      const auto pts = transform::interior_grid(r, grid, band);
      const auto res = transform::invert(fn.functional, r, pts, transform::EpsilonSchedule::halving(eps_first, eps_count),
                                         inv_tol);
      emit(out, output,
           fmt_or("json") == "csv" ? io::inversion_csv(res)
                                   : io::inversion_json(res, reference ? &*reference : nullptr, regime));
      if (!reference) return kDomain;
      const auto cmp = io::compare(res, *reference);
      const bool ok = res.densities_converged() && cmp.atoms_found && cmp.max_density_error <= cmp_tol &&
                      cmp.max_atom_error <= atom_tol;
      return ok ? kOk : kVerification;
    }

    if (*moments) {
      const Param r = Param::parse(r_text);
      check_degree_bound(moments_n, max_degree, "N");
      const auto fn = resolve(fargs);
      const auto rep = fn.lambda ? spectra::verify_functional(*fn.lambda, r, moments_n, moments_tol)
                                 : spectra::verify_functional(fn.functional, r, moments_n, moments_tol);
      emit(out, output, fmt_or("csv") == "json" ? io::moments_json(rep) : io::moments_csv(rep));
      return rep.pass ? kOk : kVerification;
    }

    if (*classify) {
      const Param r = Param::parse(r_text);
      const auto lam = spectra::Lambda::parse(lambda_text);
      emit(out, output, io::regime_json(lam, r, spectra::classify(lam, r)));
      return kOk;
    }

    if (*positivity) {
      const Param r = Param::parse(r_text);
      const auto lam = spectra::Lambda::parse(lambda_text);
      const auto rep = spectra::positivity_report(lam, r);
      emit(out, output, io::positivity_json(lam, r, rep));
      return rep.scan_agrees ? kOk : kVerification;
    }

    if (*oracle) {
      if (maxlen < 0) throw DomainError("--maxlen must be non-negative");
      if (rank < 2) throw DomainError("free group rank l must be at least 2");
      const Param r(Rational(1, 2 * rank));
      bool ok = true;
      for (Degree k = 0; k <= maxlen; ++k)
        ok = ok && freegroup::enumerate_sphere(rank, k, limits).size() == freegroup::sphere_size(rank, k);
      std::vector<io::ConvolutionRow> rows;
      for (Degree a = 0; a <= maxlen; ++a) {
        for (Degree b = a; a + b <= maxlen; ++b) {
          io::ConvolutionRow row{a, b, freegroup::radial_convolve(a, b, rank, limits),
                                 algebra::mul_basis_recursive(a, b, r), false};
          row.agrees = row.radial == row.hypergroup;
          ok = ok && row.agrees;
          rows.push_back(std::move(row));
        }
      }
      emit(out, output, fmt_or("json") == "csv" ? io::convolution_csv(rows) : io::convolution_json(rank, rows));
      return ok ? kOk : kVerification;
    }

    if (*gram) {
      const auto lam = spectra::Lambda::parse(lambda_text);
      if (!lam.is_real()) throw DomainError("the Gram check needs a real lambda");
      const auto rep = freegroup::haagerup_gram(lam.value.real(), rank, radius, limits);
      std::optional<bool> twist;
      if (sign_twist) twist = freegroup::sign_twist_check(lam.value.real(), rank, radius, limits);
      emit(out, output, io::gram_json(rep, twist));
      if (check && (!rep.psd || (twist && !*twist))) return kVerification;
      return kOk;
    }

    if (*poly) {
      const Param r = Param::parse(r_text);
      if (!r.is_exact()) throw DomainError("poly needs an exact r");
      check_degree_bound(poly_n, max_degree, "N");
      emit(out, output, io::poly_table_csv(poly_n, r));
      return kOk;
    }
  } catch (const Error& e) {
    out << io::error_json(e.kind(), e.what());
    return exit_code(e.kind());
  } catch (const std::invalid_argument& e) {
    out << io::error_json(ErrorKind::domain, e.what());
    return kDomain;
  }
  return kOk;
}

}  // namespace hypergroup::cli
