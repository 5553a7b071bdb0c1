// Command-line front end: builds multiplication polynomials by every
// implemented route, runs the determinant/discriminant/divisibility and
// irreducibility checks, and drives the floating-point simulator campaigns.
// Exit code 0 = verified, 1 = a check failed, 2 = usage error. JSON output
// uses insertion-ordered keys, so identical invocations (and seeds) produce
// byte-identical bytes.

#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nval/arith.hpp"
#include "nval/elimination.hpp"
#include "nval/groupsim.hpp"
#include "nval/pn_builders.hpp"
#include "nval/polymatrix.hpp"
#include "nval/serialize.hpp"
#include "nval/sym.hpp"

namespace {

using nval::Int;
using nval::Json;
using nval::Polynomial;

constexpr std::uint64_t kDefaultSeed = 1729;

// Small integers as JSON numbers (matching the documented examples), larger
// ones as decimal strings so nothing is rounded.
Json int_json(const Int& v) {
  static const Int lo = -(Int(1) << 62), hi = Int(1) << 62;
  if (v > lo && v < hi) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ------------------------------------------------------------------- pn

int run_pn(int n, int m, const std::string& route, const std::string& basis,
           const std::string& format) {
  std::vector<nval::PnRoute> wanted;
  if (route == "all") {
    wanted = {nval::PnRoute::KroneckerCharPoly, nval::PnRoute::BlockPower,
              nval::PnRoute::PowerSums};
    if (m == 2) {
      wanted.push_back(nval::PnRoute::WendtDet);
      wanted.push_back(nval::PnRoute::Resultant);
    }
  } else {
    const std::map<std::string, nval::PnRoute> names = {
        {"kronecker", nval::PnRoute::KroneckerCharPoly},
        {"wendt", nval::PnRoute::WendtDet},
        {"blockpower", nval::PnRoute::BlockPower},
        {"resultant", nval::PnRoute::Resultant},
        {"powersums", nval::PnRoute::PowerSums}};
    const auto it = names.find(route);
    if (it == names.end()) {
      std::cerr << "unknown route '" << route
                << "' (kronecker|wendt|blockpower|resultant|powersums|all)\n";
      return 2;
    }
    wanted = {it->second};
  }

  std::vector<std::pair<std::string, Polynomial>> built;
  Json skipped = Json::array();
  for (nval::PnRoute r : wanted) {
    try {
      built.emplace_back(nval::pn_route_name(r), nval::pn_build({n, m, r}));
    } catch (const std::invalid_argument& e) {
      if (route != "all") {  // an explicitly requested route must be valid
        std::cerr << e.what() << "\n";
        return 2;
      }
      skipped.push_back(Json{{"route", nval::pn_route_name(r)}, {"reason", e.what()}});
    }
  }
  if (built.empty()) {
    std::cerr << "no route is applicable to n=" << n << ", m=" << m << "\n";
    return 2;
  }
  bool agree = true;
  for (std::size_t i = 1; i < built.size(); ++i)
    if (!(built[i].second == built[0].second)) agree = false;

  const Polynomial& p = built[0].second;
  std::string sigma;
  Json sigma_terms;
  if (basis == "sigma") {
    std::vector<std::size_t> vars(static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
    const nval::SymExpansion e = nval::reduce_to_elementary(p, vars);
    sigma = e.to_string();
    sigma_terms = nval::to_json(e);
  } else if (basis != "z") {
    std::cerr << "unknown basis '" << basis << "' (z|sigma)\n";
    return 2;
  }

  if (format == "text") {
    std::cout << (basis == "sigma" ? sigma : p.to_string()) << "\n";
    std::cout << "routes:";
    for (const auto& [name, poly] : built) std::cout << " " << name;
    std::cout << "\nall routes agree: " << (agree ? "true" : "false") << "\n";
  } else {
    Json out;
    out["command"] = "pn";
    out["n"] = n;
    out["m"] = m;
    Json routes = Json::array();
    for (const auto& [name, poly] : built) routes.push_back(name);
    out["routes"] = std::move(routes);
    if (!skipped.empty()) out["routes_skipped"] = std::move(skipped);
    out["agree"] = agree;
    out["convention"] = nval::pn_block_power_convention();
    if (basis == "sigma") {
      out["sigma"] = sigma;
      out["sigma_terms"] = std::move(sigma_terms);
    } else {
      out["polynomial"] = nval::to_json(p);
      out["string"] = p.to_string();
    }
    emit(out);
  }
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------- wendt

int run_wendt(int n, const std::string& format) {
  const Int det = nval::wendt_det(n);  // both routes; throws on disagreement
  const nval::FactoredInteger f = nval::factorize(det == 0 ? Int(1) : det);
  if (format == "text") {
    std::cout << "W_" << n << " = " << det.str();
    if (det != 0) std::cout << " = " << f.to_string();
    std::cout << "\n";
  } else {
    Json out;
    out["command"] = "wendt";
    out["n"] = n;
    out["routes"] = Json::array({"circulant-bareiss", "binomial-resultant"});
    out["det"] = int_json(det);
    if (det != 0) {
      out["factorization"] = f.to_string();
      out["certified"] = f.certified;
    }
    emit(out);
  }
  return 0;
}

// ----------------------------------------------------------- disc-check

int run_disc_check(int n, const std::string& format) {
  const nval::DiscIdentityReport r = nval::discriminant_identity_check(n);
  if (format == "text") {
    std::cout << "n=" << r.n << " constant=" << r.constant.str() << " expected_abs="
              << r.expected_abs.str() << " sign=" << r.sign << " ok="
              << (r.ok ? "true" : "false") << "\n";
  } else {
    Json out;
    out["command"] = "disc-check";
    out["n"] = r.n;
    out["constant"] = int_json(r.constant);
    out["constant_abs"] = int_json(abs(r.constant));
    out["expected_abs"] = int_json(r.expected_abs);
    out["sign"] = r.sign;
    out["ok"] = r.ok;
    emit(out);
  }
  return r.ok ? 0 : 1;
}

// -------------------------------------------------------- factor-coeffs

int run_factor_coeffs(int n, const std::string& format) {
  const Polynomial p = nval::pn_power_sums(n, 2);
  const nval::SymExpansion e = nval::reduce_to_elementary(p, {0, 1, 2});
  bool all_ok = true;
  Json rows = Json::array();
  std::ostringstream text;
  for (const auto& [exp, coeff] : e.coeffs()) {
    const nval::FactoredInteger f = nval::factorize(coeff);
    const bool ok = (f.value() == coeff);
    all_ok = all_ok && ok;
    std::ostringstream key;
    key << "(";
    for (std::size_t i = 0; i < exp.size(); ++i) key << (i ? "," : "") << exp[i];
    key << ")";
    text << key.str() << " -> " << f.to_string() << "\n";
    rows.push_back(Json{{"exp", exp},
                        {"coeff", coeff.str()},
                        {"factorization", f.to_string()},
                        {"certified", f.certified},
                        {"round_trip", ok}});
  }
  if (format == "text") {
    std::cout << text.str();
  } else {
    Json out;
    out["command"] = "factor-coeffs";
    out["n"] = n;
    out["route"] = "powersums";
    out["rows"] = std::move(rows);
    out["round_trip_ok"] = all_ok;
    emit(out);
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- divis

int run_divis(int n, const std::string& format) {
  const nval::DivisibilityReport r = nval::pn_xyz_divisibility(n);
  if (format == "text") {
    std::cout << "n=" << r.n << " mod_n4=" << (r.mod_n4 ? "true" : "false")
              << " mod_n5=" << (r.mod_n5 ? "true" : "false") << "\n";
  } else {
    Json out;
    out["command"] = "divis";
    out["n"] = r.n;
    out["mod_n4"] = r.mod_n4;
    out["mod_n5"] = r.mod_n5;
    emit(out);
  }
  return r.mod_n4 ? 0 : 1;
}

// ---------------------------------------------------------------- irred

int run_irred(const std::string& coeffs_csv, const std::string& format) {
  std::vector<Polynomial> coeffs;
  const nval::VarTablePtr table = nval::VarTable::create({"z"});
  std::stringstream ss(coeffs_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      std::cerr << "--coeffs contains an empty entry\n";
      return 2;
    }
    try {
      coeffs.emplace_back(nval::parse_int(item.substr(first, last - first + 1)), table);
    } catch (const std::exception&) {
      std::cerr << "--coeffs entry '" << item << "' is not an integer\n";
      return 2;
    }
  }
  if (coeffs.empty()) {
    std::cerr << "--coeffs expects a comma-separated list, constant term first\n";
    return 2;
  }
  const nval::UniPoly f(table, 0, std::move(coeffs));
  const nval::IrredCertificate cert = nval::irreducibility_certificate(f);
  const char* status = cert.status == nval::IrredStatus::Irreducible   ? "irreducible"
                       : cert.status == nval::IrredStatus::Reducible   ? "reducible"
                                                                       : "inconclusive";
  if (format == "text") {
    std::cout << status << ": " << cert.evidence << "\n";
    if (!cert.factor.empty()) {
      std::cout << "factor (ascending):";
      for (const Int& c : cert.factor) std::cout << " " << c.str();
      std::cout << "\n";
    }
  } else {
    Json out;
    out["command"] = "irred";
    out["input"] = f.to_polynomial().to_string();
    out["status"] = status;
    out["evidence"] = cert.evidence;
    out["primes"] = cert.primes;
    if (!cert.factor.empty()) {
      Json fac = Json::array();
      for (const Int& c : cert.factor) fac.push_back(int_json(c));
      out["factor"] = std::move(fac);
    }
    emit(out);
  }
  return cert.status == nval::IrredStatus::Inconclusive ? 1 : 0;
}

// ---------------------------------------------------------------- assoc

int run_assoc(int n, int samples, std::uint64_t seed, double tol, const std::string& format) {
  const nval::AssocReport r = nval::assoc_campaign(n, samples, seed, tol);
  if (format == "text") {
    std::cout << "n=" << n << " samples=" << r.samples << " passed=" << r.passed
              << " failed=" << r.failed << " max_mismatch=" << r.max_mismatch << "\n";
  } else {
    Json out;
    out["command"] = "assoc";
    out["n"] = n;
    out["seed"] = seed;
    out["tol"] = tol;
    out["samples"] = r.samples;
    out["passed"] = r.passed;
    out["failed"] = r.failed;
    out["max_mismatch"] = r.max_mismatch;
    emit(out);
  }
  return r.failed == 0 ? 0 : 1;
}

// --------------------------------------------------------- family-check

int run_family_check(const std::string& family, int samples, std::uint64_t seed, double tol,
                     const std::string& format) {
  nval::UniversalFamilyParams params;
  if (family == "p2")
    params.which = nval::FamilyKind::P2Family;
  else if (family == "p3a")
    params.which = nval::FamilyKind::P3CaseA;
  else if (family == "p3b")
    params.which = nval::FamilyKind::P3CaseB;
  else {
    std::cerr << "unknown family '" << family << "' (p2|p3a|p3b)\n";
    return 2;
  }
  const nval::FamilyAssocReport r =
      nval::family_assoc_campaign(params, /*sample_params=*/true, samples, seed, tol);
  if (format == "text") {
    std::cout << "family=" << family << " samples=" << r.samples << " passed=" << r.passed
              << " failed=" << r.failed << " skipped=" << r.skipped_degenerate
              << " max_mismatch=" << r.max_mismatch << "\n";
  } else {
    Json out;
    out["command"] = "family-check";
    out["family"] = family;
    out["seed"] = seed;
    out["tol"] = tol;
    out["samples"] = r.samples;
    out["passed"] = r.passed;
    out["failed"] = r.failed;
    out["skipped_degenerate"] = r.skipped_degenerate;
    out["max_mismatch"] = r.max_mismatch;
    emit(out);
  }
  return r.failed == 0 ? 0 : 1;
}

// ------------------------------------------------------ wendt-criterion

int run_wendt_criterion(std::int64_t p, unsigned long k, const std::string& format) {
  const nval::WendtCriterionReport r = nval::wendt_criterion(Int(p), k);
  const bool agree = (r.divides == r.witness_found);
  if (format == "text") {
    std::cout << "p=" << p << " k=" << k << " q=" << r.q.str() << " divides="
              << (r.divides ? "true" : "false") << " witness="
              << (r.witness_found ? "found" : "none") << " agree="
              << (agree ? "true" : "false") << "\n";
  } else {
    Json out;
    out["command"] = "wendt-criterion";
    out["p"] = p;
    out["k"] = static_cast<std::int64_t>(k);
    out["q"] = int_json(r.q);
    out["divides"] = r.divides;
    out["witness_found"] = r.witness_found;
    if (r.witness_found)
      out["witness"] = Json::array({int_json(r.wx), int_json(r.wy), int_json(r.wz)});
    out["agree"] = agree;
    emit(out);
  }
  return agree ? 0 : 1;
}

// -------------------------------------------------------- compose-check

int run_compose_check(int samples, std::uint64_t seed, int max_deg, const std::string& format) {
  const nval::VarTablePtr table = nval::VarTable::create({"t"});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg_dist(1, max_deg), coeff_dist(-5, 5);
  auto random_monic = [&](int deg) {
    std::vector<Polynomial> coeffs;
    for (int i = 0; i < deg; ++i) coeffs.emplace_back(Int(coeff_dist(rng)), table);
    return coeffs;
  };
  auto as_poly = [&](const std::vector<Polynomial>& coeffs) {
    Polynomial p = Polynomial::variable(table, 0, static_cast<std::uint32_t>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      p += coeffs[i] * Polynomial::variable(table, 0, static_cast<std::uint32_t>(i));
    return p;
  };
  int equal = 0;
  for (int s = 0; s < samples; ++s) {
    const std::vector<Polynomial> fc = random_monic(deg_dist(rng));
    const std::vector<Polynomial> gc = random_monic(deg_dist(rng));
    const Polynomial f = as_poly(fc), g = as_poly(gc);
    const nval::PolyMatrix cg = nval::companion(gc);
    const Polynomial by_block =
        nval::char_poly(nval::block_composition_matrix(fc, cg), table, 0);
    const Polynomial by_subst = nval::substitute(g, 0, f);
    nval::PolyMatrix shifted = -cg;
    for (Eigen::Index i = 0; i < shifted.rows(); ++i) shifted(i, i) += f;
    const Polynomial by_det = nval::det_bareiss<Polynomial>(shifted);
    if (by_block == by_subst && by_subst == by_det) ++equal;
  }
  const bool ok = (equal == samples);
  if (format == "text") {
    std::cout << "samples=" << samples << " equal=" << equal << " ok="
              << (ok ? "true" : "false") << "\n";
  } else {
    Json out;
    out["command"] = "compose-check";
    out["seed"] = seed;
    out["max_deg"] = max_deg;
    out["samples"] = samples;
    out["equal"] = equal;
    out["routes"] = Json::array({"block-companion-charpoly", "substitution", "det(f(t)I - C_g)"});
    out["ok"] = ok;
    emit(out);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiplication-polynomial kernel for n-valued groups"};
  app.require_subcommand(1);

  int n = 2, m = 2, samples = 1000, max_deg = 4;
  std::int64_t prime_p = 3;
  unsigned long crit_k = 1;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-8;
  std::string route = "all", basis = "z", format = "json", coeffs, family = "p2";

  CLI::App* pn = app.add_subcommand("pn", "build p_n(z; x_1..x_m) and cross-check routes");
  pn->add_option("--n", n, "number of values")->required();
  pn->add_option("--m", m, "number of arguments")->capture_default_str();
  pn->add_option("--route", route, "kronecker|wendt|blockpower|resultant|powersums|all")
      ->capture_default_str();
  pn->add_option("--basis", basis, "z (expanded) or sigma (elementary basis)")
      ->capture_default_str();
  pn->add_option("--format", format, "json|text")->capture_default_str();

  CLI::App* wendt = app.add_subcommand("wendt", "Wendt circulant determinant, both routes");
  wendt->add_option("--n", n, "matrix order")->required();
  wendt->add_option("--format", format, "json|text")->capture_default_str();

  CLI::App* disc = app.add_subcommand("disc-check", "discriminant factorization identity");
  disc->add_option("--n", n, "number of values")->required();
  disc->add_option("--format", format, "json|text")->capture_default_str();

  std::string fc_format = "text";
  CLI::App* fcoef = app.add_subcommand("factor-coeffs",
                                       "factor the sigma-basis coefficients of p_n (m = 2)");
  fcoef->add_option("--n", n, "number of values")->required();
  fcoef->add_option("--format", fc_format, "json|text")->capture_default_str();

  CLI::App* divis = app.add_subcommand("divis", "n^4 | coefficients of (p_n - (x+y+z)^n)/(xyz)");
  divis->add_option("--n", n, "prime n >= 5")->required();
  divis->add_option("--format", format, "json|text")->capture_default_str();

  CLI::App* irred = app.add_subcommand("irred", "irreducibility certificate over Z");
  irred->add_option("--coeffs", coeffs, "comma-separated coefficients, constant term first")
      ->required();
  irred->add_option("--format", format, "json|text")->capture_default_str();

  CLI::App* assoc = app.add_subcommand("assoc", "sampled associativity of the n-valued product");
  assoc->add_option("--n", n, "number of values")->required();
  assoc->add_option("--samples", samples, "sample count")->capture_default_str();
  assoc->add_option("--seed", seed, "campaign seed")->capture_default_str();
  assoc->add_option("--tol", tol, "relative tolerance")->capture_default_str();
  assoc->add_option("--format", format, "json|text")->capture_default_str();

  CLI::App* fam = app.add_subcommand("family-check", "sampled associativity of a universal family");
  fam->add_option("--family", family, "p2|p3a|p3b")->required();
  fam->add_option("--samples", samples, "sample count")->capture_default_str();
  fam->add_option("--seed", seed, "campaign seed")->capture_default_str();
  fam->add_option("--tol", tol, "relative tolerance")->capture_default_str();
  fam->add_option("--format", format, "json|text")->capture_default_str();

  CLI::App* crit = app.add_subcommand("wendt-criterion",
                                      "q = 2kp+1: determinant divisibility vs Fermat witness");
  crit->add_option("--p", prime_p, "odd prime exponent")->required();
  crit->add_option("--k", crit_k, "cofactor k in q = 2kp + 1")->required();
  crit->add_option("--format", format, "json|text")->capture_default_str();

  CLI::App* comp = app.add_subcommand("compose-check",
                                      "char poly of the composition block matrix, three routes");
  comp->add_option("--samples", samples, "number of random pairs")->capture_default_str();
  comp->add_option("--seed", seed, "RNG seed")->capture_default_str();
  comp->add_option("--max-deg", max_deg, "degree bound for f and g")->capture_default_str();
  comp->add_option("--format", format, "json|text")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // print the diagnostic, but keep the usage-error code
    return 2;
  }

  try {
    if (pn->parsed()) return run_pn(n, m, route, basis, format);
    if (wendt->parsed()) return run_wendt(n, format);
    if (disc->parsed()) return run_disc_check(n, format);
    if (fcoef->parsed()) return run_factor_coeffs(n, fc_format);
    if (divis->parsed()) return run_divis(n, format);
    if (irred->parsed()) return run_irred(coeffs, format);
    if (assoc->parsed()) return run_assoc(n, samples, seed, tol, format);
    if (fam->parsed()) return run_family_check(family, samples, seed, tol, format);
    if (crit->parsed()) return run_wendt_criterion(prime_p, crit_k, format);
    if (comp->parsed()) return run_compose_check(samples, seed, max_deg, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
