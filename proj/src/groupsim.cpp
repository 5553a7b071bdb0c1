#include "nval/groupsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace nval {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Complex unit_root(int n, int r) {  // eps^r with eps = exp(2*pi*i/n)
  const double a = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(n);
  return Complex(std::cos(a), std::sin(a));
}

Complex principal_root(Complex x, int n) {
  if (x == Complex(0.0, 0.0)) return {0.0, 0.0};
  return std::exp(std::log(x) / static_cast<double>(n));
}

Complex ipow_c(Complex base, int e) {
  Complex acc(1.0, 0.0);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Roots of c[0] + c[1] t + ... + c[d] t^d: companion-matrix eigenvalues,
// then a few Newton steps against the Horner form. The eigensolve is only
// backward stable, and the forward error on clustered roots of high-degree
// instances (p_n in z reaches degree 27 within the supported range) can
// exceed the 1e-7 matching tolerance without the polish.
std::vector<Complex> poly_roots_numeric(const std::vector<Complex>& coeffs) {
  const long d = static_cast<long>(coeffs.size()) - 1;
  if (d < 1) throw std::invalid_argument("poly_roots_numeric: degree must be at least 1");
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  for (long i = 0; i + 1 < d; ++i) c(i + 1, i) = 1.0;
  for (long i = 0; i < d; ++i)
    c(i, d - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs[static_cast<std::size_t>(d)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, /*computeEigenvectors=*/false);

  auto horner = [&](Complex z, Complex& deriv) {
    Complex f = coeffs[static_cast<std::size_t>(d)];
    deriv = 0.0;
    for (long i = d - 1; i >= 0; --i) {
      deriv = deriv * z + f;
      f = f * z + coeffs[static_cast<std::size_t>(i)];
    }
    return f;
  };

  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(d));
  for (long i = 0; i < d; ++i) {
    Complex z = solver.eigenvalues()(i), deriv;
    Complex f = horner(z, deriv);
    double best = std::abs(f);
    Complex best_z = z;
    for (int step = 0; step < 8 && best > 0.0 && std::abs(deriv) > 0.0; ++step) {
      z -= f / deriv;
      f = horner(z, deriv);
      if (std::abs(f) < best) {
        best = std::abs(f);
        best_z = z;
      } else {
        break;  // a multiple root or the cluster boundary; keep the best seen
      }
    }
    roots.push_back(best_z);
  }
  return roots;
}

bool pair_ok(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct SortedOrder {
  static bool less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  }
};

// Kuhn augmenting-path matching over the tolerance feasibility graph; fills
// match_of_b with the a-index matched to each b, or -1.
bool bipartite_match(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol,
                     std::vector<int>& match_of_b) {
  const int n = static_cast<int>(a.size());
  match_of_b.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> visited;
  // `augment` tries to give a_i a partner, displacing earlier matches.
  auto augment = [&](auto&& self, int i) -> bool {
    for (int j = 0; j < n; ++j) {
      if (visited[static_cast<std::size_t>(j)]) continue;
      if (!pair_ok(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)], tol)) continue;
      visited[static_cast<std::size_t>(j)] = 1;
      if (match_of_b[static_cast<std::size_t>(j)] < 0 ||
          self(self, match_of_b[static_cast<std::size_t>(j)])) {
        match_of_b[static_cast<std::size_t>(j)] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    visited.assign(static_cast<std::size_t>(n), 0);
    if (!augment(augment, i)) return false;
  }
  return true;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix(seed ^ splitmix(index + 1)));
}

Complex draw_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Complex v(u(rng), u(rng));
    if (std::abs(v) >= 0.05) return v;  // keep points away from the branch point
  }
}

int env_thread_count() {
  const char* raw = std::getenv("NVAL_THREADS");
  if (raw == nullptr) return 1;
  const int v = std::atoi(raw);
  return v > 0 ? v : 1;
}

// Runs fn(i) for i in [0, samples) across the configured worker count;
// per-sample RNG streams make the split order-independent.
template <typename Fn>
void parallel_samples(int samples, Fn&& fn) {
  const int threads = std::min(env_thread_count(), std::max(1, samples));
  if (threads <= 1) {
    for (int i = 0; i < samples; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&fn, t, threads, samples] {
      for (int i = t; i < samples; i += threads) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

bool ComplexMultiset::approx_equal(const ComplexMultiset& other, double tol) const {
  return max_pair_distance(other, tol) < std::numeric_limits<double>::infinity();
}

double ComplexMultiset::max_pair_distance(const ComplexMultiset& other, double tol) const {
  if (values_.size() != other.values_.size()) return std::numeric_limits<double>::infinity();
  if (values_.empty()) return 0.0;
  std::vector<Complex> a = values_, b = other.values_;
  std::sort(a.begin(), a.end(), SortedOrder::less);
  std::sort(b.begin(), b.end(), SortedOrder::less);
  bool greedy_ok = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!pair_ok(a[i], b[i], tol)) {
      greedy_ok = false;
      break;
    }
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  if (greedy_ok) return worst;
  // Positional pairing after sorting can fail on near-ties even when a valid
  // pairing exists; decide with a full matching before giving up.
  std::vector<int> match_of_b;
  if (!bipartite_match(a, b, tol, match_of_b)) return std::numeric_limits<double>::infinity();
  worst = 0.0;
  for (std::size_t j = 0; j < b.size(); ++j)
    worst = std::max(worst, std::abs(a[static_cast<std::size_t>(match_of_b[j])] - b[j]));
  return worst;
}

std::vector<Complex> nth_roots(Complex x, int n) {
  if (n < 1) throw std::invalid_argument("nth_roots: n must be positive");
  const Complex principal = principal_root(x, n);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) out.push_back(unit_root(n, r) * principal);
  return out;
}

ComplexMultiset gmul(int n, Complex x, Complex y) { return gmul_rotated(n, x, y, 0, 0); }

ComplexMultiset gmul_rotated(int n, Complex x, Complex y, int rx, int ry) {
  if (n < 1) throw std::invalid_argument("gmul: n must be positive");
  const Complex a = principal_root(x, n) * unit_root(n, rx);
  const Complex b = principal_root(y, n) * unit_root(n, ry);
  ComplexMultiset out;
  for (int r = 1; r <= n; ++r) out.add(ipow_c(a + unit_root(n, r) * b, n));
  return out;
}

ComplexMultiset pn_root_multiset(int n, const std::vector<Complex>& xs) {
  if (n < 1 || xs.empty()) throw std::invalid_argument("pn_root_multiset: need n >= 1, m >= 1");
  const int m = static_cast<int>(xs.size());
  std::vector<Complex> roots(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) roots[j] = principal_root(xs[j], n);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n
  ComplexMultiset out;
  std::vector<int> twist(static_cast<std::size_t>(m), 1);  // twist[0] unused
  for (;;) {
    Complex sum = roots[0];
    for (int j = 1; j < m; ++j) sum += unit_root(n, twist[static_cast<std::size_t>(j)]) * roots[static_cast<std::size_t>(j)];
    out.add(sign * ipow_c(sum, n));
    int j = m - 1;
    while (j >= 1 && twist[static_cast<std::size_t>(j)] == n) twist[static_cast<std::size_t>(j--)] = 1;
    if (j < 1) break;
    ++twist[static_cast<std::size_t>(j)];
  }
  return out;
}

namespace {

// x*(y*z) and (x*y)*z as n^2-multisets; the multisets returned by gmul must
// outlive the inner loops, hence the named locals.
void assoc_sides(int n, Complex x, Complex y, Complex z, ComplexMultiset& lhs,
                 ComplexMultiset& rhs) {
  const ComplexMultiset yz = gmul(n, y, z);
  for (Complex w : yz.values()) {
    const ComplexMultiset xw = gmul(n, x, w);
    for (Complex v : xw.values()) lhs.add(v);
  }
  const ComplexMultiset xy = gmul(n, x, y);
  for (Complex w : xy.values()) {
    const ComplexMultiset wz = gmul(n, w, z);
    for (Complex v : wz.values()) rhs.add(v);
  }
}

void family_assoc_sides(const UniversalFamilyParams& params, Complex x, Complex y, Complex z,
                        ComplexMultiset& lhs, ComplexMultiset& rhs) {
  const ComplexMultiset yz = family_mul(params, y, z);
  for (Complex w : yz.values()) {
    const ComplexMultiset xw = family_mul(params, x, w);
    for (Complex v : xw.values()) lhs.add(v);
  }
  const ComplexMultiset xy = family_mul(params, x, y);
  for (Complex w : xy.values()) {
    const ComplexMultiset wz = family_mul(params, w, z);
    for (Complex v : wz.values()) rhs.add(v);
  }
}

}  // namespace

bool assoc_check(int n, Complex x, Complex y, Complex z, double tol) {
  ComplexMultiset lhs, rhs;
  assoc_sides(n, x, y, z, lhs, rhs);
  return lhs.approx_equal(rhs, tol);
}

bool roots_match_pn(const Polynomial& pn, int n, int m, const std::vector<Complex>& xs,
                    double tol) {
  if (static_cast<int>(xs.size()) != m)
    throw std::invalid_argument("roots_match_pn: xs size must equal m");
  if (!pn.vars() || pn.vars()->size() != static_cast<std::size_t>(m) + 2)
    throw std::invalid_argument("roots_match_pn: expected a (z, x1..xm, w) table");
  const long big_n = pn.degree_in(0);
  std::vector<Complex> coeffs(static_cast<std::size_t>(big_n) + 1, Complex(0.0, 0.0));
  for (const auto& [mono, c] : pn) {
    if (mono.exponent(static_cast<std::size_t>(m) + 1) != 0)
      throw std::logic_error("roots_match_pn: auxiliary variable not eliminated");
    Complex term(c.convert_to<double>(), 0.0);
    for (int j = 1; j <= m; ++j)
      term *= ipow_c(xs[static_cast<std::size_t>(j - 1)],
                     static_cast<int>(mono.exponent(static_cast<std::size_t>(j))));
    coeffs[mono.exponent(0)] += term;
  }
  const ComplexMultiset numeric{poly_roots_numeric(coeffs)};
  return numeric.approx_equal(pn_root_multiset(n, xs), tol);
}

std::vector<std::vector<Complex>> cartesian_gmul(int n, int m, const std::vector<Complex>& xs,
                                                 const std::vector<Complex>& ys) {
  if (static_cast<int>(xs.size()) != m || static_cast<int>(ys.size()) != m)
    throw std::invalid_argument("cartesian_gmul: xs and ys must have m entries");
  double count = 1.0;
  for (int j = 0; j < m; ++j) count *= n;
  if (count > 1e6) throw std::invalid_argument("cartesian_gmul: n^m too large");
  std::vector<std::vector<Complex>> parts(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    parts[static_cast<std::size_t>(j)] =
        gmul(n, xs[static_cast<std::size_t>(j)], ys[static_cast<std::size_t>(j)]).values();
  std::vector<std::vector<Complex>> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  for (;;) {
    std::vector<Complex> row(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) row[static_cast<std::size_t>(j)] = parts[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];
    out.push_back(std::move(row));
    int j = m - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] + 1 == static_cast<std::size_t>(n))
      idx[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
  }
  return out;
}

ComplexMultiset family_mul(const UniversalFamilyParams& params, Complex x, Complex y) {
  constexpr double kDegenerate = 1e-10;
  switch (params.which) {
    case FamilyKind::P2Family: {
      const Complex q = x * y, s = x + y;
      const Complex a = 1.0 + 2.0 * params.k4 * q + 2.0 * params.k6 * q * s +
                        (params.k4 * params.k4 - params.k6 * params.k2) * q * q;
      const Complex b = -2.0 * s + 2.0 * params.k2 * q + 2.0 * params.k4 * q * s +
                        2.0 * params.k6 * q * q;
      const Complex c = (x - y) * (x - y);
      if (std::abs(a) < kDegenerate)
        throw DegenerateLeadingCoefficient("two-valued family: leading coefficient vanished");
      return ComplexMultiset{poly_roots_numeric({c, b, a})};
    }
    case FamilyKind::P3CaseA: {
      // Cubic in z produced by the one-parameter symmetric relation, written
      // in s = -(x + y) and q = xy.
      const Complex q = x * y, s = -(x + y), c = params.c;
      const Complex a3 = (1.0 + 9.0 * c * q) * (1.0 + 9.0 * c * q) - 27.0 * c * c * q * s * s;
      const Complex a2 = 3.0 * s * (1.0 - 3.0 * c * q) * (1.0 - 3.0 * c * q);
      const Complex a1 = 3.0 * s * s * (1.0 + 6.0 * c * q) - 27.0 * q * (1.0 + c * q) * (1.0 + c * q);
      const Complex a0 = s * s * s;
      if (std::abs(a3) < kDegenerate)
        throw DegenerateLeadingCoefficient("three-valued family: leading coefficient vanished");
      return ComplexMultiset{poly_roots_numeric({a0, a1, a2, a3})};
    }
    case FamilyKind::P3CaseB: {
      const Complex denom = 1.0 + params.alpha * x * y;
      if (std::abs(denom) < kDegenerate)
        throw DegenerateLeadingCoefficient("addition-law family: denominator vanished");
      const Complex v = (x + y) / denom;
      return ComplexMultiset{{v, v, v}};
    }
  }
  throw std::logic_error("family_mul: unknown family");
}

bool universal_family_assoc(const UniversalFamilyParams& params, Complex x, Complex y, Complex z,
                            double tol) {
  ComplexMultiset lhs, rhs;
  family_assoc_sides(params, x, y, z, lhs, rhs);
  return lhs.approx_equal(rhs, tol);
}

AssocReport assoc_campaign(int n, int samples, std::uint64_t seed, double tol) {
  if (n < 1 || samples < 0) throw std::invalid_argument("assoc_campaign: bad arguments");
  std::vector<char> ok(static_cast<std::size_t>(samples), 0);
  std::vector<double> mismatch(static_cast<std::size_t>(samples), 0.0);
  parallel_samples(samples, [&](int i) {
    std::mt19937_64 rng = sample_rng(seed, static_cast<std::uint64_t>(i));
    const Complex x = draw_complex(rng), y = draw_complex(rng), z = draw_complex(rng);
    ComplexMultiset lhs, rhs;
    assoc_sides(n, x, y, z, lhs, rhs);
    ok[static_cast<std::size_t>(i)] = lhs.approx_equal(rhs, tol) ? 1 : 0;
    mismatch[static_cast<std::size_t>(i)] = lhs.max_pair_distance(rhs, 1e30);
  });
  AssocReport report;
  report.samples = samples;
  for (int i = 0; i < samples; ++i) {
    ok[static_cast<std::size_t>(i)] ? ++report.passed : ++report.failed;
    report.max_mismatch = std::max(report.max_mismatch, mismatch[static_cast<std::size_t>(i)]);
  }
  return report;
}

FamilyAssocReport family_assoc_campaign(const UniversalFamilyParams& params, bool sample_params,
                                        int samples, std::uint64_t seed, double tol) {
  if (samples < 0) throw std::invalid_argument("family_assoc_campaign: bad arguments");
  enum : char { kPassed, kFailed, kSkipped };
  std::vector<char> state(static_cast<std::size_t>(samples), kPassed);
  std::vector<double> mismatch(static_cast<std::size_t>(samples), 0.0);
  parallel_samples(samples, [&](int i) {
    std::mt19937_64 rng = sample_rng(seed, static_cast<std::uint64_t>(i));
    UniversalFamilyParams local = params;
    if (sample_params) {
      switch (params.which) {
        case FamilyKind::P2Family:
          local.k2 = draw_complex(rng);
          local.k4 = draw_complex(rng);
          local.k6 = draw_complex(rng);
          break;
        case FamilyKind::P3CaseA:
          local.c = draw_complex(rng);
          break;
        case FamilyKind::P3CaseB:
          local.alpha = draw_complex(rng);
          break;
      }
    }
    const Complex x = draw_complex(rng), y = draw_complex(rng), z = draw_complex(rng);
    try {
      ComplexMultiset lhs, rhs;
      family_assoc_sides(local, x, y, z, lhs, rhs);
      state[static_cast<std::size_t>(i)] = lhs.approx_equal(rhs, tol) ? kPassed : kFailed;
      mismatch[static_cast<std::size_t>(i)] = lhs.max_pair_distance(rhs, 1e30);
    } catch (const DegenerateLeadingCoefficient&) {
      state[static_cast<std::size_t>(i)] = kSkipped;
    }
  });
  FamilyAssocReport report;
  report.samples = samples;
  for (int i = 0; i < samples; ++i) {
    switch (state[static_cast<std::size_t>(i)]) {
      case kPassed: ++report.passed; break;
      case kFailed: ++report.failed; break;
      default: ++report.skipped_degenerate; break;
    }
    report.max_mismatch = std::max(report.max_mismatch, mismatch[static_cast<std::size_t>(i)]);
  }
  return report;
}

}  // namespace nval
