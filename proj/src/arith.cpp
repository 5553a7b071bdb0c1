#include "nval/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "nval/pn_builders.hpp"

namespace nval {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::powm;

// ---------------------------------------------------------------- primality

// True when a proves n composite (n odd, n - 1 = d * 2^r with d odd).
bool is_mr_witness(const Int& n, const Int& a, const Int& d, unsigned r) {
  Int x = powm(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

Int random_below(std::mt19937_64& rng, const Int& bound) {  // uniform-ish in [0, bound)
  const unsigned words = (boost::multiprecision::msb(bound) / 64) + 2;
  Int v(0);
  for (unsigned i = 0; i < words; ++i) {
    v <<= 64;
    v |= Int(rng());
  }
  return v % bound;
}

// ------------------------------------------------------------ factorization

// Brent's variant of Pollard rho with batched gcds; returns a nontrivial
// factor, or 0 when the iteration budget is exhausted. n must be odd,
// composite and > 1.
Int brent_rho(const Int& n, std::uint64_t& budget, std::mt19937_64& rng) {
  while (budget > 0) {
    const Int c = 1 + random_below(rng, n - 1);
    Int y = 1 + random_below(rng, n - 1);
    Int g(1), q(1), x, ys;
    const std::uint64_t batch = 128;
    for (std::uint64_t r = 1; g == 1 && budget > 0; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r && budget > 0; ++i, --budget) y = (y * y + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1 && budget > 0; k += batch) {
        ys = y;
        const std::uint64_t steps = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < steps && budget > 0; ++i, --budget) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {  // batched too far; replay one step at a time
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
    // cycle found only the trivial divisor: retry with another constant
  }
  return Int(0);
}

// ----------------------------------------------------- F_p univariate polys

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1) acc = mulmod(acc, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Dense coefficient vectors, ascending powers, no trailing zeros.
using FpPoly = std::vector<std::uint64_t>;

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long fp_deg(const FpPoly& f) { return static_cast<long>(f.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t av = i < a.size() ? a[i] : 0, bv = i < b.size() ? b[i] : 0;
    r[i] = (av + p - bv) % p;
  }
  fp_trim(r);
  return r;
}

void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r, std::uint64_t p) {
  if (b.empty()) throw std::logic_error("fp_divmod: division by zero polynomial");
  r = a;
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  const std::uint64_t binv = invmod(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t shift = r.size() - b.size();
    const std::uint64_t c = mulmod(r.back(), binv, p);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      r[shift + i] = (r[shift + i] + p - mulmod(c, b[i], p)) % p;
    fp_trim(r);
  }
  fp_trim(q);
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly q, r;
  fp_divmod(a, b, q, r, p);
  return r;
}

FpPoly fp_monic(FpPoly f, std::uint64_t p) {
  if (f.empty() || f.back() == 1) return f;
  const std::uint64_t s = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, s, p);
  return f;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a), p);
}

FpPoly fp_derivative(const FpPoly& f, std::uint64_t p) {
  FpPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(mulmod(f[i], i % p, p));
  fp_trim(r);
  return r;
}

FpPoly fp_powmod(FpPoly base, const Int& e, const FpPoly& mod, std::uint64_t p) {
  FpPoly acc{1};
  base = fp_mod(base, mod, p);
  if (e == 0) return acc;
  const unsigned top = boost::multiprecision::msb(e);
  for (unsigned bit = top + 1; bit-- > 0;) {
    acc = fp_mod(fp_mul(acc, acc, p), mod, p);
    if (boost::multiprecision::bit_test(e, bit)) acc = fp_mod(fp_mul(acc, base, p), mod, p);
  }
  return acc;
}

// Extended Euclid over F_p[x]; requires gcd(a, b) = 1 and fills s, t with
// s*a + t*b = 1.
void fp_egcd_coprime(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t, std::uint64_t p) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    FpPoly q, r;
    fp_divmod(r0, r1, q, r, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (fp_deg(r0) != 0) throw std::logic_error("fp_egcd_coprime: inputs are not coprime");
  const std::uint64_t inv = invmod(r0[0], p);
  s = std::move(s0);
  t = std::move(t0);
  for (auto& c : s) c = mulmod(c, inv, p);
  for (auto& c : t) c = mulmod(c, inv, p);
}

// Distinct-degree factorization of a monic squarefree f: list of
// (product of all irreducible factors of degree d, d).
std::vector<std::pair<FpPoly, long>> fp_ddf(FpPoly f, std::uint64_t p) {
  std::vector<std::pair<FpPoly, long>> out;
  const FpPoly x{0, 1};
  FpPoly h = fp_mod(x, f, p);
  long d = 0;
  while (fp_deg(f) > 0 && 2 * (d + 1) <= fp_deg(f)) {
    ++d;
    h = fp_powmod(h, Int(p), f, p);
    FpPoly g = fp_gcd(fp_sub(h, x, p), f, p);
    if (fp_deg(g) > 0) {
      out.emplace_back(g, d);
      FpPoly q, r;
      fp_divmod(f, g, q, r, p);
      f = fp_monic(std::move(q), p);
      h = fp_mod(h, f, p);
    }
  }
  if (fp_deg(f) > 0) out.emplace_back(f, fp_deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd): f is monic squarefree, a
// product of irreducibles all of degree d.
void fp_edf(const FpPoly& f, long d, std::uint64_t p, std::mt19937_64& rng,
            std::vector<FpPoly>& out) {
  if (fp_deg(f) == d) {
    out.push_back(f);
    return;
  }
  const Int exponent = (ipow(Int(p), static_cast<unsigned long>(d)) - 1) / 2;
  for (;;) {
    FpPoly r(static_cast<std::size_t>(fp_deg(f)), 0);
    for (auto& c : r) c = rng() % p;
    fp_trim(r);
    if (fp_deg(r) < 1) continue;
    FpPoly s = fp_powmod(r, exponent, f, p);
    if (s.empty())
      s = FpPoly{p - 1};
    else
      s[0] = (s[0] + p - 1) % p;  // s - 1
    fp_trim(s);
    FpPoly g = fp_gcd(s, f, p);
    if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
      FpPoly q, rem;
      fp_divmod(f, g, q, rem, p);
      fp_edf(g, d, p, rng, out);
      fp_edf(fp_monic(std::move(q), p), d, p, rng, out);
      return;
    }
  }
}

// --------------------------------------------------- Z univariate polys

using ZPoly = std::vector<Int>;  // ascending, trimmed

void z_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  z_trim(r);
  return r;
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  z_trim(r);
  return r;
}

// Remainder of f by a monic divisor g (stays integral throughout).
bool z_divisible(const ZPoly& f, const ZPoly& g) {
  if (g.empty() || g.back() != 1) throw std::logic_error("z_divisible: divisor must be monic");
  ZPoly r = f;
  z_trim(r);
  while (r.size() >= g.size()) {
    const Int c = r.back();
    const std::size_t shift = r.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] -= c * g[i];
    z_trim(r);
  }
  return r.empty();
}

FpPoly z_to_fp(const ZPoly& f, std::uint64_t p) {
  FpPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Int c = f[i] % Int(p);
    if (c < 0) c += p;
    r[i] = c.convert_to<std::uint64_t>();
  }
  fp_trim(r);
  return r;
}

ZPoly z_from_fp(const FpPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = Int(f[i]);
  return r;
}

Int z_eval(const ZPoly& f, const Int& x) {
  Int acc(0);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

// Resultant of two integer polynomials via the Sylvester determinant
// (Bareiss); at least one degree must be positive.
Int int_resultant(ZPoly f, ZPoly g) {
  z_trim(f);
  z_trim(g);
  const long df = static_cast<long>(f.size()) - 1, dg = static_cast<long>(g.size()) - 1;
  if (df <= 0 && dg <= 0) throw std::invalid_argument("int_resultant: both degrees <= 0");
  if (df < 0 || dg < 0) return Int(0);
  if (df == 0) return ipow(f[0], static_cast<unsigned long>(dg));
  if (dg == 0) return ipow(g[0], static_cast<unsigned long>(df));
  IntMatrix s = IntMatrix::Constant(df + dg, df + dg, Int(0));
  for (long i = 0; i < dg; ++i)
    for (long j = 0; j <= df; ++j) s(i, i + j) = f[static_cast<std::size_t>(df - j)];
  for (long i = 0; i < df; ++i)
    for (long j = 0; j <= dg; ++j) s(dg + i, i + j) = g[static_cast<std::size_t>(dg - j)];
  return det_bareiss<Int>(s);
}

// ----------------------------------------------------------- Hensel lifting

// Linear Hensel lift of the coprime monic pair (a, b) with f = a*b (mod p)
// and s*a + t*b = 1 (mod p), until the working modulus reaches `target`.
// Only the cofactor t of b enters the correction (the a-side follows by
// exact division). Coefficients of a and b stay canonical in [0, modulus).
// Returns the final modulus.
Int hensel_pair_lift(const ZPoly& f, ZPoly& a, ZPoly& b, const FpPoly& t, std::uint64_t p,
                     const Int& target) {
  const FpPoly amod = z_to_fp(a, p), bmod = z_to_fp(b, p);
  Int modulus(p);
  while (modulus < target) {
    const ZPoly diff = z_sub(f, z_mul(a, b));
    FpPoly e(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      Int q = exact_div(diff[i], modulus) % Int(p);
      if (q < 0) q += p;
      e[i] = q.convert_to<std::uint64_t>();
    }
    fp_trim(e);
    const FpPoly da = fp_mod(fp_mul(t, e, p), amod, p);
    FpPoly db, rem;
    fp_divmod(fp_sub(e, fp_mul(bmod, da, p), p), amod, db, rem, p);
    if (!rem.empty()) throw std::logic_error("hensel_pair_lift: correction not divisible");
    if (a.size() < da.size() + 1 || b.size() < db.size() + 1)
      throw std::logic_error("hensel_pair_lift: degree overflow in correction");
    for (std::size_t i = 0; i < da.size(); ++i) a[i] += modulus * Int(da[i]);
    for (std::size_t i = 0; i < db.size(); ++i) b[i] += modulus * Int(db[i]);
    modulus *= p;
  }
  return modulus;
}

// Lifts the full modular factorization of the monic f to factors mod p^k >=
// target by recursive pair splitting.
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<FpPoly>& factors,
                                    std::uint64_t p, const Int& target) {
  if (factors.size() == 1) return {f};
  const std::size_t half = factors.size() / 2;
  FpPoly a0{1}, b0{1};
  for (std::size_t i = 0; i < half; ++i) a0 = fp_mul(a0, factors[i], p);
  for (std::size_t i = half; i < factors.size(); ++i) b0 = fp_mul(b0, factors[i], p);
  FpPoly s, t;
  fp_egcd_coprime(a0, b0, s, t, p);
  ZPoly a = z_from_fp(a0), b = z_from_fp(b0);
  hensel_pair_lift(f, a, b, t, p, target);
  std::vector<ZPoly> left = hensel_lift_tree(
      a, std::vector<FpPoly>(factors.begin(), factors.begin() + half), p, target);
  std::vector<ZPoly> right = hensel_lift_tree(
      b, std::vector<FpPoly>(factors.begin() + half, factors.end()), p, target);
  left.insert(left.end(), std::make_move_iterator(right.begin()),
              std::make_move_iterator(right.end()));
  return left;
}

// Attainable subset sums of a degree multiset, as flags over 0..total.
std::vector<char> attainable_sums(const std::vector<long>& degrees, long total) {
  std::vector<char> dp(static_cast<std::size_t>(total) + 1, 0);
  dp[0] = 1;
  for (long d : degrees)
    for (long v = total; v >= d; --v)
      if (dp[static_cast<std::size_t>(v - d)]) dp[static_cast<std::size_t>(v)] = 1;
  return dp;
}

std::string degree_pattern_string(const std::vector<long>& degrees) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) out << (i ? "," : "") << degrees[i];
  out << "}";
  return out.str();
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  static const std::array<unsigned, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  Int d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (unsigned b : kBases)
    if (is_mr_witness(n, Int(b), d, r)) return false;
  // First thirteen prime bases are a deterministic test below this bound.
  static const Int kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < 40; ++i)
    if (is_mr_witness(n, 2 + random_below(rng, n - 3), d, r)) return false;
  return true;
}

Int FactoredInteger::value() const {
  Int acc(sign);
  for (const auto& f : factors) acc *= ipow(f.base, f.exponent);
  return acc;
}

std::string FactoredInteger::to_string() const {
  std::ostringstream out;
  if (sign < 0) out << "- ";
  if (factors.empty()) {
    out << "1";
    return out.str();
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out << " ";
    out << factors[i].base.str() << "^" << factors[i].exponent;
  }
  return out.str();
}

FactoredInteger factorize(const Int& n, std::uint64_t rho_budget, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("factorize: zero input");
  FactoredInteger out;
  Int v = n;
  if (v < 0) {
    out.sign = -1;
    v = -v;
  }
  std::map<Int, unsigned> found;
  auto strip = [&](const Int& p) {
    while (v % p == 0) {
      v /= p;
      ++found[p];
    }
  };
  strip(Int(2));
  strip(Int(3));
  for (std::uint64_t q = 5; q <= 1000000 && Int(q) * q <= v; q += 6) {
    if (v % q == 0) strip(Int(q));
    if (v % (q + 2) == 0) strip(Int(q + 2));
  }
  if (v > 1 && Int(1000000) * 1000000 > v) {  // remaining cofactor below trial bound squared
    ++found[v];
    v = 1;
  }

  std::mt19937_64 rng(seed);
  std::uint64_t budget = rho_budget;
  std::vector<Int> work;
  if (v > 1) work.push_back(v);
  while (!work.empty()) {
    Int t = std::move(work.back());
    work.pop_back();
    if (is_probable_prime(t)) {
      ++found[t];
      continue;
    }
    Int g = brent_rho(t, budget, rng);
    if (g == 0 || g == 1 || g == t) {  // budget exhausted: keep composite cofactor
      ++found[t];
      out.certified = false;
      continue;
    }
    work.push_back(t / g);
    work.push_back(std::move(g));
  }
  for (auto& [base, exp] : found) out.factors.push_back({base, exp});
  if (out.certified)
    for (const auto& f : out.factors)
      if (!is_probable_prime(f.base)) out.certified = false;
  return out;
}

IntMatrix wendt_binomial_matrix(int n) {
  if (n < 1) throw std::invalid_argument("wendt_binomial_matrix: n must be at least 1");
  std::vector<Int> row(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d)
    row[static_cast<std::size_t>(d)] =
        binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(d));
  IntMatrix w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = row[static_cast<std::size_t>(((j - i) % n + n) % n)];
  return w;
}

Int wendt_det(int n) {
  if (n < 1) throw std::invalid_argument("wendt_det: n must be at least 1");
  if (n > 64) throw std::invalid_argument("wendt_det: supported up to n = 64");
  const Int by_matrix = det_bareiss<Int>(wendt_binomial_matrix(n));
  // res((1+t)^n - t^n, t^n - 1)
  ZPoly f(static_cast<std::size_t>(n), Int(0));
  for (int k = 0; k < n; ++k)
    f[static_cast<std::size_t>(k)] =
        binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  ZPoly g(static_cast<std::size_t>(n) + 1, Int(0));
  g[0] = -1;
  g[static_cast<std::size_t>(n)] = 1;
  const Int by_resultant = int_resultant(std::move(f), std::move(g));
  if (by_matrix != by_resultant)
    throw std::logic_error("wendt_det: matrix and resultant routes disagree at n = " +
                           std::to_string(n));
  return by_matrix;
}

WendtCriterionReport wendt_criterion(const Int& p, unsigned long k) {
  if (p < 3 || p % 2 == 0 || !is_probable_prime(p))
    throw std::invalid_argument("wendt_criterion: p must be an odd prime");
  if (k == 0) throw std::invalid_argument("wendt_criterion: k must be positive");
  WendtCriterionReport report;
  report.q = 2 * Int(k) * p + 1;
  if (!is_probable_prime(report.q))
    throw std::invalid_argument("wendt_criterion: q = 2kp+1 = " + report.q.str() +
                                " is not prime");
  if (report.q >= (Int(1) << 62))
    throw std::invalid_argument("wendt_criterion: q too large for the modular search");
  const auto q = report.q.convert_to<std::uint64_t>();
  const auto pe = p.convert_to<std::uint64_t>();
  const unsigned long n = 2 * k;

  // det W_{2k} mod q by Gaussian elimination over F_q.
  std::vector<std::uint64_t> binrow(n);
  for (unsigned long d = 0; d < n; ++d)
    binrow[d] = (binomial(n, d) % Int(q)).convert_to<std::uint64_t>();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
  for (unsigned long i = 0; i < n; ++i)
    for (unsigned long j = 0; j < n; ++j) m[i][j] = binrow[(j + n - i) % n];
  std::uint64_t det = 1;
  for (unsigned long col = 0; col < n && det != 0; ++col) {
    unsigned long pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) {
      det = 0;
      break;
    }
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = q - det;
    }
    det = mulmod(det, m[col][col], q);
    const std::uint64_t inv = invmod(m[col][col], q);
    for (unsigned long i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const std::uint64_t factor = mulmod(m[i][col], inv, q);
      for (unsigned long j = col; j < n; ++j)
        m[i][j] = (m[i][j] + q - mulmod(factor, m[col][j], q)) % q;
    }
  }
  report.divides = (det % q == 0);

  // Witness search: any solution scales to z = 1, so x^p + y^p + 1 = 0 over
  // the set of p-th power residues suffices and is exhaustive.
  std::vector<std::uint64_t> preimage(q, 0);  // residue -> some x with x^p = residue
  for (std::uint64_t x = 1; x < q; ++x) {
    const std::uint64_t r = powmod(x, pe, q);
    if (preimage[r] == 0) preimage[r] = x;
  }
  for (std::uint64_t a = 1; a + 1 < q && !report.witness_found; ++a) {
    if (preimage[a] == 0) continue;
    const std::uint64_t b = q - 1 - a;
    if (b == 0 || preimage[b] == 0) continue;
    report.witness_found = true;
    report.wx = preimage[a];
    report.wy = preimage[b];
    report.wz = 1;
  }
  return report;
}

DivisibilityReport pn_xyz_divisibility(int n) {
  if (n < 5 || !is_probable_prime(Int(n)))
    throw std::invalid_argument("pn_xyz_divisibility: n must be a prime >= 5");
  PnContext ctx = make_pn_context(2);
  const Polynomial pn = pn_power_sums(n, 2);
  const Polynomial sum = Polynomial::variable(ctx.table, ctx.z) +
                         Polynomial::variable(ctx.table, ctx.x[0]) +
                         Polynomial::variable(ctx.table, ctx.x[1]);
  const Polynomial xyz = Polynomial::variable(ctx.table, ctx.z) *
                         Polynomial::variable(ctx.table, ctx.x[0]) *
                         Polynomial::variable(ctx.table, ctx.x[1]);
  const Polynomial quotient = exact_div(pn - poly_pow(sum, static_cast<unsigned>(n)), xyz);
  const Int n4 = ipow(Int(n), 4), n5 = ipow(Int(n), 5);
  DivisibilityReport report;
  report.n = n;
  report.mod_n4 = true;
  report.mod_n5 = true;
  for (const auto& [mono, c] : quotient) {
    if (c % n4 != 0) report.mod_n4 = false;
    if (c % n5 != 0) report.mod_n5 = false;
  }
  return report;
}

bool n4_divisibility_check(int n) { return pn_xyz_divisibility(n).mod_n4; }

WolstenholmeReport wolstenholme_check(const Int& p) {
  if (p < 5 || !is_probable_prime(p))
    throw std::invalid_argument("wolstenholme_check: p must be a prime >= 5");
  const Int m3 = ipow(p, 3), m4 = ipow(p, 4);
  const auto pe = p.convert_to<std::uint64_t>();
  Int num(1), den(1);
  for (std::uint64_t i = 1; i < pe; ++i) {
    num = num * ((p + i) % m4) % m4;
    den = den * i % m4;
  }
  // den is coprime to p, invert it mod p^4 by extended Euclid.
  Int r0 = m4, r1 = den % m4, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::logic_error("wolstenholme_check: denominator not invertible");
  const Int inv = ((s0 % m4) + m4) % m4;
  const Int c = num * inv % m4;  // C(2p-1, p-1) mod p^4
  WolstenholmeReport report;
  report.mod_n3 = ((c - 1) % m3 == 0);
  report.mod_n4 = (c == 1);
  return report;
}

bool binom_weighted_sum_identity(unsigned long n) {
  if (n < 2) throw std::invalid_argument("binom_weighted_sum_identity: n must be at least 2");
  Int lhs(0), c(1);  // c = C(n, k)
  for (unsigned long k = 1; k <= n - 1; ++k) {
    c = c * Int(n - k + 1) / Int(k);
    lhs += Int(k) * c * c;
  }
  const Int rhs = Int(n) * (binomial(2 * n - 1, n - 1) - 1);
  return lhs == rhs;
}

IrredCertificate irreducibility_certificate(const UniPoly& f) {
  const long deg = f.degree();
  if (deg < 1)
    throw std::invalid_argument("irreducibility_certificate: degree must be at least 1");
  ZPoly zf(static_cast<std::size_t>(deg) + 1);
  for (long k = 0; k <= deg; ++k) {
    const Polynomial& c = f.coeff(static_cast<std::size_t>(k));
    if (!c.is_constant())
      throw std::invalid_argument("irreducibility_certificate: coefficients must be integers");
    zf[static_cast<std::size_t>(k)] = c.constant_value();
  }
  Int cont(0);
  for (const Int& c : zf) cont = gcd(cont, c);
  if (cont != 1)
    throw std::invalid_argument("irreducibility_certificate: input must be primitive");

  IrredCertificate cert;
  if (deg == 1) {
    cert.status = IrredStatus::Irreducible;
    cert.evidence = "degree 1";
    return cert;
  }
  if (zf[0] == 0) {
    cert.status = IrredStatus::Reducible;
    cert.evidence = "zero constant term: divisible by the variable";
    cert.factor = {Int(0), Int(1)};
    return cert;
  }
  const bool monic_like = (zf.back() == 1 || zf.back() == -1);
  if (zf.back() == -1)
    for (Int& c : zf) c = -c;  // factorizations of f and -f coincide

  // Integer roots: every integer root divides the constant term.
  {
    FactoredInteger cf = factorize(abs(zf[0]), 100000, 1729);
    std::vector<Int> divisors{Int(1)};
    for (const auto& fe : cf.factors) {
      const std::size_t before = divisors.size();
      Int pw(1);
      for (unsigned e = 1; e <= fe.exponent && divisors.size() < 4096; ++e) {
        pw *= fe.base;
        for (std::size_t i = 0; i < before && divisors.size() < 4096; ++i)
          divisors.push_back(divisors[i] * pw);
      }
    }
    for (const Int& v : divisors) {
      for (const Int& root : {v, Int(-v)}) {
        if (z_eval(zf, root) != 0) continue;
        cert.status = IrredStatus::Reducible;
        cert.evidence = "integer root " + root.str();
        cert.factor = {-root, Int(1)};
        return cert;
      }
    }
  }

  // Repeated factors over Z imply reducibility at degree >= 2.
  {
    ZPoly df;
    for (std::size_t i = 1; i < zf.size(); ++i) df.push_back(zf[i] * Int(i));
    if (int_resultant(zf, df) == 0) {
      cert.status = IrredStatus::Reducible;
      cert.evidence = "vanishing discriminant: repeated factor";
      return cert;
    }
  }

  // Degree patterns from squarefree reductions mod p.
  static const std::array<std::uint64_t, 24> kPrimes = {3,  5,  7,  11, 13, 17, 19, 23,
                                                        29, 31, 37, 41, 43, 47, 53, 59,
                                                        61, 67, 71, 73, 79, 83, 89, 97};
  struct GoodPrime {
    std::uint64_t p;
    FpPoly reduction;
    std::vector<long> degrees;
  };
  std::vector<GoodPrime> good;
  std::vector<char> intersect(static_cast<std::size_t>(deg) + 1, 1);
  for (std::uint64_t p : kPrimes) {
    if (good.size() >= 5) break;
    if (abs(zf.back()) % p == 0) continue;
    FpPoly fp = z_to_fp(zf, p);
    if (fp_deg(fp_gcd(fp, fp_derivative(fp, p), p)) != 0) continue;  // not squarefree mod p
    fp = fp_monic(std::move(fp), p);
    std::vector<long> degrees;
    for (const auto& [block, d] : fp_ddf(fp, p))
      for (long i = 0; i < fp_deg(block) / d; ++i) degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end());
    const std::vector<char> sums = attainable_sums(degrees, deg);
    for (std::size_t v = 0; v < intersect.size(); ++v) intersect[v] &= sums[v];
    good.push_back({p, std::move(fp), std::move(degrees)});
  }
  if (good.empty()) {
    cert.status = IrredStatus::Inconclusive;
    cert.evidence = "no squarefree reduction among the candidate primes";
    return cert;
  }
  for (const auto& g : good) cert.primes.push_back(g.p);
  bool trivial_only = true;
  for (long v = 1; v < deg; ++v)
    if (intersect[static_cast<std::size_t>(v)]) trivial_only = false;
  if (trivial_only) {
    std::ostringstream ev;
    ev << "factor-degree sumsets intersect trivially:";
    for (const auto& g : good) ev << " mod " << g.p << " " << degree_pattern_string(g.degrees);
    cert.status = IrredStatus::Irreducible;
    cert.evidence = ev.str();
    return cert;
  }

  // Complete Zassenhaus round: Hensel lift past the factor coefficient bound
  // and try every recombination up to half degree. Sound for monic inputs.
  if (!monic_like) {
    cert.status = IrredStatus::Inconclusive;
    cert.evidence = "degree patterns inconclusive; reconstruction handles monic inputs only";
    return cert;
  }
  const GoodPrime* best = &good[0];
  for (const auto& g : good)
    if (g.degrees.size() < best->degrees.size()) best = &g;
  if (best->degrees.size() > 20) {
    cert.status = IrredStatus::Inconclusive;
    cert.evidence = "degree patterns inconclusive; too many modular factors to recombine";
    return cert;
  }
  const std::uint64_t p = best->p;
  std::mt19937_64 rng(1729 ^ p);
  std::vector<FpPoly> modular;
  for (const auto& [block, d] : fp_ddf(best->reduction, p)) fp_edf(block, d, p, rng, modular);

  Int norm2(0);
  for (const Int& c : zf) norm2 += c * c;
  const Int bound = (sqrt(norm2) + 1) * ipow(Int(2), static_cast<unsigned long>(deg));
  Int modulus(p);
  while (modulus < 2 * bound + 1) modulus *= p;
  const std::vector<ZPoly> lifted = hensel_lift_tree(zf, modular, p, modulus);

  const std::size_t r = lifted.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << r); ++mask) {
    long dsum = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::uint64_t(1) << i)) dsum += static_cast<long>(lifted[i].size()) - 1;
    if (dsum < 1 || dsum > deg / 2) continue;
    ZPoly candidate{Int(1)};
    for (std::size_t i = 0; i < r; ++i) {
      if (!(mask & (std::uint64_t(1) << i))) continue;
      candidate = z_mul(candidate, lifted[i]);
      for (Int& c : candidate) {
        c %= modulus;
        if (c < 0) c += modulus;
      }
    }
    for (Int& c : candidate)  // symmetric representatives
      if (2 * c > modulus) c -= modulus;
    if (z_divisible(zf, candidate)) {
      cert.status = IrredStatus::Reducible;
      cert.evidence = "factor reconstructed from the lifted factorization mod " +
                      std::to_string(p) + "^k";
      cert.factor = candidate;
      return cert;
    }
  }
  cert.status = IrredStatus::Irreducible;
  cert.evidence = "complete recombination of the lifted factorization mod " + std::to_string(p) +
                  "^k excluded every proper factor";
  return cert;
}

}  // namespace nval
