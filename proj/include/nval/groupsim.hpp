#pragma once

// Floating-point simulator for the n-valued multiplication on C: multiset
// values with tolerance-aware equality, the product map itself, associativity
// checks, agreement of simulated products with the exact multiplication
// polynomials, and the one- and two-parameter universal family laws.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nval/polynomial.hpp"

namespace nval {

using Complex = std::complex<double>;

// Unordered collection of complex values compared by minimum-distance
// pairing: sorted greedy matching first, full bipartite matching as the
// fallback, so near-ties cannot produce spurious mismatches.
class ComplexMultiset {
 public:
  ComplexMultiset() = default;
  explicit ComplexMultiset(std::vector<Complex> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }
  void add(Complex v) { values_.push_back(v); }

  // True when a perfect pairing exists with |a - b| <= tol * max(1, |a|, |b|)
  // for every matched pair.
  bool approx_equal(const ComplexMultiset& other, double tol = 1e-8) const;

  // Largest matched-pair distance under the accepted pairing, infinity when
  // no pairing exists at the tolerance; the mismatch magnitude reported by
  // the sampling campaigns.
  double max_pair_distance(const ComplexMultiset& other, double tol = 1e-8) const;

 private:
  std::vector<Complex> values_;
};

// The n-th roots of x ordered by root-of-unity index r = 1..n: the value at
// position r-1 is eps^r * x^(1/n) with eps = exp(2*pi*i/n) and the principal
// branch of the root (so the last entry is the principal root itself).
std::vector<Complex> nth_roots(Complex x, int n);

// x * y in the n-valued group: the n-multiset ((x^(1/n) + eps^r y^(1/n))^n).
ComplexMultiset gmul(int n, Complex x, Complex y);

// Same product with both principal roots twisted by eps^rx, eps^ry; the
// result multiset must not depend on rx, ry (branch independence).
ComplexMultiset gmul_rotated(int n, Complex x, Complex y, int rx, int ry);

// The multiset of roots in z of p_n(z; xs): the n^(m-1) values
// (-1)^n (xs_1^(1/n) + sum_j eps^(s_j) xs_j^(1/n))^n over all twists of
// xs_2..xs_m.
ComplexMultiset pn_root_multiset(int n, const std::vector<Complex>& xs);

// Associativity at one sample: the n^2-multisets [x*w | w in y*z] and
// [w*z | w in x*y] agree within tol.
bool assoc_check(int n, Complex x, Complex y, Complex z, double tol = 1e-8);

// Numeric roots (companion-matrix eigenvalues) of the exact p_n specialized
// at xs, matched against pn_root_multiset. pn must use a table of the form
// (z, x1..xm, w) as produced by the builders.
bool roots_match_pn(const Polynomial& pn, int n, int m, const std::vector<Complex>& xs,
                    double tol = 1e-7);

// Componentwise cartesian product: all n^m vectors whose j-th entry is one
// of the n values of gmul(n, xs[j], ys[j]).
std::vector<std::vector<Complex>> cartesian_gmul(int n, int m, const std::vector<Complex>& xs,
                                                 const std::vector<Complex>& ys);

enum class FamilyKind { P2Family, P3CaseA, P3CaseB };

// Parameters of the universal families: the two-valued three-parameter
// family (k2, k4, k6) and the two one-parameter three-valued families
// (coefficient c, respectively alpha).
struct UniversalFamilyParams {
  FamilyKind which = FamilyKind::P2Family;
  Complex k2 = 0.0, k4 = 0.0, k6 = 0.0;
  Complex c = 0.0;
  Complex alpha = 0.0;
};

// Raised when the defining polynomial of a family degenerates at a sample
// (leading coefficient below the 1e-10 threshold); such samples are skipped
// by the campaigns, not failed.
class DegenerateLeadingCoefficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Product multiset of the family law at one (x, y).
ComplexMultiset family_mul(const UniversalFamilyParams& params, Complex x, Complex y);

// Associativity of the family law at one sample; throws
// DegenerateLeadingCoefficient when any intermediate product degenerates.
bool universal_family_assoc(const UniversalFamilyParams& params, Complex x, Complex y, Complex z,
                            double tol = 1e-8);

// Seeded sampling campaigns; per-sample RNG streams are derived from the
// seed and the sample index, so results do not depend on evaluation order.
struct AssocReport {
  int samples = 0;
  int passed = 0;
  int failed = 0;
  double max_mismatch = 0.0;
};

AssocReport assoc_campaign(int n, int samples, std::uint64_t seed, double tol = 1e-8);

struct FamilyAssocReport {
  int samples = 0;
  int passed = 0;
  int failed = 0;
  int skipped_degenerate = 0;
  double max_mismatch = 0.0;
};

// params.which selects the family; the parameters themselves are drawn per
// sample (on the unit disk) when sample_params is true, else taken fixed.
FamilyAssocReport family_assoc_campaign(const UniversalFamilyParams& params, bool sample_params,
                                        int samples, std::uint64_t seed, double tol = 1e-8);

}  // namespace nval
