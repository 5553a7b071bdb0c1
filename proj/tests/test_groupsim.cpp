#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "nval/groupsim.hpp"
#include "nval/pn_builders.hpp"

using nval::Complex;
using nval::ComplexMultiset;

namespace {

bool contains_approx(const std::vector<Complex>& values, Complex target, double tol) {
  return std::any_of(values.begin(), values.end(),
                     [&](Complex v) { return std::abs(v - target) <= tol; });
}

}  // namespace

TEST_CASE("nth_roots enumerates eps^r times the principal root") {
  auto r2 = nval::nth_roots(1.0, 2);
  REQUIRE(r2.size() == 2);
  CHECK(std::abs(r2[0] - Complex(-1.0)) < 1e-12);  // r = 1: eps * 1
  CHECK(std::abs(r2[1] - Complex(1.0)) < 1e-12);   // r = 2: principal root last

  // Principal cube root of -8 is 1 + i*sqrt(3); the full set is that value,
  // -2, and the conjugate.
  auto r3 = nval::nth_roots(Complex(-8.0, 0.0), 3);
  REQUIRE(r3.size() == 3);
  const double s3 = std::sqrt(3.0);
  CHECK(std::abs(r3.back() - Complex(1.0, s3)) < 1e-12);
  CHECK(contains_approx(r3, Complex(-2.0, 0.0), 1e-12));
  CHECK(contains_approx(r3, Complex(1.0, -s3), 1e-12));

  // Cubing any listed root recovers the input.
  for (Complex v : r3) CHECK(std::abs(v * v * v - Complex(-8.0, 0.0)) < 1e-10);

  // Zero has only the zero root.
  auto rz = nval::nth_roots(Complex(0.0, 0.0), 4);
  for (Complex v : rz) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("gmul knowns and branch independence") {
  ComplexMultiset p = nval::gmul(2, 1.0, 1.0);
  REQUIRE(p.size() == 2);
  ComplexMultiset expected({Complex(0.0), Complex(4.0)});
  CHECK(p.approx_equal(expected, 1e-9));

  // The product multiset must not depend on which branch of either n-th root
  // was taken.
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int n = 2; n <= 5; ++n) {
    for (int iter = 0; iter < 20; ++iter) {
      Complex x(d(rng), d(rng)), y(d(rng), d(rng));
      ComplexMultiset base = nval::gmul(n, x, y);
      for (int rx = 1; rx <= n; ++rx) {
        ComplexMultiset rot = nval::gmul_rotated(n, x, y, rx, (rx * 2) % n + 1);
        CHECK(base.approx_equal(rot, 1e-8));
      }
    }
  }
}

TEST_CASE("gmul against the identity element") {
  // 0 is the unit: x * 0 = [x, ..., x] (n copies).
  for (int n = 1; n <= 5; ++n) {
    ComplexMultiset p = nval::gmul(n, Complex(0.7, -0.3), 0.0);
    REQUIRE(p.size() == (std::size_t)n);
    for (Complex v : p.values()) CHECK(std::abs(v - Complex(0.7, -0.3)) < 1e-10);
  }
}

TEST_CASE("multiset comparison: positional greedy with bipartite fallback") {
  ComplexMultiset a({Complex(1.0), Complex(2.0), Complex(3.0)});
  ComplexMultiset b({Complex(3.0), Complex(1.0), Complex(2.0)});
  CHECK(a.approx_equal(b, 1e-12));
  CHECK(a.max_pair_distance(b) < 1e-12);

  ComplexMultiset c({Complex(1.0), Complex(2.0), Complex(3.5)});
  CHECK(!a.approx_equal(c, 1e-3));
  // Unmatched within tol reads as infinity; a generous tol reports the gap.
  CHECK(a.max_pair_distance(c, 1e-3) == std::numeric_limits<double>::infinity());
  CHECK(a.max_pair_distance(c, 1.0) == doctest::Approx(0.5));

  // Size mismatch is never equal.
  ComplexMultiset d({Complex(1.0)});
  CHECK(!a.approx_equal(d, 1.0));

  // A pair crafted so the sort-then-pair greedy mismatches but a perfect
  // matching exists: values differ only in the tie-broken imaginary part.
  const double eps = 1e-10;
  ComplexMultiset g1({Complex(0.0, 0.0), Complex(eps, 1.0)});
  ComplexMultiset g2({Complex(0.0, 1.0), Complex(eps, 0.0)});
  CHECK(g1.approx_equal(g2, 1e-6));

  // Duplicated values match by multiplicity.
  ComplexMultiset m1({Complex(1.0), Complex(1.0), Complex(2.0)});
  ComplexMultiset m2({Complex(1.0), Complex(2.0), Complex(2.0)});
  CHECK(!m1.approx_equal(m2, 1e-3));
}

TEST_CASE("pn_root_multiset matches the exact builders numerically") {
  // Roots of the built p_n at numeric arguments == the defining root
  // multiset, for every n^m within the table budget.
  for (auto [n, m] : {std::pair<int, int>{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2},
                      {2, 3}, {3, 3}, {2, 4}}) {
    nval::Polynomial pn = nval::pn_power_sums(n, m);
    std::mt19937_64 rng(1000 + 10 * n + m);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int iter = 0; iter < 5; ++iter) {
      std::vector<Complex> xs;
      for (int j = 0; j < m; ++j) xs.emplace_back(d(rng), d(rng));
      CHECK(nval::roots_match_pn(pn, n, m, xs, 1e-7));
    }
  }
}

TEST_CASE("cartesian_gmul: componentwise products") {
  std::vector<std::vector<Complex>> all =
      nval::cartesian_gmul(2, 2, {Complex(1.0), Complex(1.0)}, {Complex(1.0), Complex(1.0)});
  REQUIRE(all.size() == 4);
  // Each coordinate is 0 or 4; all four combinations appear.
  int seen[2][2] = {{0, 0}, {0, 0}};
  for (const auto& v : all) {
    REQUIRE(v.size() == 2);
    int a = std::abs(v[0] - Complex(4.0)) < 1e-9 ? 1 : 0;
    int b = std::abs(v[1] - Complex(4.0)) < 1e-9 ? 1 : 0;
    CHECK(std::abs(v[0] - (a ? Complex(4.0) : Complex(0.0))) < 1e-9);
    CHECK(std::abs(v[1] - (b ? Complex(4.0) : Complex(0.0))) < 1e-9);
    seen[a][b] += 1;
  }
  CHECK(seen[0][0] == 1);
  CHECK(seen[0][1] == 1);
  CHECK(seen[1][0] == 1);
  CHECK(seen[1][1] == 1);
}

TEST_CASE("associativity at fixed samples and as a campaign") {
  CHECK(nval::assoc_check(2, Complex(0.3, 0.1), Complex(-0.5, 0.2), Complex(0.9, -0.4)));
  CHECK(nval::assoc_check(3, Complex(1.0), Complex(2.0), Complex(3.0)));

  for (int n = 1; n <= 4; ++n) {
    nval::AssocReport rep = nval::assoc_campaign(n, 100, /*seed=*/1729);
    CHECK(rep.samples == 100);
    CHECK(rep.passed == 100);
    CHECK(rep.failed == 0);
    CHECK(rep.max_mismatch < 1e-8);
  }

  // Same seed, same numbers: the campaign is reproducible.
  nval::AssocReport a = nval::assoc_campaign(3, 50, 99);
  nval::AssocReport b = nval::assoc_campaign(3, 50, 99);
  CHECK(a.max_mismatch == b.max_mismatch);
  CHECK(a.passed == b.passed);
}

TEST_CASE("universal family laws: multiset shapes and degeneracy guard") {
  nval::UniversalFamilyParams p2;
  p2.which = nval::FamilyKind::P2Family;
  p2.k2 = Complex(0.3, 0.1);
  p2.k4 = Complex(-0.2, 0.4);
  p2.k6 = Complex(0.1, -0.5);
  CHECK(nval::family_mul(p2, Complex(0.4), Complex(-0.7)).size() == 2);
  CHECK(nval::universal_family_assoc(p2, Complex(0.4, 0.1), Complex(-0.7, 0.2),
                                     Complex(0.2, -0.3)));

  nval::UniversalFamilyParams p3a;
  p3a.which = nval::FamilyKind::P3CaseA;
  p3a.c = Complex(0.25, -0.1);
  CHECK(nval::family_mul(p3a, Complex(0.4), Complex(-0.7)).size() == 3);

  nval::UniversalFamilyParams p3b;
  p3b.which = nval::FamilyKind::P3CaseB;
  p3b.alpha = Complex(0.5, 0.2);
  CHECK(nval::family_mul(p3b, Complex(0.4), Complex(-0.7)).size() == 3);
  // x*y = ((x+y)/(1+alpha x y)) three times.
  Complex x(0.4), y(-0.7);
  Complex expect = (x + y) / (1.0 + p3b.alpha * x * y);
  const nval::ComplexMultiset closed = nval::family_mul(p3b, x, y);
  for (Complex v : closed.values()) CHECK(std::abs(v - expect) < 1e-12);

  // 1 + alpha x y = 0 degenerates the rational law.
  nval::UniversalFamilyParams sing = p3b;
  sing.alpha = Complex(1.0);
  CHECK_THROWS_AS(nval::family_mul(sing, Complex(2.0), Complex(-0.5)),
                  nval::DegenerateLeadingCoefficient);
}

TEST_CASE("family associativity campaigns pass with degenerates skipped") {
  for (nval::FamilyKind kind : {nval::FamilyKind::P2Family, nval::FamilyKind::P3CaseA,
                                nval::FamilyKind::P3CaseB}) {
    nval::UniversalFamilyParams params;
    params.which = kind;
    nval::FamilyAssocReport rep =
        nval::family_assoc_campaign(params, /*sample_params=*/true, 60, /*seed=*/1729, 1e-7);
    CHECK(rep.samples == 60);
    CHECK(rep.failed == 0);
    CHECK(rep.passed + rep.skipped_degenerate == 60);
    CHECK(rep.passed > 0);
  }
}
