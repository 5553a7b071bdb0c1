#include <doctest.h>

#include <random>
#include <vector>

#include "nval/arith.hpp"
#include "nval/elimination.hpp"

using nval::FactoredInteger;
using nval::Int;
using nval::IntMatrix;
using nval::Polynomial;
using nval::UniPoly;
using nval::VarTable;

TEST_CASE("primality: small knowns, Carmichael traps, large certificates") {
  CHECK(!nval::is_probable_prime(Int(0)));
  CHECK(!nval::is_probable_prime(Int(1)));
  CHECK(!nval::is_probable_prime(Int(-7)));
  CHECK(nval::is_probable_prime(Int(2)));
  CHECK(nval::is_probable_prime(Int(3)));
  CHECK(!nval::is_probable_prime(Int(4)));
  CHECK(nval::is_probable_prime(Int(97)));
  CHECK(!nval::is_probable_prime(Int(561)));         // Carmichael
  CHECK(!nval::is_probable_prime(Int(3215031751)));  // strong pseudoprime to 2,3,5,7
  CHECK(nval::is_probable_prime(Int("2305843009213693951")));  // 2^61 - 1
  CHECK(!nval::is_probable_prime(Int("2305843009213693953")));
  // Factors seen in the p_18 coefficient table.
  CHECK(nval::is_probable_prime(Int("30887295467839157373255894019")));
  CHECK(nval::is_probable_prime(Int("875241448225705706391329")));
  CHECK(nval::is_probable_prime(Int("839030750625213207689")));
  CHECK(!nval::is_probable_prime(Int("2604364087749888737122448575924399")));
}

TEST_CASE("factorize: canonical form and printing") {
  FactoredInteger f12 = nval::factorize(Int(12));
  CHECK(f12.sign == 1);
  CHECK(f12.certified);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0].base == 2);
  CHECK(f12.factors[0].exponent == 2);
  CHECK(f12.factors[1].base == 3);
  CHECK(f12.factors[1].exponent == 1);
  CHECK(f12.to_string() == "2^2 3^1");
  CHECK(f12.value() == 12);

  CHECK(nval::factorize(Int(1)).to_string() == "1");
  CHECK(nval::factorize(Int(-1)).to_string() == "- 1");
  CHECK(nval::factorize(Int(-12)).to_string() == "- 2^2 3^1");
  CHECK(nval::factorize(-nval::ipow(Int(2), 18)).to_string() == "- 2^18");
  CHECK(nval::factorize(Int(9409)).to_string() == "97^2");
  CHECK_THROWS_AS(nval::factorize(Int(0)), std::invalid_argument);
}

TEST_CASE("factorize: 1000 random 64-bit round trips") {
  std::mt19937_64 rng(4001);
  for (int iter = 0; iter < 1000; ++iter) {
    Int v(rng());
    if (iter % 2) v = -v;
    if (v == 0) v = 1;
    FactoredInteger f = nval::factorize(v);
    CHECK(f.certified);
    CHECK(f.value() == v);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      CHECK(nval::is_probable_prime(f.factors[i].base));
      if (i > 0) CHECK(f.factors[i - 1].base < f.factors[i].base);
    }
  }
}

TEST_CASE("factorize: semiprime beyond trial division; budget exhaustion is honest") {
  Int semi = Int(1000003) * Int(1000033);
  FactoredInteger full = nval::factorize(semi);
  CHECK(full.certified);
  CHECK(full.to_string() == "1000003^1 1000033^1");

  // With no rho budget the composite cofactor is kept and flagged.
  FactoredInteger stuck = nval::factorize(semi, /*rho_budget=*/1);
  CHECK(!stuck.certified);
  CHECK(stuck.value() == semi);

  // A large coefficient from the p_18 table, with its known factors.
  Int c062 = nval::ipow(Int(3), 4) * Int(10837) * Int("8379438461") *
             Int("73146705440157233");
  CHECK(nval::factorize(c062).to_string() == "3^4 10837^1 8379438461^1 73146705440157233^1");
}

TEST_CASE("wendt binomial circulant and determinant sequence") {
  IntMatrix w3 = nval::wendt_binomial_matrix(3);
  REQUIRE(w3.rows() == 3);
  // Row i holds C(3, (j-i) mod 3).
  CHECK(w3(0, 0) == 1);
  CHECK(w3(0, 1) == 3);
  CHECK(w3(0, 2) == 3);
  CHECK(w3(1, 0) == 3);
  CHECK(w3(1, 1) == 1);
  CHECK(w3(2, 1) == 3);

  const long long expected[] = {1, -3, 28, -375, 3751, 0, 6835648, -1343091375};
  for (int n = 1; n <= 8; ++n) CHECK(nval::wendt_det(n) == Int(expected[n - 1]));
  CHECK(nval::wendt_det(9) == Int("364668913756"));
  CHECK(nval::wendt_det(10) == Int("-210736858987743"));
  CHECK(nval::wendt_det(11) == Int("101832157445630503"));
  // W_n vanishes exactly when 6 | n.
  CHECK(nval::wendt_det(12) == 0);
  CHECK(nval::wendt_det(6) == 0);
  CHECK_THROWS_AS(nval::wendt_det(0), std::invalid_argument);
  CHECK_THROWS_AS(nval::wendt_det(65), std::invalid_argument);
}

TEST_CASE("wendt criterion: divisibility matches the Fermat congruence") {
  // q = 7, 13, 11: no nontrivial p-th power solution, and q does not divide W_2k.
  for (auto [p, k] : {std::pair<int, unsigned long>{3, 1}, {3, 2}, {5, 1}, {7, 2}}) {
    nval::WendtCriterionReport r = nval::wendt_criterion(Int(p), k);
    CHECK(r.q == 2 * k * p + 1);
    CHECK(!r.divides);
    CHECK(!r.witness_found);
  }
  // q = 19 (k = 3): W_6 = 0, so q | W_6, and 4^3 + 5^3 + 1 = 190 = 10*19.
  nval::WendtCriterionReport r19 = nval::wendt_criterion(Int(3), 3);
  CHECK(r19.q == 19);
  CHECK(r19.divides);
  CHECK(r19.witness_found);
  CHECK((nval::ipow(r19.wx, 3) + nval::ipow(r19.wy, 3) + nval::ipow(r19.wz, 3)) % 19 == 0);
  // q = 31 (k = 5): W_10 != 0 but 31 | W_10, and a witness exists.
  nval::WendtCriterionReport r31 = nval::wendt_criterion(Int(3), 5);
  CHECK(r31.q == 31);
  CHECK(r31.divides);
  CHECK(r31.witness_found);
  CHECK(nval::wendt_det(10) % 31 == 0);

  CHECK_THROWS_AS(nval::wendt_criterion(Int(4), 1), std::invalid_argument);  // p not prime
  CHECK_THROWS_AS(nval::wendt_criterion(Int(2), 1), std::invalid_argument);  // p must be odd
  CHECK_THROWS_AS(nval::wendt_criterion(Int(3), 0), std::invalid_argument);  // k positive
  CHECK_THROWS_AS(nval::wendt_criterion(Int(5), 2), std::invalid_argument);  // q = 21 composite
}

TEST_CASE("divisibility of the centered p_n coefficients by n^4") {
  nval::DivisibilityReport r5 = nval::pn_xyz_divisibility(5);
  CHECK(r5.n == 5);
  CHECK(r5.mod_n4);
  CHECK(!r5.mod_n5);  // sharp at n = 5
  CHECK(nval::n4_divisibility_check(5));

  CHECK_THROWS_AS(nval::pn_xyz_divisibility(4), std::invalid_argument);  // composite
  CHECK_THROWS_AS(nval::pn_xyz_divisibility(3), std::invalid_argument);  // below 5
  CHECK_THROWS_AS(nval::pn_xyz_divisibility(9), std::invalid_argument);
}

TEST_CASE("binomial congruences for the central coefficient") {
  // C(2p-1, p-1) == 1 mod p^3 for every prime >= 5; mod p^4 only for the
  // Wolstenholme primes.
  nval::WolstenholmeReport w5 = nval::wolstenholme_check(Int(5));
  CHECK(w5.mod_n3);
  CHECK(!w5.mod_n4);
  nval::WolstenholmeReport w7 = nval::wolstenholme_check(Int(7));
  CHECK(w7.mod_n3);  // C(13,6) - 1 = 1715 = 5 * 7^3
  CHECK(!w7.mod_n4);
  nval::WolstenholmeReport w16843 = nval::wolstenholme_check(Int(16843));
  CHECK(w16843.mod_n3);
  CHECK(w16843.mod_n4);
  CHECK_THROWS_AS(nval::wolstenholme_check(Int(3)), std::invalid_argument);
  CHECK_THROWS_AS(nval::wolstenholme_check(Int(6)), std::invalid_argument);
}

TEST_CASE("weighted binomial square sum identity") {
  // sum k C(n,k)^2 over 0 < k < n equals n (C(2n-1, n-1) - 1).
  for (unsigned long n = 2; n <= 30; ++n) CHECK(nval::binom_weighted_sum_identity(n));
  // Hand check at n = 2: 1*C(2,1)^2 = 4 = 2*(C(3,1) - 1).
  CHECK(nval::binom_weighted_sum_identity(2));
}

namespace {

// UniPoly in z over a fresh single-variable table, coefficients constant-first.
UniPoly zpoly(const std::vector<long long>& coeffs) {
  static const auto table = VarTable::create({"z"});
  std::vector<Polynomial> c;
  for (long long v : coeffs) c.push_back(Polynomial(Int(v), table));
  return UniPoly(table, 0, std::move(c));
}

}  // namespace

TEST_CASE("irreducibility certificates: conclusive verdicts") {
  // p_2(z; 2, 3) = z^2 - 10z + 1 and its z -> z^2 substitution.
  nval::IrredCertificate c1 = nval::irreducibility_certificate(zpoly({1, -10, 1}));
  CHECK(c1.status == nval::IrredStatus::Irreducible);
  CHECK(!c1.primes.empty());
  CHECK(!c1.evidence.empty());

  nval::IrredCertificate c2 = nval::irreducibility_certificate(zpoly({1, 0, -10, 0, 1}));
  CHECK(c2.status == nval::IrredStatus::Irreducible);

  // p_3(z; 2, 3) = z^3 + 15z^2 - 87z + 125, then z -> z^3 (degree 9).
  nval::IrredCertificate c3 = nval::irreducibility_certificate(zpoly({125, -87, 15, 1}));
  CHECK(c3.status == nval::IrredStatus::Irreducible);
  nval::IrredCertificate c9 =
      nval::irreducibility_certificate(zpoly({125, 0, 0, -87, 0, 0, 15, 0, 0, 1}));
  CHECK(c9.status == nval::IrredStatus::Irreducible);

  // z^2 - 1 splits; the certificate must exhibit a genuine factor.
  nval::IrredCertificate r = nval::irreducibility_certificate(zpoly({-1, 0, 1}));
  CHECK(r.status == nval::IrredStatus::Reducible);
  REQUIRE(r.factor.size() >= 2);

  // Vanishing constant term -> factor z.
  nval::IrredCertificate rz = nval::irreducibility_certificate(zpoly({0, 2, 1}));
  CHECK(rz.status == nval::IrredStatus::Reducible);
  REQUIRE(rz.factor.size() == 2);
  CHECK(rz.factor[0] == 0);
  CHECK(rz.factor[1] == 1);

  // Product with no rational root: needs the full Zassenhaus round.
  // (z^2 + 1)(z^2 + 3) = z^4 + 4z^2 + 3.
  nval::IrredCertificate rq = nval::irreducibility_certificate(zpoly({3, 0, 4, 0, 1}));
  CHECK(rq.status == nval::IrredStatus::Reducible);
  REQUIRE(!rq.factor.empty());

  // Repeated factor is caught by the vanishing discriminant.
  nval::IrredCertificate rsq = nval::irreducibility_certificate(zpoly({1, 2, 1}));
  CHECK(rsq.status == nval::IrredStatus::Reducible);
}

TEST_CASE("irreducibility certificates: factor actually divides") {
  // Verify the Reducible factors by exact polynomial division.
  auto table = VarTable::create({"z"});
  Polynomial z = Polynomial::variable(table, 0);
  for (const std::vector<long long>& coeffs :
       {std::vector<long long>{-1, 0, 1}, {3, 0, 4, 0, 1}, {-6, 11, -6, 1}}) {
    nval::IrredCertificate cert = nval::irreducibility_certificate(zpoly(coeffs));
    REQUIRE(cert.status == nval::IrredStatus::Reducible);
    REQUIRE(cert.factor.size() >= 2);
    Polynomial f(Int(0), table), g(Int(0), table);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      f += Int(coeffs[i]) * nval::poly_pow(z, i);
    for (std::size_t i = 0; i < cert.factor.size(); ++i)
      g += cert.factor[i] * nval::poly_pow(z, i);
    CHECK(nval::try_div(f, g).has_value());
    CHECK(g.total_degree() >= 1);
    CHECK(g.total_degree() < f.total_degree());
  }
}

TEST_CASE("irreducibility certificates: non-monic and validation") {
  // Non-monic irreducible, certified by degree patterns alone:
  // 2z^2 - 3 factors mod 5 but stays irreducible mod 7.
  nval::IrredCertificate nm = nval::irreducibility_certificate(zpoly({-3, 0, 2}));
  CHECK(nm.status == nval::IrredStatus::Irreducible);

  // Non-monic reducible without integer roots: patterns cannot conclude and
  // the Zassenhaus round is monic-only, so the answer is Inconclusive —
  // never a guess. (2z + 3)(3z + 2) = 6z^2 + 13z + 6.
  nval::IrredCertificate inc = nval::irreducibility_certificate(zpoly({6, 13, 6}));
  CHECK(inc.status == nval::IrredStatus::Inconclusive);

  // A non-monic input with an integer root is still caught by the root scan:
  // (2z + 1)(z + 1) = 2z^2 + 3z + 1 vanishes at z = -1.
  nval::IrredCertificate root = nval::irreducibility_certificate(zpoly({1, 3, 2}));
  CHECK(root.status == nval::IrredStatus::Reducible);

  // Degree-1 inputs are trivially irreducible.
  CHECK(nval::irreducibility_certificate(zpoly({7, 2})).status ==
        nval::IrredStatus::Irreducible);

  // Imprimitive or constant inputs are usage errors.
  CHECK_THROWS_AS(nval::irreducibility_certificate(zpoly({2, 0, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(nval::irreducibility_certificate(zpoly({5})), std::invalid_argument);

  // Coefficients must be integers (no free second variable).
  auto wide = VarTable::create({"z", "a"});
  UniPoly bad(wide, 0,
              {Polynomial::variable(wide, 1), Polynomial(Int(0), wide), Polynomial(Int(1), wide)});
  CHECK_THROWS_AS(nval::irreducibility_certificate(bad), std::invalid_argument);
}

TEST_CASE("irreducibility certificates: randomized cross-check on products") {
  // Products of two random monic polynomials must never certify Irreducible.
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto table = VarTable::create({"z"});
  Polynomial z = Polynomial::variable(table, 0);
  int checked = 0;
  while (checked < 40) {
    const int da = 1 + (int)(rng() % 2), db = 1 + (int)(rng() % 2);
    Polynomial a = nval::poly_pow(z, da), b = nval::poly_pow(z, db);
    for (int i = 0; i < da; ++i) a += Int(coeff(rng)) * nval::poly_pow(z, i);
    for (int i = 0; i < db; ++i) b += Int(coeff(rng)) * nval::poly_pow(z, i);
    Polynomial prod = a * b;
    if (nval::content(prod) != 1) continue;
    nval::IrredCertificate cert =
        nval::irreducibility_certificate(UniPoly::from_polynomial(prod, 0));
    CHECK(cert.status == nval::IrredStatus::Reducible);
    ++checked;
  }
}
