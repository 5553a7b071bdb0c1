#pragma once

// Integer-side results: primality testing and factorization, Wendt
// determinants and the Fermat-quotient criterion, the n^4 congruence of the
// multiplication polynomial coefficients, Wolstenholme checks, and an
// unconditional irreducibility certificate for univariate integer
// polynomials.

#include <cstdint>
#include <string>
#include <vector>

#include "nval/elimination.hpp"
#include "nval/integer.hpp"
#include "nval/polymatrix.hpp"

namespace nval {

// Deterministic Miller-Rabin for |n| < 3.3e24 (first thirteen prime bases),
// strong probable-prime with fixed pseudo-random bases above that.
bool is_probable_prime(const Int& n);

struct FactorEntry {
  Int base;
  unsigned exponent = 1;
  friend bool operator==(const FactorEntry& a, const FactorEntry& b) {
    return a.base == b.base && a.exponent == b.exponent;
  }
};

// sign * prod base^exponent with bases strictly increasing. certified means
// every base passed the primality test; when the rho budget runs out the
// remaining composite cofactor is kept as a base and certified drops to
// false, so the product invariant always holds.
struct FactoredInteger {
  int sign = 1;
  std::vector<FactorEntry> factors;
  bool certified = true;

  Int value() const;
  std::string to_string() const;
};

FactoredInteger factorize(const Int& n, std::uint64_t rho_budget = 100000000,
                          std::uint64_t seed = 1729);

// n x n matrix of binomial coefficients C(n, (j-i) mod n).
IntMatrix wendt_binomial_matrix(int n);

// Its determinant, computed both by Bareiss elimination and as the resultant
// res((1+t)^n - t^n, t^n - 1); the two must agree.
Int wendt_det(int n);

struct WendtCriterionReport {
  Int q;                      // 2kp + 1
  bool divides = false;       // q | W_{2k}
  bool witness_found = false; // x^p + y^p + z^p == 0 (mod q) with xyz != 0
  Int wx, wy, wz;
};

// For prime p and prime q = 2kp + 1: q divides the Wendt determinant W_{2k}
// exactly when the Fermat congruence has a nontrivial solution mod q. Both
// sides are computed; agreement is the caller's check.
WendtCriterionReport wendt_criterion(const Int& p, unsigned long k);

struct DivisibilityReport {
  int n = 0;
  bool mod_n4 = false;  // all coefficients of (p_n - (x+y+z)^n)/(xyz) divisible by n^4
  bool mod_n5 = false;  // same test one power higher
};

// n must be prime, n >= 5.
DivisibilityReport pn_xyz_divisibility(int n);

// The n^4 flag alone.
bool n4_divisibility_check(int n);

struct WolstenholmeReport {
  bool mod_n3 = false;  // C(2p-1, p-1) == 1 (mod p^3)
  bool mod_n4 = false;  // ... (mod p^4)
};

WolstenholmeReport wolstenholme_check(const Int& p);

// sum_{k=1}^{n-1} k C(n,k)^2 == n (C(2n-1, n-1) - 1), exact on both sides.
bool binom_weighted_sum_identity(unsigned long n);

enum class IrredStatus { Irreducible, Reducible, Inconclusive };

struct IrredCertificate {
  IrredStatus status = IrredStatus::Inconclusive;
  std::vector<std::uint64_t> primes;  // good primes actually consulted
  std::string evidence;               // human-readable justification
  std::vector<Int> factor;            // a proper factor when Reducible (may be empty)
};

// Unconditional certificate for a primitive univariate integer polynomial:
// first the intersection of attainable factor-degree sums across several
// squarefree reductions mod p, then, if that is not conclusive, a complete
// Zassenhaus round (Hensel lifting past the coefficient bound and exhaustive
// subset recombination) for monic inputs. Inconclusive is returned rather
// than ever guessing.
IrredCertificate irreducibility_certificate(const UniPoly& f);

}  // namespace nval
