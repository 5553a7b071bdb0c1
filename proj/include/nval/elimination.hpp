#pragma once

// Univariate view of a multivariate polynomial plus the classical elimination
// tools built on it: Sylvester resultants, derivatives, and discriminants,
// all exact over the integer polynomial ring.

#include <cstddef>
#include <string>
#include <vector>

#include "nval/integer.hpp"
#include "nval/polynomial.hpp"

namespace nval {

// p written as sum coeffs[k] * var^k; coefficients are polynomials in the
// remaining variables of the shared table and never involve var. Trailing
// zero coefficients are trimmed, so the zero polynomial has empty coeffs and
// degree() == -1.
class UniPoly {
 public:
  UniPoly(VarTablePtr table, std::size_t var, std::vector<Polynomial> coeffs);

  static UniPoly from_polynomial(const Polynomial& p, std::size_t var);
  Polynomial to_polynomial() const;

  const VarTablePtr& table() const { return table_; }
  std::size_t var() const { return var_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // coefficient of var^k (zero polynomial beyond the degree)
  const Polynomial& coeff(std::size_t k) const;
  const Polynomial& leading() const;

 private:
  VarTablePtr table_;
  std::size_t var_;
  std::vector<Polynomial> coeffs_;
};

UniPoly derivative(const UniPoly& f);

// det of the (deg f + deg g)-order Sylvester matrix, f-rows on top, so
// res(f,g) = lc(f)^{deg g} * prod g(alpha_i) over the roots of f. Swapping
// the arguments multiplies by (-1)^{deg f * deg g}. A degree-0 argument c
// gives c^{deg other}; two constants are rejected as a usage error.
Polynomial sylvester_resultant(const UniPoly& f, const UniPoly& g);

// res(f, f') / lc(f); the division is exact for every f of degree >= 2, and
// a failure surfaces as InexactDivision rather than a wrong answer.
Polynomial discriminant(const UniPoly& f);

// Discriminant factorization check for the three-argument multiplication
// polynomial in its parametric form: disc_T of
//   ((-1)^n x T^{n-1} + (-1)^n y)(1+T)^{n-1} - T^{n-1} z
// divided by (xyz)^{n-2} * p_n(z; x, y) must be a constant of absolute value
// (n-1)^{2n-2}. The observed sign is reported, not asserted.
struct DiscIdentityReport {
  int n = 0;
  Int constant;      // the full constant quotient, sign included
  Int expected_abs;  // (n-1)^(2n-2)
  int sign = 0;
  bool ok = false;   // |constant| == expected_abs
};

DiscIdentityReport discriminant_identity_check(int n);

}  // namespace nval
