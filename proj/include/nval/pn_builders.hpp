#pragma once

// Construction of the multiplication polynomials p_n(z; x_1..x_m) of the
// n-valued group on the complex numbers, by several independent routes:
//
//   KroneckerCharPoly  char poly of a Kronecker sum of companion matrices,
//                      with w^n -> z exponent reduction
//   WendtDet           det of the Wendt-style circulant bordering (m = 2)
//   BlockPower         det(A^n + (-1)^(n+1) x_1 I) for the block companion A
//   Resultant          res_t(z - (u + v t)^n, t^n - 1) with u^n, v^n
//                      substitution (m = 2)
//   PowerSums          closed-form Newton identities on the root power sums
//
// All routes share one variable table (z, x1..xm, w) and must agree exactly;
// the first four are the official cross-checked constructions, PowerSums is
// the fast path for large instances.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nval/polymatrix.hpp"
#include "nval/polynomial.hpp"

namespace nval {

enum class PnRoute { KroneckerCharPoly, WendtDet, BlockPower, Resultant, PowerSums };

struct PnRequest {
  int n = 2;
  int m = 2;
  PnRoute route = PnRoute::KroneckerCharPoly;
};

// Raised when two constructions that must agree do not.
class CrossCheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shared variable table (z, x1..xm, w) and the index layout used by every
// builder; w is scratch for the routes that eliminate it.
struct PnContext {
  VarTablePtr table;
  std::size_t z = 0;
  std::vector<std::size_t> x;  // x[j] is the index of x_{j+1}
  std::size_t w = 0;
};

PnContext make_pn_context(int m);

const char* pn_route_name(PnRoute route);

// Empirical sign convention for the companion-matrix routes: the companion
// argument for x_j enters as (-1)^(n+1) x_j. The literal untwisted variant
// fails the cross-checks for even n; see pn_block_power_convention().
std::string pn_block_power_convention();

Polynomial pn_kronecker(int n, int m);
PolyMatrix wendt_xyz_matrix(int n);  // over the m = 2 context table
Polynomial pn_wendt(int n);
Polynomial pn_block_power(int n, int m);
Polynomial pn_resultant(int n);
Polynomial pn_power_sums(int n, int m);

Polynomial pn_build(const PnRequest& req);

// Structural symmetries of the block-power matrix B and of the integer
// matrix W obtained from B at w = 1, x_1 = (-1)^n, x_2..x_m = 1: B equals
// its anti-transpose entrywise, and |W| is symmetric about both diagonals.
struct OrthoSymmetryReport {
  bool b_anti_symmetric = false;
  bool w_symmetric = false;
  bool w_anti_symmetric = false;
  bool ok = false;
};

OrthoSymmetryReport orthosymmetry_check(int n, int m);

}  // namespace nval
