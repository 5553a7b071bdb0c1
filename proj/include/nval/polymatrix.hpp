#pragma once

// Dense matrices over the exact scalars (Polynomial, Int) built on Eigen:
// companion matrices, Kronecker products/sums, fraction-free Bareiss
// determinants, Faddeev–LeVerrier characteristic polynomials, and the block
// constructions behind the composition identity.
//
// Free functions are templated on the scalar; the only scalar requirements
// are ring arithmetic plus the ring_* hooks (exact division, zero test)
// declared next to each scalar type.

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nval/polynomial.hpp"

namespace Eigen {

template <>
struct NumTraits<nval::Polynomial> : GenericNumTraits<nval::Polynomial> {
  using Real = nval::Polynomial;
  using NonInteger = nval::Polynomial;
  using Nested = nval::Polynomial;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 128,
    MulCost = 512,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace nval {

using PolyMatrix = Eigen::Matrix<Polynomial, Eigen::Dynamic, Eigen::Dynamic>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline PolyMatrix poly_zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return PolyMatrix::Constant(rows, cols, Polynomial());
}

inline PolyMatrix poly_identity(Eigen::Index n) {
  PolyMatrix m = poly_zero_matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Polynomial(1);
  return m;
}

// Frobenius companion matrix of t^m + a_{m-1}t^{m-1} + ... + a_0: subdiagonal
// ones, last column -a_0..-a_{m-1}.
inline PolyMatrix companion(const std::vector<Polynomial>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("companion: empty coefficient list");
  const Eigen::Index m = static_cast<Eigen::Index>(coeffs.size());
  PolyMatrix f = poly_zero_matrix(m, m);
  for (Eigen::Index i = 1; i < m; ++i) f(i, i - 1) = Polynomial(1);
  for (Eigen::Index i = 0; i < m; ++i) f(i, m - 1) = -coeffs[static_cast<std::size_t>(i)];
  return f;
}

template <class Scalar>
DenseMatrix<Scalar> kronecker_product(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

// A ⊞ B = A⊗I + I⊗B; eigenvalues are all pairwise sums.
template <class Scalar>
DenseMatrix<Scalar> kronecker_sum(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("kronecker_sum: inputs must be square");
  const Eigen::Index m = a.rows(), n = b.rows();
  DenseMatrix<Scalar> r(m * n, m * n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) {
          Scalar v = (k == l) ? a(i, j) : Scalar(0);
          if (i == j) v += b(k, l);
          r(i * n + k, j * n + l) = std::move(v);
        }
  return r;
}

// Plain triple-loop product that skips structural zeros of the left factor
// (the Kronecker sums this feeds on are very sparse).
template <class Scalar>
DenseMatrix<Scalar> mat_mul(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  DenseMatrix<Scalar> r = DenseMatrix<Scalar>::Constant(a.rows(), b.cols(), Scalar(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (ring_is_zero(aik)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        if (ring_is_zero(b(k, j))) continue;
        r(i, j) += aik * b(k, j);
      }
    }
  return r;
}

template <class Scalar>
DenseMatrix<Scalar> mat_pow(const DenseMatrix<Scalar>& a, unsigned e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: matrix must be square");
  DenseMatrix<Scalar> acc = DenseMatrix<Scalar>::Constant(a.rows(), a.rows(), Scalar(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i) acc(i, i) = Scalar(1);
  for (unsigned i = 0; i < e; ++i) acc = mat_mul(acc, a);
  return acc;
}

template <class Scalar>
bool mats_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// Fraction-free Bareiss elimination over an integral domain. Every division
// is by the previous pivot and is mathematically exact; InexactDivision from
// the scalar hook means the input breaks the algorithm's contract (or a bug).
// Pivoting: first row below with a structurally nonzero entry; if none, the
// determinant is zero.
template <class Scalar>
Scalar det_bareiss(DenseMatrix<Scalar> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_bareiss: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  int sign = 1;
  Scalar prev = Scalar(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(m(k, k))) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (!ring_is_zero(m(r, k))) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Scalar(0);
      for (Eigen::Index j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = ring_exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  Scalar det = std::move(m(n - 1, n - 1));
  if (sign < 0) det = -det;
  return det;
}

// Naive Laplace expansion; test oracle for small orders only.
template <class Scalar>
Scalar det_laplace(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_laplace: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n > 7) throw std::invalid_argument("det_laplace: oracle limited to order 7");
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar acc = Scalar(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (ring_is_zero(m(0, j))) continue;
    DenseMatrix<Scalar> sub(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    Scalar term = m(0, j) * det_laplace(sub);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// det(t·I − M) by Faddeev–LeVerrier: exact over the integers (each division
// is by the step index k and is asserted), and much cheaper than a symbolic
// Bareiss when M is large but its entries are small. The defining equality
// with det_bareiss(tI − M) is enforced by the test suite.
inline Polynomial char_poly(const PolyMatrix& m, const VarTablePtr& table, std::size_t tvar) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix must be square");
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j).degree_in(tvar) > 0)
        throw std::invalid_argument("char_poly: variable occurs in matrix entries");
  std::vector<Polynomial> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = Polynomial(1);
  PolyMatrix mk = poly_identity(n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = mat_mul(m, mk);
    Polynomial tr(Int(0), table);
    for (Eigen::Index i = 0; i < n; ++i) tr += mk(i, i);
    Polynomial ck = exact_div(-tr, Int(k));
    c[static_cast<std::size_t>(n - k)] = ck;
    for (Eigen::Index i = 0; i < n; ++i) mk(i, i) += ck;
  }
  Polynomial chi(Int(0), table);
  for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
    if (c[j].is_zero()) continue;
    chi += c[j] * Polynomial::variable(table, tvar, static_cast<std::uint32_t>(j));
  }
  return chi;
}

// The mn×mn block companion of the composition: subdiagonal identity blocks,
// last block-column -a_i·I with C_g added to the top block. Its char poly is
// g(f(t)) for monic f = t^m + a_{m-1}t^{m-1} + ... + a_0.
inline PolyMatrix block_composition_matrix(const std::vector<Polynomial>& f_coeffs,
                                           const PolyMatrix& cg) {
  if (f_coeffs.empty()) throw std::invalid_argument("block_composition_matrix: empty f");
  if (cg.rows() != cg.cols())
    throw std::invalid_argument("block_composition_matrix: C_g must be square");
  const Eigen::Index m = static_cast<Eigen::Index>(f_coeffs.size());
  const Eigen::Index n = cg.rows();
  PolyMatrix b = poly_zero_matrix(m * n, m * n);
  for (Eigen::Index i = 1; i < m; ++i)
    for (Eigen::Index r = 0; r < n; ++r) b(i * n + r, (i - 1) * n + r) = Polynomial(1);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Polynomial& ai = f_coeffs[static_cast<std::size_t>(i)];
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) {
        Polynomial v = (i == 0) ? cg(r, c) : Polynomial();
        if (r == c) v -= ai;
        b(i * n + r, (m - 1) * n + c) = std::move(v);
      }
  }
  return b;
}

// Reduces a block-Hessenberg matrix of the shape (first block-row M_1..M_m,
// -I on the subdiagonal, N_1..N_{m-1} on the diagonal, zeros elsewhere) to
// the single determinant det(M_1·N_1···N_{m-1} + M_2·N_2···N_{m-1} + ... + M_m).
inline Polynomial block_det_reduce(const PolyMatrix& m, Eigen::Index block) {
  if (m.rows() != m.cols() || block <= 0 || m.rows() % block != 0)
    throw std::invalid_argument("block_det_reduce: bad block structure");
  const Eigen::Index mb = m.rows() / block;
  auto blk = [&](Eigen::Index i, Eigen::Index j) -> PolyMatrix {
    return m.block(i * block, j * block, block, block);
  };
  for (Eigen::Index i = 1; i < mb; ++i)
    for (Eigen::Index j = 0; j < mb; ++j) {
      if (j == i) continue;
      PolyMatrix expect = (j == i - 1) ? PolyMatrix(-poly_identity(block))
                                       : poly_zero_matrix(block, block);
      if (!mats_equal<Polynomial>(blk(i, j), expect))
        throw std::invalid_argument(
            "block_det_reduce: expected -I subdiagonal blocks and zeros off the "
            "first block-row and diagonal");
    }
  PolyMatrix acc = blk(0, mb - 1);                      // M_m
  PolyMatrix suffix = poly_identity(block);             // N_j ··· N_{m-1}
  for (Eigen::Index j = mb - 1; j >= 1; --j) {
    suffix = mat_mul<Polynomial>(blk(j, j), suffix);
    acc += mat_mul<Polynomial>(blk(0, j - 1), suffix);  // M_j · N_j ··· N_{m-1}
  }
  return det_bareiss<Polynomial>(acc);
}

// Flips the sign of every entry with i+j odd; leaves the determinant
// unchanged (every permutation product contains an even number of them).
template <class Scalar>
DenseMatrix<Scalar> sign_alternate(const DenseMatrix<Scalar>& m) {
  DenseMatrix<Scalar> r = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if ((i + j) % 2 != 0) r(i, j) = -r(i, j);
  return r;
}

// Reflection in the anti-diagonal; also determinant-preserving.
template <class Scalar>
DenseMatrix<Scalar> anti_transpose(const DenseMatrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  DenseMatrix<Scalar> r(m.cols(), n);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(m.cols() - 1 - j, n - 1 - i) = m(i, j);
  return r;
}

}  // namespace nval
