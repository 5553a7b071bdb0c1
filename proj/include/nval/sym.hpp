#pragma once

// Symmetric polynomials: symmetry tests, the elementary basis sigma_1..sigma_k,
// and Gauss's reduction of a symmetric polynomial to that basis. Under grlex
// the leading exponents of a symmetric polynomial are weakly decreasing along
// the listed variables, which is exactly what the reduction consumes.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nval/polynomial.hpp"

namespace nval {

class NotSymmetric : public std::runtime_error {
 public:
  explicit NotSymmetric(const std::string& what) : std::runtime_error(what) {}
};

// p with the two variables' exponents swapped in every monomial.
inline Polynomial swap_vars(const Polynomial& p, std::size_t a, std::size_t b) {
  Polynomial r(Int(0), p.vars());
  for (const auto& [m, c] : p) {
    std::vector<std::uint32_t> e(m.raw());
    std::size_t need = std::max(a, b) + 1;
    if (e.size() < need) e.resize(need, 0);
    std::swap(e[a], e[b]);
    r += Polynomial::monomial(p.vars(), Monomial(std::move(e)), c);
  }
  return r;
}

// Invariance under all adjacent transpositions of the listed variables
// (adjacent transpositions generate the full symmetric group).
inline bool is_symmetric(const Polynomial& p, const std::vector<std::size_t>& vars) {
  for (std::size_t i = 0; i + 1 < vars.size(); ++i)
    if (!(swap_vars(p, vars[i], vars[i + 1]) == p)) return false;
  return true;
}

// sigma_1..sigma_k over the listed variables, built by the product recurrence
// prod_i (1 + x_i t) truncated degree by degree.
inline std::vector<Polynomial> elementary_symmetrics(const VarTablePtr& table,
                                                     const std::vector<std::size_t>& vars) {
  std::vector<Polynomial> e;  // e[j] = sigma_{j+1}
  e.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Polynomial xi = Polynomial::variable(table, vars[i]);
    e.push_back(Polynomial(Int(0), table));
    for (std::size_t j = i; j-- > 0;) e[j + 1] += e[j] * xi;
    e[0] += xi;
  }
  return e;
}

// Integer expansion in the elementary basis: exponent tuple over sigma_1..k
// mapped to its coefficient. Tuples iterate in descending lexicographic order,
// which matches how the coefficient tables are conventionally listed.
class SymExpansion {
 public:
  struct LexGreater {
    bool operator()(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) const {
      return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
  };
  using CoeffMap = std::map<std::vector<std::uint32_t>, Int, LexGreater>;

  explicit SymExpansion(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }

  void add(std::vector<std::uint32_t> tuple, Int coeff) {
    if (tuple.size() != arity_) throw std::invalid_argument("SymExpansion: tuple arity mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(std::move(tuple), std::move(coeff));
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  const CoeffMap& coeffs() const { return coeffs_; }

  bool operator==(const SymExpansion&) const = default;

  // Rebuilds the polynomial over the original variables (round-trip partner
  // of reduce_to_elementary).
  Polynomial expand(const VarTablePtr& table, const std::vector<std::size_t>& vars) const {
    if (vars.size() != arity_)
      throw std::invalid_argument("SymExpansion::expand: variable count != arity");
    std::vector<Polynomial> sigma = elementary_symmetrics(table, vars);
    Polynomial total(Int(0), table);
    for (const auto& [tuple, c] : coeffs_) {
      Polynomial term(c, table);
      for (std::size_t i = 0; i < arity_; ++i)
        if (tuple[i] != 0) term *= poly_pow(sigma[i], tuple[i]);
      total += term;
    }
    return total;
  }

  // "s1^2 - 4 s2" style rendering.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [tuple, c] : coeffs_) {
      Int a = c;
      if (first) {
        if (a < 0) {
          out << "-";
          a = -a;
        }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool printed = false;
      bool unit = std::all_of(tuple.begin(), tuple.end(), [](auto v) { return v == 0; });
      if (a != 1 || unit) {
        out << a.str();
        printed = true;
      }
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] == 0) continue;
        if (printed) out << " ";
        out << "s" << (i + 1);
        if (tuple[i] > 1) out << "^" << tuple[i];
        printed = true;
      }
    }
    return out.str();
  }

 private:
  std::size_t arity_;
  CoeffMap coeffs_;
};

// Gauss's algorithm: repeatedly subtract the sigma-monomial whose expansion
// has the same grlex-leading term. Requires p symmetric in the listed
// variables and free of all other variables.
inline SymExpansion reduce_to_elementary(const Polynomial& p, std::vector<std::size_t> vars) {
  if (vars.empty()) throw std::invalid_argument("reduce_to_elementary: no variables listed");
  // Work in table order: grlex priority must agree with the listed set.
  std::sort(vars.begin(), vars.end());
  for (const auto& [m, c] : p)
    for (std::size_t i = 0; i < m.width(); ++i)
      if (m.exponent(i) != 0 && !std::binary_search(vars.begin(), vars.end(), i))
        throw NotSymmetric("reduce_to_elementary: polynomial involves an unlisted variable");
  if (!is_symmetric(p, vars)) throw NotSymmetric("reduce_to_elementary: input is not symmetric");

  const std::size_t k = vars.size();
  std::vector<Polynomial> sigma = elementary_symmetrics(p.vars(), vars);
  SymExpansion out(k);
  Polynomial rem = p;
  while (!rem.is_zero()) {
    // Copy the leading term: the subtraction below erases it from rem.
    const Monomial mono = rem.leading().first;
    const Int c = rem.leading().second;
    std::vector<std::uint32_t> lambda(k);
    for (std::size_t i = 0; i < k; ++i) lambda[i] = mono.exponent(vars[i]);
    std::vector<std::uint32_t> tuple(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t next = (i + 1 < k) ? lambda[i + 1] : 0;
      if (lambda[i] < next)
        throw NotSymmetric("reduce_to_elementary: leading exponents not weakly decreasing");
      tuple[i] = lambda[i] - next;
    }
    Polynomial term(c, p.vars());
    for (std::size_t i = 0; i < k; ++i)
      if (tuple[i] != 0) term *= poly_pow(sigma[i], tuple[i]);
    rem -= term;
    out.add(std::move(tuple), c);
  }
  return out;
}

}  // namespace nval
