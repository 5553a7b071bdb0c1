#pragma once

// Sparse multivariate polynomials over arbitrary-precision integers.
//
//   * canonical form: no zero coefficients are ever stored;
//   * deterministic term order: graded-lexicographic, leading term first;
//   * all arithmetic is exact; the only divisions are the ring-exact ones
//     (Bareiss pivots, symmetric reduction, integer content), each asserted.
//
// Values are immutable in practice (operations return new polynomials), so
// they are safe to share across threads.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nval/integer.hpp"
#include "nval/monomial.hpp"
#include "nval/vartable.hpp"

namespace nval {

// reduce_w_power met an exponent that is not a multiple of n. This is the
// operational form of the "char poly is a polynomial in w^n" invariant, so it
// always signals a bug in the calling computation rather than bad user input.
class WNotEliminable : public std::runtime_error {
 public:
  explicit WNotEliminable(const std::string& what) : std::runtime_error(what) {}
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int, GrlexGreater>;

  Polynomial() = default;  // zero in the constant context

  Polynomial(long long c) {  // NOLINT: implicit by design (Eigen Scalar(0)/Scalar(1))
    if (c != 0) terms_.emplace(Monomial(), Int(c));
  }

  Polynomial(Int c) {  // NOLINT: implicit constant
    if (c != 0) terms_.emplace(Monomial(), std::move(c));
  }

  Polynomial(Int c, VarTablePtr vars) : vars_(std::move(vars)) {
    if (c != 0) terms_.emplace(Monomial(), std::move(c));
  }

  static Polynomial variable(const VarTablePtr& vars, std::size_t index, std::uint32_t power = 1) {
    if (!vars || index >= vars->size())
      throw std::invalid_argument("Polynomial::variable: index out of range");
    Polynomial p;
    p.vars_ = vars;
    if (power == 0)
      p.terms_.emplace(Monomial(), Int(1));
    else
      p.terms_.emplace(Monomial::var(index, power), Int(1));
    return p;
  }

  static Polynomial monomial(const VarTablePtr& vars, Monomial m, Int coeff) {
    if (vars && m.width() > vars->size())
      throw std::invalid_argument("Polynomial::monomial: exponent vector wider than table");
    if (!vars && !m.is_unit())
      throw std::invalid_argument("Polynomial::monomial: variables need a table");
    Polynomial p;
    p.vars_ = vars;
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
  }

  const VarTablePtr& vars() const { return vars_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }

  // The constant such that *this == that constant; throws otherwise.
  const Int& constant_value() const {
    static const Int kZero(0);
    if (terms_.empty()) return kZero;
    if (!is_constant()) throw std::logic_error("constant_value: polynomial is not constant");
    return terms_.begin()->second;
  }

  std::size_t term_count() const { return terms_.size(); }

  // Total degree; -1 for the zero polynomial.
  long total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.total_degree()));
    return d;
  }

  long degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.exponent(var)));
    return d;
  }

  // Grlex-leading term; polynomial must be nonzero.
  const std::pair<const Monomial, Int>& leading() const {
    if (terms_.empty()) throw std::logic_error("leading: zero polynomial");
    return *terms_.begin();
  }

  const Int* coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  TermMap::const_iterator begin() const { return terms_.begin(); }
  TermMap::const_iterator end() const { return terms_.end(); }

  Polynomial& operator+=(const Polynomial& o) {
    vars_ = unify_tables(vars_, o.vars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    vars_ = unify_tables(vars_, o.vars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.vars_ = unify_tables(a.vars_, b.vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial& operator*=(const Int& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }

  friend Polynomial operator*(Polynomial a, const Int& k) { return a *= k; }
  friend Polynomial operator*(const Int& k, Polynomial a) { return a *= k; }

  // Plain integer literals would otherwise be ambiguous between the Int and
  // Polynomial conversions above.
  friend Polynomial operator*(Polynomial a, long long k) { return a *= Int(k); }
  friend Polynomial operator*(long long k, Polynomial a) { return a *= Int(k); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ && b.vars_ && !(a.vars_ == b.vars_ || a.vars_->same_names(*b.vars_)))
      return false;
    return a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
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
      if (a != 1 || m.is_unit()) {
        out << a.str();
        printed = true;
      }
      for (std::size_t i = 0; i < m.width(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (printed) out << "*";
        out << (vars_ ? vars_->name(i) : "v" + std::to_string(i));
        if (m.exponent(i) > 1) out << "^" << m.exponent(i);
        printed = true;
      }
    }
    return out.str();
  }

 private:
  void add_term(const Monomial& m, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
  VarTablePtr vars_;
};

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b) { return a - b; }
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

inline Polynomial poly_pow(const Polynomial& a, unsigned long e) {
  Polynomial acc(Int(1), a.vars());
  Polynomial base = a;
  while (e != 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

// Exact substitution var := value. `value` must share the table or be constant.
inline Polynomial substitute(const Polynomial& p, std::size_t var, const Polynomial& value) {
  const VarTablePtr& table = unify_tables(p.vars(), value.vars());
  std::vector<Polynomial> powers{Polynomial(Int(1), table)};
  auto power = [&](std::uint32_t k) -> const Polynomial& {
    while (powers.size() <= k) powers.push_back(powers.back() * value);
    return powers[k];
  };
  Polynomial result(Int(0), table);
  for (const auto& [m, c] : p) {
    std::uint32_t k = m.exponent(var);
    std::vector<std::uint32_t> rest(m.raw());
    if (var < rest.size()) rest[var] = 0;
    result += Polynomial::monomial(table, Monomial(std::move(rest)), c) * power(k);
  }
  return result;
}

// Rewrites every monomial var^{kn}·M as base^k·M; the result contains no var.
// Exponents of var that are not multiples of n throw WNotEliminable.
inline Polynomial reduce_power(const Polynomial& p, std::size_t var, unsigned n,
                               const Polynomial& base) {
  if (n == 0) throw std::invalid_argument("reduce_power: n must be positive");
  const VarTablePtr& table = unify_tables(p.vars(), base.vars());
  std::vector<Polynomial> powers{Polynomial(Int(1), table)};
  auto power = [&](std::uint32_t k) -> const Polynomial& {
    while (powers.size() <= k) powers.push_back(powers.back() * base);
    return powers[k];
  };
  Polynomial result(Int(0), table);
  for (const auto& [m, c] : p) {
    std::uint32_t e = m.exponent(var);
    if (e % n != 0)
      throw WNotEliminable("reduce_power: exponent " + std::to_string(e) +
                           " of eliminated variable is not a multiple of " + std::to_string(n));
    std::vector<std::uint32_t> rest(m.raw());
    if (var < rest.size()) rest[var] = 0;
    result += Polynomial::monomial(table, Monomial(std::move(rest)), c) * power(e / n);
  }
  return result;
}

// The w^n = z elimination: w^{kn}·M -> z^k·M.
inline Polynomial reduce_w_power(const Polynomial& p, std::size_t w, std::size_t z, unsigned n) {
  return reduce_power(p, w, n, Polynomial::variable(p.vars(), z));
}

// Exact quotient p/k over the integers; throws InexactDivision.
inline Polynomial exact_div(const Polynomial& p, const Int& k) {
  Polynomial r(Int(0), p.vars());
  for (const auto& [m, c] : p) r += Polynomial::monomial(p.vars(), m, exact_div(c, k));
  return r;
}

// Exact multivariate quotient p/q in Z[x...]; nullopt when q does not divide p.
// Standard leading-term division: when the quotient exists it is found (the
// ring is a domain and grlex is a monomial order), and the iteration strictly
// decreases the grlex-leading term, so it always terminates.
inline std::optional<Polynomial> try_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) return std::nullopt;
  Polynomial rem = p;
  Polynomial quot(Int(0), unify_tables(p.vars(), q.vars()));
  const auto& [qm, qc] = q.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    auto m = rm.divide(qm);
    if (!m) return std::nullopt;
    Int c, r;
    boost::multiprecision::divide_qr(rc, qc, c, r);
    if (r != 0) return std::nullopt;
    Polynomial t = Polynomial::monomial(quot.vars(), std::move(*m), std::move(c));
    quot += t;
    rem -= t * q;
  }
  return quot;
}

inline Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  auto r = try_div(p, q);
  if (!r) throw InexactDivision("exact_div: polynomial division left a remainder");
  return std::move(*r);
}

// Gcd of all coefficients (non-negative); 0 for the zero polynomial.
inline Int content(const Polynomial& p) {
  Int g(0);
  for (const auto& [m, c] : p) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

// Every term has total degree == degree. The zero polynomial (degree -1 by
// convention) is homogeneous of every degree.
inline bool is_homogeneous(const Polynomial& p, long degree) {
  if (p.is_zero()) return true;
  for (const auto& [m, c] : p)
    if (static_cast<long>(m.total_degree()) != degree) return false;
  return true;
}

inline Polynomial derivative(const Polynomial& p, std::size_t var) {
  Polynomial r(Int(0), p.vars());
  for (const auto& [m, c] : p) {
    std::uint32_t e = m.exponent(var);
    if (e == 0) continue;
    std::vector<std::uint32_t> exps(m.raw());
    exps[var] = e - 1;
    r += Polynomial::monomial(p.vars(), Monomial(std::move(exps)), c * Int(e));
  }
  return r;
}

// Transplants p onto another table. Exponents must fit inside the new table;
// positions are preserved (callers map variables by index, not by name).
inline Polynomial retable(const Polynomial& p, const VarTablePtr& table) {
  Polynomial r(Int(0), table);
  for (const auto& [m, c] : p) {
    if (table && m.width() > table->size())
      throw std::invalid_argument("retable: monomial exceeds target table");
    r += Polynomial::monomial(table, m, c);
  }
  return r;
}

// Generic evaluation; T must support T += T, T *= T and construction from
// double (coefficients convert through long double only when T is inexact —
// use evaluate<Int> for exact work).
template <class T>
T evaluate(const Polynomial& p, const std::vector<T>& values) {
  T total{};
  for (const auto& [m, c] : p) {
    T term = static_cast<T>(c.template convert_to<double>());
    for (std::size_t i = 0; i < m.width(); ++i)
      for (std::uint32_t k = 0; k < m.exponent(i); ++k) term *= values.at(i);
    total += term;
  }
  return total;
}

template <>
inline Int evaluate<Int>(const Polynomial& p, const std::vector<Int>& values) {
  Int total(0);
  for (const auto& [m, c] : p) {
    Int term = c;
    for (std::size_t i = 0; i < m.width(); ++i)
      for (std::uint32_t k = 0; k < m.exponent(i); ++k) term *= values.at(i);
    total += term;
  }
  return total;
}

// Scalar hooks for the generic exact linear algebra (ADL).
inline bool ring_is_zero(const Polynomial& p) { return p.is_zero(); }
inline Polynomial ring_one(const Polynomial&) { return Polynomial(Int(1)); }
inline Polynomial ring_exact_div(const Polynomial& a, const Polynomial& b) {
  return exact_div(a, b);
}

}  // namespace nval
