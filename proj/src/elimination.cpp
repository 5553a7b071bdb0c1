#include "nval/elimination.hpp"

#include <utility>

#include "nval/pn_builders.hpp"
#include "nval/polymatrix.hpp"

namespace nval {

namespace {

const Polynomial& zero_poly() {
  static const Polynomial kZero;
  return kZero;
}

}  // namespace

UniPoly::UniPoly(VarTablePtr table, std::size_t var, std::vector<Polynomial> coeffs)
    : table_(std::move(table)), var_(var), coeffs_(std::move(coeffs)) {
  if (!table_) throw std::invalid_argument("UniPoly: null variable table");
  if (var_ >= table_->size()) throw std::invalid_argument("UniPoly: variable index out of range");
  for (auto& c : coeffs_) {
    unify_tables(table_, c.vars());
    if (c.degree_in(var_) > 0)
      throw std::invalid_argument("UniPoly: coefficient involves the main variable");
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  const VarTablePtr& table = p.vars();
  if (!table) throw std::invalid_argument("UniPoly: polynomial has no variable table");
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(p.degree_in(var) + 1),
                                 Polynomial(Int(0), table));
  for (const auto& [mono, c] : p) {
    const std::uint32_t k = mono.exponent(var);
    std::vector<std::uint32_t> exp(mono.raw());
    if (var < exp.size()) exp[var] = 0;
    coeffs[k] += Polynomial::monomial(table, Monomial(std::move(exp)), c);
  }
  return UniPoly(table, var, std::move(coeffs));
}

Polynomial UniPoly::to_polynomial() const {
  Polynomial acc(Int(0), table_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    acc += coeffs_[k] * Polynomial::variable(table_, var_, static_cast<std::uint32_t>(k));
  }
  return acc;
}

const Polynomial& UniPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : zero_poly();
}

const Polynomial& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("UniPoly: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

UniPoly derivative(const UniPoly& f) {
  std::vector<Polynomial> coeffs;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(std::max<long>(f.degree(), 0)); ++k)
    coeffs.push_back(f.coeff(k) * Int(k));
  return UniPoly(f.table(), f.var(), std::move(coeffs));
}

Polynomial sylvester_resultant(const UniPoly& f, const UniPoly& g) {
  if (f.var() != g.var()) throw std::invalid_argument("sylvester_resultant: different main variables");
  unify_tables(f.table(), g.table());
  const long df = f.degree(), dg = g.degree();
  if (df <= 0 && dg <= 0)
    throw std::invalid_argument("sylvester_resultant: both arguments have degree <= 0");
  if (df < 0 || dg < 0) return Polynomial(Int(0), f.table());
  if (df == 0) return poly_pow(f.coeff(0), static_cast<unsigned>(dg));
  if (dg == 0) return poly_pow(g.coeff(0), static_cast<unsigned>(df));
  const Eigen::Index size = static_cast<Eigen::Index>(df + dg);
  PolyMatrix s = PolyMatrix::Constant(size, size, Polynomial(Int(0), f.table()));
  for (long i = 0; i < dg; ++i)
    for (long j = 0; j <= df; ++j) s(i, i + j) = f.coeff(static_cast<std::size_t>(df - j));
  for (long i = 0; i < df; ++i)
    for (long j = 0; j <= dg; ++j) s(dg + i, i + j) = g.coeff(static_cast<std::size_t>(dg - j));
  return det_bareiss<Polynomial>(s);
}

Polynomial discriminant(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant: degree must be at least 1");
  return exact_div(sylvester_resultant(f, derivative(f)), f.leading());
}

DiscIdentityReport discriminant_identity_check(int n) {
  if (n < 2 || n > 12) throw std::invalid_argument("discriminant_identity_check: n must be in 2..12");
  PnContext ctx = make_pn_context(2);
  VarTablePtr table = VarTable::create({"z", "x1", "x2", "w", "T"});
  const std::size_t t_index = 4;
  const Int twist = (n % 2 == 0) ? Int(1) : Int(-1);  // (-1)^n

  const Polynomial z = Polynomial::variable(table, ctx.z);
  const Polynomial x = Polynomial::variable(table, ctx.x[0]);
  const Polynomial y = Polynomial::variable(table, ctx.x[1]);
  const Polynomial t = Polynomial::variable(table, t_index);
  const Polynomial tn1 = Polynomial::variable(table, t_index, static_cast<std::uint32_t>(n - 1));

  // ((-1)^n x T^(n-1) + (-1)^n y)(1+T)^(n-1) - T^(n-1) z
  Polynomial param = (x * twist * tn1 + y * twist) *
                         poly_pow(t + Polynomial(Int(1), table), static_cast<unsigned>(n - 1)) -
                     tn1 * z;
  Polynomial disc = discriminant(UniPoly::from_polynomial(param, t_index));

  Polynomial pn = retable(pn_power_sums(n, 2), table);
  Polynomial divisor = poly_pow(x * y * z, static_cast<unsigned>(n - 2)) * pn;
  Polynomial quotient = exact_div(disc, divisor);
  if (!quotient.is_constant())
    throw CrossCheckFailure("discriminant_identity_check: quotient is not constant");

  DiscIdentityReport report;
  report.n = n;
  report.constant = quotient.constant_value();
  report.expected_abs = ipow(Int(n - 1), static_cast<unsigned>(2 * n - 2));
  report.sign = report.constant < 0 ? -1 : 1;
  report.ok = abs(report.constant) == report.expected_abs;
  return report;
}

}  // namespace nval
