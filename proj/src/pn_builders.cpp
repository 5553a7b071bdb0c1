#include "nval/pn_builders.hpp"

#include <functional>

#include "nval/elimination.hpp"

namespace nval {

namespace {

// (-1)^(n+1): the sign carried by every companion argument and by the x_1
// term of the block-power route.
Int route_twist(int n) { return (n % 2 == 0) ? Int(-1) : Int(1); }

// (-1)^n: the sign of the u^n -> x, v^n -> y substitutions and of the
// resultant prefactor.
Int parity_sign(int n) { return (n % 2 == 0) ? Int(1) : Int(-1); }

void check_order(int n, long order_exponent) {
  Int order = ipow(Int(n), static_cast<unsigned long>(order_exponent));
  if (order > 243)
    throw std::invalid_argument("pn builder: symbolic matrix order " + order.str() +
                                " exceeds the supported bound 243");
}

// Companion matrix with characteristic polynomial t^n + (-1)^(n+1) x_j.
PolyMatrix twisted_companion(const PnContext& ctx, int n, std::size_t xj) {
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(n), Polynomial(Int(0), ctx.table));
  coeffs[0] = Polynomial::variable(ctx.table, xj) * route_twist(n);
  return companion(coeffs);
}

// Kronecker sum of the twisted companions of x_(first+1) .. x_m.
PolyMatrix companion_kronecker_sum(const PnContext& ctx, int n, std::size_t first) {
  PolyMatrix k = twisted_companion(ctx, n, ctx.x[first]);
  for (std::size_t j = first + 1; j < ctx.x.size(); ++j)
    k = kronecker_sum<Polynomial>(k, twisted_companion(ctx, n, ctx.x[j]));
  return k;
}

// A = wI - (F(x_2) boxplus ... boxplus F(x_m)); B = A^n + (-1)^(n+1) x_1 I.
PolyMatrix block_power_matrix(const PnContext& ctx, int n) {
  PolyMatrix k = companion_kronecker_sum(ctx, n, 1);
  PolyMatrix a = -k;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    a(i, i) += Polynomial::variable(ctx.table, ctx.w);
  PolyMatrix b = mat_pow<Polynomial>(a, static_cast<unsigned>(n));
  const Polynomial x1 = Polynomial::variable(ctx.table, ctx.x[0]) * route_twist(n);
  for (Eigen::Index i = 0; i < b.rows(); ++i) b(i, i) += x1;
  return b;
}

void validate_nm(int n, int m, int min_m) {
  if (n < 1) throw std::invalid_argument("pn builder: n must be at least 1");
  if (m < min_m)
    throw std::invalid_argument("pn builder: m must be at least " + std::to_string(min_m));
}

}  // namespace

PnContext make_pn_context(int m) {
  if (m < 1) throw std::invalid_argument("make_pn_context: m must be at least 1");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m) + 2);
  names.emplace_back("z");
  for (int j = 1; j <= m; ++j) names.emplace_back("x" + std::to_string(j));
  names.emplace_back("w");
  PnContext ctx;
  ctx.table = VarTable::create(std::move(names));
  ctx.z = 0;
  for (int j = 1; j <= m; ++j) ctx.x.push_back(static_cast<std::size_t>(j));
  ctx.w = static_cast<std::size_t>(m) + 1;
  return ctx;
}

const char* pn_route_name(PnRoute route) {
  switch (route) {
    case PnRoute::KroneckerCharPoly: return "kronecker";
    case PnRoute::WendtDet: return "wendt";
    case PnRoute::BlockPower: return "blockpower";
    case PnRoute::Resultant: return "resultant";
    case PnRoute::PowerSums: return "powersums";
  }
  throw std::logic_error("pn_route_name: unknown route");
}

std::string pn_block_power_convention() {
  return "companion arguments twisted as (-1)^(n+1)*x_j in every matrix route; "
         "the untwisted variant disagrees with the Kronecker route for even n";
}

Polynomial pn_kronecker(int n, int m) {
  validate_nm(n, m, 1);
  check_order(n, m);
  PnContext ctx = make_pn_context(m);
  PolyMatrix k = companion_kronecker_sum(ctx, n, 0);
  Polynomial chi = char_poly(k, ctx.table, ctx.w);
  return reduce_w_power(chi, ctx.w, ctx.z, static_cast<unsigned>(n));
}

PolyMatrix wendt_xyz_matrix(int n) {
  validate_nm(n, 2, 2);
  PnContext ctx = make_pn_context(2);
  const Polynomial x = Polynomial::variable(ctx.table, ctx.x[0]);
  const Polynomial y = Polynomial::variable(ctx.table, ctx.x[1]);
  const Polynomial diag =
      Polynomial::variable(ctx.table, ctx.w, static_cast<std::uint32_t>(n)) + x * route_twist(n) + y;
  PolyMatrix w = poly_zero_matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        w(i, j) = diag;
      } else if (j > i) {
        const auto d = static_cast<std::uint32_t>(j - i);
        w(i, j) = y * binomial(static_cast<unsigned long>(n), d) *
                  Polynomial::variable(ctx.table, ctx.w, d);
      } else {
        const auto d = static_cast<std::uint32_t>(n - (i - j));
        w(i, j) = Polynomial(binomial(static_cast<unsigned long>(n), d), ctx.table) *
                  Polynomial::variable(ctx.table, ctx.w, d);
      }
    }
  return w;
}

Polynomial pn_wendt(int n) {
  validate_nm(n, 2, 2);
  check_order(n, 1);
  PnContext ctx = make_pn_context(2);
  Polynomial det = det_bareiss<Polynomial>(wendt_xyz_matrix(n));
  return reduce_w_power(det, ctx.w, ctx.z, static_cast<unsigned>(n));
}

Polynomial pn_block_power(int n, int m) {
  validate_nm(n, m, 2);
  check_order(n, m - 1);
  PnContext ctx = make_pn_context(m);
  Polynomial det = det_bareiss<Polynomial>(block_power_matrix(ctx, n));
  return reduce_w_power(det, ctx.w, ctx.z, static_cast<unsigned>(n));
}

Polynomial pn_resultant(int n) {
  validate_nm(n, 2, 2);
  check_order(n, 1);
  PnContext ctx = make_pn_context(2);
  VarTablePtr ext = VarTable::create({"z", "x1", "x2", "w", "u", "v", "t"});
  const std::size_t iu = 4, iv = 5, it = 6;
  const Polynomial u = Polynomial::variable(ext, iu);
  const Polynomial v = Polynomial::variable(ext, iv);
  const Polynomial t = Polynomial::variable(ext, it);

  // res_t(z - (u + v t)^n, t^n - 1), then the prefactor (-1)^n and the
  // substitutions u^n -> (-1)^n x_1, v^n -> (-1)^n x_2.
  Polynomial q = Polynomial::variable(ext, 0) - poly_pow(u + v * t, static_cast<unsigned>(n));
  Polynomial tn = Polynomial::variable(ext, it, static_cast<std::uint32_t>(n)) - Polynomial(Int(1), ext);
  Polynomial res = sylvester_resultant(UniPoly::from_polynomial(q, it),
                                       UniPoly::from_polynomial(tn, it)) *
                   parity_sign(n);
  res = reduce_power(res, iu, static_cast<unsigned>(n),
                     Polynomial::variable(ext, 1) * parity_sign(n));
  res = reduce_power(res, iv, static_cast<unsigned>(n),
                     Polynomial::variable(ext, 2) * parity_sign(n));
  Polynomial pn = retable(res, ctx.table);

  const Polynomial lead = UniPoly::from_polynomial(pn, ctx.z).leading();
  if (!(lead == Polynomial(Int(1), ctx.table)))
    throw CrossCheckFailure("pn_resultant: global sign residue, leading z-coefficient is " +
                            lead.to_string());
  return pn;
}

Polynomial pn_power_sums(int n, int m) {
  validate_nm(n, m, 1);
  check_order(n, m - 1);
  PnContext ctx = make_pn_context(m);
  const auto big_n = static_cast<std::size_t>(
      ipow(Int(n), static_cast<unsigned long>(m - 1)).convert_to<unsigned long>());

  // Power sums of the roots: P_k = (-1)^(nk) n^(m-1) sum over compositions
  // j_1+...+j_m = k of multinom(nk; n j_1, ..., n j_m) x^j.
  const Int scale = ipow(Int(n), static_cast<unsigned long>(m - 1));
  std::vector<Polynomial> p(big_n + 1, Polynomial(Int(0), ctx.table));
  std::vector<unsigned long> parts(static_cast<std::size_t>(m), 0);
  for (std::size_t k = 1; k <= big_n; ++k) {
    Polynomial pk(Int(0), ctx.table);
    std::function<void(std::size_t, unsigned long)> emit = [&](std::size_t idx,
                                                               unsigned long remaining) {
      if (idx + 1 == parts.size()) {
        parts[idx] = remaining;
        std::vector<unsigned long> scaled(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
          scaled[i] = parts[i] * static_cast<unsigned long>(n);
        std::vector<std::uint32_t> exp(ctx.table->size(), 0);
        for (std::size_t i = 0; i < parts.size(); ++i)
          exp[ctx.x[i]] = static_cast<std::uint32_t>(parts[i]);
        pk += Polynomial::monomial(ctx.table, Monomial(std::move(exp)), multinomial(scaled));
        return;
      }
      for (unsigned long val = 0; val <= remaining; ++val) {
        parts[idx] = val;
        emit(idx + 1, remaining - val);
      }
    };
    emit(0, static_cast<unsigned long>(k));
    pk *= scale;
    if ((static_cast<unsigned long>(n) * k) % 2 != 0) pk *= Int(-1);
    p[k] = std::move(pk);
  }

  // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} P_i.
  std::vector<Polynomial> e(big_n + 1, Polynomial(Int(0), ctx.table));
  e[0] = Polynomial(Int(1), ctx.table);
  for (std::size_t k = 1; k <= big_n; ++k) {
    Polynomial acc(Int(0), ctx.table);
    for (std::size_t i = 1; i <= k; ++i) {
      Polynomial term = e[k - i] * p[i];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    e[k] = exact_div(acc, Int(k));
  }

  Polynomial result(Int(0), ctx.table);
  for (std::size_t k = 0; k <= big_n; ++k) {
    Polynomial term = e[k] * Polynomial::variable(ctx.table, ctx.z,
                                                  static_cast<std::uint32_t>(big_n - k));
    if (k % 2 != 0) term = -term;
    result += term;
  }
  return result;
}

Polynomial pn_build(const PnRequest& req) {
  switch (req.route) {
    case PnRoute::KroneckerCharPoly:
      return pn_kronecker(req.n, req.m);
    case PnRoute::WendtDet:
      if (req.m != 2) throw std::invalid_argument("pn_build: Wendt route requires m = 2");
      return pn_wendt(req.n);
    case PnRoute::BlockPower:
      return pn_block_power(req.n, req.m);
    case PnRoute::Resultant:
      if (req.m != 2) throw std::invalid_argument("pn_build: resultant route requires m = 2");
      return pn_resultant(req.n);
    case PnRoute::PowerSums:
      return pn_power_sums(req.n, req.m);
  }
  throw std::logic_error("pn_build: unknown route");
}

OrthoSymmetryReport orthosymmetry_check(int n, int m) {
  validate_nm(n, m, 2);
  check_order(n, m - 1);
  PnContext ctx = make_pn_context(m);
  PolyMatrix b = block_power_matrix(ctx, n);

  OrthoSymmetryReport report;
  report.b_anti_symmetric = mats_equal<Polynomial>(b, anti_transpose<Polynomial>(b));

  // W_{m,n}: evaluate at w = 1, x_1 = (-1)^n, x_2 = ... = x_m = 1.
  std::vector<Int> values(ctx.table->size(), Int(1));
  values[ctx.x[0]] = parity_sign(n) < 0 ? Int(-1) : Int(1);
  IntMatrix w(b.rows(), b.cols());
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) w(i, j) = evaluate<Int>(b(i, j), values);
  IntMatrix wt(w.cols(), w.rows());
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j) wt(j, i) = w(i, j);
  report.w_symmetric = mats_equal<Int>(w, wt);
  report.w_anti_symmetric = mats_equal<Int>(w, anti_transpose<Int>(w));
  report.ok = report.b_anti_symmetric && report.w_symmetric && report.w_anti_symmetric;
  return report;
}

}  // namespace nval
