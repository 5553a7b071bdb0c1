#pragma once

// Exponent vectors with graded-lexicographic comparison. Stored trimmed (no
// trailing zeros) so that structural equality is plain vector equality and a
// monomial is independent of how many further variables its table happens to
// carry.

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace nval {

class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) { trim(); }

  static Monomial var(std::size_t index, std::uint32_t power = 1) {
    if (power == 0) return Monomial();
    std::vector<std::uint32_t> e(index + 1, 0);
    e[index] = power;
    return Monomial(std::move(e));
  }

  std::uint32_t exponent(std::size_t i) const { return i < e_.size() ? e_[i] : 0; }

  // Number of leading positions that may be nonzero (index of last nonzero +1).
  std::size_t width() const { return e_.size(); }

  bool is_unit() const { return e_.empty(); }

  unsigned long total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0UL);
  }

  Monomial operator*(const Monomial& o) const {
    std::vector<std::uint32_t> e(std::max(e_.size(), o.e_.size()));
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent(i) + o.exponent(i);
    return Monomial(std::move(e));
  }

  // Exponent-wise quotient; nullopt when some exponent of o exceeds ours.
  std::optional<Monomial> divide(const Monomial& o) const {
    if (o.e_.size() > e_.size()) {
      for (std::size_t i = e_.size(); i < o.e_.size(); ++i)
        if (o.e_[i] != 0) return std::nullopt;
    }
    std::vector<std::uint32_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      std::uint32_t oe = o.exponent(i);
      if (oe > e_[i]) return std::nullopt;
      e[i] = e_[i] - oe;
    }
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial&) const = default;

  // Graded-lexicographic: higher total degree first; ties broken
  // lexicographically with the earlier table variable more significant.
  static int grlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t n = std::max(a.e_.size(), b.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
  }

  const std::vector<std::uint32_t>& raw() const { return e_; }

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }
  std::vector<std::uint32_t> e_;
};

// Map comparator putting the grlex-largest (leading) monomial first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::grlex_cmp(a, b) > 0;
  }
};

}  // namespace nval
