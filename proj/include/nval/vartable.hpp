#pragma once

// Ordered variable tables. A Polynomial references its table by shared
// pointer; indices are stable for the table's lifetime. A null table denotes
// the "constant context": literals that combine with polynomials over any
// table (this is what lets Eigen build identity matrices of polynomials
// without knowing the variables up front).

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace nval {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

class VarTable {
 public:
  static VarTablePtr create(std::vector<std::string> names) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names) {
      if (n.empty()) throw std::invalid_argument("VarTable: empty variable name");
      if (!seen.insert(n).second)
        throw std::invalid_argument("VarTable: duplicate variable name '" + n + "'");
    }
    return VarTablePtr(new VarTable(std::move(names)));
  }

  std::size_t size() const { return names_.size(); }

  const std::string& name(std::size_t i) const { return names_.at(i); }

  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw std::invalid_argument("VarTable: unknown variable '" + std::string(name) + "'");
  }

  bool same_names(const VarTable& other) const { return names_ == other.names_; }

 private:
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

// Two tables are compatible when either is null (constant context) or their
// name lists agree; returns the governing table for a result.
inline const VarTablePtr& unify_tables(const VarTablePtr& a, const VarTablePtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->same_names(*b)) return a;
  throw std::invalid_argument("mismatched variable tables");
}

}  // namespace nval
