#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sagbi_forge/errors.hpp"

namespace sagbi_forge {

enum class Role { x, xp, yp, y, z, aux };

/// Ordered alphabet of a polynomial ring. The list order is the variable
/// ranking used by every lexicographic comparison (first = largest).
class VariableTable {
 public:
  VariableTable(std::vector<std::string> names, std::vector<Role> roles)
      : names_(std::move(names)), roles_(std::move(roles)) {
    if (names_.empty()) throw DomainError("variable table must be nonempty");
    if (roles_.size() != names_.size()) throw DimensionError("one role per variable required");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw DomainError("duplicate variable name: " + names_[i]);
    }
  }

  explicit VariableTable(std::vector<std::string> names, Role role = Role::aux)
      : VariableTable(names, std::vector<Role>(names.size(), role)) {}

  [[nodiscard]] std::size_t count() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
  [[nodiscard]] Role role(std::size_t i) const { return roles_.at(i); }
  [[nodiscard]] const std::vector<Role>& roles() const { return roles_; }

  [[nodiscard]] std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] std::size_t index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw DomainError("unknown variable: " + name);
    return *i;
  }

  friend bool operator==(const VariableTable& a, const VariableTable& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Role> roles_;
  std::unordered_map<std::string, std::size_t> index_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline TablePtr make_table(std::vector<std::string> names, Role role = Role::aux) {
  return std::make_shared<const VariableTable>(std::move(names), role);
}
inline TablePtr make_table(std::vector<std::string> names, std::vector<Role> roles) {
  return std::make_shared<const VariableTable>(std::move(names), std::move(roles));
}

inline bool same_table(const TablePtr& a, const TablePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_table(const TablePtr& a, const TablePtr& b) {
  if (!same_table(a, b)) throw DimensionError("polynomials live over different variable tables");
}

/// x_1..x_d, y_1..y_d: the ambient ring of a graph on d vertices.
inline TablePtr graph_table(std::size_t d) {
  std::vector<std::string> names;
  std::vector<Role> roles;
  for (std::size_t i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i)), roles.push_back(Role::x);
  for (std::size_t i = 1; i <= d; ++i) names.push_back("y" + std::to_string(i)), roles.push_back(Role::y);
  return make_table(std::move(names), std::move(roles));
}

/// S_{a,b}: x_1..x_a, x'_1..x'_b, y'_1..y'_a, y_1..y_b in ranking order.
inline TablePtr kab_table(std::size_t a, std::size_t b) {
  std::vector<std::string> names;
  std::vector<Role> roles;
  auto push = [&](const char* prefix, std::size_t n, Role r) {
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i)), roles.push_back(r);
  };
  push("x", a, Role::x);
  push("xp", b, Role::xp);
  push("yp", a, Role::yp);
  push("y", b, Role::y);
  return make_table(std::move(names), std::move(roles));
}

}  // namespace sagbi_forge
