#ifndef RESFORGE_REGISTRY_HPP
#define RESFORGE_REGISTRY_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace resforge {

enum class VarRole : std::uint8_t {
  MatrixEntry,  // X(i,j)
  DefectB,      // b(i,j) or b(i,j)^k, stored with i < j
  DefectC,      // c(u,t), stored with u < t
  SpecialZ,     // Z, Z1, Z2, ...
  Named,        // free-form
};

struct VariableInfo {
  std::string name;
  VarRole role = VarRole::Named;
  int i = 0, j = 0, k = 0;  // role indices; k is the superscript for DefectB
};

/// Signed variable access: skew-symmetric roles resolve swapped indices to
/// the negated canonical variable and equal indices to zero.
struct SignedVar {
  int index = -1;  // -1 means the value is identically zero
  int sign = 0;    // +1 / -1 / 0
};

/// Ordered list of named indeterminates with role tags. Immutable once built
/// (builders construct it fully before any polynomial references it).
class VariableRegistry {
 public:
  int add(VariableInfo info) {
    if (names_.count(info.name))
      throw std::invalid_argument("VariableRegistry: duplicate name " + info.name);
    if (info.role == VarRole::DefectB || info.role == VarRole::DefectC) {
      if (info.i >= info.j)
        throw std::invalid_argument("VariableRegistry: skew variable needs i < j");
    }
    int idx = static_cast<int>(vars_.size());
    names_.emplace(info.name, idx);
    key_index_.emplace(role_key(info.role, info.i, info.j, info.k), idx);
    vars_.push_back(std::move(info));
    return idx;
  }

  int add_named(const std::string& name) { return add({name, VarRole::Named, 0, 0, 0}); }

  int add_matrix_entry(int i, int j) {
    return add({"X(" + std::to_string(i) + "," + std::to_string(j) + ")", VarRole::MatrixEntry, i, j, 0});
  }

  int add_defect_b(int i, int j, int k = 0) {
    std::string name = "b(" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (k != 0) name += "^" + std::to_string(k);
    return add({name, VarRole::DefectB, i, j, k});
  }

  int add_defect_c(int u, int t) {
    return add({"c(" + std::to_string(u) + "," + std::to_string(t) + ")", VarRole::DefectC, u, t, 0});
  }

  int add_special_z(int t) {
    std::string name = t == 0 ? "Z" : "Z" + std::to_string(t);
    return add({name, VarRole::SpecialZ, t, 0, 0});
  }

  std::size_t size() const { return vars_.size(); }
  const VariableInfo& info(int idx) const { return vars_.at(idx); }
  const std::string& name(int idx) const { return vars_.at(idx).name; }

  int find(const std::string& name) const {
    auto it = names_.find(name);
    return it == names_.end() ? -1 : it->second;
  }

  int index_of(const std::string& name) const {
    int idx = find(name);
    if (idx < 0) throw std::invalid_argument("VariableRegistry: unknown variable " + name);
    return idx;
  }

  int x_var(int i, int j) const { return require(VarRole::MatrixEntry, i, j, 0); }

  /// b(i,j[,k]) with skew access: b(j,i) = -b(i,j), b(i,i) = 0.
  SignedVar b_var(int i, int j, int k = 0) const {
    if (i == j) return {-1, 0};
    int sign = 1;
    if (i > j) {
      std::swap(i, j);
      sign = -1;
    }
    return {require(VarRole::DefectB, i, j, k), sign};
  }

  /// c(u,t) with skew access.
  SignedVar c_var(int u, int t) const {
    if (u == t) return {-1, 0};
    int sign = 1;
    if (u > t) {
      std::swap(u, t);
      sign = -1;
    }
    return {require(VarRole::DefectC, u, t, 0), sign};
  }

  int z_var(int t = 0) const { return require(VarRole::SpecialZ, t, 0, 0); }

  bool has(VarRole role, int i, int j = 0, int k = 0) const {
    return key_index_.count(role_key(role, i, j, k)) != 0;
  }

 private:
  static std::uint64_t role_key(VarRole role, int i, int j, int k) {
    return (static_cast<std::uint64_t>(role) << 48) | (static_cast<std::uint64_t>(i & 0xffff) << 32) |
           (static_cast<std::uint64_t>(j & 0xffff) << 16) | static_cast<std::uint64_t>(k & 0xffff);
  }

  int require(VarRole role, int i, int j, int k) const {
    auto it = key_index_.find(role_key(role, i, j, k));
    if (it == key_index_.end())
      throw std::invalid_argument("VariableRegistry: no variable for role index (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
    return it->second;
  }

  std::vector<VariableInfo> vars_;
  std::map<std::string, int> names_;
  std::map<std::uint64_t, int> key_index_;
};

}  // namespace resforge

#endif
