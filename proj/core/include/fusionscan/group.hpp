#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusionscan/signature.hpp"

namespace fusionscan {

/// A finite group given by its multiplication table. Element 0 is the identity.
///
/// Orders are capped at 64 so that subsets fit in a 64-bit mask.
class GroupTable {
 public:
  static constexpr int kMaxOrder = 64;

  GroupTable() : GroupTable(1, {0}) {}
  /// `mult` is row-major: mult[a * order + b] = a*b. Throws Error if the
  /// table is not a group with identity 0.
  GroupTable(int order, std::vector<int> mult, std::string name = {});

  int order() const noexcept { return order_; }
  int mul(int a, int b) const noexcept { return mult_[static_cast<std::size_t>(a * order_ + b)]; }
  int inverse(int a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }
  int elementOrder(int a) const noexcept;
  const std::vector<int>& table() const noexcept { return mult_; }
  const std::string& name() const noexcept { return name_; }
  bool isAbelian() const noexcept;

  /// Small generating set, chosen greedily by decreasing element order.
  std::vector<int> generators() const;
  /// Every subgroup, as element masks, in increasing (size, mask) order.
  std::vector<std::uint64_t> subgroups() const;
  /// Smallest subgroup containing every element of `mask`.
  std::uint64_t closure(std::uint64_t mask) const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.mult_ == b.mult_;
  }

 private:
  int order_;
  std::vector<int> mult_;
  std::vector<int> inverse_;
  std::string name_;
};

/// Violations of the group axioms found by direct scan; empty for a group.
std::vector<std::string> checkGroupAxioms(int order, const std::vector<int>& mult);

/// Brute-force isomorphism test via generator images.
bool isomorphic(const GroupTable& a, const GroupTable& b);

inline int popcount(std::uint64_t m) { return __builtin_popcountll(m); }

}  // namespace fusionscan
