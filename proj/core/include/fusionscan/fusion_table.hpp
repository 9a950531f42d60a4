#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusionscan/group.hpp"
#include "fusionscan/signature.hpp"

namespace fusionscan {

/// The involution x -> x* on simple-object indices.
struct DualityAssignment {
  std::vector<int> dual;

  int operator()(int x) const { return dual[static_cast<std::size_t>(x)]; }
  std::size_t size() const noexcept { return dual.size(); }
  friend bool operator==(const DualityAssignment&, const DualityAssignment&) = default;
  friend auto operator<=>(const DualityAssignment&, const DualityAssignment&) = default;
};

/// A candidate Grothendieck-ring datum.
///
/// Index 0 is the unit; indices 0..group.order()-1 are the invertible simples,
/// identified with group elements. tensor(a, b, c) is the multiplicity N_{ab}^c
/// of c in a*b. Construction checks shapes only; ring laws are checked by
/// verifyFusionTable.
class FusionTable {
 public:
  FusionTable(std::vector<Int> dims, GroupTable group, DualityAssignment dual, std::vector<int> tensor);

  int rank() const noexcept { return rank_; }
  const std::vector<Int>& dims() const noexcept { return dims_; }
  Int dim(int x) const { return dims_[static_cast<std::size_t>(x)]; }
  const GroupTable& group() const noexcept { return group_; }
  const DualityAssignment& duality() const noexcept { return dual_; }
  int dual(int x) const { return dual_(x); }
  int pointedCount() const noexcept { return group_.order(); }

  int N(int a, int b, int c) const { return tensor_[index(a, b, c)]; }
  int& N(int a, int b, int c) { return tensor_[index(a, b, c)]; }
  const std::vector<int>& tensor() const noexcept { return tensor_; }

  /// Sum of dim^2 over all simples.
  Int globalDim() const;
  /// The type of this table (dims must be sorted ascending past the unit block).
  TypeSignature signature() const;

  friend bool operator==(const FusionTable&, const FusionTable&) = default;

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(b)) *
               static_cast<std::size_t>(rank_) +
           static_cast<std::size_t>(c);
  }

  int rank_;
  std::vector<Int> dims_;
  GroupTable group_;
  DualityAssignment dual_;
  std::vector<int> tensor_;
};

/// The group ring of `g`: N_{ab}^c = [c = ab], all simples invertible.
FusionTable groupRingTable(const GroupTable& g);

/// Canonical JSON: {"rank", "dims", "dual", "group", "tensor"} with nested arrays, row-major.
std::string fusionTableToJson(const FusionTable& table);
FusionTable fusionTableFromJson(const std::string& json);

struct Violation {
  std::string law;
  std::vector<int> indices;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every broken ring law, each with the offending index tuple.
/// Checks unit, dual, reciprocity, conjugation, dimension, invertible-coset,
/// associativity and stabilizer laws by direct scan. Stops after `limit` hits.
std::vector<Violation> verifyFusionTable(const FusionTable& table, std::size_t limit = 1000);

/// G[x] = { g invertible : N_{gx}^x = 1 }, as a mask over group elements.
std::uint64_t stabilizerMask(const FusionTable& table, int x);

/// All subsets spanning a fusion subring (contain 0, closed under products and
/// duals), as sorted index lists. Exponential in the worst case; fine for the
/// ranks the solver handles.
std::vector<std::vector<int>> fusionSubrings(const FusionTable& table);

/// Fusion subrings whose dimension does not divide the global dimension.
std::vector<Violation> subringDivisibilityViolations(const FusionTable& table);

}  // namespace fusionscan
