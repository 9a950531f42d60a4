#pragma once

#include <cstddef>
#include <vector>

#include "fusionscan/fusion_table.hpp"
#include "fusionscan/group.hpp"
#include "fusionscan/signature.hpp"

namespace fusionscan {

/// A contiguous run of simple-object indices sharing one dimension.
struct ClassBlock {
  Int dim;
  int begin;
  int count;
};

/// Index layout used throughout: unit block first, then classes by increasing dimension.
std::vector<ClassBlock> classBlocks(const TypeSignature& sig);
std::vector<Int> simpleDims(const TypeSignature& sig);
/// Display names: "1", "g1", ..., then "x3" for a lone simple or "x3_1", "x3_2", ... per class.
std::vector<std::string> simpleNames(const TypeSignature& sig);

/// Admissible dualities for `sig` over `group`.
///
/// On invertibles the duality is the group inverse; on each non-invertible
/// class it is an involution. With symmetry breaking, one representative per
/// relabeling class is returned: the first 2t members paired consecutively,
/// for t = 0..count/2. Without it, every involution is returned.
/// Precondition: group.order() == sig.pointedCount().
std::vector<DualityAssignment> enumerateDualities(const TypeSignature& sig, const GroupTable& group,
                                                  bool symmetryBreaking = true);

/// Thrown when frame enumeration would exceed its work limit.
class FrameLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Left actions of `group` on {0..k-1} with every stabilizer order dividing
/// `dimSquared`, as act[g*k + i]. Each labeled action appears exactly once.
std::vector<std::vector<int>> enumerateLabeledActions(const GroupTable& group, int k, Int dimSquared,
                                                      std::size_t limit = 200'000);

/// Fixed invertible structure for one search: the duality plus the left and
/// right actions of the invertibles on every simple.
struct Frame {
  DualityAssignment dual;
  std::vector<int> left;   // left[g * rank + x] = g x
  std::vector<int> right;  // right[x * n0 + g] = x g
  int rank = 0;
  int n0 = 0;

  int leftMul(int g, int x) const { return left[static_cast<std::size_t>(g * rank + x)]; }
  int rightMul(int x, int g) const { return right[static_cast<std::size_t>(x * n0 + g)]; }
};

/// All frames over (group, dual): per-class actions with stabilizers dividing
/// d^2 whose induced right action commutes with the left one. With symmetry
/// breaking, actions are taken modulo relabelings that commute with the duality.
/// Throws FrameLimitExceeded when canonicalization work exceeds `limit` or
/// the frame count grows past a fixed ceiling.
std::vector<Frame> enumerateFrames(const TypeSignature& sig, const GroupTable& group, const DualityAssignment& dual,
                                   bool symmetryBreaking = true, std::size_t limit = 20'000'000);

}  // namespace fusionscan
