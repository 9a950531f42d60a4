#pragma once

#include <vector>

#include "fusionscan/group.hpp"

namespace fusionscan {

/// Highest order covered by the built-in catalog.
inline constexpr int kGroupCatalogMaxOrder = 16;

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

/// All groups of order n up to isomorphism, in a fixed order.
/// Throws UnsupportedOrder when n is outside 1..kGroupCatalogMaxOrder.
std::vector<GroupTable> enumerateGroups(int n);

// Building blocks, exposed for tests.
GroupTable cyclicGroup(int n);
GroupTable directProduct(const GroupTable& a, const GroupTable& b);
/// <a, b | a^m, b^n = a^t, b a b^-1 = a^r>; a^i b^j sits at index j*m + i.
GroupTable metacyclicGroup(int m, int n, int r, int t, std::string name);
/// H x| C_n, with the generator of C_n acting by the automorphism `phi` of H.
GroupTable semidirectByCyclic(const GroupTable& h, const std::vector<int>& phi, int n, std::string name);

}  // namespace fusionscan
