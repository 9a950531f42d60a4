#include "fusionscan/group_catalog.hpp"

#include <string>

namespace fusionscan {

GroupTable cyclicGroup(int n) {
  std::vector<int> mult(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return GroupTable(n, std::move(mult), "C" + std::to_string(n));
}

GroupTable directProduct(const GroupTable& a, const GroupTable& b) {
  const int na = a.order();
  const int nb = b.order();
  const int n = na * nb;
  std::vector<int> mult(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mult[static_cast<std::size_t>(x * n + y)] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return GroupTable(n, std::move(mult), a.name() + "x" + b.name());
}

GroupTable metacyclicGroup(int m, int n, int r, int t, std::string name) {
  // Element a^i b^j lives at index j*m + i so that <a> is 0..m-1.
  const int order = m * n;
  std::vector<int> rpow(static_cast<std::size_t>(n + 1), 1);
  for (int j = 1; j <= n; ++j) rpow[static_cast<std::size_t>(j)] = rpow[static_cast<std::size_t>(j - 1)] * r % m;
  std::vector<int> mult(static_cast<std::size_t>(order * order));
  for (int x = 0; x < order; ++x) {
    const int i = x % m;
    const int j = x / m;
    for (int y = 0; y < order; ++y) {
      const int k = y % m;
      const int l = y / m;
      int ai = i + k * rpow[static_cast<std::size_t>(j)];
      int bj = j + l;
      if (bj >= n) {
        bj -= n;
        ai += t;
      }
      mult[static_cast<std::size_t>(x * order + y)] = bj * m + ai % m;
    }
  }
  return GroupTable(order, std::move(mult), std::move(name));
}

GroupTable semidirectByCyclic(const GroupTable& h, const std::vector<int>& phi, int n, std::string name) {
  const int nh = h.order();
  const int order = nh * n;
  // phiPow[k][x] = phi^k(x)
  std::vector<std::vector<int>> phiPow(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(nh)));
  for (int x = 0; x < nh; ++x) phiPow[0][static_cast<std::size_t>(x)] = x;
  for (int k = 1; k < n; ++k)
    for (int x = 0; x < nh; ++x)
      phiPow[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)] =
          phi[static_cast<std::size_t>(phiPow[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)])];
  std::vector<int> mult(static_cast<std::size_t>(order * order));
  for (int x = 0; x < order; ++x) {
    const int h1 = x % nh;
    const int k1 = x / nh;
    for (int y = 0; y < order; ++y) {
      const int h2 = y % nh;
      const int k2 = y / nh;
      const int hh = h.mul(h1, phiPow[static_cast<std::size_t>(k1)][static_cast<std::size_t>(h2)]);
      mult[static_cast<std::size_t>(x * order + y)] = ((k1 + k2) % n) * nh + hh;
    }
  }
  return GroupTable(order, std::move(mult), std::move(name));
}

namespace {

GroupTable named(GroupTable g, std::string name) {
  return GroupTable(g.order(), g.table(), std::move(name));
}

GroupTable c(int n) { return cyclicGroup(n); }

GroupTable dihedral(int m) { return metacyclicGroup(m, 2, m - 1, 0, "D" + std::to_string(2 * m)); }

}  // namespace

std::vector<GroupTable> enumerateGroups(int n) {
  std::vector<GroupTable> out;
  switch (n) {
    case 1: case 2: case 3: case 5: case 7: case 11: case 13:
      out.push_back(c(n));
      break;
    case 4:
      out = {c(4), named(directProduct(c(2), c(2)), "C2xC2")};
      break;
    case 6:
      out = {c(6), named(dihedral(3), "S3")};
      break;
    case 8:
      out = {c(8), directProduct(c(4), c(2)), directProduct(directProduct(c(2), c(2)), c(2)), dihedral(4),
             metacyclicGroup(4, 2, 3, 2, "Q8")};
      break;
    case 9:
      out = {c(9), directProduct(c(3), c(3))};
      break;
    case 10:
      out = {c(10), dihedral(5)};
      break;
    case 12: {
      // A4 = (C2 x C2) x| C3 permuting the three involutions cyclically.
      const auto v4 = directProduct(c(2), c(2));
      out = {c(12), directProduct(c(6), c(2)), dihedral(6), metacyclicGroup(3, 4, 2, 0, "Dic12"),
             semidirectByCyclic(v4, {0, 2, 3, 1}, 3, "A4")};
      break;
    }
    case 14:
      out = {c(14), dihedral(7)};
      break;
    case 15:
      out = {c(15)};
      break;
    case 16: {
      const auto c4c2 = directProduct(c(4), c(2));  // index i*2 + j for a^i b^j
      std::vector<int> aToAb(8);
      std::vector<int> bToA2b(8);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) {
          aToAb[static_cast<std::size_t>(i * 2 + j)] = i * 2 + (i + j) % 2;
          bToA2b[static_cast<std::size_t>(i * 2 + j)] = ((i + 2 * j) % 4) * 2 + j;
        }
      out = {c(16),
             directProduct(c(4), c(4)),
             directProduct(c(8), c(2)),
             directProduct(directProduct(c(4), c(2)), c(2)),
             directProduct(directProduct(directProduct(c(2), c(2)), c(2)), c(2)),
             dihedral(8),
             metacyclicGroup(8, 2, 7, 4, "Q16"),
             metacyclicGroup(8, 2, 3, 0, "SD16"),
             metacyclicGroup(8, 2, 5, 0, "M16"),
             metacyclicGroup(4, 4, 3, 0, "C4:C4"),
             directProduct(dihedral(4), c(2)),
             directProduct(metacyclicGroup(4, 2, 3, 2, "Q8"), c(2)),
             semidirectByCyclic(c4c2, aToAb, 2, "(C4xC2):C2"),
             semidirectByCyclic(c4c2, bToA2b, 2, "C4oD8")};
      break;
    }
    default:
      throw UnsupportedOrder("no group catalog entry for order " + std::to_string(n) + " (supported: 1.." +
                             std::to_string(kGroupCatalogMaxOrder) + ")");
  }
  return out;
}

}  // namespace fusionscan
