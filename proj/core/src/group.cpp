#include "fusionscan/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace fusionscan {

std::vector<std::string> checkGroupAxioms(int order, const std::vector<int>& mult) {
  std::vector<std::string> out;
  if (order < 1 || static_cast<std::size_t>(order) * static_cast<std::size_t>(order) != mult.size()) {
    out.push_back("table size does not match order");
    return out;
  }
  auto m = [&](int a, int b) { return mult[static_cast<std::size_t>(a * order + b)]; };
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (m(a, b) < 0 || m(a, b) >= order) {
        out.push_back("closure fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        return out;
      }
    }
  }
  for (int a = 0; a < order; ++a) {
    if (m(0, a) != a || m(a, 0) != a) out.push_back("0 is not an identity for " + std::to_string(a));
    bool hasInverse = false;
    for (int b = 0; b < order; ++b) hasInverse = hasInverse || (m(a, b) == 0 && m(b, a) == 0);
    if (!hasInverse) out.push_back("no inverse for " + std::to_string(a));
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) {
          out.push_back("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(c) + ")");
          return out;
        }
  return out;
}

GroupTable::GroupTable(int order, std::vector<int> mult, std::string name)
    : order_(order), mult_(std::move(mult)), name_(std::move(name)) {
  if (order_ < 1 || order_ > kMaxOrder) throw Error("group order out of range: " + std::to_string(order_));
  auto problems = checkGroupAxioms(order_, mult_);
  if (!problems.empty()) throw Error("not a group table: " + problems.front());
  inverse_.assign(static_cast<std::size_t>(order_), 0);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == 0) inverse_[static_cast<std::size_t>(a)] = b;
}

int GroupTable::elementOrder(int a) const noexcept {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool GroupTable::isAbelian() const noexcept {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::uint64_t GroupTable::closure(std::uint64_t mask) const {
  mask |= 1;
  bool grown = true;
  while (grown) {
    grown = false;
    for (int a = 0; a < order_; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < order_; ++b) {
        if (!(mask >> b & 1)) continue;
        int c = mul(a, b);
        if (!(mask >> c & 1)) {
          mask |= std::uint64_t{1} << c;
          grown = true;
        }
      }
    }
  }
  return mask;
}

std::vector<int> GroupTable::generators() const {
  std::vector<int> byOrder(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) byOrder[static_cast<std::size_t>(i)] = i;
  std::stable_sort(byOrder.begin(), byOrder.end(),
                   [&](int a, int b) { return elementOrder(a) > elementOrder(b); });
  std::vector<int> gens;
  std::uint64_t span = 1;
  const std::uint64_t full = order_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << order_) - 1);
  for (int g : byOrder) {
    if (span == full) break;
    if (span >> g & 1) continue;
    gens.push_back(g);
    span = closure(span | (std::uint64_t{1} << g));
  }
  return gens;
}

std::vector<std::uint64_t> GroupTable::subgroups() const {
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> frontier{1};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto s : frontier) {
      for (int g = 0; g < order_; ++g) {
        if (s >> g & 1) continue;
        auto t = closure(s | (std::uint64_t{1} << g));
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

namespace {

std::map<int, int> orderProfile(const GroupTable& g) {
  std::map<int, int> profile;
  for (int a = 0; a < g.order(); ++a) ++profile[g.elementOrder(a)];
  return profile;
}

}  // namespace

bool isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  if (a.isAbelian() != b.isAbelian()) return false;
  if (orderProfile(a) != orderProfile(b)) return false;

  const auto gens = a.generators();
  const int n = a.order();
  std::vector<int> images(gens.size(), 0);

  // Try every image tuple with matching element orders; extend by BFS.
  auto tryMap = [&]() -> bool {
    std::vector<int> phi(static_cast<std::size_t>(n), -1);
    phi[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int y = a.mul(x, gens[k]);
        int fy = b.mul(phi[static_cast<std::size_t>(x)], images[k]);
        if (phi[static_cast<std::size_t>(y)] == -1) {
          phi[static_cast<std::size_t>(y)] = fy;
          queue.push_back(y);
        } else if (phi[static_cast<std::size_t>(y)] != fy) {
          return false;
        }
      }
    }
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int x = 0; x < n; ++x) {
      if (hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(x)])]) return false;
      hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(x)])] = true;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (phi[static_cast<std::size_t>(a.mul(x, y))] !=
            b.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]))
          return false;
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == gens.size()) return tryMap();
    for (int c = 0; c < n; ++c) {
      if (b.elementOrder(c) != a.elementOrder(gens[k])) continue;
      images[k] = c;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace fusionscan
