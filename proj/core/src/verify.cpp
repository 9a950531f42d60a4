// Direct-scan checker for the ring laws. Shares no code with the solver.
#include <algorithm>
#include <numeric>
#include <set>

#include "fusionscan/fusion_table.hpp"

namespace fusionscan {

namespace {

class Collector {
 public:
  explicit Collector(std::size_t limit) : limit_(limit) {}

  bool full() const { return out_.size() >= limit_; }

  void add(std::string law, std::vector<int> idx, std::string detail) {
    if (!full()) out_.push_back({std::move(law), std::move(idx), std::move(detail)});
  }

  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::size_t limit_;
  std::vector<Violation> out_;
};

std::string triple(int a, int b, int c) {
  return "N_{" + std::to_string(a) + "," + std::to_string(b) + "}^" + std::to_string(c);
}

}  // namespace

std::vector<Violation> verifyFusionTable(const FusionTable& t, std::size_t limit) {
  Collector out(limit);
  const int r = t.rank();
  const int n0 = t.pointedCount();

  // Duality must be a dimension-preserving involution fixing the unit.
  bool dualOk = true;
  for (int x = 0; x < r; ++x) {
    const int d = t.dual(x);
    if (t.dual(d) != x || t.dim(d) != t.dim(x) || (x == 0 && d != 0)) {
      out.add("duality", {x}, "dual(" + std::to_string(x) + ") = " + std::to_string(d) + " is not admissible");
      dualOk = false;
    }
  }
  if (!dualOk) return out.take();

  for (int a = 0; a < r && !out.full(); ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const int v = t.N(a, b, c);
        if (v < 0) out.add("nonnegativity", {a, b, c}, triple(a, b, c) + " < 0");
        if (a == 0 && v != (b == c ? 1 : 0)) out.add("unit", {a, b, c}, triple(a, b, c) + " = " + std::to_string(v));
        if (b == 0 && v != (a == c ? 1 : 0)) out.add("unit", {a, b, c}, triple(a, b, c) + " = " + std::to_string(v));
        if (c == 0 && v != (b == t.dual(a) ? 1 : 0))
          out.add("dual", {a, b, c}, triple(a, b, c) + " = " + std::to_string(v));
        if (v != t.N(t.dual(a), c, b))
          out.add("reciprocity", {a, b, c}, triple(a, b, c) + " != " + triple(t.dual(a), c, b));
        if (v != t.N(c, t.dual(b), a))
          out.add("reciprocity", {a, b, c}, triple(a, b, c) + " != " + triple(c, t.dual(b), a));
        if (v != t.N(t.dual(b), t.dual(a), t.dual(c)))
          out.add("conjugation", {a, b, c}, triple(a, b, c) + " != " + triple(t.dual(b), t.dual(a), t.dual(c)));
      }

  for (int a = 0; a < r && !out.full(); ++a)
    for (int b = 0; b < r; ++b) {
      Int sum = 0;
      for (int c = 0; c < r; ++c) sum += t.N(a, b, c) * t.dim(c);
      if (sum != t.dim(a) * t.dim(b))
        out.add("dimension", {a, b},
                "row (" + std::to_string(a) + "," + std::to_string(b) + ") has dimension " + std::to_string(sum) +
                    ", expected " + std::to_string(t.dim(a) * t.dim(b)));
    }

  // Products of invertibles must follow the group table.
  for (int g = 0; g < n0 && !out.full(); ++g)
    for (int h = 0; h < n0; ++h)
      for (int c = 0; c < r; ++c)
        if (t.N(g, h, c) != (c == t.group().mul(g, h) ? 1 : 0))
          out.add("group", {g, h, c}, triple(g, h, c) + " disagrees with the group table");

  // Invertible-coset law: N_{xy}^g = 1 iff y = x* g.
  for (int x = 0; x < r && !out.full(); ++x)
    for (int g = 0; g < n0; ++g) {
      int product = -1;
      int mass = 0;
      for (int c = 0; c < r; ++c) {
        mass += t.N(t.dual(x), g, c);
        if (t.N(t.dual(x), g, c) == 1) product = c;
      }
      if (mass != 1 || product < 0) {
        out.add("invertible-coset", {x, g},
                "x*g is not simple for x=" + std::to_string(x) + ", g=" + std::to_string(g));
        continue;
      }
      for (int y = 0; y < r; ++y)
        if (t.N(x, y, g) != (y == product ? 1 : 0))
          out.add("invertible-coset", {x, y, g},
                  triple(x, y, g) + " = " + std::to_string(t.N(x, y, g)) + " but x*g = " + std::to_string(product));
    }

  for (int a = 0; a < r && !out.full(); ++a)
    for (int b = 0; b < r && !out.full(); ++b)
      for (int c = 0; c < r && !out.full(); ++c)
        for (int f = 0; f < r; ++f) {
          long lhs = 0;
          long rhs = 0;
          for (int e = 0; e < r; ++e) {
            lhs += static_cast<long>(t.N(a, b, e)) * t.N(e, c, f);
            rhs += static_cast<long>(t.N(b, c, e)) * t.N(a, e, f);
          }
          if (lhs != rhs)
            out.add("associativity", {a, b, c, f},
                    "((" + std::to_string(a) + "," + std::to_string(b) + ")," + std::to_string(c) + ") -> " +
                        std::to_string(f) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
        }

  for (int x = 0; x < r && !out.full(); ++x) {
    const std::uint64_t mask = stabilizerMask(t, x);
    if (t.group().closure(mask) != mask) {
      out.add("stabilizer", {x}, "G[" + std::to_string(x) + "] is not a subgroup");
      continue;
    }
    const Int order = popcount(mask);
    if ((t.dim(x) * t.dim(x)) % order != 0)
      out.add("stabilizer", {x},
              "|G[" + std::to_string(x) + "]| = " + std::to_string(order) + " does not divide " +
                  std::to_string(t.dim(x) * t.dim(x)));
  }
  return out.take();
}

std::uint64_t stabilizerMask(const FusionTable& t, int x) {
  std::uint64_t mask = 0;
  for (int g = 0; g < t.pointedCount(); ++g)
    if (t.N(g, x, x) == 1) mask |= std::uint64_t{1} << g;
  return mask;
}

std::vector<std::vector<int>> fusionSubrings(const FusionTable& t) {
  const int r = t.rank();
  auto close = [&](std::vector<bool> in) {
    bool grown = true;
    while (grown) {
      grown = false;
      for (int a = 0; a < r; ++a) {
        if (!in[static_cast<std::size_t>(a)]) continue;
        if (!in[static_cast<std::size_t>(t.dual(a))]) {
          in[static_cast<std::size_t>(t.dual(a))] = true;
          grown = true;
        }
        for (int b = 0; b < r; ++b) {
          if (!in[static_cast<std::size_t>(b)]) continue;
          for (int c = 0; c < r; ++c)
            if (t.N(a, b, c) > 0 && !in[static_cast<std::size_t>(c)]) {
              in[static_cast<std::size_t>(c)] = true;
              grown = true;
            }
        }
      }
    }
    return in;
  };

  std::vector<bool> base(static_cast<std::size_t>(r), false);
  base[0] = true;
  std::set<std::vector<bool>> seen{close(base)};
  std::vector<std::vector<bool>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<bool>> next;
    for (const auto& s : frontier)
      for (int x = 0; x < r; ++x) {
        if (s[static_cast<std::size_t>(x)]) continue;
        auto grown = s;
        grown[static_cast<std::size_t>(x)] = true;
        grown = close(std::move(grown));
        if (seen.insert(grown).second) next.push_back(std::move(grown));
      }
    frontier = std::move(next);
  }

  std::vector<std::vector<int>> out;
  for (const auto& s : seen) {
    std::vector<int> idx;
    for (int x = 0; x < r; ++x)
      if (s[static_cast<std::size_t>(x)]) idx.push_back(x);
    out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Violation> subringDivisibilityViolations(const FusionTable& t) {
  std::vector<Violation> out;
  const Int total = t.globalDim();
  for (const auto& s : fusionSubrings(t)) {
    Int d = 0;
    for (int x : s) d += t.dim(x) * t.dim(x);
    if (total % d != 0)
      out.push_back({"subring-divisibility", s,
                     "fusion subring of dimension " + std::to_string(d) + " does not divide " + std::to_string(total)});
  }
  return out;
}

}  // namespace fusionscan
