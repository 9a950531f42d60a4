// Brute-force oracles shared by the unit and acceptance tests. Deliberately
// naive and independent of the library: nothing here calls into the enumerator,
// the solver or verifyFusionTable.
#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Every "(1,n0;d1,n1;...)" with n0 >= 1, at least one dim > 1, sum n*d^2 = N.
// An odometer over count vectors for d = 2..floor(sqrt(N)); no pruning.
inline std::set<std::string> typesOf(long N) {
  std::set<std::string> out;
  std::vector<long> dims;
  for (long d = 2; d * d <= N; ++d) dims.push_back(d);
  std::vector<long> cnt(dims.size(), 0);
  while (true) {
    long sum = 0;
    bool any = false;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      sum += cnt[i] * dims[i] * dims[i];
      any = any || cnt[i] > 0;
    }
    if (any && sum < N) {
      std::string s = "(1," + std::to_string(N - sum);
      for (std::size_t i = 0; i < dims.size(); ++i)
        if (cnt[i] > 0) s += ";" + std::to_string(dims[i]) + "," + std::to_string(cnt[i]);
      out.insert(s + ")");
    }
    std::size_t k = 0;
    while (k < dims.size() && ++cnt[k] > N / (dims[k] * dims[k])) cnt[k++] = 0;
    if (k == dims.size()) break;
  }
  return out;
}

inline bool categoricalLawsHold(const std::vector<long>& dims, const std::vector<int>& du, const std::vector<int>& T) {
  const int r = static_cast<int>(dims.size());
  auto at = [r](int a, int b, int c) { return (a * r + b) * r + c; };
  long total = 0;
  for (long d : dims) total += d * d;
  for (int x = 0; x < r; ++x) {
    long stab = 0;
    for (int g = 0; g < r; ++g) stab += dims[g] == 1 && T[at(g, x, x)] == 1;
    if ((dims[x] * dims[x]) % stab != 0) return false;
  }
  for (unsigned mask = 1; mask < (1u << r); mask += 2) {  // subsets containing the unit
    bool closed = true;
    long sum = 0;
    for (int a = 0; a < r; ++a) {
      if (!(mask >> a & 1)) continue;
      sum += dims[a] * dims[a];
      closed = closed && (mask >> du[a] & 1);
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c)
          if ((mask >> b & 1) && T[at(a, b, c)] > 0 && !(mask >> c & 1)) closed = false;
    }
    if (closed && total % sum != 0) return false;
  }
  return true;
}

// Does any based ring with these simple dimensions exist? dims[0] = 1 is the
// unit. Tries every dimension-preserving involution as duality, then every
// nonnegative integer tensor row by row (each row an exact solution of the
// dimension equation), checking the rigidity and reciprocity laws on complete
// pairs and associativity at the end.
//
// With `categorical` the table must also satisfy the two laws the library adds
// on top of the ring axioms: |G[x]| divides d(x)^2, where G[x] is the set of
// invertibles g with gx = x, and every fusion subring has a dimension dividing
// the global dimension.
inline bool ringExists(const std::vector<long>& dims, bool categorical = true) {
  const int r = static_cast<int>(dims.size());
  auto at = [r](int a, int b, int c) { return (a * r + b) * r + c; };

  std::vector<std::vector<int>> duals;
  std::vector<int> dual(r, -1);
  std::function<void(int)> involutions = [&](int x) {
    if (x == r) {
      duals.push_back(dual);
      return;
    }
    if (dual[x] >= 0) return involutions(x + 1);
    for (int y = x; y < r; ++y) {
      if (dual[y] >= 0 || dims[y] != dims[x] || (x == 0 && y != 0)) continue;
      dual[x] = y;
      dual[y] = x;
      involutions(x + 1);
      dual[x] = dual[y] = -1;
    }
  };
  involutions(0);

  for (const auto& du : duals) {
    std::vector<int> T(static_cast<std::size_t>(r * r * r), -1);
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) T[at(0, b, c)] = T[at(b, 0, c)] = b == c;

    // All rows (a,b) with a,b >= 1, in order.
    std::vector<std::pair<int, int>> rows;
    for (int a = 1; a < r; ++a)
      for (int b = 1; b < r; ++b) rows.push_back({a, b});

    auto lawsOk = [&](int a, int b) {
      // Checks every law instance whose cells are all assigned and that touches row (a,b).
      for (int c = 0; c < r; ++c) {
        int v = T[at(a, b, c)];
        int w1 = T[at(du[a], c, b)], w2 = T[at(c, du[b], a)], w3 = T[at(du[b], du[a], du[c])];
        if ((w1 >= 0 && w1 != v) || (w2 >= 0 && w2 != v) || (w3 >= 0 && w3 != v)) return false;
        // and the reverse direction: cells that map into this row
        for (int x = 0; x < r; ++x)
          for (int y = 0; y < r; ++y)
            for (int z = 0; z < r; ++z) {
              int u = T[at(x, y, z)];
              if (u < 0) continue;
              if (du[x] == a && z == b && y == c && u != v) return false;
              if (z == a && du[y] == b && x == c && u != v) return false;
            }
      }
      return true;
    };

    std::function<bool(std::size_t)> fill = [&](std::size_t k) -> bool {
      if (k == rows.size()) {
        for (int a = 1; a < r; ++a)
          for (int b = 1; b < r; ++b)
            for (int c = 1; c < r; ++c)
              for (int f = 0; f < r; ++f) {
                long lhs = 0, rhs = 0;
                for (int e = 0; e < r; ++e) {
                  lhs += static_cast<long>(T[at(a, b, e)]) * T[at(e, c, f)];
                  rhs += static_cast<long>(T[at(b, c, e)]) * T[at(a, e, f)];
                }
                if (lhs != rhs) return false;
              }
        return !categorical || categoricalLawsHold(dims, du, T);
      }
      const auto [a, b] = rows[k];
      const long target = dims[a] * dims[b];
      std::function<bool(int, long)> entry = [&](int c, long remaining) -> bool {
        if (c == r) {
          if (remaining != 0) return false;
          if (!lawsOk(a, b)) return false;
          return fill(k + 1);
        }
        const int forced = c == 0 ? (du[a] == b) : -1;
        for (long v = 0; v * dims[c] <= remaining; ++v) {
          if (forced >= 0 && v != forced) continue;
          T[at(a, b, c)] = static_cast<int>(v);
          if (entry(c + 1, remaining - v * dims[c])) return true;
        }
        T[at(a, b, c)] = -1;
        return false;
      };
      return entry(0, target);
    };
    if (fill(0)) return true;
  }
  return false;
}

}  // namespace oracle
