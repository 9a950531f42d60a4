#include "fusionscan/frames.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace fusionscan {

std::vector<ClassBlock> classBlocks(const TypeSignature& sig) {
  std::vector<ClassBlock> out;
  int begin = 0;
  for (const auto& e : sig.entries()) {
    out.push_back({e.dim, begin, static_cast<int>(e.count)});
    begin += static_cast<int>(e.count);
  }
  return out;
}

std::vector<Int> simpleDims(const TypeSignature& sig) {
  std::vector<Int> dims;
  for (const auto& e : sig.entries()) dims.insert(dims.end(), static_cast<std::size_t>(e.count), e.dim);
  return dims;
}

std::vector<std::string> simpleNames(const TypeSignature& sig) {
  std::vector<std::string> names{"1"};
  for (Int g = 1; g < sig.pointedCount(); ++g) names.push_back("g" + std::to_string(g));
  for (std::size_t i = 1; i < sig.entries().size(); ++i) {
    const auto& e = sig.entries()[i];
    const auto base = "x" + std::to_string(e.dim);
    if (e.count == 1) {
      names.push_back(base);
    } else {
      for (Int k = 1; k <= e.count; ++k) names.push_back(base + "_" + std::to_string(k));
    }
  }
  return names;
}

namespace {

// All involutions of {0..k-1}, or the canonical ones (first 2t points paired).
std::vector<std::vector<int>> classInvolutions(int k, bool all) {
  std::vector<std::vector<int>> out;
  if (!all) {
    for (int t = 0; 2 * t <= k; ++t) {
      std::vector<int> s(static_cast<std::size_t>(k));
      std::iota(s.begin(), s.end(), 0);
      for (int j = 0; j < t; ++j) std::swap(s[static_cast<std::size_t>(2 * j)], s[static_cast<std::size_t>(2 * j + 1)]);
      out.push_back(std::move(s));
    }
    return out;
  }
  std::vector<int> s(static_cast<std::size_t>(k), -1);
  std::function<void()> rec = [&] {
    auto it = std::find(s.begin(), s.end(), -1);
    if (it == s.end()) {
      out.push_back(s);
      return;
    }
    const int i = static_cast<int>(it - s.begin());
    s[static_cast<std::size_t>(i)] = i;
    rec();
    for (int j = i + 1; j < k; ++j) {
      if (s[static_cast<std::size_t>(j)] != -1) continue;
      s[static_cast<std::size_t>(i)] = j;
      s[static_cast<std::size_t>(j)] = i;
      rec();
      s[static_cast<std::size_t>(j)] = -1;
    }
    s[static_cast<std::size_t>(i)] = -1;
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<DualityAssignment> enumerateDualities(const TypeSignature& sig, const GroupTable& group,
                                                  bool symmetryBreaking) {
  if (group.order() != sig.pointedCount()) throw Error("group order does not match n0");
  const auto blocks = classBlocks(sig);
  const int rank = static_cast<int>(sig.rank());

  std::vector<std::vector<std::vector<int>>> perClass;
  for (std::size_t b = 1; b < blocks.size(); ++b) perClass.push_back(classInvolutions(blocks[b].count, !symmetryBreaking));

  std::vector<DualityAssignment> out;
  std::vector<std::size_t> choice(perClass.size(), 0);
  while (true) {
    DualityAssignment d;
    d.dual.resize(static_cast<std::size_t>(rank));
    for (int g = 0; g < group.order(); ++g) d.dual[static_cast<std::size_t>(g)] = group.inverse(g);
    for (std::size_t c = 0; c < perClass.size(); ++c) {
      const auto& blk = blocks[c + 1];
      const auto& inv = perClass[c][choice[c]];
      for (int i = 0; i < blk.count; ++i)
        d.dual[static_cast<std::size_t>(blk.begin + i)] = blk.begin + inv[static_cast<std::size_t>(i)];
    }
    out.push_back(std::move(d));
    std::size_t c = 0;
    for (; c < perClass.size(); ++c) {
      if (++choice[c] < perClass[c].size()) break;
      choice[c] = 0;
    }
    if (c == perClass.size()) break;
  }
  return out;
}

std::vector<std::vector<int>> enumerateLabeledActions(const GroupTable& group, int k, Int dimSquared,
                                                      std::size_t limit) {
  const int n = group.order();
  std::vector<std::uint64_t> stabilizers;
  for (auto h : group.subgroups())
    if (dimSquared % popcount(h) == 0) stabilizers.push_back(h);

  // Left cosets gH of each admissible H, as (representative list, coset id of every element).
  struct Cosets {
    std::uint64_t sub;
    std::vector<int> reps;     // reps[0] = identity
    std::vector<int> cosetOf;  // element -> coset index
  };
  std::vector<Cosets> cosetData;
  for (auto h : stabilizers) {
    Cosets c{h, {}, std::vector<int>(static_cast<std::size_t>(n), -1)};
    for (int g = 0; g < n; ++g) {
      if (c.cosetOf[static_cast<std::size_t>(g)] != -1) continue;
      const int id = static_cast<int>(c.reps.size());
      c.reps.push_back(g);
      for (int x = 0; x < n; ++x)
        if (h >> x & 1) c.cosetOf[static_cast<std::size_t>(group.mul(g, x))] = id;
    }
    cosetData.push_back(std::move(c));
  }

  std::vector<std::vector<int>> out;
  std::vector<int> act(static_cast<std::size_t>(n * k), -1);
  std::vector<bool> used(static_cast<std::size_t>(k), false);

  // The orbit of the smallest unplaced point p is G/H with p = H; the other
  // cosets get distinct unused labels in every possible order.
  std::function<void()> placeNext = [&] {
    auto it = std::find(used.begin(), used.end(), false);
    if (it == used.end()) {
      if (out.size() >= limit) throw FrameLimitExceeded("too many labeled actions");
      out.push_back(act);
      return;
    }
    const int p = static_cast<int>(it - used.begin());
    const int free = static_cast<int>(std::count(used.begin(), used.end(), false));
    for (const auto& cs : cosetData) {
      const int orbit = static_cast<int>(cs.reps.size());
      if (orbit > free) continue;
      std::vector<int> label(static_cast<std::size_t>(orbit), -1);
      label[0] = p;
      used[static_cast<std::size_t>(p)] = true;
      std::function<void(int)> assign = [&](int j) {
        if (j == orbit) {
          for (int g = 0; g < n; ++g)
            for (int c = 0; c < orbit; ++c) {
              const int target = cs.cosetOf[static_cast<std::size_t>(group.mul(g, cs.reps[static_cast<std::size_t>(c)]))];
              act[static_cast<std::size_t>(g * k + label[static_cast<std::size_t>(c)])] =
                  label[static_cast<std::size_t>(target)];
            }
          placeNext();
          return;
        }
        for (int q = p + 1; q < k; ++q) {
          if (used[static_cast<std::size_t>(q)]) continue;
          used[static_cast<std::size_t>(q)] = true;
          label[static_cast<std::size_t>(j)] = q;
          assign(j + 1);
          used[static_cast<std::size_t>(q)] = false;
        }
      };
      assign(1);
      used[static_cast<std::size_t>(p)] = false;
    }
  };
  placeNext();
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr std::size_t kMaxFrames = 1'000'000;

// Permutations of {0..k-1} commuting with the involution s.
std::vector<std::vector<int>> centralizerOfInvolution(const std::vector<int>& s, std::size_t limit) {
  const int k = static_cast<int>(s.size());
  std::vector<int> fixed;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    if (s[static_cast<std::size_t>(i)] == i) fixed.push_back(i);
    else if (s[static_cast<std::size_t>(i)] > i) pairs.push_back({i, s[static_cast<std::size_t>(i)]});
  }
  std::vector<std::vector<int>> out;
  std::vector<int> fperm(fixed.size());
  std::iota(fperm.begin(), fperm.end(), 0);
  do {
    std::vector<int> pperm(pairs.size());
    std::iota(pperm.begin(), pperm.end(), 0);
    do {
      for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << pairs.size()); ++flips) {
        std::vector<int> pi(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < fixed.size(); ++i) pi[static_cast<std::size_t>(fixed[i])] = fixed[static_cast<std::size_t>(fperm[i])];
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          auto [a, b] = pairs[static_cast<std::size_t>(pperm[j])];
          if (flips >> j & 1) std::swap(a, b);
          pi[static_cast<std::size_t>(pairs[j].first)] = a;
          pi[static_cast<std::size_t>(pairs[j].second)] = b;
        }
        out.push_back(std::move(pi));
        if (out.size() > limit) throw FrameLimitExceeded("duality centralizer too large");
      }
    } while (std::next_permutation(pperm.begin(), pperm.end()));
  } while (std::next_permutation(fperm.begin(), fperm.end()));
  return out;
}

// True iff the right action x g := (g^-1 x*)* commutes with the left one.
bool commutesWithRight(const GroupTable& group, int k, const std::vector<int>& act, const std::vector<int>& s) {
  const int n = group.order();
  auto left = [&](int g, int x) { return act[static_cast<std::size_t>(g * k + x)]; };
  auto right = [&](int x, int g) {
    return s[static_cast<std::size_t>(left(group.inverse(g), s[static_cast<std::size_t>(x)]))];
  };
  for (int x = 0; x < k; ++x)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (left(g, right(x, h)) != right(left(g, x), h)) return false;
  return true;
}

std::vector<std::vector<int>> classActions(const GroupTable& group, const ClassBlock& blk,
                                           const std::vector<int>& localDual, bool symmetryBreaking,
                                           std::size_t limit) {
  const int n = group.order();
  const int k = blk.count;
  auto labeled = enumerateLabeledActions(group, k, blk.dim * blk.dim);
  std::vector<std::vector<int>> compatible;
  for (auto& a : labeled)
    if (commutesWithRight(group, k, a, localDual)) compatible.push_back(std::move(a));
  if (!symmetryBreaking || compatible.size() <= 1) return compatible;

  // |C(s)| = f! * p! * 2^p for f fixed points and p swapped pairs; check before building it.
  int fixedPts = 0;
  for (int i = 0; i < k; ++i) fixedPts += localDual[static_cast<std::size_t>(i)] == i ? 1 : 0;
  const int pairs = (k - fixedPts) / 2;
  double work = static_cast<double>(compatible.size()) * std::ldexp(1.0, pairs);
  for (int i = 2; i <= fixedPts; ++i) work *= i;
  for (int i = 2; i <= pairs; ++i) work *= i;
  if (work > static_cast<double>(limit)) throw FrameLimitExceeded("action canonicalization too large");
  const auto cent = centralizerOfInvolution(localDual, limit);
  std::set<std::vector<int>> reps;
  std::vector<int> image(static_cast<std::size_t>(n * k));
  for (const auto& a : compatible) {
    std::vector<int> best;
    for (const auto& pi : cent) {
      // pi a pi^-1: point pi(x) goes to pi(a(g, x)).
      for (int g = 0; g < n; ++g)
        for (int x = 0; x < k; ++x)
          image[static_cast<std::size_t>(g * k + pi[static_cast<std::size_t>(x)])] =
              pi[static_cast<std::size_t>(a[static_cast<std::size_t>(g * k + x)])];
      if (best.empty() || image < best) best = image;
    }
    reps.insert(std::move(best));
  }
  return {reps.begin(), reps.end()};
}

}  // namespace

std::vector<Frame> enumerateFrames(const TypeSignature& sig, const GroupTable& group, const DualityAssignment& dual,
                                   bool symmetryBreaking, std::size_t limit) {
  const auto blocks = classBlocks(sig);
  const int rank = static_cast<int>(sig.rank());
  const int n0 = group.order();

  std::vector<std::vector<std::vector<int>>> perClass;
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    std::vector<int> local(static_cast<std::size_t>(blk.count));
    for (int i = 0; i < blk.count; ++i) local[static_cast<std::size_t>(i)] = dual(blk.begin + i) - blk.begin;
    perClass.push_back(classActions(group, blk, local, symmetryBreaking, limit));
    if (perClass.back().empty()) return {};
  }

  std::size_t total = 1;
  for (const auto& pc : perClass) {
    total *= pc.size();
    if (total > kMaxFrames) throw FrameLimitExceeded("too many frames");
  }

  std::vector<Frame> out;
  std::vector<std::size_t> choice(perClass.size(), 0);
  while (true) {
    Frame f;
    f.dual = dual;
    f.rank = rank;
    f.n0 = n0;
    f.left.assign(static_cast<std::size_t>(n0 * rank), -1);
    f.right.assign(static_cast<std::size_t>(rank * n0), -1);
    for (int g = 0; g < n0; ++g)
      for (int h = 0; h < n0; ++h) {
        f.left[static_cast<std::size_t>(g * rank + h)] = group.mul(g, h);
        f.right[static_cast<std::size_t>(h * n0 + g)] = group.mul(h, g);
      }
    for (std::size_t c = 0; c < perClass.size(); ++c) {
      const auto& blk = blocks[c + 1];
      const auto& act = perClass[c][choice[c]];
      for (int g = 0; g < n0; ++g)
        for (int i = 0; i < blk.count; ++i)
          f.left[static_cast<std::size_t>(g * rank + blk.begin + i)] =
              blk.begin + act[static_cast<std::size_t>(g * blk.count + i)];
    }
    for (int x = n0; x < rank; ++x)
      for (int g = 0; g < n0; ++g)
        f.right[static_cast<std::size_t>(x * n0 + g)] = dual(f.leftMul(group.inverse(g), dual(x)));
    out.push_back(std::move(f));

    std::size_t c = 0;
    for (; c < perClass.size(); ++c) {
      if (++choice[c] < perClass[c].size()) break;
      choice[c] = 0;
    }
    if (c == perClass.size()) break;
  }
  return out;
}

}  // namespace fusionscan
