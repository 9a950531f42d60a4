#include "fusionscan/enumerator.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fusionscan {

namespace {

// Descends over dims in increasing order; `remaining` is what is left for n0
// and larger dims. A branch ends as soon as d^2 no longer fits (n0 >= 1).
void descend(Int minDim, Int remaining, std::vector<DimCount>& acc, std::optional<Int> maxRank, Int rankSoFar,
             std::vector<TypeSignature>& out) {
  if (!acc.empty()) {
    const Int n0 = remaining;
    if (!maxRank || rankSoFar + n0 <= *maxRank) {
      std::vector<DimCount> entries;
      entries.reserve(acc.size() + 1);
      entries.push_back({1, n0});
      entries.insert(entries.end(), acc.begin(), acc.end());
      out.emplace_back(std::move(entries));
    }
  }
  for (Int d = minDim; d * d <= remaining - 1; ++d) {
    for (Int n = 1; n * d * d <= remaining - 1; ++n) {
      if (maxRank && rankSoFar + n + 1 > *maxRank) break;
      acc.push_back({d, n});
      descend(d + 1, remaining - n * d * d, acc, maxRank, rankSoFar + n, out);
      acc.pop_back();
    }
  }
}

// count(minDim, remaining) = number of nonempty dim>=minDim selections leaving
// remaining >= 1, memoized.
Int countFrom(Int minDim, Int remaining, std::map<std::pair<Int, Int>, Int>& memo) {
  auto key = std::make_pair(minDim, remaining);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Int total = 0;
  for (Int d = minDim; d * d <= remaining - 1; ++d)
    for (Int n = 1; n * d * d <= remaining - 1; ++n) total += 1 + countFrom(d + 1, remaining - n * d * d, memo);
  memo.emplace(key, total);
  return total;
}

}  // namespace

std::vector<TypeSignature> enumerateSignatures(Int N, std::optional<Int> maxRank) {
  std::vector<TypeSignature> out;
  if (N < 1) return out;
  std::vector<DimCount> acc;
  descend(2, N, acc, maxRank, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

Int countSignatures(Int N) {
  if (N < 1) return 0;
  std::map<std::pair<Int, Int>, Int> memo;
  return countFrom(2, N, memo);
}

}  // namespace fusionscan
