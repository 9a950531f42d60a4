#pragma once

#include <optional>
#include <vector>

#include "fusionscan/signature.hpp"

namespace fusionscan {

/// Every non-pointed type of global dimension N, in canonical order.
///
/// Canonical order sorts by n0, then by the flattened (d_i, n_i) sequence. No
/// arithmetic filtering happens here. `maxRank`, when set, drops types with
/// more than that many simples.
std::vector<TypeSignature> enumerateSignatures(Int N, std::optional<Int> maxRank = std::nullopt);

/// Number of types enumerateSignatures(N) would return, counted without
/// materializing them.
Int countSignatures(Int N);

}  // namespace fusionscan
