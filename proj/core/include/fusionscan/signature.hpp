#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fusionscan {

using Int = std::int64_t;

/// Raised for malformed input: bad signature text, invalid tables, unknown rule ids.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// One (dimension, multiplicity) entry of a type.
struct DimCount {
  Int dim = 1;
  Int count = 1;

  friend bool operator==(const DimCount&, const DimCount&) = default;
  friend auto operator<=>(const DimCount&, const DimCount&) = default;
};

/// The type (1,n0; d1,n1; ...; ds,ns) of an integral fusion category.
///
/// entries()[0] is always (1, n0). Dimensions are strictly increasing and at
/// least one entry has dimension > 1; every constructor path enforces this.
class TypeSignature {
 public:
  /// Validates and stores the entries. Throws Error on any invariant failure.
  explicit TypeSignature(std::vector<DimCount> entries);

  const std::vector<DimCount>& entries() const noexcept { return entries_; }

  Int pointedCount() const noexcept { return entries_.front().count; }
  /// Number of non-unit dimension classes (s).
  std::size_t classCount() const noexcept { return entries_.size() - 1; }
  /// Multiplicity of `dim`, or 0 when absent.
  Int countAt(Int dim) const noexcept;
  /// Total number of simple objects.
  Int rank() const noexcept;
  Int maxDim() const noexcept { return entries_.back().dim; }

  friend bool operator==(const TypeSignature&, const TypeSignature&) = default;
  /// Canonical order: n0 first, then the flattened (d_i, n_i) sequence.
  friend bool operator<(const TypeSignature& a, const TypeSignature& b);

 private:
  std::vector<DimCount> entries_;
};

/// Parses "(1,n0; d1,n1; ...)"; whitespace is ignored.
TypeSignature parseSignature(std::string_view text);

/// Canonical minimal-space form "(1,n0;d1,n1;...)".
std::string renderSignature(const TypeSignature& sig);

/// Sum of count * dim^2 over all entries. Throws Error on int64 overflow.
Int globalDim(const TypeSignature& sig);

/// True iff every simple dimension divides N. Throws Error if globalDim(sig) != N.
bool isFrobeniusType(const TypeSignature& sig, Int N);

}  // namespace fusionscan
