#pragma once

#include <map>
#include <string>
#include <vector>

#include "fusionscan/signature.hpp"

namespace fusionscan {

struct ExpectedExclusion {
  TypeSignature signature;
  std::vector<std::string> killers;  // rule ids, or "solver"; any one matches
};

struct CatalogEntry {
  Int N = 0;
  std::vector<TypeSignature> final;         // published list
  std::vector<TypeSignature> intermediate;  // extra types left by the type-level criteria
  std::vector<ExpectedExclusion> excluded;

  /// final ∪ intermediate, canonical order.
  std::vector<TypeSignature> intermediateSet() const;
};

class ReferenceCatalog {
 public:
  /// Parses the data/reference_catalog.txt format. Throws ParseError with a line number.
  static ReferenceCatalog parse(const std::string& text);
  /// The catalog embedded at build time.
  static const ReferenceCatalog& builtin();

  bool has(Int N) const { return entries_.count(N) != 0; }
  /// Throws Error when N has no entry.
  const CatalogEntry& at(Int N) const;
  std::vector<Int> dimensions() const;

 private:
  std::map<Int, CatalogEntry> entries_;
};

/// One difference between a run and the catalog.
///   kind "missing" / "extra":  final survivor sets differ (binding)
///   kind "intermediate-missing" / "intermediate-extra": post-criteria set differs (soft)
///   kind "attribution": excluded, but not by any expected killer (informational)
struct DiffRecord {
  std::string kind;
  TypeSignature signature;
  std::string expected;  // expected killer(s), when known
  std::string actual;    // what removed it, when known

  bool binding() const { return kind == "missing" || kind == "extra"; }
  friend bool operator==(const DiffRecord&, const DiffRecord&) = default;
};

/// What a run produced, reduced to what the catalog can be compared against.
struct RunSummary {
  Int N = 0;
  std::vector<TypeSignature> survivors;
  std::vector<TypeSignature> intermediate;
  std::map<TypeSignature, std::vector<std::string>> killers;  // removed type -> fired rules or {"solver"}
};

/// Throws Error when the catalog has no entry for run.N.
std::vector<DiffRecord> diffAgainst(const RunSummary& run, const ReferenceCatalog& catalog);

}  // namespace fusionscan
