#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionscan/filters.hpp"
#include "fusionscan/reference.hpp"
#include "fusionscan/solver.hpp"

namespace fusionscan {

struct ClassifyConfig {
  bool enableR14 = false;  // opt-in rule; only admitted for its own N
  bool solveAll = false;   // also solve the remaining survivors, informationally
  std::vector<std::string> ruleIds;  // empty: R1..R13 (+R14 when enabled)
  SolverConfig solver;     // recordTrace is ignored here
  unsigned workers = 1;    // does not affect results

  /// The rule ids actually requested for dimension N.
  std::vector<std::string> effectiveRules(Int N) const;
};

/// Why a survivor was handed to the solver.
///   "non-frobenius": flagged by RF
///   "trivial-pic":   n0 = 1, which the rules alone never exclude
///   "informational": --solve-all; outcome never removes the type
struct SolveRecord {
  std::string reason;
  SolverOutcome outcome;  // trace always empty
  bool binding() const { return reason != "informational"; }

  friend bool operator==(const SolveRecord&, const SolveRecord&) = default;
};

struct SignatureRecord {
  FilterRecord filter;
  std::optional<SolveRecord> solve;
  bool survivor = false;
};

struct ReportTiming {
  double enumerateSeconds = 0;
  double filterSeconds = 0;
  double solveSeconds = 0;
};

struct ClassificationReport {
  Int N = 0;
  std::string version;
  std::string fingerprint;  // see configFingerprint
  std::vector<std::string> ruleIds;
  bool solveAll = false;
  SolverConfig solver;
  std::uint64_t candidateCount = 0;
  std::vector<SignatureRecord> records;     // every candidate, canonical order
  std::vector<TypeSignature> intermediate;  // no R1..R8 rule fired
  std::vector<TypeSignature> survivors;     // no rule fired and no binding Excluded
  std::vector<TypeSignature> unknown;       // survivors whose binding solve was Unknown
  std::vector<DiffRecord> discrepancies;    // against the built-in catalog, when it covers N
  std::uint64_t solverNodes = 0;
  ReportTiming timing;

  RunSummary summary() const;
};

/// Stable text describing everything that can change a report (not workers, not timing).
std::string configFingerprint(Int N, const ClassifyConfig& config);

/// enumerate -> filter -> solve the RF-flagged and trivial-Pic survivors (all
/// survivors with solveAll) -> assemble.
ClassificationReport classify(Int N, const ClassifyConfig& config = {});

/// diffAgainst(report.summary(), catalog).
std::vector<DiffRecord> diffReference(const ClassificationReport& report, const ReferenceCatalog& catalog);

std::string reportToJson(const ClassificationReport& report, bool includeTiming = true);
ClassificationReport reportFromJson(const std::string& json);
/// Survivors grouped by n0, one per line, under a one-line header.
std::string renderText(const ClassificationReport& report);

std::string solverOutcomeToJson(const SolverOutcome& outcome);

}  // namespace fusionscan
