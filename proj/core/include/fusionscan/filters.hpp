#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fusionscan/signature.hpp"

namespace fusionscan {

/// One re-checkable arithmetic fact backing a rule firing.
struct ArithFact {
  enum class Kind { Divides, NotDivides, Equal, NotEqual, AtLeast, AtMost, Prime, NotPrime };

  Kind kind;
  std::string label;  // what `lhs` stands for, e.g. "n0+4*m2"
  Int lhs = 0;
  Int rhs = 0;  // unused for Prime / NotPrime

  /// Re-evaluates the fact from its numbers alone.
  bool holds() const;
  std::string render() const;

  friend bool operator==(const ArithFact&, const ArithFact&) = default;
};

struct FilterVerdict {
  std::string ruleId;
  bool fired = false;
  std::string detail;  // nonempty when fired
  std::vector<ArithFact> evidence;

  friend bool operator==(const FilterVerdict&, const FilterVerdict&) = default;
};

enum class RuleScope { Universal, DimensionSpecific };

struct FilterRule {
  std::string id;
  std::string citation;
  std::string quote;
  std::string applicability;
  RuleScope scope = RuleScope::Universal;
  std::optional<Int> onlyN;  // set iff scope == DimensionSpecific
  bool optIn = false;
  /// Evidence when the rule fires, nullopt otherwise. Pure in (sig, N).
  std::function<std::optional<std::vector<ArithFact>>(const TypeSignature&, Int)> predicate;

  bool admits(Int N) const { return !onlyN || *onlyN == N; }
};

class ScopeError : public Error {
 public:
  using Error::Error;
};

/// The full rule catalog R1..R14 in id order.
const std::vector<FilterRule>& ruleCatalog();
/// Throws Error for an unknown id.
const FilterRule& ruleById(const std::string& id);
/// Ids R1..R13: everything that applies to every N.
std::vector<std::string> defaultRuleIds();
/// Ids R1..R8: the type-level criteria applied before the degree-2 lemmas.
std::vector<std::string> arithmeticCriteriaRuleIds();

/// Catalog as JSON array of {id, citation, quote, applicability, scope, only_fpdim, opt_in}.
std::string ruleCatalogJson();

/// Throws ScopeError when the rule does not admit N, Error when globalDim(sig) != N.
FilterVerdict applyRule(const FilterRule& rule, const TypeSignature& sig, Int N);

/// The non-excluding Frobenius marker (id "RF"): fires when some dimension does not divide N.
FilterVerdict frobeniusMarker(const TypeSignature& sig, Int N);

struct FilterRecord {
  TypeSignature signature;
  std::vector<FilterVerdict> verdicts;  // one per requested rule, in request order
  FilterVerdict frobenius;              // the RF marker
  bool survivor = false;

  std::vector<std::string> firedRules() const;
};

struct FilterReport {
  Int N = 0;
  std::vector<std::string> ruleIds;
  std::vector<FilterRecord> records;  // canonical signature order

  std::vector<TypeSignature> survivors() const;
};

/// Evaluates every rule on every signature (no short-circuit). Rules whose
/// scope excludes N are skipped. `workers` > 1 spreads signatures over threads;
/// the result does not depend on it.
FilterReport runFilters(const std::vector<TypeSignature>& sigs, const std::vector<std::string>& ruleIds, Int N,
                        unsigned workers = 1);

}  // namespace fusionscan
