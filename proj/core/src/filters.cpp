#include "fusionscan/filters.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>

#include "parallel.hpp"

namespace fusionscan {

using Facts = std::vector<ArithFact>;
using Kind = ArithFact::Kind;

namespace {

bool isPrime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

ArithFact divides(std::string label, Int a, Int b) { return {Kind::Divides, std::move(label), a, b}; }
ArithFact notDivides(std::string label, Int a, Int b) { return {Kind::NotDivides, std::move(label), a, b}; }
ArithFact equal(std::string label, Int a, Int b) { return {Kind::Equal, std::move(label), a, b}; }
ArithFact atLeast(std::string label, Int a, Int b) { return {Kind::AtLeast, std::move(label), a, b}; }
ArithFact atMost(std::string label, Int a, Int b) { return {Kind::AtMost, std::move(label), a, b}; }
ArithFact prime(std::string label, Int a) { return {Kind::Prime, std::move(label), a, 0}; }

// Shorthand for the counts the rules look at.
struct Shape {
  Int N, n0, m2, m3, m4, m5;
  Int s;

  Shape(const TypeSignature& sig, Int fpdim)
      : N(fpdim),
        n0(sig.pointedCount()),
        m2(sig.countAt(2)),
        m3(sig.countAt(3)),
        m4(sig.countAt(4)),
        m5(sig.countAt(5)),
        s(static_cast<Int>(sig.classCount())) {}

  bool nd(Int k) const { return N % k != 0; }
};

std::optional<Facts> fired(Facts f) { return std::optional<Facts>(std::move(f)); }

// Evidence that a count is zero, i.e. a dimension class is absent.
ArithFact absent(Int dim, Int count) { return equal("m" + std::to_string(dim), count, 0); }

std::vector<FilterRule> buildCatalog() {
  std::vector<FilterRule> rules;

  rules.push_back({"R1", "degree-2 criterion, trivial Pic",
                   "no type (1,1;2,m;...) unless 60 divides FPdim",
                   "n0 = 1, m2 >= 1, 60 does not divide N", RuleScope::Universal, std::nullopt, false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (x.n0 == 1 && x.m2 >= 1 && x.nd(60))
                       return fired({equal("n0", x.n0, 1), atLeast("m2", x.m2, 1), notDivides("60", 60, N)});
                     return std::nullopt;
                   }});

  rules.push_back({"R2", "non-pointed subcategory of dimension 8",
                   "no type (1,n0;2,m;...) with 4 | n0 and m odd unless 8 divides FPdim",
                   "4 | n0, m2 odd, 8 does not divide N", RuleScope::Universal, std::nullopt, false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (x.n0 % 4 == 0 && x.m2 % 2 == 1 && x.nd(8))
                       return fired({divides("4", 4, x.n0), notDivides("2", 2, x.m2), notDivides("8", 8, N)});
                     return std::nullopt;
                   }});

  rules.push_back({"R3", "|Pic| divides FPdim and every n_i d_i^2",
                   "n0 divides FPdim and n*d^2 for every class of simples of dimension d",
                   "n0 does not divide N, or n0 does not divide some n_i d_i^2", RuleScope::Universal, std::nullopt,
                   false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     const Int n0 = sig.pointedCount();
                     if (N % n0 != 0) return fired({notDivides("n0", n0, N)});
                     for (std::size_t i = 1; i < sig.entries().size(); ++i) {
                       const auto& e = sig.entries()[i];
                       const Int v = e.count * e.dim * e.dim;
                       if (v % n0 != 0) return fired({notDivides("n0", n0, v)});
                     }
                     return std::nullopt;
                   }});

  rules.push_back({"R4", "gcd of non-unit dimensions divides |Pic|",
                   "d = gcd(d_1,...,d_s) divides n0 (general form of the two-dimension criterion)",
                   "gcd(d_1..d_s) does not divide n0", RuleScope::Universal, std::nullopt, false,
                   [](const TypeSignature& sig, Int) -> std::optional<Facts> {
                     Int g = 0;
                     for (std::size_t i = 1; i < sig.entries().size(); ++i) g = std::gcd(g, sig.entries()[i].dim);
                     if (sig.pointedCount() % g != 0) return fired({notDivides("gcd(d_i)", g, sig.pointedCount())});
                     return std::nullopt;
                   }});

  rules.push_back({"R5", "trivial Pic needs at least three non-unit dimensions",
                   "no type (1,1;d_1,n_1;...;d_s,n_s) with s <= 2", "n0 = 1 and s <= 2", RuleScope::Universal,
                   std::nullopt, false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (x.n0 == 1 && x.s <= 2) return fired({equal("n0", x.n0, 1), atMost("s", x.s, 2)});
                     return std::nullopt;
                   }});

  rules.push_back({"R6", "degree-2 subcategory, |Pic| = 2",
                   "no type (1,2;2,m;...) unless 24, 60 or 2+4m divides FPdim",
                   "n0 = 2, m2 >= 1, none of 24, 60, 2+4*m2 divides N", RuleScope::Universal, std::nullopt, false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (x.n0 == 2 && x.m2 >= 1 && x.nd(24) && x.nd(60) && x.nd(2 + 4 * x.m2))
                       return fired({equal("n0", x.n0, 2), atLeast("m2", x.m2, 1), notDivides("24", 24, N),
                                     notDivides("60", 60, N), notDivides("2+4*m2", 2 + 4 * x.m2, N)});
                     return std::nullopt;
                   }});

  rules.push_back({"R7", "degree-2 subcategory without dimension-4 simples",
                   "no type (1,n0;2,m;...) without dimension 4 unless 12 or n0+4m divides FPdim",
                   "m2 >= 1, m4 = 0, neither 12 nor n0+4*m2 divides N", RuleScope::Universal, std::nullopt, false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (x.m2 >= 1 && x.m4 == 0 && x.nd(12) && x.nd(x.n0 + 4 * x.m2))
                       return fired({atLeast("m2", x.m2, 1), absent(4, x.m4), notDivides("12", 12, N),
                                     notDivides("n0+4*m2", x.n0 + 4 * x.m2, N)});
                     return std::nullopt;
                   }});

  rules.push_back({"R8", "degree-2 subcategory when the next dimension is at least 5",
                   "no type (1,n0;2,m;d,n;...) with d >= 5 unless n0+4m divides FPdim",
                   "m2 >= 1, m3 = m4 = 0, s >= 2, n0+4*m2 does not divide N", RuleScope::Universal, std::nullopt,
                   false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (x.m2 >= 1 && x.m3 == 0 && x.m4 == 0 && x.s >= 2 && x.nd(x.n0 + 4 * x.m2))
                       return fired({atLeast("m2", x.m2, 1), absent(3, x.m3), absent(4, x.m4), atLeast("s", x.s, 2),
                                     notDivides("n0+4*m2", x.n0 + 4 * x.m2, N)});
                     return std::nullopt;
                   }});

  rules.push_back({"R9", "odd |Pic| with a dimension-2 simple forces a dimension-3 simple",
                   "|Pic| odd and Irr_2 nonempty imply Irr_3 nonempty", "n0 odd, m2 >= 1, m3 = 0",
                   RuleScope::Universal, std::nullopt, false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (x.n0 % 2 == 1 && x.m2 >= 1 && x.m3 == 0)
                       return fired({notDivides("2", 2, x.n0), atLeast("m2", x.m2, 1), absent(3, x.m3)});
                     return std::nullopt;
                   }});

  rules.push_back({"R10", "odd |Pic|, missing dimension 4 or 5, forces a (1,3;3,1) subcategory",
                   "|Pic| odd, Irr_2 nonempty and Irr_4 or Irr_5 empty imply 12 | FPdim",
                   "n0 odd, m2 >= 1, (m4 = 0 or m5 = 0), 12 does not divide N", RuleScope::Universal, std::nullopt,
                   false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (x.n0 % 2 == 1 && x.m2 >= 1 && (x.m4 == 0 || x.m5 == 0) && x.nd(12))
                       return fired({notDivides("2", 2, x.n0), atLeast("m2", x.m2, 1),
                                     x.m4 == 0 ? absent(4, x.m4) : absent(5, x.m5), notDivides("12", 12, N)});
                     return std::nullopt;
                   }});

  rules.push_back({"R11", "trivial Pic with a dimension-2 simple",
                   "Pic trivial and Irr_2 nonempty imply Irr_3, Irr_4, Irr_5 nonempty and 60 | FPdim",
                   "n0 = 1, m2 >= 1, (m3 = 0 or m4 = 0 or m5 = 0 or 60 does not divide N)", RuleScope::Universal,
                   std::nullopt, false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (x.n0 != 1 || x.m2 < 1) return std::nullopt;
                     Facts f{equal("n0", x.n0, 1), atLeast("m2", x.m2, 1)};
                     if (x.m3 == 0) f.push_back(absent(3, x.m3));
                     else if (x.m4 == 0) f.push_back(absent(4, x.m4));
                     else if (x.m5 == 0) f.push_back(absent(5, x.m5));
                     else if (x.nd(60)) f.push_back(notDivides("60", 60, N));
                     else return std::nullopt;
                     return fired(std::move(f));
                   }});

  rules.push_back({"R12", "prime |Pic| other than 2, 3 needs a dimension-4 simple",
                   "Pic of prime order p != 3 with Irr_2 nonempty and Irr_4 empty forces p = 2",
                   "n0 prime, n0 not in {2,3}, m2 >= 1, m4 = 0", RuleScope::Universal, std::nullopt, false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (isPrime(x.n0) && x.n0 != 2 && x.n0 != 3 && x.m2 >= 1 && x.m4 == 0)
                       return fired({prime("n0", x.n0), {Kind::NotEqual, "n0", x.n0, 2},
                                     {Kind::NotEqual, "n0", x.n0, 3}, atLeast("m2", x.m2, 1), absent(4, x.m4)});
                     return std::nullopt;
                   }});

  rules.push_back({"R13", "degree-2 subcategory of dimension 2+4m, |Pic| = 2",
                   "Pic of order 2 with Irr_2 nonempty and (Irr_3 empty, or 12 does not divide FPdim) forces a "
                   "subcategory of dimension 2+4m",
                   "n0 = 2, m2 >= 1, (m3 = 0 or (12 does not divide N and m4 = 0) or (n0 prime and 12 does not "
                   "divide N)), 2+4*m2 does not divide N",
                   RuleScope::Universal, std::nullopt, false,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     if (x.n0 != 2 || x.m2 < 1 || !x.nd(2 + 4 * x.m2)) return std::nullopt;
                     Facts f{equal("n0", x.n0, 2), atLeast("m2", x.m2, 1)};
                     if (x.m3 == 0) {
                       f.push_back(absent(3, x.m3));
                     } else if (x.nd(12) && x.m4 == 0) {
                       f.push_back(notDivides("12", 12, N));
                       f.push_back(absent(4, x.m4));
                     } else if (isPrime(x.n0) && x.nd(12)) {
                       f.push_back(prime("n0", x.n0));
                       f.push_back(notDivides("12", 12, N));
                     } else {
                       return std::nullopt;
                     }
                     f.push_back(notDivides("2+4*m2", 2 + 4 * x.m2, N));
                     return fired(std::move(f));
                   }});

  rules.push_back({"R14", "dimension-90 categories with a dimension-6 subcategory are weakly group-theoretical",
                   "FPdim 90 with a fusion subcategory of dimension 6 implies Frobenius type",
                   "N = 90, not Frobenius type, and a dimension-6 subcategory is forced: n0 = 6, or n0 = 2 with "
                   "a unique dimension-2 simple (then G[x] = Pic and Pic + Irr_2 spans a (1,2;2,1) subring)",
                   RuleScope::DimensionSpecific, Int{90}, true,
                   [](const TypeSignature& sig, Int N) -> std::optional<Facts> {
                     Shape x(sig, N);
                     std::optional<ArithFact> witness;
                     for (const auto& e : sig.entries())
                       if (N % e.dim != 0) {
                         witness = notDivides("d", e.dim, N);
                         break;
                       }
                     if (!witness) return std::nullopt;
                     if (x.n0 == 6) return fired({*witness, equal("n0", x.n0, 6)});
                     if (x.n0 == 2 && x.m2 == 1) return fired({*witness, equal("n0", x.n0, 2), equal("m2", x.m2, 1)});
                     return std::nullopt;
                   }});
  return rules;
}

}  // namespace

bool ArithFact::holds() const {
  switch (kind) {
    case Kind::Divides: return lhs != 0 && rhs % lhs == 0;
    case Kind::NotDivides: return lhs != 0 && rhs % lhs != 0;
    case Kind::Equal: return lhs == rhs;
    case Kind::NotEqual: return lhs != rhs;
    case Kind::AtLeast: return lhs >= rhs;
    case Kind::AtMost: return lhs <= rhs;
    case Kind::Prime: return isPrime(lhs);
    case Kind::NotPrime: return !isPrime(lhs);
  }
  return false;
}

std::string ArithFact::render() const {
  const auto l = std::to_string(lhs);
  const auto r = std::to_string(rhs);
  auto named = [&] { return label == l ? l : label + " = " + l; };
  switch (kind) {
    case Kind::Divides: return named() + " divides " + r;
    case Kind::NotDivides: return named() + " does not divide " + r;
    case Kind::Equal: return label + " = " + r;
    case Kind::NotEqual: return named() + " != " + r;
    case Kind::AtLeast: return named() + " >= " + r;
    case Kind::AtMost: return named() + " <= " + r;
    case Kind::Prime: return named() + " is prime";
    case Kind::NotPrime: return named() + " is not prime";
  }
  return {};
}

const std::vector<FilterRule>& ruleCatalog() {
  static const std::vector<FilterRule> catalog = buildCatalog();
  return catalog;
}

const FilterRule& ruleById(const std::string& id) {
  for (const auto& r : ruleCatalog())
    if (r.id == id) return r;
  throw Error("unknown rule id '" + id + "'");
}

std::vector<std::string> defaultRuleIds() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 13; ++i) ids.push_back("R" + std::to_string(i));
  return ids;
}

std::vector<std::string> arithmeticCriteriaRuleIds() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 8; ++i) ids.push_back("R" + std::to_string(i));
  return ids;
}

std::string ruleCatalogJson() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : ruleCatalog()) {
    nlohmann::json j = {{"id", r.id},
                        {"citation", r.citation},
                        {"quote", r.quote},
                        {"applicability", r.applicability},
                        {"scope", r.scope == RuleScope::Universal ? "universal" : "dimension-specific"},
                        {"opt_in", r.optIn}};
    j["only_fpdim"] = r.onlyN ? nlohmann::json(*r.onlyN) : nlohmann::json(nullptr);
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

namespace {

std::string joinFacts(const Facts& facts) {
  std::string out;
  for (const auto& f : facts) {
    if (!out.empty()) out += "; ";
    out += f.render();
  }
  return out;
}

}  // namespace

FilterVerdict applyRule(const FilterRule& rule, const TypeSignature& sig, Int N) {
  if (!rule.admits(N)) {
    throw ScopeError("rule " + rule.id + " only applies to FPdim " + std::to_string(*rule.onlyN) + ", not " +
                     std::to_string(N));
  }
  if (globalDim(sig) != N) {
    throw Error("dimension mismatch: " + renderSignature(sig) + " does not have global dimension " + std::to_string(N));
  }
  FilterVerdict v{rule.id, false, {}, {}};
  if (auto facts = rule.predicate(sig, N)) {
    v.fired = true;
    v.evidence = std::move(*facts);
    v.detail = joinFacts(v.evidence);
  }
  return v;
}

FilterVerdict frobeniusMarker(const TypeSignature& sig, Int N) {
  FilterVerdict v{"RF", false, {}, {}};
  for (const auto& e : sig.entries()) {
    if (N % e.dim != 0) {
      v.fired = true;
      v.evidence.push_back(notDivides("d", e.dim, N));
    }
  }
  if (v.fired) v.detail = "requires-exclusion: " + joinFacts(v.evidence);
  return v;
}

std::vector<std::string> FilterRecord::firedRules() const {
  std::vector<std::string> out;
  for (const auto& v : verdicts)
    if (v.fired) out.push_back(v.ruleId);
  return out;
}

std::vector<TypeSignature> FilterReport::survivors() const {
  std::vector<TypeSignature> out;
  for (const auto& r : records)
    if (r.survivor) out.push_back(r.signature);
  return out;
}

FilterReport runFilters(const std::vector<TypeSignature>& sigs, const std::vector<std::string>& ruleIds, Int N,
                        unsigned workers) {
  FilterReport report;
  report.N = N;
  std::vector<const FilterRule*> rules;
  for (const auto& id : ruleIds) {
    const auto& rule = ruleById(id);
    if (!rule.admits(N)) continue;
    rules.push_back(&rule);
    report.ruleIds.push_back(id);
  }

  std::vector<TypeSignature> ordered = sigs;
  std::sort(ordered.begin(), ordered.end());
  for (const auto& sig : ordered) {
    if (globalDim(sig) != N)
      throw Error("dimension mismatch: " + renderSignature(sig) + " does not have global dimension " +
                  std::to_string(N));
  }

  std::vector<std::optional<FilterRecord>> slots(ordered.size());
  detail::parallelFor(ordered.size(), workers, [&](std::size_t i) {
    FilterRecord rec{ordered[i], {}, frobeniusMarker(ordered[i], N), true};
    for (const auto* rule : rules) {
      rec.verdicts.push_back(applyRule(*rule, ordered[i], N));
      if (rec.verdicts.back().fired) rec.survivor = false;
    }
    slots[i] = std::move(rec);
  });
  for (auto& s : slots) report.records.push_back(std::move(*s));
  return report;
}

}  // namespace fusionscan
