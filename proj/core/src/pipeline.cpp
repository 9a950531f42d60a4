#include "fusionscan/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "fusionscan/enumerator.hpp"
#include "parallel.hpp"

namespace fusionscan {

std::vector<std::string> ClassifyConfig::effectiveRules(Int N) const {
  std::vector<std::string> ids = ruleIds.empty() ? defaultRuleIds() : ruleIds;
  if (enableR14 && std::find(ids.begin(), ids.end(), "R14") == ids.end() && ruleById("R14").admits(N))
    ids.push_back("R14");
  return ids;
}

std::string configFingerprint(Int N, const ClassifyConfig& config) {
  std::string s = "fusionscan/" FUSIONSCAN_VERSION ";N=" + std::to_string(N) + ";rules=";
  bool first = true;
  for (const auto& id : config.effectiveRules(N)) {
    s += (first ? "" : ",") + id;
    first = false;
  }
  const auto& sc = config.solver;
  s += ";solveAll=" + std::to_string(config.solveAll) + ";budget=" + std::to_string(sc.nodeBudget) +
       ";maxGroupOrder=" + std::to_string(sc.maxGroupOrder) + ";symmetryBreaking=" + std::to_string(sc.symmetryBreaking) +
       ";subring=" + std::to_string(sc.subringPropagator);
  return s;
}

RunSummary ClassificationReport::summary() const {
  RunSummary s;
  s.N = N;
  s.survivors = survivors;
  s.intermediate = intermediate;
  for (const auto& rec : records) {
    if (rec.survivor) continue;
    auto fired = rec.filter.firedRules();
    if (fired.empty()) fired.push_back("solver");
    s.killers.emplace(rec.filter.signature, std::move(fired));
  }
  return s;
}

std::vector<DiffRecord> diffReference(const ClassificationReport& report, const ReferenceCatalog& catalog) {
  return diffAgainst(report.summary(), catalog);
}

ClassificationReport classify(Int N, const ClassifyConfig& config) {
  using Clock = std::chrono::steady_clock;
  auto seconds = [](Clock::time_point a, Clock::time_point b) { return std::chrono::duration<double>(b - a).count(); };

  ClassificationReport rep;
  rep.N = N;
  rep.version = FUSIONSCAN_VERSION;
  rep.fingerprint = configFingerprint(N, config);
  rep.solveAll = config.solveAll;
  rep.solver = config.solver;
  rep.solver.recordTrace = false;

  const auto t0 = Clock::now();
  const auto candidates = N >= 2 ? enumerateSignatures(N) : std::vector<TypeSignature>{};
  rep.candidateCount = candidates.size();
  const auto t1 = Clock::now();
  auto filtered = runFilters(candidates, config.effectiveRules(N), N, config.workers);
  rep.ruleIds = filtered.ruleIds;
  const auto t2 = Clock::now();

  const auto arithmetic = arithmeticCriteriaRuleIds();
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < filtered.records.size(); ++i) {
    auto& fr = filtered.records[i];
    const bool arithmeticSurvivor = std::none_of(fr.verdicts.begin(), fr.verdicts.end(), [&](const FilterVerdict& v) {
      return v.fired && std::find(arithmetic.begin(), arithmetic.end(), v.ruleId) != arithmetic.end();
    });
    if (arithmeticSurvivor) rep.intermediate.push_back(fr.signature);
    rep.records.push_back({std::move(fr), std::nullopt, false});
    const auto& rec = rep.records.back();
    if (!rec.filter.survivor) continue;
    if (rec.filter.frobenius.fired) {
      rep.records.back().solve = SolveRecord{"non-frobenius", {}};
    } else if (rec.filter.signature.pointedCount() == 1) {
      rep.records.back().solve = SolveRecord{"trivial-pic", {}};
    } else if (config.solveAll) {
      rep.records.back().solve = SolveRecord{"informational", {}};
    } else {
      continue;
    }
    targets.push_back(i);
  }

  SolverConfig sc = config.solver;
  sc.recordTrace = false;
  detail::parallelFor(targets.size(), config.workers, [&](std::size_t k) {
    auto& rec = rep.records[targets[k]];
    rec.solve->outcome = solve(rec.filter.signature, sc);
  });
  const auto t3 = Clock::now();

  for (auto& rec : rep.records) {
    if (rec.solve) rep.solverNodes += rec.solve->outcome.nodesVisited;
    rec.survivor = rec.filter.survivor;
    if (!rec.survivor || !rec.solve || !rec.solve->binding()) continue;
    if (rec.solve->outcome.status == SolverStatus::Excluded) rec.survivor = false;
    if (rec.solve->outcome.status == SolverStatus::Unknown) rep.unknown.push_back(rec.filter.signature);
  }
  for (const auto& rec : rep.records)
    if (rec.survivor) rep.survivors.push_back(rec.filter.signature);

  if (ReferenceCatalog::builtin().has(N)) rep.discrepancies = diffReference(rep, ReferenceCatalog::builtin());
  rep.timing = {seconds(t0, t1), seconds(t1, t2), seconds(t2, t3)};
  return rep;
}

}  // namespace fusionscan
