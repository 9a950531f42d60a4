// JSON and text forms of a ClassificationReport. The JSON is the full record
// and must round-trip; docs/report-schema.md describes it.
#include <algorithm>
#include <json.hpp>
#include <map>

#include "fusionscan/pipeline.hpp"

namespace fusionscan {

using nlohmann::json;

namespace {

const std::pair<ArithFact::Kind, const char*> kKinds[] = {
    {ArithFact::Kind::Divides, "divides"},   {ArithFact::Kind::NotDivides, "not-divides"},
    {ArithFact::Kind::Equal, "equal"},       {ArithFact::Kind::NotEqual, "not-equal"},
    {ArithFact::Kind::AtLeast, "at-least"},  {ArithFact::Kind::AtMost, "at-most"},
    {ArithFact::Kind::Prime, "prime"},       {ArithFact::Kind::NotPrime, "not-prime"},
};

std::string kindName(ArithFact::Kind k) {
  for (const auto& [kind, name] : kKinds)
    if (kind == k) return name;
  return "?";
}

ArithFact::Kind kindFromName(const std::string& s) {
  for (const auto& [kind, name] : kKinds)
    if (s == name) return kind;
  throw ParseError("unknown fact kind '" + s + "'");
}

json verdictJson(const FilterVerdict& v) {
  json ev = json::array();
  for (const auto& f : v.evidence)
    ev.push_back({{"kind", kindName(f.kind)}, {"label", f.label}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"rule", v.ruleId}, {"fired", v.fired}, {"detail", v.detail}, {"evidence", std::move(ev)}};
}

FilterVerdict verdictFrom(const json& j) {
  FilterVerdict v{j.at("rule").get<std::string>(), j.at("fired").get<bool>(), j.at("detail").get<std::string>(), {}};
  for (const auto& f : j.at("evidence"))
    v.evidence.push_back({kindFromName(f.at("kind").get<std::string>()), f.at("label").get<std::string>(),
                          f.at("lhs").get<Int>(), f.at("rhs").get<Int>()});
  return v;
}

json outcomeJson(const SolverOutcome& o) {
  json j = {{"status", to_string(o.status)},
            {"nodes", o.nodesVisited},
            {"exhaustive", o.exhaustive},
            {"frames", o.framesExplored},
            {"reason", o.reason}};
  j["model"] = o.model ? json::parse(fusionTableToJson(*o.model)) : json(nullptr);
  return j;
}

SolverOutcome outcomeFrom(const json& j) {
  SolverOutcome o;
  o.status = parseSolverStatus(j.at("status").get<std::string>());
  o.nodesVisited = j.at("nodes").get<std::uint64_t>();
  o.exhaustive = j.at("exhaustive").get<bool>();
  o.framesExplored = j.at("frames").get<std::uint64_t>();
  o.reason = j.at("reason").get<std::string>();
  if (!j.at("model").is_null()) o.model = fusionTableFromJson(j.at("model").dump());
  return o;
}

json signatures(const std::vector<TypeSignature>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(renderSignature(s));
  return a;
}

std::vector<TypeSignature> signaturesFrom(const json& j) {
  std::vector<TypeSignature> v;
  for (const auto& s : j) v.push_back(parseSignature(s.get<std::string>()));
  return v;
}

}  // namespace

std::string solverOutcomeToJson(const SolverOutcome& outcome) { return outcomeJson(outcome).dump(); }

std::string reportToJson(const ClassificationReport& r, bool includeTiming) {
  json records = json::array();
  for (const auto& rec : r.records) {
    json verdicts = json::array();
    for (const auto& v : rec.filter.verdicts) verdicts.push_back(verdictJson(v));
    json j = {{"signature", renderSignature(rec.filter.signature)},
              {"verdicts", std::move(verdicts)},
              {"frobenius_marker", verdictJson(rec.filter.frobenius)},
              {"passes_rules", rec.filter.survivor},
              {"survivor", rec.survivor}};
    j["solve"] = rec.solve ? json{{"reason", rec.solve->reason}, {"outcome", outcomeJson(rec.solve->outcome)}}
                           : json(nullptr);
    records.push_back(std::move(j));
  }
  json diffs = json::array();
  for (const auto& d : r.discrepancies)
    diffs.push_back({{"kind", d.kind},
                     {"signature", renderSignature(d.signature)},
                     {"expected", d.expected},
                     {"actual", d.actual}});

  json j = {{"fpdim", r.N},
            {"version", r.version},
            {"fingerprint", r.fingerprint},
            {"rules", r.ruleIds},
            {"solve_all", r.solveAll},
            {"solver",
             {{"node_budget", r.solver.nodeBudget},
              {"max_group_order", r.solver.maxGroupOrder},
              {"symmetry_breaking", r.solver.symmetryBreaking},
              {"subring_propagator", r.solver.subringPropagator}}},
            {"candidate_count", r.candidateCount},
            {"records", std::move(records)},
            {"intermediate", signatures(r.intermediate)},
            {"survivors", signatures(r.survivors)},
            {"unknown", signatures(r.unknown)},
            {"discrepancies", std::move(diffs)},
            {"solver_nodes", r.solverNodes}};
  if (includeTiming)
    j["timing"] = {{"enumerate_seconds", r.timing.enumerateSeconds},
                   {"filter_seconds", r.timing.filterSeconds},
                   {"solve_seconds", r.timing.solveSeconds}};
  return j.dump(2) + "\n";
}

ClassificationReport reportFromJson(const std::string& text) {
  try {
    const json j = json::parse(text);
    ClassificationReport r;
    r.N = j.at("fpdim").get<Int>();
    r.version = j.at("version").get<std::string>();
    r.fingerprint = j.at("fingerprint").get<std::string>();
    r.ruleIds = j.at("rules").get<std::vector<std::string>>();
    r.solveAll = j.at("solve_all").get<bool>();
    const auto& s = j.at("solver");
    r.solver.nodeBudget = s.at("node_budget").get<std::uint64_t>();
    r.solver.maxGroupOrder = s.at("max_group_order").get<int>();
    r.solver.symmetryBreaking = s.at("symmetry_breaking").get<bool>();
    r.solver.subringPropagator = s.at("subring_propagator").get<bool>();
    r.candidateCount = j.at("candidate_count").get<std::uint64_t>();
    for (const auto& rj : j.at("records")) {
      SignatureRecord rec{FilterRecord{parseSignature(rj.at("signature").get<std::string>()), {}, {}, false},
                          std::nullopt, false};
      for (const auto& v : rj.at("verdicts")) rec.filter.verdicts.push_back(verdictFrom(v));
      rec.filter.frobenius = verdictFrom(rj.at("frobenius_marker"));
      rec.filter.survivor = rj.at("passes_rules").get<bool>();
      rec.survivor = rj.at("survivor").get<bool>();
      if (!rj.at("solve").is_null())
        rec.solve = SolveRecord{rj.at("solve").at("reason").get<std::string>(), outcomeFrom(rj.at("solve").at("outcome"))};
      r.records.push_back(std::move(rec));
    }
    r.intermediate = signaturesFrom(j.at("intermediate"));
    r.survivors = signaturesFrom(j.at("survivors"));
    r.unknown = signaturesFrom(j.at("unknown"));
    for (const auto& d : j.at("discrepancies"))
      r.discrepancies.push_back({d.at("kind").get<std::string>(), parseSignature(d.at("signature").get<std::string>()),
                                 d.at("expected").get<std::string>(), d.at("actual").get<std::string>()});
    r.solverNodes = j.at("solver_nodes").get<std::uint64_t>();
    if (j.contains("timing")) {
      const auto& t = j.at("timing");
      r.timing = {t.at("enumerate_seconds").get<double>(), t.at("filter_seconds").get<double>(),
                  t.at("solve_seconds").get<double>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string renderText(const ClassificationReport& r) {
  std::string out = "FPdim " + std::to_string(r.N) + ": " + std::to_string(r.survivors.size()) + " possible types (" +
                    std::to_string(r.candidateCount) + " candidates)\n";
  std::map<Int, std::vector<const TypeSignature*>> byPic;
  for (const auto& s : r.survivors) byPic[s.pointedCount()].push_back(&s);
  for (const auto& [n0, sigs] : byPic) {
    out += "|Pic| = " + std::to_string(n0) + "\n";
    for (const auto* s : sigs) {
      out += "  " + renderSignature(*s);
      if (std::find(r.unknown.begin(), r.unknown.end(), *s) != r.unknown.end()) out += "  [solver: Unknown]";
      out += "\n";
    }
  }
  return out;
}

}  // namespace fusionscan
