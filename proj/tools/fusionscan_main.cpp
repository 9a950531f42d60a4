// fusionscan: command-line front end for the classification pipeline.
//
// Exit codes: 0 ok, 1 usage or input error, 2 reference diff has binding
// differences (diff, classify --check), 3 Unknown outcomes with --strict.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "fusionscan/cache.hpp"
#include "fusionscan/enumerator.hpp"
#include "fusionscan/filters.hpp"
#include "fusionscan/pipeline.hpp"
#include "fusionscan/reference.hpp"
#include "fusionscan/solver.hpp"

namespace fs = fusionscan;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDiff = 2;
constexpr int kExitUnknown = 3;

std::vector<std::string> splitIds(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string id;
  while (std::getline(in, id, ','))
    if (!id.empty()) out.push_back(id);
  return out;
}

void writeOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw fs::Error("cannot write " + path);
  out << text;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fs::Error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void printDiff(const std::vector<fs::DiffRecord>& diff) {
  for (const auto& d : diff) {
    std::cout << d.kind << "\t" << fs::renderSignature(d.signature);
    if (!d.expected.empty()) std::cout << "\texpected-killer=" << d.expected;
    if (!d.actual.empty()) std::cout << "\tactual=" << d.actual;
    std::cout << "\n";
  }
}

bool hasBinding(const std::vector<fs::DiffRecord>& diff) {
  return std::any_of(diff.begin(), diff.end(), [](const fs::DiffRecord& d) { return d.binding(); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate, filter and certify types of integral fusion categories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FUSIONSCAN_VERSION);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List every candidate type of global dimension N");
  fs::Int enumN = 0;
  bool countOnly = false;
  enumerate->add_option("--fpdim", enumN, "Global dimension N")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--count-only", countOnly, "Print only the number of candidates");

  // filter
  auto* filter = app.add_subcommand("filter", "Apply exclusion rules to every candidate");
  fs::Int filterN = 0;
  std::string filterRules;
  bool filterR14 = false, listRules = false;
  std::string filterFormat = "text";
  unsigned filterWorkers = 1;
  filter->add_option("--fpdim", filterN, "Global dimension N")->check(CLI::PositiveNumber);
  filter->add_option("--rules", filterRules, "Comma-separated rule ids (default R1..R13)");
  filter->add_flag("--enable-cor90-6", filterR14, "Also apply the opt-in rule R14 (N=90 only)");
  filter->add_flag("--list-rules", listRules, "Print the rule catalog as JSON and exit");
  filter->add_option("--output", filterFormat, "text or json")->check(CLI::IsMember({"text", "json"}));
  filter->add_option("--workers", filterWorkers, "Worker threads")->check(CLI::PositiveNumber);

  // solve
  auto* solveCmd = app.add_subcommand("solve", "Decide fusion-ring realizability of one type");
  std::string typeText, tracePath;
  std::uint64_t solveBudget = fs::SolverConfig{}.nodeBudget;
  bool noSymmetry = false, noSubring = false, solveStrict = false;
  std::string solveFormat = "text";
  solveCmd->add_option("--type", typeText, "Type, e.g. \"(1,2;2,2;4,5)\"")->required();
  solveCmd->add_option("--budget", solveBudget, "Decision-node budget")->check(CLI::PositiveNumber);
  solveCmd->add_option("--trace", tracePath, "Write the derivation trace to this file");
  solveCmd->add_flag("--no-symmetry-breaking", noSymmetry, "Search every labeling");
  solveCmd->add_flag("--no-subring-propagator", noSubring, "Disable the subring-divisibility pruning");
  solveCmd->add_flag("--strict", solveStrict, "Exit 3 when the outcome is Unknown");
  solveCmd->add_option("--output", solveFormat, "text or json")->check(CLI::IsMember({"text", "json"}));

  // classify
  auto* classifyCmd = app.add_subcommand("classify", "Run the whole pipeline for one N");
  fs::Int classN = 0;
  bool classR14 = false, solveAll = false, check = false, classStrict = false, noCache = false;
  std::uint64_t classBudget = fs::SolverConfig{}.nodeBudget;
  std::string classFormat = "text", cacheDir, outPath;
  unsigned classWorkers = 1;
  classifyCmd->add_option("--fpdim", classN, "Global dimension N")->required()->check(CLI::PositiveNumber);
  classifyCmd->add_flag("--enable-cor90-6", classR14, "Also apply the opt-in rule R14 (N=90 only)");
  classifyCmd->add_flag("--solve-all", solveAll, "Also solve the remaining survivors (informational)");
  classifyCmd->add_option("--budget", classBudget, "Decision-node budget per solve")->check(CLI::PositiveNumber);
  classifyCmd->add_option("--output", classFormat, "text or json")->check(CLI::IsMember({"text", "json"}));
  classifyCmd->add_option("--cache", cacheDir, "Cache directory (FUSIONSCAN_CACHE is used when omitted)");
  classifyCmd->add_flag("--no-cache", noCache, "Neither read nor write the cache");
  classifyCmd->add_option("--out", outPath, "Write the rendered report here instead of stdout");
  classifyCmd->add_flag("--check", check, "Exit 2 when survivors differ from the reference catalog");
  classifyCmd->add_flag("--strict", classStrict, "Exit 3 when any binding solve is Unknown");
  classifyCmd->add_option("--workers", classWorkers, "Worker threads")->check(CLI::PositiveNumber);

  // diff
  auto* diffCmd = app.add_subcommand("diff", "Compare a saved JSON report with the reference catalog");
  fs::Int diffN = 0;
  std::string reportPath;
  diffCmd->add_option("--fpdim", diffN, "Global dimension N")->required()->check(CLI::PositiveNumber);
  diffCmd->add_option("--report", reportPath, "Report written by classify --output json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) {
      if (countOnly) {
        std::cout << fs::countSignatures(enumN) << "\n";
      } else {
        for (const auto& s : fs::enumerateSignatures(enumN)) std::cout << fs::renderSignature(s) << "\n";
      }
      return 0;
    }

    if (*filter) {
      if (listRules) {
        std::cout << fs::ruleCatalogJson() << "\n";
        return 0;
      }
      if (filterN == 0) throw CLI::RequiredError("--fpdim");
      auto ids = filterRules.empty() ? fs::defaultRuleIds() : splitIds(filterRules);
      for (const auto& id : ids) {
        const auto& rule = fs::ruleById(id);
        if (!rule.admits(filterN))
          throw fs::ScopeError(id + " only applies to N=" + std::to_string(*rule.onlyN));
      }
      if (filterR14 && fs::ruleById("R14").admits(filterN) && std::find(ids.begin(), ids.end(), "R14") == ids.end())
        ids.push_back("R14");
      const auto report = fs::runFilters(fs::enumerateSignatures(filterN), ids, filterN, filterWorkers);
      if (filterFormat == "json") {
        nlohmann::json recs = nlohmann::json::array();
        for (const auto& r : report.records)
          recs.push_back({{"signature", fs::renderSignature(r.signature)},
                          {"fired", r.firedRules()},
                          {"non_frobenius", r.frobenius.fired},
                          {"survivor", r.survivor}});
        std::cout << nlohmann::json{{"fpdim", filterN}, {"rules", report.ruleIds}, {"records", recs}}.dump(2) << "\n";
      } else {
        for (const auto& r : report.records) {
          std::cout << fs::renderSignature(r.signature);
          const auto fired = r.firedRules();
          if (fired.empty()) {
            std::cout << "\tsurvives";
          } else {
            std::cout << "\t";
            for (std::size_t i = 0; i < fired.size(); ++i) std::cout << (i ? "," : "") << fired[i];
          }
          if (r.frobenius.fired) std::cout << "\tRF";
          std::cout << "\n";
        }
        std::cout << "survivors: " << report.survivors().size() << " of " << report.records.size() << "\n";
      }
      return 0;
    }

    if (*solveCmd) {
      fs::SolverConfig cfg;
      cfg.nodeBudget = solveBudget;
      cfg.symmetryBreaking = !noSymmetry;
      cfg.subringPropagator = !noSubring;
      cfg.recordTrace = !tracePath.empty();
      const auto sig = fs::parseSignature(typeText);
      const auto out = fs::solve(sig, cfg);
      if (!tracePath.empty()) {
        std::string text;
        for (const auto& line : out.trace) text += line + "\n";
        if (out.traceDropped) text += "# " + std::to_string(out.traceDropped) + " further steps not recorded\n";
        writeOut(tracePath, text);
      }
      if (solveFormat == "json") {
        std::cout << nlohmann::json::parse(fs::solverOutcomeToJson(out)).dump(2) << "\n";
      } else {
        std::cout << fs::renderSignature(sig) << " N=" << fs::globalDim(sig) << "\n"
                  << "status: " << fs::to_string(out.status) << "\n"
                  << "exhaustive: " << (out.exhaustive ? "yes" : "no") << "\n"
                  << "nodes: " << out.nodesVisited << "\n"
                  << "frames: " << out.framesExplored << "\n";
        if (!out.reason.empty()) std::cout << "reason: " << out.reason << "\n";
        if (out.model) std::cout << "model: " << fs::fusionTableToJson(*out.model) << "\n";
      }
      return solveStrict && out.status == fs::SolverStatus::Unknown ? kExitUnknown : 0;
    }

    if (*classifyCmd) {
      fs::ClassifyConfig cfg;
      cfg.enableR14 = classR14;
      cfg.solveAll = solveAll;
      cfg.solver.nodeBudget = classBudget;
      cfg.workers = classWorkers;
      if (check && !fs::ReferenceCatalog::builtin().has(classN))
        throw fs::Error("--check: the reference catalog has no entry for N=" + std::to_string(classN));

      std::string dir = cacheDir;
      if (dir.empty())
        if (const char* env = std::getenv("FUSIONSCAN_CACHE"); env && *env) dir = env;
      bool hit = false;
      const auto report = (!noCache && !dir.empty()) ? fs::classifyCached(classN, cfg, dir, &hit) : fs::classify(classN, cfg);
      if (hit) std::cerr << "fusionscan: using cached report from " << dir << "\n";

      writeOut(outPath, classFormat == "json" ? fs::reportToJson(report) : fs::renderText(report));
      if (classFormat == "text" && !report.discrepancies.empty()) {
        std::cerr << "discrepancies against the reference catalog:\n";
        for (const auto& d : report.discrepancies)
          std::cerr << "  " << d.kind << " " << fs::renderSignature(d.signature) << "\n";
      }
      if (check && hasBinding(report.discrepancies)) return kExitDiff;
      if (classStrict && !report.unknown.empty()) return kExitUnknown;
      return 0;
    }

    if (*diffCmd) {
      const auto report = fs::reportFromJson(readFile(reportPath));
      if (report.N != diffN)
        throw fs::Error("report is for N=" + std::to_string(report.N) + ", not " + std::to_string(diffN));
      const auto diff = fs::diffReference(report, fs::ReferenceCatalog::builtin());
      printDiff(diff);
      if (diff.empty()) std::cout << "no differences\n";
      return hasBinding(diff) ? kExitDiff : 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "fusionscan: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "fusionscan: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
