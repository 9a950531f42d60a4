#include "fusionscan/reference.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>

namespace fusionscan {

namespace detail {
extern const std::string_view kReferenceCatalogText;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::string joinIds(const std::vector<std::string>& ids) {
  std::string s;
  for (const auto& id : ids) s += (s.empty() ? "" : "|") + id;
  return s;
}

}  // namespace

std::vector<TypeSignature> CatalogEntry::intermediateSet() const {
  std::vector<TypeSignature> out = final;
  out.insert(out.end(), intermediate.begin(), intermediate.end());
  std::sort(out.begin(), out.end());
  return out;
}

ReferenceCatalog ReferenceCatalog::parse(const std::string& text) {
  ReferenceCatalog cat;
  std::istringstream in(text);
  std::string raw;
  int lineNo = 0;
  CatalogEntry* cur = nullptr;
  std::string section;
  auto fail = [&](const std::string& why) { throw ParseError("catalog line " + std::to_string(lineNo) + ": " + why); };

  while (std::getline(in, raw)) {
    ++lineNo;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.rfind("# N=", 0) == 0) {
      Int n = 0;
      try {
        n = std::stoll(line.substr(4));
      } catch (const std::exception&) {
        fail("bad block header");
      }
      if (cat.entries_.count(n)) fail("duplicate block for N=" + std::to_string(n));
      cur = &cat.entries_[n];
      cur->N = n;
      section.clear();
      continue;
    }
    if (line[0] == '#') continue;
    if (line[0] == '@') {
      if (!cur) fail("section outside a block");
      section = line.substr(1);
      if (section != "final" && section != "intermediate" && section != "excluded") fail("unknown section " + line);
      continue;
    }
    if (!cur || section.empty()) fail("entry outside a section");

    std::istringstream fields(line);
    std::string sigText, killer;
    fields >> sigText >> killer;
    std::optional<TypeSignature> parsed;
    try {
      parsed = parseSignature(sigText);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    const TypeSignature& sig = *parsed;
    if (globalDim(sig) != cur->N) fail(sigText + " has dimension " + std::to_string(globalDim(sig)));
    if (section == "final") {
      cur->final.push_back(sig);
    } else if (section == "intermediate") {
      cur->intermediate.push_back(sig);
    } else {
      if (killer.empty()) fail("excluded entry needs a killer");
      ExpectedExclusion ex{sig, {}};
      std::size_t pos = 0;
      while (pos <= killer.size()) {
        const auto bar = killer.find('|', pos);
        ex.killers.push_back(killer.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos));
        if (bar == std::string::npos) break;
        pos = bar + 1;
      }
      cur->excluded.push_back(std::move(ex));
    }
  }
  for (auto& [n, e] : cat.entries_) {
    std::sort(e.final.begin(), e.final.end());
    std::sort(e.intermediate.begin(), e.intermediate.end());
    std::set<TypeSignature> all;
    for (const auto* list : {&e.final, &e.intermediate})
      for (const auto& s : *list)
        if (!all.insert(s).second) throw ParseError("catalog: " + renderSignature(s) + " listed twice for N=" + std::to_string(n));
  }
  return cat;
}

const ReferenceCatalog& ReferenceCatalog::builtin() {
  static const ReferenceCatalog cat = parse(std::string(detail::kReferenceCatalogText));
  return cat;
}

const CatalogEntry& ReferenceCatalog::at(Int N) const {
  auto it = entries_.find(N);
  if (it == entries_.end()) throw Error("reference catalog has no entry for N=" + std::to_string(N));
  return it->second;
}

std::vector<Int> ReferenceCatalog::dimensions() const {
  std::vector<Int> out;
  for (const auto& [n, e] : entries_) out.push_back(n);
  return out;
}

std::vector<DiffRecord> diffAgainst(const RunSummary& run, const ReferenceCatalog& catalog) {
  const auto& entry = catalog.at(run.N);
  std::map<TypeSignature, std::vector<std::string>> expectedKiller;
  for (const auto& ex : entry.excluded) expectedKiller[ex.signature] = ex.killers;
  auto expectedOf = [&](const TypeSignature& s) {
    auto it = expectedKiller.find(s);
    return it == expectedKiller.end() ? std::string() : joinIds(it->second);
  };
  auto actualOf = [&](const TypeSignature& s) {
    auto it = run.killers.find(s);
    return it == run.killers.end() ? std::string() : joinIds(it->second);
  };

  std::vector<DiffRecord> out;
  auto compare = [&](const std::vector<TypeSignature>& want, std::vector<TypeSignature> got, const std::string& missing,
                     const std::string& extra) {
    std::sort(got.begin(), got.end());
    std::vector<TypeSignature> d;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(d));
    for (const auto& s : d) out.push_back({missing, s, "", actualOf(s)});
    d.clear();
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(d));
    for (const auto& s : d) out.push_back({extra, s, expectedOf(s), ""});
  };
  compare(entry.final, run.survivors, "missing", "extra");
  compare(entry.intermediateSet(), run.intermediate, "intermediate-missing", "intermediate-extra");

  for (const auto& ex : entry.excluded) {
    auto it = run.killers.find(ex.signature);
    if (it == run.killers.end()) continue;  // survived or never reached: covered above
    const bool matched = std::any_of(ex.killers.begin(), ex.killers.end(), [&](const std::string& k) {
      return std::find(it->second.begin(), it->second.end(), k) != it->second.end();
    });
    if (!matched) out.push_back({"attribution", ex.signature, joinIds(ex.killers), joinIds(it->second)});
  }
  return out;
}

}  // namespace fusionscan
