#include <doctest.h>

#include <filesystem>
#include <set>
#include <unistd.h>

#include "fusionscan/cache.hpp"
#include "fusionscan/pipeline.hpp"

using namespace fusionscan;

namespace {

ClassifyConfig with90() {
  ClassifyConfig c;
  c.enableR14 = true;
  return c;
}

std::set<TypeSignature> asSet(const std::vector<TypeSignature>& v) { return {v.begin(), v.end()}; }

struct TempDir {
  std::filesystem::path path =
      std::filesystem::temp_directory_path() / ("fusionscan-test-" + std::to_string(::getpid()));
  TempDir() { std::filesystem::remove_all(path); }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("trivial inputs") {
  const auto r = classify(4);
  CHECK(r.candidateCount == 0);
  CHECK(r.records.empty());
  CHECK(r.survivors.empty());
  CHECK(renderText(r) == "FPdim 4: 0 possible types (0 candidates)\n");
}

TEST_CASE("N=84 reproduces the list") {
  const auto r = classify(84);
  const auto& ref = ReferenceCatalog::builtin().at(84);
  CHECK(asSet(r.survivors) == asSet(ref.final));
  CHECK(r.discrepancies.empty());
  CHECK(r.unknown.empty());
  CHECK(r.candidateCount == 544);
  CHECK(r.records.size() == 544);
  for (const auto& s : r.survivors) CHECK(isFrobeniusType(s, 84));

  // Only RF-flagged and trivial-Pic survivors are solved by default.
  int solved = 0;
  for (const auto& rec : r.records)
    if (rec.solve) {
      ++solved;
      CHECK(rec.solve->binding());
      CHECK(rec.solve->outcome.status == SolverStatus::Excluded);
      CHECK_FALSE(rec.survivor);
    }
  CHECK(solved == 5);

  const auto text = renderText(r);
  CHECK(text.rfind("FPdim 84: 30 possible types (544 candidates)\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 7 + 30);
  for (int pic : {2, 3, 4, 6, 12, 21, 28}) CHECK(text.find("|Pic| = " + std::to_string(pic) + "\n") != std::string::npos);
}

TEST_CASE("N=90 with the opt-in rule reproduces the list") {
  const auto r = classify(90, with90());
  CHECK(asSet(r.survivors) == asSet(ReferenceCatalog::builtin().at(90).final));
  CHECK(r.discrepancies.empty());
  CHECK(r.unknown.empty());
  const auto text = renderText(r);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 8 + 20);
}

TEST_CASE("N=90 without the opt-in rule reports the difference") {
  const auto r = classify(90);
  CHECK(r.survivors.size() == 23);
  int extra = 0;
  for (const auto& d : r.discrepancies) extra += d.kind == "extra";
  CHECK(extra == 3);
  CHECK(r.unknown.size() == 1);
}

TEST_CASE("solve-all never removes a type on its own") {
  ClassifyConfig c = with90();
  c.solveAll = true;
  c.solver.nodeBudget = 2000;
  const auto r = classify(90, c);
  CHECK(asSet(r.survivors) == asSet(ReferenceCatalog::builtin().at(90).final));
  int informational = 0;
  for (const auto& rec : r.records)
    if (rec.solve && !rec.solve->binding()) {
      ++informational;
      CHECK(rec.survivor);
      if (rec.solve->outcome.model) CHECK(verifyFusionTable(*rec.solve->outcome.model).empty());
    }
  CHECK(informational == 20);
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  ClassifyConfig c;
  c.workers = 3;
  const auto a = classify(84, c);
  const auto b = classify(84);
  CHECK(reportToJson(a, false) == reportToJson(b, false));
  CHECK(a.fingerprint == b.fingerprint);  // workers do not enter the fingerprint

  const auto json = reportToJson(a);
  const auto back = reportFromJson(json);
  CHECK(reportToJson(back) == json);
  CHECK(back.survivors == a.survivors);
  CHECK_THROWS_AS(reportFromJson("{}"), ParseError);
  CHECK_THROWS_AS(reportFromJson("not json"), ParseError);
}

TEST_CASE("fingerprint covers the config") {
  ClassifyConfig c;
  const auto base = configFingerprint(90, c);
  CHECK(configFingerprint(84, c) != base);
  c.enableR14 = true;
  CHECK(configFingerprint(90, c) != base);
  CHECK(configFingerprint(84, c) == configFingerprint(84, ClassifyConfig{}));  // R14 is not admitted for 84
  c = {};
  c.solver.nodeBudget = 5;
  CHECK(configFingerprint(90, c) != base);
  c = {};
  c.solveAll = true;
  CHECK(configFingerprint(90, c) != base);
}

TEST_CASE("diffReference flags removed survivors") {
  auto r = classify(84);
  CHECK(diffReference(r, ReferenceCatalog::builtin()).empty());
  r.survivors.erase(r.survivors.begin());
  const auto d = diffReference(r, ReferenceCatalog::builtin());
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == "missing");
}

TEST_CASE("cache hits reproduce the cold run") {
  TempDir dir;
  ClassifyConfig c = with90();
  bool hit = true;
  const auto cold = classifyCached(90, c, dir.path, &hit);
  CHECK_FALSE(hit);
  const auto warm = classifyCached(90, c, dir.path, &hit);
  CHECK(hit);
  CHECK(reportToJson(warm) == reportToJson(cold));

  c.solver.nodeBudget = 12345;
  classifyCached(90, c, dir.path, &hit);
  CHECK_FALSE(hit);
  CHECK(cacheKey(90, c) != cacheKey(90, with90()));

  // A corrupted entry is ignored, not trusted.
  for (const auto& f : std::filesystem::directory_iterator(dir.path)) std::filesystem::resize_file(f.path(), 10);
  CHECK_FALSE(cacheLoad(dir.path, 90, c));
}
