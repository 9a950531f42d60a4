#include <doctest.h>

#include <set>

#include "fusionscan/reference.hpp"

using namespace fusionscan;

TEST_CASE("builtin catalog invariants") {
  const auto& cat = ReferenceCatalog::builtin();
  CHECK(cat.dimensions() == std::vector<Int>{84, 90});
  CHECK_FALSE(cat.has(60));
  CHECK_THROWS_AS(cat.at(60), Error);

  const auto& e84 = cat.at(84);
  const auto& e90 = cat.at(90);
  CHECK(e84.final.size() == 30);
  CHECK(e90.final.size() == 20);
  CHECK(e84.intermediateSet().size() == 35);
  CHECK(e90.intermediateSet().size() == 37);
  CHECK(e84.excluded.size() == 5);
  CHECK(e90.excluded.size() == 17);

  for (Int N : {84, 90}) {
    const auto& e = cat.at(N);
    std::set<Int> pic;
    for (const auto& s : e.final) {
      CHECK(globalDim(s) == N);
      CHECK(isFrobeniusType(s, N));
      pic.insert(s.pointedCount());
    }
    for (const auto& s : e.intermediate) CHECK(globalDim(s) == N);
    for (const auto& x : e.excluded) {
      CHECK(globalDim(x.signature) == N);
      CHECK_FALSE(x.killers.empty());
    }
    if (N == 84) CHECK(pic == std::set<Int>{2, 3, 4, 6, 12, 21, 28});
    if (N == 90) CHECK(pic == std::set<Int>{2, 6, 9, 10, 15, 18, 30, 45});
  }
}

TEST_CASE("every N=84 and N=90 exclusion with solver as killer is one of the eleven") {
  int solverKills = 0;
  for (Int N : {84, 90})
    for (const auto& x : ReferenceCatalog::builtin().at(N).excluded)
      solverKills += x.killers == std::vector<std::string>{"solver"};
  CHECK(solverKills == 11);
}

TEST_CASE("parse") {
  const auto cat = ReferenceCatalog::parse(
      "# N=10\n"
      "@final\n"
      "(1,2;2,2)\n"
      "\n"
      "# a comment\n"
      "@excluded\n"
      "(1,1;3,1)  R4|R5\n");
  REQUIRE(cat.has(10));
  CHECK(cat.at(10).final.size() == 1);
  CHECK(cat.at(10).excluded.at(0).killers == std::vector<std::string>{"R4", "R5"});

  CHECK_THROWS_AS(ReferenceCatalog::parse("(1,2;2,1)\n"), ParseError);                 // no header
  CHECK_THROWS_AS(ReferenceCatalog::parse("# N=7\n@final\n(1,2;2,1)\n"), ParseError);  // wrong N
  CHECK_THROWS_AS(ReferenceCatalog::parse("# N=6\n@final\n(1,2;2\n"), ParseError);
  CHECK_THROWS_AS(ReferenceCatalog::parse("# N=6\n@final\n(1,2;2,1)\n(1,2;2,1)\n"), ParseError);
}

TEST_CASE("diff against a summary") {
  const auto& cat = ReferenceCatalog::builtin();
  RunSummary run;
  run.N = 90;
  run.survivors = cat.at(90).final;
  run.intermediate = cat.at(90).intermediateSet();
  CHECK(diffAgainst(run, cat).empty());

  run.survivors.pop_back();
  auto d = diffAgainst(run, cat);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == "missing");
  CHECK(d[0].binding());

  run.survivors = cat.at(90).final;
  run.survivors.push_back(parseSignature("(1,5;2,10;3,5)"));
  d = diffAgainst(run, cat);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == "extra");
  CHECK(d[0].expected == "R10");

  run.survivors = cat.at(90).final;
  run.killers[parseSignature("(1,5;2,10;3,5)")] = {"R3"};
  d = diffAgainst(run, cat);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == "attribution");
  CHECK_FALSE(d[0].binding());

  run.killers.clear();
  run.intermediate.pop_back();
  d = diffAgainst(run, cat);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == "intermediate-missing");
  CHECK_FALSE(d[0].binding());

  run.N = 60;
  CHECK_THROWS_AS(diffAgainst(run, cat), Error);
}
