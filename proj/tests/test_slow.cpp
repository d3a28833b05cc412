#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "cotan/ci_analysis.hpp"
#include "cotan/ideal_file.hpp"

using namespace cotan;

namespace {

std::map<int, int> cot_row(const CIReport& rep, int i) {
  for (const VanishingRow& row : rep.cotangent)
    if (row.i == i) return row.dims;
  FAIL("missing cotangent row " << i);
  return {};
}

}  // namespace

TEST_CASE("full classification of the generic 2x3 minors ideal") {
  if (!std::getenv("COTAN_RUN_SLOW")) {
    MESSAGE("set COTAN_RUN_SLOW=1 to run the minute-scale classification");
    return;
  }
  IdealPresentation p = parse_ideal_text(
      "ring a b c d e f;\n"
      "gens a*e - b*d, a*f - c*d, b*f - c*e;\n"
      "flag generically_ci true\n");
  CIReport rep = classify(p, ClassifyOptions{});

  CHECK(rep.verdict == "not a complete intersection");
  CHECK(rep.invariants.mu == 3);
  CHECK(rep.invariants.height == 2);
  CHECK(rep.invariants.dim_s == 4);
  CHECK(rep.invariants.almost_complete_intersection);

  CHECK(rep.perfect == TriState::kYes);
  CHECK(rep.gorenstein == TriState::kNo);
  CHECK(rep.r_resolution.complete);
  CHECK(rep.r_resolution.length == 2);
  CHECK(rep.r_resolution.betti == std::vector<int>{1, 3, 2});

  // height-2 perfect and generically ci: nonvanishing must show at T_4 exactly
  CHECK(cot_row(rep, 2).empty());
  CHECK(cot_row(rep, 3).empty());
  CHECK(cot_row(rep, 4) == std::map<int, int>{{6, 1}});
  CHECK(cot_row(rep, 5).empty());
  CHECK_FALSE(rep.cotangent_all_vanish);
  CHECK(rep.conjecture_consistent);

  CHECK(rep.deviations == std::vector<int>{0, 6, 3, 2, 3, 6});
  CHECK(rep.rank_shift_ok);
  CHECK(rep.tor2 == std::map<int, int>{
                        {4, 3}, {5, 12}, {6, 30}, {7, 60}, {8, 105}, {9, 168}, {10, 252}});
  CHECK(rep.tkos.all_ok);
  CHECK(rep.wedge.all_ok);

  CHECK(rep.poincare.ok);
  REQUIRE(rep.poincare.betti.size() >= 6);
  CHECK(std::vector<int>(rep.poincare.betti.begin(), rep.poincare.betti.begin() + 6) ==
        std::vector<int>{1, 6, 18, 40, 81, 162});
  CHECK_FALSE(rep.k_resolution.complete);

  // the depth-limited betti window is too short for any safe recurrence guess
  CHECK_FALSE(rep.mahler.ran);
  CHECK(rep.mahler.note.find("no linear recurrence") != std::string::npos);
}
