#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "cotan/ci_analysis.hpp"
#include "cotan/ideal_file.hpp"
#include "cotan/json_out.hpp"

using namespace cotan;

namespace {

std::map<int, int> cot_row(const CIReport& rep, int i) {
  for (const VanishingRow& row : rep.cotangent)
    if (row.i == i) return row.dims;
  FAIL("missing cotangent row " << i);
  return {};
}

std::string thrown_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("ideal file happy path") {
  IdealPresentation p = parse_ideal_text("ring x y; gens x^2, x*y, y^2");
  CHECK(p.ring->nvars() == 2);
  CHECK(p.ring->var_names == std::vector<std::string>{"x", "y"});
  CHECK(p.ring->weights == std::vector<int>{1, 1});
  REQUIRE(p.gens.size() == 3);
  for (const Poly& g : p.gens) CHECK(g.degree() == 2);
  CHECK(p.gens[1].to_string() == "x*y");
  CHECK(p.flags.empty());
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("ideal file weights flags comments and separators") {
  IdealPresentation p = parse_ideal_text(
      "# header comment\n"
      "ring x y;  # trailing comment\n"
      "weights 1 2;\n"
      "gens y - x^2;\n"
      "flag generically_ci true;\n"
      "flag extra false\n");
  CHECK(p.ring->weights == std::vector<int>{1, 2});
  REQUIRE(p.gens.size() == 1);
  CHECK_NOTHROW(p.validate());  // homogeneous for the declared weights
  CHECK(p.flags.at("generically_ci"));
  CHECK_FALSE(p.flags.at("extra"));

  // rational coefficients and explicit products
  IdealPresentation q = parse_ideal_text("ring x; gens 1/2 * x^2 + x*x");
  REQUIRE(q.gens.size() == 1);
  CHECK(q.gens[0] == Poly::variable(q.ring, 0, 2) * Rat(3, 2));
}

TEST_CASE("ideal file errors carry positions") {
  CHECK(thrown_message([] { parse_ideal_text("ring x;\ngens y"); }).find("line 2") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_ideal_text("gens x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text("ring x; ring y; gens x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text("ring x; gens x; gens x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text("weights 1; ring x; gens x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text("ring x; weights 1 2; gens x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text("ring x; weights 0; gens x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text("ring x; gens x^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text("ring x; gens x^1001"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text("ring x; gens 1/0 * x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text("ring x; flag f maybe; gens x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text(""), std::invalid_argument);

  // inhomogeneity is caught by validate, with both degrees in the message
  IdealPresentation p = parse_ideal_text("ring x; gens x + x^2");
  std::string msg = thrown_message([&] { p.validate(); });
  CHECK(msg.find('1') != std::string::npos);
  CHECK(msg.find('2') != std::string::npos);
}

TEST_CASE("sequence files") {
  std::vector<Rat> seq = parse_sequence_text("1\n2\n# comment\n\n3/2\n-4\n");
  CHECK(seq == std::vector<Rat>{Rat(1), Rat(2), Rat(3, 2), Rat(-4)});
  CHECK_THROWS_AS(parse_sequence_text("1\nabc\n"), std::invalid_argument);
  CHECK(parse_sequence_text("# only comments\n").empty());
}

TEST_CASE("classifier on the principal ideal") {
  IdealPresentation p = parse_ideal_text("ring x; gens x");
  CIReport rep = classify(p, ClassifyOptions{});
  CHECK(rep.verdict == "complete intersection");
  CHECK(rep.invariants.complete_intersection);
  CHECK(rep.cotangent_all_vanish);
  CHECK(rep.conjecture_consistent);
  CHECK(rep.perfect == TriState::kYes);
  CHECK(rep.gorenstein == TriState::kYes);
  CHECK(rep.rank_shift_ok);
  CHECK(rep.tkos.all_ok);
  CHECK(rep.wedge.all_ok);
  CHECK(rep.poincare.ok);
  CHECK(rep.tail.vanishes);
  for (const VanishingRow& row : rep.cotangent) {
    CHECK(row.vanishes);
    CHECK(row.dims.empty());
  }
}

TEST_CASE("classifier on the two-quadric complete intersection") {
  IdealPresentation p = parse_ideal_text("ring x y; gens x^2, y^2");
  CIReport rep = classify(p, ClassifyOptions{});
  CHECK(rep.verdict == "complete intersection");
  CHECK(rep.cotangent_all_vanish);
  CHECK(rep.conjecture_consistent);
  CHECK(rep.perfect == TriState::kYes);
  CHECK(rep.gorenstein == TriState::kYes);
  CHECK(rep.r_resolution.complete);
  CHECK(rep.r_resolution.betti == std::vector<int>{1, 2, 1});
  CHECK(rep.tor2 == std::map<int, int>{{4, 1}, {5, 2}, {6, 1}});
  CHECK(rep.deviations == std::vector<int>{0, 2, 2, 0, 0, 0});
  CHECK(rep.rank_shift_ok);
  CHECK(rep.tail.vanishes);
  CHECK(rep.tail.from == 3);
  CHECK(rep.poincare.ok);
  REQUIRE(rep.poincare.product_coeffs.size() >= 6);
  for (int i = 0; i <= 5; ++i) CHECK(rep.poincare.product_coeffs[i] == i + 1);
  CHECK(rep.wedge.all_ok);
  CHECK(rep.tkos.all_ok);
  REQUIRE(rep.mahler.ran);
  CHECK(rep.mahler.prefix_ok);
  CHECK(rep.mahler.pattern.verdict == ZeroPatternVerdict::kConsistent);
  CHECK(rep.mahler.pattern.r == 2);
  CHECK(rep.mahler.pattern.residues == std::vector<int>{1});
  CHECK(rep.notes.empty());
}

TEST_CASE("classifier on the square of the maximal ideal") {
  IdealPresentation p = parse_ideal_text("ring x y; gens x^2, x*y, y^2");
  CIReport rep = classify(p, ClassifyOptions{});
  CHECK(rep.verdict == "not a complete intersection");
  CHECK_FALSE(rep.invariants.complete_intersection);
  CHECK(rep.invariants.almost_complete_intersection);
  CHECK_FALSE(rep.cotangent_all_vanish);
  CHECK(rep.conjecture_consistent);
  CHECK(rep.perfect == TriState::kYes);
  CHECK(rep.gorenstein == TriState::kNo);
  CHECK(rep.r_resolution.betti == std::vector<int>{1, 3, 2});
  CHECK(cot_row(rep, 2) == std::map<int, int>{{4, 1}});
  CHECK(cot_row(rep, 3).empty());
  CHECK(cot_row(rep, 4) == std::map<int, int>{{6, 1}});
  CHECK(cot_row(rep, 5) == std::map<int, int>{{7, 4}});
  CHECK(rep.tor2 == std::map<int, int>{{4, 4}});
  CHECK(rep.deviations == std::vector<int>{0, 2, 3, 2, 3, 6});
  CHECK(rep.l_ranks == std::vector<int>{0, 3, 2, 3, 6, 11});
  CHECK(rep.rank_shift_ok);
  CHECK_FALSE(rep.tail.vanishes);
  CHECK(rep.tail.positive_through == 5);
  CHECK_FALSE(rep.k_resolution.complete);
  REQUIRE(rep.k_resolution.betti.size() >= 7);
  for (size_t i = 0; i < rep.k_resolution.betti.size(); ++i)
    CHECK(rep.k_resolution.betti[i] == (1 << i));
  CHECK(rep.poincare.ok);
  REQUIRE(rep.mahler.ran);
  CHECK(rep.mahler.recurrence_order == 1);
  CHECK(rep.mahler.prefix_ok);
  CHECK(rep.mahler.pattern.verdict == ZeroPatternVerdict::kInconsistent);
  CHECK(rep.tkos.all_ok);
  CHECK(rep.wedge.all_ok);
}

TEST_CASE("classifier on the almost complete intersection with late nonvanishing") {
  IdealPresentation p = parse_ideal_text("ring x y; gens x^2, x*y");
  CIReport rep = classify(p, ClassifyOptions{});
  CHECK(rep.verdict == "not a complete intersection");
  CHECK(rep.invariants.almost_complete_intersection);
  CHECK(cot_row(rep, 2).empty());
  CHECK(cot_row(rep, 3).empty());
  CHECK(cot_row(rep, 4).empty());
  CHECK(cot_row(rep, 5) == std::map<int, int>{{7, 1}});
  CHECK_FALSE(rep.cotangent_all_vanish);
  CHECK(rep.conjecture_consistent);
  CHECK(rep.perfect == TriState::kNo);
  CHECK(rep.rank_shift_ok);
  CHECK(rep.tkos.all_ok);
  CHECK(rep.wedge.all_ok);
  REQUIRE(rep.mahler.ran);
  CHECK(rep.mahler.pattern.verdict == ZeroPatternVerdict::kInconsistent);
}

TEST_CASE("classifier edge ideals and option validation") {
  IdealPresentation zero = parse_ideal_text("ring x y;");
  CIReport rep = classify(zero, ClassifyOptions{});
  CHECK(rep.verdict == "complete intersection");
  CHECK(rep.cotangent_all_vanish);
  CHECK(rep.conjecture_consistent);
  CHECK(rep.invariants.degenerate);

  IdealPresentation unit = parse_ideal_text("ring x; gens 2");
  CHECK_THROWS_AS(classify(unit, ClassifyOptions{}), std::invalid_argument);

  IdealPresentation ok = parse_ideal_text("ring x; gens x");
  ClassifyOptions bad;
  bad.hom_bound = 4;
  CHECK_THROWS_AS(classify(ok, bad), std::invalid_argument);
  bad = ClassifyOptions{};
  bad.deg_bound = 1;
  CHECK_THROWS_AS(classify(ok, bad), std::invalid_argument);
  bad = ClassifyOptions{};
  bad.series_order = 4;
  CHECK_THROWS_AS(classify(ok, bad), std::invalid_argument);
  bad = ClassifyOptions{};
  bad.jobs = 0;
  CHECK_THROWS_AS(classify(ok, bad), std::invalid_argument);
  bad = ClassifyOptions{};
  bad.r_max = 0;
  CHECK_THROWS_AS(classify(ok, bad), std::invalid_argument);
}

TEST_CASE("report json is independent of the job count") {
  IdealPresentation p = parse_ideal_text("ring x y; gens x^2, x*y, y^2");
  ClassifyOptions one;
  ClassifyOptions four;
  four.jobs = 4;
  CIReport a = classify(p, one);
  CIReport b = classify(p, four);
  CHECK(ci_report_json(a).dump(2) == ci_report_json(b).dump(2));
  CHECK(bounds_json(one).dump() == bounds_json(four).dump());
  CHECK(ci_report_markdown(a) == ci_report_markdown(b));
}

TEST_CASE("json building blocks") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");

  IdealPresentation p = parse_ideal_text("ring x y; weights 1 2; gens y - x^2; flag f true");
  Json rj = ring_json(*p.ring);
  CHECK(rj["vars"] == Json::array({"x", "y"}));
  CHECK(rj["weights"] == Json::array({1, 2}));
  Json ij = ideal_json(p);
  REQUIRE(ij["gens"].size() == 1);
  CHECK(ij["flags"]["f"] == true);

  Json sj = series_json(TruncSeries::polynomial({Rat(1), Rat(1, 2)}, 2));
  CHECK(sj["order"] == 2);
  CHECK(sj["coeffs"] == Json::array({"1", "1/2", "0"}));

  Json bj = bigraded_json({{{1, 2}, 3}});
  REQUIRE(bj.size() == 1);
  CHECK(bj[0]["i"] == 1);
  CHECK(bj[0]["t"] == 2);
  CHECK(bj[0]["dim"] == 3);

  Json dj = degree_map_json({{4, 1}, {6, 2}});
  REQUIRE(dj.size() == 2);
  CHECK(dj[0]["t"] == 4);
  CHECK(dj[1]["dim"] == 2);

  CHECK(zero_pattern_verdict_name(ZeroPatternVerdict::kConsistent) !=
        zero_pattern_verdict_name(ZeroPatternVerdict::kInconsistent));
  CHECK_FALSE(tri_state_name(TriState::kYes).empty());
  CHECK(tri_state_name(TriState::kYes) != tri_state_name(TriState::kNo));
}

TEST_CASE("document shell layout") {
  IdealPresentation p = parse_ideal_text("ring x; gens x");
  ClassifyOptions opts;
  Json doc = document_shell("demo.ideal", "ring x; gens x", &p, opts);
  CHECK(doc["tool"]["name"] == "cotan");
  CHECK(doc["source"]["path"] == "demo.ideal");
  CHECK(doc["source"]["fnv1a64"] == fnv1a64_hex("ring x; gens x"));
  CHECK(doc["bounds"]["hom_bound"] == opts.hom_bound);
  CHECK(doc["bounds"].contains("jobs") == false);
  // tables and reports are attached by the caller, never by the shell
  CHECK_FALSE(doc.contains("tables"));
  CHECK_FALSE(doc.contains("reports"));
  doc["reports"]["demo"] = Json::object();
  CHECK(doc.contains("reports"));
}

TEST_CASE("markdown rendering mentions the headline facts") {
  IdealPresentation p = parse_ideal_text("ring x y; gens x^2, y^2");
  CIReport rep = classify(p, ClassifyOptions{});
  std::string md = ci_report_markdown(rep);
  CHECK(md.find("complete intersection") != std::string::npos);
  CHECK(md.find("cotangent homology") != std::string::npos);
  CHECK(md.find("rank L_i") != std::string::npos);

  std::string table = bigraded_markdown({{{2, 4}, 1}}, 2, 3, 5, "i\\t");
  CHECK(table.find("i\\t") != std::string::npos);
  CHECK(table.find('1') != std::string::npos);
}
