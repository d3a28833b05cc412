#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cotan/tate.hpp"

using namespace cotan;

namespace {

RingPtr ring2() { return make_ring({"x", "y"}); }

IdealPresentation ideal_of(RingPtr r, std::vector<Poly> gens) {
  return {std::move(r), std::move(gens), {}};
}

}  // namespace

TEST_CASE("principal ideal resolvent is the one-variable koszul complex") {
  RingPtr r = make_ring({"x"});
  Poly x = Poly::variable(r, 0);
  Resolvent res = build_quotient_resolvent(ideal_of(r, {x}), 4, 6);
  CHECK(res.algebra.var_count() == 1);
  CHECK(res.deviations(3) == std::vector<int>{0, 1, 0, 0});
  AcyclicityCertificate cert = certify_acyclicity(res);
  CHECK(cert.acyclic);
  CHECK(cert.failures.empty());
  // S = Q[x]/(x) = Q concentrated in degree 0
  REQUIRE(res.h0_expected.size() == 7);
  CHECK(res.h0_expected[0] == 1);
  for (int t = 1; t <= 6; ++t) CHECK(res.h0_expected[t] == 0);
}

TEST_CASE("complete intersection resolvent stops at stage one") {
  RingPtr r = ring2();
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  Resolvent res = build_quotient_resolvent(ideal_of(r, {x * x, y * y}), 4, 8);
  CHECK(res.deviations(4) == std::vector<int>{0, 2, 0, 0, 0});
  CHECK(certify_acyclicity(res).acyclic);
  // h0 target is the Hilbert function of S: 1, 2, 1, 0, ...
  CHECK(res.h0_expected[0] == 1);
  CHECK(res.h0_expected[1] == 2);
  CHECK(res.h0_expected[2] == 1);
  CHECK(res.h0_expected[3] == 0);
  auto big = res.bigraded_deviations();
  CHECK(big == std::map<std::pair<int, int>, int>{{{1, 2}, 2}});
}

TEST_CASE("square of the maximal ideal needs variables in every stage") {
  RingPtr r = ring2();
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  Resolvent res = build_quotient_resolvent(ideal_of(r, {x * x, x * y, y * y}), 5, 10);
  CHECK(res.deviations(4) == std::vector<int>{0, 3, 2, 3, 6});
  CHECK(certify_acyclicity(res).acyclic);
}

TEST_CASE("koszul stage homology of the non-ci ideal") {
  RingPtr r = ring2();
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  Resolvent res = build_quotient_resolvent(ideal_of(r, {x * x, x * y, y * y}), 4, 8);

  HomologyModule h1 = homology_module(res.algebra, 1, 1, 8);
  CHECK(h1.dims == std::map<int, int>{{3, 2}, {4, 1}});
  CHECK(h1.gen_degrees == std::vector<int>{3, 3});
  // generators are cycles of the stated bidegree
  for (size_t i = 0; i < h1.gens.size(); ++i) {
    CHECK(res.algebra.differential(h1.gens[i]).is_zero());
    auto bd = res.algebra.bidegree(h1.gens[i]);
    REQUIRE(bd.has_value());
    CHECK(bd->first == 1);
    CHECK(bd->second == h1.gen_degrees[i]);
  }

  HomologyModule h2 = homology_module(res.algebra, 1, 2, 8);
  CHECK(h2.dims.empty());
  CHECK(h2.gens.empty());

  // slice view agrees with the module view
  CHECK(resolvent_homology(res.algebra, 1, 1, 3).dim == 2);
  CHECK(resolvent_homology(res.algebra, 1, 1, 4).dim == 1);
  CHECK(resolvent_homology(res.algebra, 1, 1, 5).dim == 0);
  HomologySlice s3 = resolvent_homology(res.algebra, 1, 1, 3);
  CHECK(s3.reps.size() == 2);
  for (const DGElement& rep : s3.reps) CHECK(res.algebra.differential(rep).is_zero());
}

TEST_CASE("koszul stage homology of the almost complete intersection") {
  RingPtr r = ring2();
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  Resolvent res = build_quotient_resolvent(ideal_of(r, {x * x, x * y}), 4, 8);
  // H_1 of the koszul stage is R/(x) shifted by the syzygy degree 3
  HomologyModule h1 = homology_module(res.algebra, 1, 1, 8);
  for (int t = 3; t <= 8; ++t) CHECK(h1.dims.at(t) == 1);
  CHECK(h1.dims.count(2) == 0);
  CHECK(h1.gen_degrees == std::vector<int>{3});
  CHECK(homology_module(res.algebra, 1, 2, 8).dims.empty());
  CHECK(res.deviations(2) == std::vector<int>{0, 2, 1});
  CHECK(certify_acyclicity(res).acyclic);
}

TEST_CASE("non-minimal stage one still yields an acyclic resolvent") {
  RingPtr r = ring2();
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  IdealPresentation redundant = ideal_of(r, {x * x, y * y, x * x + y * y});
  Resolvent res = build_quotient_resolvent(redundant, 4, 8, /*minimize=*/false);
  CHECK(res.deviations(1) == std::vector<int>{0, 3});  // generators kept as given
  AcyclicityCertificate cert = certify_acyclicity(res);
  CHECK(cert.acyclic);
  // same quotient ring, same augmentation target
  Resolvent minimal = build_quotient_resolvent(redundant, 4, 8);
  CHECK(minimal.deviations(1) == std::vector<int>{0, 2});
  CHECK(res.h0_expected == minimal.h0_expected);
}

TEST_CASE("residue field resolvent of the monomial square ideal") {
  RingPtr r = ring2();
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  QuotientRing s(r, buchberger(ideal_of(r, {x * x, x * y, y * y})));
  Resolvent res = build_residue_field_resolvent(s, 5, 10);
  CHECK(res.deviations(5) == std::vector<int>{0, 2, 3, 2, 3, 6});
  // each deviation sits in internal degree equal to its homological degree
  for (const auto& [key, n] : res.bigraded_deviations()) CHECK(key.first == key.second);
  CHECK(certify_acyclicity(res).acyclic);
  // h0 target is the residue field
  CHECK(res.h0_expected[0] == 1);
  for (size_t t = 1; t < res.h0_expected.size(); ++t) CHECK(res.h0_expected[t] == 0);
}

TEST_CASE("residue field resolvent of a complete intersection") {
  RingPtr r = ring2();
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  QuotientRing s(r, buchberger(ideal_of(r, {x * x, y * y})));
  Resolvent res = build_residue_field_resolvent(s, 5, 10);
  CHECK(res.deviations(5) == std::vector<int>{0, 2, 2, 0, 0, 0});
  auto big = res.bigraded_deviations();
  CHECK(big == std::map<std::pair<int, int>, int>{{{1, 1}, 2}, {{2, 2}, 2}});
  CHECK(certify_acyclicity(res).acyclic);
}

TEST_CASE("maximal ideal generators") {
  RingPtr r = ring2();
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  QuotientRing s(r, buchberger(ideal_of(r, {x * x, x * y, y * y})));
  auto gens = minimal_maximal_ideal_generators(s);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].degree() == 1);
  CHECK(gens[1].degree() == 1);

  // field quotient: no generators at all
  RingPtr r1 = make_ring({"x"});
  QuotientRing field(r1, buchberger(ideal_of(r1, {Poly::variable(r1, 0)})));
  CHECK(minimal_maximal_ideal_generators(field).empty());

  // weighted ring where one variable class falls into m^2
  RingPtr w = make_ring({"x", "y"}, {1, 2});
  Poly wx = Poly::variable(w, 0), wy = Poly::variable(w, 1);
  QuotientRing sw(w, buchberger(ideal_of(w, {wy - wx * wx})));
  auto wgens = minimal_maximal_ideal_generators(sw);
  REQUIRE(wgens.size() == 1);
  CHECK(wgens[0].degree() == 1);
  // its residue field resolvent is the koszul complex on that one class
  Resolvent res = build_residue_field_resolvent(sw, 4, 6);
  CHECK(res.deviations(4) == std::vector<int>{0, 1, 0, 0, 0});
  CHECK(certify_acyclicity(res).acyclic);
}
