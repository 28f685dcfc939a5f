#include <random>

#include "doctest.h"
#include "freealg/degree_estimate.hpp"
#include "freealg/error.hpp"
#include "freealg/text.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace freealg;

namespace {

const Field Q = Field::rational();
const Field F2 = Field::prime(2);

Polynomial P(const char* s, Field f = Q) { return parse_poly(s, f); }

std::string clause_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::HypothesesNotMet) return e.context().at("clause");
    return "other error";
  }
  return "no error";
}

}  // namespace

TEST_CASE("alg_dependent examples") {
  CHECK(alg_dependent(P("x^2"), P("x^3")));
  CHECK_FALSE(alg_dependent(P("x"), P("y")));
  CHECK(alg_dependent(P("x*y + 1"), P("(x*y)^3 - x*y")));
  CHECK(alg_dependent(P("5"), P("x*y")));
  CHECK_THROWS_AS(alg_dependent(P("0"), P("x")), Error);
}

TEST_CASE("alg_dependent is symmetric and reflexive") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing::random_nonzero_poly(rng, Q, 3, 3), b = testing::random_nonzero_poly(rng, Q, 3, 3);
    CHECK(alg_dependent(a, a));
    CHECK(alg_dependent(a, b) == alg_dependent(b, a));
  }
}

TEST_CASE("alg_dependent agrees with relation search over F_2") {
  // A sample here; the acceptance suite runs every pair.
  const auto polys = testing::gf2_small_polys();
  REQUIRE(polys.size() == 120);
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> pick(0, polys.size() - 1);
  for (int i = 0; i < 1500; ++i) {
    const auto& a = polys[pick(rng)];
    const auto& b = polys[pick(rng)];
    CHECK(alg_dependent(a, b) == testing::gf2_relation_exists(a, b));
  }
  CHECK(testing::gf2_relation_exists(P("x*y", F2), P("x*y + 1", F2)));
  CHECK_FALSE(testing::gf2_relation_exists(P("x", F2), P("y", F2)));
}

TEST_CASE("check_estimate on small inputs") {
  const auto rep = check_estimate(P("x"), P("y"), P("x*y"));
  CHECK_FALSE(rep.hypotheses_hold);
  CHECK_FALSE(rep.dep_leading);
  CHECK_FALSE(rep.div_fail);
  CHECK(rep.alg_indep);
  CHECK(*rep.D == 1);
  CHECK(rep.w == 2);
  CHECK(rep.lhs == Degree(2));
  CHECK(*rep.bound == 2);
  CHECK(rep.inequality_holds);

  const auto dep = check_estimate(P("x^2"), P("x^3"), P("x*y - y*x"));
  CHECK_FALSE(dep.alg_indep);
  CHECK_FALSE(dep.D);
  CHECK(dep.lhs == Degree::minus_infinity());
  CHECK_FALSE(dep.inequality_holds);

  CHECK_THROWS_AS(check_estimate(P("x"), P("0"), P("x")), Error);
}

TEST_CASE("check_estimate on the counterexample family") {
  const auto fam = build_counterexample(2, F2);
  const auto rep = check_estimate(fam.f, fam.g, P("x*y", F2));
  CHECK(rep.dep_leading);
  CHECK(rep.div_fail);
  CHECK(rep.alg_indep);
  CHECK(rep.hypotheses_hold);
  CHECK(rep.w == 25);
  CHECK(*rep.D == mpq_class(9, 25));
  CHECK(*rep.bound == 9);
  CHECK(rep.lhs == Degree(25));
  CHECK(rep.inequality_holds);
}

TEST_CASE("estimate harness finds no violation") {
  for (const auto field : {Q, F2, Field::prime(3)}) {
    const auto res = run_estimate_harness(5, field, 40);
    CHECK(res.hypotheses_hold == 40);
    CHECK(res.violations == 0);
  }
}

TEST_CASE("random estimate instances have commuting leading forms") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const auto inst = random_estimate_instance(rng, Q);
    CHECK(alg_dependent(leading_form(inst.f).form, leading_form(inst.g).form));
    const long df = inst.f.degree().value(), dg = inst.g.degree().value();
    CHECK(df % dg != 0);
    CHECK(dg % df != 0);
  }
}

TEST_CASE("build_counterexample") {
  for (const auto field : {Q, F2}) {
    mpq_class prev(1);
    for (long k = 2; k <= 6; ++k) {
      const auto fam = build_counterexample(k, field);
      CHECK(fam.f.degree() == Degree(6 * k + 3));
      CHECK(fam.g.degree() == Degree(4 * k + 2));
      CHECK(fam.commutator_degree == 2 * k + 5);
      CHECK(fam.ratio == mpq_class(2 * k + 5, 4 * k + 2));
      CHECK(fam.ratio > mpq_class(1, 2));
      CHECK(fam.ratio < prev);
      prev = fam.ratio;
      CHECK(fam.u == P("x*y", field).pow(static_cast<std::size_t>(k)) * P("x", field));
    }
  }
  CHECK(build_counterexample(2, F2).ratio == mpq_class(9, 10));
  const auto k3 = build_counterexample(3, Q);
  CHECK(k3.commutator_degree == 11);
  CHECK(k3.g.degree() == Degree(14));
  try {
    build_counterexample(1, Q);
    FAIL("expected BadK");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadK);
  }
}

TEST_CASE("check_conjecture_inequality") {
  const auto k2 = build_counterexample(2, Q);
  auto c = check_conjecture_inequality(k2.f, k2.g);
  CHECK(c.violated);
  CHECK(c.comm_deg == 9);
  CHECK(c.min_deg == 10);
  const auto k5 = build_counterexample(5, Q);
  c = check_conjecture_inequality(k5.f, k5.g);
  CHECK(c.violated);
  CHECK(c.comm_deg == 15);
  CHECK(c.min_deg == 22);

  c = check_conjecture_inequality(P("x^2 + y"), P("x^3"));
  CHECK_FALSE(c.violated);
  CHECK(c.comm_deg == 4);
  CHECK(c.min_deg == 2);

  CHECK(clause_of([] { check_conjecture_inequality(P("x^2"), P("x^3")); }) == "f and g algebraically independent");
  CHECK(clause_of([] { check_conjecture_inequality(P("x^2 + y"), P("y^3")); }) ==
        "leading forms algebraically dependent");
  CHECK(clause_of([] { check_conjecture_inequality(P("x^2 + y"), P("x^4")); }) == "neither degree divides the other");
  CHECK(clause_of([] { check_conjecture_inequality(P("0"), P("x^4")); }) == "f and g nonzero");
}

TEST_CASE("outer rank two evidence") {
  CHECK(outer_rank_two_evidence(P("x^2")) == "monomial containing both letters");
  CHECK(outer_rank_two_evidence(P("x*y*x*y + x")) == "primitive leading word");
  CHECK_FALSE(outer_rank_two_evidence(P("x*y")));
  CHECK_FALSE(outer_rank_two_evidence(P("x + x*y")));
  CHECK_FALSE(outer_rank_two_evidence(P("x*y - y*x")));
}

TEST_CASE("weighted degree of an outer rank two p exceeds deg f + deg g") {
  CHECK(check_lemma4(P("x^2 + y"), P("y^3"), P("x*y")));
  CHECK(check_lemma4(P("x^2"), P("y^3 + x"), P("x*y*x")));
  CHECK(clause_of([] { check_lemma4(P("x"), P("y"), P("x^2 + y")); }) ==
        "p of outer rank 2: monomial containing both letters");
  CHECK(clause_of([] { check_lemma4(P("3"), P("y"), P("x*y")); }) == "f and g nonconstant");

  std::mt19937_64 rng(14);
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    const auto f = testing::random_nonzero_poly(rng, Q, 4, 3), g = testing::random_nonzero_poly(rng, Q, 4, 3);
    const auto p = testing::random_nonzero_poly(rng, Q, 4, 4);
    if (f.degree() < Degree(1) || g.degree() < Degree(1) || outer_rank_two_evidence(p)) continue;
    ++tested;
    CHECK(check_lemma4(f, g, p));
  }
  CHECK(tested > 50);
}

TEST_CASE("deg p(f, g) is at least deg [f, g]") {
  CHECK(check_lemma5(P("x"), P("y"), P("x*y")));
  CHECK(check_lemma5(P("x + y^2"), P("y"), P("x*y - y*x")));
  CHECK(clause_of([] { check_lemma5(P("x^2"), P("x^3"), P("x*y")); }) == "(f, g) injective");

  std::mt19937_64 rng(15);
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    const auto f = testing::random_nonzero_poly(rng, Q, 3, 3), g = testing::random_nonzero_poly(rng, Q, 3, 3);
    const auto p = testing::random_nonzero_poly(rng, Q, 3, 3);
    if (commutator(f, g).is_zero() || outer_rank_two_evidence(p)) continue;
    ++tested;
    CHECK(check_lemma5(f, g, p));
  }
  CHECK(tested > 50);
}

TEST_CASE("commutator degrees grow along iterates of a non-tame map") {
  const Endomorphism sq(P("x^2"), P("y"));
  CHECK(iterated_commutator_degrees(sq, 4) == std::vector<long>{3, 5, 9, 17});
  CHECK(check_lemma6(sq, 4));
  const Endomorphism both(P("x + y^2"), P("y^2"));
  CHECK(check_lemma6(both, 3));
  const Endomorphism mixed(P("x*y"), P("y"));
  CHECK(check_lemma6(mixed, 4));
  for (const auto d : iterated_commutator_degrees(mixed, 4)) CHECK(d >= 3);

  CHECK(clause_of([] { check_lemma6(Endomorphism(P("x + y^2"), P("y")), 2); }) == "phi not an automorphism");
  CHECK(clause_of([] { check_lemma6(Endomorphism(P("x^2"), P("x^3")), 2); }) == "phi injective");
  CHECK_THROWS_AS(iterated_commutator_degrees(sq, 0), Error);
}
