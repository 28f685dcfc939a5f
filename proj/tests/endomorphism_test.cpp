#include <random>

#include "doctest.h"
#include "freealg/coordinate.hpp"
#include "freealg/endomorphism.hpp"
#include "freealg/error.hpp"
#include "freealg/retraction.hpp"
#include "freealg/text.hpp"
#include "generators.hpp"

using namespace freealg;

namespace {

const Field Q = Field::rational();
const Field F3 = Field::prime(3);

Polynomial P(const char* s, Field f = Q) { return parse_poly(s, f); }
Endomorphism E(const char* fx, const char* fy, Field f = Q) { return Endomorphism(P(fx, f), P(fy, f)); }

}  // namespace

TEST_CASE("apply") {
  const auto p = P("x*y^2 - 3*y*x + 1");
  CHECK(apply(Endomorphism::identity(Q), p) == p);
  CHECK(apply(E("x + y^3", "y"), P("x")) == P("x + y^3"));

  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Endomorphism e(testing::random_poly(rng, Q, 2, 3), testing::random_poly(rng, Q, 2, 3));
    const auto a = testing::random_poly(rng, Q, 3, 3), b = testing::random_poly(rng, Q, 3, 3);
    CHECK(apply(e, a * b) == apply(e, a) * apply(e, b));
  }
}

TEST_CASE("compose") {
  const auto e = E("x*y + 2", "y^2 - x");
  CHECK(compose(Endomorphism::identity(Q), e) == e);
  CHECK(compose(e, Endomorphism::identity(Q)) == e);
  CHECK(compose(E("x", "x"), E("x", "x")) == E("x", "x"));
  CHECK(compose(E("y", "x"), E("y", "x")) == Endomorphism::identity(Q));

  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Endomorphism a(testing::random_poly(rng, Q, 2, 3), testing::random_poly(rng, Q, 2, 3));
    const Endomorphism b(testing::random_poly(rng, Q, 2, 3), testing::random_poly(rng, Q, 2, 3));
    const auto p = testing::random_poly(rng, Q, 3, 3);
    CHECK(apply(compose(a, b), p) == apply(a, apply(b, p)));
  }
  CHECK_THROWS_AS(compose(E("x", "y"), E("x", "y", F3)), Error);
}

TEST_CASE("elementary factor validation") {
  const auto one = FieldElem::one(Q), zero = FieldElem::zero(Q);
  CHECK_THROWS_AS(make_linear(one, one, one, one), Error);
  CHECK_THROWS_AS(make_add_to_x(P("y")), Error);
  CHECK_THROWS_AS(make_add_to_x(P("x^2")), Error);
  CHECK_THROWS_AS(make_add_to_y(P("y^2")), Error);
  CHECK_NOTHROW(make_add_to_y(P("x^3 + x")));
  const auto lin = make_linear(FieldElem(Q, 2), one, zero, FieldElem(Q, 3), FieldElem(Q, 5), FieldElem(Q, -1));
  CHECK(compose(to_endomorphism(lin, Q), to_endomorphism(inverse(lin), Q)) == Endomorphism::identity(Q));
}

TEST_CASE("decompose_tame examples") {
  SUBCASE("x + y^2") {
    const auto result = decompose_tame(E("x + y^2", "y"));
    const auto& dec = std::get<Decomposition>(result);
    REQUIRE(dec.factors.size() == 2);
    CHECK(kind_name(dec.factors[0]) == "LinearAffine");
    CHECK(to_endomorphism(dec.factors[0], Q) == Endomorphism::identity(Q));
    CHECK(kind_name(dec.factors[1]) == "AddToX");
    CHECK(std::get<AddToX>(dec.factors[1]).h == P("y^2"));
  }
  SUBCASE("swap") {
    const auto dec = std::get<Decomposition>(decompose_tame(E("y", "x")));
    REQUIRE(dec.factors.size() == 1);
    CHECK(recompose(dec) == E("y", "x"));
  }
  SUBCASE("x^2, y") {
    const auto cert = std::get<NotAutomorphism>(decompose_tame(E("x^2", "y")));
    CHECK(cert.condition == "leading form not a power");
    CHECK(condition_holds(cert));
  }
  SUBCASE("singular linear part") {
    const auto cert = std::get<NotAutomorphism>(decompose_tame(E("x + y + x^2", "x^2 + 2*x + 2*y")));
    CHECK(condition_holds(cert));
    CHECK(compose(cert.state, recompose(cert.partial)) == E("x + y + x^2", "x^2 + 2*x + 2*y"));
  }
  SUBCASE("constant image") {
    const auto cert = std::get<NotAutomorphism>(decompose_tame(E("x + y^2", "x + y^2")));
    CHECK(cert.condition == "constant image");
    CHECK(condition_holds(cert));
  }
  SUBCASE("degree divisibility") {
    const auto cert = std::get<NotAutomorphism>(decompose_tame(E("x^2 + y", "x^3")));
    CHECK(cert.condition == "degree divisibility fails");
    CHECK(condition_holds(cert));
  }
  SUBCASE("translations land in the final affine factor") {
    const auto e = E("x + 3 + (y - 1)^2", "y - 1");
    const auto dec = std::get<Decomposition>(decompose_tame(e));
    CHECK(recompose(dec) == e);
  }
}

TEST_CASE("decompose/recompose round trip on random tame automorphisms") {
  for (const auto field : {Q, F3}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      std::mt19937_64 rng(seed);
      const auto e = recompose(testing::random_tame(rng, field, 6));
      const auto result = decompose_tame(e);
      REQUIRE(std::holds_alternative<Decomposition>(result));
      CHECK(recompose(std::get<Decomposition>(result)) == e);
      CHECK(compose(e, invert(e)) == Endomorphism::identity(field));
      CHECK(compose(invert(e), e) == Endomorphism::identity(field));
    }
  }
}

TEST_CASE("invert") {
  CHECK(invert(E("x + y^2", "y")) == E("x - y^2", "y"));
  CHECK(invert(E("y", "x")) == E("y", "x"));
  try {
    invert(E("x^2", "y"));
    FAIL("expected NotAutomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAutomorphism);
    CHECK(e.context().at("condition") == "leading form not a power");
  }
}

TEST_CASE("coordinate_certify") {
  SUBCASE("x") {
    const auto cert = std::get<CoordinateCertificate>(coordinate_certify(P("x"), 1));
    CHECK(cert.q == P("y"));
  }
  SUBCASE("x + y^2") {
    const auto cert = std::get<CoordinateCertificate>(coordinate_certify(P("x + y^2"), 2));
    CHECK(cert.q == P("y"));
    CHECK(recompose(cert.factors) == E("x + y^2", "y"));
  }
  SUBCASE("x^2 has no certificate at any bound") {
    for (long bound = 2; bound <= 8; ++bound) {
      const auto res = coordinate_certify(P("x^2"), bound);
      CHECK(std::holds_alternative<NoCertificateWithinBounds>(res));
    }
  }
  SUBCASE("nested substitution") {
    // y + (x + y^3 + y^2)^2 needs two AddToX moves and a swap.
    const auto p = P("y + (x + y^3 + y^2)^2");
    const auto cert = std::get<CoordinateCertificate>(coordinate_certify(p, 6));
    const Endomorphism pair(p, cert.q);
    CHECK(std::holds_alternative<Decomposition>(decompose_tame(pair)));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(coordinate_certify(P("5"), 3), Error);
    CHECK_THROWS_AS(coordinate_certify(P("x + y^3"), 2), Error);
    CHECK(std::holds_alternative<NoCertificateWithinBounds>(coordinate_certify(P("x*y"), 2)));
  }
  SUBCASE("x-images of random tame automorphisms certify") {
    for (const auto field : {Q, F3}) {
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::mt19937_64 rng(1000 + seed);
        const auto e = recompose(testing::random_tame(rng, field, 4, 9));
        const auto& p = e.image_x();
        if (p.degree() < Degree(1)) continue;
        const auto res = coordinate_certify(p, p.degree().value());
        REQUIRE_MESSAGE(std::holds_alternative<CoordinateCertificate>(res), print_poly(p));
        const Endomorphism pair(p, std::get<CoordinateCertificate>(res).q);
        CHECK(std::holds_alternative<Decomposition>(decompose_tame(pair)));
      }
    }
  }
}

TEST_CASE("is_retraction") {
  CHECK(is_retraction(E("x", "x^2")));
  CHECK(is_retraction(Endomorphism::identity(Q)));
  CHECK_FALSE(is_retraction(E("x + y", "y")));
  CHECK(compose(E("x + y", "y"), E("x + y", "y")).image_x() == P("x + 2*y"));

  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    // (h1(x), h2(x)) with h1 = x is idempotent; so is its square.
    const auto h2 = testing::random_poly(rng, Q, 3, 3);
    const Endomorphism e(P("x"), substitute(h2, std::array{P("x"), P("x")}));
    CHECK(is_retraction(e));
    CHECK(is_retraction(compose(e, e)));
  }
}

TEST_CASE("iterate_to_retraction") {
  auto r = iterate_to_retraction(E("x", "x"), P("x"), 10);
  CHECK(r.m == 1);
  CHECK(r.retraction == E("x", "x"));
  CHECK(iterate_to_retraction(E("x", "x^2"), P("x"), 10).m == 1);
  CHECK(iterate_to_retraction(Endomorphism::identity(Q), P("x*y + y"), 10).retraction == Endomorphism::identity(Q));
  CHECK(iterate_to_retraction(E("y", "x"), P("x + y"), 10).m == 2);
  CHECK_THROWS_AS(iterate_to_retraction(E("x", "x^2"), P("y"), 10), Error);
  try {
    iterate_to_retraction(E("x", "y^2"), P("x"), 50);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoConvergence);
  }
}

TEST_CASE("retract_generator") {
  CHECK(retract_generator(E("x", "x^2")) == P("x"));

  // (r - r^2, r) with r = x + y^2 fixes r, so it is a retraction onto K[r].
  const auto r = P("x + y^2");
  const Endomorphism pi(r - r.pow(2), r);
  REQUIRE(is_retraction(pi));
  CHECK(retract_generator(pi) == r);

  // Images (s, s^2), s = x^2 + x: the subduction recovers s, but the map itself is not idempotent.
  const auto s = P("x^2 + x");
  const Polynomial images[] = {s, P("x^4 + 2*x^3 + x^2")};
  CHECK(subduction_generator(images) == s);
  try {
    retract_generator(Endomorphism(images[0], images[1]));
    FAIL("expected NotARetraction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotARetraction);
  }
  try {
    retract_generator(Endomorphism::identity(Q));
    FAIL("expected NotARetraction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotARetraction);
  }
  const Polynomial stuck[] = {P("x^2"), P("x^3")};
  try {
    subduction_generator(stuck);
    FAIL("expected ProperSubductionFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ProperSubductionFailure);
  }

  // Resubstitution: both images are exact polynomials in the generator.
  for (const auto& im : pi.images()) {
    const auto coeffs = express_in_generator(r, im);
    REQUIRE(coeffs);
    Polynomial back(Q);
    for (std::size_t i = 0; i < coeffs->size(); ++i) back += (*coeffs)[i] * r.pow(i);
    CHECK(back == im);
  }
}

TEST_CASE("orbit_witness") {
  const auto w = orbit_witness(E("x", "x^2"), P("x"));
  CHECK(w.m == 1);
  CHECK(w.value == P("x + x^2"));
  CHECK(w.degree_in_r == 2);
  for (long m = 1; m <= 6; ++m) CHECK(orbit_degree(E("x", "x^2"), P("x"), m) == 2 * m);
  for (long m = 1; m < 6; ++m)
    CHECK(orbit_degree(E("x", "x^2"), P("x"), m + 1) >= orbit_degree(E("x", "x^2"), P("x"), m));

  const auto r = P("x + y^2");
  const Endomorphism pi(r - r.pow(2), r);
  const auto w2 = orbit_witness(pi, r);
  CHECK(w2.m == 2);
  CHECK(w2.value == r + r.pow(2));

  try {
    orbit_witness(E("x", "0"), P("x"));
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
  }
  CHECK_THROWS_AS(orbit_witness(Endomorphism::identity(Q), P("x")), Error);
}
