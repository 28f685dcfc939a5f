#include <random>

#include "doctest.h"
#include "freealg/bimodule.hpp"
#include "freealg/error.hpp"
#include "freealg/text.hpp"
#include "oracles.hpp"

using namespace freealg;

namespace {

const Field Q = Field::rational();
const Field F2 = Field::prime(2);

Polynomial P(const char* s, Field f = Q) { return parse_poly(s, f); }
Word W(const char* s) { return P(s).leading_term().first; }

Word random_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<Letter> w(len);
  for (auto& l : w) l = static_cast<Letter>(bit(rng));
  return Word(std::move(w));
}

// Type3 by search over every split u = (v1 v2)^k v1 with t = v1 v2.
bool type3_by_search(const Word& u, const Word& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    const Word v1 = t.subword(0, a), v2 = t.subword(a, t.size() - a);
    if (v1 * v2 == v2 * v1) continue;
    for (std::size_t k = 1; k * t.size() + a <= u.size(); ++k)
      if (t.pow(k) * v1 == u) return true;
  }
  return false;
}

std::vector<Word> words_up_to(std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t l = 1; l <= len; ++l)
    for (std::uint32_t b = 0; b < (1u << l); ++b) {
      std::vector<Letter> w(l);
      for (std::size_t i = 0; i < l; ++i) w[i] = static_cast<Letter>((b >> (l - 1 - i)) & 1);
      out.emplace_back(std::move(w));
    }
  return out;
}

}  // namespace

TEST_CASE("classify_monomial examples") {
  const auto c = classify_monomial(W("x*y*x"), W("x*y"));
  REQUIRE(c.kind == MonomialKind::Type3);
  CHECK(c.v1 == W("x"));
  CHECK(c.v2 == W("y"));
  CHECK(c.k == 1);
  CHECK(c.t1 == W("x*y"));
  CHECK(c.t2 == W("y*x"));
  CHECK(c.t1 * W("x*y*x") == W("x*y*x") * c.t2);

  CHECK(classify_monomial(W("x*y*x"), Word{}).kind == MonomialKind::Type1);
  CHECK(classify_monomial(W("x*y"), W("y^2")).kind == MonomialKind::Type2);
  CHECK(classify_monomial(W("x*y"), W("x*y")).kind == MonomialKind::Type2);
  CHECK(classify_monomial(W("x*y*x*y*x"), W("x*y")).k == 2);

  for (const char* bad : {"x^2", "x*y*x*y", "1"}) {
    try {
      classify_monomial(W(bad), W("x"));
      FAIL("expected ImprimitiveU");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ImprimitiveU);
    }
  }
}

TEST_CASE("classify_monomial agrees with split search") {
  for (std::size_t len = 1; len <= 7; ++len)
    for (const auto& u : words_up_to(len)) {
      if (u.size() != len || !is_primitive(u)) continue;
      for (const auto& t : words_up_to(len + 1)) {
        const auto c = classify_monomial(u, t);
        CHECK((c.kind == MonomialKind::Type1) == t.empty());
        CHECK((c.kind == MonomialKind::Type3) == type3_by_search(u, t));
        if (c.kind != MonomialKind::Type3) continue;
        CHECK(c.t1 * u == u * c.t2);
        CHECK(c.t1 == c.v1 * c.v2);
        CHECK(c.t2 == c.v2 * c.v1);
        CHECK_FALSE(c.t1 == c.t2);
        CHECK(c.t1.pow(static_cast<std::size_t>(c.k)) * c.v1 == u);
      }
    }
}

TEST_CASE("classify_monomial is deterministic on random long words") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto u = random_word(rng, 4 + rng() % 12);
    if (!is_primitive(u)) continue;
    const auto t = u.subword(0, rng() % u.size());
    const auto a = classify_monomial(u, t), b = classify_monomial(u, t);
    CHECK(a.kind == b.kind);
    CHECK(a.t2 == b.t2);
    CHECK((a.kind == MonomialKind::Type3) == type3_by_search(u, t));
  }
}

TEST_CASE("solve_commutator_equation with u = x") {
  for (long m = 1; m <= 3; ++m)
    for (long n = 1; n <= 3; ++n) {
      const auto sol = solve_commutator_equation(P("x"), m, n, 3);
      for (const auto& [s, r] : sol.basis) CHECK((commutator(P("x").pow(m), s) + commutator(P("x").pow(n), r)).is_zero());
      for (const char* s : {"1", "x", "x^2", "x^3"}) {
        CHECK(solution_coordinates(sol, P(s), P("0")));
        CHECK(solution_coordinates(sol, P("0"), P(s)));
      }
      CHECK_FALSE(solution_coordinates(sol, P("y"), P("0")));
    }
}

TEST_CASE("solution span contains the commuting and Jacobi families") {
  for (const auto field : {Q, F2, Field::prime(3)}) {
    const auto u = P("x*y", field);
    const long m = 1, n = 2, bound = 5;
    const auto sol = solve_commutator_equation(u, m, n, bound);
    CHECK(sol.unknowns == 2 * 63);
    // powers of u on either side
    CHECK(solution_coordinates(sol, u.pow(2), P("0", field)));
    CHECK(solution_coordinates(sol, P("0", field), u));
    // ([u^n, w], -[u^m, w]) whenever it fits the bound
    for (const char* w : {"1", "x", "y", "y*x"}) {
      const auto pw = P(w, field);
      const auto s = commutator(u.pow(n), pw), r = -commutator(u.pow(m), pw);
      if (s.degree() > Degree(bound) || r.degree() > Degree(bound)) continue;
      CHECK(solution_coordinates(sol, s, r));
    }
    CHECK_FALSE(solution_coordinates(sol, P("x", field), P("0", field)));
  }
}

TEST_CASE("kernel matches exhaustive enumeration over F_2") {
  // The acceptance suite runs bound 3; bound 2 keeps this quick.
  for (const auto& [u, plain, m, n] :
       {std::tuple{"x*y", "xy", 1L, 2L}, std::tuple{"x", "x", 1L, 1L}, std::tuple{"x*y^2", "xyy", 2L, 1L}}) {
    const auto sol = solve_commutator_equation(P(u, F2), m, n, 2);
    const testing::Gf2CommutatorSystem oracle(plain, m, n, 2);
    REQUIRE(oracle.unknowns() == sol.unknowns);
    CHECK(oracle.count_solutions() == (std::uint64_t{1} << sol.basis.size()));
    for (const auto& [s, r] : sol.basis) CHECK(oracle.satisfied(s, r));
  }
}

TEST_CASE("solve_commutator_equation errors") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::PreconditionFailed;
  };
  CHECK(code([] { solve_commutator_equation(P("x*y"), 1, 2, -1); }) == ErrorCode::BadBound);
  CHECK(code([] { solve_commutator_equation(P("x*y"), 0, 2, 2); }) == ErrorCode::BadArgument);
  CHECK(code([] { solve_commutator_equation(P("x + y"), 1, 2, 2); }) == ErrorCode::BadArgument);
  CHECK(code([] { solve_commutator_equation(P("1"), 1, 2, 2); }) == ErrorCode::BadArgument);
  CHECK(code([] { solve_commutator_equation(P("x*y"), 1, 2, 12); }) == ErrorCode::CapExceeded);
}
