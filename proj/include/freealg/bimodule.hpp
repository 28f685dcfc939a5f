#pragma once

// Monomials of the free algebra as a bimodule over K[u] acting on both sides,
// and a bounded solver for [u^m, s] + [u^n, r] = 0.

#include <optional>
#include <utility>
#include <vector>

#include "freealg/polynomial.hpp"
#include "freealg/word.hpp"

namespace freealg {

enum class MonomialKind { Type1, Type2, Type3 };

/// Type1: t is the unit. Type3: t = t1 is a proper head of u with
/// t1 u = u t2; then u = (v1 v2)^k v1, t1 = v1 v2, t2 = v2 v1 and
/// v1 v2 != v2 v1. Type2: everything else.
struct MonomialClass {
  MonomialKind kind;
  Word v1, v2;
  long k = 0;
  Word t1, t2;
};

/// Throws ImprimitiveU when u is empty or a proper power.
MonomialClass classify_monomial(const Word& u, const Word& t);

struct CommutatorEqSolution {
  std::vector<std::pair<Polynomial, Polynomial>> basis;  // (s, r)
  long bound;
  std::size_t unknowns;  // coefficients of s and r together
  std::size_t equations;
};

/// Kernel of (s, r) -> [u^m, s] + [u^n, r] on s, r of degree <= bound.
/// u must be a single nonempty word term. Errors: BadBound, BadArgument.
CommutatorEqSolution solve_commutator_equation(const Polynomial& u, long m, long n, long bound);

/// Coordinates of (s, r) in the solution basis, nullopt when outside the span.
std::optional<std::vector<FieldElem>> solution_coordinates(const CommutatorEqSolution& sol, const Polynomial& s,
                                                           const Polynomial& r);

}  // namespace freealg
