#pragma once

#include <optional>
#include <span>
#include <vector>

#include "freealg/endomorphism.hpp"

namespace freealg {

/// Idempotent endomorphism together with the generator r of its image K[r],
/// when known.
struct Retraction {
  Endomorphism endo;
  std::optional<Polynomial> generator;
};

struct RetractionPower {
  long m;
  Endomorphism retraction;
};

/// For e fixing p, finds the least m <= max_iter with e^m idempotent.
/// Throws NotFixing when e(p) != p and NoConvergence when no power up to
/// max_iter (or below the internal degree cap) is idempotent; that outcome
/// does not classify e.
RetractionPower iterate_to_retraction(const Endomorphism& e, const Polynomial& p, long max_iter);

/// Coefficients h_0..h_k with q == sum h_i r^i, found by peeling leading
/// forms; nullopt when q is not visibly in K[r].
std::optional<std::vector<FieldElem>> express_in_generator(const Polynomial& r, const Polynomial& q);

/// Subduction on commuting generators: repeatedly replaces the higher-degree
/// one b by b - c a^d while v(b) = c v(a)^d, dropping constants, until one
/// generator is left. Returns it normalized (leading coefficient 1, no
/// constant term) after checking every input lies in K[r]. Throws
/// ProperSubductionFailure when the generators stall, and
/// PreconditionFailed when every input is constant.
Polynomial subduction_generator(std::span<const Polynomial> generators);

/// Generator r of the image of a proper retraction. Throws NotARetraction
/// when e is not idempotent or is the identity.
Polynomial retract_generator(const Endomorphism& e);

struct OrbitWitness {
  long m;              // least M with deg_r(ret(alpha_M(r))) > 1
  Polynomial value;    // ret(alpha_M(r))
  long degree_in_r;    // deg_r of value
  bool swapped;        // alpha_M = (x, y + x^M) instead of (x + y^M, y)
};

/// deg_r(ret(alpha_M(r))) for a single M, with the orientation chosen as in
/// orbit_witness.
long orbit_degree(const Endomorphism& ret, const Polynomial& r, long m);

/// Searches M = 0, 1, ... for an automorphism alpha_M moving r outside the
/// degree-1 part of K[r] under ret. The cap starts at
/// max image degree + deg r + 2 and doubles a few times before CapExceeded.
/// Throws PreconditionFailed unless ret is a proper retraction onto K[r] and
/// r contains the letter that alpha_M perturbs.
OrbitWitness orbit_witness(const Endomorphism& ret, const Polynomial& r);

}  // namespace freealg
