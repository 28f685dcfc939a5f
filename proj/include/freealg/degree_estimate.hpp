#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "freealg/endomorphism.hpp"
#include "freealg/polynomial.hpp"

namespace freealg {

/// True iff [a,b] = 0. In a free associative algebra this is the same as
/// algebraic dependence. Throws ZeroInput on a zero argument.
bool alg_dependent(const Polynomial& a, const Polynomial& b);

/// Everything needed to compare deg P(f,g) with D(f,g) * w_{deg f, deg g}(P),
/// where D(f,g) = deg [f,g] / (deg f + deg g).
struct EstimateReport {
  bool hypotheses_hold;
  bool dep_leading;  // leading forms of f and g commute
  bool div_fail;     // neither degree divides the other
  bool alg_indep;    // [f,g] != 0
  std::optional<mpq_class> D;      // empty when [f,g] = 0
  long w;
  Degree lhs;                      // deg P(f,g)
  std::optional<mpq_class> bound;  // D * w
  bool inequality_holds;           // lhs >= bound (false when bound is undefined)
};

EstimateReport check_estimate(const Polynomial& f, const Polynomial& g, const Polynomial& P);

/// u = (xy)^k x, v = xy, w = yx, r = uv + uw + wu, s = v + w,
/// f = u^3 + r, g = u^2 + s. deg [f,g] = 2k + 5 while min(deg f, deg g) = 4k + 2.
struct CounterexampleFamily {
  long k;
  Polynomial u, v, w, r, s, f, g;
  long commutator_degree;
  mpq_class ratio;  // deg [f,g] / deg g
};

/// Throws BadK for k < 2.
CounterexampleFamily build_counterexample(long k, Field field);

struct ConjectureCheck {
  long min_deg;
  long comm_deg;
  bool violated;  // deg [f,g] <= min(deg f, deg g)
};

/// Evaluates deg [f,g] > min(deg f, deg g) for independent f, g with
/// commuting leading forms and mutually non-dividing degrees. Throws
/// HypothesesNotMet naming the first failed clause.
ConjectureCheck check_conjecture_inequality(const Polynomial& f, const Polynomial& g);

/// Sufficient evidence that p is of outer rank 2: p has a monomial with both
/// letters, its leading word is primitive (so p is not h(c) with deg h > 1)
/// and coordinate_certify finds no certificate at bound deg p. Returns the
/// name of the first clause that fails, or nullopt.
std::optional<std::string> outer_rank_two_evidence(const Polynomial& p);

/// w_{deg f, deg g}(p) >= deg f + deg g, strictly when p has a monomial of
/// length > 2 containing both letters. Throws HypothesesNotMet unless p
/// passes outer_rank_two_evidence.
bool check_lemma4(const Polynomial& f, const Polynomial& g, const Polynomial& p);

/// deg p(f,g) >= deg [f,g] for injective (f,g), i.e. [f,g] != 0, and p of
/// outer rank 2 by the evidence above. Throws HypothesesNotMet otherwise.
bool check_lemma5(const Polynomial& f, const Polynomial& g, const Polynomial& p);

/// deg [phi^j(x), phi^j(y)] for j = 1..k.
std::vector<long> iterated_commutator_degrees(const Endomorphism& phi, long k);

/// deg [phi^j(x), phi^j(y)] >= j + 2 for j = 1..k, for injective phi that
/// fails to decompose. Throws HypothesesNotMet otherwise.
bool check_lemma6(const Endomorphism& phi, long k);

/// f = h^a + tail, g = h^b + tail' with a, b mutually non-dividing, and a
/// random P. Leading forms commute by construction.
struct EstimateInstance {
  Polynomial f, g, P;
};

EstimateInstance random_estimate_instance(std::mt19937_64& rng, Field field);

struct EstimateHarnessResult {
  long generated = 0;         // instances drawn
  long hypotheses_hold = 0;   // instances that met the hypotheses
  long violations = 0;        // of those, how many broke the inequality
  std::optional<EstimateInstance> first_violation;
};

/// Draws instances from `seed` until `cases` of them meet the hypotheses
/// (or `max_draws` is reached) and checks the inequality on each.
EstimateHarnessResult run_estimate_harness(std::uint64_t seed, Field field, long cases, long max_draws = 100000);

}  // namespace freealg
