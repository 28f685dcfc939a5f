#pragma once

#include <string>
#include <variant>

#include "freealg/endomorphism.hpp"

namespace freealg {

/// (p, q) is an automorphism and recompose(factors) == (p, q).
struct CoordinateCertificate {
  Polynomial q;
  Decomposition factors;
};

/// The greedy search stalled; `state` is the partially reduced polynomial.
/// This is not a proof that p is not a coordinate.
struct NoCertificateWithinBounds {
  std::string reason;
  Polynomial state;
};

/// Semi-decision for "p is a coordinate". Repeatedly normalizes the leading
/// form c*l^n (l linear) to c*y^n and looks for a move x -> x + a*y^e,
/// 2 <= e <= search_bound, that lowers the degree; a is a root of the
/// univariate polynomial collecting the y^n coefficient of the substituted
/// polynomial. Once linear, completes with a complementary linear form and
/// re-checks the pair with decompose_tame.
///
/// Throws ConstantInput for constant p and BadBound when
/// search_bound < deg(p).
std::variant<CoordinateCertificate, NoCertificateWithinBounds> coordinate_certify(const Polynomial& p,
                                                                                  long search_bound);

}  // namespace freealg
