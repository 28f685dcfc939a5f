#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "freealg/polynomial.hpp"

namespace freealg {

/// Endomorphism of K<x,y> given by the images of x and y.
class Endomorphism {
 public:
  /// Throws MixedFields / AlphabetMismatch unless both images live in the
  /// same rank-2 algebra.
  Endomorphism(Polynomial image_x, Polynomial image_y);
  static Endomorphism identity(Field field);

  const Polynomial& image_x() const noexcept { return images_[0]; }
  const Polynomial& image_y() const noexcept { return images_[1]; }
  std::span<const Polynomial> images() const noexcept { return images_; }
  Field field() const noexcept { return images_[0].field(); }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::array<Polynomial, 2> images_;
};

/// substitute(p, [image_x, image_y]).
Polynomial apply(const Endomorphism& e, const Polynomial& p);

/// The endomorphism p -> apply(outer, apply(inner, p)); its x-image is
/// apply(outer, inner.image_x()).
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

/// x -> a x + b y + tx, y -> c x + d y + ty with ad - bc != 0.
struct LinearAffine {
  FieldElem a, b, c, d, tx, ty;
};

/// x -> x + h(y), y -> y with h in K[y], deg h >= 2.
struct AddToX {
  Polynomial h;
};

/// x -> x, y -> y + h(x) with h in K[x], deg h >= 2.
struct AddToY {
  Polynomial h;
};

using ElementaryFactor = std::variant<LinearAffine, AddToX, AddToY>;

/// Validating constructors; throw BadArgument on a singular matrix or an h
/// that is not univariate in the right letter or has degree < 2.
ElementaryFactor make_linear(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d,
                             const FieldElem& tx, const FieldElem& ty);
ElementaryFactor make_linear(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d);
ElementaryFactor make_add_to_x(Polynomial h);
ElementaryFactor make_add_to_y(Polynomial h);

Endomorphism to_endomorphism(const ElementaryFactor& f, Field field);
ElementaryFactor inverse(const ElementaryFactor& f);
std::string kind_name(const ElementaryFactor& f);

/// Ordered factors; composing them left to right (first factor outermost)
/// reproduces the decomposed endomorphism.
struct Decomposition {
  Field field;
  std::vector<ElementaryFactor> factors;
};

Endomorphism recompose(const Decomposition& d);

/// Why the degree-reduction loop stopped. `state` is the reduced pair at the
/// point of failure and the input equals compose(state, recompose(partial)).
struct NotAutomorphism {
  std::string condition;  // "constant image", "singular linear part",
                          // "degree divisibility fails", "leading form not a power"
  Endomorphism state;
  Decomposition partial;
};

/// True iff the named condition literally holds for `cert.state`.
bool condition_holds(const NotAutomorphism& cert);

/// Degree-reduction decomposition into elementary factors. Each step
/// subtracts c * (lower image)^d from the higher image when its leading form
/// is c times the d-th power of the lower one's; degree-1 pairs finish with a
/// LinearAffine factor. Constant terms stay in place and end up in the final
/// translation.
std::variant<Decomposition, NotAutomorphism> decompose_tame(const Endomorphism& e);

/// Inverse automorphism, built from the inverted factors in reverse order.
/// Throws NotAutomorphism (with the failed condition in the context).
Endomorphism invert(const Endomorphism& e);

/// compose(e, e) == e.
bool is_retraction(const Endomorphism& e);

}  // namespace freealg
