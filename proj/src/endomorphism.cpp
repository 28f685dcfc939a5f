#include "freealg/endomorphism.hpp"

#include <optional>

#include "freealg/error.hpp"
#include "freealg/text.hpp"

namespace freealg {

namespace {

constexpr Letter kX = 0;
constexpr Letter kY = 1;

Polynomial var(Field f, Letter l) { return Polynomial::variable(f, l); }

bool univariate_in(const Polynomial& h, Letter l) {
  for (const auto& [w, c] : h.terms())
    if (w.count(l) != w.size()) return false;
  return true;
}

// c with target == c * base_power, compared word by word.
std::optional<FieldElem> proportionality(const Polynomial& target, const Polynomial& base_power) {
  if (target.size() != base_power.size()) return std::nullopt;
  const auto& [tw, tc] = target.leading_term();
  const auto bc = base_power.coefficient(tw);
  if (bc.is_zero()) return std::nullopt;
  const FieldElem c = tc / bc;
  if (c * base_power != target) return std::nullopt;
  return c;
}

}  // namespace

Endomorphism::Endomorphism(Polynomial image_x, Polynomial image_y) : images_{std::move(image_x), std::move(image_y)} {
  if (images_[0].field() != images_[1].field())
    throw Error(ErrorCode::MixedFields, "images over different fields");
  if (images_[0].alphabet_size() != 2 || images_[1].alphabet_size() != 2)
    throw Error(ErrorCode::AlphabetMismatch, "endomorphisms act on the rank-2 algebra");
}

Endomorphism Endomorphism::identity(Field field) { return Endomorphism(var(field, kX), var(field, kY)); }

Polynomial apply(const Endomorphism& e, const Polynomial& p) {
  if (p.alphabet_size() != 2) throw Error(ErrorCode::AlphabetMismatch, "argument is not in K<x,y>");
  return substitute(p, e.images());
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  return Endomorphism(apply(outer, inner.image_x()), apply(outer, inner.image_y()));
}

ElementaryFactor make_linear(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d,
                             const FieldElem& tx, const FieldElem& ty) {
  if ((a * d - b * c).is_zero()) throw Error(ErrorCode::BadArgument, "singular linear part");
  return LinearAffine{a, b, c, d, tx, ty};
}

ElementaryFactor make_linear(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  const auto zero = FieldElem::zero(a.field());
  return make_linear(a, b, c, d, zero, zero);
}

ElementaryFactor make_add_to_x(Polynomial h) {
  if (!univariate_in(h, kY) || h.degree() < Degree(2))
    throw Error(ErrorCode::BadArgument, "AddToX needs h in K[y] of degree >= 2", {{"h", print_poly(h)}});
  return AddToX{std::move(h)};
}

ElementaryFactor make_add_to_y(Polynomial h) {
  if (!univariate_in(h, kX) || h.degree() < Degree(2))
    throw Error(ErrorCode::BadArgument, "AddToY needs h in K[x] of degree >= 2", {{"h", print_poly(h)}});
  return AddToY{std::move(h)};
}

Endomorphism to_endomorphism(const ElementaryFactor& f, Field field) {
  const auto x = var(field, kX), y = var(field, kY);
  return std::visit(
      [&](const auto& g) -> Endomorphism {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, LinearAffine>) {
          const auto one = Polynomial::constant(field, 1);
          return Endomorphism(g.a * x + g.b * y + g.tx * one, g.c * x + g.d * y + g.ty * one);
        } else if constexpr (std::is_same_v<T, AddToX>) {
          return Endomorphism(x + g.h, y);
        } else {
          return Endomorphism(x, y + g.h);
        }
      },
      f);
}

ElementaryFactor inverse(const ElementaryFactor& f) {
  return std::visit(
      [](const auto& g) -> ElementaryFactor {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, LinearAffine>) {
          // Rows of M^{-1} give the new linear part, translation -M^{-1} t.
          const FieldElem inv_det = (g.a * g.d - g.b * g.c).inv();
          const FieldElem a = g.d * inv_det, b = -g.b * inv_det;
          const FieldElem c = -g.c * inv_det, d = g.a * inv_det;
          return LinearAffine{a, b, c, d, -(a * g.tx + b * g.ty), -(c * g.tx + d * g.ty)};
        } else if constexpr (std::is_same_v<T, AddToX>) {
          return AddToX{-g.h};
        } else {
          return AddToY{-g.h};
        }
      },
      f);
}

std::string kind_name(const ElementaryFactor& f) {
  switch (f.index()) {
    case 0: return "LinearAffine";
    case 1: return "AddToX";
    default: return "AddToY";
  }
}

Endomorphism recompose(const Decomposition& d) {
  Endomorphism acc = Endomorphism::identity(d.field);
  for (const auto& f : d.factors) acc = compose(acc, to_endomorphism(f, d.field));
  return acc;
}

bool condition_holds(const NotAutomorphism& cert) {
  const auto& f = cert.state.image_x();
  const auto& g = cert.state.image_y();
  const auto df = f.degree(), dg = g.degree();
  if (cert.condition == "constant image") return df <= Degree(0) || dg <= Degree(0);
  if (df <= Degree(0) || dg <= Degree(0)) return false;
  if (cert.condition == "singular linear part") {
    if (df != Degree(1) || dg != Degree(1)) return false;
    const Word wx{kX}, wy{kY};
    return (f.coefficient(wx) * g.coefficient(wy) - f.coefficient(wy) * g.coefficient(wx)).is_zero();
  }
  if (df == Degree(1) && dg == Degree(1)) return false;
  const bool f_high = df >= dg;
  const auto& hi = f_high ? f : g;
  const auto& lo = f_high ? g : f;
  const long dh = hi.degree().value(), dl = lo.degree().value();
  if (cert.condition == "degree divisibility fails") return dh % dl != 0;
  if (cert.condition == "leading form not a power") {
    if (dh % dl != 0) return false;
    const auto power = leading_form(lo).form.pow(static_cast<std::size_t>(dh / dl));
    return !proportionality(leading_form(hi).form, power).has_value();
  }
  return false;
}

std::variant<Decomposition, NotAutomorphism> decompose_tame(const Endomorphism& e) {
  const Field field = e.field();
  Endomorphism state = e;
  // Right-hand factors: e == compose(state, recompose(right)).
  std::vector<ElementaryFactor> right;
  auto fail = [&](std::string condition) -> std::variant<Decomposition, NotAutomorphism> {
    return NotAutomorphism{std::move(condition), state, Decomposition{field, right}};
  };
  const auto zero = FieldElem::zero(field), one = FieldElem::one(field);
  for (;;) {
    const auto& f = state.image_x();
    const auto& g = state.image_y();
    const auto df = f.degree(), dg = g.degree();
    if (df <= Degree(0) || dg <= Degree(0)) return fail("constant image");
    if (df == Degree(1) && dg == Degree(1)) {
      const Word wx{kX}, wy{kY};
      const auto a = f.coefficient(wx), b = f.coefficient(wy);
      const auto c = g.coefficient(wx), d = g.coefficient(wy);
      if ((a * d - b * c).is_zero()) return fail("singular linear part");
      right.insert(right.begin(), LinearAffine{a, b, c, d, f.constant_term(), g.constant_term()});
      return Decomposition{field, std::move(right)};
    }
    const bool f_high = df >= dg;
    const auto& hi = f_high ? f : g;
    const auto& lo = f_high ? g : f;
    const long dh = hi.degree().value(), dl = lo.degree().value();
    if (dh % dl != 0) return fail("degree divisibility fails");
    const auto d = static_cast<std::size_t>(dh / dl);
    const auto coeff = proportionality(leading_form(hi).form, leading_form(lo).form.pow(d));
    if (!coeff) return fail("leading form not a power");
    const Letter lo_letter = f_high ? kY : kX;
    // state = compose(reduced, step) where step adds c * lo_letter^d to the high image.
    ElementaryFactor step = LinearAffine{one, zero, zero, one, zero, zero};
    if (d == 1) {
      auto& lin = std::get<LinearAffine>(step);
      (f_high ? lin.b : lin.c) = *coeff;
    } else {
      auto h = Polynomial::monomial(Word::letter(lo_letter).pow(d), *coeff);
      if (f_high) step = AddToX{std::move(h)};
      else step = AddToY{std::move(h)};
    }
    Polynomial reduced = hi - *coeff * lo.pow(d);
    state = f_high ? Endomorphism(std::move(reduced), g) : Endomorphism(f, std::move(reduced));
    right.insert(right.begin(), std::move(step));
  }
}

Endomorphism invert(const Endomorphism& e) {
  auto result = decompose_tame(e);
  if (const auto* cert = std::get_if<NotAutomorphism>(&result))
    throw Error(ErrorCode::NotAutomorphism, "endomorphism is not an automorphism: " + cert->condition,
                {{"condition", cert->condition},
                 {"fx", print_poly(cert->state.image_x())},
                 {"fy", print_poly(cert->state.image_y())}});
  const auto& dec = std::get<Decomposition>(result);
  Decomposition inv{dec.field, {}};
  for (auto it = dec.factors.rbegin(); it != dec.factors.rend(); ++it) inv.factors.push_back(inverse(*it));
  return recompose(inv);
}

bool is_retraction(const Endomorphism& e) { return compose(e, e) == e; }

}  // namespace freealg
