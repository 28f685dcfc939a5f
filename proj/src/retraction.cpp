#include "freealg/retraction.hpp"

#include <algorithm>

#include "freealg/error.hpp"
#include "freealg/text.hpp"

namespace freealg {

namespace {

constexpr Letter kX = 0;
constexpr Letter kY = 1;
constexpr long kPowerDegreeCap = 512;

Polynomial strip_constant(const Polynomial& p) {
  return p - Polynomial::constant(p.field(), p.constant_term());
}

std::optional<FieldElem> leading_ratio(const Polynomial& b, const Polynomial& a, std::size_t d) {
  const auto vb = leading_form(b).form;
  const auto va = leading_form(a).form.pow(d);
  if (va.size() != vb.size()) return std::nullopt;
  const auto& [w, c] = vb.leading_term();
  const auto ca = va.coefficient(w);
  if (ca.is_zero()) return std::nullopt;
  const auto ratio = c / ca;
  if (ratio * va != vb) return std::nullopt;
  return ratio;
}


Endomorphism alpha(Field field, long m, bool swapped) {
  const auto x = Polynomial::variable(field, kX), y = Polynomial::variable(field, kY);
  if (swapped) return Endomorphism(x, y + x.pow(static_cast<std::size_t>(m)));
  return Endomorphism(x + y.pow(static_cast<std::size_t>(m)), y);
}

bool check_orientation(const Endomorphism& ret, const Polynomial& r) {
  if (!is_retraction(ret) || ret == Endomorphism::identity(ret.field()))
    throw Error(ErrorCode::PreconditionFailed, "orbit witness needs a proper retraction");
  if (r.degree() < Degree(1)) throw Error(ErrorCode::PreconditionFailed, "r must be nonconstant");
  for (const auto& im : ret.images())
    if (!express_in_generator(r, im))
      throw Error(ErrorCode::PreconditionFailed, "retraction images are not in K[r]", {{"image", print_poly(im)}});
  if (!ret.image_y().is_constant() && r.contains_letter(kX)) return false;
  if (!ret.image_x().is_constant() && r.contains_letter(kY)) return true;
  throw Error(ErrorCode::PreconditionFailed,
              "need a nonconstant image whose partner letter occurs in r (r of outer rank 1?)",
              {{"r", print_poly(r)}});
}

long degree_in_r(const Polynomial& r, const Polynomial& value) {
  const auto coeffs = express_in_generator(r, value);
  if (!coeffs) throw Error(ErrorCode::PreconditionFailed, "value left K[r]", {{"value", print_poly(value)}});
  return static_cast<long>(coeffs->size()) - 1;
}

}  // namespace

RetractionPower iterate_to_retraction(const Endomorphism& e, const Polynomial& p, long max_iter) {
  if (apply(e, p) != p) throw Error(ErrorCode::NotFixing, "endomorphism does not fix p", {{"p", print_poly(p)}});
  Endomorphism power = e;
  for (long m = 1; m <= max_iter; ++m) {
    if (power.image_x().degree() > Degree(kPowerDegreeCap) || power.image_y().degree() > Degree(kPowerDegreeCap))
      break;
    if (compose(power, power) == power) return {m, power};
    power = compose(e, power);
  }
  throw Error(ErrorCode::NoConvergence, "no idempotent power found", {{"max_iter", std::to_string(max_iter)}});
}

std::optional<std::vector<FieldElem>> express_in_generator(const Polynomial& r, const Polynomial& q) {
  if (r.degree() < Degree(1)) return std::nullopt;
  const long dr = r.degree().value();
  std::vector<FieldElem> coeffs;
  Polynomial rest = q;
  while (rest.degree() >= Degree(1)) {
    const long dq = rest.degree().value();
    if (dq % dr != 0) return std::nullopt;
    const auto d = static_cast<std::size_t>(dq / dr);
    const auto c = leading_ratio(rest, r, d);
    if (!c) return std::nullopt;
    if (coeffs.size() < d + 1) coeffs.resize(d + 1, FieldElem::zero(q.field()));
    coeffs[d] = *c;
    rest -= *c * r.pow(d);
  }
  if (coeffs.empty()) coeffs.resize(1, FieldElem::zero(q.field()));
  coeffs[0] = rest.constant_term();
  return coeffs;
}

Polynomial subduction_generator(std::span<const Polynomial> generators) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators)
    if (!g.is_constant()) gens.push_back(strip_constant(g));
  if (gens.empty()) throw Error(ErrorCode::PreconditionFailed, "all generators are constant");
  while (gens.size() > 1) {
    std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
    const auto& a = gens[0];
    auto& b = gens[1];
    const long da = a.degree().value(), db = b.degree().value();
    const auto ratio = db % da == 0 ? leading_ratio(b, a, static_cast<std::size_t>(db / da)) : std::nullopt;
    if (!ratio)
      throw Error(ErrorCode::ProperSubductionFailure, "generators do not reduce to a single one",
                  {{"a", print_poly(a)}, {"b", print_poly(b)}});
    b = strip_constant(b - *ratio * a.pow(static_cast<std::size_t>(db / da)));
    if (b.is_zero()) gens.erase(gens.begin() + 1);
  }
  Polynomial r = gens[0];
  r = r.leading_term().second.inv() * r;
  for (const auto& g : generators)
    if (!express_in_generator(r, g))
      throw Error(ErrorCode::ProperSubductionFailure, "input not recovered as a polynomial in the generator",
                  {{"r", print_poly(r)}, {"input", print_poly(g)}});
  return r;
}

Polynomial retract_generator(const Endomorphism& e) {
  if (!is_retraction(e)) throw Error(ErrorCode::NotARetraction, "endomorphism is not idempotent");
  if (e == Endomorphism::identity(e.field()))
    throw Error(ErrorCode::NotARetraction, "the identity is not a proper retraction");
  return subduction_generator(e.images());
}

long orbit_degree(const Endomorphism& ret, const Polynomial& r, long m) {
  const bool swapped = check_orientation(ret, r);
  return degree_in_r(r, apply(ret, apply(alpha(ret.field(), m, swapped), r)));
}

OrbitWitness orbit_witness(const Endomorphism& ret, const Polynomial& r) {
  const bool swapped = check_orientation(ret, r);
  long cap = std::max(ret.image_x().degree().value(), ret.image_y().degree().value()) + r.degree().value() + 2;
  long m = 0;
  for (int doubling = 0; doubling <= 3; ++doubling, cap *= 2) {
    for (; m <= cap; ++m) {
      auto value = apply(ret, apply(alpha(ret.field(), m, swapped), r));
      const long deg = degree_in_r(r, value);
      if (deg > 1) return {m, std::move(value), deg, swapped};
    }
  }
  throw Error(ErrorCode::CapExceeded, "no separating automorphism found below the cap",
              {{"cap", std::to_string(cap / 2)}});
}

}  // namespace freealg
