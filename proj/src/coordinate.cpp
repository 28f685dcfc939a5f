#include "freealg/coordinate.hpp"

#include <algorithm>
#include <vector>

#include "freealg/error.hpp"
#include "freealg/text.hpp"

namespace freealg {

namespace {

constexpr Letter kX = 0;
constexpr Letter kY = 1;
constexpr std::uint64_t kMaxEnumeratedPrime = 1u << 17;
const mpz_class kMaxDivisorSearch("1000000000");

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

FieldElem eval(const std::vector<FieldElem>& coeffs, const FieldElem& a) {
  FieldElem acc = FieldElem::zero(a.field());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * a + *it;
  return acc;
}

using UniPoly = std::vector<FieldElem>;  // ascending coefficients

void trim(UniPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

UniPoly poly_rem(UniPoly f, const UniPoly& g) {
  trim(f);
  while (f.size() >= g.size()) {
    const auto q = f.back() / g.back();
    const auto shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= q * g[i];
    trim(f);
  }
  return f;
}

UniPoly poly_quo(UniPoly f, const UniPoly& g) {
  trim(f);
  if (f.size() < g.size()) return {};
  UniPoly q(f.size() - g.size() + 1, FieldElem::zero(g.back().field()));
  while (f.size() >= g.size()) {
    const auto c = f.back() / g.back();
    const auto shift = f.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    trim(f);
  }
  return q;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Squarefree part over Q: f / gcd(f, f'). Repeated roots (the typical shape
// here, a power of a linear form) collapse to a low-degree factor.
UniPoly squarefree_part(UniPoly f) {
  trim(f);
  if (f.size() <= 2) return f;
  UniPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * FieldElem(f[i].field(), static_cast<long>(i)));
  const auto g = poly_gcd(f, df);
  return g.size() <= 1 ? f : poly_quo(f, g);
}

// Nonzero roots of sum coeffs[i] a^i lying in the field (squarefree part plus
// rational root test over Q, enumeration over small F_p). Roots outside the
// search limits are missed.
std::vector<FieldElem> nonzero_roots(const std::vector<FieldElem>& input, Field field) {
  std::vector<FieldElem> roots;
  UniPoly coeffs = input;
  trim(coeffs);
  if (coeffs.size() <= 1) return roots;
  if (!field.is_rational()) {
    const auto p = field.characteristic();
    if (p > kMaxEnumeratedPrime) return roots;
    for (std::uint64_t v = 1; v < p; ++v) {
      FieldElem a(field, static_cast<long>(v));
      if (eval(coeffs, a).is_zero()) roots.push_back(a);
    }
    return roots;
  }
  coeffs = squarefree_part(std::move(coeffs));
  auto add = [&](const FieldElem& a) {
    if (!a.is_zero() && std::find(roots.begin(), roots.end(), a) == roots.end()) roots.push_back(a);
  };
  if (coeffs.size() == 2) {
    add(-coeffs[0] / coeffs[1]);
    return roots;
  }
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : coeffs) ints.push_back(mpz_class(c.rational() * lcm_den));
  std::size_t lo = 0;
  while (ints[lo] == 0) ++lo;
  const std::size_t hi = ints.size() - 1;
  if (lo == hi) return roots;
  if (abs(ints[lo]) > kMaxDivisorSearch || abs(ints[hi]) > kMaxDivisorSearch) return roots;
  for (const auto& num : positive_divisors(ints[lo])) {
    for (const auto& den : positive_divisors(ints[hi])) {
      for (int sign : {1, -1}) {
        mpq_class cand(sign * num, den);
        cand.canonicalize();
        const auto a = FieldElem::from_rational(field, cand);
        if (eval(coeffs, a).is_zero()) add(a);
      }
    }
  }
  return roots;
}

// Coefficients of the y^n coefficient of p(x + a*y^e, y), as a polynomial in a.
std::vector<FieldElem> cancellation_polynomial(const Polynomial& p, std::size_t n, std::size_t e) {
  std::vector<FieldElem> coeffs(n / e + 1, FieldElem::zero(p.field()));
  for (const auto& [w, c] : p.terms()) {
    const auto nx = w.count(kX), ny = w.count(kY);
    if (nx * e + ny == n) coeffs[nx] += c;
  }
  return coeffs;
}

}  // namespace

std::variant<CoordinateCertificate, NoCertificateWithinBounds> coordinate_certify(const Polynomial& p,
                                                                                  long search_bound) {
  if (p.alphabet_size() != 2) throw Error(ErrorCode::AlphabetMismatch, "coordinates live in K<x,y>");
  if (p.degree() < Degree(1)) throw Error(ErrorCode::ConstantInput, "constant polynomial is never a coordinate");
  if (Degree(search_bound) < p.degree())
    throw Error(ErrorCode::BadBound, "search bound must be at least deg(p)",
                {{"bound", std::to_string(search_bound)}, {"deg", p.degree().to_string()}});
  const Field field = p.field();
  const auto zero = FieldElem::zero(field), one = FieldElem::one(field);

  // moves[i] was applied to the current polynomial by substitution, in order.
  std::vector<ElementaryFactor> moves;
  Polynomial cur = p;
  auto apply_move = [&](ElementaryFactor m) {
    cur = apply(to_endomorphism(m, field), cur);
    moves.push_back(std::move(m));
  };

  while (cur.degree() > Degree(1)) {
    const auto n = static_cast<std::size_t>(cur.degree().value());
    const auto lead = leading_form(cur).form;
    const Word yn = Word::letter(kY).pow(n);
    const auto cy = lead.coefficient(yn);
    if (!cy.is_zero()) {
      const auto alpha = lead.coefficient(Word{kX} * Word::letter(kY).pow(n - 1)) / cy;
      const auto ell = alpha * Polynomial::variable(field, kX) + Polynomial::variable(field, kY);
      if (cy * ell.pow(n) != lead)
        return NoCertificateWithinBounds{"leading form is not a power of a linear form", cur};
      if (!alpha.is_zero()) apply_move(make_linear(one, zero, -alpha, one));
    } else {
      const auto cx = lead.coefficient(Word::letter(kX).pow(n));
      if (cx.is_zero() || cx * Polynomial::variable(field, kX).pow(n) != lead)
        return NoCertificateWithinBounds{"leading form is not a power of a linear form", cur};
      apply_move(make_linear(zero, one, one, zero));
    }
    // Leading form is now c*y^n.
    bool moved = false;
    for (std::size_t e = 2; e <= std::min<std::size_t>(n, static_cast<std::size_t>(search_bound)) && !moved; ++e) {
      for (const auto& a : nonzero_roots(cancellation_polynomial(cur, n, e), field)) {
        const auto move = make_add_to_x(Polynomial::monomial(Word::letter(kY).pow(e), a));
        const auto candidate = apply(to_endomorphism(move, field), cur);
        if (candidate.degree() < Degree(static_cast<long>(n))) {
          cur = candidate;
          moves.push_back(move);
          moved = true;
          break;
        }
      }
    }
    if (!moved) return NoCertificateWithinBounds{"no elementary move lowers the degree", cur};
  }

  // cur = apply(moves.back() o ... o moves.front(), p) is linear with nonzero linear part.
  const auto alpha = cur.coefficient(Word{kX}), beta = cur.coefficient(Word{kY});
  const auto completion = alpha.is_zero() ? make_linear(alpha, beta, one, zero, cur.constant_term(), zero)
                                          : make_linear(alpha, beta, zero, one, cur.constant_term(), zero);
  Decomposition dec{field, {}};
  for (const auto& m : moves) dec.factors.push_back(inverse(m));
  dec.factors.push_back(completion);
  const auto pair = recompose(dec);
  if (pair.image_x() != p)
    throw Error(ErrorCode::PreconditionFailed, "internal: certificate does not reproduce p", {{"p", print_poly(p)}});
  if (!std::holds_alternative<Decomposition>(decompose_tame(pair)))
    throw Error(ErrorCode::PreconditionFailed, "internal: certified pair does not decompose", {{"p", print_poly(p)}});
  return CoordinateCertificate{pair.image_y(), std::move(dec)};
}

}  // namespace freealg
