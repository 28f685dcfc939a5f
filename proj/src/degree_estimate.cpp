#include "freealg/degree_estimate.hpp"

#include <array>
#include <utility>

#include "freealg/coordinate.hpp"
#include "freealg/error.hpp"
#include "freealg/text.hpp"

namespace freealg {

namespace {

constexpr Letter kX = 0;
constexpr Letter kY = 1;

void require_nonzero(const Polynomial& a, const char* name) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, std::string(name) + " is zero");
}

void require_rank_two(const Polynomial& a) {
  if (a.alphabet_size() != 2) throw Error(ErrorCode::AlphabetMismatch, "expected the alphabet {x, y}");
}

bool divides(long a, long b) { return a == 0 ? b == 0 : b % a == 0; }

// Weighted degree allowing zero weights (constant f or g).
long weighted(const Polynomial& p, long wx, long wy) {
  long best = 0;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const long d = wx * static_cast<long>(w.count(kX)) + wy * static_cast<long>(w.count(kY));
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

Polynomial eval_at(const Polynomial& p, const Polynomial& f, const Polynomial& g) {
  const std::array images{f, g};
  return substitute(p, images);
}

[[noreturn]] void hypotheses_not_met(const std::string& clause) {
  throw Error(ErrorCode::HypothesesNotMet, "hypothesis fails: " + clause, {{"clause", clause}});
}

bool has_long_mixed_monomial(const Polynomial& p) {
  for (const auto& [w, c] : p.terms())
    if (w.size() > 2 && w.count(kX) > 0 && w.count(kY) > 0) return true;
  return false;
}

}  // namespace

bool alg_dependent(const Polynomial& a, const Polynomial& b) {
  require_nonzero(a, "first argument");
  require_nonzero(b, "second argument");
  return commutator(a, b).is_zero();
}

EstimateReport check_estimate(const Polynomial& f, const Polynomial& g, const Polynomial& P) {
  require_nonzero(f, "f");
  require_nonzero(g, "g");
  require_nonzero(P, "P");
  require_rank_two(f);
  require_rank_two(P);
  EstimateReport rep{};
  const long df = f.degree().value(), dg = g.degree().value();
  rep.alg_indep = !alg_dependent(f, g);
  rep.dep_leading = alg_dependent(leading_form(f).form, leading_form(g).form);
  rep.div_fail = !divides(df, dg) && !divides(dg, df);
  rep.hypotheses_hold = rep.dep_leading && rep.div_fail && rep.alg_indep;
  rep.w = weighted(P, df, dg);
  rep.lhs = eval_at(P, f, g).degree();
  const auto comm = commutator(f, g).degree();
  if (comm.is_finite() && df + dg > 0) {
    rep.D = mpq_class(comm.value(), df + dg);
    rep.D->canonicalize();
    rep.bound = *rep.D * rep.w;
  }
  rep.inequality_holds = rep.bound && rep.lhs.is_finite() && mpq_class(rep.lhs.value()) >= *rep.bound;
  return rep;
}

CounterexampleFamily build_counterexample(long k, Field field) {
  if (k < 2) throw Error(ErrorCode::BadK, "k must be at least 2", {{"k", std::to_string(k)}});
  const auto x = Polynomial::variable(field, kX), y = Polynomial::variable(field, kY);
  const auto v = x * y, w = y * x;
  const auto u = v.pow(static_cast<std::size_t>(k)) * x;
  const auto r = u * v + u * w + w * u;
  const auto s = v + w;
  const auto f = u.pow(3) + r;
  const auto g = u.pow(2) + s;
  const auto comm = commutator(f, g).degree();
  if (f.degree() != Degree(6 * k + 3) || g.degree() != Degree(4 * k + 2) || !comm.is_finite())
    throw Error(ErrorCode::PreconditionFailed, "internal: family degrees are off", {{"k", std::to_string(k)}});
  mpq_class ratio(comm.value(), g.degree().value());
  ratio.canonicalize();
  return {k, u, v, w, r, s, f, g, comm.value(), ratio};
}

ConjectureCheck check_conjecture_inequality(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) hypotheses_not_met("f and g nonzero");
  if (commutator(f, g).is_zero()) hypotheses_not_met("f and g algebraically independent");
  if (!commutator(leading_form(f).form, leading_form(g).form).is_zero())
    hypotheses_not_met("leading forms algebraically dependent");
  const long df = f.degree().value(), dg = g.degree().value();
  if (divides(df, dg) || divides(dg, df)) hypotheses_not_met("neither degree divides the other");
  ConjectureCheck out{};
  out.min_deg = std::min(df, dg);
  out.comm_deg = commutator(f, g).degree().value();
  out.violated = out.comm_deg <= out.min_deg;
  return out;
}

std::optional<std::string> outer_rank_two_evidence(const Polynomial& p) {
  require_rank_two(p);
  bool mixed = false;
  for (const auto& [w, c] : p.terms()) mixed = mixed || (w.count(kX) > 0 && w.count(kY) > 0);
  if (!mixed) return "monomial containing both letters";
  if (!is_primitive(p.leading_term().first)) return "primitive leading word";
  const auto cert = coordinate_certify(p, p.degree().value());
  if (std::holds_alternative<CoordinateCertificate>(cert)) return "not a coordinate";
  return std::nullopt;
}

bool check_lemma4(const Polynomial& f, const Polynomial& g, const Polynomial& p) {
  if (f.degree() < Degree(1) || g.degree() < Degree(1)) hypotheses_not_met("f and g nonconstant");
  if (const auto clause = outer_rank_two_evidence(p)) hypotheses_not_met("p of outer rank 2: " + *clause);
  const long m = f.degree().value(), n = g.degree().value();
  const long w = weighted(p, m, n);
  if (w < m + n) return false;
  return !has_long_mixed_monomial(p) || w > m + n;
}

bool check_lemma5(const Polynomial& f, const Polynomial& g, const Polynomial& p) {
  require_nonzero(f, "f");
  require_nonzero(g, "g");
  const auto comm = commutator(f, g);
  if (comm.is_zero()) hypotheses_not_met("(f, g) injective");
  if (const auto clause = outer_rank_two_evidence(p)) hypotheses_not_met("p of outer rank 2: " + *clause);
  return eval_at(p, f, g).degree() >= comm.degree();
}

std::vector<long> iterated_commutator_degrees(const Endomorphism& phi, long k) {
  if (k < 1) throw Error(ErrorCode::BadArgument, "k must be positive", {{"k", std::to_string(k)}});
  std::vector<long> out;
  Endomorphism power = phi;
  for (long j = 1; j <= k; ++j) {
    if (j > 1) power = compose(phi, power);
    const auto d = commutator(power.image_x(), power.image_y()).degree();
    out.push_back(d.is_finite() ? d.value() : -1);
  }
  return out;
}

bool check_lemma6(const Endomorphism& phi, long k) {
  if (commutator(phi.image_x(), phi.image_y()).is_zero()) hypotheses_not_met("phi injective");
  if (std::holds_alternative<Decomposition>(decompose_tame(phi))) hypotheses_not_met("phi not an automorphism");
  const auto degs = iterated_commutator_degrees(phi, k);
  for (std::size_t j = 0; j < degs.size(); ++j)
    if (degs[j] < static_cast<long>(j) + 3) return false;
  return true;
}

namespace {

FieldElem draw_coeff(std::mt19937_64& rng, Field field) {
  std::uniform_int_distribution<long> d(-3, 3);
  for (;;) {
    FieldElem c(field, d(rng));
    if (!c.is_zero()) return c;
  }
}

Word draw_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, 1);
  std::vector<Letter> w(len);
  for (auto& l : w) l = static_cast<Letter>(letter(rng));
  return Word(std::move(w));
}

// Up to max_terms terms with lengths in [0, max_len]; the first has length exactly top when top >= 0.
Polynomial draw_poly(std::mt19937_64& rng, Field field, std::size_t max_len, std::size_t max_terms, long top = -1) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms), len(0, max_len);
  std::vector<Polynomial::Term> terms;
  const auto n = nterms(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const auto l = (i == 0 && top >= 0) ? static_cast<std::size_t>(top) : len(rng);
    terms.emplace_back(draw_word(rng, l), draw_coeff(rng, field));
  }
  return Polynomial::from_terms(field, 2, std::move(terms));
}

}  // namespace

EstimateInstance random_estimate_instance(std::mt19937_64& rng, Field field) {
  static constexpr std::array<std::pair<long, long>, 6> kExponents{{{2, 3}, {3, 2}, {3, 4}, {4, 3}, {2, 5}, {5, 2}}};
  std::uniform_int_distribution<std::size_t> pick(0, kExponents.size() - 1);
  std::uniform_int_distribution<long> core_deg(2, 3);
  const auto [a, b] = kExponents[pick(rng)];
  const long dh = core_deg(rng);
  Polynomial h(field);
  while (h.degree() != Degree(dh)) h = draw_poly(rng, field, static_cast<std::size_t>(dh), 2, dh);
  auto with_tail = [&](long e) {
    const auto top = h.pow(static_cast<std::size_t>(e));
    return top + draw_poly(rng, field, static_cast<std::size_t>(dh * e - 1), 5);
  };
  auto f = with_tail(a);
  auto g = with_tail(b);
  Polynomial P(field);
  while (P.is_zero()) P = draw_poly(rng, field, 3, 4);
  return {std::move(f), std::move(g), std::move(P)};
}

EstimateHarnessResult run_estimate_harness(std::uint64_t seed, Field field, long cases, long max_draws) {
  std::mt19937_64 rng(seed);
  EstimateHarnessResult out;
  while (out.hypotheses_hold < cases && out.generated < max_draws) {
    auto inst = random_estimate_instance(rng, field);
    ++out.generated;
    const auto rep = check_estimate(inst.f, inst.g, inst.P);
    if (!rep.hypotheses_hold) continue;
    ++out.hypotheses_hold;
    if (!rep.inequality_holds) {
      ++out.violations;
      if (!out.first_violation) out.first_violation = std::move(inst);
    }
  }
  return out;
}

}  // namespace freealg
