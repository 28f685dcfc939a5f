#include "freealg/bimodule.hpp"

#include <string>
#include <unordered_map>

#include "freealg/error.hpp"
#include "freealg/linalg.hpp"

namespace freealg {

namespace {

constexpr std::size_t kMaxUnknowns = 2048;

std::string letters_of(const Word& w) { return to_string(w, default_letter_names(2)); }

std::vector<Word> words_up_to(std::size_t alphabet, long bound) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (long d = 1; d <= bound; ++d) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t l = 0; l < alphabet; ++l) out.push_back(out[i] * Word::letter(static_cast<Letter>(l)));
    begin = end;
  }
  return out;
}

Polynomial combine(const std::vector<Word>& words, const Vector& v, std::size_t offset, Field field,
                   std::size_t alphabet) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (!v[offset + i].is_zero()) terms.emplace_back(words[i], v[offset + i]);
  return Polynomial::from_terms(field, alphabet, std::move(terms));
}

}  // namespace

MonomialClass classify_monomial(const Word& u, const Word& t) {
  if (!is_primitive(u))
    throw Error(ErrorCode::ImprimitiveU, "u must be a nonempty word that is not a proper power",
                {{"u", u.empty() ? "1" : std::to_string(u.size()) + " letters"}});
  if (t.empty()) return {MonomialKind::Type1, {}, {}, 0, {}, {}};
  const std::size_t n = u.size(), l = t.size();
  if (l >= n || !u.starts_with(t)) return {MonomialKind::Type2, {}, {}, 0, {}, {}};
  const Word t2 = u.subword(n - l, l);
  if (!(t * u == u * t2)) return {MonomialKind::Type2, {}, {}, 0, {}, {}};

  // t u = u t2 makes |t| a period of u, so u = t^k v1 with v1 a head of t.
  MonomialClass out{MonomialKind::Type3, t.subword(0, n % l), t.subword(n % l, l - n % l),
                    static_cast<long>(n / l), t, t2};
  const Word p = out.v1 * out.v2, q = out.v2 * out.v1;
  if (!(p.pow(n / l) * out.v1 == u) || !(p == t) || !(q == t2) || p == q)
    throw Error(ErrorCode::PreconditionFailed, "internal: period extraction inconsistent",
                {{"u", letters_of(u)}, {"t", letters_of(t)}});
  return out;
}

CommutatorEqSolution solve_commutator_equation(const Polynomial& u, long m, long n, long bound) {
  if (bound < 0) throw Error(ErrorCode::BadBound, "degree bound must be nonnegative", {{"bound", std::to_string(bound)}});
  if (m < 1 || n < 1)
    throw Error(ErrorCode::BadArgument, "m and n must be positive", {{"m", std::to_string(m)}, {"n", std::to_string(n)}});
  if (u.size() != 1 || u.degree() < Degree(1))
    throw Error(ErrorCode::BadArgument, "u must be a single nonempty word");

  const Field field = u.field();
  const std::size_t alphabet = u.alphabet_size();
  const auto words = words_up_to(alphabet, bound);
  const std::size_t N = words.size();
  if (2 * N > kMaxUnknowns)
    throw Error(ErrorCode::CapExceeded, "too many unknowns for the degree bound",
                {{"unknowns", std::to_string(2 * N)}, {"cap", std::to_string(kMaxUnknowns)}});

  const auto um = u.pow(static_cast<std::size_t>(m)), un = u.pow(static_cast<std::size_t>(n));
  std::vector<Polynomial> columns;
  columns.reserve(2 * N);
  for (const auto* power : {&um, &un})
    for (const auto& w : words) columns.push_back(commutator(*power, Polynomial::monomial(w, FieldElem::one(field), alphabet)));

  std::unordered_map<Word, std::size_t, WordHash> row_of;
  for (const auto& c : columns)
    for (const auto& [w, coef] : c.terms()) row_of.emplace(w, row_of.size());
  Matrix A(field, row_of.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [w, coef] : columns[j].terms()) A(row_of.at(w), j) = coef;

  CommutatorEqSolution out{{}, bound, 2 * N, row_of.size()};
  for (const auto& v : kernel_basis(A)) {
    auto s = combine(words, v, 0, field, alphabet);
    auto r = combine(words, v, N, field, alphabet);
    if (!(commutator(um, s) + commutator(un, r)).is_zero())
      throw Error(ErrorCode::PreconditionFailed, "internal: kernel vector fails the equation");
    out.basis.emplace_back(std::move(s), std::move(r));
  }
  return out;
}

std::optional<std::vector<FieldElem>> solution_coordinates(const CommutatorEqSolution& sol, const Polynomial& s,
                                                           const Polynomial& r) {
  const Field field = s.field();
  // Rows are (part, word) pairs; part 0 is s, part 1 is r.
  std::unordered_map<Word, std::size_t, WordHash> index[2];
  auto rows_for = [&](int part, const Polynomial& p) {
    for (const auto& [w, c] : p.terms()) index[part].emplace(w, index[part].size());
  };
  rows_for(0, s);
  rows_for(1, r);
  for (const auto& [bs, br] : sol.basis) {
    rows_for(0, bs);
    rows_for(1, br);
  }
  const std::size_t split = index[0].size();
  auto row = [&](int part, const Word& w) { return part == 0 ? index[0].at(w) : split + index[1].at(w); };

  Matrix A(field, split + index[1].size(), sol.basis.size());
  for (std::size_t j = 0; j < sol.basis.size(); ++j) {
    for (const auto& [w, c] : sol.basis[j].first.terms()) A(row(0, w), j) = c;
    for (const auto& [w, c] : sol.basis[j].second.terms()) A(row(1, w), j) = c;
  }
  Vector rhs(A.rows(), FieldElem::zero(field));
  for (const auto& [w, c] : s.terms()) rhs[row(0, w)] = c;
  for (const auto& [w, c] : r.terms()) rhs[row(1, w)] = c;
  if (sol.basis.empty()) {
    for (const auto& c : rhs)
      if (!c.is_zero()) return std::nullopt;
    return std::vector<FieldElem>{};
  }
  return solve(A, rhs);
}

}  // namespace freealg
