#include "freealg/malcev_neumann.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

#include "freealg/error.hpp"
#include "freealg/linalg.hpp"

namespace freealg {

// ---------------------------------------------------------------- group words

GroupWord::GroupWord(const std::vector<std::int8_t>& letters) {
  for (auto l : letters) {
    if (l == 0 || l < -2 || l > 2) throw Error(ErrorCode::BadArgument, "group letters are +-1, +-2");
    if (!letters_.empty() && letters_.back() == -l) letters_.pop_back();
    else letters_.push_back(l);
  }
}

GroupWord GroupWord::from_word(const Word& w) {
  std::vector<std::int8_t> out;
  for (Letter l : w) {
    if (l > 1) throw Error(ErrorCode::AlphabetMismatch, "group words use the alphabet {x, y}");
    out.push_back(static_cast<std::int8_t>(l + 1));
  }
  return GroupWord(out);
}

long GroupWord::degree() const {
  long d = 0;
  for (auto l : letters_) d += l > 0 ? 1 : -1;
  return d;
}

bool GroupWord::has_inverse_letter() const {
  return std::any_of(letters_.begin(), letters_.end(), [](std::int8_t l) { return l < 0; });
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  for (auto& l : out.letters_) l = static_cast<std::int8_t>(-l);
  return out;
}

GroupWord GroupWord::pow(long e) const {
  const GroupWord base = e < 0 ? inverse() : *this;
  GroupWord out;
  for (long i = 0; i < std::labs(e); ++i) out = out * base;
  return out;
}

std::optional<Word> GroupWord::to_word() const {
  std::vector<Letter> out;
  for (auto l : letters_) {
    if (l < 0) return std::nullopt;
    out.push_back(static_cast<Letter>(l - 1));
  }
  return Word(std::move(out));
}

GroupWord gw_mul(const GroupWord& a, const GroupWord& b) {
  const auto& la = a.letters();
  const auto& lb = b.letters();
  std::size_t cut = 0;
  while (cut < la.size() && cut < lb.size() && la[la.size() - 1 - cut] == -lb[cut]) ++cut;
  std::vector<std::int8_t> out(la.begin(), la.end() - static_cast<std::ptrdiff_t>(cut));
  out.insert(out.end(), lb.begin() + static_cast<std::ptrdiff_t>(cut), lb.end());
  return GroupWord(out);
}

namespace {

int letter_rank(std::int8_t l) {
  switch (l) {
    case 1: return 0;
    case -1: return 1;
    case 2: return 2;
    default: return 3;
  }
}

// w = p c p^-1 with c cyclically reduced.
std::pair<GroupWord, GroupWord> cyclic_core(const GroupWord& w) {
  const auto& l = w.letters();
  std::size_t k = 0;
  while (2 * k + 1 < l.size() && l[k] == -l[l.size() - 1 - k]) ++k;
  const std::vector<std::int8_t> p(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k));
  const std::vector<std::int8_t> c(l.begin() + static_cast<std::ptrdiff_t>(k), l.end() - static_cast<std::ptrdiff_t>(k));
  return {GroupWord(p), GroupWord(c)};
}

}  // namespace

bool GroupWordLess::operator()(const GroupWord& a, const GroupWord& b) const {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(), b.letters().end(),
                                      [](std::int8_t p, std::int8_t q) { return letter_rank(p) < letter_rank(q); });
}

std::string to_string(const GroupWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    if (!out.empty()) out += '*';
    out += std::abs(l[i]) == 1 ? 'x' : 'y';
    const long e = static_cast<long>(j - i) * (l[i] > 0 ? 1 : -1);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

std::optional<GroupWord> group_root(const GroupWord& g, long n) {
  if (n < 1) throw Error(ErrorCode::BadArgument, "root index must be positive");
  if (g.is_identity()) return GroupWord{};
  const auto [p, c] = cyclic_core(g);
  if (c.size() % static_cast<std::size_t>(n) != 0) return std::nullopt;
  const auto len = c.size() / static_cast<std::size_t>(n);
  const GroupWord c0(std::vector<std::int8_t>(c.letters().begin(), c.letters().begin() + static_cast<std::ptrdiff_t>(len)));
  if (c0.pow(n) != c) return std::nullopt;
  return p * c0 * p.inverse();
}

GroupWord primitive_root(const GroupWord& w) {
  const auto [p, c] = cyclic_core(w);
  for (std::size_t len = 1; len < c.size(); ++len) {
    if (c.size() % len) continue;
    if (auto r = group_root(w, static_cast<long>(c.size() / len))) return *r;
  }
  return w;
}

// ------------------------------------------------------------------- series

TruncatedSeries::TruncatedSeries(Field field, Terms terms, std::optional<long> floor)
    : field_(field), floor_(floor) {
  for (auto& [w, c] : terms) {
    if (c.field() != field) throw Error(ErrorCode::MixedFields, "coefficient from a different field");
    if (c.is_zero() || (floor && w.degree() < *floor)) continue;
    terms_.emplace(w, c);
  }
}

TruncatedSeries TruncatedSeries::monomial(const GroupWord& w, const FieldElem& c) {
  return TruncatedSeries(c.field(), Terms{{w, c}});
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p) {
  Terms t;
  for (const auto& [w, c] : p.terms()) t.emplace(GroupWord::from_word(w), c);
  return TruncatedSeries(p.field(), std::move(t));
}

Degree TruncatedSeries::top() const {
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree(terms_.rbegin()->first.degree());
}

FieldElem TruncatedSeries::coefficient(const GroupWord& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

TruncatedSeries::Terms TruncatedSeries::slice(long degree) const {
  Terms out;
  for (const auto& [w, c] : terms_)
    if (w.degree() == degree) out.emplace(w, c);
  return out;
}

TruncatedSeries TruncatedSeries::truncated(long d) const {
  const long f = floor_ ? std::max(*floor_, d) : d;
  return TruncatedSeries(field_, terms_, f);
}

std::optional<Polynomial> TruncatedSeries::to_polynomial() const {
  std::vector<Polynomial::Term> out;
  for (const auto& [w, c] : terms_) {
    auto word = w.to_word();
    if (!word) return std::nullopt;
    out.emplace_back(std::move(*word), c);
  }
  return Polynomial::from_terms(field_, 2, std::move(out));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

namespace {

std::optional<long> min_exactness(std::optional<long> a, std::optional<long> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

void require_same_field(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::MixedFields, "series over different fields");
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_field(a, b);
  auto terms = a.terms_;
  for (const auto& [w, c] : b.terms_) {
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) it->second += c;
  }
  return TruncatedSeries(a.field_, std::move(terms), min_exactness(a.floor_, b.floor_));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const FieldElem& c, const TruncatedSeries& a) {
  auto terms = a.terms_;
  for (auto& [w, v] : terms) v = c * v;
  return TruncatedSeries(a.field_, std::move(terms), a.floor_);
}

namespace {

// Highest degree an unknown or stored term of s can have.
std::optional<long> reach(const TruncatedSeries& s) {
  if (!s.is_zero()) return s.top().value();
  if (s.floor()) return *s.floor() - 1;
  return std::nullopt;  // exact zero
}

// Terms of a*b with degree >= bottom (all terms when bottom is empty).
TruncatedSeries::Terms product_terms(const TruncatedSeries& a, const TruncatedSeries& b, std::optional<long> bottom) {
  TruncatedSeries::Terms out;
  for (const auto& [wa, ca] : a.terms()) {
    for (auto it = b.terms().rbegin(); it != b.terms().rend(); ++it) {
      const auto& [wb, cb] = *it;
      if (bottom && wa.degree() + wb.degree() < *bottom) break;
      auto [pos, inserted] = out.try_emplace(wa * wb, ca * cb);
      if (!inserted) pos->second += ca * cb;
    }
  }
  return out;
}

}  // namespace

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_field(a, b);
  const auto ra = reach(a), rb = reach(b);
  if (!ra || !rb) return TruncatedSeries(a.field());  // exact zero factor
  std::optional<long> floor;
  if (a.floor()) floor = *a.floor() + *rb;
  if (b.floor()) floor = std::max(floor.value_or(*b.floor() + *ra), *b.floor() + *ra);
  TruncatedSeries out(a.field(), product_terms(a, b, floor), floor);
  if (floor && out.is_zero())
    throw Error(ErrorCode::FloorCollapse, "no exact term survives the product",
                {{"floor", std::to_string(*floor)}});
  return out;
}

// -------------------------------------------------------------- text forms

namespace {

class SeriesParser {
 public:
  SeriesParser(const std::string& text, Field field) : text_(text), field_(field) {}

  TruncatedSeries::Terms parse() {
    TruncatedSeries::Terms out;
    bool negate = accept('-');
    if (!negate) accept('+');
    for (;;) {
      auto [w, c] = term();
      if (negate) c = -c;
      auto [it, inserted] = out.try_emplace(w, c);
      if (!inserted) it->second += c;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_),
                {{"position", std::to_string(pos_)}, {"text", text_}});
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return text_.substr(start, pos_ - start);
  }

  std::pair<GroupWord, FieldElem> term() {
    FieldElem c = FieldElem::one(field_);
    GroupWord w;
    bool need_factor = true;
    if (peek_digit()) {
      mpq_class q{mpz_class(digits())};
      if (accept('/')) {
        const mpz_class den(digits());
        if (den == 0) fail("zero denominator");
        q /= den;
      }
      try {
        c = FieldElem::from_rational(field_, q);
      } catch (const Error&) {
        fail("coefficient not representable in the field");
      }
      need_factor = accept('*');
    }
    if (!need_factor) return {w, c};
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) fail("expected a letter");
      const char l = text_[pos_];
      std::int8_t code;
      if (l == 'x') code = 1;
      else if (l == 'y') code = 2;
      else if (l == '1' && w.is_identity()) {
        ++pos_;
        if (!accept('*')) return {w, c};
        continue;
      } else fail("expected x or y");
      ++pos_;
      long e = 1;
      if (accept('^')) {
        const bool neg = accept('-');
        const auto s = digits();
        if (s.size() > 6) fail("exponent too large");
        e = std::stol(s);
        if (neg) e = -e;
        if (e == 0) fail("exponent must be nonzero");
      }
      w = w * GroupWord({code}).pow(e);
      if (!accept('*')) return {w, c};
    }
  }

  std::string text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

TruncatedSeries parse_series(const std::string& text, Field field, std::optional<long> floor) {
  return TruncatedSeries(field, SeriesParser(text, field).parse(), floor);
}

std::string print_series(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    const bool neg = c.is_negative_rational();
    const auto mag = neg ? (-c).to_string() : c.to_string();
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (w.is_identity()) out += mag;
    else if (mag == "1") out += to_string(w);
    else out += mag + "*" + to_string(w);
  }
  return out;
}

// ------------------------------------------------------------------- roots

namespace {

// a^n = c in the field, if such a exists.
std::optional<FieldElem> field_root(const FieldElem& c, long n) {
  const Field f = c.field();
  if (c.is_zero()) return c;
  if (f.is_rational()) {
    const mpq_class& q = c.rational();
    if (q < 0 && n % 2 == 0) return std::nullopt;
    mpz_class num = abs(q.get_num()), den = q.get_den(), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n))) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n))) return std::nullopt;
    mpq_class r(q < 0 ? mpz_class(-rn) : rn, rd);
    r.canonicalize();
    return FieldElem::from_rational(f, r);
  }
  const auto p = f.characteristic();
  if (p > (1u << 20)) throw Error(ErrorCode::PreconditionFailed, "leading coefficient root search limited to p < 2^20");
  for (std::uint64_t v = 1; v < p; ++v) {
    FieldElem a(f, static_cast<long>(v));
    if (a.pow(static_cast<std::uint64_t>(n)) == c) return a;
  }
  return std::nullopt;
}

// Terms of s^n with degree >= bottom, s exact.
TruncatedSeries::Terms power_terms(const TruncatedSeries& s, long n, long bottom) {
  TruncatedSeries acc = TruncatedSeries::monomial(GroupWord{}, FieldElem::one(s.field()));
  for (long i = 0; i < n; ++i) {
    // Factors still to come can raise the degree by at most (n - 1 - i) * top.
    const long slack = (n - 1 - i) * s.top().value();
    acc = TruncatedSeries(s.field(), product_terms(acc, s, bottom - std::max(0L, slack)));
  }
  return TruncatedSeries(s.field(), acc.terms(), bottom).terms();
}

struct RootSetup {
  GroupWord w;
  FieldElem a;  // leading coefficient of the root
};

RootSetup leading_root(const TruncatedSeries& g, long n, ErrorCode not_power) {
  if (g.is_zero()) throw Error(not_power, "zero series has no leading word");
  const auto top = g.top().value();
  const auto lead = g.slice(top);
  if (lead.size() != 1)
    throw Error(not_power, "top slice is not a single word", {{"top_terms", std::to_string(lead.size())}});
  const auto& [word, coeff] = *lead.begin();
  const auto w = group_root(word, n);
  if (!w)
    throw Error(not_power, "leading word is not a power", {{"word", to_string(word)}, {"n", std::to_string(n)}});
  const auto a = field_root(coeff, n);
  if (!a)
    throw Error(not_power, "leading coefficient is not a power", {{"coefficient", coeff.to_string()}});
  return {*w, *a};
}

void require_floor(const TruncatedSeries& g, long window) {
  if (g.floor() && *g.floor() > -window)
    throw Error(ErrorCode::InsufficientFloor, "input is not exact far enough down",
                {{"required_floor", std::to_string(-window)}, {"floor", std::to_string(*g.floor())}});
}

// Shared per-degree solver. n is the root index; char2 enables the
// centralizer absorption step for n = 2 in characteristic 2.
TruncatedSeries solve_root(const TruncatedSeries& g, long n, long window, int basis_rounds, ErrorCode not_power,
                           bool char2) {
  if (basis_rounds < 0) throw Error(ErrorCode::BadArgument, "basis rounds must be nonnegative");
  const Field field = g.field();
  const auto [w, a] = leading_root(g, n, not_power);
  require_floor(g, window);
  const long dw = w.degree();
  const long bottom = -window;
  const GroupWord w_inv = w.inverse();
  const GroupWord r = primitive_root(w);
  std::vector<GroupWord> wpow;  // w^0 .. w^(n-1)
  for (long i = 0; i < n; ++i) wpow.push_back(w.pow(i));
  const auto a_pow = a.pow(static_cast<std::uint64_t>(n - 1));

  TruncatedSeries h = TruncatedSeries::monomial(w, a);
  auto residual = [&] {
    // h^n - g above the window.
    return TruncatedSeries(field, power_terms(h, n, bottom)) - g.truncated(bottom);
  };
  auto linear_image = [&](const GroupWord& c) {
    TruncatedSeries::Terms out;
    for (long i = 0; i < n; ++i) {
      auto [it, inserted] = out.try_emplace(wpow[i] * c * wpow[n - 1 - i], a_pow);
      if (!inserted) it->second += a_pow;
    }
    return out;
  };

  auto rho = residual().truncated(bottom);
  std::optional<long> last_top;
  while (!rho.is_zero()) {
    const long d = rho.top().value();
    if (last_top && d >= *last_top)
      throw Error(ErrorCode::BasisExhausted, "residual did not drop below the solved slice",
                  {{"degree", std::to_string(d)}});
    last_top = d;
    auto slice = rho.slice(d);

    if (char2) {
      // Words commuting with w are invisible to c -> wc + cw; an even power of
      // the root of w is cleared by adding its square root to h.
      TruncatedSeries add(field);
      for (auto it = slice.begin(); it != slice.end();) {
        if (it->first * w != w * it->first) {
          ++it;
          continue;
        }
        auto z = group_root(it->first, 2);
        if (!z || *z * r != r * *z)
          throw Error(ErrorCode::BasisExhausted, "slice word in the centralizer of w is not a square",
                      {{"degree", std::to_string(d)}, {"word", to_string(it->first)}});
        add = add + TruncatedSeries::monomial(*z, it->second);  // a^2 = a over F_2
        it = slice.erase(it);
      }
      if (!add.is_zero()) {
        h = h + add;
        rho = residual().truncated(bottom);
        last_top = d + 1;  // allow re-solving the same degree once
        continue;
      }
    }

    // Candidate basis: w^-j W w^-(n-1-j), closed under conjugation by w.
    std::set<GroupWord, GroupWordLess> basis;
    for (const auto& [word, c] : slice)
      for (long j = 0; j < n; ++j) basis.insert(w_inv.pow(j) * word * w_inv.pow(n - 1 - j));
    for (int round = 0; round < basis_rounds; ++round) {
      std::vector<GroupWord> fresh;
      for (const auto& b : basis) {
        fresh.push_back(w_inv * b * w);
        fresh.push_back(w * b * w_inv);
      }
      basis.insert(fresh.begin(), fresh.end());
    }
    const std::vector<GroupWord> cols(basis.begin(), basis.end());
    std::map<GroupWord, std::size_t, GroupWordLess> row_of;
    std::vector<TruncatedSeries::Terms> images;
    for (const auto& b : cols) {
      images.push_back(linear_image(b));
      for (const auto& [word, c] : images.back()) row_of.try_emplace(word, row_of.size());
    }
    for (const auto& [word, c] : slice) row_of.try_emplace(word, row_of.size());
    Matrix m(field, row_of.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [word, c] : images[j]) m(row_of.at(word), j) += c;
    Vector rhs(row_of.size(), FieldElem::zero(field));
    for (const auto& [word, c] : slice) rhs[row_of.at(word)] = -c;
    const auto sol = solve(m, rhs);
    if (!sol)
      throw Error(ErrorCode::BasisExhausted, "slice is not in the image of the candidate basis",
                  {{"degree", std::to_string(d)},
                   {"basis_rounds", std::to_string(basis_rounds)},
                   {"basis_size", std::to_string(cols.size())},
                   {"slice_terms", std::to_string(slice.size())}});
    TruncatedSeries::Terms step;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!(*sol)[j].is_zero()) step.emplace(cols[j], (*sol)[j]);
    h = h + TruncatedSeries(field, std::move(step));
    rho = residual().truncated(bottom);
  }
  return h.truncated(bottom - (n - 1) * dw);
}

}  // namespace

TruncatedSeries mn_sqrt_char2(const TruncatedSeries& g, long window, int basis_rounds) {
  if (g.field().characteristic() != 2)
    throw Error(ErrorCode::PreconditionFailed, "characteristic-2 square root needs F_2",
                {{"field", g.field().selector()}});
  return solve_root(g, 2, window, basis_rounds, ErrorCode::NotASquareLeading, true);
}

TruncatedSeries mn_nth_root(const TruncatedSeries& g, long n, long window, int basis_rounds) {
  if (n < 2) throw Error(ErrorCode::BadArgument, "root index must be at least 2", {{"n", std::to_string(n)}});
  const auto p = g.field().characteristic();
  if (p == 2 && n == 2) return mn_sqrt_char2(g, window, basis_rounds);
  if (p != 0 && n % static_cast<long>(p) == 0)
    throw Error(ErrorCode::CharDividesN, "characteristic divides the root index",
                {{"n", std::to_string(n)}, {"field", g.field().selector()}});
  return solve_root(g, n, window, basis_rounds, ErrorCode::NotAnNthPowerLeading, false);
}

FractionalPower mn_fractional_power(const TruncatedSeries& g, long m, long n, long window, int basis_rounds) {
  if (m < 1 || n < 1) throw Error(ErrorCode::BadArgument, "m and n must be positive");
  const long d = std::gcd(m, n);
  const long mm = m / d, nn = n / d;
  if (nn == 1)
    throw Error(ErrorCode::BadArgument, "n divides m", {{"m", std::to_string(m)}, {"n", std::to_string(n)}});
  if (g.is_zero()) throw Error(ErrorCode::NotAnNthPowerLeading, "zero series has no leading word");
  const long top = g.top().value();
  if (top % nn != 0)
    throw Error(ErrorCode::NotAnNthPowerLeading, "top degree is not divisible by n", {{"top", std::to_string(top)}});
  const long dw = top / nn;
  const long inner = window + std::max(0L, (mm - nn) * dw);
  const auto h = mn_nth_root(g, nn, inner, basis_rounds);
  TruncatedSeries acc = h;
  for (long i = 1; i < mm; ++i) acc = series_mul(acc, h);
  return {acc, mm, nn, d != 1};
}

std::optional<GroupWord> negative_power_witness(const TruncatedSeries& s) {
  std::optional<GroupWord> best;
  for (const auto& [w, c] : s.terms()) {
    if (w.degree() <= 0 || !w.has_inverse_letter()) continue;
    if (!best || w.degree() > best->degree()) best = w;  // ascending order keeps the smallest among ties
  }
  return best;
}

TruncatedSeries build_theorem9_input(long k, SummandVariant variant) {
  if (k < 2) throw Error(ErrorCode::BadK, "k must be at least 2", {{"k", std::to_string(k)}});
  const Field f2 = Field::prime(2);
  const auto one = FieldElem::one(f2);
  const GroupWord x = GroupWord::x(), y = GroupWord::y();
  const GroupWord u = (x * y).pow(k) * x;
  TruncatedSeries::Terms t{{u * u, one}, {x * y, one}};
  if (variant == SummandVariant::XyPlusYx) t.emplace(y * x, one);
  else t.emplace(u, one);
  return TruncatedSeries(f2, std::move(t));
}

}  // namespace freealg
