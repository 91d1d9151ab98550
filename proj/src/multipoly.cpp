#include "huckel/multipoly.hpp"

#include <algorithm>
#include <cctype>

namespace huckel {

int Var::slot() const {
  switch (kind) {
    case Kind::X: return kMaxPairs - 1 - index;
    case Kind::Y: return 2 * kMaxPairs - 1 - index;
    case Kind::Z: return 2 * kMaxPairs;
  }
  return 2 * kMaxPairs;
}

Var Var::from_slot(int s) {
  if (s < kMaxPairs) return Var::x(kMaxPairs - 1 - s);
  if (s < 2 * kMaxPairs) return Var::y(2 * kMaxPairs - 1 - s);
  return Var::z();
}

std::string Var::name() const {
  switch (kind) {
    case Kind::X: return "x" + std::to_string(index);
    case Kind::Y: return "y" + std::to_string(index);
    case Kind::Z: return "z";
  }
  return "?";
}

static void check_var(Var v) {
  if (v.kind != Var::Kind::Z && (v.index < 0 || v.index >= kMaxPairs)) {
    throw Error(Errc::BadRange, "variable pair index " + std::to_string(v.index) + " out of range");
  }
}

Monomial Monomial::of(Var v, std::uint16_t power) {
  Monomial m;
  m.set(v, power);
  return m;
}

void Monomial::set(Var v, std::uint16_t e) {
  check_var(v);
  auto& slot = exps_[v.slot()];
  degree_ = degree_ - slot + e;
  slot = e;
}

int Monomial::pairs_used() const {
  int used = 0;
  for (int i = 0; i < kMaxPairs; ++i) {
    if (exps_[Var::x(i).slot()] != 0 || exps_[Var::y(i).slot()] != 0) used = i + 1;
  }
  return used;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int s = 0; s < kSlots; ++s) {
    const unsigned e = unsigned(exps_[s]) + o.exps_[s];
    if (e > 0xffffu) throw Error(Errc::BadRange, "exponent overflow");
    r.exps_[s] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& num, Monomial& out) const {
  for (int s = 0; s < kSlots; ++s) {
    if (exps_[s] > num.exps_[s]) return false;
    out.exps_[s] = static_cast<std::uint16_t>(num.exps_[s] - exps_[s]);
  }
  out.degree_ = num.degree_ - degree_;
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int s = 0; s < kSlots; ++s) {
    if (exps_[s] == 0) continue;
    if (!out.empty()) out += '*';
    out += Var::from_slot(s).name();
    if (exps_[s] > 1) out += "^" + std::to_string(exps_[s]);
  }
  return out;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, BigInt(c)});
}

MultiPoly::MultiPoly(const BigInt& c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::var(Var v) {
  check_var(v);
  return monomial(Monomial::of(v), BigInt(1));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const BigInt& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  p.normalize_varcount();
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms, int varcount) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
  p.normalize_varcount();
  p.varcount_ = std::max(p.varcount_, varcount);
  return p;
}

void MultiPoly::normalize_varcount() {
  for (const auto& t : terms_) varcount_ = std::max(varcount_, t.mono.pairs_used());
}

MultiPoly& MultiPoly::with_varcount(int v) {
  if (v > kMaxPairs) throw Error(Errc::BadRange, "varcount exceeds supported pairs");
  varcount_ = std::max(varcount_, v);
  return *this;
}

BigInt MultiPoly::constant_value() const {
  if (!is_constant()) throw Error(Errc::BadRange, "polynomial is not constant: " + to_string());
  return terms_.empty() ? BigInt(0) : terms_[0].coef;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

int MultiPoly::degree_in(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.exponent(v));
  return d;
}

std::vector<Var> MultiPoly::variables() const {
  std::vector<Var> out;
  for (int s = 0; s < kSlots; ++s) {
    for (const auto& t : terms_) {
      if (t.mono.at_slot(s) != 0) {
        out.push_back(Var::from_slot(s));
        break;
      }
    }
  }
  return out;
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return BigInt(0);
}

namespace {

// Merge of two descending term lists with coefficient sign applied to `b`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(b[j]);
      if (negate_b) out.back().coef = -out.back().coef;
      ++j;
    } else {
      BigInt c = negate_b ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  varcount_ = std::max(varcount_, o.varcount_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  varcount_ = std::max(varcount_, o.varcount_);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return poly_mul(a, b); }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = poly_mul(*this, o);
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

MultiPoly MultiPoly::scaled(const BigInt& c) const {
  if (c.is_zero()) return MultiPoly{};
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  result.varcount_ = std::max(result.varcount_, varcount_);
  return result;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  std::vector<MultiPoly> powers{MultiPoly(1)};
  MultiPoly out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(v);
    Monomial rest = t.mono;
    rest.set(v, 0);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    out += MultiPoly::monomial(rest, t.coef) * powers[e];
  }
  out.varcount_ = std::max(varcount_, value.varcount_);
  return out;
}

MultiPoly MultiPoly::swap_xy() const {
  std::vector<Term> swapped;
  swapped.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    for (int i = 0; i < kMaxPairs; ++i) {
      m.set(Var::x(i), t.mono.exponent(Var::y(i)));
      m.set(Var::y(i), t.mono.exponent(Var::x(i)));
    }
    swapped.push_back({m, t.coef});
  }
  return from_terms(std::move(swapped), varcount_);
}

std::size_t MultiPoly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  for (const auto& t : terms_) {
    for (int s = 0; s < kSlots; ++s) mix(t.mono.at_slot(s));
    mix(std::hash<std::string>{}(t.coef.str()));
  }
  return h;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const bool neg = t.coef.sign() < 0;
    const BigInt mag = neg ? BigInt(-t.coef) : t.coef;
    if (i == 0) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mono = t.mono.to_string();
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  MultiPoly parse() {
    skip();
    MultiPoly result;
    bool first = true;
    while (pos_ < s_.size()) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      MultiPoly t = term();
      result += neg ? -t : t;
      first = false;
      skip();
    }
    if (first) fail("empty polynomial");
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    if (d.empty()) fail("expected digits");
    return d;
  }

  MultiPoly term() {
    BigInt coef = 1;
    Monomial mono;
    bool any = false;
    while (true) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= BigInt(digits());
      } else if (c == 'x' || c == 'y' || c == 'z') {
        ++pos_;
        Var v = Var::z();
        if (c != 'z') {
          const int idx = std::stoi(digits());
          v = c == 'x' ? Var::x(idx) : Var::y(idx);
          if (idx >= kMaxPairs) fail("pair index too large");
        }
        unsigned e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = static_cast<unsigned>(std::stoul(digits()));
        }
        mono.set(v, static_cast<std::uint16_t>(mono.exponent(v) + e));
      } else {
        fail("expected factor");
      }
      any = true;
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return MultiPoly::monomial(mono, coef);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly{};
  const int vc = std::max(a.varcount(), b.varcount());
  if (a.is_constant()) return b.scaled(a.constant_value()).with_varcount(vc);
  if (b.is_constant()) return a.scaled(b.constant_value()).with_varcount(vc);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) prod.push_back({s.mono * t.mono, s.coef * t.coef});
  }
  return MultiPoly::from_terms(std::move(prod), vc);
}

MultiPoly poly_exact_div(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw Error(Errc::NotDivisible, "division by the zero polynomial");
  if (den.is_constant()) {
    const BigInt d = den.constant_value();
    std::vector<Term> q;
    q.reserve(num.size());
    for (const auto& t : num.terms()) q.push_back({t.mono, exact_div(t.coef, d)});
    return MultiPoly::from_terms(std::move(q), num.varcount());
  }
  const Term& lead = den.leading();
  MultiPoly rem = num;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& r = rem.leading();
    Monomial qm;
    if (!lead.mono.divides(r.mono, qm)) {
      throw Error(Errc::NotDivisible, "(" + num.to_string() + ") / (" + den.to_string() + ")");
    }
    BigInt q, rr;
    boost::multiprecision::divide_qr(r.coef, lead.coef, q, rr);
    if (!rr.is_zero()) {
      throw Error(Errc::NotDivisible, "(" + num.to_string() + ") / (" + den.to_string() + ")");
    }
    const MultiPoly step = MultiPoly::monomial(qm, q);
    rem -= step * den;
    quot.push_back({qm, q});
  }
  return MultiPoly::from_terms(std::move(quot), std::max(num.varcount(), den.varcount()));
}

PropertyFlags poly_properties(const MultiPoly& p, int degree) {
  PropertyFlags f;
  f.homogeneous = !p.is_zero() && std::all_of(p.terms().begin(), p.terms().end(), [&](const Term& t) {
    return static_cast<int>(t.mono.degree()) == degree;
  });
  f.palindromic = p.swap_xy() == p;
  if (degree >= 0) {
    f.monic_extremes = p.coefficient(Monomial::of(Var::x(0), static_cast<std::uint16_t>(degree))) == 1 &&
                       p.coefficient(Monomial::of(Var::y(0), static_cast<std::uint16_t>(degree))) == 1;
  }
  return f;
}

std::vector<BigInt> bivariate_coefficients(const MultiPoly& p, int degree) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree + 1));
  for (int k = 0; k <= degree; ++k) {
    Monomial m;
    m.set(Var::x(0), static_cast<std::uint16_t>(degree - k));
    m.set(Var::y(0), static_cast<std::uint16_t>(k));
    c[static_cast<std::size_t>(k)] = p.coefficient(m);
  }
  return c;
}

std::vector<BigInt> univariate_coefficients(const MultiPoly& p, Var v) {
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(0, p.degree_in(v)) + 1));
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != t.mono.exponent(v)) {
      throw Error(Errc::BadRange, "polynomial is not univariate in " + v.name());
    }
    c[t.mono.exponent(v)] += t.coef;
  }
  return c;
}

}  // namespace huckel
