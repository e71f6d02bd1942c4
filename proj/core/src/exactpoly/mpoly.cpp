#include "torsion/exactpoly/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "torsion/error.hpp"

namespace torsion {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Sym s, unsigned e) {
  Monomial m;
  m.set(s, e);
  return m;
}

void Monomial::set(Sym s, unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exps_[index(s)] + e;
  exps_[index(s)] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kSymCount; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kSymCount; ++i) {
    const unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(other.divides(*this));
  Monomial r;
  for (std::size_t i = 0; i < kSymCount; ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r;
  for (std::size_t i = 0; i < kSymCount; ++i) {
    const unsigned long e = static_cast<unsigned long>(exps_[i]) * k;
    if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ * k;
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kSymCount; ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

// x is printed last so that displayed terms read "c*b2*x^3".
constexpr std::array<Sym, kSymCount> kPrintOrder = {
    Sym::y,  Sym::b2, Sym::b4,    Sym::b6,     Sym::b8, Sym::a1,
    Sym::a2, Sym::a3, Sym::a4,    Sym::a6,     Sym::delta, Sym::lambda,
    Sym::u,  Sym::v,  Sym::s, Sym::t, Sym::x};

}  // namespace

std::string Monomial::to_string() const {
  std::string out;
  for (Sym s : kPrintOrder) {
    const unsigned e = (*this)[s];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name(s);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t i = 0; i < kSymCount; ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  }
  return std::strong_ordering::equal;
}

// ------------------------------------------------------------------ MPoly

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

MPoly MPoly::var(Sym s, unsigned e) { return monomial(Rat(1), Monomial::of(s, e)); }

MPoly MPoly::monomial(const Rat& c, const Monomial& m) {
  MPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  MPoly p;
  p.terms_.reserve(terms.size());
  std::size_t i = 0;
  while (i < terms.size()) {
    Term acc = std::move(terms[i++]);
    while (i < terms.size() && terms[i].mono == acc.mono) acc.coeff += terms[i++].coeff;
    if (acc.coeff != 0) p.terms_.push_back(std::move(acc));
  }
  return p;
}

MPoly MPoly::from_sorted_terms(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool MPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rat(0);
}

const Term& MPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

unsigned MPoly::degree(Sym s) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[s]);
  return d;
}

unsigned MPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

bool MPoly::contains(Sym s) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [s](const Term& t) { return t.mono[s] > 0; });
}

std::vector<Sym> MPoly::symbols() const {
  std::vector<Sym> out;
  for (Sym s : kAllSyms) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <bool Subtract>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = a[i].mono <=> b[j].mono;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, Subtract ? Rat(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rat s = Subtract ? Rat(a[i].coeff - b[j].coeff) : Rat(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, Subtract ? Rat(-b[j].coeff) : b[j].coeff});
  return out;
}

BigInt denominator_lcm(const MPoly& p) {
  BigInt l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  return l;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = multiply(*this, o); }

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) { return multiply(a, b); }

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

MPoly MPoly::shifted(const Monomial& m) const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MPoly multiply(const MPoly& a, const MPoly& b, const MonomialFilter& keep) {
  if (a.is_zero() || b.is_zero()) return MPoly{};
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (!keep && (ta.size() == 1 || tb.size() == 1)) {
    const auto& single = ta.size() == 1 ? ta[0] : tb[0];
    const auto& other = ta.size() == 1 ? tb : ta;
    std::vector<Term> out;
    out.reserve(other.size());
    for (const auto& t : other) out.push_back({t.mono * single.mono, t.coeff * single.coeff});
    return MPoly::from_sorted_terms(std::move(out));
  }

  // Clear denominators, accumulate with integer multiply-add, divide once.
  const BigInt la = denominator_lcm(a);
  const BigInt lb = denominator_lcm(b);
  std::vector<BigInt> ia(ta.size()), ib(tb.size());
  for (std::size_t i = 0; i < ta.size(); ++i) ia[i] = ta[i].coeff.get_num() * (la / ta[i].coeff.get_den());
  for (std::size_t j = 0; j < tb.size(); ++j) ib[j] = tb[j].coeff.get_num() * (lb / tb[j].coeff.get_den());

  std::unordered_map<Monomial, BigInt, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(ta.size() * tb.size(), 1U << 22));
  for (std::size_t i = 0; i < ta.size(); ++i) {
    for (std::size_t j = 0; j < tb.size(); ++j) {
      Monomial m = ta[i].mono * tb[j].mono;
      if (keep && !keep(m)) continue;
      auto& slot = acc[m];
      mpz_addmul(slot.get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  const BigInt den = la * lb;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c == 0) continue;
    Rat q(c, den);
    q.canonicalize();
    out.push_back({m, std::move(q)});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
  return MPoly::from_sorted_terms(std::move(out));
}

MPoly filter_terms(const MPoly& p, const MonomialFilter& keep) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (keep(t.mono)) out.push_back(t);
  }
  return MPoly::from_sorted_terms(std::move(out));
}

// ------------------------------------------------------------ text format

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += torsion::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += t.mono.to_string();
    } else if (t.coeff == -1) {
      out += '-';
      out += t.mono.to_string();
    } else {
      out += torsion::to_string(t.coeff);
      out += '*';
      out += t.mono.to_string();
    }
  }
  return out;
}

namespace {

void parse_factor(std::string_view f, Monomial& mono) {
  const auto caret = f.find('^');
  const auto sym_text = f.substr(0, caret);
  const auto sym = parse_sym(sym_text);
  if (!sym) throw ParseError("unknown symbol: " + std::string(sym_text));
  unsigned e = 1;
  if (caret != std::string_view::npos) {
    const auto exp_text = f.substr(caret + 1);
    if (exp_text.empty()) throw ParseError("missing exponent");
    e = 0;
    for (char ch : exp_text) {
      if (ch < '0' || ch > '9') throw ParseError("bad exponent: " + std::string(exp_text));
      e = e * 10 + unsigned(ch - '0');
      if (e > 65535) throw ParseError("exponent too large");
    }
  }
  mono.set(*sym, mono[*sym] + e);
}

Term parse_term(std::string_view text) {
  if (text.empty()) throw ParseError("empty term");
  Term term{Monomial{}, Rat(1)};
  bool negate = false;
  if (text[0] == '-' && text.size() > 1 && !(text[1] >= '0' && text[1] <= '9')) {
    negate = true;
    text.remove_prefix(1);
  }
  bool first = true;
  while (!text.empty()) {
    const auto star = text.find('*');
    const auto piece = text.substr(0, star);
    if (piece.empty()) throw ParseError("empty factor");
    const bool numeric = piece[0] == '-' || (piece[0] >= '0' && piece[0] <= '9');
    if (numeric) {
      if (!first) throw ParseError("coefficient must lead the term");
      term.coeff = parse_rat(piece);
    } else {
      parse_factor(piece, term.mono);
    }
    first = false;
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
    if (text.empty()) throw ParseError("dangling '*'");
  }
  if (negate) term.coeff = -term.coeff;
  return term;
}

}  // namespace

MPoly MPoly::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty polynomial");
  if (text == "0") return MPoly{};
  std::vector<Term> terms;
  constexpr std::string_view sep = " + ";
  while (true) {
    const auto pos = text.find(sep);
    terms.push_back(parse_term(text.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + sep.size());
  }
  return from_terms(std::move(terms));
}

// ------------------------------------------------------ structural helpers

MPoly coeff(const MPoly& p, std::initializer_list<std::pair<Sym, unsigned>> pattern) {
  return coeff(p, std::span<const std::pair<Sym, unsigned>>(pattern.begin(), pattern.size()));
}

MPoly coeff(const MPoly& p, std::span<const std::pair<Sym, unsigned>> pattern) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    bool match = true;
    for (const auto& [s, e] : pattern) {
      if (t.mono[s] != e) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    Monomial m = t.mono;
    for (const auto& [s, e] : pattern) m.set(s, 0);
    out.push_back({m, t.coeff});
  }
  return MPoly::from_terms(std::move(out));
}

std::vector<MPoly> coefficients_in(const MPoly& p, Sym var) {
  std::vector<std::vector<Term>> buckets(p.degree(var) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    const unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  // Removing one variable from a grlex-sorted list can break the order.
  for (auto& b : buckets) out.push_back(MPoly::from_terms(std::move(b)));
  return out;
}

MPoly from_coefficients(std::span<const MPoly> coeffs, Sym var) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Monomial m = t.mono;
      m.set(var, m[var] + static_cast<unsigned>(k));
      out.push_back({m, t.coeff});
    }
  }
  return MPoly::from_terms(std::move(out));
}

MPoly leading_coefficient_in(const MPoly& p, Sym var) {
  if (p.is_zero()) return MPoly{};
  return coeff(p, {{var, p.degree(var)}});
}

MPoly evaluate(const MPoly& p, Sym s, const Rat& value) { return evaluate(p, std::map<Sym, Rat>{{s, value}}); }

MPoly evaluate(const MPoly& p, const std::map<Sym, Rat>& values) {
  std::map<Sym, std::vector<Rat>> powers;
  for (const auto& [s, v] : values) {
    auto& pw = powers[s];
    const unsigned d = p.degree(s);
    pw.reserve(d + 1);
    pw.emplace_back(1);
    for (unsigned k = 1; k <= d; ++k) pw.push_back(pw.back() * v);
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term r{t.mono, t.coeff};
    for (const auto& [s, pw] : powers) {
      const unsigned e = r.mono[s];
      if (e == 0) continue;
      r.coeff *= pw[e];
      r.mono.set(s, 0);
    }
    if (r.coeff != 0) out.push_back(std::move(r));
  }
  return MPoly::from_terms(std::move(out));
}

MPoly compose(const MPoly& p, const std::map<Sym, MPoly>& values) {
  std::map<Sym, std::vector<MPoly>> powers;
  for (const auto& [s, v] : values) {
    auto& pw = powers[s];
    const unsigned d = p.degree(s);
    pw.emplace_back(1);
    for (unsigned k = 1; k <= d; ++k) pw.push_back(pw.back() * v);
  }
  MPoly result;
  // Group terms by their residual monomial to limit the number of products.
  for (const auto& t : p.terms()) {
    MPoly term = MPoly::monomial(t.coeff, [&] {
      Monomial m = t.mono;
      for (const auto& [s, pw] : powers) m.set(s, 0);
      return m;
    }());
    for (const auto& [s, pw] : powers) {
      const unsigned e = t.mono[s];
      if (e > 0) term *= pw[e];
    }
    result += term;
  }
  return result;
}

Monomial monomial_content(const MPoly& p) {
  if (p.is_zero()) return Monomial{};
  Monomial g = p.terms().front().mono;
  for (const auto& t : p.terms()) g = g.gcd(t.mono);
  return g;
}

MPoly divide_by_monomial(const MPoly& p, const Monomial& m) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (!m.divides(t.mono)) throw NotDivisible("monomial does not divide term", t.mono.to_string());
    out.push_back({t.mono / m, t.coeff});
  }
  return MPoly::from_sorted_terms(std::move(out));
}

Rat rational_content(const MPoly& p) {
  if (p.is_zero()) return Rat(1);
  BigInt g = 0;
  BigInt l = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rat c(g, l);
  c.canonicalize();
  return c;
}

MPoly primitive_integer_part(const MPoly& p) {
  if (p.is_zero()) return p;
  Rat c = rational_content(p);
  if (p.leading().coeff < 0) c = -c;
  return p * Rat(1 / c);
}

}  // namespace torsion
