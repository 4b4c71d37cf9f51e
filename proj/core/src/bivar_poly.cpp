#include "modunits/bivar_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "modunits/errors.hpp"

namespace modunits {

namespace {

std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return MonomialOrder{}(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

}  // namespace

BivarPoly::BivarPoly(std::vector<Term> terms) : terms_(canonicalize(std::move(terms))) {}

BivarPoly::BivarPoly(long c) {
  if (c != 0) terms_.push_back({{0, 0}, mpz_class(c)});
}

BivarPoly::BivarPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

BivarPoly BivarPoly::B() { return monomial(1, 1, 0); }
BivarPoly BivarPoly::C() { return monomial(1, 0, 1); }

BivarPoly BivarPoly::monomial(const mpz_class& coeff, unsigned degB, unsigned degC) {
  if (coeff == 0) return {};
  return BivarPoly(std::vector<Term>{{{degB, degC}, coeff}}, true);
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total() == 0);
}

mpz_class BivarPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.total() == 0) return terms_.back().coeff;
  return 0;
}

mpz_class BivarPoly::coeff(unsigned degB, unsigned degC) const {
  const Monomial m{degB, degC};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return MonomialOrder{}(t.mono, x);
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

unsigned BivarPoly::degB() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degB);
  return d;
}

unsigned BivarPoly::degC() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degC);
  return d;
}

unsigned BivarPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.total();
}

const Term& BivarPoly::grlex_c_lead() const {
  // The first block of stored terms has maximal total degree, sorted by
  // decreasing B-degree; its last entry has the largest C-degree.
  const unsigned top = terms_.front().mono.total();
  std::size_t i = 0;
  while (i + 1 < terms_.size() && terms_[i + 1].mono.total() == top) ++i;
  return terms_[i];
}

mpz_class BivarPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  const MonomialOrder less;
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && less(a->mono, b->mono))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || less(b->mono, a->mono)) {
      out.push_back(*b++);
    } else {
      mpz_class s = a->coeff + b->coeff;
      if (s != 0) out.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) { return *this += -o; }

BivarPoly operator-(BivarPoly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

BivarPoly& BivarPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 || b.size() == 1) {
    const BivarPoly& mono = a.size() == 1 ? a : b;
    const BivarPoly& other = a.size() == 1 ? b : a;
    const Term& m = mono.terms_.front();
    std::vector<Term> out;
    out.reserve(other.size());
    for (const auto& t : other.terms_) {
      out.push_back({{t.mono.degB + m.mono.degB, t.mono.degC + m.mono.degC}, t.coeff * m.coeff});
    }
    // Shifting by a fixed monomial preserves a graded order.
    return BivarPoly(std::move(out), true);
  }
  // Dense accumulation on the bounding box of the product.
  const unsigned nb = a.degB() + b.degB() + 1;
  const unsigned nc = a.degC() + b.degC() + 1;
  std::vector<mpz_class> grid(static_cast<std::size_t>(nb) * nc);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      const std::size_t idx = static_cast<std::size_t>(s.mono.degB + t.mono.degB) * nc +
                              (s.mono.degC + t.mono.degC);
      mpz_addmul(grid[idx].get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
  }
  std::vector<Term> out;
  for (unsigned total = nb + nc - 2 + 1; total-- > 0;) {
    // Within a total degree, walk B-degree downward.
    const unsigned hi = std::min(total, nb - 1);
    for (unsigned i = hi + 1; i-- > 0;) {
      const unsigned j = total - i;
      if (j >= nc) break;
      auto& c = grid[static_cast<std::size_t>(i) * nc + j];
      if (c != 0) out.push_back({{i, j}, std::move(c)});
    }
  }
  return BivarPoly(std::move(out), true);
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
  *this = *this * o;
  return *this;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly result(1L);
  BivarPoly b = *this;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return result;
}

mpz_class BivarPoly::evaluate(const mpz_class& b, const mpz_class& c) const {
  mpz_class acc = 0;
  for (const auto& t : terms_) {
    mpz_class bp, cp;
    mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), t.mono.degB);
    mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), t.mono.degC);
    acc += t.coeff * bp * cp;
  }
  return acc;
}

UniPoly BivarPoly::substitute(const UniPoly& b, const UniPoly& c) const {
  std::vector<UniPoly> bpow{UniPoly(1L)};
  std::vector<UniPoly> cpow{UniPoly(1L)};
  const unsigned db = degB();
  const unsigned dc = degC();
  for (unsigned i = 1; i <= db; ++i) bpow.push_back(bpow.back() * b);
  for (unsigned j = 1; j <= dc; ++j) cpow.push_back(cpow.back() * c);
  UniPoly acc;
  for (const auto& t : terms_) acc += bpow[t.mono.degB] * cpow[t.mono.degC] * t.coeff;
  return acc;
}

std::vector<UniPoly> BivarPoly::as_poly_in_C() const {
  if (terms_.empty()) return {};
  const unsigned dc = degC();
  const unsigned db = degB();
  std::vector<std::vector<mpz_class>> raw(dc + 1, std::vector<mpz_class>(db + 1));
  for (const auto& t : terms_) raw[t.mono.degC][t.mono.degB] = t.coeff;
  std::vector<UniPoly> out;
  out.reserve(dc + 1);
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

BivarPoly BivarPoly::from_poly_in_C(const std::vector<UniPoly>& coeffs) {
  std::vector<Term> terms;
  for (unsigned j = 0; j < coeffs.size(); ++j) {
    const auto& cj = coeffs[j].coeffs();
    for (unsigned i = 0; i < cj.size(); ++i) {
      if (cj[i] != 0) terms.push_back({{i, j}, cj[i]});
    }
  }
  return BivarPoly(std::move(terms));
}

BivarPoly div_exact(const BivarPoly& f, const BivarPoly& g) {
  if (g.is_zero()) throw NotDivisible();
  if (f.is_zero()) return {};
  if (g.size() == 1) {
    const Term& m = g.terms().front();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      if (t.mono.degB < m.mono.degB || t.mono.degC < m.mono.degC) throw NotDivisible();
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), m.coeff.get_mpz_t())) throw NotDivisible();
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), m.coeff.get_mpz_t());
      out.push_back({{t.mono.degB - m.mono.degB, t.mono.degC - m.mono.degC}, std::move(q)});
    }
    return BivarPoly(std::move(out));
  }
  // Long division in C over Z[B]: every step divides by lc_C(g) in Z[B], which
  // is exact whenever g | f in Z[B, C].
  std::vector<UniPoly> rem = f.as_poly_in_C();
  const std::vector<UniPoly> den = g.as_poly_in_C();
  const int dg = static_cast<int>(den.size()) - 1;
  const int df = static_cast<int>(rem.size()) - 1;
  if (df < dg) throw NotDivisible();
  std::vector<UniPoly> quot(static_cast<std::size_t>(df - dg + 1));
  for (int i = df; i >= dg; --i) {
    auto& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    UniPoly q = div_exact(top, den.back());
    const int shift = i - dg;
    for (int j = 0; j <= dg; ++j) {
      if (den[static_cast<std::size_t>(j)].is_zero()) continue;
      rem[static_cast<std::size_t>(shift + j)] -= q * den[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(shift)] = std::move(q);
  }
  for (int i = 0; i < dg; ++i) {
    if (!rem[static_cast<std::size_t>(i)].is_zero()) throw NotDivisible();
  }
  return BivarPoly::from_poly_in_C(quot);
}

BivarPoly normalize(const BivarPoly& f) {
  if (f.is_zero()) return f;
  mpz_class c = f.content();
  if (f.grlex_c_lead().coeff < 0) c = -c;
  if (c == 1) return f;
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return BivarPoly(std::move(terms));
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m) {
  bool wrote = false;
  if (m.degB > 0) {
    os << 'B';
    if (m.degB > 1) os << '^' << m.degB;
    wrote = true;
  }
  if (m.degC > 0) {
    if (wrote) os << '*';
    os << 'C';
    if (m.degC > 1) os << '^' << m.degC;
  }
}

}  // namespace

std::string to_text(const BivarPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool neg = t.coeff < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const mpz_class mag = abs(t.coeff);
    if (t.mono.total() == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    append_monomial(os, t.mono);
  }
  return os.str();
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  BivarPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term(sign));
    }
    return BivarPoly(std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    Term t{{0, 0}, mpz_class(sign)};
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        t.coeff *= parse_integer();
      } else if (ch == 'B' || ch == 'b' || ch == 'C' || ch == 'c') {
        ++pos_;
        unsigned e = 1;
        skip_ws();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<unsigned>(parse_integer().get_ui());
        }
        if (ch == 'B' || ch == 'b') {
          t.mono.degB += e;
        } else {
          t.mono.degC += e;
        }
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return t;
  }

  mpz_class parse_integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[nodiscard]] char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial text, offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_bivar(std::string_view text) { return TextParser(text).parse(); }

}  // namespace modunits
