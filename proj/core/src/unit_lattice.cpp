#include "modunits/unit_lattice.hpp"

#include <numeric>
#include <string>

#include "modunits/errors.hpp"
#include "modunits/hnf.hpp"
#include "modunits/siegel.hpp"

namespace modunits {

ExpVector::ExpVector(int level, std::vector<std::int64_t> exponents)
    : N(level), e(std::move(exponents)) {
  if (static_cast<int>(e.size()) != N / 2) {
    throw BadIndex("exponent vector at level " + std::to_string(N) + " needs " +
                   std::to_string(N / 2) + " entries, got " + std::to_string(e.size()));
  }
}

ExpVector ExpVector::zero(int level) {
  return ExpVector(level, std::vector<std::int64_t>(static_cast<std::size_t>(level / 2)));
}

ExpVector ExpVector::unit(int level, int k) {
  ExpVector v = zero(level);
  v.at(k) = 1;
  return v;
}

bool ExpVector::is_zero() const {
  for (auto x : e) {
    if (x != 0) return false;
  }
  return true;
}

Ledger ExpVector::ledger() const {
  Ledger l;
  for (int k = 1; k <= m(); ++k) {
    l.sum1 += at(k);
    l.sum2 += static_cast<std::int64_t>(k) * k * at(k);
  }
  return l;
}

namespace {

void require_same_level(const ExpVector& a, const ExpVector& b) {
  if (a.N != b.N) throw BadIndex("exponent vectors at different levels");
}

}  // namespace

ExpVector& ExpVector::operator+=(const ExpVector& o) {
  require_same_level(*this, o);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
  return *this;
}

ExpVector& ExpVector::operator-=(const ExpVector& o) {
  require_same_level(*this, o);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
  return *this;
}

ExpVector& ExpVector::operator*=(std::int64_t s) {
  for (auto& x : e) x *= s;
  return *this;
}

std::int64_t second_modulus(int N) { return static_cast<std::int64_t>(N) * std::gcd(N, 2); }

bool is_in_S(const ExpVector& e) {
  const Ledger l = e.ledger();
  return l.sum1 % 12 == 0 && l.sum2 % second_modulus(e.N) == 0;
}

LatticeBasis basis_S(int N) {
  if (N < 4) throw BadIndex("basis_S needs N >= 4, got " + std::to_string(N));
  const int m = N / 2;
  IntMatrix A(2, std::vector<mpz_class>(static_cast<std::size_t>(m)));
  for (int k = 1; k <= m; ++k) {
    A[0][static_cast<std::size_t>(k - 1)] = 1;
    A[1][static_cast<std::size_t>(k - 1)] = static_cast<long>(k) * k;
  }
  const IntMatrix rows = congruence_kernel(A, {mpz_class(12), mpz_class(second_modulus(N))});
  LatticeBasis out;
  out.N = N;
  out.index = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::int64_t> v;
    v.reserve(rows[i].size());
    for (const auto& x : rows[i]) v.push_back(x.get_si());
    out.index *= rows[i][i];
    out.vectors.emplace_back(N, std::move(v));
  }
  return out;
}

namespace {

// Adds `power` copies of h_(n/N,0) to acc after folding; returns the sign
// picked up, or 0 when n is a multiple of N.
int add_folded(ExpVector& acc, long n, std::int64_t power) {
  const auto f = fold_index(n, acc.N);
  if (!f) return 0;
  acc.at(f->k) += power;
  return (f->sign < 0 && power % 2 != 0) ? -1 : 1;
}

void require_level(int N) {
  if (N < 4) throw BadIndex("level N must be >= 4, got " + std::to_string(N));
}

}  // namespace

ExpVector t_to_h(int N) {
  require_level(N);
  ExpVector t = ExpVector::zero(N);
  add_folded(t, 1, 2);
  add_folded(t, 2, -3);
  add_folded(t, 3, 1);
  return t;
}

ExpVector d_to_h(int N) { return (t_to_h(N) + ExpVector::unit(N, 1)) * 12; }

ExpVector v_to_h(int N) { return t_to_h(N) * second_modulus(N); }

std::optional<SignedExpVector> p_to_h(long n, int N) {
  require_level(N);
  if (n < 1) throw BadIndex("p_to_h needs n >= 1, got " + std::to_string(n));
  if (n % N == 0) return std::nullopt;
  SignedExpVector out{1, t_to_h(N) * (static_cast<std::int64_t>(n) * n - 1)};
  out.sign *= add_folded(out.e, n, 1);
  out.sign *= add_folded(out.e, 1, -1);
  return out;
}

PExpression to_p_expression(const ExpVector& e) {
  if (!is_in_S(e)) {
    const Ledger l = e.ledger();
    throw NotInS("exponent vector with ledger (" + std::to_string(l.sum1) + ", " +
                 std::to_string(l.sum2) + ") is not in S at level " + std::to_string(e.N));
  }
  const Ledger l = e.ledger();
  return {e.N, l.sum1 / 12, l.sum2 / second_modulus(e.N), e.e};
}

SignedExpVector expand_p_expression(const PExpression& p) {
  const int N = p.N;
  const int m = N / 2;
  SignedExpVector out{1, d_to_h(N) * p.alpha};
  auto add_p = [&](long n, std::int64_t power) {
    if (power == 0) return;
    const auto pn = p_to_h(n, N);
    // p_n with 1 <= n <= m + 1 < N never vanishes.
    if (!pn) throw BadIndex("p_" + std::to_string(n) + " vanishes at level " + std::to_string(N));
    out.e += pn->e * power;
    if (pn->sign < 0 && power % 2 != 0) out.sign = -out.sign;
  };
  add_p(N - m - 1, p.beta);
  add_p(m + 1, -p.beta);
  for (int k = 1; k <= m; ++k) add_p(k, p.pexp[static_cast<std::size_t>(k - 1)]);
  return out;
}

ExpVector decompose_series(const QSeries& fstar, int N) {
  require_level(N);
  const int m = N / 2;
  if (fstar.denom() != N) {
    throw PrecisionMismatch("decompose_series: series is in q^(1/" + std::to_string(fstar.denom()) +
                            "), expected q^(1/" + std::to_string(N) + ")");
  }
  if (fstar.prec() < m + 1) {
    throw InsufficientPrecision("decompose_series needs the series through q^(" + std::to_string(m) +
                                "/" + std::to_string(N) + ")");
  }
  if (fstar.coeff(0) != 1 || fstar.ord() != 0) {
    throw NotAUnitProduct("reduced form must have constant term 1");
  }
  ExpVector e = ExpVector::zero(N);
  QSeries rest = fstar;
  for (int k = 1; k <= m; ++k) {
    // h_star(k) = 1 - x^k + ...  (1 - 2x^k + ... when 2k = N)
    mpq_class c = rest.coeff(k);
    if (2 * k == N) c /= 2;
    if (c.get_den() != 1) {
      throw NotAUnitProduct("coefficient of q^(" + std::to_string(k) + "/" + std::to_string(N) +
                            ") does not give an integral exponent");
    }
    const std::int64_t ek = -c.get_num().get_si();
    if (ek == 0) continue;
    e.at(k) = ek;
    rest = rest * pow_int(h_star(k, N, fstar.prec()), -ek);
  }
  // A genuine product leaves exactly 1 behind at every tracked exponent.
  if (const auto diff = first_difference(rest, QSeries::one(N, rest.prec()))) {
    throw NotAUnitProduct("residual differs from 1 at q^(" + std::to_string(*diff) + "/" +
                          std::to_string(N) + ")");
  }
  return e;
}

mpq_class leading_exponent_value(const ExpVector& e) {
  mpq_class v = 0;
  const long N = e.N;
  for (int k = 1; k <= e.m(); ++k) {
    v += mpq_class(e.at(k) * (6L * k * k - 6L * k * N + N * N));
  }
  v /= mpq_class(12L * N * N);
  return v;
}

bool leading_exponent_check(const ExpVector& e) {
  const mpq_class scaled = leading_exponent_value(e) * e.N;
  return scaled.get_den() == 1;
}

}  // namespace modunits
