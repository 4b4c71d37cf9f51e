#pragma once

#include <cstdint>
#include <vector>

namespace modunits {

// (sum_k e(k), sum_k k^2 e(k)).
struct Ledger {
  std::int64_t sum1 = 0;
  std::int64_t sum2 = 0;
  friend bool operator==(const Ledger&, const Ledger&) = default;
};

// Exponents e(1..m), m = floor(N/2), of a product of h_(k/N,0). Entry i of
// `e` holds e(i + 1).
struct ExpVector {
  int N = 0;
  std::vector<std::int64_t> e;

  ExpVector() = default;
  ExpVector(int level, std::vector<std::int64_t> exponents);
  static ExpVector zero(int level);
  static ExpVector unit(int level, int k);  // delta_k

  [[nodiscard]] int m() const { return N / 2; }
  [[nodiscard]] std::int64_t at(int k) const { return e[static_cast<std::size_t>(k - 1)]; }
  std::int64_t& at(int k) { return e[static_cast<std::size_t>(k - 1)]; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Ledger ledger() const;

  ExpVector& operator+=(const ExpVector& o);
  ExpVector& operator-=(const ExpVector& o);
  ExpVector& operator*=(std::int64_t s);
  friend ExpVector operator+(ExpVector a, const ExpVector& b) { return a += b; }
  friend ExpVector operator-(ExpVector a, const ExpVector& b) { return a -= b; }
  friend ExpVector operator*(ExpVector a, std::int64_t s) { return a *= s; }
  friend ExpVector operator*(std::int64_t s, ExpVector a) { return a *= s; }
  friend ExpVector operator-(ExpVector a) { return a *= -1; }
  friend bool operator==(const ExpVector&, const ExpVector&) = default;
};

}  // namespace modunits
