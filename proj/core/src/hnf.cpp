#include "modunits/hnf.hpp"

#include <algorithm>
#include <utility>

#include "modunits/errors.hpp"

namespace modunits {

namespace {

bool row_is_zero(const std::vector<mpz_class>& r) {
  return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), row_is_zero), rows.end());
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (rows[r][col] == 0) {
        std::swap(rows[r], rows[i]);
        continue;
      }
      // Unimodular 2x2 step [s t; -b/g a/g] that zeroes rows[i][col].
      mpz_class g, s, t;
      const mpz_class a = rows[r][col];
      const mpz_class b = rows[i][col];
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const mpz_class ag = a / g;
      const mpz_class bg = b / g;
      for (std::size_t j = col; j < cols; ++j) {
        const mpz_class x = rows[r][j];
        const mpz_class y = rows[i][j];
        rows[r][j] = s * x + t * y;
        rows[i][j] = ag * y - bg * x;
      }
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    const mpz_class& p = rows[r][col];
    for (std::size_t k = 0; k < r; ++k) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[k][col].get_mpz_t(), p.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = col; j < cols; ++j) rows[k][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

IntMatrix congruence_kernel(const IntMatrix& A, const std::vector<mpz_class>& moduli) {
  if (A.size() != moduli.size()) throw Error("congruence_kernel: one modulus per row required");
  const std::size_t k = A.size();
  const std::size_t n = k == 0 ? 0 : A.front().size();
  // Rows (A^T | I_n) for the unknowns and (diag(moduli) | 0) for the moduli.
  // After echelon reduction, the rows with zero in the first k columns span
  // the kernel, read off from their last n entries.
  IntMatrix m;
  m.reserve(n + k);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpz_class> row(k + n);
    for (std::size_t j = 0; j < k; ++j) row[j] = A[j][i];
    row[k + i] = 1;
    m.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<mpz_class> row(k + n);
    row[j] = moduli[j];
    m.push_back(std::move(row));
  }
  IntMatrix h = hermite_normal_form(std::move(m));
  IntMatrix kernel;
  for (auto& row : h) {
    if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k),
                    [](const mpz_class& x) { return x == 0; })) {
      kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(k), row.end());
    }
  }
  return hermite_normal_form(std::move(kernel));
}

}  // namespace modunits
