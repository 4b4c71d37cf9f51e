#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "modunits/curve_series.hpp"
#include "modunits/divpoly.hpp"
#include "modunits/exp_vector.hpp"

namespace modunits {

struct VerifyOptions {
  int n_lo = 4;
  int n_hi = 12;
  std::optional<long> prec;  // default 15 N
  std::optional<long> nmax;  // default m + 2
  int trials = 100;
  int bound = 5;             // |e(k)| <= bound for random trials
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct VerifyReport {
  std::vector<CheckResult> results;
  [[nodiscard]] bool all_pass() const;
};

// Runs every check for each level in [n_lo, n_hi]. Results are ordered by
// level, then by check, independently of `jobs`.
VerifyReport run_verify(const VerifyOptions& opts, DivPolyCache& cache);

// Uniform element of S among vectors with |e(k)| <= bound, by rejection.
ExpVector random_element_of_S(int N, int bound, std::mt19937_64& rng);

// count such elements from a generator seeded by (seed, N).
std::vector<ExpVector> random_sample_of_S(int N, int count, int bound, std::uint64_t seed);

// Ledger checks: t, d, v and p_1..p_m against their expected (sum1, sum2),
// exactly for N >= 7 and modulo (12, N gcd(N,2)) below.
std::vector<CheckResult> check_ledgers(int N);

// decompose_series(product_series(e).fstar) == e on the sample.
CheckResult check_decompose_roundtrip(int N, const std::vector<ExpVector>& sample);
// to_p_expression then expand_p_expression is the identity on the sample.
CheckResult check_dictionary_roundtrip(int N, const std::vector<ExpVector>& sample);
// basis_S(N) has m vectors, all in S.
CheckResult check_basis(int N);

}  // namespace modunits
