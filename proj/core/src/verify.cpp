#include "modunits/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

#include "modunits/errors.hpp"
#include "modunits/siegel.hpp"
#include "modunits/unit_lattice.hpp"

namespace modunits {

bool VerifyReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

ExpVector random_element_of_S(int N, int bound, std::mt19937_64& rng) {
  if (bound < 0) throw RangeError("bound must be nonnegative");
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  ExpVector e = ExpVector::zero(N);
  for (;;) {
    for (auto& x : e.e) x = dist(rng);
    if (is_in_S(e)) return e;
  }
}

std::vector<ExpVector> random_sample_of_S(int N, int count, int bound, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(N)};
  std::mt19937_64 rng(seq);
  std::vector<ExpVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_element_of_S(N, bound, rng));
  return out;
}

namespace {

std::string show(const ExpVector& e) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < e.e.size(); ++i) s << (i ? "," : "") << e.e[i];
  s << ')';
  return s.str();
}

CheckResult plain(std::string name, int N, std::optional<long> n = std::nullopt) {
  CheckResult r;
  r.check = std::move(name);
  r.N = N;
  r.n = n;
  return r;
}

bool ledger_matches(const Ledger& got, const Ledger& want, int N) {
  if (N >= 7) return got == want;
  const std::int64_t m2 = second_modulus(N);
  auto mod = [](std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; };
  return mod(got.sum1 - want.sum1, 12) == 0 && mod(got.sum2 - want.sum2, m2) == 0;
}

CheckResult ledger_check(const std::string& what, int N, std::optional<long> n, const ExpVector& e,
                         const Ledger& want) {
  CheckResult r = plain("ledger_" + what, N, n);
  const Ledger got = e.ledger();
  r.pass = ledger_matches(got, want, N);
  r.detail = "(" + std::to_string(got.sum1) + "," + std::to_string(got.sum2) + ")";
  return r;
}

}  // namespace

std::vector<CheckResult> check_ledgers(int N) {
  std::vector<CheckResult> out;
  out.push_back(ledger_check("t", N, std::nullopt, t_to_h(N), {0, -1}));
  out.push_back(ledger_check("d", N, std::nullopt, d_to_h(N), {12, 0}));
  out.push_back(ledger_check("v", N, std::nullopt, v_to_h(N), {0, -second_modulus(N)}));
  for (long n = 1; n <= N / 2; ++n) {
    const auto pn = p_to_h(n, N);
    if (!pn) {
      CheckResult r = plain("ledger_p", N, n);
      r.detail = "p_n vanishes";
      out.push_back(r);
      continue;
    }
    out.push_back(ledger_check("p", N, n, pn->e, {0, 0}));
  }
  return out;
}

CheckResult check_decompose_roundtrip(int N, const std::vector<ExpVector>& sample) {
  CheckResult r = plain("decompose_roundtrip", N);
  const long prec = N / 2 + 1 + 2L * N;
  r.prec = prec;
  r.pass = true;
  for (const auto& e : sample) {
    try {
      const ExpVector got = decompose_series(product_series(e, prec).fstar, N);
      if (got != e) {
        r.pass = false;
        r.detail = "e=" + show(e) + " recovered as " + show(got);
        return r;
      }
    } catch (const Error& ex) {
      r.pass = false;
      r.detail = "e=" + show(e) + ": " + ex.what();
      return r;
    }
  }
  r.detail = std::to_string(sample.size()) + " trials";
  return r;
}

CheckResult check_dictionary_roundtrip(int N, const std::vector<ExpVector>& sample) {
  CheckResult r = plain("dictionary_roundtrip", N);
  r.pass = true;
  for (const auto& e : sample) {
    const SignedExpVector back = expand_p_expression(to_p_expression(e));
    if (back.e != e) {
      r.pass = false;
      r.detail = "e=" + show(e) + " came back as " + show(back.e);
      return r;
    }
  }
  r.detail = std::to_string(sample.size()) + " trials";
  return r;
}

CheckResult check_basis(int N) {
  CheckResult r = plain("basis_S", N);
  const LatticeBasis lb = basis_S(N);
  const bool in_s = std::all_of(lb.vectors.begin(), lb.vectors.end(), [](const ExpVector& v) { return is_in_S(v); });
  r.pass = lb.vectors.size() == static_cast<std::size_t>(N / 2) && in_s;
  r.detail = "rank " + std::to_string(lb.vectors.size()) + ", index " + lb.index.get_str();
  return r;
}

VerifyReport run_verify(const VerifyOptions& opts, DivPolyCache& cache) {
  if (opts.n_lo < 4 || opts.n_hi < opts.n_lo) throw RangeError("verify needs 4 <= N range, lo <= hi");
  if (opts.trials < 0) throw RangeError("trials must be nonnegative");

  // Each task fills its own slot; slots are concatenated in order.
  std::vector<std::function<std::vector<CheckResult>()>> tasks;
  for (int N = opts.n_lo; N <= opts.n_hi; ++N) {
    const long prec = opts.prec.value_or(default_prec(N));
    const long nmax = opts.nmax.value_or(N / 2 + 2);
    tasks.emplace_back([N, prec, nmax, &cache] {
      std::vector<CheckResult> out;
      const CurveExpansion ex(N, prec);
      if (N <= cache.max_n()) out.push_back(check_defining_equation(ex, cache));
      for (long n = 1; n <= nmax && n <= cache.max_n(); ++n) out.push_back(check_p_consistency(ex, n, cache));
      out.push_back(check_d_consistency(ex, cache));
      out.push_back(check_express2(ex));
      return out;
    });
    tasks.emplace_back([N, &opts] {
      const auto sample = random_sample_of_S(N, opts.trials, opts.bound, opts.seed);
      std::vector<CheckResult> out;
      out.push_back(check_decompose_roundtrip(N, sample));
      out.push_back(check_dictionary_roundtrip(N, sample));
      out.push_back(check_basis(N));
      auto ledgers = check_ledgers(N);
      out.insert(out.end(), ledgers.begin(), ledgers.end());
      return out;
    });
  }

  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  VerifyReport rep;
  for (auto& s : slots) rep.results.insert(rep.results.end(), s.begin(), s.end());
  return rep;
}

}  // namespace modunits
