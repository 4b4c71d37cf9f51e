// modunits: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "modunits/bivar_poly.hpp"
#include "modunits/curve_series.hpp"
#include "modunits/divpoly.hpp"
#include "modunits/errors.hpp"
#include "modunits/poly_cache.hpp"
#include "modunits/serialize.hpp"
#include "modunits/siegel.hpp"
#include "modunits/unit_lattice.hpp"
#include "modunits/verify.hpp"

namespace {

using namespace modunits;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string cache_dir;
};

std::unique_ptr<DivPolyCache> make_cache(const Globals& g) {
  std::shared_ptr<PolyStore> store;
  if (!g.cache_dir.empty()) store = std::make_shared<DiskPolyStore>(g.cache_dir);
  return std::make_unique<DivPolyCache>(DivPolyCache::kDefaultMaxN, std::move(store));
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::int64_t> parse_exponents(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("bad exponent \"" + item + "\"");
    }
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto to_int = [&](const std::string& x) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(x, &used);
      if (used != x.size()) throw std::invalid_argument(x);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("bad level range \"" + s + "\" (expected N or LO..HI)");
    }
  };
  if (const auto dots = s.find(".."); dots != std::string::npos) {
    return {to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
  }
  const int v = to_int(s);
  return {v, v};
}

QSeries read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  // A SiegelProduct JSON carries the reduced series under "fstar".
  if (j.contains("fstar")) return qseries_from_json(j.at("fstar"));
  return qseries_from_json(j);
}

int cmd_poly(const Globals& g, const std::string& kind, std::optional<long> n, const std::string& format) {
  auto cache = make_cache(g);
  const bool json = format == "json";
  auto emit = [&](const BivarPoly& f) {
    if (json) print(to_json(f));
    else std::cout << to_text(f) << '\n';
  };
  if (kind == "D") {
    emit(cache->discriminant());
    return kOk;
  }
  if (!n) throw ParseError("poly " + kind + " needs an index n");
  if (kind == "P") {
    emit(cache->P(*n));
    return kOk;
  }
  const auto f = cache->F(*n);
  if (const auto* p = std::get_if<BivarPoly>(&f)) {
    emit(*p);
  } else {
    const auto& r = std::get<RatPoly>(f);
    if (json) print(to_json(r));
    else std::cout << to_text(r) << '\n';
  }
  return kOk;
}

int cmd_series(int k, int N, std::optional<long> prec) {
  print(to_json(h_star(k, N, prec.value_or(default_prec(N)))));
  return kOk;
}

int cmd_basis(int N) {
  const LatticeBasis lb = basis_S(N);
  Json vecs = Json::array();
  for (const auto& v : lb.vectors) vecs.push_back(v.e);
  print(Json{{"N", N}, {"rank", lb.vectors.size()}, {"index", lb.index.get_str()}, {"basis", vecs}});
  return kOk;
}

int cmd_decompose(int N, const std::string& exponents, const std::string& series_file,
                  std::optional<long> prec) {
  if (exponents.empty() == series_file.empty()) {
    throw ParseError("decompose needs exactly one of --exponents or --series");
  }
  QSeries fstar;
  if (!exponents.empty()) {
    const ExpVector e(N, parse_exponents(exponents));
    fstar = product_series(e, prec.value_or(default_prec(N))).fstar;
  } else {
    fstar = read_series_file(series_file);
    if (fstar.denom() != N) fstar = fstar.rescale(N);
    if (fstar.ord() != 0 || fstar.lead() != 1) fstar = reduced_form(fstar).fstar;
  }
  const ExpVector e = decompose_series(fstar, N);
  const Ledger l = e.ledger();
  Json out{{"expvector", to_json(e)},
           {"ledger", Json::array({l.sum1, l.sum2})},
           {"leadExp", rational_string(leading_exponent_value(e))},
           {"inS", is_in_S(e)}};
  out["pexpression"] = is_in_S(e) ? to_json(to_p_expression(e)) : Json(nullptr);
  print(out);
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& range, VerifyOptions opts) {
  std::tie(opts.n_lo, opts.n_hi) = parse_range(range);
  auto cache = make_cache(g);
  const VerifyReport rep = run_verify(opts, *cache);
  Json results = Json::array();
  std::size_t failed = 0;
  for (const auto& r : rep.results) {
    results.push_back(to_json(r));
    if (!r.pass) ++failed;
  }
  print(Json{{"pass", rep.all_pass()},
             {"checks", rep.results.size()},
             {"failed", failed},
             {"seed", opts.seed},
             {"results", results}});
  return rep.all_pass() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modunits: division polynomials, Siegel functions and modular units of X1(N)"};
  app.set_version_flag("--version", std::string(MODUNITS_VERSION_STRING));
  app.require_subcommand(1);

  Globals g;
  app.add_option("--cache", g.cache_dir, "Directory for cached P_n / F_n polynomials");

  // poly
  auto* poly = app.add_subcommand("poly", "Print P_n, F_n or the discriminant D");
  std::string kind;
  std::optional<long> poly_n;
  std::string format = "text";
  poly->add_option("kind", kind, "P, F or D")->required()->check(CLI::IsMember({"P", "F", "D"}));
  auto* npos = poly->add_option("index", poly_n, "Index n");
  poly->add_option("--n", poly_n, "Index n")->excludes(npos);
  poly->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // series
  auto* series = app.add_subcommand("series", "Reduced q-expansion of h_(k/N,0)");
  int sk = 0, sN = 0;
  std::optional<long> sprec;
  series->add_option("--k", sk)->required();
  series->add_option("--N", sN)->required();
  series->add_option("--prec", sprec, "Coefficient count precN (default 15N)");

  // basis
  auto* basis = app.add_subcommand("basis", "HNF basis of the exponent lattice S");
  int bN = 0;
  basis->add_option("--N", bN)->required();

  // decompose
  auto* dec = app.add_subcommand("decompose", "Recover an exponent vector from a unit q-series");
  int dN = 0;
  std::string dexp, dfile;
  std::optional<long> dprec;
  dec->add_option("--N", dN)->required();
  dec->add_option("--exponents", dexp, "Comma-separated e(1..m)");
  dec->add_option("--series", dfile, "QSeries or SiegelProduct JSON file");
  dec->add_option("--prec", dprec, "Precision when built from --exponents (default 15N)");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the series and lattice identity checks");
  std::string vrange = "4..12";
  VerifyOptions vopts;
  std::optional<long> vprec, vnmax;
  ver->add_option("--N", vrange, "Level or range LO..HI");
  ver->add_option("--prec", vprec, "Coefficient count precN (default 15N)");
  ver->add_option("--nmax", vnmax, "Largest n for P_n checks (default m+2)");
  ver->add_option("--seed", vopts.seed, "Seed for randomized trials");
  ver->add_option("--jobs", vopts.jobs, "Parallel verification tasks")->check(CLI::PositiveNumber);
  ver->add_option("--trials", vopts.trials, "Random trials per level")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*poly) return cmd_poly(g, kind, poly_n, format);
    if (*series) return cmd_series(sk, sN, sprec);
    if (*basis) return cmd_basis(bN);
    if (*dec) return cmd_decompose(dN, dexp, dfile, dprec);
    if (*ver) {
      vopts.prec = vprec;
      vopts.nmax = vnmax;
      return cmd_verify(g, vrange, vopts);
    }
  } catch (const modunits::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
