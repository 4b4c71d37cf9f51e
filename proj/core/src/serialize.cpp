#include "modunits/serialize.hpp"

#include <string>
#include <vector>

#include "modunits/errors.hpp"

namespace modunits {

std::string rational_string(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: \"" + s + "\"");
  }
}

Json to_json(const BivarPoly& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    terms.push_back(Json::array({t.mono.degB, t.mono.degC, t.coeff.get_str()}));
  }
  return Json{{"terms", std::move(terms)}};
}

BivarPoly bivar_from_json(const Json& j) {
  try {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw ParseError("term must be [degB, degC, coeff]");
      const auto b = t.at(0).get<long>();
      const auto c = t.at(1).get<long>();
      if (b < 0 || c < 0) throw ParseError("negative exponent in polynomial JSON");
      mpz_class coeff;
      if (coeff.set_str(t.at(2).get<std::string>(), 10) != 0) {
        throw ParseError("bad coefficient \"" + t.at(2).get<std::string>() + "\"");
      }
      terms.push_back({{static_cast<unsigned>(b), static_cast<unsigned>(c)}, coeff});
    }
    return BivarPoly(std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

Json to_json(const RatPoly& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const QSeries& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(rational_string(c));
  return Json{{"denomN", f.denom()}, {"ord", f.ord()}, {"precN", f.prec()}, {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const Json& j) {
  try {
    std::vector<mpq_class> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    const int denom = j.at("denomN").get<int>();
    const long ord = j.at("ord").get<long>();
    const long prec = j.at("precN").get<long>();
    if (denom <= 0) throw ParseError("denomN must be positive");
    if (ord + static_cast<long>(coeffs.size()) != prec) {
      throw ParseError("series JSON must satisfy ord + len(coeffs) = precN");
    }
    return QSeries(denom, ord, std::move(coeffs), prec);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("series JSON: ") + e.what());
  }
}

Json to_json(const SiegelProduct& p) {
  return Json{{"ipow", p.ipow},
              {"scalar", rational_string(p.scalar)},
              {"leadExp", rational_string(p.lead_exp)},
              {"fstar", to_json(p.fstar)}};
}

Json to_json(const ExpVector& e) { return Json{{"N", e.N}, {"e", e.e}}; }

ExpVector expvector_from_json(const Json& j) {
  try {
    return ExpVector(j.at("N").get<int>(), j.at("e").get<std::vector<std::int64_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("exponent vector JSON: ") + e.what());
  }
}

Json to_json(const PExpression& p) {
  return Json{{"N", p.N}, {"alpha", p.alpha}, {"beta", p.beta}, {"pexp", p.pexp}};
}

Json to_json(const CheckResult& r) {
  Json j{{"check", r.check}, {"N", r.N}};
  if (r.n) j["n"] = *r.n;
  j["precN"] = r.prec;
  j["pass"] = r.pass;
  if (r.first_failing_exponent) {
    j["firstFailingExponent"] = rational_string(mpq_class(*r.first_failing_exponent, r.N == 0 ? 1 : r.N));
  }
  if (r.window > 0) {
    mpq_class w(r.window, r.N);
    w.canonicalize();
    j["verifiedTo"] = rational_string(w);
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace modunits
