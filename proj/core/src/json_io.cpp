#include "qmzv/json_io.hpp"

#include <algorithm>

#include "qmzv/errors.hpp"

namespace qmzv {

Json rationals_to_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_fraction_string(x));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of fractions");
  std::vector<Rational> out;
  for (const auto& x : j) {
    if (x.is_string()) {
      out.push_back(parse_rational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      out.push_back(make_rational(x.get<long>()));
    } else {
      throw DomainError("expected a fraction string");
    }
  }
  return out;
}

Json to_json(const Poly& p) { return Json{{"coeffs", rationals_to_json(p.coeffs())}}; }

Json to_json(const CycModElement& x) {
  return Json{{"p", x.p()}, {"n", x.n()}, {"coeffs", rationals_to_json(x.residue().coeffs())}};
}

CycModElement cyc_from_json(const Json& j) {
  if (!j.contains("p") || !j.contains("n") || !j.contains("coeffs")) throw DomainError("expected p, n and coeffs");
  return {j.at("p").get<unsigned>(), j.at("n").get<unsigned>(), Poly(rationals_from_json(j.at("coeffs")))};
}

Json to_json(const RatFun& x) {
  Json den = Json::object();
  for (const auto& [d, e] : x.den_factors()) den[std::to_string(d)] = e;
  return Json{{"num", rationals_to_json(x.num().coeffs())}, {"den", den}};
}

Json to_json(const Combination& c) {
  Json basis = Json::array(), coeffs = Json::array();
  for (const auto& [g, x] : c) {
    basis.push_back(g.to_string());
    coeffs.push_back(to_fraction_string(x));
  }
  return Json{{"basis", basis}, {"coeffs", coeffs}};
}

Combination combination_from_json(const Json& j) {
  if (!j.contains("basis") || !j.contains("coeffs")) throw DomainError("expected basis and coeffs");
  const auto& basis = j.at("basis");
  const auto coeffs = rationals_from_json(j.at("coeffs"));
  if (!basis.is_array() || basis.size() != coeffs.size()) throw DomainError("basis and coeffs differ in length");
  Combination out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out.emplace_back(parse_descriptor(basis[i].get<std::string>()), coeffs[i]);
  return out;
}

Json to_json(const VerifyReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json out{{"name", r.name}, {"params", params}, {"pass", r.pass}};
  out["residual"] = std::visit([](const auto& v) { return to_json(v); }, r.residual);
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto& part : r.parts) parts.push_back(to_json(part));
    out["parts"] = parts;
  }
  return out;
}

Json to_json(const DimReport& r) {
  return Json{{"family", to_string(r.family)},
              {"k", r.k},
              {"primes", r.primes},
              {"extension_primes", r.extension_primes},
              {"generators", r.generators},
              {"rank_full", r.rank_full},
              {"rank_v", r.rank_v},
              {"dim_tilde", r.dim_tilde},
              {"stabilized", r.stabilized},
              {"certified", r.certified},
              {"scope", "over S"}};
}

Json to_json(const MembershipResult& r) {
  Json out{{"member", r.member}, {"scope", r.scope()}, {"certified", r.certified}, {"primes", r.primes}, {"n", r.n}};
  if (r.member) {
    out["coefficients"] = to_json(r.coefficients);
  } else {
    out["functional"] = rationals_to_json(r.functional);
  }
  return out;
}

SpanSpec span_from_json(const Json& j) {
  SpanSpec out;
  if (j.contains("basis")) {
    for (const auto& d : j.at("basis")) out.basis.push_back(parse_descriptor(d.get<std::string>()));
  } else if (j.contains("v_generators")) {
    const auto& v = j.at("v_generators");
    const Family f = parse_family(v.at("family").get<std::string>());
    out.basis = v_generators(f, v.at("k").get<unsigned>());
    out.n = family_n(f);
  } else {
    throw DomainError("span needs basis or v_generators");
  }
  if (out.basis.empty()) throw DomainError("empty span");
  if (j.contains("n")) out.n = j.at("n").get<unsigned>();
  if (j.contains("primes")) {
    out.primes = j.at("primes").get<std::vector<unsigned>>();
  } else {
    unsigned w = 0;
    for (const auto& g : out.basis) w = std::max(w, g.weight());
    out.primes = default_primes(w);
  }
  return out;
}

}  // namespace qmzv
