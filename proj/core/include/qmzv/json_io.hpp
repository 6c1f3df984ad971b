#pragma once

/// @file json_io.hpp
/// @brief JSON forms of polynomials, residues, relations and reports.
///
/// Rationals are always exact "num/den" strings.

#include <json.hpp>

#include <string>
#include <vector>

#include "qmzv/cycmod.hpp"
#include "qmzv/miner.hpp"
#include "qmzv/ratfun.hpp"
#include "qmzv/verify.hpp"

namespace qmzv {

using Json = nlohmann::ordered_json;

Json rationals_to_json(const std::vector<Rational>& xs);
std::vector<Rational> rationals_from_json(const Json& j);

/// {"coeffs": [...]}, lowest degree first.
Json to_json(const Poly& p);
/// {"p": .., "n": .., "coeffs": [...]}.
Json to_json(const CycModElement& x);
CycModElement cyc_from_json(const Json& j);
/// {"num": [...], "den": {"d": e, ...}} with den the product of Phi_d^e.
Json to_json(const RatFun& x);

/// {"basis": [descriptor...], "coeffs": ["num/den"...]}.
Json to_json(const Combination& c);
Combination combination_from_json(const Json& j);

Json to_json(const VerifyReport& r);
Json to_json(const DimReport& r);
Json to_json(const MembershipResult& r);

/// A span for membership: {"basis": [descriptor...]} or
/// {"v_generators": {"family": "Q", "k": 5}}, optionally with "primes" and "n".
struct SpanSpec {
  std::vector<GeneratorDescriptor> basis;
  std::vector<unsigned> primes;
  unsigned n = 1;
};

/// Missing primes default to default_primes(max weight); missing n to 1.
SpanSpec span_from_json(const Json& j);

}  // namespace qmzv
