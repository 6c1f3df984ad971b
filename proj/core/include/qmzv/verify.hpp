#pragma once

/// @file verify.hpp
/// @brief Mechanical checkers for the identity families of multiple harmonic q-sums.
///
/// Every identity is assembled as a list of terms c_i * v_i whose sum must
/// vanish. Infinite sums over l >= 0 are truncated at l < n since [p]^n = 0 in
/// Z_{p,n}. Checkers return the full residual as a witness.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qmzv/cycmod.hpp"
#include "qmzv/errors.hpp"
#include "qmzv/hsum.hpp"
#include "qmzv/index.hpp"
#include "qmzv/ratfun.hpp"

namespace qmzv {

using Params = std::vector<std::pair<std::string, std::string>>;

template <class V>
struct Term {
  Rational coeff;
  V value;
  std::string label;
};

/// A claimed vanishing sum.
template <class V>
struct Identity {
  std::string name;
  Params params;
  std::vector<Term<V>> terms;
};

using ModIdentity = Identity<CycModElement>;
using ExactIdentity = Identity<RatFun>;

/// Replace the coefficient of one term.
struct Mutation {
  std::size_t term;
  Rational coeff;
};

struct VerifyReport {
  std::string name;
  Params params;
  bool pass = false;
  std::variant<RatFun, CycModElement> residual;
  std::vector<VerifyReport> parts;

  bool residual_is_zero() const;
  std::string residual_string() const;
};

/// Copy of id without the terms whose label contains fragment.
template <class V>
Identity<V> without_terms(Identity<V> id, std::string_view fragment) {
  std::erase_if(id.terms, [&](const Term<V>& t) { return t.label.find(fragment) != std::string::npos; });
  return id;
}

VerifyReport evaluate(const ModIdentity& id, const std::optional<Mutation>& mutation = std::nullopt);
VerifyReport evaluate(const ExactIdentity& id, const std::optional<Mutation>& mutation = std::nullopt);
/// Several identities reported together; the mutation indexes the concatenated term list.
VerifyReport evaluate_suite(const std::string& name, const Params& params, const std::vector<ModIdentity>& ids,
                            const std::optional<Mutation>& mutation = std::nullopt);

enum class StarCorrection {
  /// |alpha| (k/j - 1) C(d, j)
  displayed,
  /// |alpha| (k - j)/d C(d, j)
  rederived,
};

/// Which form of the mod-[p]^2 reversal and duality examples to check.
enum class Q2Form {
  /// As displayed among the mod-[p]^2 examples.
  displayed,
  /// The n = 2 truncations of the general reversal and duality identities.
  truncated,
};

ModIdentity reversal_identity(unsigned p, unsigned n, const Index& k, Variant v);
/// Requires odd p. With swap_dual the dual index is replaced by k itself.
ModIdentity hat_duality_identity(unsigned p, unsigned n, const Index& k, bool swap_dual = false);
/// orbit: the distinct rotations of one index.
ModIdentity cyclic_identity(unsigned p, unsigned n, const std::vector<Index>& orbit, bool starred,
                            StarCorrection correction = StarCorrection::rederived);
ModIdentity weight_one_identity(unsigned p, unsigned n);
std::vector<ModIdentity> q2_suite_identities(unsigned p, const Index& k, Q2Form form = Q2Form::truncated);
ExactIdentity bradley_identity(unsigned n_upper, const Index& k, bool swap_dual = false);
ExactIdentity theta_lemma_identity(unsigned l, unsigned k, unsigned m);

VerifyReport verify_reversal(unsigned p, unsigned n, const Index& k, Variant v);
VerifyReport verify_hat_duality(unsigned p, unsigned n, const Index& k);
VerifyReport verify_cyclic(unsigned p, unsigned n, const std::vector<Index>& orbit, bool starred);
VerifyReport verify_weight_one(unsigned p, unsigned n);
VerifyReport verify_q2_suite(unsigned p, const Index& k);
VerifyReport verify_bradley(unsigned n_upper, const Index& k);
VerifyReport verify_theta_lemma(unsigned l, unsigned k, unsigned m);

/// T_{s,l}(k) = (s!/l!) sum_{a=s}^{l} C(l,a) S(a,s) (k-1)^{l-a}.
Rational theta_coefficient(unsigned s, unsigned l, unsigned k);

/// Outcome of one case in a grid sweep; excluded primes are skipped, not failed.
struct GridCase {
  Params params;
  bool skipped = false;
  std::string skip_reason;
  std::optional<VerifyReport> report;
};

struct GridSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<GridCase> cases;
  bool ok() const { return failed == 0; }
};

/// Runs fn over every case, catching excluded-prime and domain errors as skips.
template <class Fn>
void run_case(GridSummary& summary, Params params, Fn&& fn) {
  GridCase c;
  c.params = std::move(params);
  try {
    c.report = fn();
    (c.report->pass ? summary.passed : summary.failed) += 1;
  } catch (const IntegralityError& e) {
    c.skipped = true;
    c.skip_reason = e.what();
    ++summary.skipped;
  } catch (const DomainError& e) {
    c.skipped = true;
    c.skip_reason = e.what();
    ++summary.skipped;
  }
  summary.cases.push_back(std::move(c));
}

}  // namespace qmzv
