#pragma once

/// @file hsum.hpp
/// @brief Multiple harmonic q-sums, exactly and in Z_(p)[q]/([p]^n).
///
/// All variants share one shape: a nested sum over m >= m_1 > ... > m_d > 0
/// (or >= for starred sums) of prod q^{s_a m_a} / [m_a]^{k_a}. Plain sums take
/// s_a = k_a - 1, bar sums take s_a = 1.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "qmzv/cycmod.hpp"
#include "qmzv/index.hpp"
#include "qmzv/ratfun.hpp"

namespace qmzv {

enum class Variant { plain, star, bar, bar_star, generalized };

std::string to_string(Variant v);
Variant parse_variant(std::string_view text);

/// Normalized summand description: numerator exponents and strictness.
struct SumSpec {
  Index k;
  ExpVector s;
  bool star = false;
  auto operator<=>(const SumSpec&) const = default;
};

SumSpec make_spec(Variant v, const Index& k, const std::optional<ExpVector>& s = std::nullopt);

/// Partial sums H_m for m = 0..p-1 of every requested sum, memoized by suffix.
///
/// A sum with index (k_1, rest) is the running total of
/// q^{s_1 m} [m]^{-k_1} H_{m-1}(rest) (or H_m(rest) when starred), so each
/// suffix is swept once and shared by every index that ends with it.
template <class C>
class HarmonicTable {
 public:
  using P = DensePoly<C>;

  explicit HarmonicTable(const CycContext<C>& ctx) : ctx_(ctx) {}

  const CycContext<C>& context() const { return ctx_; }

  /// H_{p-1} reduced mod [p]^n.
  P value(const SumSpec& spec) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return sequence_locked(spec).back();
  }

  const std::vector<P>& sequence(const SumSpec& spec) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return sequence_locked(spec);
  }

  /// q^{s m} [m]^{-k} mod [p]^n.
  const P& term(unsigned k, unsigned s, unsigned m) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return term_locked(k, s, m);
  }

  std::size_t cached_sums() const { return seq_.size(); }

 private:
  const std::vector<P>& sequence_locked(const SumSpec& spec) {
    auto it = seq_.find(spec);
    if (it != seq_.end()) return it->second;
    const unsigned p = ctx_.p();
    std::vector<P> out(p);
    if (spec.k.empty()) {
      for (auto& x : out) x = P::one();
    } else {
      SumSpec rest{spec.k.suffix(1), ExpVector(std::vector<unsigned>(spec.s.entries().begin() + 1, spec.s.entries().end())),
                   spec.star};
      const std::vector<P>& inner = sequence_locked(rest);
      for (unsigned m = 1; m < p; ++m) {
        const P& t = term_locked(spec.k[0], spec.s[0], m);
        const P& h = spec.star ? inner[m] : inner[m - 1];
        out[m] = out[m - 1];
        if (!h.is_zero()) out[m] += ctx_.mul(t, h);
      }
    }
    return seq_.emplace(spec, std::move(out)).first->second;
  }

  const P& term_locked(unsigned k, unsigned s, unsigned m) {
    auto key = std::make_tuple(k, s, m);
    auto it = terms_.find(key);
    if (it != terms_.end()) return it->second;
    P t = ctx_.q_pow(static_cast<unsigned long>(s) * m);
    if (k > 0) t = ctx_.mul(t, inverse_power(m, k));
    return terms_.emplace(key, std::move(t)).first->second;
  }

  const P& inverse_power(unsigned m, unsigned k) {
    auto key = std::make_pair(m, k);
    auto it = inv_pow_.find(key);
    if (it != inv_pow_.end()) return it->second;
    P r = k == 1 ? closed_form_qint_inverse(ctx_, m) : ctx_.mul(inverse_power(m, k - 1), inverse_power(m, 1));
    return inv_pow_.emplace(key, std::move(r)).first->second;
  }

  const CycContext<C>& ctx_;
  std::recursive_mutex mu_;
  std::map<SumSpec, std::vector<P>> seq_;
  std::map<std::tuple<unsigned, unsigned, unsigned>, P> terms_;
  std::map<std::pair<unsigned, unsigned>, P> inv_pow_;
};

/// Process-wide exact (integer-coefficient) table for one (p, n).
HarmonicTable<Integer>& exact_table(unsigned p, unsigned n);

/// H_{p-1}^{variant}(k; s; q) in Z_{p,n}.
CycModElement hsum_mod(Variant v, unsigned p, unsigned n, const Index& k,
                       const std::optional<ExpVector>& s = std::nullopt);
CycModElement hsum_mod(const SumSpec& spec, unsigned p, unsigned n);

inline constexpr unsigned kDefaultExactBound = 60;

/// The exact rational function H_m^{variant}(k; s; q).
RatFun hsum_exact(Variant v, unsigned m, const Index& k, const std::optional<ExpVector>& s = std::nullopt,
                  unsigned bound = kDefaultExactBound);
RatFun hsum_exact(const SumSpec& spec, unsigned m, unsigned bound = kDefaultExactBound);

/// q^{s m}/[m]^k as a rational function.
RatFun harmonic_term(unsigned k, unsigned s, unsigned m);

/// The classical rational sum H_m(k) (or its star version).
Rational harmonic_sum(unsigned m, const Index& k, bool star = false);

}  // namespace qmzv
