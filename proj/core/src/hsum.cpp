#include "qmzv/hsum.hpp"

#include <memory>

#include "qmzv/errors.hpp"

namespace qmzv {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::star: return "star";
    case Variant::bar: return "bar";
    case Variant::bar_star: return "bar-star";
    case Variant::generalized: return "generalized";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  if (text == "plain") return Variant::plain;
  if (text == "star") return Variant::star;
  if (text == "bar") return Variant::bar;
  if (text == "bar-star" || text == "bar_star") return Variant::bar_star;
  if (text == "generalized") return Variant::generalized;
  throw DomainError("unknown variant: " + std::string(text));
}

SumSpec make_spec(Variant v, const Index& k, const std::optional<ExpVector>& s) {
  SumSpec spec;
  spec.k = k;
  std::vector<unsigned> e(k.depth());
  switch (v) {
    case Variant::plain:
    case Variant::star:
      for (std::size_t i = 0; i < k.depth(); ++i) e[i] = k[i] - 1;
      break;
    case Variant::bar:
    case Variant::bar_star:
      for (auto& x : e) x = 1;
      break;
    case Variant::generalized:
      if (!s) throw DomainError("generalized variant requires an exponent vector");
      if (s->size() != k.depth()) throw DomainError("exponent vector length must equal the depth");
      e = s->entries();
      break;
  }
  spec.s = ExpVector(std::move(e));
  spec.star = (v == Variant::star || v == Variant::bar_star);
  return spec;
}

HarmonicTable<Integer>& exact_table(unsigned p, unsigned n) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<HarmonicTable<Integer>>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[{p, n}];
  if (!slot) slot = std::make_unique<HarmonicTable<Integer>>(cyc_context<Integer>(p, n));
  return *slot;
}

CycModElement hsum_mod(const SumSpec& spec, unsigned p, unsigned n) {
  if (p < 2 || n < 1) throw DomainError("hsum_mod requires p >= 2 and n >= 1");
  return CycModElement(p, n, to_rational_poly(exact_table(p, n).value(spec)));
}

CycModElement hsum_mod(Variant v, unsigned p, unsigned n, const Index& k, const std::optional<ExpVector>& s) {
  return hsum_mod(make_spec(v, k, s), p, n);
}

RatFun harmonic_term(unsigned k, unsigned s, unsigned m) {
  return RatFun(Poly::monomial(Rational(1), static_cast<std::size_t>(s) * m)) * RatFun::qint_inverse_power(m, k);
}

namespace {

std::vector<RatFun> exact_sequence(const SumSpec& spec, unsigned m) {
  std::vector<RatFun> out(m + 1, RatFun(0L));
  if (spec.k.empty()) {
    for (auto& x : out) x = RatFun(1L);
    return out;
  }
  SumSpec rest{spec.k.suffix(1), ExpVector(std::vector<unsigned>(spec.s.entries().begin() + 1, spec.s.entries().end())),
               spec.star};
  std::vector<RatFun> inner = exact_sequence(rest, m);
  for (unsigned j = 1; j <= m; ++j) {
    out[j] = out[j - 1];
    const RatFun& h = spec.star ? inner[j] : inner[j - 1];
    if (!h.is_zero()) out[j] += harmonic_term(spec.k[0], spec.s[0], j) * h;
  }
  return out;
}

}  // namespace

RatFun hsum_exact(const SumSpec& spec, unsigned m, unsigned bound) {
  if (m > bound) throw DomainError("hsum_exact: m exceeds the configured bound");
  return exact_sequence(spec, m).back();
}

RatFun hsum_exact(Variant v, unsigned m, const Index& k, const std::optional<ExpVector>& s, unsigned bound) {
  return hsum_exact(make_spec(v, k, s), m, bound);
}

Rational harmonic_sum(unsigned m, const Index& k, bool star) {
  if (k.empty()) return 1;
  std::vector<Rational> inner(m + 1, Rational(1));
  for (std::size_t a = k.depth(); a-- > 0;) {
    std::vector<Rational> out(m + 1, Rational(0));
    for (unsigned j = 1; j <= m; ++j) {
      Integer pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), j, k[a]);
      out[j] = out[j - 1] + (star ? inner[j] : inner[j - 1]) / Rational(pw);
    }
    inner = std::move(out);
  }
  return inner[m];
}

}  // namespace qmzv
