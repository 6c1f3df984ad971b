#include "qmzv/verify.hpp"

#include "qmzv/errors.hpp"

namespace qmzv {

namespace {

struct RingConstants {
  CycModElement one, q_p, q_minus_p, qint, one_minus_q;
};

RingConstants constants(unsigned p, unsigned n) {
  return {CycModElement::one(p, n), q_pow_p(p, n), q_pow_minus_p(p, n), qint_p(p, n), one_minus_q(p, n)};
}

std::string sum_label(const std::string& prefix, const Index& k) { return prefix + "(" + k.to_string() + ")"; }

std::string variant_prefix(Variant v) {
  switch (v) {
    case Variant::plain: return "H";
    case Variant::star: return "H*";
    case Variant::bar: return "Hbar";
    case Variant::bar_star: return "Hbar*";
    case Variant::generalized: return "Hgen";
  }
  return "H";
}

Variant bar_of(Variant v) { return v == Variant::star ? Variant::bar_star : Variant::bar; }

CycModElement sum_value(Variant v, unsigned p, unsigned n, const Index& k) { return hsum_mod(v, p, n, k); }

void require_odd(unsigned p, const char* what) {
  if (p % 2 == 0) throw DomainError(std::string(what) + " requires an odd prime");
}

template <class V>
VerifyReport evaluate_impl(const Identity<V>& id, const std::optional<Mutation>& mutation, V zero) {
  if (mutation && mutation->term >= id.terms.size()) throw DomainError("mutation term out of range");
  V acc = std::move(zero);
  for (std::size_t i = 0; i < id.terms.size(); ++i) {
    const Rational& c = (mutation && mutation->term == i) ? mutation->coeff : id.terms[i].coeff;
    if (sgn(c) != 0) acc += id.terms[i].value * c;
  }
  VerifyReport r;
  r.name = id.name;
  r.params = id.params;
  r.pass = acc.is_zero();
  r.residual = std::move(acc);
  return r;
}

Params mod_params(unsigned p, unsigned n) { return {{"p", std::to_string(p)}, {"n", std::to_string(n)}}; }

}  // namespace

bool VerifyReport::residual_is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, residual);
}

std::string VerifyReport::residual_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, residual);
}

VerifyReport evaluate(const ModIdentity& id, const std::optional<Mutation>& mutation) {
  if (id.terms.empty()) throw DomainError("identity has no terms");
  return evaluate_impl(id, mutation, CycModElement::zero(id.terms.front().value.p(), id.terms.front().value.n()));
}

VerifyReport evaluate(const ExactIdentity& id, const std::optional<Mutation>& mutation) {
  return evaluate_impl(id, mutation, RatFun(0L));
}

VerifyReport evaluate_suite(const std::string& name, const Params& params, const std::vector<ModIdentity>& ids,
                            const std::optional<Mutation>& mutation) {
  VerifyReport r;
  r.name = name;
  r.params = params;
  r.pass = true;
  std::size_t offset = 0;
  std::optional<CycModElement> total;
  for (const auto& id : ids) {
    std::optional<Mutation> local;
    if (mutation && mutation->term >= offset && mutation->term < offset + id.terms.size())
      local = Mutation{mutation->term - offset, mutation->coeff};
    VerifyReport part = evaluate(id, local);
    offset += id.terms.size();
    r.pass = r.pass && part.pass;
    // The suite witness is the first nonzero part residual.
    const auto& res = std::get<CycModElement>(part.residual);
    if (!total || (total->is_zero() && !res.is_zero())) total = res;
    r.parts.push_back(std::move(part));
  }
  if (mutation && mutation->term >= offset) throw DomainError("mutation term out of range");
  if (total) r.residual = *total;
  return r;
}

ModIdentity reversal_identity(unsigned p, unsigned n, const Index& k, Variant v) {
  if (v != Variant::plain && v != Variant::star) throw DomainError("reversal is stated for plain and star sums");
  if (k.empty()) throw DomainError("reversal needs a nonempty index");
  const RingConstants c = constants(p, n);
  ModIdentity id;
  id.name = "reversal";
  id.params = mod_params(p, n);
  id.params.emplace_back("index", k.to_string());
  id.params.emplace_back("variant", to_string(v));
  id.terms.push_back({Rational(-1), sum_value(bar_of(v), p, n, k), sum_label(variant_prefix(bar_of(v)), k)});
  const CycModElement prefactor = (-c.q_minus_p).pow(k.weight()) * c.q_p.pow(static_cast<unsigned>(k.depth()));
  const CycModElement step = c.q_minus_p * c.qint;
  CycModElement layer = prefactor;
  for (unsigned w = 0; w < n; ++w) {
    for (const ExpVector& l : exp_vectors(static_cast<unsigned>(k.depth()), w)) {
      const Index target = (k + l).reversed();
      id.terms.push_back({Rational(b_binom(k, l)), layer * sum_value(v, p, n, target),
                          "b(" + l.to_string() + ")*" + sum_label(variant_prefix(v), target)});
    }
    layer *= step;
  }
  return id;
}

ModIdentity hat_duality_identity(unsigned p, unsigned n, const Index& k, bool swap_dual) {
  require_odd(p, "duality");
  if (k.empty()) throw DomainError("duality needs a nonempty index");
  const RingConstants c = constants(p, n);
  const Index dual = swap_dual ? k : hoffman_dual(k);
  ModIdentity id;
  id.name = "duality";
  id.params = mod_params(p, n);
  id.params.emplace_back("index", k.to_string());
  // q^{p(p+1)/2} = sum_j C((p+1)/2, j) (-(1-q)[p])^j, times [p]^l H*({1}^l, k).
  const CycModElement x = -(c.one_minus_q * c.qint);
  for (unsigned l = 0; l < n; ++l) {
    const Index front = ones(l).concat(k);
    const CycModElement base = c.qint.pow(l) * sum_value(Variant::star, p, n, front);
    for (unsigned j = 0; j + l < n; ++j) {
      id.terms.push_back({Rational(binomial((p + 1) / 2, j)), x.pow(j) * base,
                          "C((p+1)/2," + std::to_string(j) + ")*" + sum_label("H*", front)});
    }
  }
  const CycModElement step = c.q_minus_p * c.qint;
  for (unsigned l = 0; l < n; ++l) {
    const Index front = ones(l).concat(dual);
    id.terms.push_back({Rational(1), step.pow(l) * sum_value(Variant::bar_star, p, n, front), sum_label("Hbar*", front)});
  }
  return id;
}

ModIdentity cyclic_identity(unsigned p, unsigned n, const std::vector<Index>& orbit, bool starred,
                            StarCorrection correction) {
  if (orbit.empty()) throw DomainError("empty orbit");
  const RingConstants c = constants(p, n);
  const Variant v = starred ? Variant::star : Variant::plain;
  const std::string pre = variant_prefix(v);
  const unsigned k = orbit.front().weight();
  const unsigned d = static_cast<unsigned>(orbit.front().depth());
  const unsigned size = static_cast<unsigned>(orbit.size());
  ModIdentity id;
  id.name = starred ? "cyclic-star" : "cyclic";
  id.params = mod_params(p, n);
  id.params.emplace_back("orbit", orbit.front().to_string());
  auto add = [&](Rational coeff, const CycModElement& factor, const Index& idx, const std::string& tag) {
    id.terms.push_back({std::move(coeff), factor * sum_value(v, p, n, idx), tag + sum_label(pre, idx)});
  };
  const CycModElement step = c.q_minus_p * c.qint;
  for (const Index& kk : orbit) {
    const unsigned k1 = kk[0];
    const Index rest = kk.suffix(1);
    for (unsigned s = 0; s + 2 <= k1; ++s) add(Rational(1), c.one, Index{k1 - s}.concat(rest).concat(Index{s + 1}), "");
  }
  if (!starred) {
    for (const Index& kk : orbit) {
      const unsigned k1 = kk[0];
      const Index rest = kk.suffix(1);
      add(Rational(-1), c.one, rest.with_front(k1 + 1), "");
      CycModElement layer = c.one;
      for (unsigned l = 0; l < n; ++l) {
        add(Rational(-1), layer, rest.concat(Index{k1, l + 1}), "layer" + std::to_string(l) + "*");
        add(Rational(-1), layer, rest.concat(Index{k1 + l + 1}), "layer" + std::to_string(l) + "*");
        add(Rational(-1), layer * c.one_minus_q, rest.concat(Index{k1 + l}), "(1-q)*layer" + std::to_string(l) + "*");
        layer *= step;
      }
    }
    return id;
  }
  // Stars: the orbit-independent terms, then the layered tail.
  add(Rational(-make_rational(k, d) * size), c.one, Index{k + 1}, "");
  for (unsigned j = 1; j <= d; ++j) {
    Rational cj = Rational(binomial(d, j));
    if (correction == StarCorrection::displayed)
      cj *= make_rational(k, j) - 1;
    else
      cj *= make_rational(k - j, d);
    if (k + 1 - j == 0) continue;
    add(Rational(-cj * size), c.one_minus_q.pow(j), Index{k + 1 - j}, "(1-q)^" + std::to_string(j) + "*");
  }
  for (const Index& kk : orbit) {
    const unsigned k1 = kk[0];
    const Index rest = kk.suffix(1);
    CycModElement layer = c.one;
    for (unsigned l = 0; l < n; ++l) {
      add(Rational(-1), layer, rest.concat(Index{k1, l + 1}), "layer" + std::to_string(l) + "*");
      layer *= step;
    }
  }
  return id;
}

ModIdentity weight_one_identity(unsigned p, unsigned n) {
  if (p < 3) throw DomainError("weight-one relation requires p >= 3");
  const RingConstants c = constants(p, n);
  ModIdentity id;
  id.name = "wt1";
  id.params = mod_params(p, n);
  id.terms.push_back({Rational(1), sum_value(Variant::plain, p, n, Index{1}), "H(1)"});
  id.terms.push_back({-make_rational(p - 1, 2), c.one_minus_q, "(1-q)"});
  for (unsigned l = 1; l < n; ++l) {
    id.terms.push_back({make_rational(1, 2), c.qint.pow(l) * sum_value(Variant::bar, p, n, Index{1 + l}),
                        "[p]^" + std::to_string(l) + "*Hbar(" + std::to_string(1 + l) + ")"});
  }
  return id;
}

std::vector<ModIdentity> q2_suite_identities(unsigned p, const Index& k, Q2Form form) {
  require_odd(p, "the mod [p]^2 suite");
  std::vector<ModIdentity> out;
  ModIdentity wt1 = weight_one_identity(p, 2);
  wt1.name = "q2-wt1";
  out.push_back(std::move(wt1));
  if (form == Q2Form::truncated) {
    ModIdentity rev = reversal_identity(p, 2, k, Variant::plain);
    rev.name = "q2-reversal";
    ModIdentity dual = hat_duality_identity(p, 2, k);
    dual.name = "q2-duality";
    out.push_back(std::move(rev));
    out.push_back(std::move(dual));
    return out;
  }
  const RingConstants c = constants(p, 2);
  const unsigned w = k.weight();
  ModIdentity rev;
  rev.name = "q2-reversal";
  rev.params = mod_params(p, 2);
  rev.params.emplace_back("index", k.to_string());
  rev.terms.push_back({Rational(w % 2 == 0 ? 1 : -1), sum_value(Variant::bar, p, 2, k), sum_label("Hbar", k)});
  rev.terms.push_back({Rational(-1), sum_value(Variant::plain, p, 2, k.reversed()), sum_label("H", k.reversed())});
  for (const ExpVector& l : exp_vectors(static_cast<unsigned>(k.depth()), 1)) {
    const Index target = (k + l).reversed();
    rev.terms.push_back({-Rational(b_binom(k, l)), c.qint * sum_value(Variant::plain, p, 2, target),
                         "[p]*b(" + l.to_string() + ")*" + sum_label("H", target)});
  }
  const Index dual_k = hoffman_dual(k);
  ModIdentity dual;
  dual.name = "q2-duality";
  dual.params = rev.params;
  auto star = [&](const Index& idx) { return sum_value(Variant::star, p, 2, idx); };
  dual.terms.push_back({Rational(1), star(k), sum_label("H*", k)});
  dual.terms.push_back({Rational(1), star(dual_k), sum_label("H*", dual_k)});
  dual.terms.push_back({Rational(1), c.qint * star(k.with_front(1)), "[p]*" + sum_label("H*", k.with_front(1))});
  dual.terms.push_back({Rational(1), c.qint * star(dual_k.with_front(1)), "[p]*" + sum_label("H*", dual_k.with_front(1))});
  dual.terms.push_back({-Rational((p + 1) / 2), c.qint * c.one_minus_q * star(k), "[p](1-q)*" + sum_label("H*", k)});
  out.push_back(std::move(rev));
  out.push_back(std::move(dual));
  return out;
}

ExactIdentity bradley_identity(unsigned n_upper, const Index& k, bool swap_dual) {
  if (n_upper < 1 || k.empty()) throw DomainError("Bradley identity needs n >= 1 and a nonempty index");
  const Index dual = swap_dual ? k : hoffman_dual(k);
  ExactIdentity id;
  id.name = "bradley";
  id.params = {{"n", std::to_string(n_upper)}, {"index", k.to_string()}};
  const Index rest = k.suffix(1);
  for (unsigned m1 = 1; m1 <= n_upper; ++m1) {
    RatFun v = RatFun(Poly::monomial(Rational(1), static_cast<std::size_t>(m1) * (m1 - 1) / 2)) *
               RatFun(q_binom(n_upper - 1, m1 - 1)) * harmonic_term(k[0], k[0] - 1, m1) *
               hsum_exact(Variant::star, m1, rest);
    id.terms.push_back({Rational(m1 % 2 == 1 ? 1 : -1), std::move(v), "m1=" + std::to_string(m1)});
  }
  RatFun rhs = RatFun::qint_inverse_power(n_upper, dual[0]) * hsum_exact(Variant::bar_star, n_upper, dual.suffix(1));
  id.terms.push_back({Rational(-1), std::move(rhs), "dual(" + dual.to_string() + ")"});
  return id;
}

Rational theta_coefficient(unsigned s, unsigned l, unsigned k) {
  if (s > l) return Rational(0);
  Integer acc = 0;
  Integer base = Integer(k) - 1;
  for (unsigned a = s; a <= l; ++a) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), l - a);
    acc += binomial(l, a) * stirling2(a, s) * pw;
  }
  Rational r(acc * factorial(s), factorial(l));
  r.canonicalize();
  return r;
}

ExactIdentity theta_lemma_identity(unsigned l, unsigned k, unsigned m) {
  if (k < 1 || m < 1) throw DomainError("theta lemma needs k, m >= 1");
  ExactIdentity id;
  id.name = "theta";
  id.params = {{"l", std::to_string(l)}, {"k", std::to_string(k)}, {"m", std::to_string(m)}};
  auto base = [m](unsigned kk) {
    return RatFun(Poly::monomial(Rational(1), static_cast<std::size_t>(kk - 1) * m)) *
           RatFun::one_minus_qm_inverse_power(m, kk);
  };
  RatFun lhs = base(k);
  for (unsigned i = 0; i < l; ++i) lhs = lhs.theta();
  Rational inv_fact(1, factorial(l));
  inv_fact.canonicalize();
  id.terms.push_back({-inv_fact, std::move(lhs), "theta^l"});
  Integer mpow;
  mpz_ui_pow_ui(mpow.get_mpz_t(), m, l);
  for (unsigned s = 0; s <= l; ++s) {
    Rational coeff = Rational(mpow) * theta_coefficient(s, l, k) * Rational(binomial(s + k - 1, s));
    coeff.canonicalize();
    id.terms.push_back({coeff, base(k + s), "T(" + std::to_string(s) + ")"});
  }
  return id;
}

VerifyReport verify_reversal(unsigned p, unsigned n, const Index& k, Variant v) {
  return evaluate(reversal_identity(p, n, k, v));
}

VerifyReport verify_hat_duality(unsigned p, unsigned n, const Index& k) { return evaluate(hat_duality_identity(p, n, k)); }

VerifyReport verify_cyclic(unsigned p, unsigned n, const std::vector<Index>& orbit, bool starred) {
  return evaluate(cyclic_identity(p, n, orbit, starred));
}

VerifyReport verify_weight_one(unsigned p, unsigned n) { return evaluate(weight_one_identity(p, n)); }

VerifyReport verify_q2_suite(unsigned p, const Index& k) {
  Params params = mod_params(p, 2);
  params.emplace_back("index", k.to_string());
  return evaluate_suite("q2", params, q2_suite_identities(p, k));
}

VerifyReport verify_bradley(unsigned n_upper, const Index& k) { return evaluate(bradley_identity(n_upper, k)); }

VerifyReport verify_theta_lemma(unsigned l, unsigned k, unsigned m) { return evaluate(theta_lemma_identity(l, k, m)); }

}  // namespace qmzv
