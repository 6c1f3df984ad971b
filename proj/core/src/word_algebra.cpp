#include "qmzv/word_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "qmzv/hsum.hpp"
#include "qmzv/linalg.hpp"

namespace qmzv {

PolySum::PolySum(const Word& w, Poly c) { add(w, c); }

Poly PolySum::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly{} : it->second;
}

void PolySum::add(const Word& w, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PolySum& PolySum::operator+=(const PolySum& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

PolySum& PolySum::operator-=(const PolySum& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

PolySum& PolySum::operator*=(const Poly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x = x * c;
  return *this;
}

PolySum PolySum::prepend(unsigned k) const {
  PolySum r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w.with_front(k), c);
  return r;
}

PolySum PolySum::at_q_one() const {
  PolySum r;
  for (const auto& [w, c] : terms_) r.add(w, Poly::constant(c.eval(Rational(1))));
  return r;
}

std::string PolySum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << qmzv::to_string(c) << ")y(" << w.to_string() << ")";
  }
  return os.str();
}

namespace {

enum class Product { stuffle, q_stuffle, star };

PolySum product(Product kind, const Word& a0, const Word& b0) {
  if (a0.empty()) return PolySum(b0);
  if (b0.empty()) return PolySum(a0);
  const bool swap = b0 < a0;
  const Word& a = swap ? b0 : a0;
  const Word& b = swap ? a0 : b0;

  static std::mutex mu;
  static std::map<std::tuple<int, Word, Word>, PolySum> memo;
  auto key = std::make_tuple(static_cast<int>(kind), a, b);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const unsigned k = a[0], l = b[0];
  const Word w = a.suffix(1), w2 = b.suffix(1);
  PolySum r = product(kind, w, b).prepend(k);
  r += product(kind, a, w2).prepend(l);
  PolySum inner = product(kind, w, w2);
  if (kind == Product::star) r -= inner.prepend(k + l);
  else r += inner.prepend(k + l);
  if (kind == Product::q_stuffle) r += inner.prepend(k + l - 1) * Poly{1, -1};
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, r);
  return r;
}

PolySum bilinear(Product kind, const PolySum& a, const PolySum& b) {
  PolySum r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r += product(kind, wa, wb) * (ca * cb);
  return r;
}

}  // namespace

PolySum stuffle(const Word& a, const Word& b) { return product(Product::stuffle, a, b); }
PolySum q_stuffle(const Word& a, const Word& b) { return product(Product::q_stuffle, a, b); }
PolySum stuffle_star(const Word& a, const Word& b) { return product(Product::star, a, b); }
PolySum stuffle(const PolySum& a, const PolySum& b) { return bilinear(Product::stuffle, a, b); }
PolySum q_stuffle(const PolySum& a, const PolySum& b) { return bilinear(Product::q_stuffle, a, b); }
PolySum stuffle_star(const PolySum& a, const PolySum& b) { return bilinear(Product::star, a, b); }

RatFun evaluate_hsum(const PolySum& x, unsigned m) {
  RatFun r;
  for (const auto& [w, c] : x.terms()) r += RatFun(c) * hsum_exact(Variant::plain, m, w, std::nullopt, m);
  return r;
}

RelationMatrix relation_space(unsigned k) {
  RelationMatrix out;
  out.columns = compositions(k);
  std::map<Word, std::size_t> col;
  for (std::size_t i = 0; i < out.columns.size(); ++i) col[out.columns[i]] = i;

  std::set<std::vector<Rational>> seen;
  auto emit = [&](const PolySum& x) {
    std::vector<Rational> row(out.columns.size());
    for (const auto& [w, c] : x.terms()) row[col.at(w)] = c.coeff(0);
    if (std::all_of(row.begin(), row.end(), [](const Rational& r) { return sgn(r) == 0; })) return;
    if (seen.insert(row).second) out.rows.push_back(std::move(row));
  };
  auto dual_rev = [](const Word& w) { return hoffman_dual(w).reversed(); };
  const Rational sign_k = (k % 2) ? -1 : 1;

  for (unsigned a = 1; a < k; ++a)
    for (const Word& x : compositions(a))
      for (const Word& y : compositions(k - a))
        emit(stuffle_star(x, y) - stuffle_star(dual_rev(x), dual_rev(y)) * Poly::constant(sign_k));
  for (const Word& x : compositions(k - 1)) emit(stuffle_star(Word{1}, x));
  for (const Word& x : compositions(k)) {
    PolySum r(x);
    r += PolySum(dual_rev(x), Poly::constant(Rational(x.weight() % 2 ? -1 : 1)));
    emit(r);
  }
  return out;
}

std::size_t dim_word_quotient(unsigned k) {
  RelationMatrix m = relation_space(k);
  return m.columns.size() - rank(m.rows);
}

void write_matrix_text(std::ostream& os, const RelationMatrix& m) {
  for (std::size_t i = 0; i < m.columns.size(); ++i) os << (i ? " " : "") << m.columns[i].to_string();
  os << "\n";
  for (const auto& row : m.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << to_fraction_string(row[i]);
    os << "\n";
  }
}

namespace {

using Series = std::vector<Integer>;

long euler_phi_sum(unsigned m) {
  long total = 0;
  for (unsigned d = 1; d <= m; ++d) {
    unsigned n = d;
    long r = n;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      while (n % p == 0) n /= p;
      r -= r / p;
    }
    if (n > 1) r -= r / n;
    total += r;
  }
  return total;
}

// x <- q^{(k-1)m} (1-q)^k / (1-q^m)^k * x, truncated to x.size().
void apply_term(Series& x, unsigned k, unsigned m) {
  const std::size_t T = x.size();
  const std::size_t shift = static_cast<std::size_t>(k - 1) * m;
  if (shift >= T) {
    std::fill(x.begin(), x.end(), Integer(0));
    return;
  }
  if (shift > 0) {
    for (std::size_t i = T; i-- > shift;) x[i] = x[i - shift];
    for (std::size_t i = 0; i < shift; ++i) x[i] = 0;
  }
  for (unsigned r = 0; r < k; ++r)
    for (std::size_t i = T; i-- > 1;) x[i] -= x[i - 1];
  for (unsigned r = 0; r < k; ++r)
    for (std::size_t i = m; i < T; ++i) x[i] += x[i - m];
}

// Truncated product, first T coefficients.
Series mul_trunc(const Series& a, const Series& b, std::size_t T) {
  Series out(T);
  for (std::size_t i = 0; i < T && i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < T && j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

bool sweep(const std::vector<std::pair<Word, Word>>& pairs, unsigned max_m,
           std::vector<HomomorphismFailure>* failures, bool drop_correction = false) {
  unsigned max_weight = 0;
  std::set<Word> words;
  std::map<std::pair<Word, Word>, PolySum> products;
  for (const auto& [a, b] : pairs) {
    max_weight = std::max(max_weight, a.weight() + b.weight());
    PolySum prod = drop_correction ? stuffle(a, b) : q_stuffle(a, b);
    for (const auto& [w, c] : prod.terms()) words.insert(w);
    words.insert(a);
    words.insert(b);
    products.emplace(std::make_pair(a, b), std::move(prod));
  }
  // Close under suffixes for the recursion.
  std::set<Word> closed;
  for (const Word& w : words)
    for (std::size_t a = 0; a <= w.depth(); ++a) closed.insert(w.suffix(a));
  std::vector<Word> order(closed.begin(), closed.end());
  std::stable_sort(order.begin(), order.end(), [](const Word& x, const Word& y) { return x.depth() > y.depth(); });

  const std::size_t T_max = static_cast<std::size_t>(max_weight) * euler_phi_sum(max_m) + max_weight + 1;
  std::map<Word, Series> state;
  for (const Word& w : order) {
    Series s(T_max);
    if (w.empty()) s[0] = 1;
    state.emplace(w, std::move(s));
  }

  bool ok = true;
  for (unsigned m = 1; m <= max_m; ++m) {
    for (const Word& w : order) {
      if (w.empty()) continue;
      Series inc = state.at(w.suffix(1));
      apply_term(inc, w[0], m);
      Series& dst = state.at(w);
      for (std::size_t i = 0; i < T_max; ++i) dst[i] += inc[i];
    }
    const long phi_sum = euler_phi_sum(m);
    for (const auto& [a, b] : pairs) {
      const unsigned K = a.weight() + b.weight();
      const std::size_t T = static_cast<std::size_t>(K) * phi_sum + K + 1;
      Series lhs = mul_trunc(state.at(a), state.at(b), T);
      for (const auto& [w, c] : products.at({a, b}).terms()) {
        const Series& h = state.at(w);
        for (std::size_t e = 0; e < c.size(); ++e) {
          const Rational& ce = c.coeffs()[e];
          if (sgn(ce) == 0) continue;
          const Integer ci = ce.get_num();  // q-stuffle coefficients are integral
          for (std::size_t i = e; i < T; ++i) mpz_submul(lhs[i].get_mpz_t(), ci.get_mpz_t(), h[i - e].get_mpz_t());
        }
      }
      if (std::any_of(lhs.begin(), lhs.end(), [](const Integer& x) { return sgn(x) != 0; })) {
        ok = false;
        if (failures) failures->push_back({a, b, m});
      }
    }
  }
  return ok;
}

}  // namespace

bool q_stuffle_homomorphism_holds(const Word& a, const Word& b, unsigned max_m) {
  return sweep({{a, b}}, max_m, nullptr);
}

std::vector<HomomorphismFailure> q_stuffle_homomorphism_sweep(unsigned max_weight, unsigned max_m,
                                                              bool drop_correction) {
  std::vector<Word> words;
  for (unsigned w = 1; w <= max_weight; ++w)
    for (const Word& x : compositions(w)) words.push_back(x);
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) pairs.emplace_back(words[i], words[j]);
  std::vector<HomomorphismFailure> failures;
  sweep(pairs, max_m, &failures, drop_correction);
  return failures;
}

}  // namespace qmzv
