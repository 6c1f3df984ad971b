#include "qmzv/miner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

#include "qmzv/errors.hpp"
#include "qmzv/hsum.hpp"
#include "qmzv/linalg.hpp"
#include "qmzv/vector_cache.hpp"

namespace qmzv {

std::string to_string(Family f) {
  switch (f) {
    case Family::O: return "O";
    case Family::Q: return "Q";
    case Family::O2: return "O2";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "O") return Family::O;
  if (text == "Q") return Family::Q;
  if (text == "O2") return Family::O2;
  throw DomainError("unknown family: " + std::string(text));
}

unsigned family_n(Family f) { return f == Family::O2 ? 2 : 1; }

bool GeneratorDescriptor::operator<(const GeneratorDescriptor& o) const {
  return std::tie(j, h, index, s, pbracket) < std::tie(o.j, o.h, o.index, o.s, o.pbracket);
}

std::string GeneratorDescriptor::to_string() const {
  std::string out;
  if (h > 0) out += "p^" + std::to_string(h) + "*";
  if (j > 0) out += "(1-q)^" + std::to_string(j) + "*";
  if (pbracket) out += "[p]*";
  if (index.empty()) {
    out += "1";
  } else {
    out += "z(" + index.to_string();
    if (s) out += ";" + s->to_string();
    out += ")";
  }
  return out;
}

GeneratorDescriptor parse_descriptor(std::string_view text) {
  GeneratorDescriptor g;
  auto fail = [&] { return DomainError("malformed generator descriptor: " + std::string(text)); };
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view f = text.substr(pos, end - pos);
    pos = end + 1;
    if (f.starts_with("p^")) {
      g.h = static_cast<unsigned>(std::stoul(std::string(f.substr(2))));
    } else if (f.starts_with("(1-q)^")) {
      g.j = static_cast<unsigned>(std::stoul(std::string(f.substr(6))));
    } else if (f == "[p]") {
      g.pbracket = true;
    } else if (f == "1") {
    } else if (f.starts_with("z(") && f.ends_with(")")) {
      const std::string_view body = f.substr(2, f.size() - 3);
      const std::size_t semi = body.find(';');
      g.index = parse_index(body.substr(0, semi));
      if (semi != std::string_view::npos) {
        g.s = parse_exp_vector(body.substr(semi + 1));
        if (g.s->size() != g.index.depth()) throw fail();
      }
    } else {
      throw fail();
    }
  }
  return g;
}

namespace {

void append_plain(std::vector<GeneratorDescriptor>& out, unsigned w, unsigned max_j, bool pbracket, bool with_s) {
  for (unsigned j = 0; j <= max_j; ++j) {
    if (j > w) break;
    for (unsigned h = 0; h <= j; ++h) {
      for (const Index& idx : compositions(w - j)) {
        if (!with_s || idx.empty()) {
          out.push_back({h, j, idx, std::nullopt, pbracket});
          continue;
        }
        // All 0 <= s <= idx componentwise, lexicographic.
        std::vector<unsigned> s(idx.depth(), 0);
        while (true) {
          out.push_back({h, j, idx, ExpVector(s), pbracket});
          std::size_t a = s.size();
          while (a > 0 && s[a - 1] == idx[a - 1]) s[--a] = 0;
          if (a == 0) break;
          ++s[a - 1];
        }
      }
    }
  }
}

}  // namespace

std::vector<GeneratorDescriptor> gens(Family f, unsigned k) {
  std::vector<GeneratorDescriptor> out;
  switch (f) {
    case Family::O: append_plain(out, k, k, false, false); break;
    case Family::Q: append_plain(out, k, k, false, true); break;
    case Family::O2:
      append_plain(out, k, k, false, false);
      append_plain(out, k + 1, k + 1, true, false);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GeneratorDescriptor> v_generators(Family f, unsigned k) {
  if (k == 0) throw DomainError("V_k needs k >= 1");
  std::set<GeneratorDescriptor> out;
  for (GeneratorDescriptor g : gens(f, k - 1)) {
    g.j += 1;
    out.insert(g);
    g.h += 1;
    out.insert(g);
  }
  return {out.begin(), out.end()};
}

namespace {

bool is_prime(unsigned x) {
  if (x < 2) return false;
  for (unsigned d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

}  // namespace

std::vector<unsigned> primes_between(unsigned lo, unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned x = lo + 1; x <= hi; ++x)
    if (is_prime(x)) out.push_back(x);
  return out;
}

std::vector<unsigned> default_primes(unsigned k) { return primes_between(k + 1, 97); }

std::vector<unsigned> next_primes(unsigned p, unsigned count) {
  std::vector<unsigned> out;
  for (unsigned x = p + 1; out.size() < count; ++x)
    if (is_prime(x)) out.push_back(x);
  return out;
}

std::string cache_dir_from_env(const std::string& fallback) {
  const char* env = std::getenv("QMZV_CACHE_DIR");
  return env && *env ? std::string(env) : fallback;
}

namespace {

SumSpec spec_of(const GeneratorDescriptor& g) {
  if (g.s) return make_spec(Variant::generalized, g.index, g.s);
  return make_spec(Variant::plain, g.index);
}

IntPoly integer_residue(const GeneratorDescriptor& g, unsigned p, unsigned n) {
  const auto& ctx = cyc_context<Integer>(p, n);
  IntPoly v = exact_table(p, n).value(spec_of(g));
  if (g.j > 0) v = ctx.reduce(v * IntPoly{1, -1}.pow(g.j));
  if (g.pbracket) v = ctx.mul(v, ctx.qint_p());
  if (g.h > 0) {
    Integer ph;
    mpz_ui_pow_ui(ph.get_mpz_t(), p, g.h);
    v *= ph;
  }
  return v;
}

std::vector<Integer> padded(const IntPoly& v, std::size_t len) {
  std::vector<Integer> out(len, Integer(0));
  for (std::size_t i = 0; i < v.coeffs().size(); ++i) out[i] = v.coeffs()[i];
  return out;
}

using IntRow = std::vector<Integer>;

// Rows of residue vectors over the prime set, consulting the on-disk cache.
std::vector<IntRow> build_rows(const std::vector<GeneratorDescriptor>& descs, const std::vector<unsigned>& primes,
                               unsigned n, const VectorCache& cache) {
  std::vector<IntRow> rows(descs.size());
  for (unsigned p : primes) {
    const std::size_t len = static_cast<std::size_t>(n) * (p - 1);
    std::map<unsigned, std::vector<std::size_t>> by_weight;
    for (std::size_t i = 0; i < descs.size(); ++i) by_weight[descs[i].weight()].push_back(i);
    for (const auto& [w, ids] : by_weight) {
      const std::string key = "p=" + std::to_string(p) + ";n=" + std::to_string(n) + ";w=" + std::to_string(w);
      VectorCache::Bundle bundle = cache.load(key);
      bool dirty = false;
      for (std::size_t i : ids) {
        const std::string name = descs[i].to_string();
        auto it = bundle.find(name);
        if (it == bundle.end() || it->second.size() != len) {
          it = bundle.insert_or_assign(name, padded(integer_residue(descs[i], p, n), len)).first;
          dirty = true;
        }
        rows[i].insert(rows[i].end(), it->second.begin(), it->second.end());
      }
      if (dirty) cache.store(key, bundle);
    }
  }
  return rows;
}

// A dependency: sum over (row, coeff) of coeff * row = 0, coefficient 1 at `row`.
struct Dependency {
  std::size_t row;
  std::vector<std::pair<std::size_t, Rational>> comb;
};

struct Analysis {
  std::size_t rank = 0;
  std::size_t rank_prefix = 0;
  std::vector<std::size_t> independent;
  std::vector<Dependency> deps;
  bool certified = false;
};

bool verify_dependency(const std::vector<IntRow>& rows, const Dependency& d) {
  Integer l = 1;
  for (const auto& [i, c] : d.comb) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  const std::size_t len = rows[d.row].size();
  IntRow acc(len, Integer(0));
  for (const auto& [i, c] : d.comb) {
    const Integer s = c.get_num() * (l / c.get_den());
    for (std::size_t t = 0; t < len; ++t)
      if (sgn(rows[i][t]) != 0) mpz_addmul(acc[t].get_mpz_t(), s.get_mpz_t(), rows[i][t].get_mpz_t());
  }
  return std::all_of(acc.begin(), acc.end(), [](const Integer& x) { return sgn(x) == 0; });
}

template <std::uint64_t P>
std::vector<ModInt<P>> to_mod_row(const IntRow& row) {
  std::vector<ModInt<P>> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = ModInt<P>::raw(mpz_fdiv_ui(row[i].get_mpz_t(), P));
  return out;
}

template <std::uint64_t P>
struct ModRun {
  ModEchelon<P> echelon{true};
  std::size_t rank_prefix = 0;
  std::map<std::size_t, std::map<std::size_t, std::uint64_t>> deps;

  ModRun(const std::vector<IntRow>& rows, std::size_t prefix) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == prefix) rank_prefix = echelon.rank();
      echelon.insert(to_mod_row<P>(rows[i]));
    }
    if (prefix >= rows.size()) rank_prefix = echelon.rank();
    for (const auto& [row, comb] : echelon.relations()) {
      auto& m = deps[row];
      for (const auto& [g, x] : comb) m[g] = x.v;
    }
  }
};

Integer to_integer(std::uint64_t x) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return r;
}

// Lifts one dependency from its images modulo the primes in `images`.
std::optional<Dependency> lift(std::size_t row,
                               const std::vector<std::pair<std::uint64_t, const std::map<std::size_t, std::uint64_t>*>>& images) {
  std::set<std::size_t> support;
  for (const auto& [P, m] : images)
    for (const auto& [g, x] : *m) support.insert(g);
  Dependency d{row, {}};
  for (std::size_t g : support) {
    Integer r = 0, M = 1;
    for (const auto& [P, m] : images) {
      auto it = m->find(g);
      const Integer ri = it == m->end() ? Integer(0) : to_integer(it->second);
      const Integer Pi = to_integer(P);
      r = M == 1 ? ri : crt(r, M, ri, Pi);
      M *= Pi;
    }
    if (sgn(r) == 0) continue;
    auto q = rational_reconstruct(r, M);
    if (!q) return std::nullopt;
    d.comb.emplace_back(g, *q);
  }
  return d;
}

Analysis analyze_modular(const std::vector<IntRow>& rows, std::size_t prefix, bool certify) {
  ModRun<kMersenne61> a(rows, prefix);
  Analysis out;
  out.rank = a.echelon.rank();
  out.rank_prefix = a.rank_prefix;
  out.independent = a.echelon.independent_rows();
  if (!certify) return out;
  ModRun<kPrime61b> b(rows, prefix);
  bool ok = b.echelon.rank() == out.rank && b.rank_prefix == out.rank_prefix &&
            b.echelon.independent_rows() == out.independent;
  std::optional<ModRun<kPrime60>> c;
  for (const auto& [row, ma] : a.deps) {
    std::optional<Dependency> d;
    auto mb = b.deps.find(row);
    if (mb != b.deps.end()) {
      d = lift(row, {{kMersenne61, &ma}, {kPrime61b, &mb->second}});
      if (d && !verify_dependency(rows, *d)) d.reset();
      if (!d) {
        if (!c) c.emplace(rows, prefix);
        auto mc = c->deps.find(row);
        if (mc != c->deps.end()) {
          d = lift(row, {{kMersenne61, &ma}, {kPrime61b, &mb->second}, {kPrime60, &mc->second}});
          if (d && !verify_dependency(rows, *d)) d.reset();
        }
      }
    }
    if (d) out.deps.push_back(std::move(*d));
    else ok = false;
  }
  out.certified = ok;
  return out;
}

Analysis analyze_exact(const std::vector<IntRow>& rows, std::size_t prefix) {
  IntegerEchelon e(true);
  Analysis out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == prefix) out.rank_prefix = e.rank();
    auto dep = e.insert(rows[i]);
    if (!dep) {
      out.independent.push_back(i);
      continue;
    }
    Dependency d{i, {}};
    const Integer lead = (*dep)[i];
    for (std::size_t g = 0; g < dep->size(); ++g)
      if (sgn((*dep)[g]) != 0) d.comb.emplace_back(g, make_rational((*dep)[g], lead));
    out.deps.push_back(std::move(d));
  }
  if (prefix >= rows.size()) out.rank_prefix = e.rank();
  out.rank = e.rank();
  out.certified = true;
  return out;
}

Analysis analyze(const std::vector<IntRow>& rows, std::size_t prefix, bool certify, Engine engine) {
  if (engine == Engine::fraction_free) return analyze_exact(rows, prefix);
  return analyze_modular(rows, prefix, certify);
}

std::vector<unsigned> concat(std::vector<unsigned> a, const std::vector<unsigned>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct ValueCache {
  std::map<std::pair<GeneratorDescriptor, unsigned>, CycModElement> values;
  const CycModElement& get(const GeneratorDescriptor& g, unsigned p, unsigned n) {
    auto key = std::make_pair(g, p);
    auto it = values.find(key);
    if (it == values.end()) it = values.emplace(key, value_at(g, p, n)).first;
    return it->second;
  }
};

bool vanishes_cached(const Combination& c, const std::vector<unsigned>& primes, unsigned n, ValueCache& cache) {
  for (unsigned p : primes) {
    CycModElement acc = CycModElement::zero(p, n);
    for (const auto& [g, x] : c) acc += cache.get(g, p, n) * x;
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<Integer> residue_vector(const GeneratorDescriptor& g, unsigned p, unsigned n) {
  return padded(integer_residue(g, p, n), static_cast<std::size_t>(n) * (p - 1));
}

CycModElement value_at(const GeneratorDescriptor& g, unsigned p, unsigned n) {
  CycModElement v = hsum_mod(spec_of(g), p, n);
  if (g.j > 0) v *= one_minus_q(p, n).pow(g.j);
  if (g.pbracket) v *= qint_p(p, n);
  if (g.h > 0) {
    Integer ph;
    mpz_ui_pow_ui(ph.get_mpz_t(), p, g.h);
    v *= Rational(ph);
  }
  return v;
}

std::vector<Rational> vectorize(const GeneratorDescriptor& g, const std::vector<unsigned>& primes, unsigned n) {
  if (primes.empty()) throw DomainError("empty prime set");
  std::vector<Rational> out;
  for (unsigned p : primes)
    for (const Integer& x : residue_vector(g, p, n)) out.emplace_back(x);
  return out;
}

CycModElement evaluate_combination(const Combination& c, unsigned p, unsigned n) {
  CycModElement acc = CycModElement::zero(p, n);
  for (const auto& [g, x] : c) acc += value_at(g, p, n) * x;
  return acc;
}

bool vanishes_on(const Combination& c, const std::vector<unsigned>& primes, unsigned n) {
  ValueCache cache;
  return vanishes_cached(c, primes, n, cache);
}

DimReport dim_tilde(Family f, unsigned k, const std::optional<std::vector<unsigned>>& primes,
                    const MinerOptions& options) {
  if (k == 0) throw DomainError("dim_tilde needs k >= 1");
  const unsigned n = family_n(f);
  const std::vector<GeneratorDescriptor> v = v_generators(f, k);
  std::set<GeneratorDescriptor> in_v(v.begin(), v.end());
  std::vector<GeneratorDescriptor> rows_desc = v;
  for (const auto& g : gens(f, k))
    if (!in_v.count(g)) rows_desc.push_back(g);
  VectorCache cache(options.cache_dir);

  DimReport r;
  r.family = f;
  r.k = k;
  r.primes = primes ? *primes : default_primes(k);
  if (r.primes.empty()) throw DomainError("empty prime set");
  r.generators = rows_desc.size();

  auto ranks = [&](const std::vector<unsigned>& s, bool certify) {
    return analyze(build_rows(rows_desc, s, n, cache), v.size(), certify, options.engine);
  };
  Analysis cur = ranks(r.primes, false);
  unsigned unchanged = 0;
  while (unchanged < options.stabilization_extensions && r.extension_primes.size() < options.max_extensions) {
    const unsigned last = r.extension_primes.empty() ? r.primes.back() : r.extension_primes.back();
    r.extension_primes.push_back(next_primes(last, 1).front());
    Analysis next = ranks(concat(r.primes, r.extension_primes), false);
    unchanged = (next.rank == cur.rank && next.rank_prefix == cur.rank_prefix) ? unchanged + 1 : 0;
    cur = std::move(next);
  }
  r.stabilized = unchanged >= options.stabilization_extensions;
  const Analysis final = ranks(concat(r.primes, r.extension_primes), true);
  r.rank_full = final.rank;
  r.rank_v = final.rank_prefix;
  r.dim_tilde = r.rank_full - r.rank_v;
  r.certified = final.certified;
  return r;
}

std::vector<RelationCandidate> find_relations(const std::vector<GeneratorDescriptor>& basis,
                                              const std::vector<unsigned>& primes, unsigned n,
                                              const MinerOptions& options) {
  if (primes.empty()) throw DomainError("empty prime set");
  VectorCache cache(options.cache_dir);
  const Analysis a = analyze(build_rows(basis, primes, n, cache), basis.size(), true, options.engine);
  std::vector<RelationCandidate> out;
  ValueCache values;
  for (const Dependency& d : a.deps) {
    RelationCandidate c;
    for (const auto& [i, x] : d.comb) c.coefficients.emplace_back(basis[i], x);
    c.verified = vanishes_cached(c.coefficients, primes, n, values);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<RelationCandidate> find_relations(Family f, unsigned k, const std::optional<std::vector<unsigned>>& primes,
                                              const MinerOptions& options) {
  return find_relations(gens(f, k), primes ? *primes : default_primes(k), family_n(f), options);
}

namespace {

std::map<GeneratorDescriptor, Rational> as_map(const Combination& c) {
  std::map<GeneratorDescriptor, Rational> m;
  for (const auto& [g, x] : c) m[g] += x;
  std::erase_if(m, [](const auto& e) { return sgn(e.second) == 0; });
  return m;
}

}  // namespace

bool same_up_to_scalar(const Combination& a, const Combination& b) {
  const auto ma = as_map(a), mb = as_map(b);
  if (ma.empty() || ma.size() != mb.size()) return false;
  std::optional<Rational> lambda;
  for (const auto& [g, x] : ma) {
    auto it = mb.find(g);
    if (it == mb.end()) return false;
    Rational r = x / it->second;
    if (!lambda) lambda = r;
    else if (*lambda != r) return false;
  }
  return true;
}

bool in_span(const Combination& target, const std::vector<RelationCandidate>& candidates) {
  std::map<GeneratorDescriptor, std::size_t> column;
  auto col = [&](const GeneratorDescriptor& g) { return column.emplace(g, column.size()).first->second; };
  for (const auto& c : candidates)
    for (const auto& [g, x] : c.coefficients) col(g);
  for (const auto& [g, x] : target) col(g);
  RationalMatrix m;
  for (const auto& c : candidates) {
    std::vector<Rational> row(column.size());
    for (const auto& [g, x] : c.coefficients) row[col(g)] += x;
    m.push_back(std::move(row));
  }
  const std::size_t base = rank(m);
  std::vector<Rational> row(column.size());
  for (const auto& [g, x] : target) row[col(g)] += x;
  m.push_back(std::move(row));
  return rank(m) == base;
}

MembershipResult membership(const Combination& target, const std::vector<GeneratorDescriptor>& span,
                            const std::vector<unsigned>& primes, unsigned n, const MinerOptions& options) {
  if (primes.empty()) throw DomainError("empty prime set");
  MembershipResult res;
  res.primes = primes;
  res.n = n;
  if (as_map(target).empty()) {
    res.member = true;
    res.certified = true;
    return res;
  }
  VectorCache cache(options.cache_dir);
  std::vector<IntRow> rows = build_rows(span, primes, n, cache);
  // Target row, scaled to integers.
  Integer l = 1;
  for (const auto& [g, x] : target) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<GeneratorDescriptor> target_gens;
  for (const auto& [g, x] : target) target_gens.push_back(g);
  const std::vector<IntRow> trows = build_rows(target_gens, primes, n, cache);
  IntRow trow(trows.front().size(), Integer(0));
  for (std::size_t i = 0; i < target.size(); ++i) {
    const Integer s = target[i].second.get_num() * (l / target[i].second.get_den());
    for (std::size_t t = 0; t < trow.size(); ++t) mpz_addmul(trow[t].get_mpz_t(), s.get_mpz_t(), trows[i][t].get_mpz_t());
  }
  rows.push_back(trow);

  const Analysis a = analyze(rows, span.size(), true, options.engine);
  const std::size_t tid = span.size();
  auto dep = std::find_if(a.deps.begin(), a.deps.end(), [&](const Dependency& d) { return d.row == tid; });
  const bool target_independent = std::find(a.independent.begin(), a.independent.end(), tid) != a.independent.end();
  if (!target_independent) {
    res.member = true;
    if (dep != a.deps.end()) {
      // trow + sum_i c_i span_i = 0 with trow = l * target.
      for (const auto& [i, c] : dep->comb)
        if (i != tid) res.coefficients.emplace_back(span[i], Rational(-c / l));
      Combination check = target;
      for (const auto& [g, c] : res.coefficients) check.emplace_back(g, Rational(-c));
      res.certified = vanishes_on(check, primes, n);
    }
    return res;
  }
  res.member = false;
  // Span rank is exact when every span dependency was verified.
  res.certified = a.certified;
  IntegerEchelon e;
  for (std::size_t i = 0; i < span.size(); ++i) e.insert(rows[i]);
  const IntRow reduced = e.reduce(trow);
  std::vector<bool> is_pivot(reduced.size(), false);
  for (std::size_t b = 0; b < e.rank(); ++b) is_pivot[e.pivot(b)] = true;
  std::size_t free_col = 0;
  while (free_col < reduced.size() && (is_pivot[free_col] || sgn(reduced[free_col]) == 0)) ++free_col;
  if (free_col == reduced.size()) throw DomainError("no separating coordinate found");
  // x = e_c on the free columns, pivots solved from the echelon rows.
  std::vector<Rational> x(reduced.size(), Rational(0));
  x[free_col] = 1;
  std::vector<std::size_t> order(e.rank());
  for (std::size_t b = 0; b < order.size(); ++b) order[b] = b;
  std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t w) { return e.pivot(u) > e.pivot(w); });
  for (std::size_t b : order) {
    const auto& row = e.basis_row(b);
    Rational acc = 0;
    for (std::size_t t = e.pivot(b) + 1; t < row.size(); ++t)
      if (sgn(row[t]) != 0 && sgn(x[t]) != 0) acc += row[t] * x[t];
    x[e.pivot(b)] = -acc / row[e.pivot(b)];
  }
  res.functional = std::move(x);
  return res;
}

}  // namespace qmzv
