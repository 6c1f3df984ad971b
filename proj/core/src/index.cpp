#include "qmzv/index.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qmzv/errors.hpp"

namespace qmzv {

Index::Index(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned k : parts_)
    if (k == 0) throw DomainError("index parts must be positive");
}

unsigned Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

Index Index::reversed() const { return Index(std::vector<unsigned>(parts_.rbegin(), parts_.rend())); }

Index Index::prefix(std::size_t a) const {
  if (a > parts_.size()) throw DomainError("prefix length out of range");
  return Index(std::vector<unsigned>(parts_.begin(), parts_.begin() + static_cast<long>(a)));
}

Index Index::suffix(std::size_t a) const {
  if (a > parts_.size()) throw DomainError("suffix offset out of range");
  return Index(std::vector<unsigned>(parts_.begin() + static_cast<long>(a), parts_.end()));
}

Index Index::concat(const Index& other) const {
  std::vector<unsigned> v = parts_;
  v.insert(v.end(), other.parts_.begin(), other.parts_.end());
  return Index(std::move(v));
}

Index Index::with_front(unsigned k) const {
  std::vector<unsigned> v{k};
  v.insert(v.end(), parts_.begin(), parts_.end());
  return Index(std::move(v));
}

namespace {
std::string join(const std::vector<unsigned>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<unsigned> parse_list(std::string_view text, bool allow_zero) {
  std::vector<unsigned> out;
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }), s.end());
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("bad list literal: " + std::string(text));
    unsigned long v = std::stoul(item);
    if (v == 0 && !allow_zero) throw DomainError("index parts must be positive: " + std::string(text));
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}
}  // namespace

std::string Index::to_string() const { return join(parts_); }

unsigned ExpVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0u); }
std::string ExpVector::to_string() const { return join(entries_); }

Index operator+(const Index& k, const ExpVector& l) {
  if (k.depth() != l.size()) throw DomainError("index and exponent vector lengths differ");
  std::vector<unsigned> v(k.parts());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += l[i];
  return Index(std::move(v));
}

Index parse_index(std::string_view text) { return Index(parse_list(text, false)); }
ExpVector parse_exp_vector(std::string_view text) {
  std::string_view t = text;
  if (t.rfind("s=", 0) == 0) t.remove_prefix(2);
  return ExpVector(parse_list(t, true));
}

Index ones(unsigned m) { return Index(std::vector<unsigned>(m, 1)); }

std::vector<Index> compositions(unsigned w) {
  if (w == 0) return {Index{}};
  std::vector<Index> out;
  for (unsigned first = 1; first <= w; ++first)
    for (const Index& rest : compositions(w - first)) out.push_back(rest.with_front(first));
  return out;
}

std::vector<Index> compositions(unsigned w, unsigned d) {
  std::vector<Index> out;
  for (const Index& k : compositions(w))
    if (k.depth() == d) out.push_back(k);
  return out;
}

std::vector<ExpVector> exp_vectors(unsigned d, unsigned w) {
  if (d == 0) return w == 0 ? std::vector<ExpVector>{ExpVector{}} : std::vector<ExpVector>{};
  std::vector<ExpVector> out;
  for (unsigned first = 0; first <= w; ++first)
    for (const ExpVector& rest : exp_vectors(d - 1, w - first)) {
      std::vector<unsigned> v{first};
      v.insert(v.end(), rest.entries().begin(), rest.entries().end());
      out.emplace_back(std::move(v));
    }
  return out;
}

namespace {
// Slot i (between the i-th and (i+1)-th unit) is true for '+'.
std::vector<bool> plus_slots(const Index& k) {
  std::vector<bool> slots;
  for (std::size_t a = 0; a < k.depth(); ++a) {
    for (unsigned u = 1; u < k[a]; ++u) slots.push_back(true);
    if (a + 1 < k.depth()) slots.push_back(false);
  }
  return slots;
}

Index from_plus_slots(const std::vector<bool>& slots) {
  std::vector<unsigned> parts{1};
  for (bool plus : slots) {
    if (plus) ++parts.back();
    else parts.push_back(1);
  }
  return Index(std::move(parts));
}
}  // namespace

Index hoffman_dual(const Index& k) {
  if (k.empty()) throw DomainError("hoffman_dual of the empty index");
  std::vector<bool> slots = plus_slots(k);
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = !slots[i];
  return from_plus_slots(slots);
}

std::vector<Index> star_decompose(const Index& k) {
  if (k.empty()) return {Index{}};
  const std::size_t d = k.depth();
  std::vector<Index> out;
  for (unsigned long mask = 0; mask < (1UL << (d - 1)); ++mask) {
    std::vector<unsigned> parts{k[0]};
    for (std::size_t i = 1; i < d; ++i) {
      if (mask & (1UL << (i - 1))) parts.back() += k[i];
      else parts.push_back(k[i]);
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

Integer b_binom(const Index& k, const ExpVector& l) {
  if (k.depth() != l.size()) throw DomainError("b_binom: length mismatch");
  Integer r = 1;
  for (std::size_t j = 0; j < k.depth(); ++j) r *= binomial(static_cast<long>(k[j] + l[j]) - 1, l[j]);
  return r;
}

Index rotate(const Index& k) {
  if (k.depth() <= 1) return k;
  std::vector<unsigned> v(k.parts().begin() + 1, k.parts().end());
  v.push_back(k[0]);
  return Index(std::move(v));
}

std::vector<std::vector<Index>> orbits(unsigned k, unsigned d) {
  if (d == 0 || d > k) throw DomainError("orbits requires 1 <= d <= k");
  std::vector<Index> all = compositions(k, d);
  std::reverse(all.begin(), all.end());
  std::set<Index> seen;
  std::vector<std::vector<Index>> out;
  for (const Index& start : all) {
    if (seen.count(start)) continue;
    std::vector<Index> orbit;
    Index cur = start;
    do {
      orbit.push_back(cur);
      seen.insert(cur);
      cur = rotate(cur);
    } while (cur != start);
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace qmzv
