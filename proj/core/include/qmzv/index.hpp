#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qmzv/rational.hpp"

namespace qmzv {

/// A finite ordered list of positive integers (k_1, ..., k_d).
class Index {
 public:
  Index() = default;
  Index(std::vector<unsigned> parts);  // NOLINT(google-explicit-constructor)
  Index(std::initializer_list<unsigned> parts) : Index(std::vector<unsigned>(parts)) {}

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  std::size_t depth() const { return parts_.size(); }
  unsigned weight() const;
  bool empty() const { return parts_.empty(); }
  bool admissible() const { return !parts_.empty() && parts_[0] >= 2; }

  Index reversed() const;
  /// (k_1, ..., k_a); a = 0 gives the empty index.
  Index prefix(std::size_t a) const;
  /// (k_{a+1}, ..., k_d); a = d gives the empty index.
  Index suffix(std::size_t a) const;
  /// Concatenation.
  Index concat(const Index& other) const;
  Index with_front(unsigned k) const;

  std::string to_string() const;  // "2,1,1"; empty index renders as ""

  auto operator<=>(const Index&) const = default;

 private:
  std::vector<unsigned> parts_;
};

/// Nonnegative integers paired with an index.
class ExpVector {
 public:
  ExpVector() = default;
  ExpVector(std::vector<unsigned> entries) : entries_(std::move(entries)) {}  // NOLINT
  ExpVector(std::initializer_list<unsigned> e) : entries_(e) {}

  const std::vector<unsigned>& entries() const { return entries_; }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  unsigned total() const;
  std::string to_string() const;
  auto operator<=>(const ExpVector&) const = default;

 private:
  std::vector<unsigned> entries_;
};

/// Componentwise k + l.
Index operator+(const Index& k, const ExpVector& l);

Index parse_index(std::string_view text);
ExpVector parse_exp_vector(std::string_view text);

/// (1, ..., 1) with m ones.
Index ones(unsigned m);

/// All compositions of w in lexicographic order; w = 0 gives {()}.
std::vector<Index> compositions(unsigned w);
/// Compositions of w with exactly d parts, lexicographic.
std::vector<Index> compositions(unsigned w, unsigned d);
/// All exponent vectors of length d with total weight w, lexicographic.
std::vector<ExpVector> exp_vectors(unsigned d, unsigned w);

Index hoffman_dual(const Index& k);
/// All 2^{d-1} contractions (k_1 [,|+] ... [,|+] k_d).
std::vector<Index> star_decompose(const Index& k);
/// prod_j C(k_j + l_j - 1, l_j)
Integer b_binom(const Index& k, const ExpVector& l);

/// Cyclic shift (k_1, ..., k_d) -> (k_2, ..., k_d, k_1).
Index rotate(const Index& k);
/// Orbits of weight-k depth-d indices under rotation; each orbit lists its
/// distinct rotations starting from the lexicographically largest member.
std::vector<std::vector<Index>> orbits(unsigned k, unsigned d);

}  // namespace qmzv
