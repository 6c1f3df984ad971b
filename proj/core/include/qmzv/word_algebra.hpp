#pragma once

/// @file word_algebra.hpp
/// @brief Words y_{k_1}...y_{k_d}, quasi-shuffle products and the weight-k
/// relation space used to bound quotient dimensions.

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qmzv/dense_poly.hpp"
#include "qmzv/index.hpp"
#include "qmzv/ratfun.hpp"

namespace qmzv {

/// A word in the letters y_1, y_2, ...; the letters form an index.
using Word = Index;

/// A Q[q]-linear combination of words. Zero coefficients are never stored.
class PolySum {
 public:
  PolySum() = default;
  explicit PolySum(const Word& w, Poly c = Poly::one());

  const std::map<Word, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coeff(const Word& w) const;

  void add(const Word& w, const Poly& c);
  PolySum& operator+=(const PolySum& o);
  PolySum& operator-=(const PolySum& o);
  PolySum& operator*=(const Poly& c);
  friend PolySum operator+(PolySum a, const PolySum& b) { return a += b; }
  friend PolySum operator-(PolySum a, const PolySum& b) { return a -= b; }
  friend PolySum operator*(PolySum a, const Poly& c) { return a *= c; }
  friend bool operator==(const PolySum& a, const PolySum& b) { return a.terms_ == b.terms_; }

  /// y_k * this
  PolySum prepend(unsigned k) const;
  /// Coefficients evaluated at q = 1.
  PolySum at_q_one() const;
  std::string to_string() const;

 private:
  std::map<Word, Poly> terms_;
};

PolySum stuffle(const Word& a, const Word& b);
PolySum q_stuffle(const Word& a, const Word& b);
PolySum stuffle_star(const Word& a, const Word& b);

/// Bilinear extensions of the products.
PolySum stuffle(const PolySum& a, const PolySum& b);
PolySum q_stuffle(const PolySum& a, const PolySum& b);
PolySum stuffle_star(const PolySum& a, const PolySum& b);

/// sum_w c_w(q) H_m(w; q), with plain harmonic q-sums.
RatFun evaluate_hsum(const PolySum& x, unsigned m);

/// Weight-k relation generators as rows over the weight-k words.
struct RelationMatrix {
  std::vector<Word> columns;  // compositions of k, lexicographic
  std::vector<std::vector<Rational>> rows;
};

RelationMatrix relation_space(unsigned k);
/// 2^{k-1} - rank(relation_space(k)).
std::size_t dim_word_quotient(unsigned k);

/// Header line of column labels, then one line of "num/den" entries per row.
void write_matrix_text(std::ostream& os, const RelationMatrix& m);

/// Exact check of H_m(a o b) = H_m(a) H_m(b) for every m <= max_m, through
/// integer power series truncated past a proven degree bound.
bool q_stuffle_homomorphism_holds(const Word& a, const Word& b, unsigned max_m);

/// Runs the homomorphism check for all pairs of words of weight <= max_weight
/// and every m <= max_m in one sweep. Returns the failing (a, b, m) triples.
/// With drop_correction the (1-q) merge term is omitted, which must fail.
struct HomomorphismFailure {
  Word a, b;
  unsigned m;
};
std::vector<HomomorphismFailure> q_stuffle_homomorphism_sweep(unsigned max_weight, unsigned max_m,
                                                              bool drop_correction = false);

}  // namespace qmzv
