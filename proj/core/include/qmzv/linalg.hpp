#pragma once

/// @file linalg.hpp
/// @brief Exact rank and kernels over Q, plus their images modulo word-size primes.

#include <algorithm>
#include <cstdint>
#include <string>
#include <optional>
#include <vector>

#include "qmzv/modint.hpp"
#include "qmzv/rational.hpp"

namespace qmzv {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Fraction-free (integer-preserving) elimination after clearing row denominators.
std::size_t rank(const RationalMatrix& m);

/// Relations among the rows: vectors c with sum_i c_i row_i = 0. One vector
/// per row that depends on earlier rows, normalized to coefficient 1 at that
/// row and supported on it and the earlier independent rows.
RationalMatrix left_nullspace(const RationalMatrix& m);

/// Right kernel {x : m x = 0} in reduced echelon form: one vector per free
/// column, 1 at that column and 0 at the other free columns.
RationalMatrix nullspace(const RationalMatrix& m);

RationalMatrix transpose(const RationalMatrix& m);

/// Incremental fraction-free echelon over Z. A new row is cross-multiplied
/// against each basis row and divided by its content, so entries stay integral.
/// Each basis row vanishes at the pivots of earlier basis rows.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(bool track_relations = false) : track_(track_relations) {}

  /// Returns the integer relation (over inserted row ids, nonzero at the new
  /// row) when the row depends on the rows inserted so far.
  std::optional<std::vector<Integer>> insert(std::vector<Integer> row);
  /// The row after elimination against the basis, up to a nonzero scalar.
  std::vector<Integer> reduce(std::vector<Integer> row) const;

  std::size_t rank() const { return basis_.size(); }
  const std::vector<Integer>& basis_row(std::size_t b) const { return basis_[b]; }
  std::size_t pivot(std::size_t b) const { return pivots_[b]; }

 private:
  void eliminate(std::vector<Integer>& row, std::vector<Integer>* comb) const;

  bool track_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<Integer>> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Integer>> combos_;
};

/// Incremental row echelon form modulo a prime. Optionally tracks, for each
/// dependent row, its expression through earlier independent rows.
template <std::uint64_t P>
class ModEchelon {
 public:
  using F = ModInt<P>;

  explicit ModEchelon(bool track_relations = false) : track_(track_relations) {}

  /// Returns true when the row is independent of the rows inserted so far.
  bool insert(std::vector<F> row) {
    const std::size_t id = inserted_++;
    std::vector<std::pair<std::size_t, F>> comb;
    if (track_) comb.emplace_back(id, F(1));
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const F c = row.size() > pivots_[b] ? row[pivots_[b]] : F(0);
      if (c.v == 0) continue;
      const auto& br = basis_[b];
      if (row.size() < br.size()) row.resize(br.size());
      for (std::size_t i = pivots_[b]; i < br.size(); ++i)
        if (br[i].v) row[i] -= c * br[i];
      if (track_)
        for (const auto& [g, x] : combos_[b]) comb.emplace_back(g, -(c * x));
    }
    std::size_t piv = 0;
    while (piv < row.size() && row[piv].v == 0) ++piv;
    if (piv == row.size()) {
      if (track_) relations_.emplace_back(id, merge(std::move(comb)));
      return false;
    }
    const F inv = row[piv].inverse();
    for (std::size_t i = piv; i < row.size(); ++i) row[i] *= inv;
    if (track_) {
      comb = merge(std::move(comb));
      for (auto& [g, x] : comb) x *= inv;
      combos_.push_back(std::move(comb));
    }
    basis_.push_back(std::move(row));
    pivots_.push_back(piv);
    independent_rows_.push_back(id);
    return true;
  }

  std::size_t rank() const { return basis_.size(); }
  std::size_t rows_seen() const { return inserted_; }
  const std::vector<std::size_t>& independent_rows() const { return independent_rows_; }

  /// (dependent row id, sparse combination summing to zero with coefficient 1 at that id).
  const std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, F>>>>& relations() const {
    return relations_;
  }

  /// Reduces a row against the basis without inserting it.
  std::vector<F> reduce(std::vector<F> row) const {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const F c = row.size() > pivots_[b] ? row[pivots_[b]] : F(0);
      if (c.v == 0) continue;
      const auto& br = basis_[b];
      for (std::size_t i = pivots_[b]; i < br.size() && i < row.size(); ++i) row[i] -= c * br[i];
    }
    return row;
  }

  /// Combination (over inserted row ids) equal to the basis row b.
  const std::vector<std::pair<std::size_t, F>>& combination(std::size_t b) const { return combos_[b]; }
  const std::vector<F>& basis_row(std::size_t b) const { return basis_[b]; }
  std::size_t pivot(std::size_t b) const { return pivots_[b]; }

 private:
  static std::vector<std::pair<std::size_t, F>> merge(std::vector<std::pair<std::size_t, F>> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::size_t, F>> out;
    for (const auto& [g, x] : v) {
      if (!out.empty() && out.back().first == g) out.back().second += x;
      else out.emplace_back(g, x);
    }
    std::erase_if(out, [](const auto& e) { return e.second.v == 0; });
    return out;
  }

  bool track_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<F>> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::pair<std::size_t, F>>> combos_;
  std::vector<std::size_t> independent_rows_;
  std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, F>>>> relations_;
};

/// Smallest-denominator rational congruent to a modulo m, if one exists with
/// |num|, den below sqrt(m/2).
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m);

/// Representative in [0, m1 m2) of the pair of residues.
Integer crt(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2);

template <std::uint64_t P>
ModInt<P> to_mod(const Rational& x) {
  Integer m(std::to_string(P));
  Integer r = mod_rational(x, m);
  return ModInt<P>::raw(r.get_ui());
}

}  // namespace qmzv
