#pragma once

/// @file miner.hpp
/// @brief Spanning families of q-analogue MZV values, their exact per-prime
/// vectorizations, numerical dimensions, relation candidates and span membership.
///
/// A generator p^h (1-q)^j ([p]) zeta(k; s) is vectorized over a prime set S as
/// the concatenation of its residues in Z_{p,n}, p in S. Everything computed
/// here holds over S only.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmzv/cycmod.hpp"
#include "qmzv/index.hpp"
#include "qmzv/rational.hpp"

namespace qmzv {

enum class Family { O, Q, O2 };

std::string to_string(Family f);
Family parse_family(std::string_view text);
/// Power of [p] the family is reduced modulo: 2 for O2, 1 otherwise.
unsigned family_n(Family f);

struct GeneratorDescriptor {
  unsigned h = 0;
  unsigned j = 0;
  Index index;
  /// Numerator exponents; absent means the plain sum (s_a = k_a - 1).
  std::optional<ExpVector> s;
  /// Extra factor [p].
  bool pbracket = false;

  bool operator==(const GeneratorDescriptor&) const = default;
  /// The documented generator order: (j, h, index, s, pbracket).
  bool operator<(const GeneratorDescriptor& o) const;

  /// Family weight: the [p] factor lowers index weight plus j by one.
  unsigned weight() const {
    const unsigned w = index.weight() + j;
    return pbracket && w > 0 ? w - 1 : w;
  }
  /// e.g. "p^1*(1-q)^2*[p]*z(4,1;3,0)"; empty index renders as "1".
  std::string to_string() const;
};

/// Inverse of GeneratorDescriptor::to_string.
GeneratorDescriptor parse_descriptor(std::string_view text);

/// Generators of the weight-k space, in the documented order. k = 0 applies
/// the same set-builder formulas, which gives {1} for O and Q.
std::vector<GeneratorDescriptor> gens(Family f, unsigned k);

/// {(1-q) g, p (1-q) g : g in gens(f, k-1)}, deduplicated and sorted.
std::vector<GeneratorDescriptor> v_generators(Family f, unsigned k);

/// Primes p with lo < p <= hi.
std::vector<unsigned> primes_between(unsigned lo, unsigned hi);
/// Primes p with k + 1 < p <= 97.
std::vector<unsigned> default_primes(unsigned k);
/// The next count primes above p.
std::vector<unsigned> next_primes(unsigned p, unsigned count);

/// Residue of the generator in Z_{p,n}, as integer coefficients (length n(p-1)).
std::vector<Integer> residue_vector(const GeneratorDescriptor& g, unsigned p, unsigned n);
/// The generator as an element of Z_{p,n}, computed through the ring operations.
CycModElement value_at(const GeneratorDescriptor& g, unsigned p, unsigned n);
/// Concatenation over p in S of the residue coefficients.
std::vector<Rational> vectorize(const GeneratorDescriptor& g, const std::vector<unsigned>& primes, unsigned n);

using Combination = std::vector<std::pair<GeneratorDescriptor, Rational>>;

/// A Q-linear combination vanishing at every prime of S.
struct RelationCandidate {
  Combination coefficients;
  bool verified = false;
};

/// Sum of coefficients * generators at one prime.
CycModElement evaluate_combination(const Combination& c, unsigned p, unsigned n);
/// Direct substitution at every prime.
bool vanishes_on(const Combination& c, const std::vector<unsigned>& primes, unsigned n);

enum class Engine {
  /// Fraction-free integer elimination throughout.
  fraction_free,
  /// Elimination modulo two 61-bit primes; kernels lifted by rational
  /// reconstruction and re-verified exactly.
  modular,
};

struct MinerOptions {
  Engine engine = Engine::fraction_free;
  /// Empty: no on-disk cache.
  std::string cache_dir;
  /// Extensions that must leave the ranks unchanged.
  unsigned stabilization_extensions = 2;
  /// Upper limit on appended primes while searching for stabilization.
  unsigned max_extensions = 6;
};

/// Cache directory from QMZV_CACHE_DIR, or the fallback.
std::string cache_dir_from_env(const std::string& fallback = "");

struct DimReport {
  Family family;
  unsigned k = 0;
  std::vector<unsigned> primes;
  std::vector<unsigned> extension_primes;
  std::size_t generators = 0;
  std::size_t rank_full = 0;
  std::size_t rank_v = 0;
  std::size_t dim_tilde = 0;
  bool stabilized = false;
  /// Ranks proven over Q for the vectors on S (every dependency verified exactly).
  bool certified = false;
};

/// Rank of gens(f,k) together with V_k minus the rank of V_k.
DimReport dim_tilde(Family f, unsigned k, const std::optional<std::vector<unsigned>>& primes = std::nullopt,
                    const MinerOptions& options = {});

/// Kernel of the stacked generator vectors over S, one candidate per
/// generator that depends on earlier ones (coefficient 1 there).
std::vector<RelationCandidate> find_relations(Family f, unsigned k,
                                              const std::optional<std::vector<unsigned>>& primes = std::nullopt,
                                              const MinerOptions& options = {});
/// Same over an explicit list of generators, kept in the given order.
std::vector<RelationCandidate> find_relations(const std::vector<GeneratorDescriptor>& basis,
                                              const std::vector<unsigned>& primes, unsigned n,
                                              const MinerOptions& options = {});

/// a = lambda b for some nonzero rational lambda.
bool same_up_to_scalar(const Combination& a, const Combination& b);
/// target lies in the Q-span of the candidates.
bool in_span(const Combination& target, const std::vector<RelationCandidate>& candidates);

struct MembershipResult {
  bool member = false;
  std::vector<unsigned> primes;
  unsigned n = 1;
  /// When member: target = sum coefficient * span generator on S.
  Combination coefficients;
  /// When not a member: a functional on the concatenated residue
  /// coordinates vanishing on the span and not on the target.
  std::vector<Rational> functional;
  /// Member: coefficients verified by direct substitution. Non-member: span rank proven.
  bool certified = false;
  std::string scope() const { return "over S"; }
};

MembershipResult membership(const Combination& target, const std::vector<GeneratorDescriptor>& span,
                            const std::vector<unsigned>& primes, unsigned n, const MinerOptions& options = {});

}  // namespace qmzv
