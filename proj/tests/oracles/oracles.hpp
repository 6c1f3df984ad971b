#pragma once

/// @file oracles.hpp
/// @brief Brute-force reference implementations used only by the tests.

#include <complex>
#include <vector>

#include "qmzv/cycmod.hpp"
#include "qmzv/index.hpp"
#include "qmzv/linalg.hpp"
#include "qmzv/rational.hpp"

namespace qmzv::oracle {

using Complex = std::complex<long double>;

/// H_m(k) (or H*_m(k)) by enumerating every tuple m >= m_1 > ... > m_d > 0.
Rational harmonic_sum(unsigned m, const Index& k, bool star = false);

/// H_{p-1}(k; s; q) in Z_{p,n}: every tuple contributes q^{sum s_a m_a} times the
/// extended-Euclid inverse of prod [m_a]^{k_a}.
CycModElement hsum_mod(unsigned p, unsigned n, const Index& k, const ExpVector& s, bool star = false);

/// Textbook Gaussian elimination over Q with partial pivoting on nonzero entries.
std::size_t rank(RationalMatrix m);

/// H_{m-1}(k; q) at q = e^{2 pi i/m} in long double.
Complex hsum_at_root(const Index& k, unsigned m);

/// Coefficients y^0..y^order of (zeta_m e^{y/m} - 1)^l by series multiplication.
std::vector<Complex> s_series(unsigned l, unsigned m, unsigned order);

/// Z_{m-1}((l); (k)) by a single loop.
Complex zsum_depth_one(unsigned l, unsigned k, unsigned m);

}  // namespace qmzv::oracle
