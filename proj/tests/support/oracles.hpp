#pragma once

// Reference computations used only by the test suites.  Every routine here
// reaches its target by a route independent of the library implementation it
// checks: raw limit definitions with extrapolation, closed forms, alternating
// series acceleration, and direct Dirichlet series summation.

#include <functional>
#include <vector>

#include "stieltjeskit/characters.hpp"
#include "stieltjeskit/numerics.hpp"

namespace sk::oracle {

/// gamma_0..gamma_nmax from the raw limit definition
///   gamma_n = lim_T [ sum_{m<=T} (log m)^n / m - (log T)^{n+1}/(n+1) ],
/// sampled at T = limit/2^j and extrapolated by solving for the constant term
/// against the basis {1} u {(log T)^i / T^k}.  Good to ~1e-10 at the default
/// settings; all arithmetic at `digits`.
std::vector<BigReal> stieltjes_by_limit(int n_max, long limit = 1000000, int digits = 40);

/// digamma at a rational argument by the Gauss closed form (logs, cotangent,
/// cosine sums); gamma_0(p/q) = -digamma(p/q).
BigReal gauss_digamma(long p, long q);

/// sum_{k>=0} (-1)^k a(k) by Chebyshev-weighted acceleration; a(k) must be
/// totally monotone (true for the (2k+1)^{-s} and (k+1)^{-s} families).
BigReal alternating_sum(const std::function<BigReal(long)>& a, int digits);

/// L(s, chi_4) = sum_k (-1)^k (2k+1)^{-s} for real s > 0.
BigReal beta_series(const BigReal& s, int digits);

/// zeta(s) = eta(s) / (1 - 2^{1-s}) for real s > 0, s != 1.
BigReal zeta_by_eta(const BigReal& s, int digits);

/// L(s, chi) for real s in (0, 2] and non-principal chi: direct partial sum
/// over blocks of the period plus a binomial moment expansion of the tail.
BigComplex dirichlet_series_reference(const BigReal& s, const DirichletCharacter& chi,
                                      int digits);

/// n-th derivative of L(s, chi) at s = 1 by a Fornberg finite-difference
/// stencil over dirichlet_series_reference values; gamma_n(chi) equals
/// (-1)^n times this.
BigComplex l_derivative_reference(int order, const DirichletCharacter& chi, int digits);

/// Exact finite-difference weights for the m-th derivative at 0 on the
/// integer nodes -half..half.
std::vector<Rational> fornberg_weights(int order, int half_width);

/// zeta(sigma) for real sigma > 1 by direct summation to `terms` plus the
/// integral tail, the half-term, and the first correction.
BigReal zeta_direct(const BigReal& sigma, long terms, int digits);

/// Brute-force conductor: the smallest divisor f of q with chi trivial on
/// units congruent to 1 mod f.
long conductor_bruteforce(const DirichletCharacter& chi);

}  // namespace sk::oracle
