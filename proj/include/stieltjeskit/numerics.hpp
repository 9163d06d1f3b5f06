#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "stieltjeskit/errors.hpp"

namespace sk {

// Decimal-digit arbitrary precision reals (MPFR) and exact rationals (GMP).
using BigReal = boost::multiprecision::mpfr_float;
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Working/guard digit policy shared by every computation.  Outputs are
/// rounded to working_digits; intermediate arithmetic carries at least
/// working_digits + guard_digits.
struct PrecisionContext {
    int working_digits = 50;
    int guard_digits = 10;

    PrecisionContext() = default;
    PrecisionContext(int working, int guard);

    int total_digits() const { return working_digits + guard_digits; }
};

// RAII guard for the default construction precision (decimal digits).
// The underlying backend keeps one process-global default, so scopes hold a
// process-wide recursive lock: concurrent computations serialize, nested
// scopes on one thread stack normally, and results are deterministic from
// any thread.
class PrecisionScope {
  public:
    explicit PrecisionScope(int decimal_digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned saved_;
};

/// x rounded to `digits` decimal digits (round to nearest).
BigReal round_to(const BigReal& x, int digits);

/// 10^e at the current default precision.
BigReal pow10(long e);

/// pi at the current default precision.
BigReal const_pi();

/// The Euler-Mascheroni constant at the current default precision.  Used by
/// reference identities only; gamma_zeta computes its own value.
BigReal const_euler();

struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigReal r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigComplex& b);
BigComplex operator/(BigComplex a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);

inline bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

BigReal abs_value(const BigComplex& z);
BigComplex conjugate(const BigComplex& z);
BigComplex complex_exp(const BigComplex& z);

/// e^{2 pi i t} for rational t, exact at quarter turns.
BigComplex unit_rotation(long num, long den);

BigComplex round_to(const BigComplex& z, int digits);

/// Bernoulli numbers as exact rationals.  B_1 is stored as -1/2; odd indices
/// >= 3 are zero.  Safe for concurrent use: reads share a lock, computation
/// extends the table under an exclusive lock and is deterministic.
class BernoulliCache {
  public:
    Rational at(unsigned k);

  private:
    void extend_locked(unsigned even_count);

    std::shared_mutex mutex_;
    std::vector<Rational> even_;  // even_[m] = B_{2m}
};

/// B_k via the standard recurrence sum_{j<=k} C(k+1,j) B_j = 0, memoized.
Rational bernoulli(unsigned k, BernoulliCache& cache);

/// Process-wide cache used by the summation engines.
BernoulliCache& shared_bernoulli_cache();

struct StabilizedValue {
    BigReal value;           // rounded to ctx.working_digits
    BigReal error_estimate;  // |run(working) - run(working+guard)|
};

/// Runs `computation` at ctx.working_digits and again with guard_digits more,
/// returning the higher-precision result and the difference as an empirical
/// error estimate.  Throws NonConvergence when the two runs disagree by more
/// than 10^(-working_digits/2).
StabilizedValue stabilize(const std::function<BigReal(int)>& computation,
                          const PrecisionContext& ctx);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

}  // namespace sk
