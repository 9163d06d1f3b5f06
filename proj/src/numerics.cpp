#include "stieltjeskit/numerics.hpp"

#include <mutex>

namespace sk {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::UnsupportedCharacter: return "UnsupportedCharacter";
        case ErrorCode::PoleAtOne: return "PoleAtOne";
        case ErrorCode::OutsideDisk: return "OutsideDisk";
        case ErrorCode::QTooSmall: return "QTooSmall";
        case ErrorCode::BoundViolated: return "BoundViolated";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NoCrossover: return "NoCrossover";
        case ErrorCode::TailDivergence: return "TailDivergence";
        case ErrorCode::MissingGamma: return "MissingGamma";
        case ErrorCode::RegressionDetected: return "RegressionDetected";
    }
    return "UnknownError";
}

PrecisionContext::PrecisionContext(int working, int guard)
    : working_digits(working), guard_digits(guard) {
    if (working < 10)
        fail(ErrorCode::PreconditionViolated, "working_digits must be at least 10");
    if (guard < 5)
        fail(ErrorCode::PreconditionViolated, "guard_digits must be at least 5");
}

namespace {

// the backend's default precision is one process-global slot
std::recursive_mutex& precision_mutex() {
    static std::recursive_mutex m;
    return m;
}

}  // namespace

PrecisionScope::PrecisionScope(int decimal_digits) : saved_(0) {
    precision_mutex().lock();
    saved_ = BigReal::default_precision();
    BigReal::default_precision(static_cast<unsigned>(decimal_digits));
}

PrecisionScope::~PrecisionScope() {
    BigReal::default_precision(saved_);
    precision_mutex().unlock();
}

BigReal round_to(const BigReal& x, int digits) {
    BigReal r = x;
    r.precision(digits);
    return r;
}

BigReal pow10(long e) { return pow(BigReal(10), e); }

BigReal const_pi() {
    BigReal r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

BigReal const_euler() {
    BigReal r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigReal r = re * o.re - im * o.im;
    BigReal i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigReal d = o.re * o.re + o.im * o.im;
    BigReal r = (re * o.re + im * o.im) / d;
    BigReal i = (im * o.re - re * o.im) / d;
    re = r;
    im = i;
    return *this;
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

BigReal abs_value(const BigComplex& z) {
    if (z.im == 0) return abs(z.re);
    if (z.re == 0) return abs(z.im);
    return sqrt(z.re * z.re + z.im * z.im);
}

BigComplex conjugate(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex complex_exp(const BigComplex& z) {
    BigReal m = exp(z.re);
    if (z.im == 0) return {m, BigReal(0)};
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex unit_rotation(long num, long den) {
    long n = ((num % den) + den) % den;
    // quarter turns are exact
    if (4 * n % den == 0) {
        switch (4 * n / den) {
            case 0: return {BigReal(1), BigReal(0)};
            case 1: return {BigReal(0), BigReal(1)};
            case 2: return {BigReal(-1), BigReal(0)};
            case 3: return {BigReal(0), BigReal(-1)};
        }
    }
    BigReal angle = 2 * const_pi() * n / den;
    return {cos(angle), sin(angle)};
}

BigComplex round_to(const BigComplex& z, int digits) {
    return {round_to(z.re, digits), round_to(z.im, digits)};
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.backend().data(), n);
    return r;
}

Rational BernoulliCache::at(unsigned k) {
    if (k == 0) return 1;
    if (k == 1) return Rational(-1, 2);
    if (k % 2 == 1) return 0;
    unsigned m = k / 2;
    {
        std::shared_lock lock(mutex_);
        if (m < even_.size()) return even_[m];
    }
    std::unique_lock lock(mutex_);
    extend_locked(m + 1);
    return even_[m];
}

void BernoulliCache::extend_locked(unsigned even_count) {
    if (even_.empty()) even_.push_back(1);  // B_0
    while (even_.size() < even_count) {
        unsigned k = static_cast<unsigned>(even_.size()) * 2;
        // B_k = -1/(k+1) * sum_{j<k} C(k+1,j) B_j; odd j >= 3 contribute 0
        Rational sum = binomial(k + 1, 0) * even_[0];
        sum += Rational(-1, 2) * binomial(k + 1, 1);
        for (unsigned j = 2; j < k; j += 2)
            sum += Rational(binomial(k + 1, j)) * even_[j / 2];
        even_.push_back(-sum / Rational(k + 1));
    }
}

Rational bernoulli(unsigned k, BernoulliCache& cache) { return cache.at(k); }

BernoulliCache& shared_bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

StabilizedValue stabilize(const std::function<BigReal(int)>& computation,
                          const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.total_digits());
    BigReal low = computation(ctx.working_digits);
    BigReal high = computation(ctx.total_digits());
    BigReal diff = abs(high - low);
    if (diff > pow10(-(ctx.working_digits / 2)))
        fail(ErrorCode::NonConvergence,
             "two-precision runs disagree beyond 10^-" + std::to_string(ctx.working_digits / 2));
    return {round_to(high, ctx.working_digits), diff};
}

}  // namespace sk
