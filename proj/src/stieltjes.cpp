#include "stieltjeskit/stieltjes.hpp"

#include <cmath>
#include <memory>
#include <numeric>
#include <string>

namespace sk {

namespace {

// Integer coefficient rows of the derivatives of f(u) = (log u)^n / u:
//   f^(j)(u) = u^{-(j+1)} * sum_i rows[j][i] (log u)^i.
// Row j+1 follows from row j by c'[i] = (i+1) c[i+1] - (j+1) c[i].
class DerivativeTable {
  public:
    explicit DerivativeTable(int n) {
        rows_.emplace_back(n + 1);
        rows_[0][n] = 1;
    }

    const std::vector<BigInt>& row(int j) {
        while (static_cast<int>(rows_.size()) <= j) grow();
        return rows_[j];
    }

  private:
    void grow() {
        int j = static_cast<int>(rows_.size()) - 1;
        const auto& cur = rows_[j];
        std::vector<BigInt> next(cur.size());
        for (size_t i = 0; i < cur.size(); ++i) {
            next[i] = -BigInt(j + 1) * cur[i];
            if (i + 1 < cur.size()) next[i] += BigInt(i + 1) * cur[i + 1];
        }
        rows_.push_back(std::move(next));
    }

    std::vector<std::vector<BigInt>> rows_;
};

constexpr int kMaxEmCorrections = 400;

// One Euler-Maclaurin evaluation of gamma_0(a)..gamma_nmax(a) at the current
// default precision.  Derivative rows and Bernoulli factors are shared across
// calls so that a batch over many shifts a pays for them once.
class EmEvaluator {
  public:
    EmEvaluator(int n_max, long cutoff) : n_max_(n_max), cutoff_(cutoff) {
        tables_.reserve(n_max + 1);
        for (int n = 0; n <= n_max; ++n) tables_.push_back(std::make_unique<DerivativeTable>(n));
    }

    // false when the Bernoulli corrections start diverging before reaching
    // the noise floor: the cutoff is too small for the requested precision.
    bool eval(const Rational& a, std::vector<BigReal>& out) {
        const long digits = static_cast<long>(BigReal::default_precision());
        const BigReal alpha(a);

        std::vector<BigReal> sums(n_max_ + 1, BigReal(0));
        for (long k = 0; k <= cutoff_; ++k) {
            BigReal u = alpha + k;
            BigReal w = 1 / u;
            BigReal lu = log(u);
            sums[0] += w;
            BigReal t = w;
            for (int n = 1; n <= n_max_; ++n) {
                t *= lu;
                sums[n] += t;
            }
        }

        BigReal x = alpha + cutoff_;
        BigReal lx = log(x);
        std::vector<BigReal> lx_pow(n_max_ + 2);
        lx_pow[0] = 1;
        for (int i = 1; i <= n_max_ + 1; ++i) lx_pow[i] = lx_pow[i - 1] * lx;
        BigReal inv_x = 1 / x;
        BigReal inv_x2 = inv_x * inv_x;

        out.assign(n_max_ + 1, BigReal(0));
        const BigReal noise = pow10(-(digits - 5));
        for (int n = 0; n <= n_max_; ++n) {
            BigReal value = sums[n] - lx_pow[n + 1] / (n + 1) - lx_pow[n] * inv_x / 2;
            BigReal eps = noise * (1 + abs(sums[n]));
            BigReal prev_mag(0);
            BigReal x_pow = inv_x2;  // u^{-2j}
            bool converged = false;
            for (int j = 1; j <= kMaxEmCorrections; ++j) {
                const auto& row = tables_[n]->row(2 * j - 1);
                BigReal deriv(0);
                for (size_t i = 0; i < row.size(); ++i)
                    if (row[i] != 0) deriv += BigReal(BigInt(row[i])) * lx_pow[i];
                BigReal term = bern_factor(j) * deriv * x_pow;
                BigReal mag = abs(term);
                if (mag < eps) {
                    value -= term;
                    converged = true;
                    break;
                }
                if (j > 1 && mag > prev_mag) return false;  // diverging
                value -= term;
                prev_mag = mag;
                x_pow *= inv_x2;
            }
            if (!converged) return false;
            out[n] = value;
        }
        return true;
    }

  private:
    const BigReal& bern_factor(int j) {
        while (static_cast<int>(bern_.size()) <= j) {
            int next = static_cast<int>(bern_.size());
            if (next == 0) {
                bern_.emplace_back(1);
                continue;
            }
            Rational b = shared_bernoulli_cache().at(2 * next) / Rational(factorial(2 * next));
            bern_.emplace_back(b);
        }
        return bern_[j];
    }

    int n_max_;
    long cutoff_;
    std::vector<std::unique_ptr<DerivativeTable>> tables_;
    std::vector<BigReal> bern_;
};

// Digits lost to cancellation between the partial sum and the integral term,
// which both grow like (log cutoff)^{n+1}.
int em_allowance(int n_max, long cutoff) {
    double l = std::log(static_cast<double>(cutoff) + 2.0);
    double lost = (n_max + 1) * std::log10(std::max(l, 2.8));
    return static_cast<int>(std::ceil(lost)) + 10;
}

// Extra digits for the binomial convolution against q^{-s}: terms reach
// roughly q^2 (2 log q)^n while the result can be much smaller.
int assembly_allowance(int n_max, long q) {
    double lq = std::log(static_cast<double>(q) + 1.0);
    double lost = (n_max + 1) * std::log10(2.0 * std::max(lq, 1.0) + 1.0) +
                  2.0 * std::log10(static_cast<double>(q) + 1.0);
    return static_cast<int>(std::ceil(lost)) + 10;
}

void check_index_limit(int n, int max_index) {
    if (n < 0) fail(ErrorCode::DomainError, "negative Laurent index");
    if (n > max_index)
        fail(ErrorCode::ResourceLimit,
             "index " + std::to_string(n) + " exceeds limit " + std::to_string(max_index));
    if (em_allowance(n, 50) > 5000)
        fail(ErrorCode::PrecisionTooLow, "Euler-Maclaurin cancellation beyond supported range");
}

long initial_cutoff(const PrecisionContext& ctx) {
    return std::max(50L, static_cast<long>(ctx.working_digits) * 3);
}

BigReal padded_estimate(const BigReal& diff, const BigReal& magnitude,
                        const PrecisionContext& ctx) {
    return 2 * diff + pow10(-(ctx.total_digits() - 2)) * (1 + magnitude);
}

}  // namespace

GammaVectorReal hurwitz_gamma_vector(int n_max, const Rational& a, const PrecisionContext& ctx,
                                     int max_index) {
    if (a <= 0 || a > 1) fail(ErrorCode::DomainError, "shift a must satisfy 0 < a <= 1");
    check_index_limit(n_max, max_index);

    auto run = [&](int digits, long cutoff, std::vector<BigReal>& out) {
        PrecisionScope scope(digits + ctx.guard_digits + em_allowance(n_max, cutoff));
        EmEvaluator ev(n_max, cutoff);
        std::vector<BigReal> raw;
        if (!ev.eval(a, raw)) return false;
        out.clear();
        for (auto& v : raw) out.push_back(round_to(v, digits));
        return true;
    };

    long cutoff = initial_cutoff(ctx);
    for (int attempt = 0;; ++attempt) {
        std::vector<BigReal> low, high;
        if (run(ctx.working_digits, cutoff, low) && run(ctx.total_digits(), cutoff, high)) {
            PrecisionScope scope(ctx.total_digits());
            BigReal threshold = pow10(-(ctx.working_digits / 2));
            bool stable = true;
            GammaVectorReal result;
            for (int n = 0; n <= n_max && stable; ++n) {
                BigReal diff = abs(high[n] - low[n]);
                if (diff > threshold) stable = false;
                result.values.push_back(round_to(high[n], ctx.working_digits));
                result.error_estimates.push_back(padded_estimate(diff, abs(high[n]), ctx));
            }
            if (stable) return result;
        }
        if (attempt >= 3)
            fail(ErrorCode::NonConvergence,
                 "Euler-Maclaurin failed to stabilize up to cutoff " + std::to_string(cutoff));
        cutoff *= 2;
    }
}

namespace {

GammaVectorComplex characters_primitive_vector(int n_max, const DirichletCharacter& chi,
                                               const PrecisionContext& ctx) {
    const long q = chi.modulus();
    const bool real_chi = chi.is_real();

    auto run = [&](int digits, long cutoff, std::vector<BigComplex>& out) {
        PrecisionScope scope(digits + ctx.guard_digits + em_allowance(n_max, cutoff) +
                             assembly_allowance(n_max, q));
        EmEvaluator ev(n_max, cutoff);
        std::vector<BigComplex> moment(n_max + 1);  // A_m = sum_a chi(a) gamma_m(a/q)
        std::vector<BigReal> gammas;
        for (long a = 1; a < q; ++a) {
            auto rot = chi.rotation(a);
            if (!rot) continue;
            if (!ev.eval(Rational(a, q), gammas)) return false;
            if (real_chi) {
                if (rot->first == 0)
                    for (int m = 0; m <= n_max; ++m) moment[m].re += gammas[m];
                else
                    for (int m = 0; m <= n_max; ++m) moment[m].re -= gammas[m];
            } else {
                BigComplex c = unit_rotation(rot->first, rot->second);
                for (int m = 0; m <= n_max; ++m) {
                    moment[m].re += c.re * gammas[m];
                    moment[m].im += c.im * gammas[m];
                }
            }
        }

        BigReal lq = log(BigReal(q));
        std::vector<BigReal> lq_pow(n_max + 1);
        lq_pow[0] = 1;
        for (int i = 1; i <= n_max; ++i) lq_pow[i] = lq_pow[i - 1] * lq;

        out.assign(n_max + 1, BigComplex{});
        for (int n = 0; n <= n_max; ++n) {
            BigComplex s;
            for (int m = 0; m <= n; ++m) {
                BigReal w = BigReal(binomial(n, m)) * lq_pow[n - m];
                s.re += w * moment[m].re;
                if (!real_chi) s.im += w * moment[m].im;
            }
            out[n] = round_to(BigComplex{s.re / q, real_chi ? BigReal(0) : s.im / q}, digits);
        }
        return true;
    };

    long cutoff = initial_cutoff(ctx);
    for (int attempt = 0;; ++attempt) {
        std::vector<BigComplex> low, high;
        if (run(ctx.working_digits, cutoff, low) && run(ctx.total_digits(), cutoff, high)) {
            PrecisionScope scope(ctx.total_digits());
            BigReal threshold = pow10(-(ctx.working_digits / 2));
            bool stable = true;
            GammaVectorComplex result;
            for (int n = 0; n <= n_max && stable; ++n) {
                BigReal diff = abs_value(high[n] - low[n]);
                if (diff > threshold) stable = false;
                result.values.push_back(round_to(high[n], ctx.working_digits));
                result.error_estimates.push_back(padded_estimate(diff, abs_value(high[n]), ctx));
            }
            if (stable) return result;
        }
        if (attempt >= 3)
            fail(ErrorCode::NonConvergence,
                 "character assembly failed to stabilize up to cutoff " + std::to_string(cutoff));
        cutoff *= 2;
    }
}

}  // namespace

GammaVectorComplex character_gamma_vector(int n_max, const DirichletCharacter& chi,
                                          const PrecisionContext& ctx, int max_index) {
    check_index_limit(n_max, max_index);

    if (chi.is_principal()) {
        if (chi.modulus() != 1)
            fail(ErrorCode::UnsupportedCharacter,
                 "principal character with modulus > 1 has no supported Laurent data");
        auto real = hurwitz_gamma_vector(n_max, 1, ctx, max_index);
        GammaVectorComplex out;
        for (auto& v : real.values) out.values.emplace_back(v);
        out.error_estimates = std::move(real.error_estimates);
        return out;
    }

    if (chi.is_primitive()) return characters_primitive_vector(n_max, chi, ctx);

    // Imprimitive non-principal: Euler-factor correction of the inducing
    // character, defined here for n = 0 only.
    if (n_max > 0)
        fail(ErrorCode::UnsupportedCharacter,
             "imprimitive characters are supported at n = 0 only");
    auto primitive = inducing_character(chi);
    auto base = character_gamma_vector(0, primitive, ctx, max_index);

    PrecisionScope scope(ctx.total_digits());
    BigComplex factor{BigReal(1), BigReal(0)};
    long q = chi.modulus();
    long f = primitive.modulus();
    for (long p = 2; p <= q; ++p) {
        if (q % p != 0 || f % p == 0) continue;
        bool prime = true;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        BigComplex chip = primitive.value(p);
        factor *= BigComplex{1 - chip.re / p, -chip.im / p};
    }
    GammaVectorComplex out;
    out.values.push_back(round_to(base.values[0] * factor, ctx.working_digits));
    out.error_estimates.push_back(base.error_estimates[0] * (abs_value(factor) + 1));
    return out;
}

BigReal gamma_zeta(int n, const PrecisionContext& ctx, int max_index) {
    return gamma_hurwitz(n, 1, ctx, max_index);
}

BigReal gamma_hurwitz(int n, const Rational& a, const PrecisionContext& ctx, int max_index) {
    return hurwitz_gamma_vector(n, a, ctx, max_index).values[n];
}

BigComplex gamma_chi(int n, const DirichletCharacter& chi, const PrecisionContext& ctx,
                     int max_index) {
    return character_gamma_vector(n, chi, ctx, max_index).values[n];
}

BigReal gamma_over_factorial(int n, const DirichletCharacter& chi, const PrecisionContext& ctx,
                             int max_index) {
    BigComplex g = gamma_chi(n, chi, ctx, max_index);
    PrecisionScope scope(ctx.total_digits());
    BigReal mag = abs_value(g);
    if (n <= 50) return round_to(mag / BigReal(factorial(n)), ctx.working_digits);
    // log-scaled route for large n
    BigReal lg = log(mag) - lgamma(BigReal(n + 1));
    return round_to(exp(lg), ctx.working_digits);
}

const char* to_string(TableKind kind) {
    switch (kind) {
        case TableKind::zeta: return "zeta";
        case TableKind::hurwitz: return "hurwitz";
        case TableKind::character: return "character";
    }
    return "unknown";
}

StieltjesTable StieltjesTable::zeta(int n_max, const PrecisionContext& ctx, int max_index) {
    auto vec = hurwitz_gamma_vector(n_max, 1, ctx, max_index);
    StieltjesTable t;
    t.kind_ = TableKind::zeta;
    t.precision_ = ctx;
    for (auto& v : vec.values) t.entries_.emplace_back(v);
    t.error_estimates_ = std::move(vec.error_estimates);
    return t;
}

StieltjesTable StieltjesTable::hurwitz(int n_max, const Rational& a, const PrecisionContext& ctx,
                                       int max_index) {
    auto vec = hurwitz_gamma_vector(n_max, a, ctx, max_index);
    StieltjesTable t;
    t.kind_ = TableKind::hurwitz;
    t.a_ = a;
    t.precision_ = ctx;
    for (auto& v : vec.values) t.entries_.emplace_back(v);
    t.error_estimates_ = std::move(vec.error_estimates);
    return t;
}

StieltjesTable StieltjesTable::character(int n_max, const DirichletCharacter& chi,
                                         const PrecisionContext& ctx, int max_index) {
    auto vec = character_gamma_vector(n_max, chi, ctx, max_index);
    StieltjesTable t;
    t.kind_ = TableKind::character;
    t.q_ = chi.modulus();
    t.index_ = chi.index();
    t.precision_ = ctx;
    t.entries_ = std::move(vec.values);
    t.error_estimates_ = std::move(vec.error_estimates);
    return t;
}

const BigComplex& StieltjesTable::entry(int n) const {
    if (n < 0 || n > max_index())
        fail(ErrorCode::MissingGamma, "table holds indices 0.." + std::to_string(max_index()) +
                                          ", requested " + std::to_string(n));
    return entries_[n];
}

BigReal StieltjesTable::entry_real(int n) const { return entry(n).re; }

const BigReal& StieltjesTable::error_estimate(int n) const {
    if (n < 0 || n > max_index()) fail(ErrorCode::MissingGamma, "no error estimate at that index");
    return error_estimates_[n];
}

StieltjesTable StieltjesTable::perturbed(int n, long scale) const {
    StieltjesTable t = *this;
    t.entries_[n].re *= scale;
    t.entries_[n].im *= scale;
    return t;
}

}  // namespace sk
