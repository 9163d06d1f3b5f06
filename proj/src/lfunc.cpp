#include "stieltjeskit/lfunc.hpp"

#include <string>

#include "stieltjeskit/tail_constants.hpp"

namespace sk {

namespace {

// x^w for real x > 0 and complex w
BigComplex real_pow(const BigReal& log_x, const BigComplex& w) {
    return complex_exp({w.re * log_x, w.im * log_x});
}

// (e^z - 1)/z, series near 0
BigComplex expm1_over_z(const BigComplex& z) {
    if (abs_value(z) > BigReal(1) / 4) {
        BigComplex num = complex_exp(z);
        num.re -= 1;
        return num / z;
    }
    const long digits = static_cast<long>(BigReal::default_precision());
    BigComplex sum{BigReal(1), BigReal(0)};
    BigComplex term{BigReal(1), BigReal(0)};
    BigReal eps = pow10(-(digits + 2));
    for (int k = 1; k < 200; ++k) {
        term *= z;
        term.re /= (k + 1);
        term.im /= (k + 1);
        sum += term;
        if (abs_value(term) < eps) break;
    }
    return sum;
}

// (X^{1-s} - 1)/(s - 1) = -log X * (e^z - 1)/z with z = (1-s) log X;
// finite at s = 1, where it equals -log X.
BigComplex pole_free_integral(const BigComplex& s, const BigReal& log_x) {
    BigComplex z{(1 - s.re) * log_x, -s.im * log_x};
    BigComplex r = expm1_over_z(z);
    return {-log_x * r.re, -log_x * r.im};
}

struct EmZetaShared {
    std::vector<BigReal> bern;  // B_{2j}/(2j)!

    const BigReal& factor(int j) {
        while (static_cast<int>(bern.size()) <= j) {
            int next = static_cast<int>(bern.size());
            if (next == 0) {
                bern.emplace_back(1);
                continue;
            }
            bern.emplace_back(
                Rational(shared_bernoulli_cache().at(2 * next) / Rational(factorial(2 * next))));
        }
        return bern[j];
    }
};

// Euler-Maclaurin for zeta(s, a) at the current default precision.  When
// pole_free is set, the integral term is replaced by (X^{1-s} - 1)/(s-1)
// (the caller owns the cancelling -1/(s-1) pieces).  Returns false when the
// correction terms do not reach the noise floor before diverging.
bool hurwitz_zeta_raw(const BigComplex& s, const Rational& a, long cutoff, bool pole_free,
                      EmZetaShared& shared, BigComplex& out) {
    const long digits = static_cast<long>(BigReal::default_precision());
    const BigReal alpha(a);
    const BigComplex minus_s{-s.re, -s.im};

    BigComplex acc{};
    for (long k = 0; k < cutoff; ++k) {
        BigReal lu = log(alpha + k);
        acc += real_pow(lu, minus_s);
    }

    BigReal x = alpha + cutoff;
    BigReal lx = log(x);
    if (pole_free) {
        acc += pole_free_integral(s, lx);
    } else {
        BigComplex one_minus_s{1 - s.re, -s.im};
        BigComplex denom{s.re - 1, s.im};
        acc += real_pow(lx, one_minus_s) / denom;
    }

    BigComplex x_minus_s = real_pow(lx, minus_s);
    acc += BigComplex{x_minus_s.re / 2, x_minus_s.im / 2};

    // Bernoulli corrections: B_{2j}/(2j)! (s)_{2j-1} X^{-s-2j+1}
    BigReal inv_x = 1 / x;
    BigReal inv_x2 = inv_x * inv_x;
    BigComplex poch = s;                                        // (s)_1
    BigComplex pw = x_minus_s * BigComplex{inv_x, BigReal(0)};  // X^{-s-1}
    BigReal eps = pow10(-(digits - 5)) * (1 + abs_value(acc));
    BigReal prev_mag(0);
    for (int j = 1; j <= 400; ++j) {
        BigComplex term = poch * pw;
        const BigReal& bf = shared.factor(j);
        term.re *= bf;
        term.im *= bf;
        BigReal mag = abs_value(term);
        if (mag < eps) {
            acc += term;
            out = acc;
            return true;
        }
        if (j > 1 && mag > prev_mag) return false;
        acc += term;
        prev_mag = mag;
        pw.re *= inv_x2;
        pw.im *= inv_x2;
        poch *= BigComplex{s.re + 2 * j - 1, s.im};
        poch *= BigComplex{s.re + 2 * j, s.im};
    }
    return false;
}

long zeta_cutoff(const PrecisionContext& ctx) {
    return std::max(50L, static_cast<long>(ctx.working_digits) * 3);
}

}  // namespace

BigComplex hurwitz_zeta(const BigComplex& s, const Rational& a, const PrecisionContext& ctx) {
    if (a <= 0 || a > 1) fail(ErrorCode::DomainError, "shift a must satisfy 0 < a <= 1");
    PrecisionScope scope(ctx.total_digits() + 10);
    if (abs_value(s - BigComplex{BigReal(1), BigReal(0)}) < pow10(-ctx.working_digits))
        fail(ErrorCode::PoleAtOne, "zeta(s, a) has its pole at s = 1");
    if (s.re <= -1)
        fail(ErrorCode::DomainError, "evaluation requires Re(s) > -1");

    EmZetaShared shared;
    long cutoff = zeta_cutoff(ctx);
    for (int attempt = 0;; ++attempt) {
        BigComplex out;
        if (hurwitz_zeta_raw(s, a, cutoff, /*pole_free=*/false, shared, out))
            return round_to(out, ctx.working_digits);
        if (attempt >= 3)
            fail(ErrorCode::NonConvergence, "Euler-Maclaurin tail did not converge");
        cutoff *= 2;
    }
}

BigComplex l_eval(const BigComplex& s, const DirichletCharacter& chi,
                  const PrecisionContext& ctx) {
    const long q = chi.modulus();
    if (chi.is_principal()) {
        if (q != 1)
            fail(ErrorCode::UnsupportedCharacter,
                 "principal characters are evaluated at modulus 1 only");
        return hurwitz_zeta(s, 1, ctx);
    }

    int extra = static_cast<int>(2 * std::log10(static_cast<double>(q) + 1)) + 10;
    PrecisionScope scope(ctx.total_digits() + extra);
    if (s.re <= -1) fail(ErrorCode::DomainError, "evaluation requires Re(s) > -1");

    EmZetaShared shared;
    long cutoff = zeta_cutoff(ctx);
    for (int attempt = 0;; ++attempt) {
        BigComplex sum{};
        bool ok = true;
        for (long a = 1; a < q && ok; ++a) {
            auto rot = chi.rotation(a);
            if (!rot) continue;
            BigComplex z;
            ok = hurwitz_zeta_raw(s, Rational(a, q), cutoff, /*pole_free=*/true, shared, z);
            if (ok) sum += unit_rotation(rot->first, rot->second) * z;
        }
        if (ok) {
            // q^{-s} prefactor
            BigComplex result = real_pow(log(BigReal(q)), {-s.re, -s.im}) * sum;
            return round_to(result, ctx.working_digits);
        }
        if (attempt >= 3)
            fail(ErrorCode::NonConvergence, "Euler-Maclaurin tail did not converge");
        cutoff *= 2;
    }
}

BigComplex zeta_laurent_eval(const BigComplex& s, int truncation_order,
                             const StieltjesTable& table, const PrecisionContext& ctx) {
    if (table.kind() != TableKind::zeta)
        fail(ErrorCode::DomainError, "zeta_laurent_eval requires a zeta table");
    if (table.max_index() < truncation_order)
        fail(ErrorCode::MissingGamma, "table is missing entries up to the truncation order");
    PrecisionScope scope(ctx.total_digits());
    BigComplex w{s.re - 1, s.im};
    if (abs_value(w) < pow10(-ctx.working_digits))
        fail(ErrorCode::PoleAtOne, "the Laurent expansion has its pole at s = 1");

    // Horner over coefficients (-1)^n gamma_n / n!
    BigComplex acc{};
    BigReal fact(factorial(truncation_order));
    for (int n = truncation_order; n >= 0; --n) {
        BigReal coeff = table.entry_real(n) / fact;
        if (n % 2 == 1) coeff = -coeff;
        acc = acc * w + BigComplex{coeff, BigReal(0)};
        if (n > 0) fact /= n;
    }
    acc += BigComplex{BigReal(1), BigReal(0)} / w;
    return round_to(acc, ctx.working_digits);
}

TaylorPlan make_taylor_plan(const DirichletCharacter& chi, int truncation_order,
                            const BigReal& radius, const PrecisionContext& ctx) {
    if (chi.is_principal())
        fail(ErrorCode::UnsupportedCharacter, "Taylor plans require a non-principal character");
    auto table = StieltjesTable::character(truncation_order, chi, ctx);
    return TaylorPlan{chi, truncation_order, radius, std::move(table)};
}

BigComplex taylor_eval(const BigComplex& s, const TaylorPlan& plan, const PrecisionContext& ctx) {
    if (plan.chi.is_principal())
        fail(ErrorCode::UnsupportedCharacter, "Taylor plans require a non-principal character");
    if (plan.table.max_index() < plan.truncation_order)
        fail(ErrorCode::MissingGamma, "plan table is missing entries up to the truncation order");
    PrecisionScope scope(ctx.total_digits());
    BigComplex w{s.re - 1, s.im};
    // one-ulp slack: boundary points assembled as 1 + radius e^{i phi} round
    if (abs_value(w) > plan.radius * (1 + pow10(-(ctx.working_digits - 2))))
        fail(ErrorCode::OutsideDisk, "|s-1| exceeds the plan radius");

    BigComplex acc{};
    BigReal fact(factorial(plan.truncation_order));
    for (int n = plan.truncation_order; n >= 0; --n) {
        BigComplex coeff = plan.table.entry(n);
        coeff.re /= fact;
        coeff.im /= fact;
        if (n % 2 == 1) coeff = -coeff;
        acc = acc * w + coeff;
        if (n > 0) fact /= n;
    }
    return round_to(acc, ctx.working_digits);
}

BigReal application_a_bound(long q, const PrecisionContext& ctx) {
    if (q < kTaylorMinModulus)
        fail(ErrorCode::QTooSmall, "the remainder bound requires q >= " +
                                       std::to_string(kTaylorMinModulus));
    PrecisionScope scope(ctx.total_digits());
    BigReal bound =
        BigReal(kTaylorBoundNumerator) / pow(BigReal(q), BigReal(kTaylorBoundExponent));
    return round_to(bound, ctx.working_digits);
}

std::vector<RemainderReport> verify_application_a(const TaylorPlan& plan, int sample_count,
                                                  const PrecisionContext& ctx) {
    const DirichletCharacter& chi = plan.chi;
    const long q = chi.modulus();
    if (q < kTaylorMinModulus)
        fail(ErrorCode::QTooSmall,
             "the certificate requires q >= " + std::to_string(kTaylorMinModulus));
    if (chi.is_principal() || !chi.is_primitive())
        fail(ErrorCode::UnsupportedCharacter, "the certificate requires a primitive character");
    if (sample_count < 0) fail(ErrorCode::DomainError, "sample_count must be non-negative");
    {
        PrecisionScope scope(ctx.total_digits());
        if (plan.radius > exp(BigReal(-1)) * (1 + pow10(-(ctx.working_digits - 2))))
            fail(ErrorCode::PreconditionViolated,
                 "the certificate applies on |s-1| <= 1/e only");
    }

    std::vector<RemainderReport> reports;
    if (sample_count == 0) return reports;

    BigReal bound = application_a_bound(q, ctx);
    for (int j = 0; j < sample_count; ++j) {
        BigComplex s;
        {
            PrecisionScope scope(ctx.total_digits());
            BigReal angle = 2 * const_pi() * j / sample_count;
            s = BigComplex{1 + plan.radius * cos(angle), plan.radius * sin(angle)};
        }
        BigComplex direct = l_eval(s, chi, ctx);
        BigComplex truncated = taylor_eval(s, plan, ctx);
        // exactly |direct - truncated| over the reported (rounded) values
        BigReal remainder = abs_value(direct - truncated);
        reports.push_back({s, truncated, direct, remainder, bound});
        if (!reports.back().within_bound())
            throw BoundViolationError(reports.back(),
                                      "measured remainder exceeds the certified bound at sample " +
                                          std::to_string(j));
    }
    return reports;
}

std::vector<RemainderReport> verify_application_a(const DirichletCharacter& chi, int sample_count,
                                                  const PrecisionContext& ctx) {
    const long q = chi.modulus();
    if (q < kTaylorMinModulus)
        fail(ErrorCode::QTooSmall,
             "the certificate requires q >= " + std::to_string(kTaylorMinModulus));
    if (chi.is_principal() || !chi.is_primitive())
        fail(ErrorCode::UnsupportedCharacter, "the certificate requires a primitive character");
    if (sample_count < 0) fail(ErrorCode::DomainError, "sample_count must be non-negative");
    if (sample_count == 0) return {};

    int order;
    BigReal radius;
    {
        PrecisionScope scope(ctx.total_digits());
        order = static_cast<int>(ceil(4 * log(BigReal(q))).convert_to<long>());
        radius = exp(BigReal(-1));
    }
    TaylorPlan plan = make_taylor_plan(chi, order, radius, ctx);
    return verify_application_a(plan, sample_count, ctx);
}

}  // namespace sk
