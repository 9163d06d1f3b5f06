#include "stieltjeskit/bounds.hpp"

#include <algorithm>

#include "stieltjeskit/tail_constants.hpp"

namespace sk {

namespace {

BigReal theta_impl(const BigReal& n, long q) {
    BigReal arg = 2 * q * (n + 1) / const_pi();
    if (arg <= 1) fail(ErrorCode::DomainError, "log(2q(n+1)/pi) must be positive");
    return (n + 1) / log(arg) - 1;
}

BigReal c_from_theta(const BigReal& th, const BigReal& n, long q) {
    if (th <= 0) fail(ErrorCode::DomainError, "C(n,q) requires theta > 0");
    BigReal expo = -(n + 1) * log(th) + th * log(2 * q * th / (const_pi() * exp(BigReal(1))));
    return 2 * sqrt(BigReal(2)) * exp(expo);
}

// log of q^{-1/2} C(n,q) min(1+D, pi^2/6)
BigReal log_combined_impl(long n, long q) {
    BigReal nn(n);
    BigReal th = theta_impl(nn, q);
    BigReal log_c = log(2 * sqrt(BigReal(2))) - (n + 1) * log(th) +
                    th * log(2 * q * th / (const_pi() * exp(BigReal(1))));
    BigReal factor = min(1 + d_from_theta(th), const_pi() * const_pi() / 6);
    return -log(BigReal(q)) / 2 + log_c + log(factor);
}

}  // namespace

BigReal theta(long n, long q, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.total_digits());
    return round_to(theta_impl(BigReal(n), q), ctx.working_digits);
}

BigReal theta_real(const BigReal& n, long q) { return theta_impl(n, q); }

BigReal c_term(long n, long q, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.total_digits());
    BigReal nn(n);
    return round_to(c_from_theta(theta_impl(nn, q), nn, q), ctx.working_digits);
}

BigReal d_from_theta(const BigReal& theta_value) {
    if (theta_value <= 1) fail(ErrorCode::DomainError, "D(n,q) has a pole at theta = 1");
    return pow(BigReal(2), -theta_value - 1) * (theta_value + 1) / (theta_value - 1);
}

BigReal d_term(long n, long q, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.total_digits());
    return round_to(d_from_theta(theta_impl(BigReal(n), q)), ctx.working_digits);
}

Theorem1Bound theorem1_bound(long n, long q, const PrecisionContext& ctx) {
    if (n < 2) fail(ErrorCode::PreconditionViolated, "hypothesis n >= 2 fails");
    if (q < 1) fail(ErrorCode::PreconditionViolated, "hypothesis q >= 1 fails");
    PrecisionScope scope(ctx.total_digits());
    BigReal q_limit = const_pi() / 2 * exp(BigReal(n + 1) / 2) / (n + 1);
    if (BigReal(q) >= q_limit)
        fail(ErrorCode::PreconditionViolated,
             "hypothesis q < (pi/2) e^{(n+1)/2}/(n+1) fails: limit " + q_limit.str(8) +
                 " at n = " + std::to_string(n));

    Theorem1Bound b;
    b.n = n;
    b.q = q;
    BigReal nn(n);
    b.theta = theta_impl(nn, q);
    b.c_term = c_from_theta(b.theta, nn, q);
    b.d_term = d_from_theta(b.theta);
    b.h_value = 2 * q * (nn + 1) / const_pi();
    BigReal factor = min(1 + b.d_term, const_pi() * const_pi() / 6);
    b.combined = b.c_term * factor / sqrt(BigReal(q));

    b.theta = round_to(b.theta, ctx.working_digits);
    b.c_term = round_to(b.c_term, ctx.working_digits);
    b.d_term = round_to(b.d_term, ctx.working_digits);
    b.h_value = round_to(b.h_value, ctx.working_digits);
    b.combined = round_to(b.combined, ctx.working_digits);
    return b;
}

BigReal matsuoka_bound(long n, const PrecisionContext& ctx) {
    if (n < kMatsuokaMinIndex)
        fail(ErrorCode::PreconditionViolated,
             "the bound is stated for n >= " + std::to_string(kMatsuokaMinIndex));
    PrecisionScope scope(ctx.total_digits());
    return round_to(BigReal(kMatsuokaCoefficient) * exp(n * log(log(BigReal(n)))),
                    ctx.working_digits);
}

BigReal log_theorem1_total(long n, long q) {
    return log_combined_impl(n, q) + lgamma(BigReal(n + 1));
}

BigReal log_matsuoka(long n) {
    return log(BigReal(kMatsuokaCoefficient)) + n * log(log(BigReal(n)));
}

long crossover(long q, long n_max, const PrecisionContext& ctx) {
    if (q != 1)
        fail(ErrorCode::PreconditionViolated, "the comparison is defined for q = 1 only");
    if (n_max < 12) fail(ErrorCode::PreconditionViolated, "n_max must be at least 12");
    PrecisionScope scope(ctx.total_digits());

    long last_fail = kMatsuokaMinIndex - 1;
    for (long m = kMatsuokaMinIndex; m <= n_max; ++m)
        if (log_theorem1_total(m, 1) >= log_matsuoka(m)) last_fail = m;
    if (last_fail >= n_max)
        fail(ErrorCode::NoCrossover,
             "the combined bound does not dominate through n_max = " + std::to_string(n_max));
    return last_fail + 1;
}

VerifyReport verify_proof_constants(long n_min, long n_max, const PrecisionContext& ctx,
                                    const std::vector<long>& q_grid) {
    if (n_min < 12) fail(ErrorCode::PreconditionViolated, "the q = 1 chain starts at n = 12");
    if (n_max < n_min) fail(ErrorCode::PreconditionViolated, "n_max must be >= n_min");
    for (long q : q_grid)
        if (q < kTaylorMinModulus)
            fail(ErrorCode::PreconditionViolated, "q-grid entries must be >= 150");
    PrecisionScope scope(ctx.total_digits());

    VerifyReport report;
    auto add_check = [&](const std::string& name, const BigReal& worst, const std::string& at) {
        report.checks.push_back({name, worst >= 0, round_to(worst, ctx.working_digits), at});
    };

    const BigReal theta_floor(kThetaFloorQ1);
    const BigReal d_ceiling(kDCeilingQ1);
    const BigReal exp_coeff(kExponentMargin);
    const BigReal tail_coeff(kTailCoefficient);
    const BigReal pie = const_pi() * exp(BigReal(1));

    BigReal worst_theta, worst_d, worst_exp, worst_tail;
    std::string at_theta, at_d, at_exp, at_tail;
    for (long n = n_min; n <= n_max; ++n) {
        BigReal th = theta_impl(BigReal(n), 1);
        BigReal m_theta = th - theta_floor;
        BigReal m_d = d_ceiling - d_from_theta(th);
        BigReal m_exp = exp_coeff * (n + 1) - th * log(2 * th / pie);
        BigReal m_tail = log(tail_coeff) + (n + 1) * (exp_coeff - log(theta_floor)) -
                         log_combined_impl(n, 1);
        std::string at = "n=" + std::to_string(n);
        if (n == n_min || m_theta < worst_theta) worst_theta = m_theta, at_theta = at;
        if (n == n_min || m_d < worst_d) worst_d = m_d, at_d = at;
        if (n == n_min || m_exp < worst_exp) worst_exp = m_exp, at_exp = at;
        if (n == n_min || m_tail < worst_tail) worst_tail = m_tail, at_tail = at;
    }
    add_check("theta_floor_q1", worst_theta, at_theta);
    add_check("d_ceiling_q1", worst_d, at_d);
    add_check("exponent_coefficient_q1", worst_exp, at_exp);
    add_check("tail_majorant_q1", worst_tail, at_tail);

    const BigReal theta_floor_q(kThetaFloorQGrid);
    const BigReal d_ceiling_q(kDCeilingQGrid);
    const BigReal h_floor(kHFloorQGrid);
    BigReal worst_theta_q, worst_d_q, worst_sum_q, worst_h_q;
    std::string at_theta_q, at_d_q, at_sum_q, at_h_q;
    bool first = true;
    for (long q : q_grid) {
        // integer point n+1 = ceil(4 log q) and the continuous anchor 4 log q
        BigReal anchor = 4 * log(BigReal(q));
        long n_int = ceil(anchor).convert_to<long>() - 1;
        for (int variant = 0; variant < 2; ++variant) {
            BigReal np1 = variant == 0 ? BigReal(n_int + 1) : anchor;
            BigReal th = theta_impl(np1 - 1, q);
            BigReal m_theta = th - theta_floor_q;
            BigReal m_d = d_ceiling_q - d_from_theta(th);
            BigReal m_sum = np1 - th * (log(th) + log(2 * q / pie));
            BigReal h = 2 * q * np1 / const_pi();
            BigReal m_h = h - h_floor;
            std::string at = "q=" + std::to_string(q) +
                             (variant == 0 ? " n=" + std::to_string(n_int) : " (anchor)");
            if (first || m_theta < worst_theta_q) worst_theta_q = m_theta, at_theta_q = at;
            if (first || m_d < worst_d_q) worst_d_q = m_d, at_d_q = at;
            if (first || m_sum < worst_sum_q) worst_sum_q = m_sum, at_sum_q = at;
            if (first || m_h < worst_h_q) worst_h_q = m_h, at_h_q = at;
            first = false;
        }
    }
    add_check("theta_floor_qgrid", worst_theta_q, at_theta_q);
    add_check("d_ceiling_qgrid", worst_d_q, at_d_q);
    add_check("exponent_sum_qgrid", worst_sum_q, at_sum_q);
    add_check("h_floor_qgrid", worst_h_q, at_h_q);
    return report;
}

}  // namespace sk
