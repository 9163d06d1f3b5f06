#include "stieltjeskit/zerofree.hpp"

#include "stieltjeskit/tail_constants.hpp"

namespace sk {

namespace {

DiskCertificate minorant_impl(const BigReal& radius, const StieltjesTable& table,
                              const PrecisionContext& ctx) {
    BigReal x = radius * exp(BigReal(kExponentMargin)) / BigReal(kThetaFloorQ1);
    if (x >= 1)
        fail(ErrorCode::TailDivergence,
             "geometric tail requires T < " + std::string(kThetaFloorQ1) + " e^{-" +
                 kExponentMargin + "}");

    BigReal head = 1 - table.entry_real(0);
    BigReal t_pow = radius;  // T^{n+1} running power
    BigReal fact(1);
    for (int n = 1; n <= kHeadTerms; ++n) {
        t_pow *= radius;
        fact *= n;
        head -= abs(table.entry_real(n)) / fact * t_pow;
    }

    BigReal tail = BigReal(kTailCoefficient) * pow(x, kTailFirstExponent) / (1 - x);

    DiskCertificate cert;
    cert.t0 = round_to(radius, ctx.working_digits);
    cert.head = round_to(head, ctx.working_digits);
    cert.tail = round_to(tail, ctx.working_digits);
    cert.margin = cert.head - cert.tail;  // exactly the difference of the reported fields
    cert.gamma_precision = table.precision();
    return cert;
}

}  // namespace

DiskCertificate minorant(const BigReal& radius, const StieltjesTable& table,
                         const PrecisionContext& ctx) {
    if (table.kind() != TableKind::zeta)
        fail(ErrorCode::DomainError, "the minorant is built from a zeta table");
    if (table.max_index() < kHeadTerms)
        fail(ErrorCode::MissingGamma,
             "zeta table must hold entries through n = " + std::to_string(kHeadTerms));
    if (radius < 0) fail(ErrorCode::DomainError, "radius must be non-negative");
    PrecisionScope scope(ctx.total_digits());
    return minorant_impl(radius, table, ctx);
}

DiskCertificate find_t0(const StieltjesTable& table, const BigReal& tolerance,
                        const PrecisionContext& ctx) {
    if (tolerance <= 0) fail(ErrorCode::PreconditionViolated, "tolerance must be positive");
    if (table.kind() != TableKind::zeta)
        fail(ErrorCode::DomainError, "the minorant is built from a zeta table");
    if (table.max_index() < kHeadTerms)
        fail(ErrorCode::MissingGamma,
             "zeta table must hold entries through n = " + std::to_string(kHeadTerms));
    PrecisionScope scope(ctx.total_digits());

    // margin(T) is strictly decreasing: bracket [0, 4.33] has margin(0) =
    // 1 - gamma_0 > 0 and a hugely negative margin at the right end.
    BigReal lo(0);
    BigReal hi("4.33");
    DiskCertificate best = minorant_impl(lo, table, ctx);
    while (hi - lo > tolerance) {
        BigReal mid = (lo + hi) / 2;
        DiskCertificate cert = minorant_impl(mid, table, ctx);
        if (cert.margin > 0) {
            lo = mid;
            best = cert;
        } else {
            hi = mid;
        }
    }
    return best;
}

ImprovementReport check_improvement(const StieltjesTable& table, const BigReal& tolerance,
                                    const PrecisionContext& ctx) {
    DiskCertificate cert = find_t0(table, tolerance, ctx);
    PrecisionScope scope(ctx.total_digits());
    BigReal sqrt_two = sqrt(BigReal(2));
    if (cert.t0 <= sqrt_two)
        fail(ErrorCode::RegressionDetected,
             "certified radius " + cert.t0.str(12) + " does not exceed sqrt(2)");
    ImprovementReport report;
    report.certificate = cert;
    report.sqrt_two = round_to(sqrt_two, ctx.working_digits);
    report.area_ratio = round_to(cert.t0 * cert.t0 / 2, ctx.working_digits);
    return report;
}

}  // namespace sk
