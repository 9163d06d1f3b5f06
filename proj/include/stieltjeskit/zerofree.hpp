#pragma once

#include "stieltjeskit/numerics.hpp"
#include "stieltjeskit/stieltjes.hpp"

namespace sk {

/// The minorant breakdown of |(s-1) zeta(s)| on the disk |s-1| <= t0 with
/// 0 <= Re(s) <= 1.  A positive margin certifies the disk is zero free.
struct DiskCertificate {
    BigReal t0;
    BigReal head;    // 1 - gamma_0 - sum_{1<=n<=11} |gamma_n|/n! t0^{n+1}
    BigReal tail;    // closed-form geometric majorant of the n >= 12 terms
    BigReal margin;  // head - tail
    PrecisionContext gamma_precision;

    bool valid() const { return margin > 0; }
};

struct ImprovementReport {
    DiskCertificate certificate;
    BigReal sqrt_two;    // radius of the prior zero-free disk
    BigReal area_ratio;  // (t0 / sqrt 2)^2
};

/// Certificate at a fixed radius.  TailDivergence when the geometric ratio
/// reaches 1 (radius >= 5.1513 e^{-0.1728}); MissingGamma when the zeta table
/// lacks entries through n = 11.
DiskCertificate minorant(const BigReal& radius, const StieltjesTable& table,
                         const PrecisionContext& ctx);

/// Bisects for the largest certifiable radius; the returned certificate sits
/// at the lower bracket endpoint, so it is itself valid.
DiskCertificate find_t0(const StieltjesTable& table, const BigReal& tolerance,
                        const PrecisionContext& ctx);

/// Confirms the certified radius beats sqrt(2) and reports the disk area
/// ratio; RegressionDetected otherwise.
ImprovementReport check_improvement(const StieltjesTable& table, const BigReal& tolerance,
                                    const PrecisionContext& ctx);

}  // namespace sk
