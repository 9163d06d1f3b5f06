#pragma once

#include <vector>

#include "stieltjeskit/characters.hpp"
#include "stieltjeskit/numerics.hpp"
#include "stieltjeskit/stieltjes.hpp"

namespace sk {

/// Setup for truncated Taylor evaluation of L(s, chi) on |s-1| <= radius.
struct TaylorPlan {
    DirichletCharacter chi;
    int truncation_order;  // N: the Taylor sum runs over n <= N
    BigReal radius;        // epsilon
    StieltjesTable table;  // character table with entries through N
};

/// Builds the plan, computing the gamma table through truncation_order.
TaylorPlan make_taylor_plan(const DirichletCharacter& chi, int truncation_order,
                            const BigReal& radius, const PrecisionContext& ctx);

struct RemainderReport {
    BigComplex s;
    BigComplex truncated_value;
    BigComplex direct_value;
    BigReal measured_remainder;  // |direct - truncated|
    BigReal certified_bound;

    bool within_bound() const { return measured_remainder <= certified_bound; }
};

class BoundViolationError : public Error {
  public:
    BoundViolationError(RemainderReport report, const std::string& what)
        : Error(ErrorCode::BoundViolated, what), report(std::move(report)) {}

    RemainderReport report;
};

/// zeta(s, a) by Euler-Maclaurin summation; valid for Re(s) > -1, s != 1.
BigComplex hurwitz_zeta(const BigComplex& s, const Rational& a, const PrecisionContext& ctx);

/// L(s, chi) assembled from q^{-s} sum_a chi(a) zeta(s, a/q).  For
/// non-principal chi the pole pieces cancel in closed form, so s = 1 is fine;
/// the principal character mod 1 keeps its pole (PoleAtOne).
BigComplex l_eval(const BigComplex& s, const DirichletCharacter& chi, const PrecisionContext& ctx);

/// 1/(s-1) + sum_{n<=N} (-1)^n gamma_n / n! (s-1)^n from a zeta table.
BigComplex zeta_laurent_eval(const BigComplex& s, int truncation_order,
                             const StieltjesTable& table, const PrecisionContext& ctx);

/// sum_{n<=N} (-1)^n gamma_n(chi) / n! (s-1)^n; OutsideDisk when
/// |s-1| > plan.radius.
BigComplex taylor_eval(const BigComplex& s, const TaylorPlan& plan, const PrecisionContext& ctx);

/// The certified Taylor remainder bound 32.3 / q^{2.5}; QTooSmall for q < 150.
BigReal application_a_bound(long q, const PrecisionContext& ctx);

/// Samples sample_count boundary points |s-1| = e^{-1} equally spaced in
/// angle starting from s = 1 + e^{-1}, with N = ceil(4 log q), and reports
/// the measured remainder against the certified bound per point.  Throws
/// BoundViolationError if any sample exceeds the bound.
std::vector<RemainderReport> verify_application_a(const DirichletCharacter& chi, int sample_count,
                                                  const PrecisionContext& ctx);

/// Same certificate run against a caller-supplied plan (the plan radius must
/// not exceed e^{-1} for the bound to apply).
std::vector<RemainderReport> verify_application_a(const TaylorPlan& plan, int sample_count,
                                                  const PrecisionContext& ctx);

}  // namespace sk
