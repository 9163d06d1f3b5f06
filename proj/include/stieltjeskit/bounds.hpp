#pragma once

#include <string>
#include <vector>

#include "stieltjeskit/numerics.hpp"

namespace sk {

/// The theta/C/D breakdown of the explicit bound on |gamma_n(chi)|/n! and
/// the combined value q^{-1/2} C(n,q) min(1 + D(n,q), pi^2/6).
struct Theorem1Bound {
    long n = 0;
    long q = 1;
    BigReal theta;
    BigReal c_term;
    BigReal d_term;
    BigReal h_value;  // 2q(n+1)/pi
    BigReal combined;
};

struct MatsuokaBound {
    long n = 0;
    BigReal value;  // 10^{-4} e^{n log log n}
};

struct CheckResult {
    std::string name;
    bool pass = false;
    BigReal worst_margin;  // smallest (required - actual) gap; negative = fail
    std::string worst_at;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// theta(n, q) = (n+1)/log(2q(n+1)/pi) - 1; DomainError when the log argument
/// is <= 1.  The real-n overload is the continuous extension used by scans.
BigReal theta(long n, long q, const PrecisionContext& ctx);
BigReal theta_real(const BigReal& n, long q);

/// C(n,q) = 2 sqrt2 exp{-(n+1) log theta + theta log(2q theta/(pi e))},
/// evaluated in log space.
BigReal c_term(long n, long q, const PrecisionContext& ctx);

/// D(n,q) = 2^{-theta-1} (theta+1)/(theta-1); DomainError when theta <= 1.
BigReal d_term(long n, long q, const PrecisionContext& ctx);
BigReal d_from_theta(const BigReal& theta_value);

/// The combined bound; PreconditionViolated names the failed hypothesis
/// (n >= 2 or q < (pi/2) e^{(n+1)/2}/(n+1)).
Theorem1Bound theorem1_bound(long n, long q, const PrecisionContext& ctx);

/// 10^{-4} e^{n log log n} for n >= 10.
BigReal matsuoka_bound(long n, const PrecisionContext& ctx);

/// log of combined * n! and log of the Matsuoka bound, for overflow-free
/// comparisons at large n.  Evaluated at the current default precision.
BigReal log_theorem1_total(long n, long q);
BigReal log_matsuoka(long n);

/// Smallest n in [10, n_max] from which the combined bound times n! stays
/// below the Matsuoka bound through n_max; NoCrossover if none.
long crossover(long q, long n_max, const PrecisionContext& ctx);

/// Grid verification of the proof-chain inequalities; each check reports its
/// worst margin.  q_grid rows are evaluated at n+1 = ceil(4 log q) and at the
/// continuous anchor n+1 = 4 log q.
VerifyReport verify_proof_constants(long n_min, long n_max, const PrecisionContext& ctx,
                                    const std::vector<long>& q_grid = {150, 151, 500, 10000});

}  // namespace sk
