#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace sk::oracle {

namespace {

// Gaussian elimination with partial pivoting; solves in place.
std::vector<BigReal> solve_linear(std::vector<std::vector<BigReal>> a, std::vector<BigReal> b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r)
            if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (size_t r = col + 1; r < n; ++r) {
            BigReal f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<BigReal> x(n, BigReal(0));
    for (size_t r = n; r-- > 0;) {
        BigReal acc = b[r];
        for (size_t c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return x;
}

}  // namespace

std::vector<BigReal> stieltjes_by_limit(int n_max, long limit, int digits) {
    PrecisionScope scope(digits);
    constexpr int kTailOrders = 4;  // powers of 1/T retained in the model

    // basis size per n: 1 constant + min(k, n+1) log-powers at each 1/T^k
    auto basis_size = [&](int n) {
        int count = 1;
        for (int k = 1; k <= kTailOrders; ++k) count += std::min(k, n + 1);
        return count;
    };
    const int node_count = basis_size(n_max);
    std::vector<long> nodes(node_count);
    for (int j = 0; j < node_count; ++j) nodes[j] = limit >> j;

    // one ascending pass accumulating sum (log m)^n / m, with snapshots of
    // S(T) = sum - (log T)^{n+1}/(n+1) at each node
    std::vector<BigReal> sums(n_max + 1, BigReal(0));
    std::vector<std::vector<BigReal>> snapshots(node_count);
    std::map<long, int> node_of;
    for (int j = 0; j < node_count; ++j) node_of[nodes[j]] = j;
    for (long m = 1; m <= limit; ++m) {
        BigReal lm = log(BigReal(m));
        BigReal t = BigReal(1) / m;
        sums[0] += t;
        for (int n = 1; n <= n_max; ++n) {
            t *= lm;
            sums[n] += t;
        }
        auto it = node_of.find(m);
        if (it != node_of.end()) {
            auto& snap = snapshots[it->second];
            snap.reserve(n_max + 1);
            BigReal lp(1);
            for (int n = 0; n <= n_max; ++n) {
                lp *= lm;  // (log T)^{n+1}
                snap.push_back(sums[n] - lp / (n + 1));
            }
        }
    }

    std::vector<BigReal> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const int nb = basis_size(n);
        std::vector<std::vector<BigReal>> a(nb, std::vector<BigReal>(nb, BigReal(0)));
        std::vector<BigReal> b(nb, BigReal(0));
        for (int r = 0; r < nb; ++r) {
            BigReal t(nodes[r]);
            BigReal lt = log(t);
            a[r][0] = 1;
            int col = 1;
            BigReal tk = t;
            for (int k = 1; k <= kTailOrders; ++k) {
                for (int i = n; i > n - std::min(k, n + 1); --i)
                    a[r][col++] = pow(lt, i) / tk;
                tk *= t;
            }
            b[r] = snapshots[r][n];
        }
        out.push_back(solve_linear(std::move(a), std::move(b))[0]);
    }
    return out;
}

BigReal gauss_digamma(long p, long q) {
    if (p == q) return -const_euler();
    BigReal pi = const_pi();
    BigReal x = pi * p / q;
    BigReal result = -const_euler() - log(BigReal(2) * q) - pi / 2 * cos(x) / sin(x);
    for (long j = 1; j <= (q - 1) / 2; ++j)
        result += 2 * cos(2 * pi * j * p / q) * log(sin(pi * j / q));
    return result;
}

BigReal alternating_sum(const std::function<BigReal(long)>& a, int digits) {
    const long terms = static_cast<long>(std::ceil(digits * 1.31)) + 10;
    BigReal d = pow(3 + 2 * sqrt(BigReal(2)), terms);
    d = (d + 1 / d) / 2;
    BigReal b(-1), c = -d, s(0);
    for (long k = 0; k < terms; ++k) {
        c = b - c;
        s += c * a(k);
        b *= BigReal(2) * (k + terms) * (k - terms) / ((2 * k + 1) * (k + 1));
    }
    return s / d;
}

BigReal beta_series(const BigReal& s, int digits) {
    return alternating_sum([&](long k) { return pow(BigReal(2 * k + 1), -s); }, digits);
}

BigReal zeta_by_eta(const BigReal& s, int digits) {
    BigReal eta = alternating_sum([&](long k) { return pow(BigReal(k + 1), -s); }, digits);
    return eta / (1 - pow(BigReal(2), 1 - s));
}

namespace {

// sum_{j>=start} j^{-sigma} for real sigma > 1
BigReal zeta_tail_from(const BigReal& sigma, long start, int digits) {
    BigReal j(start);
    BigReal acc = pow(j, 1 - sigma) / (sigma - 1) + pow(j, -sigma) / 2;
    BigReal poch = sigma;
    BigReal pw = pow(j, -sigma - 1);
    BigReal inv_j2 = 1 / (j * j);
    BigReal eps = pow10(-(digits + 5));
    for (int i = 1; i <= 200; ++i) {
        BigReal term =
            BigReal(shared_bernoulli_cache().at(2 * i)) / BigReal(factorial(2 * i)) * poch * pw;
        acc += term;
        if (abs(term) < eps) break;
        poch *= (sigma + 2 * i - 1) * (sigma + 2 * i);
        pw *= inv_j2;
    }
    return acc;
}

}  // namespace

BigComplex dirichlet_series_reference(const BigReal& s, const DirichletCharacter& chi,
                                      int digits) {
    PrecisionScope scope(digits + 10);
    const long q = chi.modulus();
    const long kBlocks = 64;

    BigComplex acc{};
    for (long m = 1; m <= kBlocks * q; ++m) {
        auto rot = chi.rotation(m);
        if (!rot) continue;
        BigReal p = pow(BigReal(m), -s);
        BigComplex u = unit_rotation(rot->first, rot->second);
        acc.re += u.re * p;
        acc.im += u.im * p;
    }

    // tail: sum_{k>=1} binom(-s, k) q^{-s-k} m_k sum_{j>=J} j^{-s-k},
    // m_k = sum_a chi(a) a^k
    std::vector<BigComplex> chi_values;
    std::vector<long> units;
    std::vector<BigReal> a_pow;  // a^k, starting at k = 1
    for (long a = 1; a <= q; ++a) {
        auto rot = chi.rotation(a);
        if (!rot) continue;
        chi_values.push_back(unit_rotation(rot->first, rot->second));
        units.push_back(a);
        a_pow.push_back(BigReal(a));
    }
    BigReal binom = 1;  // binom(-s, k) = prod_{j<k} -(s+j)/(j+1)
    BigReal q_pow = pow(BigReal(q), -s);
    BigReal eps = pow10(-(digits + 5));
    int small_streak = 0;
    for (long k = 1; k <= 500; ++k) {
        binom *= -(s + k - 1) / k;
        q_pow /= q;
        BigComplex moment{};
        for (size_t i = 0; i < chi_values.size(); ++i) {
            moment.re += chi_values[i].re * a_pow[i];
            moment.im += chi_values[i].im * a_pow[i];
            a_pow[i] *= units[i];
        }
        BigReal z = zeta_tail_from(s + k, kBlocks, digits);
        BigReal w = binom * q_pow * z;
        BigComplex term{moment.re * w, moment.im * w};
        acc += term;
        if (abs_value(term) < eps * (1 + abs_value(acc))) {
            if (++small_streak >= 3) break;
        } else {
            small_streak = 0;
        }
    }
    return acc;
}

std::vector<Rational> fornberg_weights(int order, int half_width) {
    const int n = 2 * half_width;  // node indices 0..n
    std::vector<long> x(n + 1);
    for (int i = 0; i <= n; ++i) x[i] = i - half_width;

    std::vector<std::vector<Rational>> w(n + 1, std::vector<Rational>(order + 1, Rational(0)));
    Rational c1 = 1;
    Rational c4 = x[0];
    w[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        int mn = std::min(i, order);
        Rational c2 = 1;
        Rational c5 = c4;
        c4 = x[i];
        for (int j = 0; j < i; ++j) {
            Rational c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    w[i][k] = c1 * (k * w[i - 1][k - 1] - c5 * w[i - 1][k]) / c2;
                w[i][0] = -c1 * c5 * w[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) w[j][k] = (c4 * w[j][k] - k * w[j][k - 1]) / c3;
            w[j][0] = c4 * w[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<Rational> out(n + 1);
    for (int i = 0; i <= n; ++i) out[i] = w[i][order];
    return out;
}

BigComplex l_derivative_reference(int order, const DirichletCharacter& chi, int digits) {
    PrecisionScope scope(digits + 10);
    const int half = 8;
    const BigReal h = pow10(-3);
    auto weights = fornberg_weights(order, half);
    BigComplex acc{};
    for (int i = -half; i <= half; ++i) {
        const Rational& w = weights[i + half];
        if (w == 0) continue;
        BigComplex v = dirichlet_series_reference(1 + i * h, chi, digits);
        BigReal wf(w);
        acc.re += wf * v.re;
        acc.im += wf * v.im;
    }
    BigReal scale = pow(h, order);
    return {acc.re / scale, acc.im / scale};
}

BigReal zeta_direct(const BigReal& sigma, long terms, int digits) {
    PrecisionScope scope(digits + 5);
    BigReal acc(0);
    for (long m = 1; m < terms; ++m) acc += pow(BigReal(m), -sigma);
    return acc + zeta_tail_from(sigma, terms, digits);
}

long conductor_bruteforce(const DirichletCharacter& chi) {
    long q = chi.modulus();
    for (long f = 1; f <= q; ++f) {
        if (q % f != 0) continue;
        bool trivial = true;
        for (long a = 1; a <= q && trivial; ++a) {
            if (std::gcd(a, q) != 1 || a % f != 1 % f) continue;
            auto rot = chi.rotation(a);
            if (!rot || rot->first != 0) trivial = false;
        }
        if (trivial) return f;
    }
    return q;
}

}  // namespace sk::oracle
