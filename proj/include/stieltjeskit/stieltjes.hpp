#pragma once

#include <vector>

#include "stieltjeskit/characters.hpp"
#include "stieltjeskit/numerics.hpp"

namespace sk {

inline constexpr int kDefaultMaxIndex = 200;

enum class TableKind { zeta, hurwitz, character };

const char* to_string(TableKind kind);

struct GammaVectorReal {
    std::vector<BigReal> values;
    std::vector<BigReal> error_estimates;
};

struct GammaVectorComplex {
    std::vector<BigComplex> values;
    std::vector<BigReal> error_estimates;
};

/// gamma_n for n = 0..n_max of a fixed L-series kind, with empirical error
/// estimates from the two-precision comparison.  Immutable once built.
class StieltjesTable {
  public:
    static StieltjesTable zeta(int n_max, const PrecisionContext& ctx,
                               int max_index = kDefaultMaxIndex);
    static StieltjesTable hurwitz(int n_max, const Rational& a, const PrecisionContext& ctx,
                                  int max_index = kDefaultMaxIndex);
    static StieltjesTable character(int n_max, const DirichletCharacter& chi,
                                    const PrecisionContext& ctx,
                                    int max_index = kDefaultMaxIndex);

    TableKind kind() const { return kind_; }
    int max_index() const { return static_cast<int>(entries_.size()) - 1; }
    const PrecisionContext& precision() const { return precision_; }
    const Rational& parameter_a() const { return a_; }
    long modulus() const { return q_; }
    long character_index() const { return index_; }

    const BigComplex& entry(int n) const;
    BigReal entry_real(int n) const;
    const BigReal& error_estimate(int n) const;

    /// Test hook: a copy with entry n multiplied by `scale`.
    StieltjesTable perturbed(int n, long scale) const;

  private:
    StieltjesTable() = default;

    TableKind kind_ = TableKind::zeta;
    Rational a_ = 1;
    long q_ = 1;
    long index_ = 0;
    PrecisionContext precision_;
    std::vector<BigComplex> entries_;
    std::vector<BigReal> error_estimates_;
};

/// gamma_n of the Riemann zeta Laurent expansion, by Euler-Maclaurin
/// acceleration of the limit definition, stabilized at two precisions.
BigReal gamma_zeta(int n, const PrecisionContext& ctx, int max_index = kDefaultMaxIndex);

/// gamma_n(a) of the Hurwitz zeta Laurent expansion, 0 < a <= 1.
BigReal gamma_hurwitz(int n, const Rational& a, const PrecisionContext& ctx,
                      int max_index = kDefaultMaxIndex);

/// gamma_n(chi): gamma_zeta for the principal character mod 1; otherwise the
/// binomial convolution of q^{-s} against the Hurwitz expansions at a/q.
/// Imprimitive non-principal characters are supported at n = 0 only (via the
/// inducing character and its Euler factors).
BigComplex gamma_chi(int n, const DirichletCharacter& chi, const PrecisionContext& ctx,
                     int max_index = kDefaultMaxIndex);

/// |gamma_n(chi)| / n!, evaluated in log space for n > 50.
BigReal gamma_over_factorial(int n, const DirichletCharacter& chi, const PrecisionContext& ctx,
                             int max_index = kDefaultMaxIndex);

/// Stabilized vector builders behind the tables.
GammaVectorReal hurwitz_gamma_vector(int n_max, const Rational& a, const PrecisionContext& ctx,
                                     int max_index = kDefaultMaxIndex);
GammaVectorComplex character_gamma_vector(int n_max, const DirichletCharacter& chi,
                                          const PrecisionContext& ctx,
                                          int max_index = kDefaultMaxIndex);

}  // namespace sk
