#pragma once

namespace sk {

// Named constants of the explicit bounds, kept in one place so every module
// and test reads the same literals.
//
// Minorant of |(s-1) zeta(s)| on |s-1| <= T:
//   head(T) = 1 - gamma_0 - sum_{1<=n<=11} |gamma_n|/n! T^{n+1}
//   tail(T) = kTailCoefficient * x^{kTailFirstExponent} / (1 - x),
//             x = T e^{kExponentMargin} / kThetaFloorQ1.
inline constexpr const char* kTailCoefficient = "2.8876";
inline constexpr const char* kExponentMargin = "0.1728";
inline constexpr const char* kThetaFloorQ1 = "5.1513";
inline constexpr int kHeadTerms = 11;          // explicit gamma terms 1..11
inline constexpr int kTailFirstExponent = 13;  // first tail power (the n = 12 term)

// Taylor remainder certificate: 32.3 / q^{2.5} for q >= 150.
inline constexpr const char* kTaylorBoundNumerator = "32.3";
inline constexpr const char* kTaylorBoundExponent = "2.5";
inline constexpr long kTaylorMinModulus = 150;

// Prior bound compared against: 10^{-4} e^{n log log n} for n >= 10.
inline constexpr const char* kMatsuokaCoefficient = "1e-4";
inline constexpr long kMatsuokaMinIndex = 10;

// Proof-constant grid anchors.
inline constexpr const char* kDCeilingQ1 = "0.0209";
inline constexpr const char* kThetaFloorQGrid = "1.65";
inline constexpr const char* kDCeilingQGrid = "0.65";
inline constexpr const char* kHFloorQGrid = "1.45";
inline constexpr const char* kMFloorQ1 = "8.2760";

}  // namespace sk
