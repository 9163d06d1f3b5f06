#pragma once

#include "stieltjeskit/numerics.hpp"

namespace sk::test {

inline bool near(const BigReal& a, const BigReal& b, int digits) {
    return BigReal(abs(a - b)) < pow10(-digits);
}

inline bool near(const BigComplex& a, const BigComplex& b, int digits) {
    return abs_value(a - b) < pow10(-digits);
}

}  // namespace sk::test
