#pragma once

#include <cstdint>
#include <limits>

namespace ringgenus::util {

constexpr bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// ceil(a / b) for a >= 0, b > 0.
constexpr long long ceil_div(long long a, long long b) {
    return (a + b - 1) / b;
}

// a * b, clamped at int64 max instead of overflowing.
constexpr long long mul_sat(long long a, long long b) {
    constexpr long long kMax = std::numeric_limits<long long>::max();
    if (a == 0 || b == 0) return 0;
    if (a > kMax / b) return kMax;
    return a * b;
}

// (d-1)! clamped at int64 max; factorial of a vertex-rotation count.
constexpr long long rotations_of_degree(long long d) {
    long long r = 1;
    for (long long i = 2; i < d; ++i) r = mul_sat(r, i);
    return r;
}

constexpr long long ipow(long long base, long long exp) {
    long long r = 1;
    for (long long i = 0; i < exp; ++i) r = mul_sat(r, base);
    return r;
}

}  // namespace ringgenus::util
