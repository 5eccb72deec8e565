#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace deltacolor {

// log base 2, clamped below at 2.0 so iterated-log schedules never divide by
// values near zero.
inline double log2_clamped(double x) {
    if (x <= 4.0) return 2.0;
    return std::log2(x);
}

// Iterated logarithm: log^(i) applied to k, with log^(0) k := k.
// Uses the clamped log so the result never drops below 2.
inline double iter_log(double k, int i) {
    double v = k;
    for (int j = 0; j < i; ++j) v = log2_clamped(v);
    return v;
}

// log* base 2: number of times log2 must be applied to reach <= 1.
inline int log_star(double x) {
    int c = 0;
    while (x > 1.0) {
        x = std::log2(x);
        ++c;
        if (c > 64) break;
    }
    return c;
}

// ceil(log_base(x)) computed in floating point with a safety nudge.
inline long ceil_log(double base, double x) {
    if (x <= 1.0) return 0;
    double raw = std::log(x) / std::log(base);
    long r = static_cast<long>(std::ceil(raw - 1e-9));
    return std::max(r, 1L);
}

inline long ceil_div(long a, long b) { return (a + b - 1) / b; }

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::uint64_t next_prime_above(std::uint64_t x) {
    std::uint64_t p = x + 1;
    while (!is_prime(p)) ++p;
    return p;
}

// p^e, saturating at 2^63 to keep comparisons against 64-bit universes safe.
inline std::uint64_t ipow_sat(std::uint64_t p, unsigned e) {
    const std::uint64_t cap = std::uint64_t(1) << 63;
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > cap / std::max<std::uint64_t>(p, 1)) return cap;
        r *= p;
    }
    return r;
}

}  // namespace deltacolor
