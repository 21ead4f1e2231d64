#pragma once

// Lee metric on Z^n and Z_q^n, Lee-ball enumeration, and the closed-form
// ball cardinality  #B^n(e) = sum_i 2^i C(n,i) C(e,i).

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "leecodes/common.hpp"

namespace leecodes {

struct BallSpec {
    long long n;  // dimension, >= 1
    long long e;  // radius, >= 0
};

inline void validate_ball_spec(const BallSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("ball dimension must be >= 1");
    if (spec.e < 0) throw std::invalid_argument("ball radius must be >= 0");
}

inline long long lee_distance_z(const LeePoint& x, const LeePoint& y) {
    if (x.size() != y.size()) throw std::invalid_argument("lee_distance_z: dimension mismatch");
    long long d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += std::llabs(x[i] - y[i]);
    return d;
}

inline long long lee_distance_zq(const LeePoint& x, const LeePoint& y, long long q) {
    if (q < 2) throw std::invalid_argument("lee_distance_zq: modulus must be >= 2");
    if (x.size() != y.size()) throw std::invalid_argument("lee_distance_zq: dimension mismatch");
    long long d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] >= q || y[i] < 0 || y[i] >= q)
            throw std::invalid_argument("lee_distance_zq: coordinate out of [0, q)");
        long long a = std::llabs(x[i] - y[i]);
        d += std::min(a, q - a);
    }
    return d;
}

inline bigint ball_size(const BallSpec& spec) {
    validate_ball_spec(spec);
    bigint total = 0;
    bigint pow2 = 1;
    const long long top = std::min(spec.n, spec.e);
    for (long long i = 0; i <= top; ++i) {
        total += pow2 * binomial(spec.n, i) * binomial(spec.e, i);
        pow2 *= 2;
    }
    return total;
}

inline constexpr long long default_enumeration_cap = 10'000'000;

// All points with sum |x_i| <= e, in ascending lexicographic order.
inline std::vector<LeePoint> enumerate_ball(const BallSpec& spec,
                                            long long cap = default_enumeration_cap) {
    validate_ball_spec(spec);
    const bigint size = ball_size(spec);
    if (size > cap) throw enumeration_cap_exceeded(size, cap);

    std::vector<LeePoint> points;
    points.reserve(static_cast<std::size_t>(size));
    LeePoint current(static_cast<std::size_t>(spec.n), 0);
    std::function<void(std::size_t, long long)> emit = [&](std::size_t i, long long budget) {
        if (i == current.size()) {
            points.push_back(current);
            return;
        }
        for (long long v = -budget; v <= budget; ++v) {
            current[i] = v;
            emit(i + 1, budget - std::llabs(v));
        }
        current[i] = 0;
    };
    emit(0, spec.e);
    return points;
}

}  // namespace leecodes
