#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace leecodes {

// Exact arbitrary-width integer. All counting formulas, power sums and
// determinants are evaluated in this type; results are narrowed to int64
// only at API boundaries that promise it, with an explicit overflow check.
using bigint = boost::multiprecision::cpp_int;

// A point of Z^n.
using LeePoint = std::vector<long long>;

struct enumeration_cap_exceeded : std::runtime_error {
    bigint required;
    long long cap;
    enumeration_cap_exceeded(bigint required_, long long cap_)
        : std::runtime_error("enumeration cap exceeded: ball has " + required_.str() +
                             " points, cap is " + std::to_string(cap_)),
          required(std::move(required_)),
          cap(cap_) {}
};

struct budget_exceeded : std::runtime_error {
    long long examined;
    long long budget;
    budget_exceeded(long long examined_, long long budget_)
        : std::runtime_error("candidate budget exceeded after examining " +
                             std::to_string(examined_) + " of allowed " + std::to_string(budget_)),
          examined(examined_),
          budget(budget_) {}
};

inline long long to_int64_checked(const bigint& v, const char* what) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits: " + v.str());
    return static_cast<long long>(v);
}

// Canonical residue in [0, m).
inline long long mod_nonneg(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// (a * b) mod m without intermediate overflow; a, b need not be reduced.
inline long long mulmod(long long a, long long b, long long m) {
    return mod_nonneg(static_cast<long long>(static_cast<__int128>(a) * b % m), m);
}

inline bigint binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace leecodes
