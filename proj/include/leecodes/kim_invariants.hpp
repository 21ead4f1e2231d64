#pragma once

// Power sums S_{2t} = sum_i x_i^{2t} and the even-power sum Q_k of the
// multiset { +-x_i, +-2x_i } u { +-x_i +- x_j : i < j }, computed two ways:
// q_direct expands the multiset literally, q_formula evaluates the closed
// form (4^k + 4n + 2) S_{2k} + 2 sum_{t=1}^{k-1} C(2k,2t) S_{2t} S_{2(k-t)}.
// Both sides are exact, so their equality is testable as an identity.

#include <random>

#include "leecodes/common.hpp"

namespace leecodes {

inline bigint power_sum(const std::vector<long long>& labels, long long t) {
    if (t < 1) throw std::invalid_argument("power_sum: t must be >= 1");
    bigint total = 0;
    for (long long v : labels) total += boost::multiprecision::pow(bigint(v), 2 * t);
    return total;
}

inline bigint q_direct(const std::vector<long long>& labels, long long k) {
    if (k < 1) throw std::invalid_argument("q_direct: k must be >= 1");
    const unsigned exp = static_cast<unsigned>(2 * k);
    bigint total = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const bigint x = labels[i];
        total += boost::multiprecision::pow(x, exp);
        total += boost::multiprecision::pow(-x, exp);
        total += boost::multiprecision::pow(2 * x, exp);
        total += boost::multiprecision::pow(-2 * x, exp);
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            const bigint x = labels[i];
            const bigint y = labels[j];
            total += boost::multiprecision::pow(x + y, exp);
            total += boost::multiprecision::pow(x - y, exp);
            total += boost::multiprecision::pow(-x + y, exp);
            total += boost::multiprecision::pow(-x - y, exp);
        }
    }
    return total;
}

inline bigint q_formula(const std::vector<long long>& labels, long long k) {
    if (k < 1) throw std::invalid_argument("q_formula: k must be >= 1");
    const long long n = static_cast<long long>(labels.size());
    bigint total = (boost::multiprecision::pow(bigint(4), static_cast<unsigned>(k)) + 4 * n + 2) *
                   power_sum(labels, k);
    for (long long t = 1; t <= k - 1; ++t)
        total += 2 * binomial(2 * k, 2 * t) * power_sum(labels, t) * power_sum(labels, k - t);
    return total;
}

struct KimCounterexample {
    long long trial;
    std::vector<long long> labels;
    long long k;
    bigint direct;
    bigint formula;
};

struct KimReport {
    long long n = 0;
    long long k_max = 0;
    long long trials = 0;
    long long seed = 0;
    long long label_min = -1000;
    long long label_max = 1000;
    bool all_passed = false;
    std::vector<KimCounterexample> counterexamples;
};

// Checks q_direct == q_formula exactly for seeded pseudo-random label
// vectors with entries in [-1000, 1000], all k <= k_max. Labels are drawn
// from the raw mt19937_64 stream so runs reproduce across platforms.
inline KimReport verify_kim_identity(long long n, long long k_max, long long trials,
                                     long long seed) {
    if (n < 1) throw std::invalid_argument("verify_kim_identity: n must be >= 1");
    if (k_max < 1) throw std::invalid_argument("verify_kim_identity: k_max must be >= 1");
    if (trials < 1) throw std::invalid_argument("verify_kim_identity: trials must be >= 1");
    KimReport report;
    report.n = n;
    report.k_max = k_max;
    report.trials = trials;
    report.seed = seed;
    std::mt19937_64 rng(static_cast<unsigned long long>(seed));
    const unsigned long long span =
        static_cast<unsigned long long>(report.label_max - report.label_min) + 1;
    for (long long trial = 0; trial < trials; ++trial) {
        std::vector<long long> labels(static_cast<std::size_t>(n));
        for (auto& v : labels)
            v = report.label_min + static_cast<long long>(rng() % span);
        for (long long k = 1; k <= k_max; ++k) {
            bigint direct = q_direct(labels, k);
            bigint formula = q_formula(labels, k);
            if (direct != formula)
                report.counterexamples.push_back(
                    KimCounterexample{trial, labels, k, std::move(direct), std::move(formula)});
        }
    }
    report.all_passed = report.counterexamples.empty();
    return report;
}

}  // namespace leecodes
