#pragma once

// Congruence-based nonexistence certificates for linear perfect radius-2
// Lee codes. For |B^n(2)| = 2n^2 + 2n + 1 = 5m with 5 not dividing m, the
// two power-sum congruences
//     (4n+6)  S_2            == m * sum_{t<5} t^2   (mod 5)
//     (4n+18) S_4 + 12 S_2^2 == m * sum_{t<5} t^4   (mod 5)
// are jointly unsatisfiable exactly when n == 8, 13, 18, 23 (mod 25): the
// first forces S_2 == 0, the second then forces m == 0. scan_modulus
// re-derives the refuted residue set for any small odd prime by exhaustive
// enumeration instead of the closed-form argument.

#include <cmath>
#include <set>
#include <variant>

#include "leecodes/common.hpp"

namespace leecodes {

// sum_{t=0}^{p-1} t^exponent mod p, by literal summation.
inline long long power_sum_mod(long long p, long long exponent) {
    long long total = 0;
    for (long long t = 0; t < p; ++t) {
        long long term = 1;
        for (long long i = 0; i < exponent; ++i) term = mulmod(term, t, p);
        total = (total + term) % p;
    }
    return total;
}

struct NonexistenceCertificate {
    long long n = 0;
    long long p = 0;
    long long modulus = 0;    // p^2
    long long ball_size = 0;  // 2n^2 + 2n + 1
    long long ball_size_mod_p2 = 0;
    long long m_mod_p = 0;  // (ball_size / p) mod p
    long long coeff_q1_mod_p = 0;
    long long coeff_q2_mod_p = 0;
    long long sum_t2_mod_p = 0;
    long long sum_t4_mod_p = 0;
    std::string conclusion;

    bool operator==(const NonexistenceCertificate&) const = default;
};

enum class NotApplicableReason { p2_divides_ball, p_does_not_divide_ball, congruences_consistent };

inline const char* to_string(NotApplicableReason reason) {
    switch (reason) {
        case NotApplicableReason::p2_divides_ball: return "P2_DIVIDES_BALL";
        case NotApplicableReason::p_does_not_divide_ball: return "P_DOES_NOT_DIVIDE_BALL";
        case NotApplicableReason::congruences_consistent: return "CONGRUENCES_CONSISTENT";
    }
    return "UNKNOWN";
}

struct NotApplicable {
    long long n = 0;
    NotApplicableReason reason = NotApplicableReason::congruences_consistent;
    std::string detail;
};

using CertifyResult = std::variant<NonexistenceCertificate, NotApplicable>;

namespace detail {

inline long long radius2_ball_size(long long n) {
    const __int128 wide = static_cast<__int128>(2) * n * n + 2 * n + 1;
    if (wide > std::numeric_limits<long long>::max())
        throw std::overflow_error("2n^2+2n+1 does not fit in 64 bits");
    return static_cast<long long>(wide);
}

inline std::string certificate_conclusion(const NonexistenceCertificate& c) {
    std::ostringstream out;
    out << "|B^" << c.n << "(2)| = " << c.ball_size << " == " << c.ball_size_mod_p2 << " (mod "
        << c.modulus << "), so |G| = " << c.p << "*m with m == " << c.m_mod_p << " (mod " << c.p
        << "); k=1: " << c.coeff_q1_mod_p << "*S2 == m*" << c.sum_t2_mod_p << " == 0 (mod " << c.p
        << ") forces S2 == 0; k=2: " << c.coeff_q2_mod_p << "*S4 + 12*S2^2 == m*" << c.sum_t4_mod_p
        << " (mod " << c.p << ") collapses to 0 == " << c.sum_t4_mod_p
        << "*m, forcing m == 0 (mod " << c.p
        << "); contradiction, so no linear perfect radius-2 Lee code exists in dimension " << c.n
        << ".";
    return out.str();
}

}  // namespace detail

// Decides by direct computation (not by residue lookup) whether the mod-25
// contradiction applies to dimension n and assembles the full trail.
inline CertifyResult certify_nonexistence(long long n) {
    if (n < 3) throw std::invalid_argument("certify_nonexistence: n must be >= 3");
    constexpr long long p = 5;
    constexpr long long p2 = 25;
    const long long ball = detail::radius2_ball_size(n);
    const long long ball_mod_p2 = ball % p2;

    if (ball % p != 0)
        return NotApplicable{n, NotApplicableReason::p_does_not_divide_ball,
                             "|B^n(2)| = " + std::to_string(ball) + " is not divisible by 5"};
    if (ball_mod_p2 == 0)
        return NotApplicable{n, NotApplicableReason::p2_divides_ball,
                             "25 divides |B^n(2)| = " + std::to_string(ball) +
                                 ", so the cofactor m is not coprime to 5"};

    NonexistenceCertificate c;
    c.n = n;
    c.p = p;
    c.modulus = p2;
    c.ball_size = ball;
    c.ball_size_mod_p2 = ball_mod_p2;
    c.m_mod_p = ball_mod_p2 / p;  // exact: p || ball_size
    c.coeff_q1_mod_p = mod_nonneg(4 * (n % p) + 6, p);
    c.coeff_q2_mod_p = mod_nonneg(4 * (n % p) + 18, p);
    c.sum_t2_mod_p = power_sum_mod(p, 2);
    c.sum_t4_mod_p = power_sum_mod(p, 4);

    const bool contradiction = c.m_mod_p != 0 && c.coeff_q1_mod_p != 0 && c.coeff_q2_mod_p == 0 &&
                               c.sum_t2_mod_p == 0 && c.sum_t4_mod_p != 0;
    if (!contradiction)
        return NotApplicable{n, NotApplicableReason::congruences_consistent,
                             "the two power-sum congruences admit a solution with m != 0 (mod 5)"};
    c.conclusion = detail::certificate_conclusion(c);
    return c;
}

// Independent validator: recomputes every field from c.n alone and checks
// the contradiction-shape invariants. Deliberately does not call
// certify_nonexistence.
inline bool verify_certificate(const NonexistenceCertificate& c) {
    if (c.n < 3 || c.p != 5 || c.modulus != 25) return false;
    __int128 ball = static_cast<__int128>(2) * c.n * c.n + 2 * c.n + 1;
    if (ball > std::numeric_limits<long long>::max()) return false;
    if (c.ball_size != static_cast<long long>(ball)) return false;
    if (c.ball_size_mod_p2 != c.ball_size % 25) return false;

    // Divisibility trail: 5 | ball, 25 does not divide ball.
    if (c.ball_size % 5 != 0 || c.ball_size % 25 == 0) return false;
    if (c.m_mod_p != (c.ball_size / 5) % 5 || c.m_mod_p == 0) return false;

    if (c.coeff_q1_mod_p != mod_nonneg(4 * (c.n % 5) + 6, 5)) return false;
    if (c.coeff_q2_mod_p != mod_nonneg(4 * (c.n % 5) + 18, 5)) return false;
    long long t2 = 0;
    long long t4 = 0;
    for (long long t = 0; t < 5; ++t) {
        t2 = (t2 + t * t) % 5;
        t4 = (t4 + t * t * t * t) % 5;
    }
    if (c.sum_t2_mod_p != t2 || c.sum_t4_mod_p != t4) return false;

    // Contradiction shape: k=1 forces S_2 == 0, k=2 then forces m == 0.
    if (c.coeff_q1_mod_p == 0 || c.coeff_q2_mod_p != 0) return false;
    if (c.sum_t2_mod_p != 0 || c.sum_t4_mod_p == 0) return false;

    return c.conclusion == detail::certificate_conclusion(c);
}

enum class ResidueReason { divisibility_failed, congruences_consistent, contradiction };

inline const char* to_string(ResidueReason reason) {
    switch (reason) {
        case ResidueReason::divisibility_failed: return "DIVISIBILITY_FAILED";
        case ResidueReason::congruences_consistent: return "CONGRUENCES_CONSISTENT";
        case ResidueReason::contradiction: return "CONTRADICTION";
    }
    return "UNKNOWN";
}

struct ResidueVerdict {
    long long residue = 0;
    ResidueReason reason = ResidueReason::divisibility_failed;
};

struct ModulusScanReport {
    long long p = 0;
    std::vector<long long> k_set;
    std::vector<long long> residues_refuted;
    std::vector<ResidueVerdict> per_residue;
    std::string soundness_note;
};

inline constexpr long long default_scan_prime_bound = 101;

namespace detail {

inline bool scan_is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Q_k as a function of the free power-sum unknowns, reduced mod p.
struct CongruenceShape {
    long long k;
    long long lead;                  // (4^k + 4n + 2) mod p
    std::vector<long long> cross;    // 2*C(2k,2t) mod p for t = 1..k-1
    long long target_sum;            // sum_{t<p} t^{2k} mod p
};

inline long long evaluate_q(const CongruenceShape& shape, const std::vector<long long>& s,
                            long long p) {
    long long q = mulmod(shape.lead, s[static_cast<std::size_t>(shape.k - 1)], p);
    for (long long t = 1; t <= shape.k - 1; ++t) {
        const long long product = mulmod(s[static_cast<std::size_t>(t - 1)],
                                         s[static_cast<std::size_t>(shape.k - t - 1)], p);
        q = (q + mulmod(shape.cross[static_cast<std::size_t>(t - 1)], product, p)) % p;
    }
    return q;
}

}  // namespace detail

// For every residue r mod p^2 with p || (2r^2+2r+1), decides whether the
// congruence system { Q_k == m * sum_t t^{2k} (mod p) : k in k_set } has a
// solution in the power sums S_2..S_{2 kmax} (free unknowns over Z_p) and
// m in Z_p \ {0}. Unsatisfiable residues are refuted. Treating the power
// sums as free unknowns is conservative: refutation over all S implies
// refutation over realizable S.
inline ModulusScanReport scan_modulus(long long p, std::vector<long long> k_set = {1, 2},
                                      long long prime_bound = default_scan_prime_bound) {
    if (!detail::scan_is_prime(p) || p == 2)
        throw std::invalid_argument("scan_modulus: p must be an odd prime");
    if (p > prime_bound) throw std::invalid_argument("scan_modulus: p exceeds the configured bound");
    if (k_set.empty()) throw std::invalid_argument("scan_modulus: k_set must be nonempty");
    std::sort(k_set.begin(), k_set.end());
    k_set.erase(std::unique(k_set.begin(), k_set.end()), k_set.end());
    if (k_set.front() < 1 || k_set.back() > 6)
        throw std::invalid_argument("scan_modulus: exponents must lie in 1..6");
    const long long k_max = k_set.back();

    ModulusScanReport report;
    report.p = p;
    report.k_set = k_set;
    report.soundness_note =
        "power sums are treated as free unknowns over Z_p: a refuted residue is sound "
        "(no labeling can satisfy the congruences), a consistent one claims nothing";

    std::vector<detail::CongruenceShape> shapes;
    for (long long k : k_set) {
        detail::CongruenceShape shape;
        shape.k = k;
        shape.lead = to_int64_checked(
            (boost::multiprecision::pow(bigint(4), static_cast<unsigned>(k)) + 2) % p, "lead");
        shape.target_sum = power_sum_mod(p, 2 * k);
        for (long long t = 1; t <= k - 1; ++t)
            shape.cross.push_back(to_int64_checked((2 * binomial(2 * k, 2 * t)) % p, "cross"));
        shapes.push_back(std::move(shape));
    }

    const long long p2 = p * p;
    for (long long r = 0; r < p2; ++r) {
        const long long ball_mod_p2 = (2 * r * r + 2 * r + 1) % p2;
        if (ball_mod_p2 % p != 0 || ball_mod_p2 == 0) {
            report.per_residue.push_back({r, ResidueReason::divisibility_failed});
            continue;
        }
        // lead coefficient depends on n only through n mod p
        std::vector<detail::CongruenceShape> local = shapes;
        for (auto& shape : local) shape.lead = (shape.lead + 4 * (r % p)) % p;

        bool satisfiable = false;
        std::vector<long long> s(static_cast<std::size_t>(k_max), 0);
        while (!satisfiable) {
            // valid m for this S assignment: all congruences must agree
            bool feasible = true;
            long long forced_m = -1;  // -1: any nonzero m works so far
            for (const auto& shape : local) {
                const long long q = detail::evaluate_q(shape, s, p);
                if (shape.target_sum == 0) {
                    if (q != 0) feasible = false;
                } else {
                    // m == q / target_sum; Fermat inverse
                    long long inv = 1;
                    for (long long i = 0; i < p - 2; ++i) inv = mulmod(inv, shape.target_sum, p);
                    const long long m = mulmod(q, inv, p);
                    if (m == 0 || (forced_m >= 0 && forced_m != m)) feasible = false;
                    else forced_m = m;
                }
                if (!feasible) break;
            }
            if (feasible) satisfiable = true;

            std::size_t i = 0;
            while (i < s.size() && ++s[i] == p) s[i++] = 0;
            if (i == s.size()) break;
        }
        if (satisfiable) {
            report.per_residue.push_back({r, ResidueReason::congruences_consistent});
        } else {
            report.per_residue.push_back({r, ResidueReason::contradiction});
            report.residues_refuted.push_back(r);
        }
    }
    return report;
}

struct ResidueClasses {
    long long modulus = 25;
    std::vector<long long> classes{8, 13, 18, 23};
};

// The theorem constant: refuted dimension classes mod 25.
inline ResidueClasses residue_classes() { return ResidueClasses{}; }

struct DensityReport {
    long long limit = 0;
    long long count = 0;  // exact integer count, no floating point
    double ratio = 0.0;
    double reference_new = 0.0;    // 4x/25
    double reference_prior = 0.0;  // x / (3 ln(x) / 2), display only
};

inline DensityReport density_count(long long limit) {
    if (limit < 3) throw std::invalid_argument("density_count: limit must be >= 3");
    DensityReport report;
    report.limit = limit;
    const ResidueClasses classes = residue_classes();
    for (long long c : classes.classes)
        if (limit >= c) report.count += (limit - c) / classes.modulus + 1;
    report.ratio = static_cast<double>(report.count) / static_cast<double>(limit);
    report.reference_new = 4.0 * static_cast<double>(limit) / 25.0;
    report.reference_prior =
        static_cast<double>(limit) / (3.0 * std::log(static_cast<double>(limit)) / 2.0);
    return report;
}

struct BoundsRow {
    long long x = 0;
    double bound_new = 0.0;    // 4x/25
    double bound_prior = 0.0;  // x / (3 ln(x) / 2)
};

// Display-only comparison of the density lower bound against the earlier
// logarithmic one; makes no asymptotic claim.
inline BoundsRow compare_bounds(long long x) {
    if (x < 3) throw std::invalid_argument("compare_bounds: x must be >= 3");
    BoundsRow row;
    row.x = x;
    row.bound_new = 4.0 * static_cast<double>(x) / 25.0;
    row.bound_prior = static_cast<double>(x) / (3.0 * std::log(static_cast<double>(x)) / 2.0);
    return row;
}

}  // namespace leecodes
