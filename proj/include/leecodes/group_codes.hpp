#pragma once

// Finite abelian groups in invariant-factor form, homomorphisms Z^n -> G
// given by the images of the standard basis, the perfect-labeling criterion
// (phi restricted to the Lee ball is a bijection onto G), prime projections,
// kernel sublattices and Construction A lifts.

#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "leecodes/lee_core.hpp"

namespace leecodes {

struct FiniteAbelianGroup {
    // d_1 | d_2 | ... | d_k, each >= 2. Empty means the trivial group.
    std::vector<long long> invariant_factors;

    bool operator==(const FiniteAbelianGroup&) const = default;
};

inline void validate_group(const FiniteAbelianGroup& g) {
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
        if (g.invariant_factors[i] < 2)
            throw std::invalid_argument("invariant factors must be >= 2");
        if (i > 0 && g.invariant_factors[i] % g.invariant_factors[i - 1] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
}

inline long long group_order(const FiniteAbelianGroup& g) {
    validate_group(g);
    __int128 order = 1;
    for (long long d : g.invariant_factors) {
        order *= d;
        if (order > std::numeric_limits<long long>::max())
            throw std::overflow_error("group order does not fit in 64 bits");
    }
    return static_cast<long long>(order);
}

struct GroupElement {
    std::vector<long long> residues;  // residue i in [0, d_i)

    bool operator==(const GroupElement&) const = default;
};

inline GroupElement identity_element(const FiniteAbelianGroup& g) {
    return GroupElement{std::vector<long long>(g.invariant_factors.size(), 0)};
}

inline void validate_element(const FiniteAbelianGroup& g, const GroupElement& x) {
    if (x.residues.size() != g.invariant_factors.size())
        throw std::invalid_argument("group element has wrong number of residues");
    for (std::size_t i = 0; i < x.residues.size(); ++i)
        if (x.residues[i] < 0 || x.residues[i] >= g.invariant_factors[i])
            throw std::invalid_argument("group element residue out of range");
}

inline GroupElement add(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    GroupElement r = a;
    for (std::size_t i = 0; i < r.residues.size(); ++i)
        r.residues[i] = (r.residues[i] + b.residues[i]) % g.invariant_factors[i];
    return r;
}

inline GroupElement negate(const FiniteAbelianGroup& g, const GroupElement& a) {
    GroupElement r = a;
    for (std::size_t i = 0; i < r.residues.size(); ++i)
        r.residues[i] = a.residues[i] == 0 ? 0 : g.invariant_factors[i] - a.residues[i];
    return r;
}

inline GroupElement scale(const FiniteAbelianGroup& g, long long c, const GroupElement& a) {
    GroupElement r = a;
    for (std::size_t i = 0; i < r.residues.size(); ++i)
        r.residues[i] = mulmod(c, a.residues[i], g.invariant_factors[i]);
    return r;
}

// Mixed-radix index of an element, last invariant factor fastest.
inline long long encode_element(const FiniteAbelianGroup& g, const GroupElement& x) {
    long long idx = 0;
    for (std::size_t i = 0; i < x.residues.size(); ++i)
        idx = idx * g.invariant_factors[i] + x.residues[i];
    return idx;
}

inline GroupElement decode_element(const FiniteAbelianGroup& g, long long idx) {
    GroupElement x = identity_element(g);
    for (std::size_t i = g.invariant_factors.size(); i-- > 0;) {
        x.residues[i] = idx % g.invariant_factors[i];
        idx /= g.invariant_factors[i];
    }
    return x;
}

struct LatticeHom {
    FiniteAbelianGroup group;
    std::vector<GroupElement> images;  // images of e_1, ..., e_n

    bool operator==(const LatticeHom&) const = default;
};

inline void validate_hom(const LatticeHom& h) {
    validate_group(h.group);
    if (h.images.empty()) throw std::invalid_argument("homomorphism needs at least one image");
    for (const GroupElement& img : h.images) validate_element(h.group, img);
}

inline long long hom_dimension(const LatticeHom& h) {
    return static_cast<long long>(h.images.size());
}

inline GroupElement apply_hom(const LatticeHom& h, const LeePoint& x) {
    if (x.size() != h.images.size()) throw std::invalid_argument("apply_hom: dimension mismatch");
    const std::size_t k = h.group.invariant_factors.size();
    GroupElement r = identity_element(h.group);
    for (std::size_t j = 0; j < k; ++j) {
        const long long d = h.group.invariant_factors[j];
        long long acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            acc = (acc + mulmod(mod_nonneg(x[i], d), h.images[i].residues[j], d)) % d;
        r.residues[j] = acc;
    }
    return r;
}

struct CollisionWitness {
    LeePoint a;
    LeePoint b;
    GroupElement value;
};

struct CardinalityMismatch {
    long long group_order;
    bigint ball_points;
};

struct PerfectCheck {
    bool perfect = false;
    std::optional<CollisionWitness> collision;
    std::optional<CardinalityMismatch> mismatch;
};

// Lemma-style criterion: phi restricted to B^n(e) is a bijection onto G.
// Since |B| is compared against |G| first, pairwise-distinct images suffice.
inline PerfectCheck is_perfect_labeling(const LatticeHom& h, long long e,
                                        long long cap = default_enumeration_cap) {
    validate_hom(h);
    const BallSpec spec{hom_dimension(h), e};
    const bigint ball = ball_size(spec);
    const long long order = group_order(h.group);
    PerfectCheck result;
    if (ball != order) {
        result.mismatch = CardinalityMismatch{order, ball};
        return result;
    }
    const std::vector<LeePoint> points = enumerate_ball(spec, cap);
    std::vector<long long> seen(static_cast<std::size_t>(order), -1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const GroupElement g = apply_hom(h, points[i]);
        const long long idx = encode_element(h.group, g);
        if (seen[idx] >= 0) {
            result.collision = CollisionWitness{points[seen[idx]], points[i], g};
            return result;
        }
        seen[idx] = static_cast<long long>(i);
    }
    result.perfect = true;
    return result;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct PrimeProjection {
    long long p;
    FiniteAbelianGroup source;
    std::size_t coordinate;  // invariant-factor coordinate reduced mod p
    long long cofactor;      // |G| / p
};

// Explicit epimorphism G -> Z_p: reduce one p-divisible invariant-factor
// coordinate mod p. Picks the largest factor divisible by p, ties broken
// by highest index.
inline PrimeProjection project_to_prime(const FiniteAbelianGroup& g, long long p) {
    validate_group(g);
    if (!is_prime(p)) throw std::invalid_argument("project_to_prime: p must be prime");
    const long long order = group_order(g);
    if (order % p != 0) throw std::invalid_argument("project_to_prime: p does not divide |G|");
    std::size_t coordinate = g.invariant_factors.size();
    long long best = 0;
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
        if (g.invariant_factors[i] % p == 0 && g.invariant_factors[i] >= best) {
            best = g.invariant_factors[i];
            coordinate = i;
        }
    }
    if (coordinate == g.invariant_factors.size())
        throw std::logic_error("no invariant factor divisible by p");
    return PrimeProjection{p, g, coordinate, order / p};
}

inline long long apply_projection(const PrimeProjection& proj, const GroupElement& x) {
    return x.residues.at(proj.coordinate) % proj.p;
}

// Multiplicity of each residue of Z_p among { psi(phi(b)) : b in B^n(e) }.
inline std::vector<long long> ball_image_multiset(const LatticeHom& h, const PrimeProjection& proj,
                                                  long long e,
                                                  long long cap = default_enumeration_cap) {
    validate_hom(h);
    if (proj.source != h.group)
        throw std::invalid_argument("ball_image_multiset: projection group mismatch");
    std::vector<long long> counts(static_cast<std::size_t>(proj.p), 0);
    for (const LeePoint& b : enumerate_ball({hom_dimension(h), e}, cap))
        ++counts[apply_projection(proj, apply_hom(h, b))];
    return counts;
}

namespace detail {

using Matrix = std::vector<std::vector<bigint>>;

inline Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<bigint>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline void row_axpy(std::vector<bigint>& target, const std::vector<bigint>& source,
                     const bigint& q) {
    for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

inline bigint floor_div(const bigint& a, const bigint& b) {
    bigint q = a / b;  // truncates toward zero
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// In-place row echelon form over Z via unimodular row operations; pivots
// positive. The same operations are mirrored onto *transform when given.
// Returns the rank.
inline std::size_t row_echelon(Matrix& a, Matrix* transform) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = pivot_row; i < rows; ++i)
                if (a[i][col] != 0 && (best == rows || abs(a[i][col]) < abs(a[best][col])))
                    best = i;
            if (best == rows) break;
            if (best != pivot_row) {
                std::swap(a[best], a[pivot_row]);
                if (transform) std::swap((*transform)[best], (*transform)[pivot_row]);
            }
            bool cleared = true;
            for (std::size_t i = pivot_row + 1; i < rows; ++i) {
                if (a[i][col] == 0) continue;
                const bigint q = a[i][col] / a[pivot_row][col];
                if (q != 0) {
                    row_axpy(a[i], a[pivot_row], q);
                    if (transform) row_axpy((*transform)[i], (*transform)[pivot_row], q);
                }
                if (a[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a[pivot_row][col] == 0) continue;
        if (a[pivot_row][col] < 0) {
            for (bigint& v : a[pivot_row]) v = -v;
            if (transform)
                for (bigint& v : (*transform)[pivot_row]) v = -v;
        }
        ++pivot_row;
    }
    return pivot_row;
}

// Reduce entries above each pivot into [0, pivot), completing the HNF.
inline void reduce_above_pivots(Matrix& a) {
    const std::size_t rows = a.size();
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t c = 0;
        const std::size_t cols = a[r].size();
        while (c < cols && a[r][c] == 0) ++c;
        if (c == cols) continue;
        for (std::size_t j = 0; j < r; ++j) {
            const bigint q = floor_div(a[j][c], a[r][c]);
            if (q != 0) row_axpy(a[j], a[r], q);
        }
    }
}

// Basis (as rows) of { v in Z^m : v * a = 0 }.
inline Matrix left_kernel(Matrix a) {
    const std::size_t m = a.size();
    Matrix u = identity_matrix(m);
    const std::size_t rank = row_echelon(a, &u);
    return Matrix(u.begin() + static_cast<std::ptrdiff_t>(rank), u.end());
}

// Fraction-free (Bareiss) determinant.
inline bigint determinant(Matrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    bigint prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace detail

struct IntegerLattice {
    // n x n basis in row Hermite normal form; rows generate the lattice.
    std::vector<std::vector<bigint>> basis;

    bool operator==(const IntegerLattice&) const = default;
};

inline bigint lattice_determinant(const IntegerLattice& lattice) {
    return abs(detail::determinant(lattice.basis));
}

// Kernel sublattice { x in Z^n : phi(x) = 0 }, canonical HNF basis.
// Solutions are the x-parts of the left kernel of the stacked matrix
// [ images ; diag(d_1..d_k) ].
inline IntegerLattice kernel_lattice(const LatticeHom& h) {
    validate_hom(h);
    const std::size_t n = h.images.size();
    const std::size_t k = h.group.invariant_factors.size();
    detail::Matrix stacked(n + k, std::vector<bigint>(k, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) stacked[i][j] = h.images[i].residues[j];
    for (std::size_t j = 0; j < k; ++j) stacked[n + j][j] = h.group.invariant_factors[j];

    const detail::Matrix kernel = detail::left_kernel(std::move(stacked));
    if (kernel.size() != n) throw std::logic_error("kernel lattice has unexpected rank");
    detail::Matrix basis(n, std::vector<bigint>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis[i][j] = kernel[i][j];

    if (detail::row_echelon(basis, nullptr) != n)
        throw std::logic_error("kernel lattice basis is singular");
    detail::reduce_above_pivots(basis);
    return IntegerLattice{std::move(basis)};
}

// Construction A: the lift { x in Z^n : x mod q in C } of the code
// C = ker(h) over Z_q. Requires every image to have order dividing q so
// that h is well defined on Z_q^n; the lift is then the kernel of the
// corresponding homomorphism on Z^n.
inline IntegerLattice construction_a_lift(const LatticeHom& h, long long q) {
    validate_hom(h);
    if (q < 2) throw std::invalid_argument("construction_a_lift: modulus must be >= 2");
    for (const GroupElement& img : h.images)
        for (std::size_t j = 0; j < img.residues.size(); ++j)
            if (mulmod(q, img.residues[j], h.group.invariant_factors[j]) != 0)
                throw std::invalid_argument(
                    "construction_a_lift: image order does not divide q; "
                    "the code is not a subgroup of Z_q^n");
    return kernel_lattice(h);
}

// G = Z_{2n+1} with images 1, 2, ..., n: the classical radius-1 perfect
// labeling (the ball {0, +-e_i} maps onto {0, +-1, ..., +-n} = Z_{2n+1}).
inline LatticeHom pl_n1_construction(long long n) {
    if (n < 1) throw std::invalid_argument("pl_n1_construction: n must be >= 1");
    LatticeHom h;
    h.group = FiniteAbelianGroup{{2 * n + 1}};
    for (long long i = 1; i <= n; ++i) h.images.push_back(GroupElement{{i}});
    return h;
}

inline constexpr long long default_trial_division_bound = 1'000'000;

namespace detail {

inline std::vector<std::pair<long long, int>> factorize(long long value, long long bound) {
    std::vector<std::pair<long long, int>> factors;
    for (long long p = 2; p <= bound && p * p <= value; ++p) {
        if (value % p != 0) continue;
        int exp = 0;
        while (value % p == 0) {
            value /= p;
            ++exp;
        }
        factors.emplace_back(p, exp);
    }
    if (value > 1) {
        // No factor <= bound remains, so a leftover below bound^2 is prime.
        if (value > bound * bound)
            throw std::invalid_argument("factorization exceeds the trial-division bound");
        factors.emplace_back(value, 1);
    }
    return factors;
}

inline void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                           std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    partitions_rec(n, n, current, out);
    return out;
}

}  // namespace detail

// All isomorphism classes of abelian groups of the given order, each once,
// in canonical invariant-factor form. One class per choice of a partition
// of every prime exponent.
inline std::vector<FiniteAbelianGroup> enumerate_abelian_groups(
    long long order, long long trial_bound = default_trial_division_bound) {
    if (order < 1) throw std::invalid_argument("group order must be >= 1");
    if (order == 1) return {FiniteAbelianGroup{}};
    const auto factors = detail::factorize(order, trial_bound);

    std::vector<std::vector<std::vector<int>>> per_prime;
    per_prime.reserve(factors.size());
    for (const auto& [p, exp] : factors) per_prime.push_back(detail::partitions(exp));

    std::vector<FiniteAbelianGroup> groups;
    std::vector<std::size_t> choice(factors.size(), 0);
    while (true) {
        std::size_t max_len = 0;
        for (std::size_t i = 0; i < factors.size(); ++i)
            max_len = std::max(max_len, per_prime[i][choice[i]].size());
        // m_j = prod_p p^(j-th largest exponent); descending chain m_0 >= m_1 >= ...
        std::vector<long long> descending(max_len, 1);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto& parts = per_prime[i][choice[i]];
            for (std::size_t j = 0; j < parts.size(); ++j)
                for (int t = 0; t < parts[j]; ++t) descending[j] *= factors[i].first;
        }
        FiniteAbelianGroup g;
        g.invariant_factors.assign(descending.rbegin(), descending.rend());
        validate_group(g);
        groups.push_back(std::move(g));

        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == per_prime[i].size()) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        if (a.invariant_factors.size() != b.invariant_factors.size())
            return a.invariant_factors.size() < b.invariant_factors.size();
        return a.invariant_factors < b.invariant_factors;
    });
    return groups;
}

// Homomorphism text format: group as comma-separated invariant factors,
// images as semicolon-separated comma-lists, e.g. group "5,5" with images
// "1,0;0,1;2,3".

inline std::string format_group(const FiniteAbelianGroup& g) {
    std::ostringstream out;
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
        if (i) out << ',';
        out << g.invariant_factors[i];
    }
    return out.str();
}

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

inline long long parse_int(const std::string& text) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    if (pos != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
    return value;
}

}  // namespace detail

inline FiniteAbelianGroup parse_group(const std::string& text) {
    FiniteAbelianGroup g;
    for (const std::string& part : detail::split(text, ','))
        g.invariant_factors.push_back(detail::parse_int(part));
    validate_group(g);
    return g;
}

inline std::string format_images(const LatticeHom& h) {
    std::ostringstream out;
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        if (i) out << ';';
        for (std::size_t j = 0; j < h.images[i].residues.size(); ++j) {
            if (j) out << ',';
            out << h.images[i].residues[j];
        }
    }
    return out.str();
}

// Residues are reduced into [0, d_i), so negative input is accepted.
inline LatticeHom parse_hom(const std::string& group_text, const std::string& images_text) {
    LatticeHom h;
    h.group = parse_group(group_text);
    const std::size_t k = h.group.invariant_factors.size();
    for (const std::string& image_text : detail::split(images_text, ';')) {
        const std::vector<std::string> parts = detail::split(image_text, ',');
        if (parts.size() != k)
            throw std::invalid_argument("image '" + image_text + "' needs " + std::to_string(k) +
                                        " residues");
        GroupElement img;
        for (std::size_t j = 0; j < k; ++j)
            img.residues.push_back(
                mod_nonneg(detail::parse_int(parts[j]), h.group.invariant_factors[j]));
        h.images.push_back(std::move(img));
    }
    validate_hom(h);
    return h;
}

}  // namespace leecodes
