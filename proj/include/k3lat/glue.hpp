#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "k3lat/e8.hpp"
#include "k3lat/enumerate.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// ---------------------------------------------------------------------------
// Embedding into II_{2,26}

struct EmbeddingReport {
    bool embeddable = false;
    std::size_t rank = 0;
    std::size_t generator_count = 0;  // minimal number of generators of T'/T
    Signature signature;
    std::size_t target_rank = 28;
};

/// Sufficient condition for a primitive embedding of T (signature (2, q))
/// into the even unimodular lattice of signature (2, target_rank - 2):
/// q <= target_rank - 2 and l(T'/T) + rank(T) < target_rank.
inline EmbeddingReport nikulin_embeddable(const Lattice& t, std::size_t target_rank = 28) {
    EmbeddingReport r;
    r.signature = signature(t);
    if (r.signature.first != 2)
        throw WrongSignature("expected a lattice with exactly 2 positive squares, got signature (" +
                             std::to_string(r.signature.first) + "," +
                             std::to_string(r.signature.second) + ")");
    r.rank = t.rank();
    r.generator_count = discriminant_group(t).generator_count();
    r.target_rank = target_rank;
    r.embeddable = r.signature.second + 2 <= target_rank && r.generator_count + r.rank < target_rank;
    return r;
}

/// T = (-2n) + (-E8) + (-E8) + H + H: the orthogonal complement of a degree
/// 2n polarisation in II_{3,19}.
inline Lattice polarized_orthogonal_lattice(int two_n) {
    const Lattice ne8 = rescale(e8(), -1);
    const Lattice h = hyperbolic_plane();
    return direct_sum({rank_one(Integer(-two_n)), ne8, ne8, h, h});
}

// ---------------------------------------------------------------------------
// Coset counts

/// Reduces a glue label modulo 2n into [0, n] using k ~ -k ~ k + 2n.
inline int reduce_glue_label(long k, int two_n) {
    long r = ((k % two_n) + two_n) % two_n;
    if (2 * r > two_n) r = two_n - r;
    return static_cast<int>(r);
}

/// Counts of a in U' (U = v^perp in E8) with norm(a) < 2, bucketed by glue
/// label k = (x, v) of the lift x = a + (k / 2n) v and by the exact norm of a.
/// Norms are in the positive-definite convention.
struct CosetCountTable {
    int two_n = 0;
    IntVector representative;
    bool primitive = true;
    Integer root_count;
    int k_max = 0;
    std::map<int, NormHistogram> counts;  // every k in [0, k_max] present

    int n() const noexcept { return two_n / 2; }

    /// Label looked up after the symmetry k -> -k, k + 2n when k is outside
    /// the computed range.
    int lookup_label(long k) const {
        long r = ((k % two_n) + two_n) % two_n;
        if (r > k_max) r = two_n - r;
        return static_cast<int>(r);
    }

    std::uint64_t column_total(long k) const {
        std::uint64_t t = 0;
        for (const auto& [norm, c] : counts.at(lookup_label(k))) t += c;
        return t;
    }

    std::uint64_t cell(long k, const Rational& norm) const {
        const auto& col = counts.at(lookup_label(k));
        auto it = col.find(norm);
        return it == col.end() ? 0 : it->second;
    }

    std::vector<std::uint64_t> column_totals() const {
        std::vector<std::uint64_t> out;
        for (int k = 0; k <= k_max; ++k) out.push_back(column_total(k));
        return out;
    }
};

namespace detail {
inline CosetCountTable empty_row(const OrbitClass& orbit, int k_max) {
    if (orbit.two_n <= 0 || orbit.two_n % 2 != 0) throw InvalidArgument("2n must be positive and even");
    CosetCountTable row;
    row.two_n = orbit.two_n;
    row.representative = orbit.representative;
    row.primitive = orbit.primitive;
    row.root_count = orbit.root_count;
    row.k_max = k_max < 0 ? orbit.two_n / 2 : k_max;
    if (row.k_max > 2 * orbit.two_n) throw InvalidArgument("k_max must not exceed 2 * 2n");
    for (int k = 0; k <= row.k_max; ++k) row.counts[k];
    return row;
}
}  // namespace detail

/// Table row by direct E8 enumeration: every x with (x, v) = k in
/// [0, k_max] and norm(x) - k^2/2n < 2 contributes its projection
/// x - ((x, v) / 2n) v.  k_max defaults to n.
inline CosetCountTable coset_count_row(const OrbitClass& orbit, int k_max = -1, unsigned threads = 1) {
    CosetCountTable row = detail::empty_row(orbit, k_max);
    const Integer two_n(row.two_n);
    const IntVector w = simple_root_pairings(orbit.representative);
    const Rational bound = Rational(2) + make_rational(Integer(row.k_max) * row.k_max, two_n);
    const int km = row.k_max;

    using Counts = std::map<int, NormHistogram>;
    Counts counts = accumulate_short_vectors(
        e8_lattice()->gram(), {}, bound, BoundMode::exclusive, threads, Counts{},
        [&](Counts& acc, const IntVector& x, const Rational& norm) {
            Integer k(0);
            for (std::size_t i = 0; i < e8_rank; ++i) k += x[i] * w[i];
            if (k < 0 || k > km) return;
            const Rational projected = norm - make_rational(k * k, two_n);
            if (projected < 2) ++acc[static_cast<int>(k.get_si())][projected];
        },
        [](Counts& acc, Counts&& other) {
            for (auto& [k, h] : other) merge_histograms(acc[k], h);
        });
    for (auto& [k, h] : counts) row.counts[k] = std::move(h);
    return row;
}

namespace detail {
/// Integer vector b with sum b_i w_i = gcd(w).
inline IntVector bezout_vector(const IntVector& w) {
    IntVector b(w.size());
    Integer g(0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        const ExtendedGcd e = extended_gcd(g, w[i]);
        for (std::size_t j = 0; j < i; ++j) b[j] *= e.s;
        b[i] = e.t;
        g = e.g;
    }
    return b;
}
}  // namespace detail

/// Same row computed inside U' directly: for each k, the coset of the
/// projection of a lift with (x, v) = k is enumerated in the rank-7 lattice
/// U with a rational offset.  Independent of the E8 bucketing path.
inline CosetCountTable coset_count_row_via_dual(const OrbitClass& orbit, int k_max = -1,
                                                unsigned threads = 1) {
    CosetCountTable row = detail::empty_row(orbit, k_max);
    const Lattice& u = orbit.complement;
    const IntMatrix& e8g = e8_lattice()->gram();
    const IntVector& v = orbit.representative;
    const IntVector w = simple_root_pairings(v);
    const Integer g = content(w);
    const IntVector lift_unit = detail::bezout_vector(w);
    const RatMatrix u_inverse = rational_inverse(u.gram());
    // Maps E8 coordinates to pairings with the basis of U.
    const RatMatrix to_u_pairings = to_rational(e8g * u.basis().transpose());

    for (int k = 0; k <= row.k_max; ++k) {
        if (!divides(g, Integer(k))) continue;
        const Integer scale = Integer(k) / g;
        RatVector projected(e8_rank);
        for (std::size_t i = 0; i < e8_rank; ++i)
            projected[i] = Rational(scale * lift_unit[i]) - make_rational(Integer(k) * v[i], Integer(row.two_n));
        const RatVector offset = times(times(projected, to_u_pairings), u_inverse);
        EnumQuery q{u.gram(), offset, Rational(2), BoundMode::exclusive, Collect::count_only, threads};
        row.counts[k] = enumerate(q).histogram;
    }
    return row;
}

/// Rows for every orbit with 2n in [from, to], ascending 2n, each 2n in
/// lexicographic order of dominant representatives.
inline std::vector<CosetCountTable> coset_count_table(int from, int to, unsigned threads = 1) {
    std::vector<CosetCountTable> rows;
    for (int two_n = std::max(2, from + (from % 2)); two_n <= to; two_n += 2)
        for (const auto& orbit : orbits_of_norm(two_n, threads))
            rows.push_back(coset_count_row(orbit, -1, threads));
    return rows;
}

// ---------------------------------------------------------------------------
// Restricted form and its divisors

/// Weight 12 of the form on II_{2,26} plus half the number of roots of U.
inline Integer restricted_weight(const Lattice& u) {
    if (u.rank() > 26) throw InvalidArgument("complement rank must be at most 26");
    const Integer roots = root_count(u);
    return 12 + roots / 2;
}

/// Norm in [0, 2) of the dual-coset vectors with glue label k (positive
/// convention): the residue of -k^2/2n modulo 2.
inline Rational coset_norm_residue(long k, int two_n) {
    const Rational r = -make_rational(Integer(k) * k, Integer(two_n));
    return r - 2 * floor(r / 2);
}

struct DivisorClass {
    int k = 0;
    Rational signed_norm;  // norm of a in U', negative convention, in (-2, 0)
    Rational dual_norm;   // norm of t = r - a in T', negative convention
    std::uint64_t count = 0;
    bool vanishing = false;
};

/// All cells with a-norm strictly between -2 and 0, including empty ones.
inline std::vector<DivisorClass> theorem12_divisor_classes(const CosetCountTable& row) {
    std::vector<DivisorClass> out;
    for (int k = 0; k <= std::min(row.n(), row.k_max); ++k) {
        const Rational nu = coset_norm_residue(k, row.two_n);
        if (nu == 0) continue;
        DivisorClass d;
        d.k = k;
        d.signed_norm = -nu;
        d.dual_norm = nu - 2;
        d.count = row.cell(k, nu);
        d.vanishing = d.count > 0;
        out.push_back(d);
    }
    return out;
}

struct Contribution {
    int scale = 1;
    Rational norm;  // norm of scale * t0, negative convention
    int glue_label = 0;
    std::uint64_t count = 0;
};

struct DivisorReport {
    int glue_label = 0;
    Rational norm;        // norm of t0, negative convention
    RatVector direction;  // t0 in the basis of polarized_orthogonal_lattice(2n)
    std::vector<Contribution> contributions;
    std::uint64_t total_multiplicity = 0;
};

/// A primitive t0 in T' with the given glue label and norm: (k0/2n) times
/// the generator of (-2n) plus a primitive vector of the first H.
inline RatVector dual_direction(int two_n, int k0, const Rational& norm0) {
    const Rational even = norm0 + make_rational(Integer(k0) * k0, Integer(two_n));
    if (even.get_den() != 1 || !divides(Integer(2), even.get_num()))
        throw InvalidArgument("norm " + to_string(norm0) + " is not attained in glue class " +
                              std::to_string(k0) + " for 2n = " + std::to_string(two_n));
    RatVector t(1 + 16 + 4, Rational(0));
    t[0] = make_rational(Integer(k0), Integer(two_n));
    t[17] = 1;
    t[18] = even / 2;
    return t;
}

/// Vanishing order of the restricted form along t0^perp: every c*t0 with
/// norm in [-2, 0) contributes the number of a in U' completing it to a root,
/// i.e. the cell (c*k0, 2 - |c^2 norm0|).  The scale at which c*t0 is a root
/// of T itself contributes the k = 0 zero vector.
inline DivisorReport hyperplane_multiplicity(const CosetCountTable& row, int k0, const Rational& norm0) {
    if (sgn(norm0) >= 0 || norm0 < -2)
        throw NormOutOfRange("t0 must have norm in [-2, 0), got " + to_string(norm0));
    DivisorReport r;
    r.glue_label = reduce_glue_label(k0, row.two_n);
    r.norm = norm0;
    r.direction = dual_direction(row.two_n, k0, norm0);
    for (int c = 1;; ++c) {
        const Rational scaled = norm0 * c * c;
        if (scaled < -2) break;
        Contribution part;
        part.scale = c;
        part.norm = scaled;
        part.glue_label = reduce_glue_label(static_cast<long>(c) * k0, row.two_n);
        part.count = row.cell(static_cast<long>(c) * k0, scaled + 2);
        r.total_multiplicity += part.count;
        r.contributions.push_back(part);
    }
    return r;
}

/// One report per primitive class line: each glue label k0 in [0, n] with
/// the unique norm in [-2, 0) attained by T' vectors of that label.
inline std::vector<DivisorReport> divisor_lines(const CosetCountTable& row) {
    std::vector<DivisorReport> out;
    for (int k0 = 0; k0 <= row.n(); ++k0)
        out.push_back(hyperplane_multiplicity(row, k0, coset_norm_residue(k0, row.two_n) - 2));
    return out;
}

/// Lorentzian S inside II_{3,19} that is even and either unimodular or of
/// determinant +-2 with rank = 1 mod 8.
inline bool nikulin_minus2_property(const Lattice& s) {
    const Signature sig = signature(s);
    if (sig.first != 1)
        throw WrongSignature("expected a Lorentzian lattice (one positive square), got signature (" +
                             std::to_string(sig.first) + "," + std::to_string(sig.second) + ")");
    if (!s.is_even() || s.rank() > 20) return false;
    const Integer det = abs(determinant(s));
    return det == 1 || (det == 2 && s.rank() % 8 == 1);
}

}  // namespace k3lat
