#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "k3lat/enumerate.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/// The positive-definite E8 lattice in its Bourbaki simple-root basis.  All
/// E8 vectors in this module are coordinate vectors in that basis.
inline const std::shared_ptr<const Lattice>& e8_lattice() {
    static const auto lattice = std::make_shared<const Lattice>(e8());
    return lattice;
}

inline constexpr std::size_t e8_rank = 8;

/// 2a1 + 3a2 + 4a3 + 6a4 + 5a5 + 4a6 + 3a7 + 2a8.
inline IntVector e8_highest_root() { return make_ivec({2, 3, 4, 6, 5, 4, 3, 2}); }

/// Pairings (x, alpha_i) with the simple roots, i.e. gram * x.
inline IntVector simple_root_pairings(const IntVector& x) {
    return times(x, e8_lattice()->gram());
}

/// Reflection in the i-th simple root: x - (x, alpha_i) alpha_i.
inline IntVector reflect(IntVector x, std::size_t i) {
    const IntVector p = simple_root_pairings(x);
    x[i] -= p[i];
    return x;
}

namespace detail {

inline const std::array<std::vector<std::size_t>, e8_rank>& e8_neighbours() {
    static const auto adj = [] {
        std::array<std::vector<std::size_t>, e8_rank> a;
        const auto& g = e8_lattice()->gram();
        for (std::size_t i = 0; i < e8_rank; ++i)
            for (std::size_t j = 0; j < e8_rank; ++j)
                if (i != j && g(i, j) != 0) a[i].push_back(j);
        return a;
    }();
    return adj;
}

// Reflecting at alpha_i negates pairing i and adds it to each neighbour
// (Cartan entries are -1 off the diagonal), so pairings update locally.
template <class Int>
void make_dominant(std::array<Int, e8_rank>& x, std::array<Int, e8_rank>& p) {
    const auto& adj = e8_neighbours();
    while (true) {
        std::size_t i = 0;
        while (i < e8_rank && !(p[i] < 0)) ++i;
        if (i == e8_rank) return;
        const Int pi = p[i];
        x[i] -= pi;
        p[i] = -pi;
        for (std::size_t j : adj[i]) p[j] += pi;
    }
}

}  // namespace detail

/// The unique Weyl-orbit element with nonnegative simple-root pairings,
/// reached by reflecting at the lowest-index simple root with negative
/// pairing until none remains.
inline IntVector dominant_representative(const IntVector& x) {
    if (x.size() != e8_rank) throw InvalidArgument("E8 vectors have 8 coordinates");
    if (content(x) == 0) throw ZeroVector();
    const IntVector p0 = simple_root_pairings(x);

    // Entries stay bounded by the norm, so machine integers suffice unless the
    // input is huge.
    constexpr long small = 1L << 28;
    bool fits = true;
    for (std::size_t i = 0; i < e8_rank; ++i)
        fits = fits && abs(x[i]) < small && abs(p0[i]) < small;
    if (fits) {
        std::array<std::int64_t, e8_rank> xs{}, ps{};
        for (std::size_t i = 0; i < e8_rank; ++i) {
            xs[i] = x[i].get_si();
            ps[i] = p0[i].get_si();
        }
        detail::make_dominant(xs, ps);
        IntVector out(e8_rank);
        for (std::size_t i = 0; i < e8_rank; ++i) out[i] = static_cast<long>(xs[i]);
        return out;
    }
    std::array<Integer, e8_rank> xs, ps;
    for (std::size_t i = 0; i < e8_rank; ++i) {
        xs[i] = x[i];
        ps[i] = p0[i];
    }
    detail::make_dominant(xs, ps);
    return IntVector(xs.begin(), xs.end());
}

/// v^perp inside E8 with a Hermite-form basis.  v need not be primitive;
/// v^perp equals (v / content(v))^perp.
inline Lattice complement_of(const IntVector& v) {
    if (v.size() != e8_rank) throw InvalidArgument("E8 vectors have 8 coordinates");
    const Integer g = content(v);
    if (g == 0) throw ZeroVector();
    IntMatrix sub(1, e8_rank);
    for (std::size_t i = 0; i < e8_rank; ++i) sub(0, i) = v[i] / g;
    return orthogonal_complement(e8_lattice(), sub);
}

struct OrbitClass {
    int two_n = 0;
    IntVector representative;
    bool primitive = true;
    std::uint64_t orbit_size = 0;
    Lattice complement;
    Integer root_count;
};

inline OrbitClass make_orbit_class(int two_n, const IntVector& representative, std::uint64_t size,
                                   unsigned threads = 1) {
    OrbitClass o;
    o.two_n = two_n;
    o.representative = representative;
    o.primitive = content(representative) == 1;
    o.orbit_size = size;
    o.complement = complement_of(representative);
    o.root_count = root_count(o.complement, threads);
    return o;
}

/// Weyl orbits of E8 vectors of norm two_n, ordered lexicographically by
/// dominant representative.  Odd norms have no vectors and give an empty
/// list.
inline std::vector<OrbitClass> orbits_of_norm(int two_n, unsigned threads = 1) {
    if (two_n <= 0) throw InvalidArgument("norm must be positive");
    if (two_n % 2 != 0) return {};
    using Table = std::map<IntVector, std::uint64_t>;
    const Rational target(two_n);
    Table reps = accumulate_short_vectors(
        e8_lattice()->gram(), {}, target, BoundMode::inclusive, threads, Table{},
        [&target](Table& acc, const IntVector& x, const Rational& norm) {
            if (norm == target) ++acc[dominant_representative(x)];
        },
        [](Table& acc, Table&& other) {
            for (auto& [rep, n] : other) acc[rep] += n;
        });
    std::vector<OrbitClass> out;
    for (const auto& [rep, n] : reps) out.push_back(make_orbit_class(two_n, rep, n, threads));
    return out;
}

}  // namespace k3lat
