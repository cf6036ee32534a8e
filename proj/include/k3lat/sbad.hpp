#pragma once

#include <cstddef>
#include <vector>

#include "k3lat/error.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/// A candidate S1 = <S, D>: D given by its pairings with the basis of S and
/// its own norm.
struct ExtensionWitness {
    IntMatrix s_gram;
    IntVector pairings;
    Integer d_norm;

    std::size_t rank() const noexcept { return s_gram.rows(); }

    /// S Gram bordered by the pairing vector and D's norm.
    IntMatrix s1_gram() const {
        const std::size_t r = rank();
        if (pairings.size() != r) throw InvalidArgument("pairing vector length must equal rank of S");
        IntMatrix g(r + 1, r + 1);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) g(i, j) = s_gram(i, j);
            g(i, r) = pairings[i];
            g(r, i) = pairings[i];
        }
        g(r, r) = d_norm;
        return g;
    }
};

struct SbadVerdict {
    Integer det_s;
    Integer det_s1;
    Signature s1_signature;
    bool lorentzian = false;  // S1 has signature (1, rank S)
    bool sbad = false;
};

/// S1 witnesses S-badness iff it is Lorentzian of rank rank(S) + 1 with
/// |det S1| <= 2 |det S|.  A bordering with det S1 = 0 raises
/// DegenerateExtension instead of returning false.
inline SbadVerdict is_sbad_extension(const ExtensionWitness& w) {
    if (!w.s_gram.is_symmetric()) throw InvalidArgument("S Gram matrix must be symmetric");
    SbadVerdict v;
    v.det_s = bareiss_determinant(w.s_gram);
    if (v.det_s == 0) throw DegenerateLattice();
    const IntMatrix s1 = w.s1_gram();
    v.det_s1 = bareiss_determinant(s1);
    if (v.det_s1 == 0) throw DegenerateExtension();
    v.s1_signature = inertia(s1);
    v.lorentzian = v.s1_signature.first == 1 && v.s1_signature.second == w.rank();
    v.sbad = v.lorentzian && abs(v.det_s1) <= 2 * abs(v.det_s);
    return v;
}

/// -2 <= d_norm - k^2/2n < 0, compared exactly.
inline bool polarized_bad(const Integer& n, const Integer& d_norm, const Integer& k) {
    if (n <= 0) throw InvalidArgument("polarisation half-degree n must be positive");
    const Rational projected = Rational(d_norm) - make_rational(k * k, 2 * n);
    return projected >= -2 && sgn(projected) < 0;
}

/// k reduced modulo 2n into (-n, n], then made nonnegative.
inline Integer normalize_degree(const Integer& n, const Integer& k) {
    if (n <= 0) throw InvalidArgument("polarisation half-degree n must be positive");
    const Integer two_n = 2 * n;
    Integer r = mod(k, two_n);
    if (r > n) r -= two_n;
    return abs(r);
}

/// Even d with -2 <= d - k^2/2n < 0.
inline std::vector<Integer> possible_extension_norms(const Integer& two_n, const Integer& k) {
    if (two_n <= 0 || !divides(Integer(2), two_n)) throw InvalidArgument("2n must be positive and even");
    const Rational shift = make_rational(k * k, two_n);
    std::vector<Integer> out;
    for (Integer d = ceil(shift - 2); d < shift; ++d)
        if (divides(Integer(2), d)) out.push_back(d);
    return out;
}

/// Bounded search: all pairing vectors with entries in [-pairing_bound,
/// pairing_bound] and even D-norms in [norm_min, norm_max] whose bordering is
/// an S-bad extension.  Degenerate borderings are skipped.
inline std::vector<ExtensionWitness> search_sbad_extensions(const Lattice& s, long pairing_bound,
                                                            long norm_min, long norm_max) {
    std::vector<ExtensionWitness> found;
    const std::size_t r = s.rank();
    IntVector p(r, Integer(-pairing_bound));
    if (norm_min % 2 != 0) ++norm_min;
    while (true) {
        for (long d = norm_min; d <= norm_max; d += 2) {
            ExtensionWitness w{s.gram(), p, Integer(d)};
            try {
                if (is_sbad_extension(w).sbad) found.push_back(std::move(w));
            } catch (const DegenerateExtension&) {
            }
        }
        std::size_t i = 0;
        while (i < r && p[i] == pairing_bound) p[i++] = -pairing_bound;
        if (i == r) break;
        ++p[i];
    }
    return found;
}

}  // namespace k3lat
