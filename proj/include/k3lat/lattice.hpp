#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "k3lat/error.hpp"
#include "k3lat/linalg.hpp"
#include "k3lat/matrix.hpp"
#include "k3lat/normal_form.hpp"

namespace k3lat {

/// An integral lattice given by its Gram matrix, optionally embedded in an
/// ambient lattice through integer basis rows.
class Lattice {
  public:
    Lattice() = default;

    explicit Lattice(IntMatrix gram) : gram_(std::move(gram)) {
        if (!gram_.is_symmetric()) throw InvalidArgument("Gram matrix must be square and symmetric");
    }

    /// Sublattice spanned by the rows of `basis` (ambient coordinates).
    Lattice(std::shared_ptr<const Lattice> ambient, IntMatrix basis)
        : ambient_(std::move(ambient)), basis_(std::move(basis)) {
        if (!ambient_ || basis_.cols() != ambient_->rank())
            throw InvalidArgument("basis rows must be given in ambient coordinates");
        gram_ = basis_ * ambient_->gram() * basis_.transpose();
    }

    std::size_t rank() const noexcept { return gram_.rows(); }
    const IntMatrix& gram() const noexcept { return gram_; }

    bool has_ambient() const noexcept { return ambient_ != nullptr; }
    const std::shared_ptr<const Lattice>& ambient() const noexcept { return ambient_; }
    const IntMatrix& basis() const noexcept { return basis_; }

    bool is_even() const {
        for (std::size_t i = 0; i < rank(); ++i)
            if (!divides(Integer(2), gram_(i, i))) return false;
        return true;
    }

    template <class T>
    T pair(std::span<const T> x, std::span<const T> y) const {
        T s(0);
        for (std::size_t i = 0; i < rank(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < rank(); ++j) s += x[i] * T(gram_(i, j)) * y[j];
        }
        return s;
    }

    Integer pair(const IntVector& x, const IntVector& y) const {
        return pair<Integer>(std::span<const Integer>(x), std::span<const Integer>(y));
    }
    Rational pair(const RatVector& x, const RatVector& y) const {
        return pair<Rational>(std::span<const Rational>(x), std::span<const Rational>(y));
    }
    Integer norm(const IntVector& x) const { return pair(x, x); }
    Rational norm(const RatVector& x) const { return pair(x, x); }

    /// Ambient coordinates of a vector given in this lattice's basis.
    IntVector to_ambient(const IntVector& x) const { return times(x, basis_); }

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

  private:
    IntMatrix gram_;
    std::shared_ptr<const Lattice> ambient_;
    IntMatrix basis_;
};

using Signature = std::pair<std::size_t, std::size_t>;

/// Finite abelian group L'/L as a chain of cyclic factors.  generators[i]
/// is a dual vector (lattice coordinates) whose class has order divisors[i].
struct DiscriminantGroup {
    std::vector<Integer> divisors;
    std::vector<RatVector> generators;
    Integer order{1};

    std::size_t generator_count() const noexcept { return divisors.size(); }
};

inline Integer determinant(const Lattice& l) { return bareiss_determinant(l.gram()); }

inline void require_nondegenerate(const Lattice& l) {
    if (determinant(l) == 0) throw DegenerateLattice();
}

inline Signature signature(const Lattice& l) { return inertia(l.gram()); }

inline DiscriminantGroup discriminant_group(const Lattice& l) {
    require_nondegenerate(l);
    const SmithForm s = smith_normal_form(l.gram());
    DiscriminantGroup g;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        const Integer& d = s.diagonal(i, i);
        if (d == 1) continue;
        g.divisors.push_back(d);
        RatVector gen(l.rank());
        for (std::size_t r = 0; r < l.rank(); ++r) gen[r] = make_rational(s.right(r, i), d);
        g.generators.push_back(std::move(gen));
        g.order *= d;
    }
    return g;
}

/// Rows are the dual basis in lattice coordinates: pair(dual[i], e_j) == delta_ij.
inline std::vector<RatVector> dual_basis(const Lattice& l) {
    const RatMatrix inv = rational_inverse(l.gram());
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < l.rank(); ++i) out.push_back(inv.row_vector(i));
    return out;
}

inline Integer content(std::span<const Integer> x) {
    Integer g(0);
    for (const auto& c : x) g = gcd(g, c);
    return g;
}

inline bool is_primitive_vector(const Lattice& l, const IntVector& x) {
    if (x.size() != l.rank()) throw InvalidArgument("vector length does not match lattice rank");
    const Integer g = content(x);
    if (g == 0) throw ZeroVector();
    return g == 1;
}

/// True iff the rows of `basis` are independent and span a saturated
/// sublattice of Z^n.
inline bool is_primitive_basis(const IntMatrix& basis) {
    const SmithForm s = smith_normal_form(basis);
    for (const auto& d : s.invariants())
        if (d != 1) return false;
    return true;
}

/// {x in ambient : (x, s) = 0 for all s in sub} with a Hermite-form basis.
inline Lattice orthogonal_complement(const std::shared_ptr<const Lattice>& ambient,
                                     const IntMatrix& sub_basis) {
    require_nondegenerate(*ambient);
    if (sub_basis.cols() != ambient->rank())
        throw InvalidArgument("sublattice basis must use ambient coordinates");
    if (!is_primitive_basis(sub_basis)) throw NonPrimitiveSublattice();
    IntMatrix basis = integer_kernel(sub_basis * ambient->gram());
    return Lattice(ambient, std::move(basis));
}

inline Lattice orthogonal_complement(const Lattice& ambient, const IntMatrix& sub_basis) {
    return orthogonal_complement(std::make_shared<const Lattice>(ambient), sub_basis);
}

inline Lattice orthogonal_complement(const Lattice& sub) {
    if (!sub.has_ambient()) throw InvalidArgument("sublattice has no ambient lattice");
    return orthogonal_complement(sub.ambient(), sub.basis());
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
    return Lattice(block_diagonal(a.gram(), b.gram()));
}

inline Lattice direct_sum(std::initializer_list<Lattice> parts) {
    Lattice out{IntMatrix()};
    for (const auto& p : parts) out = direct_sum(out, p);
    return out;
}

inline Lattice rescale(const Lattice& l, const Integer& factor) {
    IntMatrix g = l.gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (auto& e : g.row(i)) e *= factor;
    return Lattice(std::move(g));
}

// Standard lattices.  Root lattices use Bourbaki numbering: for E8 the chain
// is 1-3-4-5-6-7-8 with node 2 attached to node 4.
namespace detail {
inline IntMatrix cartan_from_edges(std::size_t n,
                                   std::initializer_list<std::pair<int, int>> edges) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
    for (auto [a, b] : edges) {
        g(a - 1, b - 1) = -1;
        g(b - 1, a - 1) = -1;
    }
    return g;
}
}  // namespace detail

inline Lattice e8() {
    return Lattice(detail::cartan_from_edges(8, {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}}));
}
inline Lattice e7() {
    return Lattice(detail::cartan_from_edges(7, {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {6, 7}}));
}
inline Lattice e6() {
    return Lattice(detail::cartan_from_edges(6, {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}}));
}
inline Lattice hyperbolic_plane() { return Lattice(IntMatrix{{0, 1}, {1, 0}}); }
inline Lattice rank_one(const Integer& n) { return Lattice(IntMatrix{{n}}); }

inline bool is_standard_unimodular_pair(int p, int q) {
    return (p == 1 && (q == 1 || q == 9 || q == 17)) || (p == 2 && q == 26) || (p == 3 && q == 19);
}

/// Even unimodular II_{p,q}; only the five pairs (1,1), (1,9), (1,17),
/// (2,26) and (3,19) are provided.
inline Lattice even_unimodular(int p, int q) {
    const Lattice h = hyperbolic_plane();
    const Lattice ne8 = rescale(e8(), -1);
    if (p == 1 && q == 1) return h;
    if (p == 1 && q == 9) return direct_sum({h, ne8});
    if (p == 1 && q == 17) return direct_sum({h, ne8, ne8});
    if (p == 2 && q == 26) return direct_sum({ne8, ne8, ne8, h, h});
    if (p == 3 && q == 19) return direct_sum({ne8, ne8, h, h, h});
    throw InvalidArgument("II(" + std::to_string(p) + "," + std::to_string(q) +
                          ") is not one of the provided even unimodular lattices");
}

}  // namespace k3lat
