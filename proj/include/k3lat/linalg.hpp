#pragma once

#include <cstddef>
#include <utility>

#include "k3lat/error.hpp"
#include "k3lat/matrix.hpp"

namespace k3lat {

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Integer bareiss_determinant(IntMatrix a) {
    const std::size_t n = a.rows();
    if (n == 0) return Integer(1);
    int sign_flip = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Integer(0);
            a.swap_rows(k, p);
            sign_flip = -sign_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(t);
            }
        }
        prev = a(k, k);
    }
    return sign_flip * a(n - 1, n - 1);
}

/// Exact inverse over the rationals; throws DegenerateLattice when singular.
inline RatMatrix rational_inverse(const IntMatrix& m) {
    const std::size_t n = m.rows();
    RatMatrix a = to_rational(m);
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw DegenerateLattice();
        a.swap_rows(c, p);
        inv.swap_rows(c, p);
        const Rational pivot = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= pivot;
            inv(c, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// gram = L * diag(pivots) * L^T with L unit lower triangular.  The
/// quadratic form then reads sum_i pivots[i] * (y_i + sum_{j>i} mu(i,j) y_j)^2
/// where mu(i,j) = L(j,i).
struct LdlDecomposition {
    RatVector pivots;
    RatMatrix mu;

    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Exact LDL^T of a symmetric matrix without pivoting.  Any pivot <= 0
/// means the matrix is not positive definite, which is the definiteness test
/// used throughout.
inline LdlDecomposition rational_cholesky(const IntMatrix& gram) {
    if (!gram.is_symmetric()) throw InvalidArgument("Gram matrix must be symmetric");
    const std::size_t n = gram.rows();
    RatMatrix a = to_rational(gram);
    LdlDecomposition out{RatVector(n), RatMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        const Rational d = a(i, i);
        if (sgn(d) <= 0) throw NotPositiveDefinite();
        out.pivots[i] = d;
        out.mu(i, i) = 1;
        for (std::size_t j = i + 1; j < n; ++j) out.mu(i, j) = a(i, j) / d;
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j; l < n; ++l) {
                a(j, l) -= out.mu(i, j) * a(i, l);
                a(l, j) = a(j, l);
            }
    }
    return out;
}

inline bool is_positive_definite(const IntMatrix& gram) {
    try {
        rational_cholesky(gram);
        return true;
    } catch (const NotPositiveDefinite&) {
        return false;
    }
}

inline IntMatrix negated(IntMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& e : m.row(i)) e = -e;
    return m;
}

/// Counts of positive and negative squares, by symmetric Gaussian
/// elimination over Q (Lagrange diagonalisation).
inline std::pair<std::size_t, std::size_t> inertia(const IntMatrix& gram) {
    if (!gram.is_symmetric()) throw InvalidArgument("Gram matrix must be symmetric");
    if (bareiss_determinant(gram) == 0) throw DegenerateLattice();
    RatMatrix a = to_rational(gram);
    std::size_t n = a.rows();
    std::size_t pos = 0, neg = 0;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a(i, i) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // All remaining diagonal entries vanish: replace e_i by e_i + e_j
            // for some nonzero off-diagonal entry, making a(i,i) = 2 a(i,j).
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) throw DegenerateLattice();
            a.add_row_multiple(pi, pj, Rational(1));
            a.add_col_multiple(pi, pj, Rational(1));
            p = pi;
        }
        const Rational d = a(p, p);
        (sgn(d) > 0 ? pos : neg) += 1;
        done[p] = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (done[j] || a(j, p) == 0) continue;
            const Rational f = a(j, p) / d;
            for (std::size_t l = 0; l < n; ++l)
                if (!done[l]) a(j, l) -= f * a(p, l);
        }
        for (std::size_t j = 0; j < n; ++j) {
            a(j, p) = 0;
            a(p, j) = 0;
        }
    }
    return {pos, neg};
}

}  // namespace k3lat
