#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

/// left * input * right == diagonal, with left and right unimodular and the
/// nonzero diagonal entries positive and forming a divisibility chain.
struct SmithForm {
    IntMatrix left;
    IntMatrix diagonal;
    IntMatrix right;

    std::vector<Integer> invariants() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
            d.push_back(diagonal(i, i));
        return d;
    }
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& a = s.diagonal;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (pi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) return s;

            a.swap_rows(t, pi);
            s.left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            s.right.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                a.add_row_multiple(i, t, -q);
                s.left.add_row_multiple(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                a.add_col_multiple(j, t, -q);
                s.right.add_col_multiple(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce the divisibility chain: pull in any row whose entries
            // the pivot does not divide.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!divides(a(t, t), a(i, j))) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            a.add_row_multiple(t, bad, Integer(1));
            s.left.add_row_multiple(t, bad, Integer(1));
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            s.left.negate_row(t);
        }
    }
    return s;
}

/// Row-style Hermite normal form: transform * input == hermite, transform
/// unimodular, hermite in echelon form with positive pivots and the entries
/// above each pivot reduced into [0, pivot).  Rows past `rank` are zero.
struct HermiteForm {
    IntMatrix hermite;
    IntMatrix transform;
    std::size_t rank = 0;
};

inline HermiteForm hermite_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    HermiteForm h{m, IntMatrix::identity(rows), 0};
    IntMatrix& a = h.hermite;
    IntMatrix& u = h.transform;
    std::size_t r = 0;

    auto combine = [&](IntMatrix& x, std::size_t top, std::size_t other, const Integer& s,
                       const Integer& t, const Integer& up, const Integer& wp) {
        // (top, other) <- (s*top + t*other, -wp*top + up*other); determinant 1.
        for (std::size_t j = 0; j < x.cols(); ++j) {
            Integer a0 = x(top, j), b0 = x(other, j);
            x(top, j) = s * a0 + t * b0;
            x(other, j) = up * b0 - wp * a0;
        }
    };

    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            if (a(r, c) == 0) {
                a.swap_rows(r, i);
                u.swap_rows(r, i);
                continue;
            }
            const ExtendedGcd e = extended_gcd(a(r, c), a(i, c));
            Integer up = a(r, c) / e.g;
            Integer wp = a(i, c) / e.g;
            combine(a, r, i, e.s, e.t, up, wp);
            combine(u, r, i, e.s, e.t, up, wp);
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) {
            a.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            if (q == 0) continue;
            a.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    h.rank = r;
    return h;
}

/// Canonical basis (Hermite rows) of the lattice spanned by the rows of m.
inline IntMatrix hermite_basis(const IntMatrix& m) {
    HermiteForm h = hermite_normal_form(m);
    IntMatrix b(h.rank, m.cols());
    for (std::size_t i = 0; i < h.rank; ++i)
        std::copy(h.hermite.row(i).begin(), h.hermite.row(i).end(), b.row(i).begin());
    return b;
}

/// Basis (as rows, in Hermite form) of {x in Z^n : m * x == 0}.
inline IntMatrix integer_kernel(const IntMatrix& m) {
    HermiteForm h = hermite_normal_form(m.transpose());
    const std::size_t n = m.cols();
    IntMatrix k(n - h.rank, n);
    for (std::size_t i = h.rank; i < n; ++i)
        std::copy(h.transform.row(i).begin(), h.transform.row(i).end(),
                  k.row(i - h.rank).begin());
    return hermite_basis(k);
}

}  // namespace k3lat
