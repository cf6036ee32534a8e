#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "k3lat/k3lat.hpp"
#include "oracles.hpp"

using namespace k3lat;

namespace {

EnumResult run(const IntMatrix& g, const RatVector& offset, const Rational& bound, BoundMode mode,
               Collect collect = Collect::count_only, unsigned threads = 1) {
    return enumerate(EnumQuery{g, offset, bound, mode, collect, threads});
}

IntVector negate_vec(IntVector v) {
    for (auto& c : v) c = -c;
    return v;
}

}  // namespace

TEST(RationalCholesky, Examples) {
    const auto one = rational_cholesky(IntMatrix{{2}});
    ASSERT_EQ(one.pivots.size(), 1u);
    EXPECT_EQ(one.pivots[0], 2);

    EXPECT_THROW(rational_cholesky(hyperbolic_plane().gram()), NotPositiveDefinite);

    const auto e = rational_cholesky(e8().gram());
    Rational prod(1);
    for (const auto& p : e.pivots) {
        EXPECT_GT(p, 0);
        prod *= p;
    }
    EXPECT_EQ(prod, oracle::cofactor_determinant(e8().gram()));
}

TEST(RationalCholesky, ReconstructsGram) {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix g = oracle::random_positive_gram(rng, static_cast<std::size_t>(oracle::uniform(rng, 1, 6)));
        const auto ldl = rational_cholesky(g);
        const std::size_t n = g.rows();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s(0);
                for (std::size_t k = 0; k <= std::min(i, j); ++k) s += ldl.mu(k, i) * ldl.pivots[k] * ldl.mu(k, j);
                EXPECT_EQ(s, Rational(g(i, j)));
            }
    }
}

TEST(Enumerate, E8Roots) {
    const EnumResult r = run(e8().gram(), {}, Rational(2), BoundMode::inclusive);
    EXPECT_EQ(r.histogram, (NormHistogram{{Rational(0), 1}, {Rational(2), 240}}));
    EXPECT_EQ(oracle::d8_norm_counts(2).at(2), 240u);
}

TEST(Enumerate, E7Roots) {
    const EnumResult r = run(e7().gram(), {}, Rational(2), BoundMode::inclusive);
    EXPECT_EQ(r.histogram, (NormHistogram{{Rational(0), 1}, {Rational(2), 126}}));
}

TEST(Enumerate, E7NontrivialDualCoset) {
    const DiscriminantGroup d = discriminant_group(e7());
    ASSERT_EQ(d.generators.size(), 1u);
    const EnumResult r = run(e7().gram(), d.generators[0], Rational(2), BoundMode::exclusive);
    EXPECT_EQ(r.histogram, (NormHistogram{{make_rational(3, 2), 56}}));
}

TEST(Enumerate, BoundModeAtBoundary) {
    EXPECT_EQ(run(e8().gram(), {}, Rational(2), BoundMode::exclusive).total(), 1u);
    EXPECT_EQ(run(e8().gram(), {}, Rational(2), BoundMode::inclusive).total(), 241u);
}

TEST(Enumerate, ThetaSeriesOfE8) {
    const EnumResult r = run(e8().gram(), {}, Rational(8), BoundMode::inclusive);
    const auto model = oracle::d8_norm_counts(8);
    for (std::uint64_t m = 1; m <= 4; ++m) {
        EXPECT_EQ(r.count(Rational(2 * m)), 240 * oracle::sigma3(m)) << "norm " << 2 * m;
        EXPECT_EQ(r.count(Rational(2 * m)), model.at(static_cast<int>(2 * m)));
    }
}

TEST(Enumerate, AnotherE8BasisGivesSameCounts) {
    std::mt19937 rng(47);
    const NormHistogram reference = run(e8().gram(), {}, Rational(6), BoundMode::inclusive).histogram;
    for (int trial = 0; trial < 5; ++trial) {
        const IntMatrix u = oracle::random_unimodular(rng, 8, 20);
        const IntMatrix g = u * e8().gram() * u.transpose();
        EXPECT_EQ(run(g, {}, Rational(6), BoundMode::inclusive).histogram, reference);
    }
}

TEST(Enumerate, AgreesWithBoxSearch) {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 120; ++trial) {
        const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
        const IntMatrix g = oracle::random_positive_gram(rng, n, oracle::uniform(rng, 1, 2));
        const RatVector offset = trial % 3 == 0 ? RatVector{} : oracle::random_offset(rng, n);
        const Rational bound = make_rational(Integer(oracle::uniform(rng, 0, 40)), Integer(oracle::uniform(rng, 1, 4)));
        const bool inclusive = trial % 2 == 0;
        if (bound > 10) continue;

        std::vector<IntVector> listed;
        const NormHistogram expected = oracle::box_search(g, offset, bound, inclusive, &listed);
        std::sort(listed.begin(), listed.end());
        const EnumResult got = run(g, offset, bound, inclusive ? BoundMode::inclusive : BoundMode::exclusive,
                                   Collect::vectors);
        EXPECT_EQ(got.histogram, expected) << "trial " << trial;
        EXPECT_EQ(got.vectors, listed) << "trial " << trial;
    }
}

TEST(Enumerate, PlusMinusSymmetry) {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const IntMatrix g = oracle::random_positive_gram(rng, static_cast<std::size_t>(oracle::uniform(rng, 1, 5)));
        const EnumResult r = run(g, {}, Rational(12), BoundMode::inclusive, Collect::vectors);
        for (const auto& [norm, count] : r.histogram)
            if (norm != 0) {
                EXPECT_EQ(count % 2, 0u);
            }
        for (const auto& x : r.vectors)
            EXPECT_TRUE(std::binary_search(r.vectors.begin(), r.vectors.end(), negate_vec(x)));
    }
}

TEST(Enumerate, OffsetShiftedByLatticeVector) {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
        const IntMatrix g = oracle::random_positive_gram(rng, n);
        const RatVector c = oracle::random_offset(rng, n);
        RatVector shifted = c;
        for (auto& x : shifted) x += oracle::uniform(rng, -3, 3);
        EXPECT_EQ(run(g, c, Rational(9), BoundMode::exclusive).histogram,
                  run(g, shifted, Rational(9), BoundMode::exclusive).histogram);
    }
}

TEST(Enumerate, MonotoneInBound) {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
        const IntMatrix g = oracle::random_positive_gram(rng, n);
        const RatVector c = oracle::random_offset(rng, n);
        const Rational b1(oracle::uniform(rng, 0, 8)), b2 = b1 + oracle::uniform(rng, 0, 8);
        const NormHistogram small = run(g, c, b1, BoundMode::inclusive).histogram;
        const NormHistogram large = run(g, c, b2, BoundMode::inclusive).histogram;
        for (const auto& [norm, count] : small) {
            ASSERT_TRUE(large.count(norm));
            EXPECT_EQ(large.at(norm), count);
        }
        for (const auto& [norm, count] : large)
            if (norm <= b1) {
                EXPECT_TRUE(small.count(norm));
            }
    }
}

TEST(Enumerate, ThreadCountDoesNotChangeResult) {
    const EnumResult one = run(e8().gram(), {}, Rational(8), BoundMode::inclusive, Collect::vectors, 1);
    const EnumResult four = run(e8().gram(), {}, Rational(8), BoundMode::inclusive, Collect::vectors, 4);
    EXPECT_EQ(one.histogram, four.histogram);
    EXPECT_EQ(one.vectors, four.vectors);
}

TEST(Enumerate, CountOnlyLeavesListEmpty) {
    EXPECT_TRUE(run(e8().gram(), {}, Rational(4), BoundMode::inclusive).vectors.empty());
}

TEST(Enumerate, RejectsIndefiniteAndMismatchedOffset) {
    EXPECT_THROW(run(hyperbolic_plane().gram(), {}, Rational(2), BoundMode::inclusive), NotPositiveDefinite);
    EXPECT_THROW(run(e8().gram(), RatVector(3), Rational(2), BoundMode::inclusive), InvalidArgument);
}

TEST(RootCount, Examples) {
    const auto six = orbits_of_norm(6);
    ASSERT_EQ(six.size(), 1u);
    EXPECT_EQ(root_count(complement_of(six[0].representative)), 74);

    const auto ten = orbits_of_norm(10);
    ASSERT_EQ(ten.size(), 1u);
    EXPECT_EQ(root_count(complement_of(ten[0].representative)), 60);

    EXPECT_EQ(root_count(rank_one(Integer(4))), 0);
    EXPECT_EQ(root_count(rescale(e8(), -1)), 240);
    EXPECT_THROW(root_count(hyperbolic_plane()), IndefiniteLattice);
}
