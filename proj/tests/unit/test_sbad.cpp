#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "k3lat/k3lat.hpp"
#include "oracles.hpp"

using namespace k3lat;

TEST(SbadExtension, DegreeEightWitness) {
    const ExtensionWitness w{IntMatrix{{8}}, make_ivec({4}), Integer(0)};
    EXPECT_EQ(w.s1_gram(), (IntMatrix{{8, 4}, {4, 0}}));
    const SbadVerdict v = is_sbad_extension(w);
    EXPECT_EQ(v.det_s, 8);
    EXPECT_EQ(v.det_s1, -16);
    EXPECT_TRUE(v.lorentzian);
    EXPECT_TRUE(v.sbad);
}

TEST(SbadExtension, OrthogonalMinusTwoVector) {
    std::mt19937 rng(79);
    // S Lorentzian; an orthogonal D of norm -2 doubles |det|.
    for (int trial = 0; trial < 30; ++trial) {
        const IntMatrix s{{Integer(2 * oracle::uniform(rng, 1, 6))}};
        const SbadVerdict v = is_sbad_extension({s, make_ivec({0}), Integer(-2)});
        EXPECT_EQ(k3lat::abs(v.det_s1), 2 * k3lat::abs(v.det_s));
        EXPECT_TRUE(v.sbad);
    }
    const IntMatrix s = direct_sum(rank_one(Integer(2)), rescale(e8(), -1)).gram();
    const SbadVerdict big = is_sbad_extension({s, IntVector(9, Integer(0)), Integer(-2)});
    EXPECT_TRUE(big.sbad);
}

TEST(SbadExtension, DeterminantTooLarge) {
    const SbadVerdict v = is_sbad_extension({IntMatrix{{2}}, make_ivec({0}), Integer(-6)});
    EXPECT_EQ(v.det_s1, -12);
    EXPECT_FALSE(v.sbad);
}

TEST(SbadExtension, SignatureMustBeLorentzian) {
    // S1 = (2) + (2): positive definite, small determinant, still not S-bad.
    const SbadVerdict v = is_sbad_extension({IntMatrix{{2}}, make_ivec({0}), Integer(2)});
    EXPECT_FALSE(v.lorentzian);
    EXPECT_FALSE(v.sbad);
}

TEST(SbadExtension, DegenerateReportedSeparately) {
    EXPECT_THROW(is_sbad_extension({IntMatrix{{2}}, make_ivec({2}), Integer(2)}), DegenerateExtension);
    EXPECT_THROW(is_sbad_extension({IntMatrix{{0}}, make_ivec({1}), Integer(0)}), DegenerateLattice);
    EXPECT_THROW(is_sbad_extension({IntMatrix{{2}}, make_ivec({1, 1}), Integer(0)}), InvalidArgument);
}

TEST(SbadExtension, BorderedDeterminantIdentity) {
    std::mt19937 rng(83);
    int checked = 0;
    while (checked < 100) {
        const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
        const IntMatrix s = oracle::random_symmetric(rng, n, 4);
        const Integer d(oracle::uniform(rng, -8, 8));
        const ExtensionWitness w{s, IntVector(n, Integer(0)), d};
        EXPECT_EQ(bareiss_determinant(w.s1_gram()), bareiss_determinant(s) * d);
        EXPECT_EQ(oracle::cofactor_determinant(w.s1_gram()), oracle::cofactor_determinant(s) * d);
        ++checked;
    }
}

TEST(SbadExtension, InvariantUnderChangeOfBasis) {
    std::mt19937 rng(89);
    int checked = 0;
    while (checked < 150) {
        const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
        const IntMatrix s = oracle::random_symmetric(rng, n, 4);
        if (bareiss_determinant(s) == 0) continue;
        IntVector p(n);
        for (auto& c : p) c = oracle::uniform(rng, -4, 4);
        const Integer d(2 * oracle::uniform(rng, -3, 3));
        const ExtensionWitness w{s, p, d};
        if (bareiss_determinant(w.s1_gram()) == 0) continue;

        const IntMatrix u = oracle::random_unimodular(rng, n);
        const ExtensionWitness moved{u * s * u.transpose(), times(p, u.transpose()), d};
        EXPECT_EQ(is_sbad_extension(w).sbad, is_sbad_extension(moved).sbad);
        EXPECT_EQ(is_sbad_extension(w).det_s1, is_sbad_extension(moved).det_s1);
        ++checked;
    }
}

TEST(Polarized, Examples) {
    EXPECT_TRUE(polarized_bad(1, -2, 0));
    EXPECT_TRUE(polarized_bad(4, 0, 4));
    EXPECT_FALSE(polarized_bad(2, 2, 1));
    EXPECT_FALSE(polarized_bad(1, 0, 0));
    EXPECT_FALSE(polarized_bad(1, -4, 0));
    EXPECT_THROW(polarized_bad(0, 0, 0), InvalidArgument);
}

TEST(Polarized, ShiftInvariance) {
    for (long n = 1; n <= 7; ++n)
        for (long k = -10; k <= 10; ++k)
            for (long d = -12; d <= 12; d += 2)
                for (long m = -3; m <= 3; ++m)
                    EXPECT_EQ(polarized_bad(n, d, k), polarized_bad(n, d + 2 * k * m + 2 * n * m * m, k + 2 * n * m))
                        << n << " " << d << " " << k << " " << m;
}

TEST(Polarized, SignOfDegreeIrrelevant) {
    for (long n = 1; n <= 7; ++n)
        for (long k = -10; k <= 10; ++k)
            for (long d = -12; d <= 12; d += 2) EXPECT_EQ(polarized_bad(n, d, k), polarized_bad(n, d, -k));
}

TEST(NormalizeDegree, Examples) {
    EXPECT_EQ(normalize_degree(3, 7), 1);
    EXPECT_EQ(normalize_degree(3, -1), 1);
    EXPECT_EQ(normalize_degree(5, 5), 5);
    EXPECT_EQ(normalize_degree(5, -5), 5);
    EXPECT_EQ(normalize_degree(4, 12), 4);
    for (long n = 1; n <= 8; ++n)
        for (long k = -40; k <= 40; ++k) {
            const Integer r = normalize_degree(n, k);
            EXPECT_GE(r, 0);
            EXPECT_LE(r, n);
            EXPECT_TRUE(divides(Integer(2 * n), Integer(k) - r) || divides(Integer(2 * n), Integer(k) + r));
        }
    EXPECT_THROW(normalize_degree(0, 1), InvalidArgument);
}

TEST(ExtensionNorms, Examples) {
    EXPECT_EQ(possible_extension_norms(4, 1), (std::vector<Integer>{0}));
    EXPECT_EQ(possible_extension_norms(2, 0), (std::vector<Integer>{-2}));
    EXPECT_EQ(possible_extension_norms(12, 5), (std::vector<Integer>{2}));
    EXPECT_EQ(possible_extension_norms(10, 5), (std::vector<Integer>{2}));
    EXPECT_THROW(possible_extension_norms(3, 1), InvalidArgument);
}

TEST(ExtensionNorms, MatchPolarizedBad) {
    for (long two_n = 2; two_n <= 20; two_n += 2)
        for (long k = 0; k <= two_n / 2; ++k) {
            const auto norms = possible_extension_norms(two_n, k);
            EXPECT_EQ(norms.size(), 1u) << "exactly one even integer in a half-open interval of length 2";
            for (long d = -30; d <= 30; d += 2) {
                const bool listed = std::find(norms.begin(), norms.end(), Integer(d)) != norms.end();
                EXPECT_EQ(listed, polarized_bad(two_n / 2, d, k));
            }
        }
}

TEST(ExtensionNorms, ConsistentWithTableCells) {
    for (int two_n = 2; two_n <= 14; two_n += 2)
        for (const auto& o : orbits_of_norm(two_n)) {
            const CosetCountTable row = coset_count_row(o);
            for (const auto& [k, hist] : row.counts)
                for (const auto& [nu, count] : hist) {
                    if (count == 0) continue;
                    const auto norms = possible_extension_norms(two_n, k);
                    ASSERT_FALSE(norms.empty());
                    // a of internal norm nu sits at signed norm -nu; D = r - a pairs so that
                    // D^2 - k^2/2n equals -2 + nu.
                    for (const auto& d : norms)
                        EXPECT_EQ(Rational(d) - make_rational(Integer(k) * k, Integer(two_n)), nu - 2)
                            << "2n=" << two_n << " k=" << k;
                }
        }
}

TEST(Search, FindsDegreeEightWitness) {
    const auto found = search_sbad_extensions(rank_one(Integer(8)), 4, -2, 0);
    bool saw = false;
    for (const auto& w : found) {
        EXPECT_TRUE(is_sbad_extension(w).sbad);
        if (w.pairings == make_ivec({4}) && w.d_norm == 0) saw = true;
    }
    EXPECT_TRUE(saw);
}

TEST(Search, SkipsDegenerateBorderings) {
    // (2) bordered by pairing 2 and norm 2 is degenerate; the search must not throw.
    EXPECT_NO_THROW(search_sbad_extensions(rank_one(Integer(2)), 2, -4, 4));
}
