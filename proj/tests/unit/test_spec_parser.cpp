#include <gtest/gtest.h>

#include <random>

#include "k3lat/k3lat.hpp"
#include "oracles.hpp"

using namespace k3lat;

namespace {

using K = LatticeSpec::Kind;

LatticeSpec random_spec(std::mt19937& rng, int depth) {
    const long pick = oracle::uniform(rng, 0, depth > 0 ? 9 : 6);
    switch (pick) {
        case 0: return LatticeSpec::root("E8");
        case 1: return LatticeSpec::root(oracle::uniform(rng, 0, 1) ? "E7" : "E6");
        case 2: return LatticeSpec::hyperbolic();
        case 3: {
            static const int pairs[5][2] = {{1, 1}, {1, 9}, {1, 17}, {2, 26}, {3, 19}};
            const auto& p = pairs[oracle::uniform(rng, 0, 4)];
            return LatticeSpec::unimodular(p[0], p[1]);
        }
        case 4:
        case 5: return LatticeSpec::rank_one(Integer(oracle::uniform(rng, -30, 30)));
        case 6: return LatticeSpec::gram_file("dir/f" + std::to_string(oracle::uniform(rng, 0, 99)) + ".gram");
        case 7: return LatticeSpec::negate(random_spec(rng, depth - 1));
        default: {
            std::vector<LatticeSpec> terms;
            const long n = oracle::uniform(rng, 2, 4);
            for (long i = 0; i < n; ++i) terms.push_back(random_spec(rng, depth - 1));
            return LatticeSpec::sum(std::move(terms));
        }
    }
}

std::size_t syntax_offset(const std::string& text) {
    try {
        parse_spec(text);
    } catch (const SyntaxError& e) {
        return e.offset();
    }
    ADD_FAILURE() << "no syntax error for '" << text << "'";
    return 0;
}

}  // namespace

TEST(Parse, Examples) {
    const Lattice a = parse_lattice("(-2) + -E8");
    EXPECT_EQ(a.rank(), 9u);
    EXPECT_EQ(determinant(a), -2);

    const Lattice b = parse_lattice("-E8 + -E8 + -E8 + H + H");
    EXPECT_EQ(b.gram(), even_unimodular(2, 26).gram());
    EXPECT_EQ(determinant(b), 1);
    EXPECT_EQ(signature(b), Signature(2, 26));

    EXPECT_EQ(parse_lattice("II(1,17)").gram(), parse_lattice("H + -E8 + -E8").gram());
}

TEST(Parse, Structure) {
    const LatticeSpec s = parse_spec("(-2) + -E8 + -E8 + H + H");
    ASSERT_EQ(s.kind, K::sum);
    ASSERT_EQ(s.children.size(), 5u);
    EXPECT_EQ(s.children[0], LatticeSpec::rank_one(Integer(-2)));
    EXPECT_EQ(s.children[1], LatticeSpec::negate(LatticeSpec::root("E8")));
    EXPECT_EQ(s.children[4], LatticeSpec::hyperbolic());
}

TEST(Parse, WhitespaceAndUnicodeMinus) {
    EXPECT_EQ(parse_spec("  ( -2 )+\t-E8 "), parse_spec("(-2) + -E8"));
    EXPECT_EQ(parse_spec("\xE2\x88\x92" "E8"), parse_spec("-E8"));
    EXPECT_EQ(parse_spec("(\xE2\x88\x92" "4)"), parse_spec("(-4)"));
    EXPECT_EQ(parse_spec("II( 3 , 19 )"), LatticeSpec::unimodular(3, 19));
    EXPECT_EQ(parse_spec("(+6)"), LatticeSpec::rank_one(Integer(6)));
}

TEST(Parse, GroupsAndNestedNegation) {
    const Lattice g = parse_lattice("-(E8 + H)");
    EXPECT_EQ(g.gram(), rescale(direct_sum(e8(), hyperbolic_plane()), -1).gram());
    EXPECT_EQ(parse_lattice("-(-E8)").gram(), e8().gram());
}

TEST(Parse, SyntaxErrorsCarryOffsets) {
    EXPECT_EQ(syntax_offset(""), 0u);
    EXPECT_EQ(syntax_offset("E8 +"), 4u);
    EXPECT_EQ(syntax_offset("E8 E8"), 3u);
    EXPECT_EQ(syntax_offset("E9"), 0u);
    EXPECT_EQ(syntax_offset("(2"), 2u);
    EXPECT_EQ(syntax_offset("II(1 9)"), 5u);
    EXPECT_EQ(syntax_offset("gram:"), 5u);
    EXPECT_THROW(parse_spec("H + )"), SyntaxError);
}

TEST(Parse, UnknownUnimodularPair) {
    EXPECT_THROW(parse_spec("II(2,2)"), UnknownLattice);
    try {
        parse_spec("H + II(5,5)");
        FAIL();
    } catch (const UnknownLattice& e) {
        EXPECT_NE(std::string(e.what()).find("II(5,5)"), std::string::npos);
    }
}

TEST(Parse, ParseErrorsShareBaseClass) {
    EXPECT_THROW(parse_spec("E8 +"), ParseError);
    EXPECT_THROW(parse_spec("II(0,0)"), ParseError);
}

TEST(Parse, RankOneWarnings) {
    EXPECT_TRUE(spec_warnings(parse_spec("(2) + -E8")).empty());
    EXPECT_EQ(spec_warnings(parse_spec("(3) + H")).size(), 1u);
    EXPECT_EQ(spec_warnings(parse_spec("(0)")).size(), 1u);
    EXPECT_FALSE(parse_lattice("(3)").is_even());
}

TEST(Print, CanonicalForms) {
    EXPECT_EQ(print_spec(parse_spec("(-2)+(-E8)")), "(-2) + -E8");
    EXPECT_EQ(print_spec(parse_spec("-(E8+H)")), "-(E8 + H)");
    EXPECT_EQ(print_spec(parse_spec("-(-E8)")), "-(-E8)");
    EXPECT_EQ(print_spec(parse_spec("(E8 + H) + E7")), "(E8 + H) + E7");
    EXPECT_EQ(print_spec(parse_spec("II(2,26)")), "II(2,26)");
}

TEST(Print, RoundTripOnGeneratedTrees) {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 2000; ++trial) {
        const LatticeSpec s = random_spec(rng, 3);
        const std::string text = print_spec(s);
        EXPECT_EQ(parse_spec(text), s) << text;
        EXPECT_EQ(print_spec(parse_spec(text)), text);
    }
}

TEST(Evaluate, GramFileTerm) {
    const Lattice l = parse_lattice(std::string("gram:") + K3LAT_SAMPLES_DIR + "/e7.gram + H");
    EXPECT_EQ(l.rank(), 9u);
    EXPECT_EQ(determinant(l), -2);
    EXPECT_THROW(parse_lattice("gram:/nonexistent/file"), GramFileError);
}
