#include "phi8/constants.hpp"
#include "phi8/roots.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace phi8;

namespace {

ExactMatrix a2() { return ExactMatrix{{2, -1}, {-1, 2}}; }

std::set<Coeffs> coeff_set(const Enumeration& en) {
    std::set<Coeffs> s;
    for (const auto& r : en.roots) s.insert(r.coeffs);
    return s;
}

oracle::DMatrix doubles(const ExactMatrix& m) {
    oracle::DMatrix d(m.size(), std::vector<double>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m(i, j).to_double();
    return d;
}

}  // namespace

TEST(Roots, A2) {
    const auto en = enumerate(a2());
    ASSERT_EQ(en.roots.size(), 3u);
    EXPECT_EQ(en.roots[0].coeffs, (Coeffs{1, 0}));
    EXPECT_EQ(en.roots[1].coeffs, (Coeffs{0, 1}));
    EXPECT_EQ(en.roots[2].coeffs, (Coeffs{1, 1}));
    EXPECT_EQ(en.max_height(), 2);
    EXPECT_EQ(en.roots[2].weight, (std::vector<GoldenScalar>{1, 1}));
}

TEST(Roots, A2DotSnapshot) {
    const auto en = enumerate(a2());
    const auto edges = hasse(en.roots);
    ASSERT_EQ(edges.size(), 2u);
    EXPECT_EQ(emit_hasse_dot(edges, en.roots),
              "digraph hasse {\n"
              "  rankdir=BT;\n"
              "  node [shape=box, fontname=\"monospace\"];\n"
              "  subgraph height_1 {\n"
              "    rank=same;\n"
              "    r1_0 [label=\"10\"];\n"
              "    r1_1 [label=\"01\"];\n"
              "  }\n"
              "  subgraph height_2 {\n"
              "    rank=same;\n"
              "    r2_0 [label=\"11\"];\n"
              "  }\n"
              "  r1_0 -> r2_0 [label=\"2\"];\n"
              "  r1_1 -> r2_0 [label=\"1\"];\n"
              "}\n");
}

TEST(Roots, A2Csv) {
    EXPECT_EQ(roots_csv(enumerate(a2()).roots),
              "height,coeffs,weight,parents\n"
              "1,\"10\",\"2; -1\",\"\"\n"
              "1,\"01\",\"-1; 2\",\"\"\n"
              "2,\"11\",\"1; 1\",\"r1_0+e2 r1_1+e1\"\n");
}

TEST(Roots, NoDedupKeepsPaths) {
    const auto en = enumerate(a2(), {PairingMode::Normalized, 10, false});
    EXPECT_EQ(en.roots.size(), 4u);
    EXPECT_EQ(en.stats.accepted_paths, 2u);
    EXPECT_EQ(en.stats.distinct_roots, 3u);
    EXPECT_EQ(en.stats.duplicates_merged, 1u);
}

TEST(Roots, E8MatchesLatticeOracle) {
    const auto en = enumerate(build_cmE8(), {PairingMode::Normalized, 30, true});
    EXPECT_EQ(en.roots.size(), 120u);
    EXPECT_EQ(en.max_height(), 29);

    const auto hist = oracle::e8_height_histogram(doubles(build_srE8()));
    ASSERT_FALSE(hist.empty());
    std::size_t total = 0;
    for (const auto& [h, c] : hist) total += c;
    EXPECT_EQ(total, 120u);

    const auto counts = en.counts_by_height();
    ASSERT_EQ(counts.size(), 29u);
    const auto by_exponents = oracle::e8_height_counts_from_exponents();
    for (int h = 1; h <= 29; ++h) {
        EXPECT_EQ(counts[static_cast<std::size_t>(h - 1)], hist.at(h)) << "height " << h;
        EXPECT_EQ(counts[static_cast<std::size_t>(h - 1)], by_exponents[static_cast<std::size_t>(h - 1)]) << h;
    }
    EXPECT_TRUE(weights_table(en.roots).all_integer);
}

TEST(Roots, RawEqualsNormalizedForDiagonalTwo) {
    for (const auto& m : {a2(), build_cmE8()}) {
        const auto n = enumerate(m, {PairingMode::Normalized, 30, true});
        const auto r = enumerate(m, {PairingMode::Raw, 30, true});
        EXPECT_EQ(coeff_set(n), coeff_set(r));
    }
}

TEST(Roots, PermutationInvariance) {
    std::mt19937 rng(5);
    const auto base = enumerate(build_cmE8(), {PairingMode::Normalized, 30, true});
    for (int t = 0; t < 5; ++t) {
        std::vector<std::size_t> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto p = ExactMatrix::permutation(perm);
        const auto permuted = enumerate(p * build_cmE8() * p.transpose(), {PairingMode::Normalized, 30, true});
        // coefficient i of the permuted system is coefficient perm[i] of the original
        std::set<Coeffs> mapped;
        for (const auto& r : permuted.roots) {
            Coeffs c(8);
            for (std::size_t i = 0; i < 8; ++i) c[perm[i]] = r.coeffs[i];
            mapped.insert(c);
        }
        EXPECT_EQ(mapped, coeff_set(base));
    }
}

TEST(Roots, CmUDefaultRuleStopsAtSimpleRoots) {
    const auto en = enumerate(build_cmU());
    EXPECT_EQ(en.roots.size(), 8u);
    EXPECT_EQ(en.max_height(), 1);
}

TEST(Roots, CmUSerreFreeCounts) {
    const auto en = enumerate(build_cmU(), {PairingMode::SerreFree, 8, true});
    // four disjoint edges {i, 7-i}: heights h >= 2 contribute 4 (h - 1) vectors a e_i + b e_(7-i)
    const auto counts = en.counts_by_height();
    ASSERT_EQ(counts.size(), 8u);
    EXPECT_EQ(counts[0], 8u);
    for (std::size_t h = 2; h <= 8; ++h) EXPECT_EQ(counts[h - 1], 4 * (h - 1)) << h;
    EXPECT_EQ(en.cumulative_through(8), 120u);
}

TEST(Roots, CmUAndJShareHasseStructure) {
    const EnumerationRule rule{PairingMode::SerreFree, 8, true};
    const auto u = enumerate(build_cmU(), rule);
    const auto j = enumerate(build_J(), rule);
    EXPECT_EQ(coeff_set(u), coeff_set(j));
    EXPECT_EQ(hasse(u.roots), hasse(j.roots));
    EXPECT_EQ(emit_hasse_dot(hasse(u.roots), u.roots), emit_hasse_dot(hasse(j.roots), j.roots));
}

TEST(Roots, Errors) {
    EXPECT_THROW(enumerate(build_U()), Error);
    EXPECT_THROW(enumerate(build_J()), Error);
    EXPECT_NO_THROW(enumerate(build_J(), {PairingMode::Raw, 3, true}));
    EXPECT_THROW(enumerate(a2(), {PairingMode::Normalized, 0, true}), Error);
}

TEST(Roots, ModeNames) {
    EXPECT_EQ(parse_pairing_mode("serre-free"), PairingMode::SerreFree);
    EXPECT_EQ(parse_pairing_mode("raw"), PairingMode::Raw);
    EXPECT_FALSE(parse_pairing_mode("bogus").has_value());
    EXPECT_EQ(to_string(PairingMode::Normalized), "normalized");
}
