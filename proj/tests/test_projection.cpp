#include "phi8/projection.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace phi8;

namespace {

const VertexSet& u_vertices() {
    static const VertexSet vs = build_vertices(VertexBasis::U);
    return vs;
}

}  // namespace

TEST(Vertices, DefaultSetHas240DistinctPoints) {
    const auto& vs = u_vertices();
    ASSERT_EQ(vs.exact.size(), 240u);
    EXPECT_EQ(vs.dimension(), 8u);
    std::set<std::vector<GoldenExt>, decltype([](const auto& a, const auto& b) {
                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), StructuralLess{});
              })>
        distinct(vs.exact.begin(), vs.exact.end());
    EXPECT_EQ(distinct.size(), 240u);
    EXPECT_NE(vs.provenance.find("basis=U"), std::string::npos);
    EXPECT_NE(vs.provenance.find("count=120"), std::string::npos);
}

TEST(Vertices, DoublesAgreeWithExact) {
    const auto& vs = u_vertices();
    for (std::size_t i = 0; i < vs.exact.size(); ++i)
        for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(vs.points[i][k], vs.exact[i][k].to_double(), 1e-12);
}

TEST(Vertices, SimpleRootsMapToBasisRows) {
    const auto b = build_U();
    const auto en = enumerate(build_cmU(), {PairingMode::SerreFree, 1, true});
    const auto vs = build_vertices(en.roots, b, "simple");
    ASSERT_EQ(vs.exact.size(), 16u);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 8; ++k) {
            EXPECT_EQ(vs.exact[i][k], b(i, k));
            EXPECT_EQ(vs.exact[i + 8][k], -b(i, k));
        }
}

TEST(Project, MultiplicityAndBadSubsets) {
    const auto& vs = u_vertices();
    const auto pp = project(vs, {2, 3, 4});
    std::size_t total = 0;
    for (auto m : pp.multiplicity) total += m;
    EXPECT_EQ(total, 240u);
    EXPECT_LE(pp.points.size(), 240u);
    EXPECT_THROW(project(vs, {0, 1, 2}), Error);
    EXPECT_THROW(project(vs, {1, 1, 2}), Error);
    EXPECT_THROW(project(vs, {1, 2, 9}), Error);
}

TEST(Project, AllTriples) {
    const auto t = all_triples();
    EXPECT_EQ(t.size(), 56u);
    EXPECT_EQ(t.front(), (DimTriple{1, 2, 3}));
    EXPECT_EQ(t.back(), (DimTriple{6, 7, 8}));
}

TEST(Project, Dims234HasOctahedraAndIcosahedra) {
    const auto a = analyze_subset(u_vertices(), {2, 3, 4});
    const auto& layers = a.report.layers;
    EXPECT_TRUE(std::any_of(layers.begin(), layers.end(),
                            [](const LayerSummary& l) { return l.classification == "regular octahedron"; }));
    EXPECT_TRUE(std::any_of(layers.begin(), layers.end(), [](const LayerSummary& l) {
        return l.vertex_count == 12 && l.classification.ends_with("icosahedron");
    }));
    std::size_t total = 0;
    for (const auto& l : layers) total += l.multiplicity;
    EXPECT_EQ(total, 240u);
}

TEST(Tally, FiftySixReportsSeveralSignatures) {
    const Tally t = tally_all(u_vertices());
    ASSERT_EQ(t.reports.size(), 56u);
    EXPECT_GT(t.groups.size(), 1u);
    std::size_t members = 0;
    for (const auto& g : t.groups) members += g.members.size();
    EXPECT_EQ(members, 56u);
    for (std::size_t i = 1; i < t.groups.size(); ++i)
        EXPECT_LT(t.groups[i - 1].members.front(), t.groups[i].members.front());
}

TEST(Tally, GroupingIgnoresInputOrder) {
    const Tally t = tally_all(u_vertices());
    auto reversed = t.reports;
    std::reverse(reversed.begin(), reversed.end());
    const Tally u = group_reports(reversed);
    ASSERT_EQ(u.groups.size(), t.groups.size());
    for (std::size_t i = 0; i < t.groups.size(); ++i) {
        EXPECT_EQ(u.groups[i].signature, t.groups[i].signature);
        EXPECT_EQ(u.groups[i].members, t.groups[i].members);
    }
}

TEST(Tally, CmUBasisAlsoWorks) {
    const Tally t = tally_all(build_vertices(VertexBasis::CmU));
    EXPECT_EQ(t.reports.size(), 56u);
}

TEST(Obj, LayersAndFaces) {
    const auto a = analyze_subset(u_vertices(), {2, 3, 4});
    const std::string obj = emit_obj(a);
    EXPECT_EQ(obj.rfind("# hull layers for dims 2,3,4\n", 0), 0u);
    EXPECT_NE(obj.find("o layer_1_"), std::string::npos);
    std::size_t v = 0, f = 0;
    std::istringstream in(obj);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) == 0) ++v;
        if (line.rfind("f ", 0) == 0) ++f;
    }
    EXPECT_EQ(v, a.report.distinct_points);
    EXPECT_GT(f, 0u);
}

TEST(Csv, OneRowPerLayer) {
    const Tally t = tally_all(u_vertices());
    const std::string csv = tally_csv(t);
    std::size_t rows = 0, layers = 0;
    for (char c : csv) rows += c == '\n';
    for (const auto& r : t.reports) layers += r.layers.size();
    EXPECT_EQ(rows, layers + 1);
}
