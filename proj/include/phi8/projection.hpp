// cmU-based vertex sets, coordinate projections to 3D, and hull-layer tallies over all 56 triples.
#pragma once

#include "phi8/constants.hpp"
#include "phi8/hull.hpp"
#include "phi8/roots.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace phi8 {

using ExactPoint = std::vector<GoldenExt>;

struct VertexSet {
    std::vector<ExactPoint> exact;
    std::vector<std::vector<double>> points;  // exact converted to doubles
    std::string provenance;
    std::size_t dimension() const { return exact.empty() ? 0 : exact.front().size(); }
};

enum class VertexBasis { U, CmU };

inline std::string to_string(VertexBasis b) { return b == VertexBasis::U ? "U" : "cmU"; }

/// +-(coeffs^T basis) over every root; conversion to doubles happens last.
inline VertexSet build_vertices(const std::vector<RootRecord>& roots, const ExactMatrix& basis, std::string provenance) {
    const std::size_t n = basis.size();
    std::set<Coeffs> seen;
    std::vector<ExactPoint> positive;
    for (const auto& r : roots) {
        if (r.coeffs.size() != n) throw DimensionMismatch(r.coeffs.size(), n);
        if (!seen.insert(r.coeffs).second) continue;
        ExactPoint v(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (r.coeffs[i] == 0) continue;
            const GoldenExt c(r.coeffs[i]);
            for (std::size_t k = 0; k < n; ++k)
                if (!basis(i, k).is_zero()) v[k] += c * basis(i, k);
        }
        positive.push_back(std::move(v));
    }
    VertexSet vs;
    vs.provenance = std::move(provenance);
    for (int s : {1, -1})
        for (const auto& v : positive) {
            ExactPoint w = v;
            if (s < 0)
                for (auto& x : w) x = -x;
            std::vector<double> f;
            for (const auto& x : w) f.push_back(x.to_double());
            vs.exact.push_back(std::move(w));
            vs.points.push_back(std::move(f));
        }
    return vs;
}

/// Roots of cmU under the serre-free rule up to height 8 (120 roots), times U or cmU.
inline VertexSet build_vertices(VertexBasis basis = VertexBasis::U) {
    const EnumerationRule rule{PairingMode::SerreFree, 8, true};
    const Enumeration en = enumerate(build_cmU(), rule);
    const ExactMatrix b = basis == VertexBasis::U ? build_U() : build_cmU();
    return build_vertices(en.roots, b,
                          "roots=cmU mode=serre-free max_height=8 count=" + std::to_string(en.roots.size()) +
                              " basis=" + to_string(basis));
}

using DimTriple = std::array<int, 3>;  // 1-based coordinate indices

struct ProjectedPoints {
    std::vector<Point3> points;            // distinct, in exact structural order
    std::vector<std::size_t> multiplicity;
};

inline void check_dims(const DimTriple& dims, std::size_t n) {
    const bool ok = dims[0] >= 1 && dims[1] >= 1 && dims[2] >= 1 && static_cast<std::size_t>(dims[0]) <= n &&
                    static_cast<std::size_t>(dims[1]) <= n && static_cast<std::size_t>(dims[2]) <= n &&
                    dims[0] != dims[1] && dims[0] != dims[2] && dims[1] != dims[2];
    if (!ok)
        throw Error("bad dimension subset {" + std::to_string(dims[0]) + "," + std::to_string(dims[1]) + "," +
                    std::to_string(dims[2]) + "}: need three distinct values in 1.." + std::to_string(n));
}

/// Coordinate selection; exactly equal projections collapse and keep a count.
inline ProjectedPoints project(const VertexSet& vs, const DimTriple& dims) {
    check_dims(dims, vs.dimension());
    struct Less {
        bool operator()(const std::array<GoldenExt, 3>& x, const std::array<GoldenExt, 3>& y) const {
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), StructuralLess{});
        }
    };
    std::map<std::array<GoldenExt, 3>, std::size_t, Less> counts;
    for (const auto& v : vs.exact)
        ++counts[{v[static_cast<std::size_t>(dims[0] - 1)], v[static_cast<std::size_t>(dims[1] - 1)],
                  v[static_cast<std::size_t>(dims[2] - 1)]}];
    ProjectedPoints out;
    for (const auto& [key, count] : counts) {
        out.points.push_back({key[0].to_double(), key[1].to_double(), key[2].to_double()});
        out.multiplicity.push_back(count);
    }
    return out;
}

/// The 56 triples of {1..8} in lexicographic order.
inline std::vector<DimTriple> all_triples(int n = 8) {
    std::vector<DimTriple> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) out.push_back({a, b, c});
    return out;
}

inline std::string to_string(const DimTriple& d) {
    return std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]);
}

struct LayerSummary {
    std::size_t vertex_count = 0;
    std::size_t multiplicity = 0;  // source vertices landing on this layer
    std::string classification;
    double edge_ratio = 1;
};

struct HullReport {
    DimTriple dims{};
    std::size_t distinct_points = 0;
    std::vector<LayerSummary> layers;
    std::string signature;  // layer classifications joined by " | "
};

struct SubsetAnalysis {
    HullReport report;
    std::vector<HullLayer> layers;
};

inline SubsetAnalysis analyze_subset(const VertexSet& vs, const DimTriple& dims, double tol = kCoplanarTolerance) {
    const ProjectedPoints pp = project(vs, dims);
    SubsetAnalysis out;
    out.layers = peel_hulls(pp.points, tol, pp.multiplicity);
    out.report.dims = dims;
    out.report.distinct_points = pp.points.size();
    for (const auto& layer : out.layers) {
        LayerSummary s;
        s.vertex_count = layer.points.size();
        for (auto m : layer.multiplicity) s.multiplicity += m;
        s.classification = layer.classification.label;
        s.edge_ratio = layer.classification.edge_ratio;
        if (!out.report.signature.empty()) out.report.signature += " | ";
        out.report.signature += s.classification;
        out.report.layers.push_back(std::move(s));
    }
    return out;
}

struct SignatureGroup {
    std::string signature;
    std::vector<DimTriple> members;  // ascending
};

struct Tally {
    std::vector<HullReport> reports;     // ascending by dims
    std::vector<SignatureGroup> groups;  // ordered by first member
};

/// Groups a set of reports by signature; the input order does not matter.
inline Tally group_reports(std::vector<HullReport> reports) {
    std::sort(reports.begin(), reports.end(), [](const HullReport& a, const HullReport& b) { return a.dims < b.dims; });
    Tally t;
    std::map<std::string, std::size_t> group_of;
    for (const auto& r : reports) {
        auto [it, inserted] = group_of.emplace(r.signature, t.groups.size());
        if (inserted) t.groups.push_back({r.signature, {}});
        t.groups[it->second].members.push_back(r.dims);
    }
    t.reports = std::move(reports);
    return t;
}

inline Tally tally_all(const VertexSet& vs, double tol = kCoplanarTolerance) {
    std::vector<HullReport> reports;
    for (const auto& d : all_triples(static_cast<int>(vs.dimension()))) reports.push_back(analyze_subset(vs, d, tol).report);
    return group_reports(std::move(reports));
}

namespace detail {
inline std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0 ? 0.0 : x);
    return buf;
}
}  // namespace detail

/// Wavefront OBJ text: one object per layer, triangles for 3D layers, point elements otherwise.
inline std::string emit_obj(const SubsetAnalysis& a) {
    std::ostringstream out;
    out << "# hull layers for dims " << to_string(a.report.dims) << "\n";
    std::size_t base = 1;
    for (std::size_t l = 0; l < a.layers.size(); ++l) {
        const auto& layer = a.layers[l];
        std::string label = layer.classification.label;
        std::replace(label.begin(), label.end(), ' ', '_');
        out << "o layer_" << l + 1 << "_" << label << "\n";
        for (const auto& p : layer.points)
            out << "v " << detail::fmt_double(p[0]) << ' ' << detail::fmt_double(p[1]) << ' '
                << detail::fmt_double(p[2]) << "\n";
        if (layer.triangles.empty()) {
            out << "p";
            for (std::size_t i = 0; i < layer.points.size(); ++i) out << ' ' << base + i;
            out << "\n";
        } else {
            for (const auto& t : layer.triangles) out << "f " << base + t[0] << ' ' << base + t[1] << ' ' << base + t[2] << "\n";
        }
        base += layer.points.size();
    }
    return out.str();
}

inline std::string tally_csv(const Tally& t) {
    std::ostringstream out;
    out << "dims,distinct_points,layer,vertex_count,multiplicity,classification,edge_ratio\n";
    for (const auto& r : t.reports)
        for (std::size_t l = 0; l < r.layers.size(); ++l) {
            const auto& s = r.layers[l];
            out << '"' << to_string(r.dims) << "\"," << r.distinct_points << ',' << l + 1 << ',' << s.vertex_count << ','
                << s.multiplicity << ",\"" << s.classification << "\"," << detail::fmt_double(s.edge_ratio) << "\n";
        }
    return out.str();
}

}  // namespace phi8
