// 3D convex hulls (incremental), onion peeling, and shape classification of hull layers.
#pragma once

#include "phi8/field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace phi8 {

using Point3 = std::array<double, 3>;

inline constexpr double kCoplanarTolerance = 1e-9;
inline constexpr double kEdgeTolerance = 1e-6;

namespace geom {

inline Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline double dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Point3 cross(const Point3& a, const Point3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Point3& a, const Point3& b) { return norm(sub(a, b)); }

}  // namespace geom

/// Hull of a point set. Indices refer to the input. For dimension < 3 the hull is degenerate,
/// every input point is listed in vertices and there are no triangles.
struct Hull {
    int dimension = 0;
    std::vector<std::size_t> vertices;                 // extreme points, ascending
    std::vector<std::array<std::size_t, 3>> triangles;  // outward oriented
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // between extreme points, (lo, hi), sorted
};

namespace detail {

struct HullFace {
    std::array<std::size_t, 3> v;
    Point3 normal;
    double offset = 0;
    bool alive = true;
};

inline HullFace make_face(const std::vector<Point3>& pts, std::size_t a, std::size_t b, std::size_t c,
                          const Point3& interior) {
    HullFace f{{a, b, c}, {}, 0, true};
    Point3 n = geom::cross(geom::sub(pts[b], pts[a]), geom::sub(pts[c], pts[a]));
    const double len = geom::norm(n);
    if (len > 0) n = {n[0] / len, n[1] / len, n[2] / len};
    f.normal = n;
    f.offset = geom::dot(n, pts[a]);
    if (geom::dot(n, interior) - f.offset > 0) {
        std::swap(f.v[1], f.v[2]);
        f.normal = {-n[0], -n[1], -n[2]};
        f.offset = -f.offset;
    }
    return f;
}

}  // namespace detail

/// Incremental convex hull with a coplanarity tolerance relative to the coordinate scale.
inline Hull convex_hull(const std::vector<Point3>& pts, double tol = kCoplanarTolerance) {
    Hull hull;
    const std::size_t n = pts.size();
    if (n == 0) return hull;
    double scale = 0;
    for (const auto& p : pts)
        for (double c : p) scale = std::max(scale, std::abs(c));
    const double eps = tol * std::max(scale, 1e-300);

    const auto degenerate = [&](int dim) {
        hull.dimension = dim;
        hull.vertices.resize(n);
        for (std::size_t i = 0; i < n; ++i) hull.vertices[i] = i;
        return hull;
    };

    // Initial simplex from extreme points.
    std::size_t i0 = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (pts[i] < pts[i0]) i0 = i;
    std::size_t i1 = i0;
    double best = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (const double d = geom::distance(pts[i], pts[i0]); d > best + eps) best = d, i1 = i;
    if (best <= eps) return degenerate(0);
    const Point3 dir = geom::sub(pts[i1], pts[i0]);
    std::size_t i2 = i0;
    best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = geom::norm(geom::cross(dir, geom::sub(pts[i], pts[i0]))) / geom::norm(dir);
        if (d > best + eps) best = d, i2 = i;
    }
    if (best <= eps) return degenerate(1);
    Point3 pn = geom::cross(dir, geom::sub(pts[i2], pts[i0]));
    const double pl = geom::norm(pn);
    pn = {pn[0] / pl, pn[1] / pl, pn[2] / pl};
    std::size_t i3 = i0;
    best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(geom::dot(pn, geom::sub(pts[i], pts[i0])));
        if (d > best + eps) best = d, i3 = i;
    }
    if (best <= eps) return degenerate(2);

    hull.dimension = 3;
    Point3 interior{};
    for (std::size_t k : {i0, i1, i2, i3})
        for (int c = 0; c < 3; ++c) interior[c] += pts[k][c] / 4;

    std::vector<detail::HullFace> faces{detail::make_face(pts, i0, i1, i2, interior),
                                        detail::make_face(pts, i0, i1, i3, interior),
                                        detail::make_face(pts, i0, i2, i3, interior),
                                        detail::make_face(pts, i1, i2, i3, interior)};
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_face;  // directed edge -> face
    const auto link = [&](std::size_t fi) {
        const auto& v = faces[fi].v;
        for (int e = 0; e < 3; ++e) edge_face[{v[e], v[(e + 1) % 3]}] = fi;
    };
    for (std::size_t fi = 0; fi < faces.size(); ++fi) link(fi);

    for (std::size_t p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        std::vector<std::size_t> visible;
        std::vector<bool> is_visible(faces.size(), false);
        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            if (!faces[fi].alive) continue;
            if (geom::dot(faces[fi].normal, pts[p]) - faces[fi].offset > eps) {
                visible.push_back(fi);
                is_visible[fi] = true;
            }
        }
        if (visible.empty()) continue;
        std::vector<std::pair<std::size_t, std::size_t>> horizon;
        for (std::size_t fi : visible) {
            const auto& v = faces[fi].v;
            for (int e = 0; e < 3; ++e) {
                const std::size_t a = v[e], b = v[(e + 1) % 3];
                const auto twin = edge_face.find({b, a});
                if (twin == edge_face.end() || !is_visible[twin->second]) horizon.emplace_back(a, b);
            }
        }
        for (std::size_t fi : visible) {
            faces[fi].alive = false;
            const auto& v = faces[fi].v;
            for (int e = 0; e < 3; ++e) edge_face.erase({v[e], v[(e + 1) % 3]});
        }
        for (const auto& [a, b] : horizon) {
            faces.push_back(detail::make_face(pts, a, b, p, interior));
            link(faces.size() - 1);
        }
    }

    // Merge coplanar triangles into facets and keep points on three or more facets.
    std::vector<std::size_t> facet_of;
    std::vector<std::pair<Point3, double>> facets;
    for (const auto& f : faces) {
        if (!f.alive) continue;
        std::size_t id = facets.size();
        for (std::size_t k = 0; k < facets.size(); ++k) {
            if (geom::dot(facets[k].first, f.normal) > 1 - tol && std::abs(facets[k].second - f.offset) <= eps) {
                id = k;
                break;
            }
        }
        if (id == facets.size()) facets.emplace_back(f.normal, f.offset);
        facet_of.push_back(id);
        hull.triangles.push_back(f.v);
    }
    std::map<std::size_t, std::set<std::size_t>> incident;
    for (std::size_t t = 0; t < hull.triangles.size(); ++t)
        for (std::size_t v : hull.triangles[t]) incident[v].insert(facet_of[t]);
    for (const auto& [v, fs] : incident)
        if (fs.size() >= 3) hull.vertices.push_back(v);
    for (std::size_t a = 0; a < hull.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < hull.vertices.size(); ++b) {
            const auto& fa = incident[hull.vertices[a]];
            const auto& fb = incident[hull.vertices[b]];
            std::size_t shared = 0;
            for (std::size_t f : fa) shared += fb.count(f);
            if (shared >= 2) hull.edges.emplace_back(hull.vertices[a], hull.vertices[b]);
        }
    std::sort(hull.triangles.begin(), hull.triangles.end());
    return hull;
}

struct Classification {
    std::string label;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    double edge_ratio = 1;  // longest / shortest hull edge
};

/// Classification from a hull already computed for pts.
inline Classification classify_hull(const std::vector<Point3>& pts, const Hull& h, double edge_tol = kEdgeTolerance) {
    Classification c;
    c.vertex_count = pts.size();
    if (h.dimension < 3) {
        c.label = h.dimension == 0 ? (pts.size() == 1 ? "point" : "point(v=" + std::to_string(pts.size()) + ")")
                                   : (h.dimension == 1 ? "collinear(v=" : "coplanar(v=") + std::to_string(pts.size()) + ")";
        return c;
    }
    c.vertex_count = h.vertices.size();
    c.edge_count = h.edges.size();
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    std::map<std::size_t, std::size_t> degree;
    for (const auto& [a, b] : h.edges) {
        const double d = geom::distance(pts[a], pts[b]);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
        ++degree[a];
        ++degree[b];
    }
    c.edge_ratio = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
    const bool equal_edges = c.edge_ratio - 1 <= edge_tol;
    const auto all_degree = [&](std::size_t d) {
        return degree.size() == c.vertex_count &&
               std::all_of(degree.begin(), degree.end(), [&](const auto& kv) { return kv.second == d; });
    };
    if (c.vertex_count == 6 && c.edge_count == 12 && all_degree(4) && equal_edges) {
        c.label = "regular octahedron";
    } else if (c.vertex_count == 12 && c.edge_count == 30 && all_degree(5)) {
        c.label = equal_edges ? "regular icosahedron" : "irregular icosahedron";
    } else {
        c.label = "other(v=" + std::to_string(c.vertex_count) + ")";
    }
    return c;
}

/// Classifies a point set by its hull: regular octahedron, (ir)regular icosahedron, or other.
inline Classification classify_hull(const std::vector<Point3>& pts, double edge_tol = kEdgeTolerance,
                                    double coplanar_tol = kCoplanarTolerance) {
    return classify_hull(pts, convex_hull(pts, coplanar_tol), edge_tol);
}

inline bool is_icosahedral(const Classification& c) { return c.label.ends_with("icosahedron"); }

struct HullLayer {
    std::vector<Point3> points;
    std::vector<std::size_t> multiplicity;  // parallel to points
    std::vector<std::array<std::size_t, 3>> triangles;  // indices into points
    Classification classification;
};

/// Repeatedly takes the extreme points of the hull of what remains. Points must be distinct.
inline std::vector<HullLayer> peel_hulls(const std::vector<Point3>& points, double tol = kCoplanarTolerance,
                                         const std::vector<std::size_t>& multiplicity = {}) {
    std::vector<std::size_t> remaining(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) remaining[i] = i;
    std::vector<HullLayer> layers;
    while (!remaining.empty()) {
        std::vector<Point3> sub;
        for (std::size_t i : remaining) sub.push_back(points[i]);
        const Hull h = convex_hull(sub, tol);
        HullLayer layer;
        for (std::size_t v : h.vertices) {
            layer.points.push_back(sub[v]);
            layer.multiplicity.push_back(multiplicity.empty() ? 1 : multiplicity[remaining[v]]);
        }
        const Hull own = convex_hull(layer.points, tol);
        layer.triangles = own.triangles;
        layer.classification = classify_hull(layer.points, own);
        layers.push_back(std::move(layer));
        if (h.dimension < 3) break;
        std::vector<std::size_t> rest;
        std::size_t k = 0;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (k < h.vertices.size() && h.vertices[k] == i) {
                ++k;
                continue;
            }
            rest.push_back(remaining[i]);
        }
        remaining = std::move(rest);
    }
    return layers;
}

}  // namespace phi8
