// Height-by-height positive-root enumeration for Cartan-like matrices, with weights,
// Hasse diagrams and DOT/CSV rendering.
#pragma once

#include "phi8/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace phi8 {

/// How a candidate beta + e_j is accepted.
///  - Normalized: root-string rule p - <beta, j> >= 1 with <beta, j> = 2 (A beta)_j / A_jj.
///  - Raw: the same rule with <beta, j> = (A beta)_j.
///  - SerreFree: every coefficient vector with connected support in the graph {A_ij != 0},
///    except k e_i for k >= 2. This is the root support of the algebra whose only relations
///    are [e_i, e_j] = 0 for A_ij = A_ji = 0.
enum class PairingMode { Normalized, Raw, SerreFree };

inline std::string to_string(PairingMode m) {
    switch (m) {
        case PairingMode::Normalized: return "normalized";
        case PairingMode::Raw: return "raw";
        case PairingMode::SerreFree: return "serre-free";
    }
    return "?";
}

inline std::optional<PairingMode> parse_pairing_mode(const std::string& s) {
    if (s == "normalized" || s == "normalized-pairing") return PairingMode::Normalized;
    if (s == "raw" || s == "raw-pairing") return PairingMode::Raw;
    if (s == "serre-free" || s == "free") return PairingMode::SerreFree;
    return std::nullopt;
}

struct EnumerationRule {
    PairingMode mode = PairingMode::Normalized;
    int max_height = 10;
    bool dedup = true;
};

using Coeffs = std::vector<int>;

struct RootRecord {
    Coeffs coeffs;
    int height = 0;
    std::vector<GoldenScalar> weight;                      // A * coeffs
    std::vector<std::pair<std::size_t, std::size_t>> parents;  // (root index, simple root added)
};

struct EnumerationStats {
    std::size_t accepted_paths = 0;      // every (beta, j) acceptance, duplicates included
    std::size_t distinct_roots = 0;      // distinct coefficient vectors
    std::size_t duplicates_merged = 0;   // accepted_paths + simple roots - distinct_roots
    std::size_t distinct_weights = 0;    // distinct weight vectors among distinct roots
};

/// Roots ordered by height, then by descending lexicographic order of coefficients (e1 first).
struct Enumeration {
    std::vector<RootRecord> roots;
    EnumerationRule rule;
    EnumerationStats stats;

    int max_height() const { return roots.empty() ? 0 : roots.back().height; }

    /// Distinct coefficient vectors per height, index h-1.
    std::vector<std::size_t> counts_by_height() const {
        std::vector<std::size_t> counts(static_cast<std::size_t>(max_height()), 0);
        std::set<Coeffs> seen;
        for (const auto& r : roots)
            if (seen.insert(r.coeffs).second) ++counts[static_cast<std::size_t>(r.height - 1)];
        return counts;
    }

    std::size_t cumulative_through(int height) const {
        const auto counts = counts_by_height();
        std::size_t total = 0;
        for (std::size_t h = 0; h < counts.size() && static_cast<int>(h) < height; ++h) total += counts[h];
        return total;
    }
};

namespace detail {

inline std::vector<GoldenScalar> apply(const ExactMatrix& a, const Coeffs& c) {
    const std::size_t n = a.size();
    std::vector<GoldenScalar> w(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (c[i] != 0) w[j] += a(j, i).u() * GoldenScalar(c[i]);
    return w;
}

inline bool adjacent(const ExactMatrix& a, std::size_t i, std::size_t j) {
    return i != j && (!a(i, j).is_zero() || !a(j, i).is_zero());
}

}  // namespace detail

/// Enumerates positive roots up to rule.max_height. Entries of a must lie in Q(phi).
inline Enumeration enumerate(const ExactMatrix& a, const EnumerationRule& rule = {}) {
    const std::size_t n = a.size();
    if (n == 0) throw Error("cannot enumerate roots of an empty matrix");
    if (rule.max_height < 1) throw Error("max_height must be at least 1");
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!a(r, c).in_base_field())
                throw Error("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") is outside Q(φ); root enumeration needs a Q(φ) matrix");
    if (rule.mode == PairingMode::Normalized)
        for (std::size_t j = 0; j < n; ++j)
            if (a(j, j).is_zero())
                throw Error("diagonal entry " + std::to_string(j) +
                            " is zero; normalized pairing is undefined, use raw or serre-free mode");

    std::vector<GoldenScalar> diag_inv(n);
    if (rule.mode == PairingMode::Normalized)
        for (std::size_t j = 0; j < n; ++j) diag_inv[j] = GoldenScalar(2) * a(j, j).u().inverse();

    std::set<Coeffs> found;
    std::vector<std::vector<Coeffs>> levels;
    // child -> accepting (parent coeffs, j) paths
    std::vector<std::map<Coeffs, std::vector<std::pair<Coeffs, std::size_t>>>> paths;

    levels.emplace_back();
    paths.emplace_back();
    for (std::size_t i = 0; i < n; ++i) {
        Coeffs e(n, 0);
        e[i] = 1;
        levels[0].push_back(e);
        paths[0][e];
        found.insert(e);
    }

    EnumerationStats stats;
    for (int h = 1; h < rule.max_height && !levels.back().empty(); ++h) {
        std::map<Coeffs, std::vector<std::pair<Coeffs, std::size_t>>> next;
        for (const Coeffs& beta : levels.back()) {
            const std::vector<GoldenScalar> w =
                rule.mode == PairingMode::SerreFree ? std::vector<GoldenScalar>{} : detail::apply(a, beta);
            std::vector<bool> near(n, false);
            std::size_t support = 0;
            if (rule.mode == PairingMode::SerreFree) {
                for (std::size_t i = 0; i < n; ++i) {
                    if (beta[i] == 0) continue;
                    ++support;
                    near[i] = true;
                    for (std::size_t k = 0; k < n; ++k)
                        if (detail::adjacent(a, i, k)) near[k] = true;
                }
            }
            for (std::size_t j = 0; j < n; ++j) {
                bool accept = false;
                if (rule.mode == PairingMode::SerreFree) {
                    accept = near[j] && !(support == 1 && beta[j] != 0);
                } else {
                    int p = 0;
                    Coeffs down = beta;
                    while (down[j] > 0) {
                        --down[j];
                        if (!found.contains(down)) break;
                        ++p;
                    }
                    const GoldenScalar pairing =
                        rule.mode == PairingMode::Normalized ? w[j] * diag_inv[j] : w[j];
                    accept = (GoldenScalar(p) - pairing - GoldenScalar(1)).sign() >= 0;
                }
                if (!accept) continue;
                Coeffs gamma = beta;
                ++gamma[j];
                next[gamma].emplace_back(beta, j);
                ++stats.accepted_paths;
            }
        }
        std::vector<Coeffs> level;
        for (auto it = next.rbegin(); it != next.rend(); ++it) {
            level.push_back(it->first);
            found.insert(it->first);
        }
        if (level.empty()) break;
        levels.push_back(std::move(level));
        paths.push_back(std::move(next));
    }

    Enumeration out;
    out.rule = rule;
    std::map<Coeffs, std::size_t> index_of;
    struct WeightLess {
        bool operator()(const std::vector<GoldenScalar>& x, const std::vector<GoldenScalar>& y) const {
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), StructuralLess{});
        }
    };
    std::set<std::vector<GoldenScalar>, WeightLess> distinct_weights;
    for (std::size_t lv = 0; lv < levels.size(); ++lv) {
        for (const Coeffs& gamma : levels[lv]) {
            RootRecord base;
            base.coeffs = gamma;
            base.height = static_cast<int>(lv) + 1;
            base.weight = detail::apply(a, gamma);
            distinct_weights.insert(base.weight);
            const auto& accepted = paths[lv][gamma];
            std::vector<std::pair<std::size_t, std::size_t>> parents;
            for (const auto& [beta, j] : accepted) parents.emplace_back(index_of.at(beta), j);
            std::sort(parents.begin(), parents.end());
            index_of[gamma] = out.roots.size();
            if (rule.dedup || parents.empty()) {
                base.parents = std::move(parents);
                out.roots.push_back(std::move(base));
            } else {
                for (const auto& parent : parents) {
                    RootRecord copy = base;
                    copy.parents = {parent};
                    out.roots.push_back(std::move(copy));
                }
            }
        }
    }
    stats.distinct_roots = index_of.size();
    stats.duplicates_merged = stats.accepted_paths + n - stats.distinct_roots;
    stats.distinct_weights = distinct_weights.size();
    out.stats = stats;
    return out;
}

struct HasseEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t simple = 0;
    friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
    friend auto operator<=>(const HasseEdge&, const HasseEdge&) = default;
};

/// Edge beta -> beta + e_j for every pair of present roots; indices refer to the first record of each vector.
inline std::vector<HasseEdge> hasse(const std::vector<RootRecord>& roots) {
    std::map<Coeffs, std::size_t> index_of;
    for (std::size_t i = 0; i < roots.size(); ++i) index_of.emplace(roots[i].coeffs, i);
    std::vector<HasseEdge> edges;
    for (const auto& [coeffs, i] : index_of) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            Coeffs up = coeffs;
            ++up[j];
            if (auto it = index_of.find(up); it != index_of.end()) edges.push_back({i, it->second, j});
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline std::string coeffs_label(const Coeffs& c) {
    const bool compact = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0 && x < 10; });
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!compact && i > 0) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

/// "r<height>_<position within height>", positions counted over distinct coefficient vectors.
inline std::vector<std::string> node_names(const std::vector<RootRecord>& roots) {
    std::vector<std::string> names(roots.size());
    std::map<int, std::size_t> next_position;
    std::map<Coeffs, std::string> assigned;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        auto it = assigned.find(roots[i].coeffs);
        if (it == assigned.end()) {
            const std::size_t pos = next_position[roots[i].height]++;
            it = assigned.emplace(roots[i].coeffs, "r" + std::to_string(roots[i].height) + "_" + std::to_string(pos)).first;
        }
        names[i] = it->second;
    }
    return names;
}

inline std::string emit_hasse_dot(const std::vector<HasseEdge>& edges, const std::vector<RootRecord>& roots,
                                  const std::string& graph_name = "hasse") {
    const auto names = node_names(roots);
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    std::map<int, std::vector<std::size_t>> by_height;
    std::set<std::string> emitted;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (emitted.insert(names[i]).second) by_height[roots[i].height].push_back(i);
    for (const auto& [h, members] : by_height) {
        out << "  subgraph height_" << h << " {\n    rank=same;\n";
        for (std::size_t i : members)
            out << "    " << names[i] << " [label=\"" << coeffs_label(roots[i].coeffs) << "\"];\n";
        out << "  }\n";
    }
    for (const auto& e : edges)
        out << "  " << names[e.from] << " -> " << names[e.to] << " [label=\"" << e.simple + 1 << "\"];\n";
    out << "}\n";
    return out.str();
}

struct WeightsRow {
    std::size_t index = 0;
    int height = 0;
    std::string coeffs;
    std::vector<std::string> weight;
    bool integral = true;
};

struct WeightsTable {
    std::vector<WeightsRow> rows;
    bool all_integer = true;
};

inline WeightsTable weights_table(const std::vector<RootRecord>& roots) {
    WeightsTable t;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        WeightsRow row;
        row.index = i;
        row.height = roots[i].height;
        row.coeffs = coeffs_label(roots[i].coeffs);
        for (const auto& w : roots[i].weight) {
            row.weight.push_back(to_string(w));
            row.integral = row.integral && w.is_integer();
        }
        t.all_integer = t.all_integer && row.integral;
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline std::string format_weights_table(const WeightsTable& t) {
    std::ostringstream out;
    out << "index\theight\tcoeffs\tweight\n";
    for (const auto& r : t.rows) {
        out << r.index << '\t' << r.height << '\t' << r.coeffs << "\t(";
        for (std::size_t k = 0; k < r.weight.size(); ++k) out << (k ? ", " : "") << r.weight[k];
        out << ")\n";
    }
    out << "all weights integral: " << (t.all_integer ? "yes" : "no") << '\n';
    return out.str();
}

namespace detail {
inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}
}  // namespace detail

/// Columns: height, coeffs, weight, parents. Parents are "<node>+e<j>" separated by spaces.
inline std::string roots_csv(const std::vector<RootRecord>& roots) {
    const auto names = node_names(roots);
    std::map<Coeffs, std::size_t> first;
    for (std::size_t i = 0; i < roots.size(); ++i) first.emplace(roots[i].coeffs, i);
    std::ostringstream out;
    out << "height,coeffs,weight,parents\n";
    for (const auto& r : roots) {
        std::string weight;
        for (std::size_t k = 0; k < r.weight.size(); ++k) weight += (k ? "; " : "") + to_sqrt5_string(r.weight[k]);
        std::string parents;
        for (const auto& [idx, j] : r.parents)
            parents += (parents.empty() ? "" : " ") + names[idx] + "+e" + std::to_string(j + 1);
        out << r.height << ',' << detail::csv_quote(coeffs_label(r.coeffs)) << ',' << detail::csv_quote(weight)
            << ',' << detail::csv_quote(parents) << '\n';
    }
    return out.str();
}

}  // namespace phi8
