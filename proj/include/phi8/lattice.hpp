// E8 roots, the (8,4) extended Hamming code, Construction A, and the Hadamard-row / codeword map.
#pragma once

#include "phi8/constants.hpp"
#include "phi8/identities.hpp"
#include "phi8/roots.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace phi8 {

/// Point of R^8 with rational coordinates.
using LatticeVector = std::array<Rational, 8>;

inline Rational dot(const LatticeVector& x, const LatticeVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < 8; ++i) s += x[i] * y[i];
    return s;
}

inline Rational squared_norm(const LatticeVector& x) { return dot(x, x); }

inline LatticeVector negate(LatticeVector x) {
    for (auto& c : x) c = -c;
    return x;
}

/// The 240 roots of E8 in the even coordinate system: 112 of shape (±1, ±1, 0^6) and
/// 128 of shape (±1/2)^8 with an even number of minus signs.
inline std::vector<LatticeVector> gen_e8_roots() {
    std::vector<LatticeVector> roots;
    roots.reserve(240);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    LatticeVector v{};
                    v[i] = si;
                    v[j] = sj;
                    roots.push_back(v);
                }
    const Rational half(1, 2);
    for (unsigned mask = 0; mask < 256; ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        LatticeVector v{};
        for (std::size_t i = 0; i < 8; ++i) v[i] = (mask >> i) & 1u ? Rational(-half) : half;
        roots.push_back(v);
    }
    return roots;
}

/// Number of unordered pairs {x, y} with |x - y|^2 = d2.
inline std::size_t count_pairs_at_squared_distance(const std::vector<LatticeVector>& pts, const Rational& d2) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < 8; ++k) {
                const Rational d = pts[i][k] - pts[j][k];
                s += d * d;
            }
            if (s == d2) ++count;
        }
    return count;
}

/// Histogram of <x, y> over unordered pairs.
inline std::map<Rational, std::size_t> inner_product_histogram(const std::vector<LatticeVector>& pts) {
    std::map<Rational, std::size_t> hist;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) ++hist[dot(pts[i], pts[j])];
    return hist;
}

/// Binary linear code; bit i of a word is coordinate i.
struct BinaryCode {
    std::size_t n = 0;
    std::vector<std::uint32_t> generator;

    std::size_t k() const { return generator.size(); }

    /// All 2^k codewords, sorted.
    std::vector<std::uint32_t> codewords() const {
        std::vector<std::uint32_t> words;
        for (std::uint32_t m = 0; m < (1u << k()); ++m) {
            std::uint32_t w = 0;
            for (std::size_t r = 0; r < k(); ++r)
                if ((m >> r) & 1u) w ^= generator[r];
            words.push_back(w);
        }
        std::sort(words.begin(), words.end());
        return words;
    }

    /// Coefficient of x^w at index w, by full expansion.
    std::vector<std::size_t> weight_enumerator() const {
        std::vector<std::size_t> a(n + 1, 0);
        for (auto w : codewords()) ++a[static_cast<std::size_t>(std::popcount(w))];
        return a;
    }

    std::size_t min_distance() const {
        std::size_t best = n + 1;
        for (auto w : codewords())
            if (w != 0) best = std::min(best, static_cast<std::size_t>(std::popcount(w)));
        return best;
    }

    bool doubly_even() const {
        return std::ranges::all_of(codewords(), [](std::uint32_t w) { return std::popcount(w) % 4 == 0; });
    }
};

/// Rank over GF(2).
inline std::size_t gf2_rank(std::vector<std::uint32_t> rows) {
    std::size_t rank = 0;
    for (int bit = 31; bit >= 0; --bit) {
        const std::uint32_t mask = 1u << bit;
        auto it = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                               [&](std::uint32_t r) { return r & mask; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<long>(rank), it);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

/// C equals its dual: dimension n/2 and all generator pairs orthogonal.
inline bool is_self_dual(const BinaryCode& c) {
    if (2 * c.k() != c.n || gf2_rank(c.generator) != c.k()) return false;
    for (auto x : c.generator)
        for (auto y : c.generator)
            if (std::popcount(x & y) % 2 != 0) return false;
    return true;
}

/// Extended Hamming code [8, 4, 4] in systematic form [I | P].
inline BinaryCode hamming84() {
    // Coordinates 0..3 carry the message, 4..7 the parity checks.
    const std::array<std::uint32_t, 4> parity{0b1110, 0b1101, 0b1011, 0b0111};
    BinaryCode c;
    c.n = 8;
    for (std::size_t r = 0; r < 4; ++r) c.generator.push_back((1u << r) | (parity[r] << 4));
    return c;
}

using IntMatrix = std::vector<std::vector<long>>;

inline Rational rational_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col].is_zero()) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

struct ConstructionA {
    IntMatrix basis;                          // rows, before the 1/sqrt2 scaling
    std::vector<std::vector<Rational>> gram;  // basis * basis^T / 2
    Rational determinant;
    bool even = false;
    bool positive_definite = false;
    std::size_t minimal_norm_count = 0;       // vectors of scaled squared norm 2
};

namespace detail {

inline bool is_extended_hamming_84(const BinaryCode& c) {
    if (c.n != 8 || c.k() != 4 || gf2_rank(c.generator) != 4) return false;
    const auto a = c.weight_enumerator();
    return a[0] == 1 && a[4] == 14 && a[8] == 1 && is_self_dual(c);
}

}  // namespace detail

/// Number of x in Z^8 with |x_i| <= 2, x mod 2 in C, |x|^2 = 4; any |x_i| >= 3 already gives |x|^2 >= 9.
inline std::size_t count_minimal_vectors(const BinaryCode& code) {
    std::vector<bool> in_code(256, false);
    for (auto w : code.codewords()) in_code[w] = true;
    std::size_t count = 0;
    std::array<int, 8> x{};
    // Odometer over {-2..2}^8.
    std::array<int, 5> values{-2, -1, 0, 1, 2};
    std::array<std::size_t, 8> idx{};
    for (;;) {
        int norm = 0;
        std::uint32_t parity = 0;
        for (std::size_t i = 0; i < 8; ++i) {
            x[i] = values[idx[i]];
            norm += x[i] * x[i];
            if (x[i] % 2 != 0) parity |= 1u << i;
        }
        if (norm == 4 && in_code[parity]) ++count;
        std::size_t pos = 0;
        while (pos < 8 && ++idx[pos] == values.size()) idx[pos++] = 0;
        if (pos == 8) break;
    }
    return count;
}

/// L = {x in Z^8 : x mod 2 in C} / sqrt2, with the scale kept as a squared factor.
inline ConstructionA construction_a(const BinaryCode& code) {
    if (!detail::is_extended_hamming_84(code))
        throw Error("construction A here needs the self-dual doubly-even (8,4) extended Hamming code");
    // Reduced row echelon form over GF(2), pivots on the lowest coordinates.
    std::vector<std::uint32_t> rows = code.generator;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t bit = 0; bit < code.n && rank < rows.size(); ++bit) {
        const std::uint32_t mask = 1u << bit;
        auto it = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                               [&](std::uint32_t r) { return r & mask; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<long>(rank), it);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        pivots.push_back(bit);
        ++rank;
    }
    ConstructionA out;
    for (auto r : rows) {
        std::vector<long> v(code.n, 0);
        for (std::size_t i = 0; i < code.n; ++i) v[i] = (r >> i) & 1u;
        out.basis.push_back(v);
    }
    for (std::size_t c = 0; c < code.n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        std::vector<long> v(code.n, 0);
        v[c] = 2;
        out.basis.push_back(v);
    }
    const std::size_t n = out.basis.size();
    out.gram.assign(n, std::vector<Rational>(n));
    out.even = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long s = 0;
            for (std::size_t k = 0; k < code.n; ++k) s += out.basis[i][k] * out.basis[j][k];
            out.gram[i][j] = Rational(s, 2);
            if (!is_integer(out.gram[i][j])) out.even = false;
            if (i == j && (!is_integer(out.gram[i][i]) || numerator(out.gram[i][i]) % 2 != 0)) out.even = false;
        }
    out.determinant = rational_determinant(out.gram);
    out.positive_definite = true;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = out.gram[i][j];
        if (rational_determinant(minor).sign() <= 0) out.positive_definite = false;
    }
    out.minimal_norm_count = count_minimal_vectors(code);
    return out;
}

/// Bit vector of a +-1 row: bit i set where the entry is -1.
inline std::uint32_t sign_bits(const ExactMatrix& m, std::size_t row, bool negate_row) {
    std::uint32_t w = 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
        const int s = m(row, c).sign() * (negate_row ? -1 : 1);
        if (s < 0) w |= 1u << c;
    }
    return w;
}

inline std::uint32_t permute_bits(std::uint32_t w, const std::array<std::size_t, 8>& perm) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < 8; ++i)
        if ((w >> i) & 1u) out |= 1u << perm[i];
    return out;
}

struct HadamardCodeMap {
    std::vector<std::uint32_t> words;       // from rows, then negated rows
    std::optional<std::array<std::size_t, 8>> permutation;  // coordinate i -> perm[i]
    IdentityReport report;
};

/// Maps rows of the 3-qubit Hadamard and their negations to bit vectors and finds one
/// coordinate permutation carrying that set onto the Hamming codewords.
inline HadamardCodeMap hadamard_code_correspondence(const BinaryCode& code = hamming84()) {
    const ExactMatrix h = build_hadamard(3).matrix;
    HadamardCodeMap out;
    for (bool neg : {false, true})
        for (std::size_t r = 0; r < 8; ++r) out.words.push_back(sign_bits(h, r, neg));

    std::vector<std::uint32_t> mapped = out.words;
    std::sort(mapped.begin(), mapped.end());
    const std::vector<std::uint32_t> target = code.codewords();

    std::optional<Witness> witness;
    const auto distribution = [](const std::vector<std::uint32_t>& ws) {
        std::array<std::size_t, 9> d{};
        for (auto w : ws) ++d[static_cast<std::size_t>(std::popcount(w))];
        return d;
    };
    const bool unique_words = std::adjacent_find(mapped.begin(), mapped.end()) == mapped.end();
    if (!unique_words || mapped.size() != target.size()) {
        witness = Witness{0, 0, "16 distinct words", std::to_string(mapped.size()) + " words, distinct=" +
                                                          (unique_words ? "yes" : "no")};
    } else if (distribution(mapped) != distribution(target)) {
        witness = Witness{0, 0, "weights 1+14x^4+x^8", "different weight distribution"};
    } else {
        std::array<std::size_t, 8> perm{};
        std::iota(perm.begin(), perm.end(), 0);
        const std::set<std::uint32_t> target_set(target.begin(), target.end());
        do {
            bool ok = true;
            for (auto w : mapped)
                if (!target_set.contains(permute_bits(w, perm))) {
                    ok = false;
                    break;
                }
            if (ok) {
                out.permutation = perm;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!out.permutation) witness = Witness{0, 0, "a coordinate permutation", "none of 8! permutations"};
    }
    std::string detail;
    if (out.permutation) {
        detail = "permutation";
        for (std::size_t i = 0; i < 8; ++i) detail += " " + std::to_string(i) + "->" + std::to_string((*out.permutation)[i]);
    }
    out.report = detail::make_report("hadamard_code_map", witness, detail);
    return out;
}

struct VertexCoordCheck {
    std::vector<LatticeVector> vertices;  // +-(coeffs . srE8)
    bool all_norm_two = false;
    bool histogram_matches = false;
    bool same_set = false;                // exact equality with gen_e8_roots() as sets
    std::size_t positive_roots = 0;
};

/// SRE E8 vertices from the positive roots of cmE8 (enumerated) times srE8.
inline VertexCoordCheck e8_vertex_coords() {
    const ExactMatrix sr = build_srE8();
    const Enumeration en = enumerate(build_cmE8(), {PairingMode::Normalized, 30, true});
    VertexCoordCheck out;
    out.positive_roots = en.roots.size();
    for (int s : {1, -1})
        for (const auto& root : en.roots) {
            LatticeVector v{};
            for (std::size_t i = 0; i < 8; ++i) {
                if (root.coeffs[i] == 0) continue;
                for (std::size_t c = 0; c < 8; ++c) v[c] += Rational(s * root.coeffs[i]) * sr(i, c).u().a();
            }
            out.vertices.push_back(v);
        }
    out.all_norm_two = std::all_of(out.vertices.begin(), out.vertices.end(),
                                   [](const LatticeVector& v) { return squared_norm(v) == 2; });
    const auto reference = gen_e8_roots();
    out.histogram_matches = inner_product_histogram(out.vertices) == inner_product_histogram(reference);
    const std::set<LatticeVector> a(out.vertices.begin(), out.vertices.end());
    const std::set<LatticeVector> b(reference.begin(), reference.end());
    out.same_set = a == b && a.size() == out.vertices.size();
    return out;
}

/// Check names accepted by run_lattice_check, in run order.
inline const std::vector<std::string>& lattice_check_names() {
    static const std::vector<std::string> names{"roots", "hamming", "construction-a", "hadamard-map", "vertex-coords"};
    return names;
}

namespace detail {
inline std::optional<Witness> expect_count(const std::string& what, std::size_t expected, std::size_t actual) {
    if (expected == actual) return std::nullopt;
    return Witness{0, 0, what + "=" + std::to_string(expected), what + "=" + std::to_string(actual)};
}
}  // namespace detail

/// E8 root counts: 240 roots of norm 2, 6720 pairs at squared distance 2, cmE8 = srE8.srE8^T.
inline std::vector<IdentityReport> check_e8_roots() {
    const auto roots = gen_e8_roots();
    std::vector<IdentityReport> out;
    const bool norms = std::all_of(roots.begin(), roots.end(), [](const LatticeVector& v) { return squared_norm(v) == 2; });
    out.push_back(detail::make_report("e8_root_count", detail::expect_count("roots", 240, roots.size()),
                                      "roots=" + std::to_string(roots.size())));
    out.push_back(detail::make_report(
        "e8_root_norms", norms ? std::nullopt : std::optional<Witness>(Witness{0, 0, "all squared norms 2", "mismatch"})));
    const std::size_t edges = count_pairs_at_squared_distance(roots, Rational(2));
    out.push_back(detail::make_report("e8_edge_count", detail::expect_count("edges", 6720, edges),
                                      "edges=" + std::to_string(edges)));
    const ExactMatrix sr = build_srE8();
    out.push_back(detail::make_report("e8_cartan_gram", detail::first_mismatch(build_cmE8(), sr * sr.transpose())));
    return out;
}

inline std::vector<IdentityReport> check_hamming(const BinaryCode& code = hamming84()) {
    std::vector<IdentityReport> out;
    const auto words = code.codewords();
    out.push_back(detail::make_report("hamming_codewords", detail::expect_count("codewords", 16, words.size()),
                                      "codewords=" + std::to_string(words.size())));
    const auto we = code.weight_enumerator();
    std::string poly;
    for (std::size_t w = 0; w < we.size(); ++w)
        if (we[w] != 0)
            poly += (poly.empty() ? "" : " + ") + (we[w] == 1 && w != 0 ? "" : std::to_string(we[w])) +
                    (w == 0 ? "" : "x^" + std::to_string(w));
    const bool we_ok = poly == "1 + 14x^4 + x^8";
    out.push_back(detail::make_report(
        "hamming_weight_enumerator", we_ok ? std::nullopt : std::optional<Witness>(Witness{0, 0, "1 + 14x^4 + x^8", poly}),
        poly));
    out.push_back(detail::make_report("hamming_min_distance", detail::expect_count("d", 4, code.min_distance()),
                                      "d=" + std::to_string(code.min_distance())));
    const bool sd = is_self_dual(code) && code.doubly_even();
    out.push_back(detail::make_report(
        "hamming_self_dual", sd ? std::nullopt : std::optional<Witness>(Witness{0, 0, "self-dual doubly even", "no"})));
    return out;
}

inline std::vector<IdentityReport> check_construction_a(const BinaryCode& code = hamming84()) {
    const ConstructionA ca = construction_a(code);
    std::vector<IdentityReport> out;
    out.push_back(detail::make_report(
        "construction_a_even", ca.even ? std::nullopt : std::optional<Witness>(Witness{0, 0, "even", "odd"})));
    out.push_back(detail::make_report(
        "construction_a_unimodular",
        ca.determinant == 1 ? std::nullopt : std::optional<Witness>(Witness{0, 0, "1", to_string(ca.determinant)}),
        "det=" + to_string(ca.determinant)));
    out.push_back(detail::make_report("construction_a_minimal_vectors",
                                      detail::expect_count("minimal", 240, ca.minimal_norm_count),
                                      "minimal=" + std::to_string(ca.minimal_norm_count)));
    return out;
}

inline std::vector<IdentityReport> check_vertex_coords() {
    const VertexCoordCheck vc = e8_vertex_coords();
    const auto flag = [](bool ok, const char* what) {
        return ok ? std::nullopt : std::optional<Witness>(Witness{0, 0, what, "no"});
    };
    return {detail::make_report("vertex_coords_count", detail::expect_count("vertices", 240, vc.vertices.size()),
                                "positive=" + std::to_string(vc.positive_roots)),
            detail::make_report("vertex_coords_norms", flag(vc.all_norm_two, "all squared norms 2")),
            detail::make_report("vertex_coords_histogram", flag(vc.histogram_matches, "inner-product histogram")),
            detail::make_report("vertex_coords_same_set", flag(vc.same_set, "equal to the root set"))};
}

/// Runs one named check, or every check for "all"; nullopt for an unknown name.
inline std::optional<std::vector<IdentityReport>> run_lattice_check(const std::string& name) {
    if (name == "all") {
        std::vector<IdentityReport> out;
        for (const auto& n : lattice_check_names()) {
            auto part = *run_lattice_check(n);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (name == "roots") return check_e8_roots();
    if (name == "hamming") return check_hamming();
    if (name == "construction-a") return check_construction_a();
    if (name == "hadamard-map") return std::vector<IdentityReport>{hadamard_code_correspondence().report};
    if (name == "vertex-coords") return check_vertex_coords();
    return std::nullopt;
}

}  // namespace phi8
