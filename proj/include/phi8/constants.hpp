// The named rank-8 matrices: U, its inverse, cmU = U.U, the exchange matrix J,
// Sylvester Hadamard matrices, the odd-power bracket matrices, and the E8 Cartan data.
#pragma once

#include "phi8/matrix.hpp"

#include <array>
#include <bit>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace phi8 {

/// A matrix known only through the square of its overall scale: value = sqrt(scale_squared) * matrix.
struct ScaledMatrix {
    ExactMatrix matrix;
    Rational scale_squared{1};
};

namespace detail {

inline ExactMatrix scaled(const std::vector<std::vector<GoldenScalar>>& rows, const GoldenExt& scale) {
    ExactMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = GoldenExt(rows[r][c]) * scale;
    return m;
}

// 1 / (2 sqrt(phi))
inline GoldenExt u_scale() { return (GoldenExt(2) * GoldenExt::sqrt_phi()).inverse(); }

}  // namespace detail

/// U. Row 2 carries (-1, 1) in columns 3 and 4; with the identical-row variant U would be singular.
inline ExactMatrix build_U() {
    const GoldenScalar p = GoldenScalar::phi();
    const GoldenScalar p2 = p * p;
    const GoldenScalar o = 1, z = 0;
    return detail::scaled({{o - p, z, z, z, z, z, z, -p2},
                           {z, -o, p, z, z, p, o, z},
                           {z, p, z, -o, o, z, p, z},
                           {z, z, -o, p, p, o, z, z},
                           {z, z, o, p, p, -o, z, z},
                           {z, p, z, o, -o, z, p, z},
                           {z, o, p, z, z, p, -o, z},
                           {-p2, z, z, z, z, z, z, o - p}},
                          detail::u_scale());
}

/// U^{-1}, tabulated the same way as U (row 2 carries (-phi, phi)).
inline ExactMatrix build_U_inv() {
    const GoldenScalar p = GoldenScalar::phi();
    const GoldenScalar p2 = p * p;
    const GoldenScalar o = 1, z = 0;
    return detail::scaled({{p - o, z, z, z, z, z, z, -p2},
                           {z, -p, o, z, z, o, p, z},
                           {z, o, z, -p, p, z, o, z},
                           {z, z, -p, o, o, p, z, z},
                           {z, z, p, o, o, -p, z, z},
                           {z, o, z, p, -p, z, o, z},
                           {z, p, o, z, z, o, -p, z},
                           {-p2, z, z, z, z, z, z, p - o}},
                          detail::u_scale());
}

inline ExactMatrix build_J(std::size_t n = 8) { return ExactMatrix::exchange(n); }

/// cmU = (sqrt5/2) I + (1/2) J.
inline ExactMatrix build_cmU() {
    const GoldenExt half(Rational(1, 2));
    return GoldenExt(GoldenScalar::sqrt5()) * half * ExactMatrix::identity(8) + half * build_J();
}

/// Sylvester Hadamard of order 2^q, unnormalized, with scale^2 = 2^-q.
inline ScaledMatrix build_hadamard(int qubits) {
    if (qubits < 1) throw Error("hadamard needs at least one qubit, got " + std::to_string(qubits));
    if (qubits > 12) throw Error("hadamard order 2^" + std::to_string(qubits) + " is too large");
    const std::size_t n = std::size_t{1} << qubits;
    ExactMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = std::popcount(i & j) % 2 == 0 ? 1 : -1;
    return {std::move(h), Rational(1, static_cast<long>(n))};
}

/// Bracket matrix of the odd-power sum U^n + U^-n.
inline ExactMatrix build_bracket_plus() {
    const GoldenExt h(Rational(1, 2));
    ExactMatrix b{{0, 0, 0, 0, 0, 0, 0, 2},   {0, 1, -1, 0, 0, -1, -1, 0}, {0, -1, 0, 1, -1, 0, -1, 0},
                  {0, 0, 1, -1, -1, -1, 0, 0}, {0, 0, -1, -1, -1, 1, 0, 0}, {0, -1, 0, -1, 1, 0, -1, 0},
                  {0, -1, -1, 0, 0, -1, 1, 0}, {2, 0, 0, 0, 0, 0, 0, 0}};
    return b * h;
}

/// Bracket matrix of the odd-power difference U^n - U^-n.
inline ExactMatrix build_bracket_minus() {
    const GoldenExt h(Rational(1, 2));
    ExactMatrix b{{2, 0, 0, 0, 0, 0, 0, 0},    {0, -1, -1, 0, 0, -1, 1, 0}, {0, -1, 0, -1, 1, 0, -1, 0},
                  {0, 0, -1, -1, -1, 1, 0, 0},  {0, 0, 1, -1, -1, -1, 0, 0}, {0, -1, 0, 1, -1, 0, -1, 0},
                  {0, 1, -1, 0, 0, -1, -1, 0},  {0, 0, 0, 0, 0, 0, 0, 2}};
    return b * h;
}

/// E8 Dynkin edges in Bourbaki numbering (0-based): chain 0-2-3-4-5-6-7, node 1 attached to 3.
inline const std::array<std::pair<int, int>, 7>& e8_dynkin_edges() {
    static const std::array<std::pair<int, int>, 7> edges{{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}};
    return edges;
}

inline ExactMatrix build_cmE8() {
    ExactMatrix cm(8);
    for (std::size_t i = 0; i < 8; ++i) cm(i, i) = 2;
    for (auto [i, j] : e8_dynkin_edges()) {
        cm(i, j) = -1;
        cm(j, i) = -1;
    }
    return cm;
}

/// Simple roots (rows) in the even coordinate system:
/// a1 = (1,-1,-1,-1,-1,-1,-1,1)/2, a2 = e1+e2, a3 = e2-e1, ..., a8 = e7-e6.
inline ExactMatrix build_srE8() {
    ExactMatrix sr(8);
    const GoldenExt half(Rational(1, 2));
    for (std::size_t c = 0; c < 8; ++c) sr(0, c) = (c == 0 || c == 7) ? half : -half;
    sr(1, 0) = 1;
    sr(1, 1) = 1;
    for (std::size_t k = 2; k < 8; ++k) {
        sr(k, k - 1) = 1;
        sr(k, k - 2) = -1;
    }
    return sr;
}

/// Names accepted by the CLI, in listing order.
inline const std::vector<std::string>& constant_names() {
    static const std::vector<std::string> names{"U", "Uinv", "cmU", "J", "H", "Bplus", "Bminus", "cmE8", "srE8"};
    return names;
}

/// H resolves to the unnormalized 3-qubit Hadamard.
inline std::optional<ExactMatrix> named_constant(const std::string& name) {
    if (name == "U") return build_U();
    if (name == "Uinv") return build_U_inv();
    if (name == "cmU") return build_cmU();
    if (name == "J") return build_J();
    if (name == "H") return build_hadamard(3).matrix;
    if (name == "Bplus") return build_bracket_plus();
    if (name == "Bminus") return build_bracket_minus();
    if (name == "cmE8") return build_cmE8();
    if (name == "srE8") return build_srE8();
    return std::nullopt;
}

}  // namespace phi8
