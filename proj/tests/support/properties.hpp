// Randomized property suites shared by the unit tests and the acceptance binary.
#pragma once

#include "phi8/hull.hpp"
#include "phi8/matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace props {

using phi8::GoldenExt;
using phi8::GoldenScalar;
using phi8::Rational;

struct Outcome {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && cases > 0; }
    void check(bool cond, const std::string& what) {
        if (cond) return;
        if (failures++ == 0) first_failure = what;
    }
};

inline Rational random_rational(std::mt19937& rng, int range = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
    const int p = num(rng);
    return Rational(p, den(rng));
}

inline GoldenScalar random_scalar(std::mt19937& rng) {
    Rational a = random_rational(rng);
    return {std::move(a), random_rational(rng)};
}

inline GoldenExt random_ext(std::mt19937& rng) {
    GoldenScalar u = random_scalar(rng);
    return {std::move(u), random_scalar(rng)};
}

/// Small integer pair a + b phi; draws are sequenced so runs agree across compilers.
inline GoldenScalar small_scalar(std::mt19937& rng, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    const int a = d(rng);
    return {a, d(rng)};
}

inline GoldenExt random_nonzero_ext(std::mt19937& rng) {
    for (;;)
        if (GoldenExt x = random_ext(rng); !x.is_zero()) return x;
}

/// Ring and field axioms on random elements of Q(phi)(sqrt(phi)), plus ordering against doubles.
inline Outcome field_axioms(unsigned seed, int cases) {
    std::mt19937 rng(seed);
    Outcome o;
    for (int i = 0; i < cases; ++i) {
        const GoldenExt a = random_ext(rng);
        const GoldenExt b = random_ext(rng);
        const GoldenExt c = random_ext(rng);
        const std::string tag = "case " + std::to_string(i);
        o.check(a + b == b + a, tag + " add commutes");
        o.check(a * b == b * a, tag + " mul commutes");
        o.check((a + b) + c == a + (b + c), tag + " add associates");
        o.check((a * b) * c == a * (b * c), tag + " mul associates");
        o.check(a * (b + c) == a * b + a * c, tag + " distributes");
        o.check(a + GoldenExt(0) == a && a * GoldenExt(1) == a, tag + " identities");
        o.check((a - a).is_zero(), tag + " additive inverse");
        if (!a.is_zero()) o.check(a * a.inverse() == GoldenExt(1), tag + " multiplicative inverse");
        o.check(a.conjugate().conjugate() == a, tag + " conjugation involutive");
        o.check((a * b).norm() == a.norm() * b.norm(), tag + " norm multiplicative");
        const double da = a.to_double(), db = b.to_double();
        o.check(std::abs((a * b).to_double() - da * db) <= 1e-9 * (1 + std::abs(da * db)), tag + " double product");
        if (std::abs(da - db) > 1e-9) o.check(((a - b).sign() > 0) == (da > db), tag + " sign agrees with doubles");
        const GoldenScalar s = a.u(), t = b.u();
        o.check(s.norm() * t.norm() == (s * t).norm(), tag + " scalar norm multiplicative");
        ++o.cases;
    }
    return o;
}

/// Random invertible P as L * R with unit-diagonal lower L and upper R over Q(phi).
inline phi8::ExactMatrix random_unimodular_like(std::mt19937& rng, std::size_t n) {
    phi8::ExactMatrix l = phi8::ExactMatrix::identity(n), r = phi8::ExactMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = GoldenExt(small_scalar(rng, 2));
            r(j, i) = GoldenExt(small_scalar(rng, 2));
        }
    return l * r;
}

inline phi8::ExactMatrix random_matrix(std::mt19937& rng, std::size_t n, bool with_sqrt_phi) {
    std::uniform_int_distribution<int> small(-3, 3);
    phi8::ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GoldenScalar u = small_scalar(rng, 3);
            const GoldenScalar v = with_sqrt_phi ? GoldenScalar(small(rng), 0) : GoldenScalar();
            m(i, j) = GoldenExt(u, v);
        }
    return m;
}

/// char_poly(P A P^-1) == char_poly(A).
inline Outcome similarity_invariance(unsigned seed, int cases) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size(2, 5);
    Outcome o;
    for (int i = 0; i < cases; ++i) {
        const std::size_t n = i % 10 == 0 ? 8 : static_cast<std::size_t>(size(rng));
        const auto a = random_matrix(rng, n, i % 2 == 1);
        const auto p = random_unimodular_like(rng, n);
        const auto b = p * a * phi8::mat_inv(p);
        o.check(phi8::char_poly(a) == phi8::char_poly(b), "case " + std::to_string(i) + " n=" + std::to_string(n));
        ++o.cases;
    }
    return o;
}

/// A^j A^k == A^(j+k) for j, k in [-4, 4] on random invertible A.
inline Outcome pow_additivity(unsigned seed, int cases) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> exp(-4, 4), size(2, 4);
    Outcome o;
    for (int i = 0; i < cases; ++i) {
        const std::size_t n = static_cast<std::size_t>(size(rng));
        // L D R with a diagonal of units, so A is invertible and not unipotent
        phi8::ExactMatrix d = phi8::ExactMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = GoldenExt(GoldenScalar::phi().pow(exp(rng)));
        const phi8::ExactMatrix l = random_unimodular_like(rng, n);
        const phi8::ExactMatrix a = l * d * random_unimodular_like(rng, n);
        const int j = exp(rng);
        const int k = exp(rng);
        const bool ok = phi8::mat_pow(a, j) * phi8::mat_pow(a, k) == phi8::mat_pow(a, j + k);
        o.check(ok, "case " + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k));
        ++o.cases;
    }
    return o;
}

inline std::vector<phi8::Point3> octahedron(double s = 1) {
    return {{s, 0, 0}, {-s, 0, 0}, {0, s, 0}, {0, -s, 0}, {0, 0, s}, {0, 0, -s}};
}

/// Cyclic permutations of (0, +-1, +-phi).
inline std::vector<phi8::Point3> icosahedron(double s = 1) {
    const double f = phi8::kPhi;
    std::vector<phi8::Point3> out;
    for (double a : {-1.0, 1.0})
        for (double b : {-f, f}) {
            out.push_back({0, s * a, s * b});
            out.push_back({s * a, s * b, 0});
            out.push_back({s * b, 0, s * a});
        }
    return out;
}

/// Icosahedron stretched along z: same combinatorics, unequal edges.
inline std::vector<phi8::Point3> stretched_icosahedron() {
    auto p = icosahedron();
    for (auto& x : p) x[2] *= 1.3;
    return p;
}

inline std::vector<phi8::Point3> cube(double s = 1) {
    std::vector<phi8::Point3> out;
    for (double x : {-s, s})
        for (double y : {-s, s})
            for (double z : {-s, s}) out.push_back({x, y, z});
    return out;
}

/// Uniform random rotation from a normalized Gaussian quaternion.
inline std::array<phi8::Point3, 3> random_rotation(std::mt19937& rng) {
    std::normal_distribution<double> g;
    double w = g(rng);
    double x = g(rng);
    double y = g(rng);
    double z = g(rng);
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n, x /= n, y /= n, z /= n;
    return {{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
             {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
             {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
}

inline std::vector<phi8::Point3> transform(const std::vector<phi8::Point3>& pts, const std::array<phi8::Point3, 3>& r,
                                           double scale, const phi8::Point3& shift = {0, 0, 0}) {
    std::vector<phi8::Point3> out;
    for (const auto& p : pts) {
        phi8::Point3 q{};
        for (std::size_t i = 0; i < 3; ++i) q[i] = scale * phi8::geom::dot(r[i], p) + shift[i];
        out.push_back(q);
    }
    return out;
}

/// Classification of canonical solids survives random rotations, uniform scalings and reorderings.
inline Outcome hull_rotation_invariance(unsigned seed, int cases) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> scale(0.05, 40.0);
    struct Solid {
        std::vector<phi8::Point3> pts;
        std::string label;
    };
    const std::vector<Solid> solids{{octahedron(), "regular octahedron"},
                                    {icosahedron(), "regular icosahedron"},
                                    {stretched_icosahedron(), "irregular icosahedron"},
                                    {cube(), "other(v=8)"}};
    Outcome o;
    for (int i = 0; i < cases; ++i) {
        const Solid& s = solids[static_cast<std::size_t>(i) % solids.size()];
        const auto rot = random_rotation(rng);
        auto pts = transform(s.pts, rot, scale(rng));
        std::shuffle(pts.begin(), pts.end(), rng);
        const auto c = phi8::classify_hull(pts);
        o.check(c.label == s.label, "case " + std::to_string(i) + ": expected " + s.label + ", got " + c.label);
        ++o.cases;
    }
    return o;
}

}  // namespace props
