// Exact arithmetic in Q(sqrt5) = Q(phi) and its quadratic extension by sqrt(phi).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace phi8 {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

inline constexpr double kPhi = 1.6180339887498948482;

inline int sign_of(const Rational& r) { return r.sign(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Renders a rational as "p" or "p/q".
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// a + b*phi with rational a, b. Canonical form is inherited from Rational,
/// so component-wise equality is mathematical equality.
class GoldenScalar {
public:
    GoldenScalar() = default;
    GoldenScalar(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}
    GoldenScalar(int a) : a_(a) {}

    static GoldenScalar phi() { return {0, 1}; }
    /// sqrt5 = 2 phi - 1
    static GoldenScalar sqrt5() { return {-1, 2}; }
    static GoldenScalar rational(std::int64_t p, std::int64_t q = 1) { return {Rational(p, q), 0}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    bool is_integer() const { return b_.is_zero() && phi8::is_integer(a_); }

    /// Galois conjugate: phi -> 1 - phi.
    GoldenScalar conjugate() const { return {a_ + b_, -b_}; }
    /// Field norm x * conj(x) = a^2 + ab - b^2.
    Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    /// Coordinates (r, s) with x = r + s*sqrt5.
    std::pair<Rational, Rational> sqrt5_coords() const { return {a_ + b_ / 2, b_ / 2}; }

    /// Exact sign under the real embedding phi = (1 + sqrt5)/2.
    /// 2x = p + q*sqrt5 with p = 2a + b, q = b.
    int sign() const {
        const Rational p = 2 * a_ + b_;
        const int sp = p.sign();
        const int sq = b_.sign();
        if (sp >= 0 && sq >= 0) return (sp | sq) ? 1 : 0;
        if (sp <= 0 && sq <= 0) return -1;
        const Rational diff = p * p - 5 * b_ * b_;
        return sp > 0 ? diff.sign() : -diff.sign();
    }

    double to_double() const { return phi8::to_double(a_) + phi8::to_double(b_) * kPhi; }

    GoldenScalar inverse() const {
        const Rational n = norm();
        if (n.is_zero()) throw DivisionByZero();
        const GoldenScalar c = conjugate();
        return {c.a_ / n, c.b_ / n};
    }

    GoldenScalar operator-() const { return {-a_, -b_}; }

    GoldenScalar& operator+=(const GoldenScalar& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    GoldenScalar& operator-=(const GoldenScalar& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    GoldenScalar& operator*=(const GoldenScalar& o) {
        // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        const Rational bd = b_ * o.b_;
        Rational na = a_ * o.a_ + bd;
        Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    GoldenScalar& operator/=(const GoldenScalar& o) { return *this *= o.inverse(); }

    friend GoldenScalar operator+(GoldenScalar x, const GoldenScalar& y) { return x += y; }
    friend GoldenScalar operator-(GoldenScalar x, const GoldenScalar& y) { return x -= y; }
    friend GoldenScalar operator*(GoldenScalar x, const GoldenScalar& y) { return x *= y; }
    friend GoldenScalar operator/(GoldenScalar x, const GoldenScalar& y) { return x /= y; }

    friend bool operator==(const GoldenScalar& x, const GoldenScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Real-value ordering.
    friend std::strong_ordering operator<=>(const GoldenScalar& x, const GoldenScalar& y) {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    GoldenScalar pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        GoldenScalar result = 1, base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            base *= base;
            k >>= 1;
        }
        return result;
    }

private:
    Rational a_{0};
    Rational b_{0};
};

/// u + v*sqrt(phi) with u, v in Q(phi).
class GoldenExt {
public:
    GoldenExt() = default;
    GoldenExt(GoldenScalar u, GoldenScalar v = {}) : u_(std::move(u)), v_(std::move(v)) {}
    GoldenExt(int u) : u_(u) {}
    GoldenExt(Rational u) : u_(std::move(u)) {}

    static GoldenExt sqrt_phi() { return {GoldenScalar{}, GoldenScalar{1}}; }
    static GoldenExt phi() { return {GoldenScalar::phi()}; }

    const GoldenScalar& u() const { return u_; }
    const GoldenScalar& v() const { return v_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool in_base_field() const { return v_.is_zero(); }

    GoldenExt conjugate() const { return {u_, -v_}; }
    /// u^2 - v^2 phi, an element of Q(phi).
    GoldenScalar norm() const { return u_ * u_ - v_ * v_ * GoldenScalar::phi(); }

    /// Exact sign under the real embedding; sqrt(phi) > 0.
    int sign() const {
        const int su = u_.sign();
        const int sv = v_.sign();
        if (su == 0) return sv;
        if (sv == 0 || su == sv) return su;
        return su * norm().sign();
    }

    double to_double() const { return u_.to_double() + v_.to_double() * std::sqrt(kPhi); }

    GoldenExt inverse() const {
        const GoldenScalar n = norm();
        if (n.is_zero()) throw DivisionByZero();
        const GoldenScalar ni = n.inverse();
        return {u_ * ni, -(v_ * ni)};
    }

    GoldenExt operator-() const { return {-u_, -v_}; }

    GoldenExt& operator+=(const GoldenExt& o) {
        u_ += o.u_;
        v_ += o.v_;
        return *this;
    }
    GoldenExt& operator-=(const GoldenExt& o) {
        u_ -= o.u_;
        v_ -= o.v_;
        return *this;
    }
    GoldenExt& operator*=(const GoldenExt& o) {
        if (v_.is_zero() && o.v_.is_zero()) {
            u_ *= o.u_;
            return *this;
        }
        GoldenScalar nu = u_ * o.u_ + v_ * o.v_ * GoldenScalar::phi();
        GoldenScalar nv = u_ * o.v_ + v_ * o.u_;
        u_ = std::move(nu);
        v_ = std::move(nv);
        return *this;
    }
    GoldenExt& operator/=(const GoldenExt& o) { return *this *= o.inverse(); }

    friend GoldenExt operator+(GoldenExt x, const GoldenExt& y) { return x += y; }
    friend GoldenExt operator-(GoldenExt x, const GoldenExt& y) { return x -= y; }
    friend GoldenExt operator*(GoldenExt x, const GoldenExt& y) { return x *= y; }
    friend GoldenExt operator/(GoldenExt x, const GoldenExt& y) { return x /= y; }

    friend bool operator==(const GoldenExt& x, const GoldenExt& y) {
        return x.u_ == y.u_ && x.v_ == y.v_;
    }

    GoldenExt pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        GoldenExt result = 1, base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            base *= base;
            k >>= 1;
        }
        return result;
    }

private:
    GoldenScalar u_;
    GoldenScalar v_;
};

/// Structural (not real-value) ordering, for use as a map key.
struct StructuralLess {
    bool operator()(const GoldenScalar& x, const GoldenScalar& y) const {
        if (x.a() != y.a()) return x.a() < y.a();
        return x.b() < y.b();
    }
    bool operator()(const GoldenExt& x, const GoldenExt& y) const {
        if (!(x.u() == y.u())) return (*this)(x.u(), y.u());
        return (*this)(x.v(), y.v());
    }
};

namespace detail {

inline std::string coefficient_prefix(const Rational& c) {
    if (c == 1) return "";
    if (is_integer(c)) return to_string(c);
    return "(" + to_string(c) + ")";
}

// Appends "sign term" to out, starting a new sum if out is empty.
inline void append_term(std::string& out, const Rational& c, const std::string& symbol) {
    if (c.is_zero()) return;
    const Rational mag = c.sign() < 0 ? Rational(-c) : c;
    std::string term = symbol.empty() ? to_string(mag) : coefficient_prefix(mag) + symbol;
    if (out.empty()) {
        out = c.sign() < 0 ? "-" + term : term;
    } else {
        out += c.sign() < 0 ? " - " : " + ";
        out += term;
    }
}

}  // namespace detail

/// "p/q + (r/s)φ"
inline std::string to_string(const GoldenScalar& x) {
    std::string out;
    detail::append_term(out, x.a(), "");
    detail::append_term(out, x.b(), "φ");
    return out.empty() ? "0" : out;
}

/// Same value written in the {1, √5} basis, e.g. "3√5" or "7".
inline std::string to_sqrt5_string(const GoldenScalar& x) {
    const auto [r, s] = x.sqrt5_coords();
    std::string out;
    detail::append_term(out, r, "");
    detail::append_term(out, s, "√5");
    return out.empty() ? "0" : out;
}

/// "<u> + (<v>)√φ"; the √φ factor is omitted when v = 0.
inline std::string to_string(const GoldenExt& x) {
    if (x.v().is_zero()) return to_string(x.u());
    std::string vpart;
    const GoldenScalar& v = x.v();
    if (v == GoldenScalar(1)) {
        vpart = "√φ";
    } else if (v == GoldenScalar(-1)) {
        vpart = "-√φ";
    } else {
        vpart = "(" + to_string(v) + ")√φ";
    }
    if (x.u().is_zero()) return vpart;
    return to_string(x.u()) + (vpart.front() == '-' ? " - " + vpart.substr(1) : " + " + vpart);
}

inline std::ostream& operator<<(std::ostream& os, const GoldenScalar& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const GoldenExt& x) { return os << to_string(x); }

}  // namespace phi8
