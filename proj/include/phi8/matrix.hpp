// Dense square matrices over GoldenExt.
#pragma once

#include "phi8/field.hpp"
#include "phi8/literal.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace phi8 {

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(std::size_t column)
        : Error("matrix is singular: no nonzero pivot in column " + std::to_string(column)), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t a, std::size_t b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t n) : n_(n), data_(n * n) {}
    ExactMatrix(std::initializer_list<std::initializer_list<GoldenExt>> rows) : n_(rows.size()), data_() {
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw Error("matrix literal is not square");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    /// Antidiagonal ones.
    static ExactMatrix exchange(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
        return m;
    }
    /// P with P(i, perm[i]) = 1, so (P A P^T)(i, j) = A(perm[i], perm[j]).
    static ExactMatrix permutation(const std::vector<std::size_t>& perm) {
        ExactMatrix m(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) m(i, perm[i]) = 1;
        return m;
    }

    std::size_t size() const { return n_; }

    GoldenExt& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const GoldenExt& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    ExactMatrix transpose() const {
        ExactMatrix t(n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    ExactMatrix operator-() const {
        ExactMatrix m(*this);
        for (auto& x : m.data_) x = -x;
        return m;
    }
    ExactMatrix& operator+=(const ExactMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    ExactMatrix& operator-=(const ExactMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    ExactMatrix& operator*=(const GoldenExt& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const GoldenExt& s) { return a *= s; }
    friend ExactMatrix operator*(const GoldenExt& s, ExactMatrix a) { return a *= s; }
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
    std::size_t n_ = 0;
    std::vector<GoldenExt> data_;

    void check_same(const ExactMatrix& o) const {
        if (o.n_ != n_) throw DimensionMismatch(n_, o.n_);
    }
};

inline ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
    const std::size_t n = a.size();
    ExactMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const GoldenExt& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

namespace detail {

// Gauss-Jordan on [a | rhs]; pivots on the first exactly-nonzero entry at or below the diagonal.
// Returns the determinant of a; rhs is overwritten with a^{-1} rhs.
inline GoldenExt gauss_jordan(ExactMatrix a, ExactMatrix* rhs) {
    const std::size_t n = a.size();
    GoldenExt det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrix(col);
        if (pivot != col) {
            det = -det;
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                if (rhs) std::swap((*rhs)(pivot, j), (*rhs)(col, j));
            }
        }
        const GoldenExt p = a(col, col);
        det *= p;
        const GoldenExt inv = p.inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= inv;
            if (rhs) (*rhs)(col, j) *= inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const GoldenExt f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
                if (rhs && !(*rhs)(col, j).is_zero()) (*rhs)(r, j) -= f * (*rhs)(col, j);
            }
        }
    }
    return det;
}

}  // namespace detail

/// Exact inverse; throws SingularMatrix naming the column without a pivot.
inline ExactMatrix mat_inv(const ExactMatrix& a) {
    ExactMatrix inv = ExactMatrix::identity(a.size());
    detail::gauss_jordan(a, &inv);
    return inv;
}

inline GoldenExt determinant(const ExactMatrix& a) {
    try {
        return detail::gauss_jordan(a, nullptr);
    } catch (const SingularMatrix&) {
        return 0;
    }
}

/// Integer power by repeated squaring; negative k inverts first.
inline ExactMatrix mat_pow(const ExactMatrix& a, int k) {
    ExactMatrix base = k < 0 ? mat_inv(a) : a;
    unsigned e = k < 0 ? static_cast<unsigned>(-static_cast<long>(k)) : static_cast<unsigned>(k);
    ExactMatrix result = ExactMatrix::identity(a.size());
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

inline GoldenExt trace(const ExactMatrix& a) {
    GoldenExt t;
    for (std::size_t i = 0; i < a.size(); ++i) t += a(i, i);
    return t;
}

/// Monic characteristic polynomial, coefficients in degree-descending order.
struct CharPoly {
    std::vector<GoldenExt> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool palindromic() const { return std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin()); }
    /// True when every coefficient lies in Q(phi).
    bool in_base_field() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const GoldenExt& c) { return c.in_base_field(); });
    }
    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Faddeev-LeVerrier: M_0 = 0, c_0 = 1; M_k = A M_{k-1} + c_{k-1} I; c_k = -tr(A M_k) / k.
inline CharPoly char_poly(const ExactMatrix& a) {
    const std::size_t n = a.size();
    CharPoly cp;
    cp.coeffs.reserve(n + 1);
    cp.coeffs.emplace_back(1);
    ExactMatrix m(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += cp.coeffs.back();
        const GoldenExt t = trace(a * m);
        cp.coeffs.push_back(-(t * GoldenExt(Rational(1, static_cast<long>(k)))));
    }
    return cp;
}

/// Characteristic polynomial of s*A where only s^2 is known. Coefficient k scales by s^k,
/// so every odd-index coefficient of A must vanish.
inline CharPoly char_poly_scaled(const ExactMatrix& a, const Rational& scale_squared) {
    CharPoly cp = char_poly(a);
    GoldenExt factor = 1;
    for (std::size_t k = 0; k < cp.coeffs.size(); ++k) {
        if (k % 2 == 1) {
            if (!cp.coeffs[k].is_zero())
                throw Error("odd coefficient " + std::to_string(k) + " is nonzero; scaled polynomial leaves the field");
            continue;
        }
        if (k > 0) factor *= GoldenExt(scale_squared);
        cp.coeffs[k] *= factor;
    }
    return cp;
}

inline std::string to_string(const CharPoly& cp) {
    std::string out;
    const std::size_t n = cp.degree();
    for (std::size_t k = 0; k <= n; ++k) {
        const GoldenExt& c = cp.coeffs[k];
        if (c.is_zero()) continue;
        const std::size_t power = n - k;
        std::string mono = power == 0 ? "" : (power == 1 ? "x" : "x^" + std::to_string(power));
        const bool negative = c.sign() < 0;
        const GoldenExt mag = negative ? -c : c;
        std::string cs = mag.in_base_field() ? to_sqrt5_string(mag.u()) : to_string(mag);
        const bool simple = cs.find_first_of(" ") == std::string::npos;
        std::string term;
        if (mono.empty()) {
            term = cs;
        } else if (cs == "1") {
            term = mono;
        } else {
            term = (simple ? cs : "(" + cs + ")") + " " + mono;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

struct MatrixPredicates {
    GoldenExt trace;
    GoldenExt det;
    bool is_symmetric = false;
    bool is_orthogonal = false;
    bool is_traceless = false;
};

inline MatrixPredicates predicates(const ExactMatrix& a) {
    MatrixPredicates p;
    p.trace = trace(a);
    p.det = determinant(a);
    p.is_symmetric = a == a.transpose();
    p.is_orthogonal = a.transpose() * a == ExactMatrix::identity(a.size());
    p.is_traceless = p.trace.is_zero();
    return p;
}

// Matrix literal text format: one row per line, entries separated by ';'.
// Blank lines and '#' comments are ignored.

inline ExactMatrix parse_matrix(std::istream& in) {
    std::vector<std::vector<GoldenExt>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<GoldenExt> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ';')) row.push_back(parse_golden(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error("matrix literal is empty");
    const std::size_t n = rows.size();
    ExactMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n)
            throw Error("matrix literal row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                        " entries, expected " + std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

inline ExactMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

namespace detail {
// Display width in code points; entries contain φ and √.
inline std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}
}  // namespace detail

/// Column-aligned literal; re-parses to the same matrix.
inline std::string format_matrix(const ExactMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::string> cells(n * n);
    std::vector<std::size_t> width(n, 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            cells[r * n + c] = to_string(m(r, c));
            width[c] = std::max(width[c], detail::display_width(cells[r * n + c]));
        }
    std::string out;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::string& s = cells[r * n + c];
            out += s;
            if (c + 1 < n) {
                out += std::string(width[c] - detail::display_width(s), ' ');
                out += " ; ";
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace phi8
