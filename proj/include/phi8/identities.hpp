// Executable checks of the golden-ratio matrix identities satisfied by U and cmU = U.U.
#pragma once

#include "phi8/constants.hpp"
#include "phi8/matrix.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace phi8 {

/// First entry where a check failed. For polynomial checks row is the coefficient index and col is 0.
struct Witness {
    std::size_t row = 0;
    std::size_t col = 0;
    std::string expected;
    std::string actual;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// holds == !witness.has_value(). detail carries the computed quantities for reports.
struct IdentityReport {
    std::string name;
    bool holds = true;
    std::optional<Witness> witness;
    std::string detail;
    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

namespace detail {

inline std::optional<Witness> first_mismatch(const ExactMatrix& expected, const ExactMatrix& actual) {
    if (expected.size() != actual.size())
        return Witness{0, 0, "size " + std::to_string(expected.size()), "size " + std::to_string(actual.size())};
    for (std::size_t r = 0; r < expected.size(); ++r)
        for (std::size_t c = 0; c < expected.size(); ++c)
            if (!(expected(r, c) == actual(r, c))) return Witness{r, c, to_string(expected(r, c)), to_string(actual(r, c))};
    return std::nullopt;
}

inline std::optional<Witness> first_mismatch(const CharPoly& expected, const CharPoly& actual) {
    const std::size_t n = std::max(expected.coeffs.size(), actual.coeffs.size());
    for (std::size_t k = 0; k < n; ++k) {
        const GoldenExt e = k < expected.coeffs.size() ? expected.coeffs[k] : GoldenExt{};
        const GoldenExt a = k < actual.coeffs.size() ? actual.coeffs[k] : GoldenExt{};
        if (!(e == a)) return Witness{k, 0, to_string(e), to_string(a)};
    }
    return std::nullopt;
}

inline IdentityReport make_report(std::string name, std::optional<Witness> witness, std::string detail = {}) {
    IdentityReport r;
    r.name = std::move(name);
    r.holds = !witness.has_value();
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
}

// Combines several sub-checks; the first failure wins. An empty label keeps the witness as is.
struct CheckList {
    std::optional<Witness> witness;
    std::vector<std::string> failed;

    void add(const std::string& label, std::optional<Witness> w) {
        if (!w) return;
        failed.push_back(label);
        if (!witness) witness = std::move(w);
    }
    void require(const std::string& label, bool ok, const std::string& expected, const std::string& actual) {
        if (ok) return;
        add(label, Witness{0, 0, expected, actual});
    }
};

inline std::string join_failed(const CheckList& checks) {
    std::string s;
    for (const auto& f : checks.failed) s += (s.empty() ? "failed: " : ", ") + f;
    return s;
}

}  // namespace detail

/// x^8 - 4x^6 + 6x^4 - 4x^2 + 1
inline CharPoly hadamard_char_poly() { return CharPoly{{1, 0, -4, 0, 6, 0, -4, 0, 1}}; }

/// x^8 - 2 sqrt5 x^6 + 7x^4 - 2 sqrt5 x^2 + 1
inline CharPoly u_char_poly() {
    const GoldenExt t = GoldenExt(GoldenScalar::sqrt5()) * GoldenExt(-2);
    return CharPoly{{1, 0, t, 0, 7, 0, t, 0, 1}};
}

/// U.U equals the tabulated cmU.
inline IdentityReport verify_u_squared(const ExactMatrix& u = build_U()) {
    return detail::make_report("u_squared_is_cartan", detail::first_mismatch(build_cmU(), u * u));
}

/// U times the tabulated inverse is I, and elimination reproduces the tabulated inverse.
inline IdentityReport verify_u_inverse(const ExactMatrix& u = build_U()) {
    detail::CheckList checks;
    const ExactMatrix id = ExactMatrix::identity(u.size());
    checks.add("U.Uinv = I", detail::first_mismatch(id, u * build_U_inv()));
    try {
        checks.add("inv(U) = Uinv", detail::first_mismatch(build_U_inv(), mat_inv(u)));
    } catch (const SingularMatrix& e) {
        checks.require("inv(U) exists", false, "nonsingular", e.what());
    }
    return detail::make_report("u_inverse", checks.witness, detail::join_failed(checks));
}

/// cmU - cmU^{-1} = J with cmU = U.U.
inline IdentityReport verify_golden_cartan(const ExactMatrix& u = build_U()) {
    const ExactMatrix cm = u * u;
    try {
        return detail::make_report("golden_cartan", detail::first_mismatch(build_J(u.size()), cm - mat_inv(cm)));
    } catch (const SingularMatrix& e) {
        return detail::make_report("golden_cartan", Witness{e.column(), e.column(), "nonsingular cmU", e.what()});
    }
}

/// (cmU + cmU^{-1}) / (2 phi - 1) = I, and the scalar analogue (phi + 1/phi)/(2 phi - 1) = 1.
inline IdentityReport verify_identity_sum(const ExactMatrix& u = build_U()) {
    detail::CheckList checks;
    const GoldenScalar p = GoldenScalar::phi();
    const GoldenScalar scalar = (p + p.inverse()) / GoldenScalar::sqrt5();
    checks.require("scalar analogue", scalar == GoldenScalar(1), "1", to_string(scalar));
    const ExactMatrix cm = u * u;
    try {
        const ExactMatrix sum = (cm + mat_inv(cm)) * GoldenExt(GoldenScalar::sqrt5().inverse());
        checks.add("matrix sum", detail::first_mismatch(ExactMatrix::identity(u.size()), sum));
    } catch (const SingularMatrix& e) {
        checks.require("cmU invertible", false, "nonsingular", e.what());
    }
    return detail::make_report("identity_sum", checks.witness, detail::join_failed(checks));
}

struct PowerPattern {
    int n = 0;
    GoldenScalar sum_scalar;   // phi^n + phi^-n
    GoldenScalar diff_scalar;  // phi^n - phi^-n
    /// The parity rule: even n has an integer sum and an integer multiple of sqrt5 as difference;
    /// odd n the other way around.
    bool parity_pattern = false;
    IdentityReport report;
};

namespace detail {

inline bool is_integer_multiple_of_sqrt5(const GoldenScalar& x) {
    const auto [r, s] = x.sqrt5_coords();
    return r.is_zero() && is_integer(s);
}

}  // namespace detail

/// cmU^n + cmU^-n = (phi^n + phi^-n) I and cmU^n - cmU^-n = (phi^n - phi^-n) J.
inline PowerPattern verify_power_pattern(int n, const ExactMatrix& cm = build_cmU()) {
    if (n < 1 || n > 12) throw Error("power pattern n must be in [1, 12], got " + std::to_string(n));
    PowerPattern out;
    out.n = n;
    const GoldenScalar p = GoldenScalar::phi();
    out.sum_scalar = p.pow(n) + p.pow(-n);
    out.diff_scalar = p.pow(n) - p.pow(-n);
    const GoldenScalar& integral = n % 2 == 0 ? out.sum_scalar : out.diff_scalar;
    const GoldenScalar& radical = n % 2 == 0 ? out.diff_scalar : out.sum_scalar;
    out.parity_pattern = integral.is_integer() && detail::is_integer_multiple_of_sqrt5(radical);

    detail::CheckList checks;
    const ExactMatrix pos = mat_pow(cm, n);
    const ExactMatrix neg = mat_pow(cm, -n);
    const std::size_t dim = cm.size();
    checks.add("sum", detail::first_mismatch(GoldenExt(out.sum_scalar) * ExactMatrix::identity(dim), pos + neg));
    checks.add("difference", detail::first_mismatch(GoldenExt(out.diff_scalar) * ExactMatrix::exchange(dim), pos - neg));
    checks.require("parity", out.parity_pattern, "integer / integer*sqrt5 alternation",
                   to_sqrt5_string(out.sum_scalar) + " / " + to_sqrt5_string(out.diff_scalar));
    std::string detail = "sum=" + to_sqrt5_string(out.sum_scalar) + " diff=" + to_sqrt5_string(out.diff_scalar);
    if (!checks.failed.empty()) detail += "; " + detail::join_failed(checks);
    out.report = detail::make_report("power_pattern_" + std::to_string(n), checks.witness, detail);
    return out;
}

/// Row reversal R = J.cmU (and cmU.J): R - R^{-1} = (phi - 1/phi) I, R + R^{-1} = (phi + 1/phi) J.
inline IdentityReport verify_row_reversed_swap(const ExactMatrix& cm = build_cmU()) {
    const std::size_t n = cm.size();
    const ExactMatrix j = build_J(n);
    const GoldenScalar p = GoldenScalar::phi();
    const ExactMatrix expect_diff = GoldenExt(p - p.inverse()) * ExactMatrix::identity(n);
    const ExactMatrix expect_sum = GoldenExt(p + p.inverse()) * j;

    detail::CheckList checks;
    std::vector<std::string> satisfied;
    for (const auto& [label, r] : {std::pair{std::string("left"), j * cm}, std::pair{std::string("right"), cm * j}}) {
        try {
            const ExactMatrix ri = mat_inv(r);
            auto wd = detail::first_mismatch(expect_diff, r - ri);
            auto ws = detail::first_mismatch(expect_sum, r + ri);
            if (!wd && !ws) satisfied.push_back(label);
            checks.add(label + " difference", wd);
            checks.add(label + " sum", ws);
        } catch (const SingularMatrix& e) {
            checks.require(label + " invertible", false, "nonsingular", e.what());
        }
    }
    std::string detail = "R-R^-1 = " + to_sqrt5_string(p - p.inverse()) + "·I, R+R^-1 = " +
                         to_sqrt5_string(p + p.inverse()) + "·J; holds for:";
    for (const auto& s : satisfied) detail += " " + s;
    if (satisfied.empty()) detail += " none";
    // The swap claim needs one reversal order; report the other order's status in detail only.
    std::optional<Witness> witness = satisfied.empty() ? checks.witness : std::nullopt;
    return detail::make_report("row_reversed_swap", witness, detail);
}

/// Scalar factor (phi^n +/- 1) / phi^(n/2) for odd n, with phi^(n/2) = phi^((n-1)/2) sqrt(phi).
inline GoldenExt odd_power_factor(int n, int sign) {
    const GoldenScalar p = GoldenScalar::phi();
    const GoldenExt half_power = GoldenExt(p.pow((n - 1) / 2)) * GoldenExt::sqrt_phi();
    return GoldenExt(p.pow(n) + GoldenScalar(sign)) / half_power;
}

/// U^n + U^-n = -B+ (phi^n + 1)/phi^(n/2) and U^n - U^-n = -B- (phi^n - 1)/phi^(n/2),
/// plus: both brackets traceless, orthogonal, with the Hadamard characteristic polynomial.
inline IdentityReport verify_odd_power_forms(int n, const ExactMatrix& u = build_U()) {
    if (n < 1 || n > 9 || n % 2 == 0) throw Error("odd power forms need odd n in [1, 9], got " + std::to_string(n));
    const ExactMatrix bp = build_bracket_plus();
    const ExactMatrix bm = build_bracket_minus();
    detail::CheckList checks;
    try {
        const ExactMatrix pos = mat_pow(u, n);
        const ExactMatrix neg = mat_pow(u, -n);
        checks.add("sum form", detail::first_mismatch(-bp * odd_power_factor(n, 1), pos + neg));
        checks.add("difference form", detail::first_mismatch(-bm * odd_power_factor(n, -1), pos - neg));
    } catch (const SingularMatrix& e) {
        checks.require("U invertible", false, "nonsingular", e.what());
    }
    for (const auto& [label, b] : {std::pair{std::string("B+"), bp}, std::pair{std::string("B-"), bm}}) {
        const MatrixPredicates pr = predicates(b);
        checks.require(label + " traceless", pr.is_traceless, "0", to_string(pr.trace));
        checks.require(label + " orthogonal", pr.is_orthogonal, "B^T B = I", "not orthogonal");
        checks.add(label + " char poly", detail::first_mismatch(hadamard_char_poly(), char_poly(b)));
    }
    return detail::make_report("odd_power_forms_" + std::to_string(n), checks.witness, detail::join_failed(checks));
}

/// Both characteristic polynomials recomputed from scratch, compared coefficient-exactly, and palindromic.
inline IdentityReport verify_char_polys(const ExactMatrix& u = build_U()) {
    detail::CheckList checks;
    const ScaledMatrix h = build_hadamard(3);
    const CharPoly hcp = char_poly_scaled(h.matrix, h.scale_squared);
    const CharPoly ucp = char_poly(u);
    checks.add("normalized Hadamard", detail::first_mismatch(hadamard_char_poly(), hcp));
    checks.add("U", detail::first_mismatch(u_char_poly(), ucp));
    checks.require("Hadamard palindromic", hcp.palindromic(), "palindromic", to_string(hcp));
    checks.require("U palindromic", ucp.palindromic(), "palindromic", to_string(ucp));
    std::string detail = "H/√8: " + to_string(hcp) + "; U: " + to_string(ucp);
    if (!checks.failed.empty()) detail += "; " + detail::join_failed(checks);
    return detail::make_report("char_polys", checks.witness, detail);
}

/// Exploratory: compares (1/2) I - (3/2) J with -U^{-1}. Reported, never asserted.
inline IdentityReport schlafli_probe(const ExactMatrix& u = build_U()) {
    const ExactMatrix candidate =
        GoldenExt(Rational(1, 2)) * ExactMatrix::identity(8) - GoldenExt(Rational(3, 2)) * build_J();
    std::optional<Witness> w;
    std::size_t differing = 0;
    try {
        const ExactMatrix target = -mat_inv(u);
        w = detail::first_mismatch(target, candidate);
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c)
                if (!(target(r, c) == candidate(r, c))) ++differing;
    } catch (const SingularMatrix& e) {
        w = Witness{e.column(), e.column(), "nonsingular U", e.what()};
    }
    return detail::make_report("schlafli_probe", w, std::to_string(differing) + " of 64 entries differ");
}

/// Verifier names in run order.
inline const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v{"u_squared_is_cartan", "u_inverse", "golden_cartan", "identity_sum"};
        for (int n = 1; n <= 10; ++n) v.push_back("power_pattern_" + std::to_string(n));
        v.push_back("row_reversed_swap");
        for (int n = 1; n <= 9; n += 2) v.push_back("odd_power_forms_" + std::to_string(n));
        v.push_back("char_polys");
        return v;
    }();
    return names;
}

/// Runs a single verifier by name; cmU is derived from u so a perturbed u shows up everywhere.
inline std::optional<IdentityReport> run_identity(const std::string& name, const ExactMatrix& u = build_U()) {
    if (name == "u_squared_is_cartan") return verify_u_squared(u);
    if (name == "u_inverse") return verify_u_inverse(u);
    if (name == "golden_cartan") return verify_golden_cartan(u);
    if (name == "identity_sum") return verify_identity_sum(u);
    if (name == "row_reversed_swap") return verify_row_reversed_swap(u * u);
    if (name == "char_polys") return verify_char_polys(u);
    if (name == "schlafli_probe") return schlafli_probe(u);
    const auto suffix = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        try {
            return std::stoi(name.substr(prefix.size()));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    try {
        if (auto n = suffix("power_pattern_")) return verify_power_pattern(*n, u * u).report;
        if (auto n = suffix("odd_power_forms_")) return verify_odd_power_forms(*n, u);
    } catch (const Error&) {
        return std::nullopt;
    }
    return std::nullopt;
}

inline std::vector<IdentityReport> run_all(const ExactMatrix& u = build_U()) {
    std::vector<IdentityReport> out;
    for (const auto& name : identity_names()) out.push_back(*run_identity(name, u));
    return out;
}

inline bool all_hold(const std::vector<IdentityReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.holds; });
}

}  // namespace phi8
