// Command-line front end: verify, powers, roots, lattice, project, dump.
#pragma once

#include "phi8/lattice.hpp"
#include "phi8/report_json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace phi8::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kOutDirEnv = "PHI8_OUT_DIR";

class UsageError : public Error {
public:
    using Error::Error;
};

/// Relative output paths are taken relative to $PHI8_OUT_DIR when it is set.
inline std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative())
        if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) p = std::filesystem::path(dir) / p;
    return p;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path.string());
    f << text;
    if (!f) throw Error("failed writing " + path.string());
}

/// Built-in names first, then a matrix-literal file.
inline ExactMatrix resolve_matrix(const std::string& spec) {
    if (auto m = named_constant(spec)) return *m;
    std::ifstream f(spec);
    if (!f) {
        std::string names;
        for (const auto& n : constant_names()) names += (names.empty() ? "" : ", ") + n;
        throw UsageError("'" + spec + "' is neither a built-in matrix (" + names + ") nor a readable file");
    }
    return parse_matrix(f);
}

inline DimTriple parse_dims(const std::string& text) {
    DimTriple d{};
    std::size_t k = 0;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (k == 3) throw UsageError("--dims takes exactly three indices");
        try {
            std::size_t used = 0;
            d[k] = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("--dims: '" + item + "' is not an integer");
        }
        ++k;
    }
    if (k != 3) throw UsageError("--dims takes exactly three indices");
    try {
        check_dims(d, 8);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return d;
}

inline std::string report_line(const IdentityReport& r) {
    std::string line = (r.holds ? "[PASS] " : "[FAIL] ") + r.name;
    if (!r.detail.empty()) line += "  " + r.detail;
    if (r.witness)
        line += "  witness (" + std::to_string(r.witness->row) + "," + std::to_string(r.witness->col) + "): expected " +
                r.witness->expected + ", got " + r.witness->actual;
    return line;
}

inline void print_reports(std::ostream& out, const std::vector<IdentityReport>& reports, const std::string& noun) {
    std::size_t ok = 0;
    for (const auto& r : reports) {
        out << report_line(r) << "\n";
        ok += r.holds ? 1 : 0;
    }
    out << ok << "/" << reports.size() << " " << noun << " hold\n";
}

struct Options {
    // verify
    std::vector<std::string> only;
    bool json = false;
    // powers
    int n = 0;
    // roots
    std::string matrix;
    std::string mode = "normalized";
    int max_height = 10;
    bool no_dedup = false;
    std::string dot_path, csv_path;
    // lattice
    std::string check = "all";
    // project
    std::string dims;
    bool all = false;
    std::string basis = "U";
    std::string obj_dir;
    // dump
    std::string name;
};

inline int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<IdentityReport> reports;
    if (o.only.empty()) {
        reports = run_all();
    } else {
        for (const auto& name : o.only) {
            auto r = run_identity(name);
            if (!r) throw UsageError("unknown identity '" + name + "'");
            reports.push_back(std::move(*r));
        }
    }
    if (o.json)
        out << json::report_list("verify", reports).dump(2) << "\n";
    else
        print_reports(out, reports, "identities");
    return all_hold(reports) ? kExitOk : kExitFailed;
}

inline int cmd_powers(const Options& o, std::ostream& out) {
    if (o.n < 1 || o.n > 12) throw UsageError("-n must be in 1..12");
    const PowerPattern p = verify_power_pattern(o.n);
    if (o.json) {
        out << json::powers_json(p).dump(2) << "\n";
    } else {
        out << "n = " << p.n << "\n";
        out << "cmU^n + cmU^-n = (" << to_sqrt5_string(p.sum_scalar) << ") I\n";
        out << "cmU^n - cmU^-n = (" << to_sqrt5_string(p.diff_scalar) << ") J\n";
        out << "sum scalar " << to_sqrt5_string(p.sum_scalar) << ", diff scalar " << to_sqrt5_string(p.diff_scalar)
            << "\n";
        out << "parity pattern " << (p.parity_pattern ? "holds" : "broken") << "\n";
        out << report_line(p.report) << "\n";
    }
    return p.report.holds && p.parity_pattern ? kExitOk : kExitFailed;
}

inline int cmd_roots(const Options& o, std::ostream& out) {
    const auto mode = parse_pairing_mode(o.mode);
    if (!mode) throw UsageError("unknown --mode '" + o.mode + "' (normalized, raw, serre-free)");
    if (o.max_height < 1) throw UsageError("--max-height must be at least 1");
    const ExactMatrix a = resolve_matrix(o.matrix);
    Enumeration en;
    try {
        en = enumerate(a, {*mode, o.max_height, !o.no_dedup});
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (!o.dot_path.empty()) write_file(resolve_output(o.dot_path), emit_hasse_dot(hasse(en.roots), en.roots));
    if (!o.csv_path.empty()) write_file(resolve_output(o.csv_path), roots_csv(en.roots));
    if (o.json) {
        out << json::roots_json(o.matrix, en).dump(2) << "\n";
        return kExitOk;
    }
    out << en.roots.size() << " positive roots\n";
    out << "mode " << to_string(en.rule.mode) << ", max height " << en.rule.max_height << ", highest root height "
        << en.max_height() << "\n";
    const auto counts = en.counts_by_height();
    std::size_t acc = 0;
    for (std::size_t h = 0; h < counts.size(); ++h) {
        acc += counts[h];
        out << "height " << h + 1 << ": " << counts[h] << " (cumulative " << acc << ")\n";
    }
    out << "accepted paths " << en.stats.accepted_paths << ", duplicates merged " << en.stats.duplicates_merged
        << ", distinct weights " << en.stats.distinct_weights << "\n";
    return kExitOk;
}

inline int cmd_lattice(const Options& o, std::ostream& out) {
    auto reports = run_lattice_check(o.check);
    if (!reports) throw UsageError("unknown --check '" + o.check + "'");
    if (o.json)
        out << json::report_list("lattice", *reports).dump(2) << "\n";
    else
        print_reports(out, *reports, "checks");
    return all_hold(*reports) ? kExitOk : kExitFailed;
}

inline int cmd_project(const Options& o, std::ostream& out) {
    if (o.all == !o.dims.empty()) throw UsageError("give exactly one of --dims or --all");
    VertexBasis basis;
    if (o.basis == "U")
        basis = VertexBasis::U;
    else if (o.basis == "cmU")
        basis = VertexBasis::CmU;
    else
        throw UsageError("--basis must be U or cmU");
    const std::vector<DimTriple> triples = o.all ? all_triples() : std::vector<DimTriple>{parse_dims(o.dims)};

    const VertexSet vs = build_vertices(basis);
    std::vector<HullReport> reports;
    for (const auto& d : triples) {
        const SubsetAnalysis a = analyze_subset(vs, d);
        if (!o.obj_dir.empty()) {
            const std::string file = "dims_" + std::to_string(d[0]) + "_" + std::to_string(d[1]) + "_" +
                                     std::to_string(d[2]) + ".obj";
            write_file(resolve_output(o.obj_dir) / file, emit_obj(a));
        }
        reports.push_back(a.report);
    }
    const Tally t = group_reports(std::move(reports));
    if (!o.csv_path.empty()) write_file(resolve_output(o.csv_path), tally_csv(t));
    if (o.json) {
        out << json::project_json(vs, basis, t.reports, t.groups).dump(2) << "\n";
        return kExitOk;
    }
    out << vs.provenance << "\n";
    for (const auto& r : t.reports) {
        out << "dims {" << to_string(r.dims) << "}: " << r.distinct_points << " distinct points, " << r.layers.size()
            << " layers\n";
        for (std::size_t l = 0; l < r.layers.size(); ++l) {
            const auto& s = r.layers[l];
            out << "  layer " << l + 1 << ": " << s.classification << ", " << s.vertex_count << " vertices, multiplicity "
                << s.multiplicity << ", edge ratio " << detail::fmt_double(s.edge_ratio) << "\n";
        }
    }
    out << t.groups.size() << " signature groups over " << t.reports.size() << " subsets\n";
    for (const auto& g : t.groups) {
        out << "  " << g.members.size() << " x {" << to_string(g.members.front()) << "}";
        for (std::size_t i = 1; i < g.members.size(); ++i) out << " {" << to_string(g.members[i]) << "}";
        out << "\n";
    }
    return kExitOk;
}

inline int cmd_dump(const Options& o, std::ostream& out) {
    const auto m = named_constant(o.name);
    if (!m) {
        std::string names;
        for (const auto& n : constant_names()) names += (names.empty() ? "" : ", ") + n;
        throw UsageError("unknown constant '" + o.name + "' (" + names + ")");
    }
    out << "# " << o.name << "\n";
    if (o.name == "H") out << "# unnormalized; scale^2 = " << to_string(build_hadamard(3).scale_squared) << "\n";
    if (o.name == "U" || o.name == "Uinv") out << "# entries include the overall scale\n";
    out << format_matrix(*m);
    return kExitOk;
}

/// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact golden-ratio matrix identities, root systems, E8 lattice checks and hull projections", "phi8"};
    app.require_subcommand(1, 1);
    Options o;

    auto* verify = app.add_subcommand("verify", "Run the exact identity battery");
    verify->add_option("--only", o.only, "Run only the named identity (repeatable)");
    verify->add_flag("--json", o.json, "Print a JSON report");

    auto* powers = app.add_subcommand("powers", "Power law cmU^n +- cmU^-n for one n");
    powers->add_option("-n", o.n, "Exponent, 1..12")->required();
    powers->add_flag("--json", o.json, "Print a JSON report");

    auto* roots = app.add_subcommand("roots", "Positive-root enumeration on a Cartan-like matrix");
    auto* matrix_opt = roots->add_option("--matrix", o.matrix, "Built-in matrix name or matrix-literal file");
    roots->add_option("--matrix-file", o.matrix, "Matrix-literal file")->excludes(matrix_opt);
    roots->add_option("--mode", o.mode, "normalized | raw | serre-free")->capture_default_str();
    roots->add_option("--max-height", o.max_height, "Highest height to enumerate")->capture_default_str();
    roots->add_flag("--no-dedup", o.no_dedup, "Keep one record per accepted path");
    roots->add_option("--dot", o.dot_path, "Write the Hasse diagram as DOT");
    roots->add_option("--csv", o.csv_path, "Write the roots as CSV");
    roots->add_flag("--json", o.json, "Print a JSON report");

    auto* lattice = app.add_subcommand("lattice", "E8 lattice, Hamming code and Construction A checks");
    lattice->add_option("--check", o.check, "roots | hamming | construction-a | hadamard-map | vertex-coords | all")
        ->capture_default_str();
    lattice->add_flag("--json", o.json, "Print a JSON report");

    auto* project = app.add_subcommand("project", "Coordinate projections to 3D and hull-layer tallies");
    project->add_option("--dims", o.dims, "Three 1-based coordinates, e.g. 2,3,4");
    project->add_flag("--all", o.all, "All 56 coordinate triples");
    project->add_option("--basis", o.basis, "U | cmU")->capture_default_str();
    project->add_flag("--json", o.json, "Print a JSON report");
    project->add_option("--csv", o.csv_path, "Write per-layer CSV");
    project->add_option("--obj", o.obj_dir, "Write one OBJ file per subset into this directory");

    auto* dump = app.add_subcommand("dump", "Print a built-in matrix in the matrix-literal format");
    dump->add_option("name", o.name, "Matrix name")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        if (sub == roots && o.matrix.empty()) throw UsageError("--matrix or --matrix-file is required");
        if (sub == verify) return cmd_verify(o, out);
        if (sub == powers) return cmd_powers(o, out);
        if (sub == roots) return cmd_roots(o, out);
        if (sub == lattice) return cmd_lattice(o, out);
        if (sub == project) return cmd_project(o, out);
        return cmd_dump(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << sub->help();
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n" << sub->help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace phi8::cli
