#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumcard/arith.hpp"
#include "sumcard/cone.hpp"
#include "sumcard/dplus2.hpp"
#include "sumcard/dplus3.hpp"
#include "sumcard/error.hpp"
#include "sumcard/geometry.hpp"
#include "sumcard/random.hpp"
#include "sumcard/report.hpp"
#include "sumcard/sumset.hpp"

namespace sumcard {

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::Argument:
        case ErrorKind::Dimension:
            return 2;
        case ErrorKind::Hypothesis:
        case ErrorKind::Degenerate:
        case ErrorKind::Singular:
            return 3;
        case ErrorKind::Budget:
            return 4;
        case ErrorKind::NotStabilized:
            return 6;
        case ErrorKind::Contract:
        case ErrorKind::Internal:
            return 1;
    }
    return 1;
}

namespace cli_detail {

inline std::string points_str(const std::vector<Point>& pts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << '(';
        for (std::size_t c = 0; c < pts[i].size(); ++c) {
            if (c) os << ',';
            os << pts[i][c];
        }
        os << ')';
    }
    return os.str();
}

template <typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

inline std::string join_ints(const std::vector<Int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i].str();
    }
    return os.str();
}

inline std::string join_rats(const RationalVector& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << rational_str(v[i]);
    }
    return os.str();
}

struct LoadedInstance {
    ParsedInstance parsed;
    HullClassification cls;
    InputClass klass = InputClass::Unsupported;
};

inline LoadedInstance load_and_classify(const std::string& path) {
    LoadedInstance out;
    out.parsed = load_instance_file(path);
    out.cls = classify_hull(out.parsed.set);
    check_roles(out.parsed, out.cls);
    out.klass = classify_input(out.parsed.set, out.cls);
    return out;
}

// One row of a verify table; optional fields depend on the family/mode.
struct VerifyRow {
    std::int64_t h = 0;
    std::optional<Int> exact;
    std::optional<Int> lower;
    std::optional<Int> upper;
    Int brute = 0;
    bool match = true;
};

inline Json row_json(const VerifyRow& row) {
    Json j;
    j["h"] = row.h;
    if (row.exact) j["exact"] = json_int(*row.exact);
    if (row.lower) j["lower"] = json_int(*row.lower);
    if (row.upper) j["upper"] = json_int(*row.upper);
    j["brute"] = json_int(row.brute);
    j["match"] = row.match;
    return j;
}

inline void print_rows(std::ostream& out, const std::vector<VerifyRow>& rows) {
    out << std::setw(5) << "h" << std::setw(14) << "exact" << std::setw(14) << "lower"
        << std::setw(14) << "upper" << std::setw(14) << "brute" << std::setw(8) << "match"
        << "\n";
    for (const auto& row : rows) {
        auto cell = [](const std::optional<Int>& v) { return v ? v->str() : std::string("-"); };
        out << std::setw(5) << row.h << std::setw(14) << cell(row.exact) << std::setw(14)
            << cell(row.lower) << std::setw(14) << cell(row.upper) << std::setw(14)
            << row.brute.str() << std::setw(8) << (row.match ? "yes" : "NO") << "\n";
    }
}

inline void write_csv(const std::string& path, const std::vector<VerifyRow>& rows) {
    std::ofstream out(path);
    if (!out) raise(ErrorKind::Argument, "cannot open csv output: " + path);
    out << "h,exact,lower,upper,brute,match\n";
    for (const auto& row : rows) {
        auto cell = [](const std::optional<Int>& v) { return v ? v->str() : std::string(); };
        out << row.h << ',' << cell(row.exact) << ',' << cell(row.lower) << ','
            << cell(row.upper) << ',' << row.brute.str() << ',' << (row.match ? "true" : "false")
            << "\n";
    }
}

inline Json predicates_json_d2(const InstanceD2& inst, const HullClassification& cls) {
    Json j;
    j["difference_lattice_index"] = json_int(inst.generation_index);
    j["hull_is_simplex"] = cls.is_simplex;
    j["hull_vertex_count"] = static_cast<int>(cls.vertex_indices.size());
    return j;
}

inline Json predicates_json_d3(const D3Analysis& an) {
    Json j;
    j["difference_lattice_index"] = json_int(an.inst.generation_index);
    j["vertex_lattice_index"] = json_int(an.inst.vertex_lattice_index);
    j["hull_is_simplex"] = true;
    j["origin_on_boundary"] = an.inv.origin_on_boundary;
    j["w_on_boundary"] = an.inst.w_on_boundary;
    return j;
}

struct VerifyOutcome {
    std::vector<VerifyRow> rows;
    bool all_match = true;
};

inline VerifyOutcome verify_d2(const InstanceD2& inst, std::int64_t h_max,
                               const Budget& budget) {
    VerifyOutcome out;
    std::vector<Int> brute = cardinality_sequence(inst.base, h_max, budget);
    for (std::int64_t h = 0; h <= h_max; ++h) {
        VerifyRow row;
        row.h = h;
        row.exact = card_d2(inst, h);
        row.brute = brute[h];
        row.match = *row.exact == row.brute;
        if (!row.match) out.all_match = false;
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline VerifyOutcome verify_d3(const D3Analysis& an, std::int64_t h_max, const std::string& mode,
                               const Budget& budget) {
    if (mode == "formula" && !an.equality)
        raise(ErrorKind::Hypothesis, "equality condition fails (m_w > 1); use --mode bounds");
    VerifyOutcome out;
    std::vector<Int> brute = cardinality_sequence(an.inst.base, h_max, budget);
    for (std::int64_t h = 0; h <= h_max; ++h) {
        VerifyRow row;
        row.h = h;
        row.brute = brute[h];
        BoundsReport b = card_d3_bounds(an.inst, an.inv, an.m_w, h);
        if (mode != "formula") {
            row.lower = b.lower;
            row.upper = b.upper;
        }
        if (b.exact) row.exact = *b.exact;
        row.match = true;
        if (row.lower && !(*row.lower <= row.brute && row.brute <= *row.upper)) row.match = false;
        if (row.exact && *row.exact != row.brute) row.match = false;
        if (!row.match) out.all_match = false;
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace cli_detail

struct CliConfig {
    std::string file;
    std::int64_t h_max = -1;
    std::string mode = "all";
    std::uint64_t seed = 1;
    int count = 20;
    int scan_dim = 1;
    std::int64_t bound = 5;
    std::string family = "d2";
    bool json = false;
    std::string csv;
    bool brute_only = false;
    std::int64_t budget_points = 10'000'000;

    Budget budget() const {
        Budget b;
        b.max_layer_points = budget_points;
        return b;
    }
};

inline int cmd_analyze(const CliConfig& cfg, std::ostream& out) {
    using namespace cli_detail;
    LoadedInstance loaded = load_and_classify(cfg.file);
    const PointSet& s = loaded.parsed.set;
    Json report;
    report["command"] = "analyze";
    report["instance"] = instance_echo(s);
    report["classification"] = classification_name(loaded.klass, loaded.cls);
    std::ostringstream text;
    text << "instance: d=" << s.dim << ", " << s.points.size() << " points\n";
    text << "points: " << points_str(s.points) << "\n";
    text << "classification: " << classification_name(loaded.klass, loaded.cls) << "\n";
    if (loaded.klass == InputClass::D2) {
        InstanceD2 inst = make_instance_d2(s);
        report["predicates"] = predicates_json_d2(inst, loaded.cls);
        report["radon"] = radon_json(inst.radon);
        RationalVector common = radon_common_point(inst);
        report["radon_common_point"] = json_rational_vector(common);
        report["hull_vertices"] = loaded.cls.vertex_indices;
        text << "difference_lattice_index: " << inst.generation_index.str() << "\n";
        text << "hull_vertices: " << join(loaded.cls.vertex_indices) << "\n";
        text << "lambda: " << join_ints(inst.radon.lambda) << "\n";
        text << "x1: " << join(inst.radon.x1) << "\n";
        text << "x2: " << join(inst.radon.x2) << "\n";
        text << "zero_set: " << join(inst.radon.zero_set) << "\n";
        text << "r: " << inst.radon.r.str() << "\n";
        text << "radon_common_point: " << join_rats(common) << "\n";
    } else if (loaded.klass == InputClass::D3Simplicial) {
        D3Analysis an = analyze_d3(s);
        report["predicates"] = predicates_json_d3(an);
        report["vertex_indices"] = an.inst.vertex_indices;
        report["origin_index"] = an.inst.origin_index;
        report["w_index"] = an.inst.w_index;
        report["invariants"] = invariants_json(an.inv);
        report["m_w"] = json_int(an.m_w);
        report["equality_condition"] = an.equality;
        text << "difference_lattice_index: " << an.inst.generation_index.str() << "\n";
        text << "vertex_indices: " << join(an.inst.vertex_indices) << "\n";
        text << "origin_index: " << an.inst.origin_index << "\n";
        text << "w_index: " << an.inst.w_index << "\n";
        text << "vertex_lattice_index: " << an.inst.vertex_lattice_index.str() << "\n";
        text << "n_lambda: " << an.inv.n_lambda.str() << "\n";
        text << "mu: " << join_rats(an.inv.mu) << "\n";
        text << "q: " << join_ints(an.inv.q) << "\n";
        text << "lcc: " << an.inv.lcc.str() << "\n";
        text << "n_prime: " << an.inv.n_prime.str() << "\n";
        text << "lambda_ints: " << join_ints(an.inv.lambda_ints) << "\n";
        text << "origin_on_boundary: " << (an.inv.origin_on_boundary ? "true" : "false") << "\n";
        text << "w_on_boundary: " << (an.inst.w_on_boundary ? "true" : "false") << "\n";
        text << "m_w: " << an.m_w.str() << "\n";
        text << "equality_condition: " << (an.equality ? "true" : "false") << "\n";
    } else {
        raise(ErrorKind::Hypothesis,
              "unsupported family: need d+2 points, or d+3 points with a simplicial hull");
    }
    if (cfg.json)
        out << report.dump(2) << "\n";
    else
        out << text.str();
    return 0;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    using namespace cli_detail;
    if (cfg.brute_only) {
        ParsedInstance parsed = load_instance_file(cfg.file);
        std::int64_t h_max = cfg.h_max < 0 ? 10 : cfg.h_max;
        std::vector<Int> seq = cardinality_sequence(parsed.set, h_max, cfg.budget());
        std::vector<VerifyRow> rows;
        for (std::int64_t h = 0; h <= h_max; ++h) {
            VerifyRow row;
            row.h = h;
            row.brute = seq[h];
            rows.push_back(std::move(row));
        }
        if (!cfg.csv.empty()) write_csv(cfg.csv, rows);
        if (cfg.json) {
            Json report;
            report["command"] = "verify";
            report["instance"] = instance_echo(parsed.set);
            report["mode"] = "brute-only";
            Json arr = Json::array();
            for (const auto& row : rows) arr.push_back(row_json(row));
            report["rows"] = arr;
            out << report.dump(2) << "\n";
        } else {
            print_rows(out, rows);
        }
        return 0;
    }
    LoadedInstance loaded = load_and_classify(cfg.file);
    const PointSet& s = loaded.parsed.set;
    Json report;
    report["command"] = "verify";
    report["instance"] = instance_echo(s);
    report["classification"] = classification_name(loaded.klass, loaded.cls);
    VerifyOutcome outcome;
    if (loaded.klass == InputClass::D2) {
        InstanceD2 inst = make_instance_d2(s);
        report["predicates"] = predicates_json_d2(inst, loaded.cls);
        report["radon"] = radon_json(inst.radon);
        std::int64_t h_max =
            cfg.h_max >= 0 ? cfg.h_max : inst.radon.r.convert_to<std::int64_t>() + s.dim + 3;
        outcome = verify_d2(inst, h_max, cfg.budget());
    } else if (loaded.klass == InputClass::D3Simplicial) {
        D3Analysis an = analyze_d3(s);
        report["predicates"] = predicates_json_d3(an);
        report["invariants"] = invariants_json(an.inv);
        report["m_w"] = json_int(an.m_w);
        report["equality_condition"] = an.equality;
        std::int64_t h_max =
            cfg.h_max >= 0
                ? cfg.h_max
                : (an.inv.n_lambda + an.m_w * an.inv.n_prime).convert_to<std::int64_t>() +
                      s.dim + 3;
        outcome = verify_d3(an, h_max, cfg.mode, cfg.budget());
    } else {
        raise(ErrorKind::Hypothesis,
              "unsupported family: need d+2 points, or d+3 points with a simplicial hull "
              "(use --brute-only for oracle-only mode)");
    }
    if (!cfg.csv.empty()) write_csv(cfg.csv, outcome.rows);
    if (cfg.json) {
        Json arr = Json::array();
        for (const auto& row : outcome.rows) arr.push_back(row_json(row));
        report["rows"] = arr;
        report["all_match"] = outcome.all_match;
        out << report.dump(2) << "\n";
    } else {
        print_rows(out, outcome.rows);
        out << (outcome.all_match ? "all rows match\n" : "MISMATCH detected\n");
    }
    return outcome.all_match ? 0 : 5;
}

inline int cmd_scan(const CliConfig& cfg, std::ostream& out) {
    using namespace cli_detail;
    SplitMix64 rng(cfg.seed);
    const int d = cfg.scan_dim;
    // Volume caps keep the brute-force window tractable per instance.
    const Int r_cap = d <= 2 ? 40 : (d == 3 ? 25 : 15);
    const Int n_cap = d <= 1 ? 30 : (d == 2 ? 24 : (d == 3 ? 20 : 16));
    int failures = 0;
    Json results = Json::array();
    std::ostringstream text;
    for (int i = 0; i < cfg.count; ++i) {
        Json entry;
        entry["index"] = i;
        if (cfg.family == "d2") {
            auto set = sample_d2_instance(rng, d, cfg.bound, r_cap);
            if (!set)
                raise(ErrorKind::Budget,
                      "d2 sampler exhausted its attempts (try a smaller --bound)");
            InstanceD2 inst = make_instance_d2(*set);
            std::int64_t h_max = inst.radon.r.convert_to<std::int64_t>() + d + 3;
            VerifyOutcome res = verify_d2(inst, h_max, cfg.budget());
            entry["points"] = json_points(set->points);
            entry["r"] = json_int(inst.radon.r);
            entry["h_max"] = h_max;
            entry["ok"] = res.all_match;
            text << "instance " << i << ": r=" << inst.radon.r.str() << " h_max=" << h_max
                 << (res.all_match ? " ok" : " MISMATCH") << "\n";
            if (!res.all_match) {
                ++failures;
                text << "  points: " << points_str(set->points) << "\n";
            }
        } else {
            auto set = sample_d3_instance(rng, d, cfg.bound, n_cap);
            if (!set)
                raise(ErrorKind::Budget,
                      "d3 sampler exhausted its attempts (try a smaller --bound)");
            D3Analysis an = analyze_d3(*set);
            std::int64_t h_max =
                (an.inv.n_lambda + an.inv.n_prime).convert_to<std::int64_t>() + d + 3;
            VerifyOutcome res = verify_d3(an, h_max, "all", cfg.budget());
            entry["points"] = json_points(set->points);
            entry["n_lambda"] = json_int(an.inv.n_lambda);
            entry["n_prime"] = json_int(an.inv.n_prime);
            entry["m_w"] = json_int(an.m_w);
            entry["equality"] = an.equality;
            entry["h_max"] = h_max;
            entry["ok"] = res.all_match;
            text << "instance " << i << ": n_lambda=" << an.inv.n_lambda.str()
                 << " n_prime=" << an.inv.n_prime.str() << " m_w=" << an.m_w.str()
                 << " h_max=" << h_max << (res.all_match ? " ok" : " MISMATCH") << "\n";
            if (!res.all_match) {
                ++failures;
                text << "  points: " << points_str(set->points) << "\n";
            }
        }
        results.push_back(std::move(entry));
    }
    text << "scanned " << cfg.count << " instances, "
         << (failures == 0 ? "all ok" : std::to_string(failures) + " failures") << "\n";
    if (cfg.json) {
        Json report;
        report["command"] = "scan";
        report["family"] = cfg.family;
        report["d"] = d;
        report["count"] = cfg.count;
        report["seed"] = cfg.seed;
        report["bound"] = cfg.bound;
        report["results"] = results;
        report["failures"] = failures;
        out << report.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return failures == 0 ? 0 : 5;
}

inline int cmd_khovanskii(const CliConfig& cfg, std::ostream& out) {
    using namespace cli_detail;
    ParsedInstance parsed = load_instance_file(cfg.file);
    const PointSet& s = parsed.set;
    auto index = difference_lattice_index(s);
    if (!index) raise(ErrorKind::Degenerate, "points do not affinely span the space");
    if (*index != 1)
        raise(ErrorKind::Hypothesis,
              "differences generate a proper sublattice (index " + index->str() + ", need 1)");
    std::int64_t h_max = cfg.h_max < 0 ? 20 : cfg.h_max;
    std::vector<Int> seq = cardinality_sequence(s, h_max, cfg.budget());
    KhovanskiiFit fit = khovanskii_fit(seq, s.dim);
    Int vol = hull_volume_dfact(s);
    bool vol_match = fit.leading_times_dfact == vol;
    // Monomial coefficients from the Newton form, via a Vandermonde solve
    // through p(0..dim); the fit takes integer values at every integer.
    IntMatrix vander(s.dim + 1, s.dim + 1);
    std::vector<Int> vals;
    for (int j = 0; j <= s.dim; ++j) {
        Int pw = 1;
        for (int k = 0; k <= s.dim; ++k) {
            vander.at(j, k) = pw;
            pw *= j;
        }
        Rational v = fit.evaluate(j);
        if (!is_integer(v)) raise(ErrorKind::Internal, "fit is not integer-valued");
        vals.push_back(numerator(v));
    }
    RationalVector coeffs = solve_rational(vander, vals);
    if (cfg.json) {
        Json report;
        report["command"] = "khovanskii";
        report["instance"] = instance_echo(s);
        report["difference_lattice_index"] = json_int(*index);
        report["h_max"] = h_max;
        report["cardinalities"] = json_int_vector(seq);
        report["h0"] = fit.h0;
        report["degree"] = fit.degree;
        report["monomial_coefficients"] = json_rational_vector(coeffs);
        report["leading_times_dfact"] = json_int(fit.leading_times_dfact);
        report["hull_volume_dfact"] = json_int(vol);
        report["volume_match"] = vol_match;
        out << report.dump(2) << "\n";
    } else {
        out << "h0: " << fit.h0 << "\n";
        out << "degree: " << fit.degree << "\n";
        out << "monomial_coefficients (constant first): " << join_rats(coeffs) << "\n";
        out << "leading_times_dfact: " << fit.leading_times_dfact.str() << "\n";
        out << "hull_volume_dfact: " << vol.str() << "\n";
        out << "volume_match: " << (vol_match ? "true" : "false") << "\n";
    }
    return vol_match ? 0 : 5;
}

inline int cmd_brute(const CliConfig& cfg, std::ostream& out) {
    using namespace cli_detail;
    ParsedInstance parsed = load_instance_file(cfg.file);
    std::int64_t h_max = cfg.h_max < 0 ? 10 : cfg.h_max;
    std::vector<Int> seq = cardinality_sequence(parsed.set, h_max, cfg.budget());
    std::vector<VerifyRow> rows;
    for (std::int64_t h = 0; h <= h_max; ++h) {
        VerifyRow row;
        row.h = h;
        row.brute = seq[h];
        rows.push_back(std::move(row));
    }
    if (!cfg.csv.empty()) write_csv(cfg.csv, rows);
    if (cfg.json) {
        Json report;
        report["command"] = "brute";
        report["instance"] = instance_echo(parsed.set);
        report["cardinalities"] = json_int_vector(seq);
        out << report.dump(2) << "\n";
    } else {
        out << std::setw(5) << "h" << std::setw(14) << "cardinality" << "\n";
        for (std::int64_t h = 0; h <= h_max; ++h)
            out << std::setw(5) << h << std::setw(14) << seq[h].str() << "\n";
    }
    return 0;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cardinalities of h-fold sumsets of small integer point sets"};
    app.require_subcommand(1);
    CliConfig cfg;

    CLI::App* analyze = app.add_subcommand("analyze", "classify an instance and report its invariants");
    analyze->add_option("file", cfg.file, "instance file (JSON)")->required();
    analyze->add_flag("--json", cfg.json, "machine-readable report");

    CLI::App* verify = app.add_subcommand("verify", "compare formulas or bounds against brute force");
    verify->add_option("file", cfg.file, "instance file (JSON)")->required();
    verify->add_option("--h-max", cfg.h_max, "largest h to check (default: derived)");
    verify->add_option("--mode", cfg.mode, "formula|bounds|all (default all)")
        ->check(CLI::IsMember({"formula", "bounds", "all"}));
    verify->add_flag("--json", cfg.json, "machine-readable report");
    verify->add_option("--csv", cfg.csv, "write the per-h table as CSV");
    verify->add_flag("--brute-only", cfg.brute_only, "oracle-only mode for arbitrary sets");
    verify->add_option("--budget-points", cfg.budget_points, "per-layer point budget");

    CLI::App* scan = app.add_subcommand("scan", "random-instance verification sweep");
    scan->add_option("--family", cfg.family, "d2|d3")
        ->required()
        ->check(CLI::IsMember({"d2", "d3"}));
    scan->add_option("--d", cfg.scan_dim, "dimension")->required()->check(CLI::Range(1, 4));
    scan->add_option("--count", cfg.count, "number of instances (default 20)")
        ->check(CLI::NonNegativeNumber);
    scan->add_option("--seed", cfg.seed, "PRNG seed (default 1)");
    scan->add_option("--bound", cfg.bound, "coordinate bound (default 5)")
        ->check(CLI::PositiveNumber);
    scan->add_flag("--json", cfg.json, "machine-readable report");
    scan->add_option("--budget-points", cfg.budget_points, "per-layer point budget");

    CLI::App* khov = app.add_subcommand("khovanskii", "fit the eventual cardinality polynomial");
    khov->add_option("file", cfg.file, "instance file (JSON)")->required();
    khov->add_option("--h-max", cfg.h_max, "sequence length - 1 (default 20)");
    khov->add_flag("--json", cfg.json, "machine-readable report");
    khov->add_option("--budget-points", cfg.budget_points, "per-layer point budget");

    CLI::App* brute = app.add_subcommand("brute", "brute-force cardinality table");
    brute->add_option("file", cfg.file, "instance file (JSON)")->required();
    brute->add_option("--h-max", cfg.h_max, "largest h (default 10)");
    brute->add_flag("--json", cfg.json, "machine-readable report");
    brute->add_option("--csv", cfg.csv, "write the per-h table as CSV");
    brute->add_option("--budget-points", cfg.budget_points, "per-layer point budget");

    std::vector<const char*> argv;
    argv.push_back("sumcard");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(cfg, out);
        if (app.got_subcommand(verify)) return cmd_verify(cfg, out);
        if (app.got_subcommand(scan)) return cmd_scan(cfg, out);
        if (app.got_subcommand(khov)) return cmd_khovanskii(cfg, out);
        if (app.got_subcommand(brute)) return cmd_brute(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace sumcard
