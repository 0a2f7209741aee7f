// SPDX-License-Identifier: Apache-2.0
//
// fdx: spatial degrees-of-freedom regions for a three-node full-duplex
// network. Subcommands compute regions, corner points, and operator
// dimensions, compare duplexing modes, run parameter sweeps, and verify the
// analytic formulas against the randomized matrix oracle.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <fdx/fdx.hpp>

namespace {

struct ScenarioOpts {
    std::string in_path;
    std::string case_name;
    std::string l_bs;
    std::string l_usr;
    std::string l;
    std::vector<std::string> psi;
    std::vector<std::string> psi_fwd;
    std::vector<std::string> psi_back;
    std::string label;
};

fdx::Interval parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw fdx::MalformedPair("expected 'lo,hi', got '" + text + "'");
    return fdx::Interval{fdx::Rational::parse(text.substr(0, comma)),
                         fdx::Rational::parse(text.substr(comma + 1))};
}

fdx::IntervalSet parse_set(const std::vector<std::string>& pairs) {
    std::vector<fdx::Interval> raw;
    raw.reserve(pairs.size());
    for (const std::string& p : pairs)
        raw.push_back(parse_pair(p));
    return fdx::IntervalSet::normalize(std::move(raw));
}

fdx::Rational require_rational(const std::string& text, const char* option) {
    if (text.empty())
        throw fdx::Error(std::string("missing required option ") + option);
    return fdx::Rational::parse(text);
}

std::vector<fdx::Rational> parse_rational_list(const std::string& text, const char* option) {
    if (text.empty())
        throw fdx::Error(std::string("missing required option ") + option);
    std::vector<fdx::Rational> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        values.push_back(fdx::Rational::parse(piece));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return values;
}

fdx::Scenario build_scenario(const ScenarioOpts& o) {
    fdx::Scenario s;
    if (!o.in_path.empty()) {
        s = fdx::load_scenario_file(o.in_path);
    } else if (o.case_name == "a") {
        s = fdx::case_a(require_rational(o.l_bs, "--l-bs"), require_rational(o.l_usr, "--l-usr"),
                        parse_set(o.psi));
    } else if (o.case_name == "b") {
        s = fdx::case_b(require_rational(o.l, "--l"), parse_set(o.psi_fwd), parse_set(o.psi_back));
    } else if (o.case_name == "c") {
        s = fdx::case_c(require_rational(o.l_bs, "--l-bs"), require_rational(o.l_usr, "--l-usr"),
                        parse_set(o.psi_fwd), parse_set(o.psi_back));
    } else {
        throw fdx::Error("exactly one of --in or --case is required");
    }
    if (!o.label.empty())
        s.label = o.label;
    return s;
}

void add_scenario_options(CLI::App* sub, ScenarioOpts& o) {
    auto* in = sub->add_option("--in", o.in_path, "Scenario JSON file");
    auto* cs = sub->add_option("--case", o.case_name, "Built-in case: a, b, or c")
                   ->check(CLI::IsMember({"a", "b", "c"}));
    in->excludes(cs);
    cs->excludes(in);
    sub->add_option("--l-bs", o.l_bs, "Base-station array half-length (cases a, c)");
    sub->add_option("--l-usr", o.l_usr, "User array half-length (cases a, c)");
    sub->add_option("--l", o.l, "Common array half-length (case b)");
    sub->add_option("--psi", o.psi, "Scattering support 'lo,hi' (case a; repeatable)");
    sub->add_option("--psi-fwd", o.psi_fwd, "Forward support 'lo,hi' (cases b, c; repeatable)");
    sub->add_option("--psi-back", o.psi_back,
                    "Backscatter support 'lo,hi' (cases b, c; repeatable)");
    sub->add_option("--label", o.label, "Override the scenario label");
}

std::string pretty(const fdx::Rational& r) {
    if (r.is_integer())
        return r.to_string();
    std::ostringstream os;
    os << r.to_string() << " (" << std::setprecision(6) << r.to_double() << ")";
    return os.str();
}

std::string pretty_point(const fdx::Point& p) {
    return "(" + p.d1.to_string() + ", " + p.d2.to_string() + ")";
}

std::string pretty_vertices(const fdx::DofRegion& r) {
    std::string out;
    for (const fdx::Point& v : r.vertices()) {
        if (!out.empty())
            out += " ";
        out += pretty_point(v);
    }
    return out;
}

const char* rel_name(fdx::SetRelation r) {
    switch (r) {
    case fdx::SetRelation::proper_subset:
        return "proper_subset";
    case fdx::SetRelation::equal:
        return "equal";
    default:
        return "not_subset";
    }
}

std::string header_line(const fdx::Scenario& s, const char* what) {
    return std::string(what) + (s.label.empty() ? "" : " for '" + s.label + "'") + "\n";
}

std::string region_text(const fdx::Scenario& s) {
    const fdx::FdBounds b = fdx::fd_bounds(s);
    const fdx::CornerPoints c = fdx::corner_points_lemma1(s);
    const fdx::Classification cls = fdx::compare_regions(s);
    std::ostringstream os;
    os << header_line(s, "regions");
    os << "  d1_max    = " << pretty(b.d1_max) << "\n";
    os << "  d2_max    = " << pretty(b.d2_max) << "\n";
    os << "  d_sum_max = " << pretty(b.d_sum_max) << "\n";
    os << "  corners: prime = " << pretty_point(c.prime)
       << ", double_prime = " << pretty_point(c.double_prime) << "\n";
    os << "  FD  vertices: " << pretty_vertices(fdx::fd_region(s)) << "\n";
    os << "  HD  vertices: " << pretty_vertices(fdx::hd_region(s)) << "\n";
    os << "  FD' vertices: " << pretty_vertices(fdx::fdp_region(s)) << "\n";
    os << "  classification: " << cls.text() << " (FD rectangular: "
       << (cls.fd_rectangular ? "yes" : "no")
       << ", FD' rectangular: " << (cls.fdp_rectangular ? "yes" : "no") << ")\n";
    return os.str();
}

std::string corners_text(const fdx::Scenario& s) {
    const fdx::CornerPoints c = fdx::corner_points_lemma1(s);
    std::ostringstream os;
    os << header_line(s, "corner points");
    os << "  prime        = " << pretty_point(c.prime) << "\n";
    os << "  double_prime = " << pretty_point(c.double_prime) << "\n";
    os << "  aux: d_t1 = " << pretty(c.aux.d_t1) << ", d_t2 = " << pretty(c.aux.d_t2)
       << ", d_r1 = " << pretty(c.aux.d_r1) << ", d_r2 = " << pretty(c.aux.d_r2) << "\n";
    os << "       delta_t1 = " << pretty(c.aux.delta_t1) << ", delta_t2 = "
       << pretty(c.aux.delta_t2) << ", delta_r1 = " << pretty(c.aux.delta_r1)
       << ", delta_r2 = " << pretty(c.aux.delta_r2) << "\n";
    return os.str();
}

std::string dims_text(const fdx::Scenario& s) {
    std::ostringstream os;
    os << header_line(s, "operator dimensions");
    for (const auto& [name, value] : fdx::operator_dims_fields(fdx::operator_dims(s)))
        os << "  " << std::left << std::setw(9) << name << " = " << pretty(value) << "\n";
    return os.str();
}

std::string compare_text(const fdx::Scenario& s) {
    const fdx::Classification c = fdx::compare_regions(s);
    std::ostringstream os;
    os << header_line(s, "region comparison");
    os << "  HD vs FD : " << rel_name(c.hd_vs_fd) << "\n";
    os << "  FD vs FD': " << rel_name(c.fd_vs_fdp) << "\n";
    os << "  FD rectangular : " << (c.fd_rectangular ? "yes" : "no") << "\n";
    os << "  FD' rectangular: " << (c.fdp_rectangular ? "yes" : "no") << "\n";
    os << "  summary: " << c.text() << "\n";
    return os.str();
}

fdx::json corners_json(const fdx::Scenario& s) {
    fdx::json j = fdx::corners_to_json(fdx::corner_points_lemma1(s));
    j["label"] = s.label;
    return j;
}

fdx::json dims_json(const fdx::Scenario& s) {
    fdx::json j = fdx::operator_dims_to_json(fdx::operator_dims(s));
    j["label"] = s.label;
    return j;
}

fdx::json compare_json(const fdx::Scenario& s) {
    const fdx::Classification c = fdx::compare_regions(s);
    fdx::json j;
    j["label"] = s.label;
    j["hd_vs_fd"] = rel_name(c.hd_vs_fd);
    j["fd_vs_fdp"] = rel_name(c.fd_vs_fdp);
    j["rect_fd"] = c.fd_rectangular;
    j["rect_fdp"] = c.fdp_rectangular;
    j["classification"] = c.text();
    return j;
}

std::string verify_text(const fdx::OracleReport& r) {
    std::ostringstream os;
    os << "oracle report" << (r.label.empty() ? "" : " for '" + r.label + "'") << "\n";
    os << "  grid density = " << r.grid_density << ", seed = " << r.seed
       << ", trials = " << r.trials << "\n";
    os << "  " << std::left << std::setw(10) << "quantity" << std::setw(14) << "analytic"
       << std::setw(14) << "numerical" << "status\n";
    const auto analytic = fdx::operator_dims_fields(r.analytic);
    const auto numerical = fdx::operator_dims_fields(r.numerical);
    for (std::size_t i = 0; i < analytic.size(); ++i) {
        const bool ok = analytic[i].second == numerical[i].second;
        os << "  " << std::left << std::setw(10) << analytic[i].first << std::setw(14)
           << analytic[i].second.to_string() << std::setw(14)
           << numerical[i].second.to_string() << (ok ? "ok" : "MISMATCH") << "\n";
    }
    os << "  preimage dim: analytic " << r.preimage_dim_analytic.to_string() << ", numerical "
       << r.preimage_dim_numerical.to_string() << "\n";
    os << "  corner flow 2: numerical " << r.corner_flow2_numerical.to_string()
       << " vs analytic d2' " << r.corner_d2_analytic.to_string() << " (sketch conditions "
       << (r.sketch.all() ? "hold" : "do not all hold") << ")\n";
    os << "  max rank gap = " << r.max_rank_gap << " grid units, max corner gap = "
       << r.max_corner_gap.to_string() << "\n";
    os << "  result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string sweep_text(const fdx::SweepResult& sweep) {
    std::ostringstream os;
    os << std::left << std::setw(10) << sweep.param_name << std::setw(10) << "d1_max"
       << std::setw(10) << "d2_max" << std::setw(12) << "d_sum_fd" << std::setw(12)
       << "d_sum_fdp" << std::setw(12) << "class" << "rect_fd\n";
    for (const fdx::SweepRow& row : sweep.rows)
        os << std::left << std::setw(10) << row.param.to_string() << std::setw(10)
           << row.d1_max.to_string() << std::setw(10) << row.d2_max.to_string() << std::setw(12)
           << row.d_sum_fd.to_string() << std::setw(12) << row.d_sum_fdp.to_string()
           << std::setw(12) << row.cls << (row.rect_fd ? "true" : "false") << "\n";
    return os.str();
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw fdx::Error("cannot open output file: " + out_path);
    out << text;
    if (!out)
        throw fdx::Error("failed to write output file: " + out_path);
}

std::string dump_json(const fdx::json& j) { return j.dump(2) + "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spatial degrees-of-freedom regions of a three-node full-duplex network"};
    app.require_subcommand(1);

    ScenarioOpts scen;
    int exit_code = 0;

    // region
    std::string region_format = "text";
    std::string region_out;
    auto* region = app.add_subcommand("region", "Compute the FD, HD, and FD' regions");
    add_scenario_options(region, scen);
    region->add_option("--format", region_format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    region->add_option("--out", region_out, "Write to a file instead of stdout");
    region->callback([&] {
        const fdx::Scenario s = build_scenario(scen);
        if (region_format == "json")
            write_out(dump_json(fdx::region_doc_to_json(s)), region_out);
        else if (region_format == "csv")
            write_out(fdx::region_doc_to_csv(s), region_out);
        else
            write_out(region_text(s), region_out);
    });

    // corners
    std::string corners_format = "text";
    std::string corners_out;
    auto* corners = app.add_subcommand("corners", "Compute the two region corner points");
    add_scenario_options(corners, scen);
    corners->add_option("--format", corners_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    corners->add_option("--out", corners_out, "Write to a file instead of stdout");
    corners->callback([&] {
        const fdx::Scenario s = build_scenario(scen);
        write_out(corners_format == "json" ? dump_json(corners_json(s)) : corners_text(s),
                  corners_out);
    });

    // dims
    std::string dims_format = "text";
    std::string dims_out;
    auto* dims = app.add_subcommand("dims", "Compute the signal-space operator dimensions");
    add_scenario_options(dims, scen);
    dims->add_option("--format", dims_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    dims->add_option("--out", dims_out, "Write to a file instead of stdout");
    dims->callback([&] {
        const fdx::Scenario s = build_scenario(scen);
        write_out(dims_format == "json" ? dump_json(dims_json(s)) : dims_text(s), dims_out);
    });

    // compare
    std::string compare_format = "text";
    std::string compare_out;
    auto* compare = app.add_subcommand("compare", "Compare the three duplexing regions");
    add_scenario_options(compare, scen);
    compare->add_option("--format", compare_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    compare->add_option("--out", compare_out, "Write to a file instead of stdout");
    compare->callback([&] {
        const fdx::Scenario s = build_scenario(scen);
        write_out(compare_format == "json" ? dump_json(compare_json(s)) : compare_text(s),
                  compare_out);
    });

    // sweep
    bool sweep_overlap = false;
    bool sweep_length = false;
    std::string sweep_l;
    std::string sweep_l_usr;
    std::string sweep_l_bs;
    std::int64_t sweep_steps = 21;
    std::vector<std::string> sweep_fwd;
    std::vector<std::string> sweep_back;
    std::string sweep_format = "csv";
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "Sweep a parameter and tabulate the regions");
    auto* overlap_flag =
        sweep->add_flag("--overlap", sweep_overlap, "Sweep the forward/backscatter overlap 0..1");
    auto* length_flag =
        sweep->add_flag("--length", sweep_length, "Sweep the base-station half-length");
    overlap_flag->excludes(length_flag);
    length_flag->excludes(overlap_flag);
    sweep->add_option("--l", sweep_l, "Common array half-length (overlap sweep)");
    sweep->add_option("--steps", sweep_steps, "Number of sweep points (overlap sweep)");
    sweep->add_option("--l-usr", sweep_l_usr, "User array half-length (length sweep)");
    sweep->add_option("--l-bs", sweep_l_bs,
                      "Comma-separated increasing base-station half-lengths (length sweep)");
    sweep->add_option("--psi-fwd", sweep_fwd,
                      "Forward support 'lo,hi' (length sweep; default 0,1; repeatable)");
    sweep->add_option("--psi-back", sweep_back,
                      "Backscatter support 'lo,hi' (length sweep; default 0,1; repeatable)");
    sweep->add_option("--format", sweep_format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sweep->add_option("--out", sweep_out, "Write to a file instead of stdout");
    sweep->callback([&] {
        fdx::SweepResult result;
        if (sweep_overlap) {
            result = fdx::overlap_sweep(require_rational(sweep_l, "--l"), sweep_steps);
        } else if (sweep_length) {
            const fdx::IntervalSet unit = fdx::IntervalSet::single(fdx::Rational(0), fdx::Rational(1));
            const fdx::IntervalSet fwd = sweep_fwd.empty() ? unit : parse_set(sweep_fwd);
            const fdx::IntervalSet back = sweep_back.empty() ? unit : parse_set(sweep_back);
            result = fdx::length_sweep(require_rational(sweep_l_usr, "--l-usr"),
                                       parse_rational_list(sweep_l_bs, "--l-bs"), fwd, back);
        } else {
            throw fdx::Error("one of --overlap or --length is required");
        }
        if (sweep_format == "json")
            write_out(dump_json(fdx::sweep_to_json(result)), sweep_out);
        else if (sweep_format == "text")
            write_out(sweep_text(result), sweep_out);
        else
            write_out(fdx::sweep_to_csv(result), sweep_out);
    });

    // verify
    std::int64_t trials = 20;
    std::int64_t seed = 0;
    std::int64_t grid = 0;
    bool corrupt_analytic = false;
    std::string verify_format = "text";
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Check the formulas against the matrix oracle");
    add_scenario_options(verify, scen);
    verify->add_option("--trials", trials, "Number of random draws");
    verify->add_option("--seed", seed, "Base RNG seed")->envname("FDX_SEED");
    verify->add_option("--grid", grid, "Grid density override (0 = automatic)");
    verify->add_flag("--corrupt-analytic", corrupt_analytic, "")->group("");
    verify->add_option("--format", verify_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", verify_out, "Write to a file instead of stdout");
    verify->callback([&] {
        const fdx::Scenario s = build_scenario(scen);
        fdx::OracleReport report = fdx::verify(s, trials, seed, grid);
        if (corrupt_analytic) {
            report.analytic.rank_h11 = report.analytic.rank_h11 + fdx::Rational(1);
            fdx::Rational worst(0);
            const auto analytic = fdx::operator_dims_fields(report.analytic);
            const auto numerical = fdx::operator_dims_fields(report.numerical);
            for (std::size_t i = 0; i < analytic.size(); ++i)
                worst = fdx::max(worst, fdx::abs(analytic[i].second - numerical[i].second));
            const fdx::Rational units = worst * fdx::Rational(report.grid_density);
            report.max_rank_gap = std::max(report.max_rank_gap, units.num() / units.den());
        }
        write_out(verify_format == "json" ? dump_json(fdx::report_to_json(report))
                                          : verify_text(report),
                  verify_out);
        exit_code = report.passed() ? 0 : 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const fdx::NonIntegralGrid& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "suggested grid density: " << e.suggested_density << "\n";
        return 2;
    } catch (const fdx::InvalidScenario& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fdx::OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fdx::MalformedPair& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fdx::OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fdx::IllConditioned& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fdx::AmbiguousCorner& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fdx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
