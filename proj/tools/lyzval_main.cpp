// lyzval: compute matrix-valued valuations of polytopes and run the
// seeded property-check suite over them.
//
// Exit codes: 0 on success (all checks passing), 1 on a check failure or a
// domain error (degenerate input, origin outside, ...), 2 on usage or parse
// errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lyzval/harness.hpp"
#include "lyzval/json_io.hpp"

namespace {

struct Options {
    std::string target;
    std::string input_path;
    std::string spec_path;
    std::string zeta = "1";
    std::string mode = "exact";
    std::string output_path;
    std::vector<std::string> check_names;
    lyzval::harness::TrialConfig trial;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lyzval::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw lyzval::ParseError("cannot open output file: " + output_path);
    out << text;
}

template <typename S>
int run_compute(const Options& opt) {
    using namespace lyzval;
    Polytope<S> p = parse_polytope_text<S>(read_file(opt.input_path));

    json out;
    if (opt.target == "moment") {
        out = matrix_to_json(moment_matrix(p));
    } else if (opt.target == "lyz") {
        out = matrix_to_json(classical_lyz(p));
    } else if (opt.target == "general-lyz") {
        S zeta = scalar_traits<S>::from_rational(parse_rational(opt.zeta));
        out = matrix_to_json(general_lyz(p, CauchyWitness<S>::linear(zeta)));
    } else if (opt.target == "i") {
        out = matrix_to_json(i_polytope(p));
    } else if (opt.target == "polar") {
        out = polytope_to_json(polar(p));
    } else if (opt.target == "hull-origin") {
        out = polytope_to_json(hull_with_origin(p));
    } else {  // evaluate; target list enforced by the parser
        if (opt.spec_path.empty())
            throw ParseError("compute evaluate requires --spec <file>");
        ValuationSpec<S> spec = parse_valuation_spec<S>(parse_json_text(read_file(opt.spec_path)));
        out = matrix_to_json(evaluate(spec, p));
    }
    emit(out.dump() + "\n", opt.output_path);
    return 0;
}

template <typename S>
int run_check(const Options& opt) {
    using namespace lyzval;
    try {
        opt.trial.validate();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<harness::CheckReport> reports;
    try {
        reports = harness::run_suite<S>(opt.trial, opt.check_names);
    } catch (const UnknownCheckName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string lines;
    int failed = 0;
    for (const auto& r : reports) {
        lines += report_to_json(r).dump() + "\n";
        if (!r.pass()) ++failed;
    }
    emit(lines, opt.output_path);
    std::cerr << "checks: " << reports.size() << " run, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

template <typename S>
int run_describe(const Options& opt) {
    using namespace lyzval;
    Polytope<S> p = parse_polytope_text<S>(read_file(opt.input_path));
    json out;
    out["ambient_dim"] = p.ambient_dim();
    out["intrinsic_dim"] = p.intrinsic_dim();
    out["vertex_count"] = static_cast<int>(p.vertices().size());
    out["facet_count"] =
        p.full_dimensional() ? json(static_cast<int>(p.facets().size())) : json(nullptr);
    out["volume"] = scalar_to_json(volume(p));
    out["contains_origin"] = p.contains_origin();
    out["origin_interior"] = p.origin_interior();
    emit(out.dump() + "\n", opt.output_path);
    return 0;
}

int dispatch(const Options& opt, int (*exact_fn)(const Options&), int (*float_fn)(const Options&)) {
    return opt.mode == "float" ? float_fn(opt) : exact_fn(opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix-valued polytope valuations"};
    app.require_subcommand(1);
    Options opt;

    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", opt.mode, "scalar mode")
            ->check(CLI::IsMember({"exact", "float"}))
            ->capture_default_str();
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", opt.output_path, "write output to file instead of stdout");
    };

    CLI::App* compute = app.add_subcommand("compute", "evaluate a valuation or polytope operation");
    compute->add_option("target", opt.target, "what to compute")
        ->required()
        ->check(CLI::IsMember(
            {"moment", "lyz", "general-lyz", "i", "polar", "hull-origin", "evaluate"}));
    compute->add_option("-i,--input", opt.input_path, "polytope JSON file")->required();
    compute->add_option("--spec", opt.spec_path, "valuation spec JSON file (evaluate only)");
    compute->add_option("--zeta", opt.zeta,
                        "linear weight coefficient p/q for general-lyz")
        ->capture_default_str();
    add_mode(compute);
    add_output(compute);

    CLI::App* check = app.add_subcommand("check", "run seeded property checks");
    check->add_option("names", opt.check_names, "check names, or 'all'")->required();
    check->add_option("--dim", opt.trial.dim, "ambient dimension")->capture_default_str();
    check->add_option("--seed", opt.trial.seed, "RNG seed")->capture_default_str();
    check->add_option("--trials", opt.trial.trials, "trials per check")->capture_default_str();
    check->add_option("--max-vertices", opt.trial.max_vertices, "generator vertex budget")
        ->capture_default_str();
    check->add_option("--bound", opt.trial.coordinate_bound, "generator coordinate bound")
        ->capture_default_str();
    add_mode(check);
    add_output(check);

    CLI::App* describe = app.add_subcommand("describe", "summarize a polytope file");
    describe->add_option("-i,--input", opt.input_path, "polytope JSON file")->required();
    add_mode(describe);
    add_output(describe);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed())
            return dispatch(opt, run_compute<lyzval::Rat>, run_compute<double>);
        if (check->parsed()) return dispatch(opt, run_check<lyzval::Rat>, run_check<double>);
        return dispatch(opt, run_describe<lyzval::Rat>, run_describe<double>);
    } catch (const lyzval::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lyzval::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lyzval::InvalidWitness& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lyzval::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
