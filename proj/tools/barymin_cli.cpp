// Command-line front end: run catalog problems or user data through the
// AAA-Lawson pipeline and emit reports, error curves, histories, and plots.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "barymin/barymin.hpp"

namespace {

using namespace barymin;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitReverted = 2;
constexpr int kExitInput = 3;
constexpr int kExitStub = 4;
constexpr int kExitNumerical = 5;

int exit_code_for(const error& e) {
    switch (e.code()) {
        case errc::catalog_stub: return kExitStub;
        case errc::numerical: return kExitNumerical;
        case errc::internal: return kExitInternal;
        default: return kExitInput;
    }
}

struct OutputOptions {
    std::string out_dir = ".";
    std::string formats = "json,error_csv,history_csv,svg";
};

void print_summary(const ApproxReport& r) {
    std::printf("problem        %s\n", r.problem.c_str());
    std::printf("degree         %d   samples %lld\n", r.degree,
                static_cast<long long>(r.sample_count));
    std::printf("aaa error      %.6e  (%.3f s)\n", r.aaa_max_error, r.aaa_seconds);
    std::printf("lawson error   %.6e  (%.3f s, %zu steps)\n", r.lawson_max_error,
                r.lawson_seconds, r.history.size());
    std::printf("reverted       %s\n", r.reverted ? "yes" : "no");
    if (r.winding.has_value())
        std::printf("winding        %d\n", *r.winding);
    else if (r.winding_status != "not-applicable")
        std::printf("winding        (%s)\n", r.winding_status.c_str());
    std::printf("poles          %lld finite\n", static_cast<long long>(r.poles.size()));
    if (r.failure != FailureClass::none)
        std::printf("failure        %s: %s\n", to_string(r.failure), r.failure_detail.c_str());
}

int emit_outputs(const ApproxReport& r, const OutputOptions& opts, const std::string& stem) {
    std::set<std::string> formats;
    std::stringstream ss(opts.formats);
    std::string tok;
    while (std::getline(ss, tok, ',')) formats.insert(tok);

    std::filesystem::create_directories(opts.out_dir);
    const std::string base = opts.out_dir + "/" + stem;
    if (formats.count("json")) {
        std::ofstream out(base + ".report.json");
        if (!out) fail(errc::io, "cannot write " + base + ".report.json");
        out << to_json(r).dump(2) << '\n';
        std::printf("wrote %s.report.json\n", base.c_str());
    }
    if (formats.count("error_csv")) {
        write_error_csv(r, base + ".error.csv");
        std::printf("wrote %s.error.csv\n", base.c_str());
    }
    if (formats.count("history_csv")) {
        write_history_csv(r, base + ".history.csv");
        std::printf("wrote %s.history.csv\n", base.c_str());
    }
    if (formats.count("svg")) {
        write_svg(r, base + ".svg");
        std::printf("wrote %s.svg\n", base.c_str());
    }
    if (formats.count("samples_csv")) {
        write_samples_csv(r.samples, base + ".samples.csv");
        std::printf("wrote %s.samples.csv\n", base.c_str());
    }
    if (r.reverted) return kExitReverted;
    if (r.failure != FailureClass::none) return kExitNumerical;
    return kExitOk;
}

std::string sanitize_stem(const std::string& path) {
    std::string stem = std::filesystem::path(path).stem().string();
    if (stem.empty()) stem = "run";
    return stem;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational minimax approximation on discrete complex domains"};
    app.require_subcommand(1);

    // ---- approx ----
    CLI::App* approx = app.add_subcommand("approx", "run the two-phase fit");
    approx->require_subcommand(1);

    OutputOptions out_opts;
    std::optional<int> degree_opt;
    int lawson_steps = -1;  // -1 = entry default / global default
    double exponent = 1.0;
    std::optional<std::uint64_t> seed_opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--lawson", lawson_steps, "number of Lawson steps (0 disables the phase)");
        cmd->add_option("--exponent", exponent, "weight-update exponent (default 1)");
        cmd->add_option("--out", out_opts.out_dir, "output directory (default .)");
        cmd->add_option("--formats", out_opts.formats,
                        "comma list: json,error_csv,history_csv,svg,samples_csv");
    };

    std::string problem_name;
    CLI::App* prob = approx->add_subcommand("problem", "run a catalog problem");
    prob->add_option("name", problem_name, "catalog entry name")->required();
    prob->add_option("--degree", [&degree_opt](const std::vector<std::string>& v) {
        degree_opt = std::stoi(v.front());
        return true;
    }, "degree override");
    prob->add_option("--seed", [&seed_opt](const std::vector<std::string>& v) {
        seed_opt = std::stoull(v.front());
        return true;
    }, "seed override for random-point entries");
    add_common(prob);

    std::string file_path;
    int file_degree = -1;
    bool file_closed = false;
    CLI::App* filecmd = approx->add_subcommand("file", "run samples from a CSV or JSON file");
    filecmd->add_option("path", file_path, "samples file (.csv or .json)")->required();
    filecmd->add_option("--degree", file_degree, "approximation degree")->required();
    filecmd->add_flag("--closed", file_closed,
                      "treat sample order as a closed contour (CSV input only)");
    add_common(filecmd);

    std::string res_matrix, res_vectors, res_grid;
    int res_degree = -1;
    CLI::App* rescmd = approx->add_subcommand(
        "resolvent", "approximate c^T (zI - A)^{-1} b from matrix and vector files");
    rescmd->add_option("matrix", res_matrix, "dense real matrix CSV")->required();
    rescmd->add_option("vectors", res_vectors, "two-row CSV holding b then c")->required();
    rescmd->add_option("grid", res_grid, "domain spec JSON")->required();
    rescmd->add_option("--degree", res_degree, "approximation degree")->required();
    add_common(rescmd);

    // ---- grid ----
    std::string grid_spec_path, grid_out;
    CLI::App* grid = app.add_subcommand("grid", "build a grid and emit its points as CSV");
    grid->add_option("spec", grid_spec_path, "domain spec JSON")->required();
    grid->add_option("--out", grid_out, "output CSV (default stdout)");

    // ---- catalog ----
    CLI::App* cat = app.add_subcommand("catalog", "inspect the problem registry");
    CLI::App* cat_list = cat->add_subcommand("list", "list registered problems");
    std::string cat_out = "catalog.json";
    CLI::App* cat_export = cat->add_subcommand("export", "write catalog.json");
    cat_export->add_option("--out", cat_out, "output path (default catalog.json)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (prob->parsed()) {
            RunOverrides ov;
            ov.degree = degree_opt;
            if (lawson_steps >= 0) ov.nsteps = lawson_steps;
            ov.exponent = exponent;
            ov.seed = seed_opt;
            const ApproxReport rep = run_problem(problem_name, ov);
            print_summary(rep);
            return emit_outputs(rep, out_opts, problem_name);
        }
        if (filecmd->parsed()) {
            SampleSet samples;
            if (file_path.size() > 5 && file_path.substr(file_path.size() - 5) == ".json") {
                std::ifstream in(file_path);
                if (!in) fail(errc::io, "cannot open " + file_path);
                json j;
                try {
                    in >> j;
                } catch (const json::exception& e) {
                    fail(errc::parse, file_path + ": " + e.what());
                }
                samples = samples_from_json(j);
            } else {
                samples = read_samples_csv(file_path);
                samples.closed_curve = file_closed;
            }
            ApproxOptions options;
            options.degree = file_degree;
            if (lawson_steps >= 0) options.lawson.nsteps = lawson_steps;
            options.lawson.update_exponent = exponent;
            const ApproxReport rep = approximate(samples, options, file_path);
            print_summary(rep);
            return emit_outputs(rep, out_opts, sanitize_stem(file_path));
        }
        if (rescmd->parsed()) {
            const Eigen::MatrixXd a = read_matrix_csv(res_matrix);
            const auto [b, c] = read_vectors_csv(res_vectors);
            const FunctionHandle f = load_resolvent(a, b, c);
            std::ifstream in(res_grid);
            if (!in) fail(errc::io, "cannot open " + res_grid);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                fail(errc::parse, res_grid + ": " + e.what());
            }
            SampleSet samples = build(domain_from_json(j));
            for (Index i = 0; i < samples.size(); ++i) samples.values(i) = f(samples.points(i));
            ApproxOptions options;
            options.degree = res_degree;
            if (lawson_steps >= 0) options.lawson.nsteps = lawson_steps;
            options.lawson.update_exponent = exponent;
            const ApproxReport rep = approximate(samples, options, "resolvent:" + res_matrix);
            print_summary(rep);
            return emit_outputs(rep, out_opts, sanitize_stem(res_matrix));
        }
        if (grid->parsed()) {
            std::ifstream in(grid_spec_path);
            if (!in) fail(errc::io, "cannot open " + grid_spec_path);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                fail(errc::parse, grid_spec_path + ": " + e.what());
            }
            const SampleSet s = build(domain_from_json(j));
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!grid_out.empty()) {
                file.open(grid_out);
                if (!file) fail(errc::io, "cannot write " + grid_out);
                out = &file;
            }
            for (Index i = 0; i < s.size(); ++i) {
                char buf[80];
                std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.points(i).real(),
                              s.points(i).imag());
                *out << buf;
            }
            return kExitOk;
        }
        if (cat_list->parsed()) {
            for (const ProblemEntry& e : catalog())
                std::printf("%-22s %s%s\n", e.name.c_str(), e.title.c_str(),
                            e.stub ? " [stub]" : "");
            return kExitOk;
        }
        if (cat_export->parsed()) {
            std::ofstream out(cat_out);
            if (!out) fail(errc::io, "cannot write " + cat_out);
            out << catalog_to_json().dump(2) << '\n';
            std::printf("wrote %s\n", cat_out.c_str());
            return kExitOk;
        }
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInternal;
    }
    return kExitInternal;
}
