#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epscan/cli/commands.hpp"
#include "epscan/cli/family_io.hpp"

namespace {

using namespace epscan;

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kRefused = 3, kIo = 4 };

// CLI11 would read "-5/4" after --beta as an option; glue such values on.
std::vector<std::string> normalize_args(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if ((a == "--beta" || a == "--range") && i + 1 < argc && argv[i + 1][0] == '-') {
            a += "=";
            a += argv[++i];
        }
        args.push_back(std::move(a));
    }
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
    return args;
}

void write_json(const cli::ReportDoc& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << doc.dump(2) << '\n';
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ep-scan: eigenvalue collisions in matrix families H(beta) = A + beta B", "ep-scan"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ep-scan 0.1.0");

    std::string family_arg;
    std::string beta_text;
    std::string json_path;
    std::string range_text = "-2:2";
    double tol = 1e-10;
    cli::SweepRequest sweep_req;
    std::string csv, svg_re, svg_im;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--family", family_arg, "preset name (paper) or family JSON file")->required();
        sub->add_option("--json", json_path, "write the report as JSON to this path");
        sub->add_option("--tol", tol, "numeric residual tolerance")->check(CLI::PositiveNumber);
    };
    auto with_beta = [&](CLI::App* sub) {
        common(sub);
        sub->add_option("--beta", beta_text, "parameter value, rational (-5/4) or decimal (-1.25)")->required();
    };

    CLI::App* analyze = app.add_subcommand("analyze", "eigenvalues, eigenspaces and Jordan data at one beta");
    with_beta(analyze);
    CLI::App* jordan = app.add_subcommand("jordan", "Jordan decomposition at one beta");
    with_beta(jordan);
    CLI::App* symmetry = app.add_subcommand("symmetry", "permutation invariance group at one beta");
    with_beta(symmetry);
    CLI::App* critical = app.add_subcommand("critical", "all real beta where eigenvalues collide");
    common(critical);
    CLI::App* sweep = app.add_subcommand("sweep", "track eigenvalue branches over a beta range");
    common(sweep);
    sweep->add_option("--range", range_text, "beta range a:b")->capture_default_str();
    sweep->add_option("--steps", sweep_req.steps, "number of samples")->capture_default_str()->check(
        CLI::Range(std::size_t{2}, std::size_t{1'000'000}));
    sweep->add_option("--csv", csv, "CSV output path");
    sweep->add_option("--svg-re", svg_re, "SVG plot of real parts");
    sweep->add_option("--svg-im", svg_im, "SVG plot of imaginary parts");
    sweep->add_option("--width", sweep_req.style.width, "SVG width")->capture_default_str()->check(CLI::Range(100, 10000));
    sweep->add_option("--height", sweep_req.style.height, "SVG height")->capture_default_str()->check(CLI::Range(100, 10000));

    try {
        app.parse(normalize_args(argc, argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        SpectralOptions options;
        options.residual_tol = tol;
        const AffineFamily fam = cli::load_family(family_arg);
        cli::CommandOutput out;
        if (analyze->parsed() || jordan->parsed()) {
            out = cli::cmd_analyze(fam, cli::parse_beta(beta_text), options, jordan->parsed());
        } else if (symmetry->parsed()) {
            out = cli::cmd_symmetry(fam, cli::parse_beta(beta_text), options);
        } else if (critical->parsed()) {
            out = cli::cmd_critical(fam, options);
        } else {
            std::tie(sweep_req.beta_min, sweep_req.beta_max) = cli::parse_range(range_text);
            if (!csv.empty()) sweep_req.csv = csv;
            if (!svg_re.empty()) sweep_req.svg_re = svg_re;
            if (!svg_im.empty()) sweep_req.svg_im = svg_im;
            out = cli::cmd_sweep(fam, sweep_req, options);
        }
        std::cout << out.text;
        if (!json_path.empty()) write_json(out.doc, json_path);
        return kOk;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const DegenerateFamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRefused;
    } catch (const IllPosedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRefused;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRefused;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
