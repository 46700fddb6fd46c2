// Command-line front end: burger | centro | interp.
//
// Exit codes: 0 success, 1 solver error, 2 bad arguments.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "rbfkit/report.hpp"

namespace {

constexpr int kSolverError = 1;
constexpr int kBadArguments = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Meshless RBF toolkit: boundary knot benchmark, centrosymmetry and interpolation studies"};
    app.require_subcommand(1);

    rbfkit::RunConfig cfg;
    std::string out_path;
    std::size_t burger_knots = 11;
    std::size_t centro_knots = 8;
    std::size_t interp_knots = 17;

    const std::map<std::string, rbfkit::ModeSelection> modes{
        {"half", rbfkit::ModeSelection::half},
        {"sqrt2", rbfkit::ModeSelection::sqrt2},
        {"both", rbfkit::ModeSelection::both}};
    const std::map<std::string, rbfkit::OutputFormat> formats{
        {"csv", rbfkit::OutputFormat::csv}, {"md", rbfkit::OutputFormat::markdown}};
    const std::map<std::string, rbfkit::InterpKernel> kernels{
        {"mq", rbfkit::InterpKernel::mq},       {"tps", rbfkit::InterpKernel::tps},
        {"pwtps", rbfkit::InterpKernel::pwtps}, {"wavelet", rbfkit::InterpKernel::wavelet},
        {"all", rbfkit::InterpKernel::all}};

    auto add_output_options = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.output_format, "Output format: csv or md")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", out_path, "Write the report to PATH instead of stdout");
    };

    auto* burger = app.add_subcommand("burger", "Boundary knot solution of the Burger-like benchmark");
    burger->add_option("--knots", burger_knots, "Number of boundary knots")->check(CLI::Range(1, 10000));
    burger->add_option("--mode", cfg.kernel_mode, "Kernel scaling: half, sqrt2 or both")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    add_output_options(burger);

    auto* centro = app.add_subcommand("centro", "Centrosymmetric structure of MQ matrices");
    centro->add_option("--knots", centro_knots, "Number of symmetric grid knots")->check(CLI::Range(2, 2000));
    centro->add_option("--seed", cfg.seed, "Seed for the random right-hand side");
    add_output_options(centro);

    auto* interp = app.add_subcommand("interp", "Interpolation error versus knot count");
    interp->add_option("--kernel", cfg.interp_kernel, "mq, tps, pwtps, wavelet or all")
        ->transform(CLI::CheckedTransformer(kernels, CLI::ignore_case));
    interp->add_option("--max-knots", interp_knots, "Largest knot count in the sweep")->check(CLI::Range(1, 2000));
    add_output_options(interp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kBadArguments;
    }

    if (burger->parsed()) {
        cfg.command = rbfkit::Command::burger;
        cfg.n_knots = burger_knots;
    } else if (centro->parsed()) {
        cfg.command = rbfkit::Command::centro;
        cfg.n_knots = centro_knots;
    } else {
        cfg.command = rbfkit::Command::interp;
        cfg.n_knots = interp_knots;
    }
    if (!out_path.empty()) cfg.output_path = out_path;

    rbfkit::Report report;
    try {
        report = rbfkit::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSolverError;
    }

    if (cfg.output_path) {
        std::ofstream file(*cfg.output_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << *cfg.output_path << " for writing\n";
            return kBadArguments;
        }
        file << report.text;
    } else {
        std::cout << report.text;
    }
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    for (const auto& e : report.errors) std::cerr << "error: " << e << "\n";
    return report.ok() ? 0 : kSolverError;
}
