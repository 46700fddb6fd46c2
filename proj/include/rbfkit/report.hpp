#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rbfkit {

enum class Command { burger, centro, interp };
enum class ModeSelection { half, sqrt2, both };
enum class OutputFormat { csv, markdown };
enum class InterpKernel { mq, tps, pwtps, wavelet, all };

struct RunConfig {
    Command command = Command::burger;
    std::size_t n_knots = 11;
    ModeSelection kernel_mode = ModeSelection::both;
    OutputFormat output_format = OutputFormat::markdown;
    std::optional<std::string> output_path;
    std::uint64_t seed = 20010101;
    InterpKernel interp_kernel = InterpKernel::all;
};

/// Rendered report plus anything that went wrong while producing it.
/// A report with errors is still printable; callers map errors to exit code 1.
struct Report {
    std::string text;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    [[nodiscard]] bool ok() const { return errors.empty(); }
};

/// Relative-error table of the boundary knot scheme at the reference points.
[[nodiscard]] Report run_burger(const RunConfig& cfg);

/// Centrosymmetric structure, preconditioning and conditioning of MQ
/// matrices on a symmetric 1D grid.
[[nodiscard]] Report run_centro(const RunConfig& cfg);

/// Max interpolation error of sin(pi x) on [0, 1] versus the number of knots.
[[nodiscard]] Report run_interp(const RunConfig& cfg);

[[nodiscard]] Report run(const RunConfig& cfg);

/// Six significant digits, '.' decimal point ("%.6g"); "nan"/"inf" spelled out.
[[nodiscard]] std::string format_number(double v);

}  // namespace rbfkit
