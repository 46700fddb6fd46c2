#include "rbfkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "rbfkit/bkm.hpp"
#include "rbfkit/error.hpp"
#include "rbfkit/geometry.hpp"
#include "rbfkit/interp.hpp"
#include "rbfkit/kernels.hpp"
#include "rbfkit/linalg.hpp"

namespace rbfkit {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

constexpr double kMqShape = 0.5;

class Table {
public:
    Table(std::string title, std::vector<std::string> header)
        : title_(std::move(title)), header_(std::move(header)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void render(std::ostringstream& out, OutputFormat fmt) const {
        if (fmt == OutputFormat::csv) {
            write_csv_row(out, header_);
            for (const auto& r : rows_) write_csv_row(out, r);
            return;
        }
        out << "### " << title_ << "\n\n";
        write_md_row(out, header_);
        out << "|";
        for (std::size_t i = 0; i < header_.size(); ++i) out << "---|";
        out << "\n";
        for (const auto& r : rows_) write_md_row(out, r);
    }

private:
    static void write_csv_row(std::ostringstream& out, const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << "\n";
    }
    static void write_md_row(std::ostringstream& out, const std::vector<std::string>& r) {
        out << "|";
        for (const auto& c : r) out << " " << c << " |";
        out << "\n";
    }

    std::string title_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string render(const std::vector<Table>& tables, OutputFormat fmt) {
    std::ostringstream out;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i) out << "\n";
        tables[i].render(out, fmt);
    }
    return out.str();
}

const char* mode_name(ConvDiffScaling m) { return m == ConvDiffScaling::half ? "half" : "sqrt2"; }
std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<ConvDiffScaling> selected_modes(ModeSelection s) {
    switch (s) {
        case ModeSelection::half: return {ConvDiffScaling::half};
        case ModeSelection::sqrt2: return {ConvDiffScaling::sqrt2};
        case ModeSelection::both: break;
    }
    return {ConvDiffScaling::half, ConvDiffScaling::sqrt2};
}

}  // namespace

Report run_burger(const RunConfig& cfg) {
    Report report;
    const auto points = reference_points();
    const KnotSet knots = ellipse_boundary_knots(benchmark_ellipse(), cfg.n_knots);
    const auto modes = selected_modes(cfg.kernel_mode);

    struct ModeResult {
        ConvDiffScaling mode;
        BenchmarkTable table;
        double condition = std::numeric_limits<double>::quiet_NaN();
        bool solved = false;
    };
    std::vector<ModeResult> results;
    for (auto mode : modes) {
        ModeResult r{mode, {}, std::numeric_limits<double>::quiet_NaN(), false};
        try {
            const auto sys = assemble_burger_system(knots, mode);
            r.condition = condition_number(sys.matrix);
            const BkmModel model{knots, lu_solve(sys.matrix, sys.rhs), mode};
            r.table = benchmark_table(model, points);
            r.solved = true;
            for (const auto& row : r.table.rows) {
                if (!row.failure.empty()) {
                    report.errors.push_back(std::string(mode_name(mode)) + " at (" +
                                            format_number(row.point.x) + ", " +
                                            format_number(row.point.y) + "): " + row.failure);
                }
            }
        } catch (const std::exception& e) {
            report.errors.push_back(std::string(mode_name(mode)) + ": " + e.what());
        }
        results.push_back(std::move(r));
    }

    std::vector<std::string> header{"x", "y", "exact"};
    for (const auto& r : results) {
        header.push_back(std::string("numeric_") + mode_name(r.mode));
        header.push_back(std::string("rel_err_") + mode_name(r.mode));
    }
    Table table("Relative errors, N = " + std::to_string(cfg.n_knots) + " boundary knots", header);
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<std::string> row{format_number(points[i].x), format_number(points[i].y),
                                     format_number(exact_solution(points[i]))};
        for (const auto& r : results) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            row.push_back(format_number(r.solved ? r.table.rows[i].numeric : nan));
            row.push_back(format_number(r.solved ? r.table.rows[i].rel_err : nan));
        }
        table.add(std::move(row));
    }

    Table summary("Summary", {"metric", "mode", "value"});
    for (const auto& r : results) {
        summary.add({"average_rel_err", mode_name(r.mode),
                     format_number(r.solved ? r.table.average : std::numeric_limits<double>::quiet_NaN())});
        summary.add({"condition_number", mode_name(r.mode), format_number(r.condition)});
        summary.add({"failed_points", mode_name(r.mode),
                     std::to_string(r.solved ? r.table.failures : points.size())});
    }
    const auto& ref = reference_averages();
    if (auto it = ref.find(cfg.n_knots); it != ref.end()) {
        summary.add({"reference_average_rel_err", "published", format_number(it->second)});
    }

    report.text = render({table, summary}, cfg.output_format);
    return report;
}

Report run_centro(const RunConfig& cfg) {
    Report report;
    const KnotSet1d knots = symmetric_grid_1d(cfg.n_knots, 0.0, 1.0);
    const Multiquadric mq{kMqShape};
    constexpr double tol = 1e-12;

    Table structure("MQ matrices on a symmetric grid, n = " + std::to_string(cfg.n_knots),
                    {"order", "centrosymmetric", "skew_centrosymmetric", "offdiag_block_max", "cond_A",
                     "cond_block_minus", "cond_block_plus"});
    for (int order = 0; order <= 2; ++order) {
        const DenseMatrix a = rbf_derivative_matrix(mq, knots, order);
        const bool centro = is_centrosymmetric(a, tol);
        const bool skew = is_skew_centrosymmetric(a, tol);

        // Largest entry of P A Q outside its two diagonal blocks.
        const DenseMatrix pre = centro_precondition(a);
        const std::size_t n = a.rows();
        const std::size_t m = n / 2;
        const std::size_t split = m;  // first index of the second block
        double off = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                if ((i < split) != (j < split)) off = std::max(off, std::abs(pre(i, j)));
            }
        }

        std::string cond_minus = "n/a";
        std::string cond_plus = "n/a";
        if (centro) {
            const CentroSplit s = centro_split(a);
            cond_minus = s.block_minus.rows() ? format_number(condition_number(s.block_minus)) : "n/a";
            cond_plus = format_number(condition_number(s.block_plus));
        }
        structure.add({std::to_string(order), yes_no(centro), yes_no(skew), format_number(off),
                       format_number(condition_number(a)), cond_minus, cond_plus});
    }

    Table entries("Largest entries of the second-order MQ differentiation matrix (0-based)",
                  {"rank", "row", "col", "value"});
    try {
        const auto top = max_entry_report(rbf_differentiation_matrix(mq, knots, 2));
        for (std::size_t k = 0; k < top.size(); ++k) {
            entries.add({std::to_string(k + 1), std::to_string(top[k].row), std::to_string(top[k].col),
                         format_number(top[k].value)});
        }
    } catch (const SingularMatrixError& e) {
        report.errors.push_back(std::string("differentiation matrix: ") + e.what());
    }

    Table solve("Split solve versus full LU, random right-hand side", {"metric", "value"});
    try {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        DenseVector b(cfg.n_knots);
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = dist(rng);
        const DenseMatrix a = rbf_derivative_matrix(mq, knots, 0);
        const DenseVector xs = centro_split_solve(a, b);
        const DenseVector xl = lu_solve(a, b);
        double diff = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) diff = std::max(diff, std::abs(xs[i] - xl[i]));
        solve.add({"seed", std::to_string(cfg.seed)});
        solve.add({"max_abs_solution", format_number(norm_inf(xl))});
        solve.add({"split_vs_lu_rel_diff", format_number(diff / std::max(norm_inf(xl), 1e-300))});
    } catch (const std::exception& e) {
        report.errors.push_back(std::string("split solve: ") + e.what());
    }

    report.text = render({structure, entries, solve}, cfg.output_format);
    return report;
}

Report run_interp(const RunConfig& cfg) {
    Report report;
    struct Named {
        std::string name;
        KernelSpec spec;
    };
    std::vector<Named> kernels;
    const auto want = [&](InterpKernel k) {
        return cfg.interp_kernel == InterpKernel::all || cfg.interp_kernel == k;
    };
    if (want(InterpKernel::mq)) kernels.push_back({"mq", Multiquadric{kMqShape}});
    if (want(InterpKernel::tps)) kernels.push_back({"tps", ThinPlateSpline{1}});
    if (want(InterpKernel::pwtps)) kernels.push_back({"pwtps", PrewaveletTps{1, 0.5}});
    if (want(InterpKernel::wavelet)) kernels.push_back({"wavelet", make_wavelet(Multiquadric{kMqShape}, 2.0, 0.1)});

    std::vector<std::size_t> sizes;
    for (std::size_t n = 5; n <= cfg.n_knots; n += 4) sizes.push_back(n);
    if (sizes.empty()) sizes.push_back(cfg.n_knots);

    const auto target = [](double x) { return std::sin(std::numbers::pi * x); };
    Table table("Interpolation of sin(pi x) on [0, 1], 101 evaluation points",
                {"kernel", "n", "max_error", "node_error", "condition"});
    for (const auto& k : kernels) {
        for (std::size_t n : sizes) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            double max_err = nan, node_err = nan, cond = std::numeric_limits<double>::infinity();
            try {
                const KnotSet1d nodes = n >= 2 ? symmetric_grid_1d(n, 0.0, 1.0) : KnotSet1d({0.5});
                std::vector<double> values;
                for (double x : nodes.values()) values.push_back(target(x));
                const RadialInterpolant s(k.spec, nodes, values);
                cond = s.condition_number();
                node_err = 0.0;
                for (std::size_t j = 0; j < nodes.size(); ++j) {
                    node_err = std::max(node_err, std::abs(s(nodes[j]) - values[j]));
                }
                max_err = 0.0;
                for (int e = 0; e <= 100; ++e) {
                    const double x = e / 100.0;
                    max_err = std::max(max_err, std::abs(s(x) - target(x)));
                }
                if (cond > 1e12) {
                    report.warnings.push_back(k.name + " n=" + std::to_string(n) +
                                              ": ill-conditioned collocation matrix (cond " +
                                              format_number(cond) + ")");
                }
            } catch (const SingularMatrixError& e) {
                report.warnings.push_back(k.name + " n=" + std::to_string(n) + ": " + e.what());
            }
            table.add({k.name, std::to_string(n), format_number(max_err), format_number(node_err),
                       format_number(cond)});
        }
    }
    report.text = render({table}, cfg.output_format);
    return report;
}

Report run(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::burger: return run_burger(cfg);
        case Command::centro: return run_centro(cfg);
        case Command::interp: return run_interp(cfg);
    }
    return {};
}

}  // namespace rbfkit
