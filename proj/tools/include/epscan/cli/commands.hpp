#pragma once

#include <optional>
#include <string>

#include "epscan/cli/report.hpp"
#include "epscan/family.hpp"

namespace epscan::cli {

struct CommandOutput {
    ReportDoc doc;
    std::string text;  // human-readable report
};

/// Spectral report at beta; includes the Jordan decomposition when defective
/// (always when `with_jordan`).
CommandOutput cmd_analyze(const AffineFamily& fam, const Rational& beta, const SpectralOptions& options,
                          bool with_jordan = false);

CommandOutput cmd_critical(const AffineFamily& fam, const SpectralOptions& options);

CommandOutput cmd_symmetry(const AffineFamily& fam, const Rational& beta, const SpectralOptions& options);

struct SweepRequest {
    double beta_min = -2.0;
    double beta_max = 2.0;
    std::size_t steps = 401;
    std::optional<std::string> csv;
    std::optional<std::string> svg_re;
    std::optional<std::string> svg_im;
    SvgStyle style{};
};

CommandOutput cmd_sweep(const AffineFamily& fam, const SweepRequest& request, const SpectralOptions& options);

/// Parses "a:b" into a range with a < b.
std::pair<double, double> parse_range(const std::string& text);

}  // namespace epscan::cli
