#pragma once

#include <optional>
#include <string>

#include "dirac/params.hpp"
#include "dirac/spectrum.hpp"
#include "dirac/table.hpp"
#include "dirac/wavefunction.hpp"

namespace dirac::cli {

enum class Command { spectrum, density, figure1, figure2, figure3, verify };

/// Figure-style parameter block: alpha, b (not b^2) and the energy ratio w.
struct DimensionlessParams {
    double alpha = 0.0;
    double b = 0.0;
    double w = 1.0;
};

/// Fully parsed invocation.  Exactly one of `physical` / `dimensionless`
/// must be present (the CLI guarantees this; run() re-validates).
struct RunConfig {
    Command command = Command::spectrum;
    std::optional<params::PhysicalConfig> physical;
    std::optional<DimensionlessParams> dimensionless;
    spectrum::Regime regime = spectrum::Regime::relativistic;
    spectrum::IndexRange n_range{0, 0};
    spectrum::IndexRange m_range{0, 0};
    wavefunction::GridSpec grid{0.0, 0.0, 0};
    bool include_lower = true;
    // verify (quantization mode): present lambda1/lambda3 select it
    std::optional<double> lambda1;
    std::optional<double> lambda3;
    int n_max = 2;
    OutputFormat format = OutputFormat::csv;
    std::string out_path; // empty = stdout
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_domain = 3;
inline constexpr int exit_io = 4;

/// Execute a command and emit its artifact.  Returns exit_ok on success;
/// on failure prints a single-line JSON error record to stderr and returns
/// exit_domain (config/math errors) or exit_io (write failures).
int run(const RunConfig& config);

/// Table builders behind each subcommand (exposed for tests).
Table make_spectrum_table(const params::DimensionlessConfig& cfg,
                          spectrum::IndexRange n_range, spectrum::IndexRange m_range,
                          spectrum::Regime regime);
Table make_figure1(double alpha, double b, int n, spectrum::IndexRange m_range);
Table make_figure2(double alpha, double b, double w, int n,
                   spectrum::IndexRange m_range);
Table make_figure3(double alpha, double b, double w,
                   const params::QuantumNumbers& qn,
                   const wavefunction::GridSpec& grid, bool include_lower);
Table make_density(const params::DimensionlessConfig& cfg,
                   const params::QuantumNumbers& qn,
                   const wavefunction::GridSpec& grid, bool include_lower);
Table make_verify_quantization(double lambda1, double lambda3, int n_max);
Table make_verify_relativistic(const params::DimensionlessConfig& cfg,
                               const params::QuantumNumbers& qn);

} // namespace dirac::cli
