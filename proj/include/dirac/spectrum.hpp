#pragma once

#include <string>
#include <vector>

#include "dirac/params.hpp"

namespace dirac::spectrum {

enum class Regime { landau, nonrelativistic, relativistic };

/// One solved energy level.  For relativistic solutions chi is the root of
/// the implicit quantization condition
///   chi^2 - 1 = w [ 2n + 1 + sqrt((m+alpha)^2 + (chi+1) b^2/2) ] + w (m+alpha)
/// on the positive bound branch chi > 1, eta = (chi^2 - 1)/(2w), and
/// epsilon_over_homega = (chi - 1)/w.  For the landau and nonrelativistic
/// regimes only epsilon_over_homega is meaningful (units hbar*omega_c and
/// hbar*omega respectively); chi and eta are NaN and residual is 0.
struct EnergySolution {
    Regime regime = Regime::relativistic;
    double chi = 0.0;
    double epsilon_over_homega = 0.0;
    double eta = 0.0;
    double residual = 0.0;
};

/// Landau level n + (|m| + m + 1)/2 in units of hbar*omega_c.
double landau_level(const params::QuantumNumbers& qn);

/// Nonrelativistic level n + 1/2 + sqrt((m+alpha)^2 + b^2)/2 + (m+alpha)/2
/// in units of hbar*omega.
double nonrel_energy(const params::DimensionlessConfig& cfg,
                     const params::QuantumNumbers& qn);

/// Solve the relativistic quantization condition for chi > 1 with a
/// bisection-safeguarded secant; converged when the defect
/// |chi^2 - 1 - RHS(chi)| <= 1e-12 * max(1, chi^2).
/// Throws std::domain_error when no positive bound state exists or the
/// iteration cap (200) is hit.
EnergySolution rel_energy(const params::DimensionlessConfig& cfg,
                          const params::QuantumNumbers& qn);

struct SpectrumEntry {
    params::QuantumNumbers qn;
    EnergySolution solution; // valid only when error is empty
    std::string error;       // nonempty when the state failed
};

struct IndexRange {
    int lo = 0;
    int hi = 0; // inclusive
};

/// Evaluate one regime over the (n, m) product range, row-major (n outer,
/// m inner).  Per-state failures are tagged in the entry rather than
/// aborting the sweep.  States may be evaluated concurrently (capped by the
/// DIRAC_ANTIDOT_THREADS environment variable); ordering is stable.
std::vector<SpectrumEntry> spectrum_table(const params::DimensionlessConfig& cfg,
                                          IndexRange n_range, IndexRange m_range,
                                          Regime regime);

} // namespace dirac::spectrum
