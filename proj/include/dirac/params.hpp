#pragma once

namespace dirac::params {

/// Raw physical inputs in a consistent unit system (Gaussian-style
/// electromagnetic conventions: alpha = e*phi_AB / (2 pi hbar c),
/// omega_c = e*B / (m* c)).  The antidot potential is V = delta/(2 rho^2)
/// and the linear tensor coupling is parameterized by oscillator_frequency.
struct PhysicalConfig {
    double effective_mass = 1.0;       // m* > 0
    double magnetic_field = 0.0;       // B (sign free, but omega_c + 2 omega_0 must end up > 0)
    double oscillator_frequency = 0.0; // omega_0 >= 0
    double antidot_strength = 0.0;     // delta >= 0, energy * length^2
    double ab_flux = 0.0;              // phi_AB (sign free)
    double hbar = 1.0;
    double light_speed = 1.0;
    double charge = 1.0;
};

/// Reduced parameters every spectral formula consumes.  All frequencies are
/// stored in natural units (hbar = c = m* = 1), i.e. omega_c and omega are
/// numerically hbar*omega_c/(m* c^2) and hbar*omega/(m* c^2); consequently
/// omega == w.  Keeping both fields preserves the distinct roles: omega feeds
/// the radial operators, w the energy bookkeeping.
struct DimensionlessConfig {
    double alpha = 0.0;     // AB parameter, any real
    double b_squared = 0.0; // 2 m* delta / hbar^2 >= 0
    double omega_c = 0.0;   // cyclotron frequency, natural units
    double omega = 0.0;     // omega_c + 2 omega_0 > 0, natural units
    double w = 0.0;         // hbar omega / (m* c^2) > 0
};

struct QuantumNumbers {
    int n = 0; // radial (Laguerre) index, >= 0
    int m = 0; // magnetic quantum number, any integer
};

/// Per-state derived quantities.  In natural units lambda1 = (omega/4)^2,
/// p = sqrt(lambda1), gamma = 2 sqrt((m+alpha)^2 + (chi+1) b^2 / 2),
/// q = (1+gamma)/4, k = gamma/2, and
/// lambda2 = (chi^2 - 1)/4 - (m+alpha) w / 4.
struct DerivedLambdas {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double gamma = 0.0;
    double p = 0.0;
    double q = 0.0;
    double k = 0.0;
};

/// Reduce physical inputs to the dimensionless parameter set.
/// Throws std::invalid_argument when an input violates its constraints
/// (non-positive mass/constants, negative omega_0 or delta) and
/// std::domain_error when omega_c + 2 omega_0 <= 0.
DimensionlessConfig build_dimensionless(const PhysicalConfig& phys);

/// Construct a DimensionlessConfig directly from the figure-style
/// parameters (alpha, b, w).  The omega_0/omega_c split is not recoverable
/// from w alone; this takes the omega_0 = 0 reading (omega_c = omega = w).
DimensionlessConfig dimensionless_from_alpha_b_w(double alpha, double b, double w);

/// Validate an externally assembled DimensionlessConfig.
void validate(const DimensionlessConfig& cfg);

/// Evaluate the per-state parameter bundle at dimensionless energy
/// chi = E/(m* c^2).  Requires chi > -1.
DerivedLambdas derived_lambdas(const DimensionlessConfig& cfg,
                               const QuantumNumbers& qn, double chi);

} // namespace dirac::params
