#pragma once

#include <vector>

#include "dirac/params.hpp"
#include "dirac/spectrum.hpp"

namespace dirac::wavefunction {

/// Upper radial component and its first two rho-derivatives, all sharing the
/// quadrature normalization constant of the state.
struct UpperDerivatives {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// Precomputed state evaluator: fixes (p, q, k) from the lambdas and the
/// normalization constant by quadrature once, then evaluates cheaply.
class RadialState {
public:
    RadialState(const params::DerivedLambdas& lams, const params::QuantumNumbers& qn);

    double upper(double rho) const;
    UpperDerivatives upper_derivatives(double rho) const;

    /// Lower component recovered algebraically from the first-order coupling:
    /// G = [ ((m + alpha + 1/2)/rho + (omega/2) rho) F - F' ] / (chi + 1).
    double lower(double rho, const params::DimensionlessConfig& cfg,
                 const params::QuantumNumbers& qn, double chi) const;

    double norm_constant() const { return norm_; }
    double p() const { return p_; }
    double q() const { return q_; }
    double k() const { return k_; }

private:
    double shape_scaled(double x) const; // normalized F at x = rho sqrt(2p)
    int n_;
    double p_, q_, k_;
    double lnamp_ = 0.0;
    double norm_ = 0.0;
};

/// Normalized upper component F(rho) = C exp(-p rho^2) rho^{2q} L_n^k(2 p rho^2),
/// C fixed so that the integral of F^2 over (0, inf) is 1.
/// Convenience wrapper over RadialState; prefer RadialState when sampling
/// many points of one state.
double radial_upper(const params::DerivedLambdas& lams,
                    const params::QuantumNumbers& qn, double rho);

/// Lower component G at the given chi (see RadialState::lower).  F' is
/// analytic (product rule plus the Laguerre derivative identity).
double radial_lower(const params::DerivedLambdas& lams,
                    const params::DimensionlessConfig& cfg,
                    const params::QuantumNumbers& qn, double chi, double rho);

/// Residual of the second first-order coupling equation,
///   G' + ((m+1/2)/rho) G - (Ubar - abar_phi) G - (chi - 1 - Sigma) F,
/// with Ubar - abar_phi = -((omega/2) rho + alpha/rho) and
/// Sigma = b^2/(2 rho^2), evaluated with analytic derivatives.
double coupling_residual(const params::DerivedLambdas& lams,
                         const params::DimensionlessConfig& cfg,
                         const params::QuantumNumbers& qn, double chi, double rho);

struct GridSpec {
    double rho_min = 0.0; // > 0
    double rho_max = 0.0; // > rho_min
    int count = 0;        // >= 2
};

/// Sampled state profile.  density[i] = upper[i]^2 (+ lower[i]^2 when
/// includes_lower); normalization is over the continuous state, fixed by
/// quadrature, so that the integral of the density over (0, inf) is 1.
struct RadialProfile {
    std::vector<double> grid;
    std::vector<double> upper;
    std::vector<double> lower; // zero-filled when !includes_lower
    std::vector<double> density;
    double norm_constant = 0.0;
    bool includes_lower = true;
    params::QuantumNumbers qn;
    spectrum::EnergySolution solution;
    params::DerivedLambdas lams;
};

/// Build a profile for a relativistic state on a uniform grid.
/// Throws std::invalid_argument on a bad grid spec and std::domain_error
/// when the grid fails to cover the density support
/// (tail sample >= 1e-12 * max).
RadialProfile build_profile(const params::DimensionlessConfig& cfg,
                            const params::QuantumNumbers& qn,
                            const spectrum::EnergySolution& solution,
                            const GridSpec& grid, bool include_lower = true);

} // namespace dirac::wavefunction
