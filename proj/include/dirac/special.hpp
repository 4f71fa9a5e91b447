#pragma once

#include <functional>

namespace dirac::special {

/// Generalized Laguerre polynomial L_n^k with real upper index k >= 0.
struct LaguerreSpec {
    int degree = 0;           // n >= 0
    double upper_index = 0.0; // k >= 0, generally non-integer
};

/// L_n^k(z) by the upward three-term recurrence in the degree:
/// L_0 = 1, L_1 = 1 + k - z, i L_i = (2i-1+k-z) L_{i-1} - (i-1+k) L_{i-2}.
double laguerre(const LaguerreSpec& spec, double z);

/// d/dz L_n^k(z) = -L_{n-1}^{k+1}(z); zero for n = 0.
double laguerre_derivative(const LaguerreSpec& spec, double z);

/// ln Gamma(x) for x > 0 (Lanczos approximation, ~1e-14 relative).
/// Throws std::invalid_argument for x <= 0.
double log_gamma(double x);

/// Integrate f over (0, infinity) for integrands that decay like
/// exp(-2 p rho^2).  Fixed-order Gauss-Legendre panels, geometrically graded
/// toward the origin (handles rho^sigma endpoint behavior) and extended to
/// 40/sqrt(2p) in the tail.  node_count is the per-panel order (>= 16).
/// Throws std::domain_error on non-finite samples.
double integrate_radial(const std::function<double(double)>& f, double p,
                        int node_count = 32);

} // namespace dirac::special
