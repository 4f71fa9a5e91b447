#pragma once

#include <vector>

#include "dirac/params.hpp"

namespace dirac::oracle {

/// Finite-difference discretization of the radial operator
///   -d^2/drho^2 + 4 lambda1 rho^2 + 4 lambda3 / rho^2
/// on the uniform grid rho_i = (i+1) h, i = 0..node_count-1, with implicit
/// Dirichlet conditions at rho = 0 and rho = (node_count+1) h.  Symmetric
/// tridiagonal: diagonal[i] = 2/h^2 + 4 lambda1 rho_i^2 + 4 lambda3/rho_i^2,
/// off_diagonal[i] = -1/h^2.
struct RadialOperator {
    double grid_step = 0.0;
    int node_count = 0;
    double domain_end = 0.0;
    double lambda1 = 0.0;
    double lambda3 = 0.0;
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;
};

/// Assemble the operator.  Requires lambda1 > 0, 1 + 16 lambda3 >= 0,
/// node_count >= 100, and a domain long enough to contain the Gaussian
/// support: (node_count+1) h >= 12 / sqrt(2 sqrt(lambda1)).
RadialOperator assemble(double lambda1, double lambda3, double grid_step,
                        int node_count);

/// The `count` smallest eigenvalues (1 <= count <= 10), ascending, via
/// Sturm-sequence bisection to ~1e-12 absolute.
std::vector<double> lowest_eigenvalues(const RadialOperator& op, int count);

/// Eigenvector for a converged eigenvalue by inverse iteration; returned
/// with unit Euclidean norm and its largest-magnitude entry positive.
std::vector<double> eigenvector(const RadialOperator& op, double eigenvalue);

struct QuantizationRow {
    int n = 0;
    double numeric = 0.0;       // Richardson-extrapolated eigenvalue
    double numeric_h = 0.0;     // raw, step h
    double numeric_h2 = 0.0;    // raw, step h/2
    double analytic = 0.0;      // 4 sqrt(lambda1) (2n + 1 + gamma/2)
    double relative_error = 0.0;
    double error_ratio = 0.0;   // |err(h)| / |err(h/2)|, ~4 for O(h^2)
};

/// Compare numeric eigenvalues of the assembled operator against the
/// closed-form quantization rule for n = 0..n_max (n_max <= 5).
/// Eigenvalues are extrapolated from two grids (h and h/2, same domain).
std::vector<QuantizationRow> verify_quantization(double lambda1, double lambda3,
                                                 int n_max, int node_count = 4000);

struct RelativisticCheck {
    double chi_claimed = 0.0;
    double chi_numeric = 0.0;
    double defect = 0.0; // |chi_numeric - chi_claimed| / chi_claimed
    int iterations = 0;  // outer lambda3(chi) updates
};

/// Independent check of a relativistic level: iterate
/// lambda3(chi) -> n-th eigenvalue -> chi (damped step 1/2) to the numeric
/// self-consistent energy and report the relative defect against the
/// claimed chi.  With b = 0 the map is chi-independent and a single solve
/// suffices.  Throws std::domain_error if the fixed point fails to settle
/// within 100 iterations.
RelativisticCheck verify_relativistic(const params::DimensionlessConfig& cfg,
                                      const params::QuantumNumbers& qn,
                                      double chi_claimed, int node_count = 12000);

} // namespace dirac::oracle
