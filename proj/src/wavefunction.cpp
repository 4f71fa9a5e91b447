#include "dirac/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "dirac/special.hpp"

namespace dirac::wavefunction {

namespace {

// Scaled coordinate x = rho sqrt(2p); the shape exponent u(x) = 2q ln x - x^2/2
// peaks at u* = q ln(2q) - q.  All evaluation shifts by u* so that large
// upper indices never overflow the exponential.
struct ShapeBrackets {
    double lag = 0.0;  // L_n^k(z)
    double psi = 0.0;  // (2q - z) L + 2 z L'
    double curv = 0.0; // (2q-1-z) psi + 2z (-L + (2q-z+2) L' + 2z L'')
};

} // namespace

RadialState::RadialState(const params::DerivedLambdas& lams,
                         const params::QuantumNumbers& qn)
    : n_(qn.n), p_(lams.p), q_(lams.q), k_(lams.k) {
    if (n_ < 0)
        throw std::invalid_argument("wavefunction: n must be >= 0");
    if (!(p_ > 0.0))
        throw std::invalid_argument("wavefunction: p must be positive");
    const double ustar = q_ * std::log(2.0 * q_) - q_;
    // unit-amplitude pass to fix the normalization in scaled coordinates
    lnamp_ = -ustar;
    const double unit = special::integrate_radial(
        [this](double x) {
            const double f = shape_scaled(x);
            return f * f;
        },
        0.5);
    lnamp_ = 0.25 * std::log(2.0 * p_) - ustar - 0.5 * std::log(unit);
    // coefficient of the bare exp(-p rho^2) rho^{2q} L form
    norm_ = std::exp(lnamp_ + q_ * std::log(2.0 * p_));
}

double RadialState::shape_scaled(double x) const {
    const double z = x * x;
    const double lag = special::laguerre({n_, k_}, z);
    return std::exp(lnamp_ + 2.0 * q_ * std::log(x) - 0.5 * z) * lag;
}

double RadialState::upper(double rho) const {
    if (!(rho > 0.0))
        throw std::invalid_argument("wavefunction: rho must be positive");
    return shape_scaled(rho * std::sqrt(2.0 * p_));
}

UpperDerivatives RadialState::upper_derivatives(double rho) const {
    if (!(rho > 0.0))
        throw std::invalid_argument("wavefunction: rho must be positive");
    const double s = std::sqrt(2.0 * p_);
    const double x = rho * s;
    const double z = x * x;

    ShapeBrackets b;
    b.lag = special::laguerre({n_, k_}, z);
    const double d1 = special::laguerre_derivative({n_, k_}, z);
    const double d2 = n_ >= 2 ? special::laguerre({n_ - 2, k_ + 2.0}, z) : 0.0;
    b.psi = (2.0 * q_ - z) * b.lag + 2.0 * z * d1;
    b.curv = (2.0 * q_ - 1.0 - z) * b.psi +
             2.0 * z * (-b.lag + (2.0 * q_ - z + 2.0) * d1 + 2.0 * z * d2);

    const double envelope = std::exp(lnamp_ + 2.0 * q_ * std::log(x) - 0.5 * z);
    UpperDerivatives out;
    out.value = envelope * b.lag;
    out.d1 = s * envelope * b.psi / x;
    out.d2 = (2.0 * p_) * envelope * b.curv / z;
    return out;
}

double RadialState::lower(double rho, const params::DimensionlessConfig& cfg,
                          const params::QuantumNumbers& qn, double chi) const {
    if (!(chi > -1.0))
        throw std::invalid_argument("wavefunction: chi must exceed -1");
    const UpperDerivatives f = upper_derivatives(rho);
    const double coupling =
        (qn.m + cfg.alpha + 0.5) / rho + 0.5 * cfg.omega * rho;
    return (coupling * f.value - f.d1) / (chi + 1.0);
}

double radial_upper(const params::DerivedLambdas& lams,
                    const params::QuantumNumbers& qn, double rho) {
    return RadialState(lams, qn).upper(rho);
}

double radial_lower(const params::DerivedLambdas& lams,
                    const params::DimensionlessConfig& cfg,
                    const params::QuantumNumbers& qn, double chi, double rho) {
    return RadialState(lams, qn).lower(rho, cfg, qn, chi);
}

double coupling_residual(const params::DerivedLambdas& lams,
                         const params::DimensionlessConfig& cfg,
                         const params::QuantumNumbers& qn, double chi, double rho) {
    const RadialState state(lams, qn);
    const UpperDerivatives f = state.upper_derivatives(rho);
    const double shifted_m = qn.m + cfg.alpha;
    const double c = (shifted_m + 0.5) / rho + 0.5 * cfg.omega * rho;
    const double c1 = -(shifted_m + 0.5) / (rho * rho) + 0.5 * cfg.omega;

    const double g = (c * f.value - f.d1) / (chi + 1.0);
    const double g1 = (c1 * f.value + c * f.d1 - f.d2) / (chi + 1.0);

    const double sigma = 0.5 * cfg.b_squared / (rho * rho);
    // G' + ((m+1/2)/rho) G + ((omega/2) rho + alpha/rho) G - (chi-1-Sigma) F
    return g1 + c * g - (chi - 1.0 - sigma) * f.value;
}

RadialProfile build_profile(const params::DimensionlessConfig& cfg,
                            const params::QuantumNumbers& qn,
                            const spectrum::EnergySolution& solution,
                            const GridSpec& grid, bool include_lower) {
    if (!(grid.rho_min > 0.0) || !(grid.rho_max > grid.rho_min))
        throw std::invalid_argument("build_profile: need 0 < rho_min < rho_max");
    if (grid.count < 2)
        throw std::invalid_argument("build_profile: need count >= 2");
    if (!std::isfinite(solution.chi))
        throw std::invalid_argument(
            "build_profile: requires a relativistic solution (finite chi)");

    RadialProfile out;
    out.qn = qn;
    out.solution = solution;
    out.includes_lower = include_lower;
    out.lams = params::derived_lambdas(cfg, qn, solution.chi);

    const RadialState state(out.lams, qn);
    // upper() is unit-normalized; rescale when the lower component joins
    double scale = 1.0;
    if (include_lower) {
        const double total = special::integrate_radial(
            [&](double rho) {
                const double f = state.upper(rho);
                const double g = state.lower(rho, cfg, qn, solution.chi);
                return f * f + g * g;
            },
            state.p());
        scale = 1.0 / std::sqrt(total);
    }

    out.grid.resize(grid.count);
    out.upper.resize(grid.count);
    out.lower.assign(grid.count, 0.0);
    out.density.resize(grid.count);
    const double step = (grid.rho_max - grid.rho_min) / (grid.count - 1);
    for (int i = 0; i < grid.count; ++i) {
        const double rho = grid.rho_min + i * step;
        out.grid[i] = rho;
        out.upper[i] = scale * state.upper(rho);
        if (include_lower)
            out.lower[i] = scale * state.lower(rho, cfg, qn, solution.chi);
        out.density[i] =
            out.upper[i] * out.upper[i] + out.lower[i] * out.lower[i];
    }
    out.norm_constant = scale * state.norm_constant();

    double peak = 0.0;
    for (double d : out.density)
        peak = std::max(peak, d);
    if (!(peak > 0.0) || out.density.back() >= 1e-12 * peak)
        throw std::domain_error("build_profile: grid does not cover the density support");
    return out;
}

} // namespace dirac::wavefunction
