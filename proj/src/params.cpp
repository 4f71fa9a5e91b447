#include "dirac/params.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac::params {

namespace {

void require(bool ok, const char* message) {
    if (!ok)
        throw std::invalid_argument(message);
}

} // namespace

DimensionlessConfig build_dimensionless(const PhysicalConfig& phys) {
    require(phys.effective_mass > 0.0, "params: effective_mass must be > 0");
    require(phys.hbar > 0.0, "params: hbar must be > 0");
    require(phys.light_speed > 0.0, "params: light_speed must be > 0");
    require(phys.oscillator_frequency >= 0.0,
            "params: oscillator_frequency must be >= 0");
    require(phys.antidot_strength >= 0.0, "params: antidot_strength must be >= 0");

    const double mc2 = phys.effective_mass * phys.light_speed * phys.light_speed;
    const double omega_c =
        phys.charge * phys.magnetic_field / (phys.effective_mass * phys.light_speed);
    const double omega = omega_c + 2.0 * phys.oscillator_frequency;
    if (!(omega > 0.0))
        throw std::domain_error(
            "params: omega_c + 2 omega_0 must be positive (unsupported "
            "field/frequency combination)");

    DimensionlessConfig cfg;
    cfg.alpha = phys.charge * phys.ab_flux /
                (2.0 * M_PI * phys.hbar * phys.light_speed);
    cfg.b_squared = 2.0 * phys.effective_mass * phys.antidot_strength /
                    (phys.hbar * phys.hbar);
    cfg.omega_c = phys.hbar * omega_c / mc2; // natural units
    cfg.omega = phys.hbar * omega / mc2;
    cfg.w = cfg.omega;
    validate(cfg);
    return cfg;
}

DimensionlessConfig dimensionless_from_alpha_b_w(double alpha, double b, double w) {
    DimensionlessConfig cfg;
    cfg.alpha = alpha;
    cfg.b_squared = b * b;
    cfg.omega_c = w; // omega_0 = 0 reading
    cfg.omega = w;
    cfg.w = w;
    validate(cfg);
    return cfg;
}

void validate(const DimensionlessConfig& cfg) {
    require(std::isfinite(cfg.alpha), "params: alpha must be finite");
    require(cfg.b_squared >= 0.0 && std::isfinite(cfg.b_squared),
            "params: b_squared must be finite and >= 0");
    if (!(cfg.omega > 0.0) || !(cfg.w > 0.0))
        throw std::domain_error("params: omega and w must be positive");
}

DerivedLambdas derived_lambdas(const DimensionlessConfig& cfg,
                               const QuantumNumbers& qn, double chi) {
    validate(cfg);
    require(qn.n >= 0, "params: n must be >= 0");
    if (!(chi > -1.0))
        throw std::invalid_argument("params: chi must exceed -1");

    const double shifted_m = qn.m + cfg.alpha;
    // radicand = (m+alpha)^2 + (chi+1) b^2/2; then 1 + 16 lambda3 = 4 radicand
    const double radicand =
        shifted_m * shifted_m + 0.5 * (chi + 1.0) * cfg.b_squared;
    if (radicand < 0.0)
        throw std::domain_error("params: gamma radicand negative");

    DerivedLambdas out;
    out.p = 0.25 * cfg.omega;
    out.lambda1 = out.p * out.p;
    out.lambda3 = 0.25 * radicand - 1.0 / 16.0;
    out.gamma = 2.0 * std::sqrt(radicand);
    out.q = 0.25 * (1.0 + out.gamma);
    out.k = 0.5 * out.gamma;
    out.lambda2 = 0.25 * (chi * chi - 1.0) - 0.25 * shifted_m * cfg.w;
    return out;
}

} // namespace dirac::params
