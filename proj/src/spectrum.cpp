#include "dirac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace dirac::spectrum {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

// defect of the quantization condition at chi:
// chi^2 - 1 - w [2n + 1 + sqrt((m+alpha)^2 + (chi+1) b^2/2)] - w (m+alpha)
double defect(const params::DimensionlessConfig& cfg,
              const params::QuantumNumbers& qn, double chi) {
    const double shifted_m = qn.m + cfg.alpha;
    const double root =
        std::sqrt(shifted_m * shifted_m + 0.5 * (chi + 1.0) * cfg.b_squared);
    return chi * chi - 1.0 -
           cfg.w * (2.0 * qn.n + 1.0 + root) - cfg.w * shifted_m;
}

int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    if (const char* env = std::getenv("DIRAC_ANTIDOT_THREADS")) {
        const long requested = std::strtol(env, nullptr, 10);
        if (requested >= 1)
            hw = std::min<unsigned>(hw, static_cast<unsigned>(requested));
    }
    return static_cast<int>(hw);
}

} // namespace

double landau_level(const params::QuantumNumbers& qn) {
    if (qn.n < 0)
        throw std::invalid_argument("spectrum: n must be >= 0");
    return qn.n + 0.5 * (std::abs(qn.m) + qn.m + 1);
}

double nonrel_energy(const params::DimensionlessConfig& cfg,
                     const params::QuantumNumbers& qn) {
    params::validate(cfg);
    if (qn.n < 0)
        throw std::invalid_argument("spectrum: n must be >= 0");
    const double shifted_m = qn.m + cfg.alpha;
    return qn.n + 0.5 + 0.5 * std::sqrt(shifted_m * shifted_m + cfg.b_squared) +
           0.5 * shifted_m;
}

EnergySolution rel_energy(const params::DimensionlessConfig& cfg,
                          const params::QuantumNumbers& qn) {
    params::validate(cfg);
    if (qn.n < 0)
        throw std::invalid_argument("spectrum: n must be >= 0");

    // Bracket: the defect is negative at chi = 1 whenever the quantization
    // RHS there is positive (always true for b^2 >= 0, w > 0); double the
    // upper end until the sign flips.
    double lo = 1.0;
    double flo = defect(cfg, qn, lo);
    if (flo > 0.0)
        throw std::domain_error("spectrum: no positive bound state");
    if (flo == 0.0) {
        // chi = 1 is the branch edge, not a bound level
        throw std::domain_error("spectrum: no chi > 1 bound state");
    }
    double hi = 2.0;
    double fhi = defect(cfg, qn, hi);
    int doublings = 0;
    while (fhi <= 0.0) {
        hi *= 2.0;
        fhi = defect(cfg, qn, hi);
        if (++doublings > 600)
            throw std::domain_error("spectrum: bracket expansion failed");
    }

    // bisection-safeguarded secant on the defect
    double chi = 0.5 * (lo + hi);
    double f = defect(cfg, qn, chi);
    auto converged = [](double value, double at) {
        return std::abs(value) <= 1e-12 * std::max(1.0, at * at);
    };
    double prev_chi = hi, prev_f = fhi;
    for (int it = 0; it < 200 && !converged(f, chi); ++it) {
        if (f < 0.0)
            lo = chi;
        else
            hi = chi;
        double next;
        const double df = f - prev_f;
        if (df != 0.0) {
            next = chi - f * (chi - prev_chi) / df;
            if (!(next > lo) || !(next < hi))
                next = 0.5 * (lo + hi);
        } else {
            next = 0.5 * (lo + hi);
        }
        prev_chi = chi;
        prev_f = f;
        chi = next;
        f = defect(cfg, qn, chi);
    }
    if (!converged(f, chi))
        throw std::domain_error("spectrum: relativistic root did not converge");

    // Newton polish toward the rounding floor; at small w the downstream
    // residual checks are sharper than the convergence threshold above
    for (int it = 0; it < 4 && f != 0.0; ++it) {
        const double shifted_m = qn.m + cfg.alpha;
        const double root = std::sqrt(shifted_m * shifted_m +
                                      0.5 * (chi + 1.0) * cfg.b_squared);
        const double slope =
            2.0 * chi - (root > 0.0 ? cfg.w * cfg.b_squared / (4.0 * root) : 0.0);
        const double next = chi - f / slope;
        const double fnext = defect(cfg, qn, next);
        if (std::abs(fnext) >= std::abs(f))
            break;
        chi = next;
        f = fnext;
    }

    EnergySolution out;
    out.regime = Regime::relativistic;
    out.chi = chi;
    out.epsilon_over_homega = (chi - 1.0) / cfg.w;
    out.eta = (chi * chi - 1.0) / (2.0 * cfg.w);
    out.residual = std::abs(f) / std::max(1.0, chi * chi);
    return out;
}

std::vector<SpectrumEntry> spectrum_table(const params::DimensionlessConfig& cfg,
                                          IndexRange n_range, IndexRange m_range,
                                          Regime regime) {
    if (n_range.hi < n_range.lo || m_range.hi < m_range.lo)
        throw std::invalid_argument("spectrum_table: empty range");
    if (n_range.lo < 0 || n_range.hi > 1000)
        throw std::invalid_argument("spectrum_table: n out of bounds [0, 1000]");
    if (std::abs(m_range.lo) > 10000 || std::abs(m_range.hi) > 10000)
        throw std::invalid_argument("spectrum_table: |m| out of bounds (<= 10000)");

    const int m_count = m_range.hi - m_range.lo + 1;
    const int total = (n_range.hi - n_range.lo + 1) * m_count;
    std::vector<SpectrumEntry> entries(total);

    auto solve_state = [&](int index) {
        SpectrumEntry& entry = entries[index];
        entry.qn = {n_range.lo + index / m_count, m_range.lo + index % m_count};
        try {
            EnergySolution sol;
            sol.regime = regime;
            switch (regime) {
            case Regime::landau:
                sol.chi = nan_value;
                sol.eta = nan_value;
                sol.epsilon_over_homega = landau_level(entry.qn);
                break;
            case Regime::nonrelativistic:
                sol.chi = nan_value;
                sol.eta = nan_value;
                sol.epsilon_over_homega = nonrel_energy(cfg, entry.qn);
                break;
            case Regime::relativistic:
                sol = rel_energy(cfg, entry.qn);
                break;
            }
            entry.solution = sol;
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
    };

    const int threads = std::min(thread_cap(), total);
    if (threads <= 1 || total < 64) {
        for (int i = 0; i < total; ++i)
            solve_state(i);
        return entries;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < total; i += threads)
                solve_state(i);
        });
    }
    for (auto& worker : pool)
        worker.join();
    return entries;
}

} // namespace dirac::spectrum
