#include "dirac/run.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

#include "dirac/oracle.hpp"

namespace dirac::cli {

namespace {

params::DimensionlessConfig resolve_config(const RunConfig& config) {
    const bool has_phys = config.physical.has_value();
    const bool has_dimless = config.dimensionless.has_value();
    if (has_phys == has_dimless)
        throw std::invalid_argument(
            "run: exactly one of the physical/dimensionless parameter blocks "
            "must be present");
    if (has_phys)
        return params::build_dimensionless(*config.physical);
    const DimensionlessParams& d = *config.dimensionless;
    return params::dimensionless_from_alpha_b_w(d.alpha, d.b, d.w);
}

void check_ranges(spectrum::IndexRange n_range, spectrum::IndexRange m_range) {
    if (n_range.hi < n_range.lo || m_range.hi < m_range.lo)
        throw std::invalid_argument("run: empty quantum-number range");
    if (n_range.lo < 0 || n_range.hi > 1000)
        throw std::invalid_argument("run: n range outside [0, 1000]");
    if (std::abs(m_range.lo) > 10000 || std::abs(m_range.hi) > 10000)
        throw std::invalid_argument("run: |m| range outside [-10000, 10000]");
}

} // namespace

Table make_spectrum_table(const params::DimensionlessConfig& cfg,
                          spectrum::IndexRange n_range, spectrum::IndexRange m_range,
                          spectrum::Regime regime) {
    check_ranges(n_range, m_range);
    const auto entries = spectrum::spectrum_table(cfg, n_range, m_range, regime);
    Table table;
    if (regime == spectrum::Regime::relativistic)
        table.columns = {"n", "m", "chi", "epsilon", "eta", "residual"};
    else
        table.columns = {"n", "m", "energy"};
    for (const auto& entry : entries) {
        if (!entry.error.empty())
            throw std::domain_error("state (n=" + std::to_string(entry.qn.n) +
                                    ", m=" + std::to_string(entry.qn.m) +
                                    "): " + entry.error);
        const auto& sol = entry.solution;
        if (regime == spectrum::Regime::relativistic)
            table.rows.push_back({static_cast<double>(entry.qn.n),
                                  static_cast<double>(entry.qn.m), sol.chi,
                                  sol.epsilon_over_homega, sol.eta, sol.residual});
        else
            table.rows.push_back({static_cast<double>(entry.qn.n),
                                  static_cast<double>(entry.qn.m),
                                  sol.epsilon_over_homega});
    }
    return table;
}

Table make_figure1(double alpha, double b, int n, spectrum::IndexRange m_range) {
    check_ranges({n, n}, m_range);
    const auto landau_cfg = params::dimensionless_from_alpha_b_w(0.0, 0.0, 1.0);
    const auto shifted_cfg = params::dimensionless_from_alpha_b_w(alpha, 0.0, 1.0);
    const auto antidot_cfg = params::dimensionless_from_alpha_b_w(alpha, b, 1.0);

    Table table;
    table.columns = {"m", "landau", "shifted", "antidot"};
    for (int m = m_range.lo; m <= m_range.hi; ++m) {
        const params::QuantumNumbers qn{n, m};
        table.rows.push_back({static_cast<double>(m),
                              spectrum::nonrel_energy(landau_cfg, qn),
                              spectrum::nonrel_energy(shifted_cfg, qn),
                              spectrum::nonrel_energy(antidot_cfg, qn)});
    }
    return table;
}

Table make_figure2(double alpha, double b, double w, int n,
                   spectrum::IndexRange m_range) {
    check_ranges({n, n}, m_range);
    const auto landau_cfg = params::dimensionless_from_alpha_b_w(0.0, 0.0, w);
    const auto full_cfg = params::dimensionless_from_alpha_b_w(alpha, b, w);

    Table table;
    table.columns = {"m", "eta_landau", "eta_full"};
    for (int m = m_range.lo; m <= m_range.hi; ++m) {
        const params::QuantumNumbers qn{n, m};
        table.rows.push_back({static_cast<double>(m),
                              spectrum::rel_energy(landau_cfg, qn).eta,
                              spectrum::rel_energy(full_cfg, qn).eta});
    }
    return table;
}

Table make_figure3(double alpha, double b, double w,
                   const params::QuantumNumbers& qn,
                   const wavefunction::GridSpec& grid, bool include_lower) {
    const auto free_cfg = params::dimensionless_from_alpha_b_w(alpha, 0.0, w);
    const auto antidot_cfg = params::dimensionless_from_alpha_b_w(alpha, b, w);
    const auto free_profile = wavefunction::build_profile(
        free_cfg, qn, spectrum::rel_energy(free_cfg, qn), grid, include_lower);
    const auto antidot_profile = wavefunction::build_profile(
        antidot_cfg, qn, spectrum::rel_energy(antidot_cfg, qn), grid,
        include_lower);

    Table table;
    table.columns = {"rho", "density_free", "density_antidot"};
    for (std::size_t i = 0; i < free_profile.grid.size(); ++i)
        table.rows.push_back({free_profile.grid[i], free_profile.density[i],
                              antidot_profile.density[i]});
    return table;
}

Table make_density(const params::DimensionlessConfig& cfg,
                   const params::QuantumNumbers& qn,
                   const wavefunction::GridSpec& grid, bool include_lower) {
    const auto profile = wavefunction::build_profile(
        cfg, qn, spectrum::rel_energy(cfg, qn), grid, include_lower);
    Table table;
    if (include_lower) {
        table.columns = {"rho", "upper", "lower", "density"};
        for (std::size_t i = 0; i < profile.grid.size(); ++i)
            table.rows.push_back({profile.grid[i], profile.upper[i],
                                  profile.lower[i], profile.density[i]});
    } else {
        table.columns = {"rho", "upper", "density"};
        for (std::size_t i = 0; i < profile.grid.size(); ++i)
            table.rows.push_back(
                {profile.grid[i], profile.upper[i], profile.density[i]});
    }
    return table;
}

Table make_verify_quantization(double lambda1, double lambda3, int n_max) {
    const auto report = oracle::verify_quantization(lambda1, lambda3, n_max);
    Table table;
    table.columns = {"n", "numeric", "analytic", "relative_error"};
    for (const auto& row : report)
        table.rows.push_back({static_cast<double>(row.n), row.numeric,
                              row.analytic, row.relative_error});
    return table;
}

Table make_verify_relativistic(const params::DimensionlessConfig& cfg,
                               const params::QuantumNumbers& qn) {
    const auto solution = spectrum::rel_energy(cfg, qn);
    const auto check = oracle::verify_relativistic(cfg, qn, solution.chi);
    Table table;
    table.columns = {"n", "m", "chi_claimed", "chi_numeric", "defect", "iterations"};
    table.rows.push_back({static_cast<double>(qn.n), static_cast<double>(qn.m),
                          check.chi_claimed, check.chi_numeric, check.defect,
                          static_cast<double>(check.iterations)});
    return table;
}

int run(const RunConfig& config) {
    Table table;
    try {
        switch (config.command) {
        case Command::spectrum: {
            const auto cfg = resolve_config(config);
            table = make_spectrum_table(cfg, config.n_range, config.m_range,
                                        config.regime);
            break;
        }
        case Command::density: {
            const auto cfg = resolve_config(config);
            table = make_density(cfg, {config.n_range.lo, config.m_range.lo},
                                 config.grid, config.include_lower);
            break;
        }
        case Command::figure1: {
            const auto& d = config.dimensionless;
            if (!d)
                throw std::invalid_argument("figure1: needs the dimensionless block");
            table = make_figure1(d->alpha, d->b, config.n_range.lo, config.m_range);
            break;
        }
        case Command::figure2: {
            const auto& d = config.dimensionless;
            if (!d)
                throw std::invalid_argument("figure2: needs the dimensionless block");
            table = make_figure2(d->alpha, d->b, d->w, config.n_range.lo,
                                 config.m_range);
            break;
        }
        case Command::figure3: {
            const auto& d = config.dimensionless;
            if (!d)
                throw std::invalid_argument("figure3: needs the dimensionless block");
            table = make_figure3(d->alpha, d->b, d->w,
                                 {config.n_range.lo, config.m_range.lo},
                                 config.grid, config.include_lower);
            break;
        }
        case Command::verify: {
            if (config.lambda1.has_value() != config.lambda3.has_value())
                throw std::invalid_argument(
                    "verify: --lambda1 and --lambda3 go together");
            if (config.lambda1) {
                table = make_verify_quantization(*config.lambda1, *config.lambda3,
                                                 config.n_max);
            } else {
                const auto cfg = resolve_config(config);
                table = make_verify_relativistic(
                    cfg, {config.n_range.lo, config.m_range.lo});
            }
            break;
        }
        }
    } catch (const std::exception& e) {
        nlohmann::ordered_json record = {{"error", "domain"}, {"detail", e.what()}};
        std::cerr << record.dump() << "\n";
        return exit_domain;
    }

    try {
        emit(table, config.format, config.out_path);
    } catch (const std::ios_base::failure& e) {
        nlohmann::ordered_json record = {{"error", "io"}, {"detail", e.what()}};
        std::cerr << record.dump() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        // record validation (non-finite cells, ragged rows)
        nlohmann::ordered_json record = {{"error", "domain"}, {"detail", e.what()}};
        std::cerr << record.dump() << "\n";
        return exit_domain;
    }
    return exit_ok;
}

} // namespace dirac::cli
