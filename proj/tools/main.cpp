#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dirac/run.hpp"

namespace {

using dirac::cli::Command;
using dirac::cli::RunConfig;

struct RangeFlag {
    bool set = false;
    int lo = 0;
    int hi = 0;
};

struct GridFlag {
    bool set = false;
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

// "lo:hi" with integer ends
bool parse_range(const std::string& text, RangeFlag& out) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            out.lo = out.hi = std::stoi(text);
        } else {
            out.lo = std::stoi(text.substr(0, colon));
            out.hi = std::stoi(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        return false;
    }
    out.set = true;
    return true;
}

// "min:max:count"
bool parse_grid(const std::string& text, GridFlag& out) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        return false;
    try {
        out.lo = std::stod(text.substr(0, first));
        out.hi = std::stod(text.substr(first + 1, second - first - 1));
        out.count = std::stoi(text.substr(second + 1));
    } catch (const std::exception&) {
        return false;
    }
    out.set = true;
    return true;
}

struct Flags {
    std::optional<double> alpha, b, w;
    std::optional<double> mass, b_field, omega0, delta, ab_flux;
    double hbar = 1.0, light_speed = 1.0, charge = 1.0;
    std::string regime = "rel";
    std::string n_text, m_text, n_range_text, m_range_text, grid_text;
    bool include_lower = true;
    std::optional<double> lambda1, lambda3;
    int n_max = 2;
    std::string format = "csv";
    std::string out_path;
};

void add_common_flags(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--alpha", flags.alpha, "AB flux parameter alpha");
    cmd->add_option("--b", flags.b, "antidot parameter b (b^2 = 2 m* delta / hbar^2)");
    cmd->add_option("--w", flags.w, "energy ratio hbar*omega / (m* c^2)");
    cmd->add_option("--mass", flags.mass, "effective mass m* (physical block)");
    cmd->add_option("--b-field", flags.b_field, "magnetic field B (physical block)");
    cmd->add_option("--omega0", flags.omega0, "oscillator frequency (physical block)");
    cmd->add_option("--delta", flags.delta, "antidot strength delta (physical block)");
    cmd->add_option("--ab-flux", flags.ab_flux, "AB flux (physical block)");
    cmd->add_option("--hbar", flags.hbar, "hbar (physical block)");
    cmd->add_option("--light-speed", flags.light_speed, "c (physical block)");
    cmd->add_option("--charge", flags.charge, "e (physical block)");
    cmd->add_option("--n", flags.n_text, "radial quantum number");
    cmd->add_option("--m", flags.m_text, "magnetic quantum number");
    cmd->add_option("--n-range", flags.n_range_text, "n range lo:hi");
    cmd->add_option("--m-range", flags.m_range_text, "m range lo:hi");
    cmd->add_option("--grid", flags.grid_text, "radial grid min:max:count");
    cmd->add_option("--include-lower", flags.include_lower,
                    "include the lower spinor component (true/false)");
    cmd->add_option("--format", flags.format, "output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", flags.out_path, "output path (stdout when absent)");
}

int usage_error(const std::string& message) {
    nlohmann::ordered_json record = {{"error", "usage"}, {"detail", message}};
    std::cerr << record.dump() << "\n";
    return dirac::cli::exit_usage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D Dirac oscillator with antidot confinement in magnetic and "
                 "AB flux fields: spectra, radial wavefunctions, and "
                 "finite-difference verification"};
    app.require_subcommand(1);

    std::map<std::string, Command> commands = {
        {"spectrum", Command::spectrum}, {"density", Command::density},
        {"figure1", Command::figure1},   {"figure2", Command::figure2},
        {"figure3", Command::figure3},   {"verify", Command::verify}};
    const std::map<std::string, std::string> blurbs = {
        {"spectrum", "energy levels over (n, m) ranges"},
        {"density", "radial profile of one state"},
        {"figure1", "nonrelativistic levels: bare, flux-shifted, antidot"},
        {"figure2", "relativistic eta with and without the antidot"},
        {"figure3", "probability density with and without the antidot"},
        {"verify", "finite-difference cross-check of the closed forms"}};

    std::map<std::string, Flags> flag_sets;
    for (auto& [name, cmd] : commands) {
        CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
        add_common_flags(sub, flag_sets[name]);
        if (name == "spectrum")
            sub->add_option("--regime", flag_sets[name].regime,
                            "landau, nonrel, or rel")
                ->check(CLI::IsMember({"landau", "nonrel", "rel"}));
        if (name == "verify") {
            sub->add_option("--lambda1", flag_sets[name].lambda1,
                            "oscillator coefficient of the radial operator");
            sub->add_option("--lambda3", flag_sets[name].lambda3,
                            "inverse-square coefficient of the radial operator");
            sub->add_option("--n-max", flag_sets[name].n_max,
                            "verify levels n = 0..n_max");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return usage_error(e.what());
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const Flags& flags = flag_sets[name];

    RunConfig config;
    config.command = commands[name];
    config.format = flags.format == "json" ? dirac::cli::OutputFormat::json
                                           : dirac::cli::OutputFormat::csv;
    config.out_path = flags.out_path;
    config.include_lower = flags.include_lower;
    config.n_max = flags.n_max;
    config.lambda1 = flags.lambda1;
    config.lambda3 = flags.lambda3;

    if (flags.regime == "landau")
        config.regime = dirac::spectrum::Regime::landau;
    else if (flags.regime == "nonrel")
        config.regime = dirac::spectrum::Regime::nonrelativistic;
    else
        config.regime = dirac::spectrum::Regime::relativistic;

    RangeFlag n_range, m_range;
    if (!flags.n_text.empty() && !parse_range(flags.n_text, n_range))
        return usage_error("bad --n value '" + flags.n_text + "'");
    if (!flags.n_range_text.empty() && !parse_range(flags.n_range_text, n_range))
        return usage_error("bad --n-range value '" + flags.n_range_text + "'");
    if (!flags.m_text.empty() && !parse_range(flags.m_text, m_range))
        return usage_error("bad --m value '" + flags.m_text + "'");
    if (!flags.m_range_text.empty() && !parse_range(flags.m_range_text, m_range))
        return usage_error("bad --m-range value '" + flags.m_range_text + "'");
    config.n_range = {n_range.lo, n_range.hi};
    config.m_range = {m_range.lo, m_range.hi};

    GridFlag grid;
    if (!flags.grid_text.empty()) {
        if (!parse_grid(flags.grid_text, grid))
            return usage_error("bad --grid value '" + flags.grid_text + "'");
        config.grid = {grid.lo, grid.hi, grid.count};
    }

    const bool quantization_verify =
        config.command == Command::verify &&
        (flags.lambda1.has_value() || flags.lambda3.has_value());
    const bool physical_block = flags.mass.has_value() || flags.b_field.has_value() ||
                                flags.omega0.has_value() || flags.delta.has_value() ||
                                flags.ab_flux.has_value();
    const bool dimensionless_block =
        flags.alpha.has_value() || flags.b.has_value() || flags.w.has_value();

    if (physical_block && dimensionless_block)
        return usage_error("physical and dimensionless parameter blocks are exclusive");

    if (physical_block) {
        dirac::params::PhysicalConfig phys;
        phys.effective_mass = flags.mass.value_or(1.0);
        phys.magnetic_field = flags.b_field.value_or(0.0);
        phys.oscillator_frequency = flags.omega0.value_or(0.0);
        phys.antidot_strength = flags.delta.value_or(0.0);
        phys.ab_flux = flags.ab_flux.value_or(0.0);
        phys.hbar = flags.hbar;
        phys.light_speed = flags.light_speed;
        phys.charge = flags.charge;
        config.physical = phys;
    } else if (!quantization_verify) {
        // relativistic commands need an explicit w; the unit-bearing regimes
        // (landau, nonrel) only use it as a scale and default to 1
        const bool needs_w =
            config.command == Command::density || config.command == Command::figure2 ||
            config.command == Command::figure3 ||
            (config.command == Command::spectrum &&
             config.regime == dirac::spectrum::Regime::relativistic) ||
            config.command == Command::verify;
        if (needs_w && !flags.w.has_value())
            return usage_error("--w is required for relativistic output");
        config.dimensionless = dirac::cli::DimensionlessParams{
            flags.alpha.value_or(0.0), flags.b.value_or(0.0), flags.w.value_or(1.0)};
    }

    if ((config.command == Command::density || config.command == Command::figure3) &&
        !grid.set)
        return usage_error("--grid min:max:count is required");

    return dirac::cli::run(config);
}
