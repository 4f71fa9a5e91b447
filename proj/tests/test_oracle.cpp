#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "dirac/oracle.hpp"
#include "dirac/params.hpp"
#include "dirac/spectrum.hpp"
#include "dirac/wavefunction.hpp"

using namespace dirac;
using namespace dirac::oracle;

TEST_CASE("assemble: benchmark operator structure") {
    const RadialOperator op = assemble(1.0 / 16.0, 15.0 / 16.0, 0.01, 2000);
    CHECK(op.domain_end == doctest::Approx(20.01).epsilon(1e-15));
    REQUIRE(op.diagonal.size() == 2000);
    REQUIRE(op.off_diagonal.size() == 1999);
    // spot-check the stencil at i = 10: rho = 0.11
    const double rho = 0.11;
    CHECK(op.diagonal[10] ==
          doctest::Approx(2.0e4 + 0.25 * rho * rho + 3.75 / (rho * rho))
              .epsilon(1e-14));
    CHECK(op.off_diagonal[10] == doctest::Approx(-1.0e4).epsilon(1e-15));
}

TEST_CASE("assemble: guards") {
    CHECK_THROWS_AS(assemble(1.0 / 16.0, 15.0 / 16.0, 0.01, 99),
                    std::invalid_argument);
    CHECK_THROWS_AS(assemble(0.0, 0.0, 0.01, 2000), std::invalid_argument);
    CHECK_THROWS_AS(assemble(1.0 / 16.0, -0.5, 0.01, 2000), std::invalid_argument);
    // R = 2.01 << 12 / sqrt(2 * 1/4) = 16.97
    CHECK_THROWS_AS(assemble(1.0 / 16.0, 0.0, 0.001, 2000), std::invalid_argument);
    // critical attractive coupling is inside the domain
    CHECK_NOTHROW(assemble(1.0 / 16.0, -1.0 / 16.0, 0.01, 2000));
}

TEST_CASE("lowest_eigenvalues: gamma = 4 benchmark spectrum 2n + 3") {
    const RadialOperator op = assemble(1.0 / 16.0, 15.0 / 16.0, 0.01, 2000);
    const auto values = lowest_eigenvalues(op, 3);
    REQUIRE(values.size() == 3);
    CHECK(values[0] == doctest::Approx(3.0).epsilon(2e-4));
    CHECK(values[1] == doctest::Approx(5.0).epsilon(2e-4));
    CHECK(values[2] == doctest::Approx(7.0).epsilon(2e-4));
    CHECK(values[0] < values[1]);
    CHECK(values[1] < values[2]);

    CHECK_THROWS_AS(lowest_eigenvalues(op, 0), std::invalid_argument);
    CHECK_THROWS_AS(lowest_eigenvalues(op, 11), std::invalid_argument);
}

TEST_CASE("lowest_eigenvalues: gamma = 0 and gamma = 2 ground levels") {
    // At the critical coupling 4*lambda3 = -1/4 the three-point stencil
    // approaches the analytic value 1 only logarithmically: the measured
    // error tracks 1.02 / (ln(1/h) + 2.95).  Pin that behavior: the value
    // sits near 1 from above and improves monotonically under refinement.
    double previous = 2.0;
    for (int nodes : {2000, 8000, 32000}) {
        const double h = 19.8 / (nodes + 1);
        const RadialOperator critical = assemble(1.0 / 16.0, -1.0 / 16.0, h, nodes);
        const double mu = lowest_eigenvalues(critical, 1)[0];
        const double model = 1.0 + 1.02 / (std::log(1.0 / h) + 2.95);
        CHECK(mu > 1.0);
        CHECK(mu < previous);
        CHECK(mu == doctest::Approx(model).epsilon(2e-2));
        previous = mu;
    }

    const RadialOperator oscillator = assemble(1.0 / 16.0, 3.0 / 16.0, 0.005, 4000);
    CHECK(lowest_eigenvalues(oscillator, 1)[0] == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("verify_quantization: benchmark accuracy and convergence order") {
    const auto report = verify_quantization(1.0 / 16.0, 15.0 / 16.0, 2);
    REQUIRE(report.size() == 3);
    for (const auto& row : report) {
        CHECK(row.analytic ==
              doctest::Approx(2.0 * row.n + 3.0).epsilon(1e-14));
        CHECK(row.relative_error <= 1e-5);
        CHECK(row.error_ratio >= 3.6);
        CHECK(row.error_ratio <= 4.4);
    }
}

TEST_CASE("verify_quantization: unit-oscillator and irrational-gamma cases") {
    // lambda1 = 1, lambda3 = 0: gamma = 1, analytic ground 4 (1 + 1/2) = 6
    const auto unit = verify_quantization(1.0, 0.0, 0);
    CHECK(unit[0].analytic == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(unit[0].relative_error <= 1e-5);

    // an antidot-like lambda3: gamma = sqrt(1 + 6.4), irrational
    const auto antidot = verify_quantization(1.0 / 16.0, 0.4, 2);
    for (const auto& row : antidot)
        CHECK(row.relative_error <= 1e-4);

    CHECK_THROWS_AS(verify_quantization(1.0 / 16.0, 0.4, 6), std::invalid_argument);
}

TEST_CASE("eigenvector: ground state tracks the closed-form wavefunction") {
    const double lambda1 = 1.0 / 16.0;
    const double lambda3 = 15.0 / 16.0;
    const RadialOperator op = assemble(lambda1, lambda3, 0.01, 2000);
    const double mu = lowest_eigenvalues(op, 1)[0];
    const auto v = eigenvector(op, mu);
    REQUIRE(static_cast<int>(v.size()) == op.node_count);

    // closed-form state with the same (p, gamma): w = 1, m = 2, b = 0, n = 0
    const auto cfg = params::dimensionless_from_alpha_b_w(0.0, 0.0, 1.0);
    const auto sol = spectrum::rel_energy(cfg, {0, 2});
    const auto lams = params::derived_lambdas(cfg, {0, 2}, sol.chi);
    REQUIRE(lams.lambda1 == doctest::Approx(lambda1));
    REQUIRE(lams.lambda3 == doctest::Approx(lambda3));
    const wavefunction::RadialState state(lams, {0, 2});

    const double h = op.grid_step;
    double max_dev = 0.0;
    for (int i = 0; i < op.node_count; ++i) {
        const double rho = (i + 1) * h;
        max_dev = std::max(max_dev,
                           std::abs(v[i] / std::sqrt(h) - state.upper(rho)));
    }
    CHECK(max_dev <= 1e-3);
}

TEST_CASE("quantization defect vanishes at rel_energy outputs") {
    for (double alpha : {0.0, 8.0})
        for (double b : {0.0, 10.0})
            for (int n : {0, 3})
                for (int m : {-4, 0, 4}) {
                    const auto cfg = params::dimensionless_from_alpha_b_w(alpha, b, 1.0);
                    const auto sol = spectrum::rel_energy(cfg, {n, m});
                    const auto lams = params::derived_lambdas(cfg, {n, m}, sol.chi);
                    const double defect =
                        std::sqrt(lams.lambda1) * (2.0 * n + 1.0 + 0.5 * lams.gamma) -
                        lams.lambda2;
                    CHECK(std::abs(defect) <= 1e-10);
                }
}

TEST_CASE("verify_relativistic: m + alpha = 0, b = 0 hits the critical coupling") {
    // gamma = 0 here, so the operator carries the critical -1/(4 rho^2) term
    // and the eigenvalue error follows the logarithmic law above.  The
    // defect is therefore percent-level, not the 1e-4 of regular couplings;
    // the acceptance suite carries the stricter criterion and its analysis.
    const auto cfg = params::dimensionless_from_alpha_b_w(0.0, 0.0, 1.0);
    const auto sol = spectrum::rel_energy(cfg, {0, 0});
    const auto check = verify_relativistic(cfg, {0, 0}, sol.chi);
    CHECK(check.iterations == 1); // lambda3 is chi-independent at b = 0
    CHECK(check.chi_numeric > sol.chi);
    CHECK(check.defect > 1e-3);
    CHECK(check.defect < 5e-2);
}

TEST_CASE("verify_relativistic: regular b = 0 coupling reaches 1e-4") {
    // gamma = 2|m + alpha| = 4: regular coupling, clean O(h^2) convergence
    const auto cfg = params::dimensionless_from_alpha_b_w(0.0, 0.0, 1.0);
    const auto sol = spectrum::rel_energy(cfg, {0, 2});
    const auto check = verify_relativistic(cfg, {0, 2}, sol.chi);
    CHECK(check.defect <= 1e-6);
    CHECK(check.iterations == 1);
}

TEST_CASE("verify_relativistic: transcendental case (b^2 = 100)") {
    const auto cfg = params::dimensionless_from_alpha_b_w(0.0, 10.0, 1.0);
    const auto sol = spectrum::rel_energy(cfg, {0, 0});
    CHECK(sol.chi == doctest::Approx(4.2700).epsilon(5e-4));
    const auto check = verify_relativistic(cfg, {0, 0}, sol.chi);
    CHECK(check.defect <= 1e-4);
    CHECK(check.iterations >= 1);
}

TEST_CASE("verify_relativistic: fixed point recovers from a perturbed claim") {
    const auto cfg = params::dimensionless_from_alpha_b_w(0.0, 10.0, 1.0);
    const auto sol = spectrum::rel_energy(cfg, {0, 0});
    const double perturbed = sol.chi * 1.05;
    const auto check = verify_relativistic(cfg, {0, 0}, perturbed);
    CHECK(check.iterations > 1);
    // the self-consistent energy is independent of the starting claim
    CHECK(check.chi_numeric == doctest::Approx(sol.chi).epsilon(1e-6));
    CHECK(check.defect == doctest::Approx(std::abs(check.chi_numeric - perturbed) /
                                          perturbed)
                              .epsilon(1e-12));
}

TEST_CASE("verify_relativistic: guards") {
    const auto cfg = params::dimensionless_from_alpha_b_w(0.0, 0.0, 1.0);
    CHECK_THROWS_AS(verify_relativistic(cfg, {0, 0}, 0.5), std::invalid_argument);
}
