#include "dirac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dirac/spectrum.hpp"

namespace dirac::oracle {

namespace {

// number of eigenvalues of the symmetric tridiagonal operator below x,
// by the Sturm sequence of the shifted LDL^T pivots
int count_below(const RadialOperator& op, double x, double pivmin) {
    int count = 0;
    const double offsq = op.off_diagonal.empty()
                             ? 0.0
                             : op.off_diagonal[0] * op.off_diagonal[0];
    double d = op.diagonal[0] - x;
    if (std::abs(d) < pivmin)
        d = -pivmin;
    if (d < 0.0)
        ++count;
    for (int i = 1; i < op.node_count; ++i) {
        d = (op.diagonal[i] - x) - offsq / d;
        if (std::abs(d) < pivmin)
            d = -pivmin;
        if (d < 0.0)
            ++count;
    }
    return count;
}

double kth_eigenvalue(const RadialOperator& op, int k, double lo, double hi,
                      double pivmin) {
    while (hi - lo > 1e-12 * std::max(1.0, std::abs(lo) + std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (count_below(op, mid, pivmin) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double support_radius(double lambda1) {
    return 12.0 / std::sqrt(2.0 * std::sqrt(lambda1));
}

// eigenvalues for n = 0..n_max via two grids sharing the domain, with
// Richardson extrapolation of the O(h^2) truncation
struct TwoGridLevels {
    std::vector<double> coarse;
    std::vector<double> fine;
    std::vector<double> extrapolated;
};

TwoGridLevels two_grid_eigenvalues(double lambda1, double lambda3, int count,
                                   int node_count) {
    // scaled domain: at least 14, and past the classical turning point of
    // the highest requested level with a Gaussian-decay margin
    const double gamma = std::sqrt(1.0 + 16.0 * std::max(lambda3, -1.0 / 16.0));
    const double turning =
        std::sqrt(2.0 * (2.0 * (count - 1) + 1.0 + 0.5 * gamma));
    const double domain =
        std::max(14.0, turning + 10.0) / std::sqrt(2.0 * std::sqrt(lambda1));
    const double h = domain / (node_count + 1);
    const RadialOperator coarse = assemble(lambda1, lambda3, h, node_count);
    const RadialOperator fine =
        assemble(lambda1, lambda3, 0.5 * h, 2 * node_count + 1);

    TwoGridLevels out;
    out.coarse = lowest_eigenvalues(coarse, count);
    out.fine = lowest_eigenvalues(fine, count);
    out.extrapolated.resize(count);
    for (int i = 0; i < count; ++i)
        out.extrapolated[i] = (4.0 * out.fine[i] - out.coarse[i]) / 3.0;
    return out;
}

} // namespace

RadialOperator assemble(double lambda1, double lambda3, double grid_step,
                        int node_count) {
    if (!(lambda1 > 0.0))
        throw std::invalid_argument("oracle: lambda1 must be positive");
    if (1.0 + 16.0 * lambda3 < 0.0)
        throw std::invalid_argument("oracle: 1 + 16 lambda3 must be >= 0");
    if (!(grid_step > 0.0))
        throw std::invalid_argument("oracle: grid_step must be positive");
    if (node_count < 100)
        throw std::invalid_argument("oracle: node_count must be >= 100");

    RadialOperator op;
    op.grid_step = grid_step;
    op.node_count = node_count;
    op.domain_end = (node_count + 1) * grid_step;
    op.lambda1 = lambda1;
    op.lambda3 = lambda3;
    if (op.domain_end < support_radius(lambda1))
        throw std::invalid_argument(
            "oracle: domain too short for the Gaussian support");

    const double inv_h2 = 1.0 / (grid_step * grid_step);
    op.diagonal.resize(node_count);
    op.off_diagonal.assign(node_count - 1, -inv_h2);
    for (int i = 0; i < node_count; ++i) {
        const double rho = (i + 1) * grid_step;
        op.diagonal[i] =
            2.0 * inv_h2 + 4.0 * lambda1 * rho * rho + 4.0 * lambda3 / (rho * rho);
    }
    return op;
}

std::vector<double> lowest_eigenvalues(const RadialOperator& op, int count) {
    if (count < 1 || count > 10)
        throw std::invalid_argument("oracle: count must be in [1, 10]");
    if (count > op.node_count)
        throw std::invalid_argument("oracle: count exceeds matrix dimension");

    // Gershgorin bounds
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    double max_offsq = 0.0;
    for (int i = 0; i < op.node_count; ++i) {
        double radius = 0.0;
        if (i > 0)
            radius += std::abs(op.off_diagonal[i - 1]);
        if (i + 1 < op.node_count)
            radius += std::abs(op.off_diagonal[i]);
        lo = std::min(lo, op.diagonal[i] - radius);
        hi = std::max(hi, op.diagonal[i] + radius);
        if (i + 1 < op.node_count)
            max_offsq = std::max(max_offsq,
                                 op.off_diagonal[i] * op.off_diagonal[i]);
    }
    const double pivmin =
        std::numeric_limits<double>::min() * std::max(1.0, max_offsq);

    std::vector<double> values(count);
    for (int k = 0; k < count; ++k)
        values[k] = kth_eigenvalue(op, k, lo, hi, pivmin);
    return values;
}

std::vector<double> eigenvector(const RadialOperator& op, double eigenvalue) {
    const int n = op.node_count;
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));

    // inverse iteration; tridiagonal solve with partial pivoting
    for (int pass = 0; pass < 3; ++pass) {
        std::vector<double> a(n), b(n - 1), c(n - 1), fill(n > 2 ? n - 2 : 0, 0.0);
        for (int i = 0; i < n; ++i)
            a[i] = op.diagonal[i] - eigenvalue;
        for (int i = 0; i < n - 1; ++i)
            b[i] = c[i] = op.off_diagonal[i];

        std::vector<double> rhs = v;
        for (int i = 0; i < n - 1; ++i) {
            if (std::abs(c[i]) > std::abs(a[i])) {
                std::swap(a[i], c[i]);
                std::swap(b[i], a[i + 1]);
                if (i + 2 < n)
                    std::swap(fill[i], b[i + 1]);
                std::swap(rhs[i], rhs[i + 1]);
            }
            if (a[i] == 0.0)
                a[i] = std::numeric_limits<double>::min();
            const double factor = c[i] / a[i];
            a[i + 1] -= factor * b[i];
            if (i + 2 < n)
                b[i + 1] -= factor * fill[i];
            rhs[i + 1] -= factor * rhs[i];
        }
        if (a[n - 1] == 0.0)
            a[n - 1] = std::numeric_limits<double>::min();
        v[n - 1] = rhs[n - 1] / a[n - 1];
        v[n - 2] = (rhs[n - 2] - b[n - 2] * v[n - 1]) / a[n - 2];
        for (int i = n - 3; i >= 0; --i)
            v[i] = (rhs[i] - b[i] * v[i + 1] - fill[i] * v[i + 2]) / a[i];

        double norm = 0.0;
        for (double x : v)
            norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v)
            x /= norm;
    }

    int peak = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[peak]))
            peak = i;
    if (v[peak] < 0.0)
        for (double& x : v)
            x = -x;
    return v;
}

std::vector<QuantizationRow> verify_quantization(double lambda1, double lambda3,
                                                 int n_max, int node_count) {
    if (n_max < 0 || n_max > 5)
        throw std::invalid_argument("oracle: n_max must be in [0, 5]");

    const TwoGridLevels levels =
        two_grid_eigenvalues(lambda1, lambda3, n_max + 1, node_count);
    const double gamma = std::sqrt(1.0 + 16.0 * lambda3);
    const double scale = 4.0 * std::sqrt(lambda1);

    std::vector<QuantizationRow> report(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        QuantizationRow& row = report[n];
        row.n = n;
        row.numeric_h = levels.coarse[n];
        row.numeric_h2 = levels.fine[n];
        row.numeric = levels.extrapolated[n];
        row.analytic = scale * (2.0 * n + 1.0 + 0.5 * gamma);
        row.relative_error =
            std::abs(row.numeric - row.analytic) / std::abs(row.analytic);
        const double err_fine = std::abs(row.numeric_h2 - row.analytic);
        row.error_ratio = err_fine > 0.0
                              ? std::abs(row.numeric_h - row.analytic) / err_fine
                              : std::numeric_limits<double>::infinity();
    }
    return report;
}

RelativisticCheck verify_relativistic(const params::DimensionlessConfig& cfg,
                                      const params::QuantumNumbers& qn,
                                      double chi_claimed, int node_count) {
    params::validate(cfg);
    if (!(chi_claimed > 1.0))
        throw std::invalid_argument("oracle: chi_claimed must exceed 1");

    const double shifted_m = qn.m + cfg.alpha;

    auto eigenvalue_at = [&](double chi) {
        const params::DerivedLambdas lams =
            params::derived_lambdas(cfg, qn, chi);
        // near-critical 1/rho^2 coupling converges slowly; spend more nodes
        const int nodes = lams.gamma < 1.0 ? 4 * node_count : node_count;
        const TwoGridLevels levels =
            two_grid_eigenvalues(lams.lambda1, lams.lambda3, qn.n + 1, nodes);
        return levels.extrapolated[qn.n];
    };
    auto chi_from_eigenvalue = [&](double mu) {
        // invert lambda2: chi^2 - 1 = mu + (m+alpha) w
        return std::sqrt(1.0 + mu + shifted_m * cfg.w);
    };

    RelativisticCheck out;
    out.chi_claimed = chi_claimed;
    if (cfg.b_squared == 0.0) {
        // lambda3 does not depend on chi: single solve
        out.chi_numeric = chi_from_eigenvalue(eigenvalue_at(chi_claimed));
        out.iterations = 1;
    } else {
        double chi = chi_claimed;
        bool settled = false;
        for (int it = 1; it <= 100; ++it) {
            const double next = chi_from_eigenvalue(eigenvalue_at(chi));
            const double damped = chi + 0.5 * (next - chi);
            out.iterations = it;
            if (std::abs(damped - chi) <= 1e-9) {
                chi = damped;
                settled = true;
                break;
            }
            chi = damped;
        }
        if (!settled)
            throw std::domain_error(
                "oracle: relativistic fixed point did not converge");
        out.chi_numeric = chi;
    }
    out.defect = std::abs(out.chi_numeric - chi_claimed) / chi_claimed;
    return out;
}

} // namespace dirac::oracle
