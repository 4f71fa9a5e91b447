#include "dirac/special.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dirac::special {

namespace {

void check_spec(const LaguerreSpec& spec, double z) {
    if (spec.degree < 0)
        throw std::invalid_argument("laguerre: degree must be >= 0");
    if (spec.upper_index < 0.0 || !std::isfinite(spec.upper_index))
        throw std::invalid_argument("laguerre: upper index must be finite and >= 0");
    if (z < 0.0 || !std::isfinite(z))
        throw std::invalid_argument("laguerre: argument must be finite and >= 0");
}

// Gauss-Legendre rule on [-1, 1]: Newton iteration on P_n from the
// Chebyshev-angle initial guess.  Nodes are symmetric; only half are solved.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // P_order(x) and its derivative by the degree recurrence
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

double integrate_panel(const std::function<double(double)>& f, double a, double b,
                       const GaussRule& rule) {
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double v = f(mid + hw * rule.nodes[i]);
        if (!std::isfinite(v))
            throw std::domain_error("integrate_radial: non-finite sample");
        sum += rule.weights[i] * v;
    }
    return hw * sum;
}

} // namespace

double laguerre(const LaguerreSpec& spec, double z) {
    check_spec(spec, z);
    const double k = spec.upper_index;
    if (spec.degree == 0)
        return 1.0;
    double prev = 1.0;
    double cur = 1.0 + k - z;
    for (int i = 2; i <= spec.degree; ++i) {
        const double next = ((2 * i - 1 + k - z) * cur - (i - 1 + k) * prev) / i;
        prev = cur;
        cur = next;
    }
    return cur;
}

double laguerre_derivative(const LaguerreSpec& spec, double z) {
    check_spec(spec, z);
    if (spec.degree == 0)
        return 0.0;
    return -laguerre({spec.degree - 1, spec.upper_index + 1.0}, z);
}

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument("log_gamma: argument must be positive");
    // Lanczos, g = 7, 9 terms.
    static const double coeff[] = {
        0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection keeps the small-argument range accurate
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double sum = coeff[0];
    for (int i = 1; i < 9; ++i)
        sum += coeff[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double integrate_radial(const std::function<double(double)>& f, double p,
                        int node_count) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("integrate_radial: p must be positive");
    if (node_count < 16)
        throw std::invalid_argument("integrate_radial: node_count must be >= 16");

    const GaussRule rule = gauss_legendre(node_count);
    const double scale = 1.0 / std::sqrt(2.0 * p); // rho = x / sqrt(2p)
    const double core = 8.0 * scale;

    double total = 0.0;
    // geometric grading toward the origin: panels [core 2^-(j+1), core 2^-j]
    // keep Gauss accuracy against rho^sigma endpoint behavior
    for (int j = 49; j >= 0; --j) {
        const double hi = core * std::ldexp(1.0, -j);
        total += integrate_panel(f, 0.5 * hi, hi, rule);
    }
    // uniform tail panels out to 40/sqrt(2p); integrands of the F^2 class
    // are dead well before that
    const double width = 2.0 * scale;
    for (int j = 0; j < 16; ++j) {
        const double a = core + j * width;
        total += integrate_panel(f, a, a + width, rule);
    }
    return total;
}

} // namespace dirac::special
