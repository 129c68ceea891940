#include "ldpc/degree_dist.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ldpc/channel.hpp"
#include "ldpc/errors.hpp"

namespace ldpc {

namespace {

constexpr double kNormTolerance = 1e-12;

long long checked_round_count(double value, const char* what) {
    const double r = std::round(value);
    if (std::abs(value - r) > 1e-6 || r < 0.0) {
        throw invalid_distribution(std::string(what) +
                                   " counts must be non-negative integers");
    }
    return static_cast<long long>(r);
}

long long weighted_degree_sum(const polynomial& p) {
    long long acc = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        acc += static_cast<long long>(i) * checked_round_count(p.coeff(i), "node");
    }
    return acc;
}

std::vector<double> round_node_counts(const polynomial& edge_poly, double edges) {
    // Edge fraction at stored power i belongs to degree i+1; the node count
    // at degree d is edges * coeff / d.
    std::vector<double> counts(edge_poly.coeffs().size() + 1, 0.0);
    for (std::size_t i = 0; i < edge_poly.coeffs().size(); ++i) {
        const std::size_t d = i + 1;
        counts[d] = std::round(edges * edge_poly.coeff(i) / static_cast<double>(d));
    }
    return counts;
}

// Bump one highest-degree node up by `deficit` degrees so both sides carry
// the same number of sockets.
void repair_edge_deficit(std::vector<double>& counts, long long deficit) {
    if (deficit <= 0) return;
    std::size_t top = counts.size() - 1;
    while (top > 0 && counts[top] < 1.0) --top;
    if (top == 0) throw invalid_distribution("cannot repair empty distribution");
    counts[top] -= 1.0;
    counts.resize(std::max(counts.size(), top + static_cast<std::size_t>(deficit) + 1), 0.0);
    counts[top + static_cast<std::size_t>(deficit)] += 1.0;
}

}  // namespace

void node_perspective::validate() const {
    if (lambda_nodes.is_zero() || check_nodes.is_zero()) {
        throw invalid_distribution("node-perspective pair has an empty side");
    }
    const long long var_sockets = weighted_degree_sum(lambda_nodes);
    const long long chk_sockets = weighted_degree_sum(check_nodes);
    if (var_sockets != chk_sockets) {
        throw invalid_distribution("socket counts differ: " + std::to_string(var_sockets) +
                                   " vs " + std::to_string(chk_sockets));
    }
    if (var_sockets == 0) throw invalid_distribution("distribution has no edges");
}

long long node_perspective::variable_count() const {
    return checked_round_count(lambda_nodes(1.0), "variable");
}

long long node_perspective::check_count() const {
    return checked_round_count(check_nodes(1.0), "check");
}

long long node_perspective::edge_count() const { return weighted_degree_sum(lambda_nodes); }

void edge_perspective::validate() const {
    if (std::abs(lambda(1.0) - 1.0) > kNormTolerance) {
        throw invalid_distribution("lambda(1) != 1");
    }
    if (std::abs(rho(1.0) - 1.0) > kNormTolerance) {
        throw invalid_distribution("rho(1) != 1");
    }
}

edge_perspective regular_pair(int d_v, int d_c) {
    if (d_v < 1 || d_c < 1) throw invalid_parameter("degrees must be positive");
    return {polynomial::monomial(static_cast<std::size_t>(d_v - 1)),
            polynomial::monomial(static_cast<std::size_t>(d_c - 1))};
}

edge_perspective node_to_edge(const node_perspective& np) {
    np.validate();
    polynomial dl = np.lambda_nodes.derivative();
    polynomial dp = np.check_nodes.derivative();
    const double edges = dl(1.0);
    if (edges <= 0.0) throw invalid_distribution("zero edge count");
    dl.scale(1.0 / edges);
    dp.scale(1.0 / dp(1.0));
    return {dl, dp};
}

node_perspective edge_to_node(long long n, const edge_perspective& ep) {
    if (n < 1) throw invalid_parameter("n must be positive");
    ep.validate();
    const double int_lambda = ep.lambda.integral01();
    if (int_lambda <= 0.0) throw invalid_distribution("lambda integrates to zero");
    // Lambda_d = n*lambda_d/(d*int lambda) and P_d = n*rho_d/(d*int lambda):
    // both sides share int lambda because n(1-r) = n*int(rho)/int(lambda).
    const double edges = static_cast<double>(n) / int_lambda;
    std::vector<double> var_counts = round_node_counts(ep.lambda, edges);
    std::vector<double> chk_counts = round_node_counts(ep.rho, edges);

    auto socket_sum = [](const std::vector<double>& c) {
        long long acc = 0;
        for (std::size_t d = 0; d < c.size(); ++d) {
            acc += static_cast<long long>(d) * static_cast<long long>(c[d]);
        }
        return acc;
    };
    const long long vs = socket_sum(var_counts);
    const long long cs = socket_sum(chk_counts);
    if (vs > cs) {
        repair_edge_deficit(chk_counts, vs - cs);
    } else if (cs > vs) {
        repair_edge_deficit(var_counts, cs - vs);
    }
    node_perspective np{polynomial(std::move(var_counts)), polynomial(std::move(chk_counts))};
    np.validate();
    return np;
}

double designed_rate(const edge_perspective& ep) {
    ep.validate();
    return 1.0 - ep.rho.integral01() / ep.lambda.integral01();
}

double harmonic_number(int m) {
    if (m < 0) throw invalid_parameter("harmonic_number needs m >= 0");
    double acc = 0.0;
    for (int i = 1; i <= m; ++i) acc += 1.0 / static_cast<double>(i);
    return acc;
}

polynomial tornado_lambda_hat(int big_n, double theta) {
    if (big_n < 2) throw invalid_parameter("N must be at least 2");
    if (theta <= 0.0) throw invalid_parameter("theta must be positive");
    std::vector<double> c(static_cast<std::size_t>(big_n), 0.0);
    for (int i = 1; i <= big_n - 1; ++i) {
        c[static_cast<std::size_t>(i)] = 1.0 / (theta * static_cast<double>(i));
    }
    return polynomial(std::move(c));
}

polynomial check_concentrated_lambda_hat(int big_n, double theta) {
    if (big_n < 2) throw invalid_parameter("N must be at least 2");
    if (theta <= 0.0 || theta > 1.0) throw invalid_parameter("theta must lie in (0, 1]");
    // Taylor coefficients of 1-(1-x)^theta: a_1 = theta,
    // a_{i+1} = a_i (i - theta)/(i + 1); all non-negative for theta in (0,1].
    std::vector<double> c(static_cast<std::size_t>(big_n), 0.0);
    double a = theta;
    for (int i = 1; i <= big_n - 1; ++i) {
        c[static_cast<std::size_t>(i)] = a;
        a *= (static_cast<double>(i) - theta) / static_cast<double>(i + 1);
    }
    return polynomial(std::move(c));
}

edge_perspective tornado_pair(int big_n, double alpha) {
    if (big_n < 2) throw invalid_parameter("N must be at least 2");
    if (alpha <= 0.0 || alpha >= 1.0) throw invalid_parameter("alpha must lie in (0, 1)");
    const double theta = harmonic_number(big_n - 1) / alpha;

    polynomial lambda_hat = tornado_lambda_hat(big_n, theta);
    polynomial lambda = lambda_hat;
    lambda.scale(1.0 / lambda_hat(1.0));

    // Poisson(theta) masses; stop once the remaining tail is below 1e-12.
    std::vector<double> rho_coeffs;
    double term = std::exp(-theta);
    double cum = 0.0;
    for (std::size_t i = 0; i <= polynomial::max_degree; ++i) {
        rho_coeffs.push_back(term);
        cum += term;
        if (1.0 - cum < 1e-12 && static_cast<double>(i) > theta) break;
        term *= theta / static_cast<double>(i + 1);
    }
    polynomial rho{std::move(rho_coeffs)};
    rho.scale(1.0 / rho(1.0));

    return {lambda, rho};
}

edge_perspective check_concentrated_pair(int big_n, double theta) {
    if (big_n < 2) throw invalid_parameter("N must be at least 2");
    if (theta <= 0.0 || theta > 1.0) throw invalid_parameter("theta must lie in (0, 1]");
    const double inv = 1.0 / theta;
    if (std::abs(inv - std::round(inv)) > 1e-9) {
        throw invalid_parameter("1/theta must be a positive integer");
    }
    polynomial lambda_hat = check_concentrated_lambda_hat(big_n, theta);
    polynomial lambda = lambda_hat;
    lambda.scale(1.0 / lambda_hat(1.0));
    polynomial rho = polynomial::monomial(static_cast<std::size_t>(std::llround(inv)));
    return {lambda, rho};
}

double recipe_residual(const polynomial& lambda_hat, const polynomial& rho, double x) {
    if (x < 0.0 || x >= 1.0) throw invalid_parameter("x must lie in [0, 1)");
    return lambda_hat(1.0 - rho(1.0 - x)) - x;
}

double gallager_rate_bound(double p, int d_c) {
    if (p <= 0.0 || p >= 0.5) throw invalid_parameter("p must lie in (0, 1/2)");
    if (d_c < 2) throw invalid_parameter("d_c must be at least 2");
    const double p_dc = (1.0 + std::pow(1.0 - 2.0 * p, d_c)) / 2.0;
    return 1.0 - binary_entropy(p) / binary_entropy(std::min(p_dc, 1.0 - p_dc));
}

}  // namespace ldpc
