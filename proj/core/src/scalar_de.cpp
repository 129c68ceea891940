#include "ldpc/scalar_de.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ldpc/errors.hpp"

namespace ldpc {

namespace {

// Golden-section minimization of f on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, int iters = 80) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return std::min(f1, f2);
}

// True iff map(x) < x for every x in (0, hi]; the fixed-point
// characterization of convergence for monotone scalar recursions.
template <typename F>
bool contracts_on(F&& map, double hi) {
    const int grid = 4000;
    double worst = -1.0;
    double worst_x = hi;
    for (int i = 1; i <= grid; ++i) {
        const double x = hi * static_cast<double>(i) / grid;
        const double gap = map(x) - x;
        if (gap >= 0.0) return false;
        if (gap > worst) {
            worst = gap;
            worst_x = x;
        }
    }
    // refine around the tightest point; gaps are smooth in x
    const double step = hi / grid;
    const double lo = std::max(step * 0.5, worst_x - step);
    const double up = std::min(hi, worst_x + step);
    const double refined = golden_min([&](double x) { return x - map(x); }, lo, up, 60);
    return refined > 0.0;
}

double binom_tail_ge(int n, int b, double p_success) {
    // P(Bin(n, p) >= b)
    if (b <= 0) return 1.0;
    if (b > n) return 0.0;
    if (p_success <= 0.0) return 0.0;
    if (p_success >= 1.0) return 1.0;
    const double q = 1.0 - p_success;
    double coef = 1.0;
    for (int i = 0; i < b; ++i) coef *= static_cast<double>(n - i) / static_cast<double>(b - i);
    double t = coef * std::pow(p_success, b) * std::pow(q, n - b);
    double acc = t;
    for (int j = b + 1; j <= n; ++j) {
        t *= static_cast<double>(n - j + 1) / static_cast<double>(j) * (p_success / q);
        acc += t;
    }
    return acc;
}

}  // namespace

double bec_de_step(double x, double alpha, const edge_perspective& ep) {
    if (x < 0.0 || x > 1.0 || alpha < 0.0 || alpha > 1.0) {
        throw invalid_parameter("bec_de_step arguments must lie in [0, 1]");
    }
    return alpha * ep.lambda(1.0 - ep.rho(1.0 - x));
}

threshold_result bec_threshold(const edge_perspective& ep) {
    ep.validate();
    auto g = [&](double x) {
        const double denom = ep.lambda(1.0 - ep.rho(1.0 - x));
        return denom <= 0.0 ? std::numeric_limits<double>::infinity() : x / denom;
    };
    const int grid = 4000;
    double best = std::numeric_limits<double>::infinity();
    double best_x = 1.0;
    // log-spaced probes cover the x -> 0 end where recipe pairs attain
    // their minimum
    for (double x = 1e-9; x < 1e-3; x *= 2.0) {
        if (g(x) < best) {
            best = g(x);
            best_x = x;
        }
    }
    for (int i = 1; i <= grid; ++i) {
        const double x = static_cast<double>(i) / grid;
        if (g(x) < best) {
            best = g(x);
            best_x = x;
        }
    }
    const double step = 1.0 / grid;
    best = std::min(best, golden_min(g, std::max(1e-12, best_x - step), std::min(1.0, best_x + step)));

    threshold_result res;
    res.value = best;
    res.tolerance = 1e-7;
    res.certified_below = best - 1e-7;
    res.certified_above = best + 1e-7;
    res.iterations_used = grid;
    return res;
}

double bec_threshold_regular_closed_form(int d_v, int d_c) {
    if (d_v < 3) {
        throw invalid_parameter("closed form needs d_v >= 3 (threshold is 0 at d_v = 2)");
    }
    if (d_c <= d_v) throw invalid_parameter("need d_c > d_v for positive rate");
    auto p = [&](double x) {
        double acc = (static_cast<double>(d_v - 1) * (d_c - 1) - 1.0) * std::pow(x, d_c - 2);
        double xi = 1.0;
        for (int i = 0; i <= d_c - 3; ++i) {
            acc -= xi;
            xi *= x;
        }
        return acc;
    };
    double lo = 0.0, hi = 1.0;  // p(0) = -1 < 0 <= p(1)
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        (p(mid) < 0.0 ? lo : hi) = mid;
    }
    const double gamma = 0.5 * (lo + hi);
    return (1.0 - gamma) / std::pow(1.0 - std::pow(gamma, d_c - 1), d_v - 1);
}

double gallager_a_de_step(double p_i, double p0, int d_v, int d_c) {
    const double s = std::pow(1.0 - 2.0 * p_i, d_c - 1);
    const double qp = std::pow((1.0 + s) / 2.0, d_v - 1);
    const double qm = std::pow((1.0 - s) / 2.0, d_v - 1);
    return p0 - p0 * qp + (1.0 - p0) * qm;
}

threshold_result gallager_a_threshold(int d_v, int d_c) {
    if (d_v < 3) throw invalid_parameter("need d_v >= 3 for a positive threshold");
    auto converges = [&](double p0) {
        return contracts_on([&](double x) { return gallager_a_de_step(x, p0, d_v, d_c); }, p0);
    };
    return bisect_threshold(converges, 1e-6, 0.5 - 1e-6, 1e-7);
}

int optimal_cutoff(double p_i, double p0, int d_v, int d_c) {
    if (p_i <= 0.0 || p_i >= 0.5 || p0 <= 0.0 || p0 >= 0.5) {
        throw invalid_parameter("optimal_cutoff needs p_i, p0 in (0, 1/2)");
    }
    const double s = std::pow(1.0 - 2.0 * p_i, d_c - 1);
    const int b_min = (d_v - 1) / 2 + 1;
    const int b_max = d_v - 1;
    const double log_ratio = std::log((1.0 - p0) / p0);
    const double log_a = std::log((1.0 + s) / (1.0 - s));
    if (!(log_a > 0.0)) return b_max;  // messages carry no information
    const double b_real = 0.5 * (static_cast<double>(d_v - 1) + log_ratio / log_a);
    if (b_real >= static_cast<double>(b_max)) return b_max;
    int b = static_cast<int>(std::ceil(b_real - 1e-12));
    return std::max(b, b_min);
}

double gallager_b_de_step(double p_i, double p0, int d_v, int d_c, int b) {
    if (2 * b <= d_v - 1 || b > d_v - 1) {
        throw invalid_parameter("cutoff out of range");
    }
    const double s = std::pow(1.0 - 2.0 * p_i, d_c - 1);
    const double qp = (1.0 + s) / 2.0;
    const double qm = (1.0 - s) / 2.0;
    return p0 - p0 * binom_tail_ge(d_v - 1, b, qp) + (1.0 - p0) * binom_tail_ge(d_v - 1, b, qm);
}

threshold_result gallager_b_threshold(int d_v, int d_c) {
    if (d_v < 3) throw invalid_parameter("need d_v >= 3 for a positive threshold");
    auto converges = [&](double p0) {
        auto step = [&](double x) {
            return gallager_b_de_step(x, p0, d_v, d_c, optimal_cutoff(x, p0, d_v, d_c));
        };
        return contracts_on(step, p0);
    };
    return bisect_threshold(converges, 1e-6, 0.5 - 1e-6, 1e-7);
}

int irregular_optimal_cutoff(double s, double p0, int degree) {
    if (degree < 2) return 1;
    const int b_min = (degree - 1) / 2 + 1;
    const int b_max = degree - 1;
    if (s <= 0.0 || s >= 1.0 || p0 <= 0.0 || p0 >= 0.5) return b_max;
    const double log_ratio = std::log((1.0 - p0) / p0);
    const double log_a = std::log((1.0 + s) / (1.0 - s));
    const double b_real = 0.5 * (static_cast<double>(degree - 1) + log_ratio / log_a);
    if (b_real >= static_cast<double>(b_max)) return b_max;
    int b = static_cast<int>(std::ceil(b_real - 1e-12));
    return std::max(b, b_min);
}

double irregular_b_de_step(double p_i, double p0, const edge_perspective& ep,
                           std::span<const int> cutoffs) {
    const double s = ep.rho(1.0 - 2.0 * p_i);
    const double qp = (1.0 + s) / 2.0;
    const double qm = (1.0 - s) / 2.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < ep.lambda.coeffs().size(); ++i) {
        const double frac = ep.lambda.coeff(i);
        if (frac == 0.0) continue;
        const int degree = static_cast<int>(i) + 1;
        int b;
        if (!cutoffs.empty()) {
            if (static_cast<std::size_t>(degree) >= cutoffs.size()) {
                throw invalid_parameter("cutoff table too short for degree distribution");
            }
            b = cutoffs[static_cast<std::size_t>(degree)];
            if (degree >= 2 && (2 * b <= degree - 1 || b > degree - 1)) {
                throw invalid_parameter("cutoff out of range");
            }
        } else {
            b = irregular_optimal_cutoff(s, p0, degree);
        }
        acc += frac * (p0 - p0 * binom_tail_ge(degree - 1, b, qp) +
                       (1.0 - p0) * binom_tail_ge(degree - 1, b, qm));
    }
    return acc;
}

threshold_result irregular_b_threshold(const edge_perspective& ep) {
    ep.validate();
    auto converges = [&](double p0) {
        return contracts_on([&](double x) { return irregular_b_de_step(x, p0, ep); }, p0);
    };
    return bisect_threshold(converges, 1e-6, 0.5 - 1e-6, 1e-7);
}

}  // namespace ldpc
