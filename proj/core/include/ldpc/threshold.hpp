#pragma once

#include <functional>

namespace ldpc {

// Worst channel parameter with a certified bracket around it. The bracket
// endpoints are parameters at which convergence/divergence was actually
// observed; value lies inside and the bracket is no wider than tolerance
// unless some probes were inconclusive.
struct threshold_result {
    double value = 0.0;
    double certified_below = 0.0;  // largest parameter seen to converge
    double certified_above = 0.0;  // smallest parameter seen to diverge
    int iterations_used = 0;
    double tolerance = 0.0;
};

// Bisect a monotone channel family: converges(p) must be true at lo and
// false at hi. Inconclusive probes count as divergent, which can only widen
// the certified bracket, never misplace it.
threshold_result bisect_threshold(const std::function<bool(double)>& converges, double lo,
                                  double hi, double tolerance, int* probe_iterations = nullptr);

inline constexpr int kDeMaxIterations = 2000;
inline constexpr double kDeConvergenceEps = 1e-8;
inline constexpr double kDeDivergenceFloor = 1e-4;
inline constexpr int kDeDivergencePatience = 50;

struct evolution_report {
    bool converged = false;
    int iterations = 0;
    double final_error = 0.0;
};

// Convergence below eps; divergence declared once the error measure has been
// non-decreasing for kDeDivergencePatience straight iterations above the
// divergence floor.
class convergence_tracker {
  public:
    explicit convergence_tracker(double eps = kDeConvergenceEps) : eps_(eps) {}

    bool observe(double measure, int iteration) {
        report_.final_error = measure;
        report_.iterations = iteration;
        if (measure < eps_) {
            report_.converged = true;
            return true;
        }
        if (measure > kDeDivergenceFloor && measure >= last_) {
            if (++flat_ >= kDeDivergencePatience) return true;
        } else {
            flat_ = 0;
        }
        last_ = measure;
        return false;
    }

    const evolution_report& report() const { return report_; }

  private:
    double eps_;
    double last_ = 2.0;
    int flat_ = 0;
    evolution_report report_;
};

}  // namespace ldpc
