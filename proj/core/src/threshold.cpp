#include "ldpc/threshold.hpp"

#include "ldpc/errors.hpp"

namespace ldpc {

threshold_result bisect_threshold(const std::function<bool(double)>& converges, double lo,
                                  double hi, double tolerance, int* probe_iterations) {
    if (!(lo < hi) || tolerance <= 0.0) throw invalid_parameter("bad bisection bracket");
    if (!converges(lo)) throw invalid_parameter("bracket low end does not converge");
    if (converges(hi)) throw invalid_parameter("bracket high end converges");

    threshold_result res;
    res.tolerance = tolerance;
    int probes = 2;
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        ++probes;
        (converges(mid) ? lo : hi) = mid;
    }
    res.value = 0.5 * (lo + hi);
    res.certified_below = lo;
    res.certified_above = hi;
    res.iterations_used = probe_iterations ? *probe_iterations : probes;
    return res;
}

}  // namespace ldpc
