#include "ldpc/polynomial.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ldpc/errors.hpp"

namespace ldpc {

namespace {
// Coefficients this far below zero are treated as roundoff and clipped.
constexpr double kNegativeTolerance = 1e-12;
}  // namespace

polynomial::polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > max_degree + 1) {
        throw invalid_parameter("polynomial degree exceeds cap of " +
                                std::to_string(max_degree));
    }
    for (double& c : coeffs_) {
        if (c < -kNegativeTolerance) {
            throw invalid_parameter("polynomial coefficient is negative: " +
                                    std::to_string(c));
        }
        if (c < 0.0) c = 0.0;
    }
    canonicalize();
}

polynomial polynomial::monomial(std::size_t power, double coeff) {
    std::vector<double> c(power + 1, 0.0);
    c[power] = coeff;
    return polynomial(std::move(c));
}

void polynomial::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double polynomial::operator()(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

polynomial polynomial::derivative() const {
    if (coeffs_.size() <= 1) return polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * static_cast<double>(i);
    }
    return polynomial(std::move(d));
}

polynomial polynomial::antiderivative() const {
    if (coeffs_.empty()) return polynomial{};
    std::vector<double> a(coeffs_.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        a[i + 1] = coeffs_[i] / static_cast<double>(i + 1);
    }
    return polynomial(std::move(a));
}

double polynomial::integral01() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        acc += coeffs_[i] / static_cast<double>(i + 1);
    }
    return acc;
}

polynomial& polynomial::scale(double factor) {
    if (factor < 0.0) throw invalid_parameter("negative scale factor");
    for (double& c : coeffs_) c *= factor;
    canonicalize();
    return *this;
}

}  // namespace ldpc
