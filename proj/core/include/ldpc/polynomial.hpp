#pragma once

#include <cstddef>
#include <vector>

namespace ldpc {

// Dense univariate polynomial with non-negative coefficients; index = power
// of x (index 0 = constant term). Canonical form: trailing coefficient is
// nonzero unless the polynomial is zero.
class polynomial {
  public:
    static constexpr std::size_t max_degree = 10000;

    polynomial() = default;
    explicit polynomial(std::vector<double> coeffs);

    static polynomial monomial(std::size_t power, double coeff = 1.0);

    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(std::size_t power) const {
        return power < coeffs_.size() ? coeffs_[power] : 0.0;
    }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    double operator()(double x) const;

    polynomial derivative() const;
    polynomial antiderivative() const;  // constant term zero
    double integral01() const;          // integral over [0, 1]

    polynomial& scale(double factor);

    bool operator==(const polynomial& other) const = default;

  private:
    void canonicalize();

    std::vector<double> coeffs_;
};

}  // namespace ldpc
