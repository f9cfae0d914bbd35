#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace noma {

/// Truncated Taylor expansion f(s0 + e) = sum_k c_k e^k, k <= order.
/// Derivatives follow as f^(k)(s0) = k! * c_k.
class TaylorScalar {
public:
    explicit TaylorScalar(std::size_t order, double value = 0.0);

    static TaylorScalar constant(std::size_t order, double value) { return TaylorScalar(order, value); }
    /// The independent variable expanded at `at`.
    static TaylorScalar variable(std::size_t order, double at);
    static TaylorScalar from_coefficients(std::vector<double> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    double value() const noexcept { return coeffs_[0]; }
    double operator[](std::size_t k) const { return coeffs_.at(k); }
    double& operator[](std::size_t k) { return coeffs_.at(k); }
    std::span<const double> coefficients() const noexcept { return coeffs_; }

    /// k-th derivative, k! * c_k.
    double derivative(std::size_t k) const;

    TaylorScalar& operator+=(const TaylorScalar& o);
    TaylorScalar& operator-=(const TaylorScalar& o);
    TaylorScalar& operator*=(const TaylorScalar& o);
    TaylorScalar& operator/=(const TaylorScalar& o);
    TaylorScalar& operator+=(double v) noexcept;
    TaylorScalar& operator-=(double v) noexcept;
    TaylorScalar& operator*=(double v) noexcept;
    TaylorScalar& operator/=(double v) noexcept;

    TaylorScalar operator-() const;

    friend TaylorScalar operator+(TaylorScalar a, const TaylorScalar& b) { return a += b; }
    friend TaylorScalar operator-(TaylorScalar a, const TaylorScalar& b) { return a -= b; }
    friend TaylorScalar operator*(TaylorScalar a, const TaylorScalar& b) { return a *= b; }
    friend TaylorScalar operator/(TaylorScalar a, const TaylorScalar& b) { return a /= b; }
    friend TaylorScalar operator+(TaylorScalar a, double b) { return a += b; }
    friend TaylorScalar operator+(double a, TaylorScalar b) { return b += a; }
    friend TaylorScalar operator-(TaylorScalar a, double b) { return a -= b; }
    friend TaylorScalar operator-(double a, const TaylorScalar& b) { return -b + a; }
    friend TaylorScalar operator*(TaylorScalar a, double b) { return a *= b; }
    friend TaylorScalar operator*(double a, TaylorScalar b) { return b *= a; }
    friend TaylorScalar operator/(TaylorScalar a, double b) { return a /= b; }
    friend TaylorScalar operator/(double a, const TaylorScalar& b);

private:
    void require_same_order(const TaylorScalar& o) const;

    std::vector<double> coeffs_;
};

TaylorScalar reciprocal(const TaylorScalar& a);
TaylorScalar exp(const TaylorScalar& a);
TaylorScalar log(const TaylorScalar& a);
TaylorScalar pow(const TaylorScalar& a, double r);
TaylorScalar sqrt(const TaylorScalar& a);

}  // namespace noma
