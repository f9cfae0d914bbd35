#include "noma/taylor.hpp"

#include <cmath>
#include <stdexcept>

namespace noma {

TaylorScalar::TaylorScalar(std::size_t order, double value) : coeffs_(order + 1, 0.0)
{
    coeffs_[0] = value;
}

TaylorScalar TaylorScalar::variable(std::size_t order, double at)
{
    TaylorScalar t(order, at);
    if (order >= 1) {
        t.coeffs_[1] = 1.0;
    }
    return t;
}

TaylorScalar TaylorScalar::from_coefficients(std::vector<double> coeffs)
{
    if (coeffs.empty()) {
        throw std::invalid_argument("TaylorScalar needs at least one coefficient");
    }
    TaylorScalar t(0);
    t.coeffs_ = std::move(coeffs);
    return t;
}

double TaylorScalar::derivative(std::size_t k) const
{
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) {
        f *= static_cast<double>(i);
    }
    return f * coeffs_.at(k);
}

void TaylorScalar::require_same_order(const TaylorScalar& o) const
{
    if (o.coeffs_.size() != coeffs_.size()) {
        throw std::invalid_argument("TaylorScalar order mismatch");
    }
}

TaylorScalar& TaylorScalar::operator+=(const TaylorScalar& o)
{
    require_same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

TaylorScalar& TaylorScalar::operator-=(const TaylorScalar& o)
{
    require_same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
}

TaylorScalar& TaylorScalar::operator*=(const TaylorScalar& o)
{
    require_same_order(o);
    // descending k so lower coefficients are still unmodified
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        double c = 0.0;
        for (std::size_t i = 0; i <= k; ++i) {
            c += coeffs_[i] * o.coeffs_[k - i];
        }
        coeffs_[k] = c;
    }
    return *this;
}

TaylorScalar& TaylorScalar::operator/=(const TaylorScalar& o)
{
    require_same_order(o);
    const double b0 = o.coeffs_[0];
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        double c = coeffs_[k];
        for (std::size_t i = 1; i <= k; ++i) {
            c -= o.coeffs_[i] * coeffs_[k - i];
        }
        coeffs_[k] = c / b0;
    }
    return *this;
}

TaylorScalar& TaylorScalar::operator+=(double v) noexcept
{
    coeffs_[0] += v;
    return *this;
}

TaylorScalar& TaylorScalar::operator-=(double v) noexcept
{
    coeffs_[0] -= v;
    return *this;
}

TaylorScalar& TaylorScalar::operator*=(double v) noexcept
{
    for (double& c : coeffs_) {
        c *= v;
    }
    return *this;
}

TaylorScalar& TaylorScalar::operator/=(double v) noexcept
{
    for (double& c : coeffs_) {
        c /= v;
    }
    return *this;
}

TaylorScalar TaylorScalar::operator-() const
{
    TaylorScalar t = *this;
    t *= -1.0;
    return t;
}

TaylorScalar operator/(double a, const TaylorScalar& b)
{
    return reciprocal(b) * a;
}

TaylorScalar reciprocal(const TaylorScalar& a)
{
    return TaylorScalar::constant(a.order(), 1.0) / a;
}

TaylorScalar exp(const TaylorScalar& a)
{
    TaylorScalar e(a.order(), std::exp(a.value()));
    for (std::size_t k = 1; k <= a.order(); ++k) {
        double c = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            c += static_cast<double>(j) * a[j] * e[k - j];
        }
        e[k] = c / static_cast<double>(k);
    }
    return e;
}

TaylorScalar log(const TaylorScalar& a)
{
    TaylorScalar l(a.order(), std::log(a.value()));
    for (std::size_t k = 1; k <= a.order(); ++k) {
        double c = a[k];
        for (std::size_t j = 1; j < k; ++j) {
            c -= static_cast<double>(j) * l[j] * a[k - j] / static_cast<double>(k);
        }
        l[k] = c / a.value();
    }
    return l;
}

TaylorScalar pow(const TaylorScalar& a, double r)
{
    const double a0 = a.value();
    TaylorScalar y(a.order(), std::pow(a0, r));
    for (std::size_t k = 1; k <= a.order(); ++k) {
        double c = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            c += ((r + 1.0) * static_cast<double>(j) - static_cast<double>(k)) * a[j] * y[k - j];
        }
        y[k] = c / (static_cast<double>(k) * a0);
    }
    return y;
}

TaylorScalar sqrt(const TaylorScalar& a)
{
    return pow(a, 0.5);
}

}  // namespace noma
