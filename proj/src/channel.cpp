#include "noma/channel.hpp"

#include "noma/errors.hpp"

#include <cmath>
#include <numbers>

namespace noma {

void validate(const BlockageParams& b)
{
    if (!(b.beta >= 0.0) || !std::isfinite(b.beta)) {
        throw ValidationError("beta", "blockage rate must be finite and >= 0");
    }
}

void validate(const BeamParams& b)
{
    if (!(b.g_min > 0.0)) {
        throw ValidationError("g_min", "gain must be > 0");
    }
    if (!(b.g_max >= b.g_min) || !std::isfinite(b.g_max)) {
        throw ValidationError("g_max", "must be finite and >= g_min");
    }
    if (!(b.phi > 0.0 && b.phi < 2.0 * std::numbers::pi)) {
        throw ValidationError("phi", "beamwidth must lie in (0, 2*pi)");
    }
    if (!(b.carrier_freq > 0.0) || !std::isfinite(b.carrier_freq)) {
        throw ValidationError("carrier_freq", "must be finite and > 0");
    }
}

void validate(const FadingParams& f)
{
    if (f.m_los < 1) {
        throw ValidationError("m_los", "integer Nakagami parameter >= 1 required");
    }
    if (f.m_nlos < 1) {
        throw ValidationError("m_nlos", "integer Nakagami parameter >= 1 required");
    }
    if (!(f.mu > 0.0) || !std::isfinite(f.mu)) {
        throw ValidationError("mu", "average power must be finite and > 0");
    }
}

void validate(const PathLossParams& p)
{
    if (!(p.alpha_los > 1.0) || !std::isfinite(p.alpha_los)) {
        throw ValidationError("alpha_los", "path-loss exponent must be > 1");
    }
    if (!(p.alpha_nlos >= p.alpha_los) || !std::isfinite(p.alpha_nlos)) {
        throw ValidationError("alpha_nlos", "must be finite and >= alpha_los");
    }
}

double los_probability(double r, const BlockageParams& b)
{
    if (!(r >= 0.0)) {
        throw ValidationError("r", "distance must be >= 0");
    }
    return std::exp(-b.beta * r);
}

double directional_gain(double omega, const BeamParams& b)
{
    // wrap to (-pi, pi]
    double w = std::remainder(omega, 2.0 * std::numbers::pi);
    if (w == -std::numbers::pi) {
        w = std::numbers::pi;
    }
    return std::abs(w) <= b.phi / 2.0 ? b.g_max : b.g_min;
}

double upsilon(const BeamParams& b)
{
    const double wavelength = kSpeedOfLight / b.carrier_freq;
    const double k = wavelength / (4.0 * std::numbers::pi);
    return b.g_max * b.g_max * k * k;
}

double path_loss(double r, double alpha)
{
    if (!(r > 0.0)) {
        throw ValidationError("r", "path loss is singular at r <= 0");
    }
    if (alpha == 2.0) {
        return 1.0 / (r * r);
    }
    return std::pow(r, -alpha);
}

double sample_link_power_fading(int m, double mu, CounterRng& rng)
{
    return rng.gamma_int(m, mu / m);
}

double sample_interferer_power_fading(CounterRng& rng)
{
    return rng.exponential();
}

double gamma_ccdf(int m, double mu, double x)
{
    if (m < 1) {
        throw ValidationError("m", "integer Nakagami parameter >= 1 required");
    }
    if (!(x >= 0.0)) {
        throw ValidationError("x", "argument must be >= 0");
    }
    const double z = m * x / mu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < m; ++k) {
        term *= z / k;
        sum += term;
    }
    return std::exp(-z) * sum;
}

double gamma_ccdf(double m, double mu, double x)
{
    if (m != std::floor(m) || !std::isfinite(m)) {
        throw ValidationError("m", "integer Nakagami parameter required");
    }
    return gamma_ccdf(static_cast<int>(m), mu, x);
}

}  // namespace noma
