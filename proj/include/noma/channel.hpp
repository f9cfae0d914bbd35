#pragma once

#include "noma/rng.hpp"

namespace noma {

inline constexpr double kSpeedOfLight = 299'792'458.0;

enum class LinkClass { LOS, NLOS };

struct BlockageParams {
    double beta = 9.5e-3;  ///< blockage rate [1/m]
};

struct BeamParams {
    double g_max = 63.09573444801933;  ///< 18 dBi
    double g_min = 0.6309573444801932; ///< -2 dBi
    double phi = 0.5235987755982988;   ///< half-power beamwidth, pi/6
    double carrier_freq = 30e9;        ///< [Hz]
};

/// Nakagami shape per link class and mean received power.
struct FadingParams {
    int m_los = 2;
    int m_nlos = 1;
    double mu = 1.0;

    int shape(LinkClass z) const noexcept { return z == LinkClass::LOS ? m_los : m_nlos; }
};

struct PathLossParams {
    double alpha_los = 2.0;
    double alpha_nlos = 4.0;

    double exponent(LinkClass z) const noexcept { return z == LinkClass::LOS ? alpha_los : alpha_nlos; }
};

void validate(const BlockageParams& b);
void validate(const BeamParams& b);
void validate(const FadingParams& f);
void validate(const PathLossParams& p);

/// exp(-beta * r). Throws ValidationError for r < 0.
double los_probability(double r, const BlockageParams& b);

/// Two-level sector pattern; the beamwidth edge belongs to the main lobe.
double directional_gain(double omega, const BeamParams& b);

/// Link-budget constant G_max^2 * wavelength^2 / (4 pi)^2.
double upsilon(const BeamParams& b);

/// r^-alpha. Throws ValidationError for r <= 0.
double path_loss(double r, double alpha);

/// |h|^2 of a Nakagami-m link: Gamma(shape m, scale mu/m).
double sample_link_power_fading(int m, double mu, CounterRng& rng);

/// Rayleigh interferer power fading: unit-mean exponential.
double sample_interferer_power_fading(CounterRng& rng);

/// P(|h|^2 > x) for integer shape m, via the finite exponential sum.
double gamma_ccdf(int m, double mu, double x);

/// Overload that rejects a non-integral shape instead of rounding it.
double gamma_ccdf(double m, double mu, double x);

}  // namespace noma
