#pragma once

#include "noma/channel.hpp"
#include "noma/geometry.hpp"
#include "noma/rng.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace noma {

/// Intensities of the four interferer processes, ALOHA access probability,
/// and the half-width L of the simulated road segment [-L, L].
struct PppConfig {
    double lambda_x_los = 1e-3;
    double lambda_x_nlos = 1e-3;
    double lambda_y_los = 1e-3;
    double lambda_y_nlos = 1e-3;
    double p = 0.5;
    double window = 10'000.0;

    double intensity(Road road, LinkClass k) const noexcept;

    /// Half-width actually simulated for one process: the window, widened at
    /// low intensity so each side holds about kFarFieldActive active points.
    /// Beyond it only the mean interference is kept (see far_field_mean).
    double extent(Road road, LinkClass k) const noexcept;
    void set_common(double lambda) noexcept;
};

void validate(const PppConfig& c);

/// Receivers that carry a fading mark for every interferer.
enum class Receiver : std::size_t { R = 0, D1 = 1, D2 = 2 };
inline constexpr std::size_t kReceiverCount = 3;
inline constexpr double kFarFieldActive = 20.0;

/// Bit set of receivers whose fading marks are drawn.
using ReceiverMask = unsigned;
inline constexpr ReceiverMask kAllReceivers = 0b111;
constexpr ReceiverMask mask_of(Receiver r) noexcept { return 1u << static_cast<unsigned>(r); }

struct MarkedPoint {
    double t = 0.0;       ///< coordinate on its road [m]
    bool active = false;  ///< ALOHA mark
    std::array<double, kReceiverCount> fading{};  ///< |h|^2 towards R, D1, D2; 0 if not drawn
};

/// The four processes, indexed by component_index(road, class).
struct InterferenceRealization {
    std::array<std::vector<MarkedPoint>, 4> points;

    std::vector<MarkedPoint>& at(Road road, LinkClass k) { return points[component_index(road, k)]; }
    const std::vector<MarkedPoint>& at(Road road, LinkClass k) const { return points[component_index(road, k)]; }

    static constexpr std::size_t component_index(Road road, LinkClass k) noexcept
    {
        return (road == Road::X ? 0 : 2) + (k == LinkClass::LOS ? 0 : 1);
    }
};

/// Homogeneous PPP on [-window, window]. Points are generated by walking
/// outwards from the origin with exponential gaps, each half-line from its own
/// child stream, so enlarging the window only appends points.
std::vector<double> sample_ppp_segment(double lambda, double window, CounterRng& rng);

/// Points on (0, window] of a PPP with the given intensity, in increasing order.
std::vector<double> sample_ppp_half_line(double lambda, double window, CounterRng& rng);

/// Marks each point active with probability p, one draw per point in order.
std::vector<MarkedPoint> aloha_thin(const std::vector<double>& points, double p, CounterRng& rng);

/// Independent draws of the four processes on their extents, with ALOHA and
/// per-receiver fading marks. Every mark kind has its own stream per
/// half-line, so the realization restricted to [-L, L] is identical for every
/// extent >= L and does not depend on which receivers were requested.
InterferenceRealization draw_realization(const PppConfig& cfg, CounterRng& rng, ReceiverMask receivers = kAllReceivers);

/// Same as draw_realization, reusing the storage in `out`.
void draw_realization_into(const PppConfig& cfg, CounterRng& rng, InterferenceRealization& out,
                           ReceiverMask receivers = kAllReceivers);

}  // namespace noma
