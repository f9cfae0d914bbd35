#include "noma/pointprocess.hpp"

#include "noma/errors.hpp"

#include <algorithm>
#include <cmath>

namespace noma {

namespace {

enum StreamId : std::uint64_t { kPositive = 1, kNegative = 2, kMarks = 3 };

void walk_half_line(double lambda, double window, CounterRng& rng, std::vector<double>& out)
{
    if (lambda <= 0.0) {
        return;
    }
    double t = rng.exponential() / lambda;
    while (t <= window) {
        out.push_back(t);
        t += rng.exponential() / lambda;
    }
}

}  // namespace

double PppConfig::intensity(Road road, LinkClass k) const noexcept
{
    if (road == Road::X) {
        return k == LinkClass::LOS ? lambda_x_los : lambda_x_nlos;
    }
    return k == LinkClass::LOS ? lambda_y_los : lambda_y_nlos;
}

double PppConfig::extent(Road road, LinkClass k) const noexcept
{
    const double active = p * intensity(road, k);
    return active > 0.0 ? std::max(window, kFarFieldActive / active) : window;
}

void PppConfig::set_common(double lambda) noexcept
{
    lambda_x_los = lambda_x_nlos = lambda_y_los = lambda_y_nlos = lambda;
}

void validate(const PppConfig& c)
{
    const std::pair<const char*, double> lambdas[] = {{"lambda_x_los", c.lambda_x_los},
                                                      {"lambda_x_nlos", c.lambda_x_nlos},
                                                      {"lambda_y_los", c.lambda_y_los},
                                                      {"lambda_y_nlos", c.lambda_y_nlos}};
    for (const auto& [key, value] : lambdas) {
        if (!(value >= 0.0) || !std::isfinite(value)) {
            throw ValidationError(key, "intensity must be finite and >= 0");
        }
    }
    if (!(c.p >= 0.0 && c.p <= 1.0)) {
        throw ValidationError("p", "access probability must lie in [0, 1]");
    }
    if (!(c.window > 0.0) || !std::isfinite(c.window)) {
        throw ValidationError("window", "must be finite and > 0");
    }
}

std::vector<double> sample_ppp_half_line(double lambda, double window, CounterRng& rng)
{
    std::vector<double> out;
    walk_half_line(lambda, window, rng, out);
    return out;
}

std::vector<double> sample_ppp_segment(double lambda, double window, CounterRng& rng)
{
    CounterRng pos = rng.fork({kPositive});
    CounterRng neg = rng.fork({kNegative});
    std::vector<double> out = sample_ppp_half_line(lambda, window, pos);
    const std::size_t n_pos = out.size();
    walk_half_line(lambda, window, neg, out);
    std::for_each(out.begin() + static_cast<std::ptrdiff_t>(n_pos), out.end(), [](double& t) { t = -t; });
    return out;
}

std::vector<MarkedPoint> aloha_thin(const std::vector<double>& points, double p, CounterRng& rng)
{
    std::vector<MarkedPoint> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        out[i].t = points[i];
        out[i].active = rng.bernoulli(p);
    }
    return out;
}

void draw_realization_into(const PppConfig& cfg, CounterRng& rng, InterferenceRealization& out,
                           ReceiverMask receivers)
{
    std::vector<double> scratch;
    for (Road road : {Road::X, Road::Y}) {
        for (LinkClass k : {LinkClass::LOS, LinkClass::NLOS}) {
            const std::size_t c = InterferenceRealization::component_index(road, k);
            auto& pts = out.points[c];
            pts.clear();
            const double lambda = cfg.intensity(road, k);
            const double extent = cfg.extent(road, k);
            for (std::uint64_t side : {kPositive, kNegative}) {
                CounterRng walk = rng.fork({c, side});
                scratch.clear();
                walk_half_line(lambda, extent, walk, scratch);
                const double sign = side == kPositive ? 1.0 : -1.0;
                const std::size_t first = pts.size();
                CounterRng access = rng.fork({c, side, kMarks});
                for (double t : scratch) {
                    MarkedPoint& pt = pts.emplace_back();
                    pt.t = sign * t;
                    pt.active = access.bernoulli(cfg.p);
                }
                for (std::size_t j = 0; j < kReceiverCount; ++j) {
                    if ((receivers & (1u << j)) == 0) {
                        continue;
                    }
                    CounterRng fading = rng.fork({c, side, kMarks, j + 1});
                    for (std::size_t i = first; i < pts.size(); ++i) {
                        pts[i].fading[j] = sample_interferer_power_fading(fading);
                    }
                }
            }
        }
    }
}

InterferenceRealization draw_realization(const PppConfig& cfg, CounterRng& rng, ReceiverMask receivers)
{
    InterferenceRealization out;
    draw_realization_into(cfg, rng, out, receivers);
    return out;
}

}  // namespace noma
