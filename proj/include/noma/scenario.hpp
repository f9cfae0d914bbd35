#pragma once

#include "noma/channel.hpp"
#include "noma/geometry.hpp"
#include "noma/pointprocess.hpp"

#include <cstdint>
#include <string_view>

namespace noma {

/// Power split and target rates [bits/s/Hz] of the two superposed messages.
struct NomaParams {
    double a1 = 0.8;
    double a2 = 0.2;
    double rate1 = 0.5;
    double rate2 = 1.0;
};

enum class Scheme { NOMA, OMA, Both };
enum class KernelChoice { Paper, Exact, Both };

/// How the S-R and R-D links are classified.
enum class LinkModel {
    Mixed,     ///< blockage law exp(-beta r)
    LosOnly,   ///< every link LOS
    NlosOnly,  ///< every link NLOS
};

struct ScenarioConfig {
    Position s{0.0, 0.0};
    Position r{50.0, 0.0};
    Position d1{100.0, 10.0};
    Position d2{100.0, -10.0};
    NomaParams noma;
    PathLossParams path_loss;
    FadingParams fading;
    BlockageParams blockage;
    BeamParams beam;
    PppConfig ppp;
    LinkModel link_model = LinkModel::Mixed;
    Scheme scheme = Scheme::Both;
    std::uint64_t trials = 100'000;
    std::uint64_t master_seed = 42;
    KernelChoice kernel = KernelChoice::Exact;
};

/// Throws ValidationError naming the first offending field.
void validate(const ScenarioConfig& cfg);

/// P(LOS) of a link of length r under the configured link model.
double link_los_probability(const ScenarioConfig& cfg, double r);

std::string_view to_string(Scheme s);
std::string_view to_string(KernelChoice k);
std::string_view to_string(LinkModel m);

}  // namespace noma
