#include "noma/scenario.hpp"

#include "noma/errors.hpp"

#include <cmath>

namespace noma {

void validate(const ScenarioConfig& cfg)
{
    const std::pair<const char*, Position> nodes[] = {{"s", cfg.s}, {"r", cfg.r}, {"d1", cfg.d1}, {"d2", cfg.d2}};
    for (const auto& [key, pos] : nodes) {
        if (!std::isfinite(pos.x) || !std::isfinite(pos.y)) {
            throw ValidationError(key, "coordinates must be finite");
        }
    }
    const NomaParams& n = cfg.noma;
    if (!(n.a2 > 0.0)) {
        throw ValidationError("a2", "power coefficient must be > 0");
    }
    if (!(n.a1 >= n.a2)) {
        throw ValidationError("a1", "must satisfy a1 >= a2");
    }
    if (std::abs(n.a1 + n.a2 - 1.0) > 1e-12) {
        throw ValidationError("a2", "power coefficients must satisfy a1 + a2 = 1");
    }
    if (!(n.rate1 > 0.0) || !std::isfinite(n.rate1)) {
        throw ValidationError("rate1", "target rate must be finite and > 0");
    }
    if (!(n.rate2 > 0.0) || !std::isfinite(n.rate2)) {
        throw ValidationError("rate2", "target rate must be finite and > 0");
    }
    validate(cfg.path_loss);
    validate(cfg.fading);
    validate(cfg.blockage);
    validate(cfg.beam);
    validate(cfg.ppp);
    if (!(distance(cfg.s, cfg.r) > 0.0)) {
        throw ValidationError("r", "relay must not coincide with the source");
    }
    if (!(distance(cfg.r, cfg.d1) > 0.0)) {
        throw ValidationError("d1", "destination must not coincide with the relay");
    }
    if (!(distance(cfg.r, cfg.d2) > 0.0)) {
        throw ValidationError("d2", "destination must not coincide with the relay");
    }
    if (cfg.trials < 1) {
        throw ValidationError("trials", "must be >= 1");
    }
}

double link_los_probability(const ScenarioConfig& cfg, double r)
{
    switch (cfg.link_model) {
    case LinkModel::LosOnly:
        return 1.0;
    case LinkModel::NlosOnly:
        return 0.0;
    case LinkModel::Mixed:
        break;
    }
    return los_probability(r, cfg.blockage);
}

std::string_view to_string(Scheme s)
{
    switch (s) {
    case Scheme::NOMA:
        return "noma";
    case Scheme::OMA:
        return "oma";
    case Scheme::Both:
        return "both";
    }
    return "?";
}

std::string_view to_string(KernelChoice k)
{
    switch (k) {
    case KernelChoice::Paper:
        return "paper";
    case KernelChoice::Exact:
        return "exact";
    case KernelChoice::Both:
        return "both";
    }
    return "?";
}

std::string_view to_string(LinkModel m)
{
    switch (m) {
    case LinkModel::Mixed:
        return "mixed";
    case LinkModel::LosOnly:
        return "los_only";
    case LinkModel::NlosOnly:
        return "nlos_only";
    }
    return "?";
}

}  // namespace noma
