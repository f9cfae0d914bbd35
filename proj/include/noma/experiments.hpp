#pragma once

#include "noma/analytic.hpp"
#include "noma/montecarlo.hpp"
#include "noma/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace noma {

enum class SweptVariable {
    LambdaCommon,               ///< all four intensities set to the value
    SourceDestinationDistance,  ///< |S - D1| = |S - D2|, relay at mid distance
    DistanceToIntersection,     ///< x coordinate of S, chain translated rigidly
    RatePair,                   ///< multiplier on both base target rates
};

std::string_view to_string(SweptVariable v);
SweptVariable parse_swept_variable(std::string_view token);

struct SweepSpec {
    SweptVariable variable = SweptVariable::LambdaCommon;
    std::vector<double> grid;
    ScenarioConfig base;
    bool analytic_paper = false;
    bool analytic_exact = true;
    bool monte_carlo = true;
    std::vector<Scheme> schemes{Scheme::NOMA};
    std::vector<LinkModel> link_models{LinkModel::Mixed};
};

/// Throws ValidationError for an empty or non-increasing grid.
void validate(const SweepSpec& spec);

/// One row per grid point, link model, scheme and event. Columns that were
/// not requested hold NaN (analytic) or zero trials (Monte Carlo).
struct SweepRow {
    double value = 0.0;
    LinkModel link_model = LinkModel::Mixed;
    Scheme scheme = Scheme::NOMA;
    int event = 1;  ///< 1: first message / D1, 2: second message / D2
    double analytic_paper = 0.0;
    double analytic_exact = 0.0;
    OutageEstimate mc;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;
};

/// Base config moved to one grid point of the swept variable.
ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweptVariable variable, double value);

/// Forces the link classes and zeroes the opposite-class intensities for the
/// single-class models; Mixed leaves the config unchanged.
ScenarioConfig apply_link_model(const ScenarioConfig& cfg, LinkModel model);

/// Analytic outage of one event under one scheme.
double analytic_outage(const ScenarioConfig& cfg, Scheme scheme, int event, Kernel kernel);

SweepResult run_sweep(const SweepSpec& spec);

/// Preset protocols for figures 2 to 5, built on `base`.
SweepSpec figure_preset(int figure, const ScenarioConfig& base);

/// Parses a sweep spec file: the config keys plus `swept`, `grid`,
/// `outputs`, `schemes` and `link_models`.
SweepSpec parse_sweep_spec(std::string_view text);

/// CSV with a `#` comment block holding the resolved config.
std::string write_sweep_csv(const SweepResult& result);

/// Rows of a CSV produced by write_sweep_csv.
std::vector<SweepRow> read_sweep_csv(std::string_view text);

struct EventComparison {
    double analytic_paper = 0.0;
    double analytic_exact = 0.0;
    OutageEstimate mc;
    double z_score_exact = 0.0;  ///< (analytic_exact - p_hat) / std_err
    double gap_paper_exact = 0.0;
};

struct ComparisonRecord {
    Scheme scheme = Scheme::NOMA;
    EventComparison o1;
    EventComparison o2;
};

/// z-score with the conventions 0/0 -> 0 and x/0 -> +-inf.
double z_score(double analytic, const OutageEstimate& mc);

ComparisonRecord compare(const ScenarioConfig& cfg, Scheme scheme, std::uint64_t trials, std::uint64_t seed,
                         unsigned workers = 0);

}  // namespace noma
