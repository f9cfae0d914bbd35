#pragma once

#include "noma/analytic.hpp"
#include "noma/pointprocess.hpp"
#include "noma/rng.hpp"
#include "noma/scenario.hpp"

#include <cstdint>
#include <utility>

namespace noma {

enum class Provenance { AnalyticPaper, AnalyticExact, MonteCarlo };

std::string_view to_string(Provenance p);

struct OutageEstimate {
    double p_hat = 0.0;
    std::uint64_t trials = 0;
    double std_err = 0.0;  ///< sqrt(p_hat (1 - p_hat) / trials)
    std::uint64_t seed = 0;
    Provenance provenance = Provenance::MonteCarlo;

    static OutageEstimate from_counts(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed);
};

struct EstimatePair {
    OutageEstimate o1;
    OutageEstimate o2;
};

/// I_X and I_Y at a receiver, each summed over both classes, including upsilon.
struct RoadInterference {
    double x = 0.0;
    double y = 0.0;

    double total() const noexcept { return x + y; }
};

RoadInterference aggregate_interference(NodePolar receiver, Receiver marks, const InterferenceRealization& real,
                                        const PathLossParams& path_loss, double ups);

/// Mean interference from the active points beyond each process's extent,
/// by Campbell's theorem with unit-mean fading. The simulator adds it to the
/// sampled sum in place of the (nearly deterministic) far field.
RoadInterference far_field_mean(NodePolar receiver, const PppConfig& ppp, const PathLossParams& path_loss,
                                double ups);

/// SIRs of a superposed signal with received power `signal`. With zero
/// interference the first SIR is a1/a2 and the second is +infinity.
struct NomaSirs {
    double first = 0.0;   ///< decode message 1, message 2 treated as interference
    double second = 0.0;  ///< decode message 2 after perfect SIC
};

NomaSirs compute_sirs(double signal, double a1, double a2, double interference);

/// SIR of a full-power orthogonal transmission.
double oma_sir(double signal, double interference);

struct PhaseOneSirs {
    NomaSirs relay;
};

struct PhaseTwoSirs {
    NomaSirs d1;
    NomaSirs d2;
};

struct TrialOutcome {
    bool o1 = false;
    bool o2 = false;
    bool o_r1 = false;
    bool o_d1 = false;
    bool o_r2 = false;
    bool o_d2 = false;
    LinkClass z_sr = LinkClass::LOS;
    LinkClass z_rd1 = LinkClass::LOS;
    LinkClass z_rd2 = LinkClass::LOS;
};

/// Outage predicates for one trial. In the degenerate regime every event is
/// an outage regardless of the SIR values.
TrialOutcome evaluate_outage_events(const PhaseOneSirs& phase1, const PhaseTwoSirs& phase2,
                                    const SirThresholds& thresholds);

/// One cooperative NOMA trial: link classes and fading, then an independent
/// interference realization per phase. D1 and D2 share the phase-two points
/// but have their own fading marks.
TrialOutcome simulate_noma_trial(const ScenarioConfig& cfg, const CounterRng& master, std::uint64_t trial);

/// One OMA trial; o1/o2 report the outage of D1/D2 in their dedicated slots.
TrialOutcome simulate_oma_trial(const ScenarioConfig& cfg, const CounterRng& master, std::uint64_t trial);

/// Monte Carlo estimate of both outage events. `scheme` must be NOMA or OMA.
/// Results depend only on (cfg, scheme, trials, seed), not on `workers`
/// (0 means one per hardware thread).
EstimatePair estimate(const ScenarioConfig& cfg, Scheme scheme, std::uint64_t trials, std::uint64_t master_seed,
                      unsigned workers = 0);

}  // namespace noma
