#include "noma/montecarlo.hpp"

#include "noma/errors.hpp"
#include "noma/quadrature.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace noma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// child stream ids below a trial stream
enum TrialStream : std::uint64_t {
    kHopSR = 1,
    kHopRD1 = 2,
    kHopRD2 = 3,
    kPhaseOne = 4,
    kPhaseTwo = 5,
    kOmaSR1 = 6,
    kOmaRD1 = 7,
    kOmaSR2 = 8,
    kOmaRD2 = 9,
    kOmaSlot1 = 10,
    kOmaSlot2 = 11,
    kOmaSlot3 = 12,
    kOmaSlot4 = 13,
};

struct HopDraw {
    LinkClass z = LinkClass::LOS;
    double signal = 0.0;
};

HopDraw draw_hop(const ScenarioConfig& cfg, Position a, Position b, double ups, CounterRng rng)
{
    const double r = distance(a, b);
    const double p_los = link_los_probability(cfg, r);
    HopDraw hop;
    hop.z = rng.uniform() < p_los ? LinkClass::LOS : LinkClass::NLOS;
    const double h = sample_link_power_fading(cfg.fading.shape(hop.z), cfg.fading.mu, rng);
    hop.signal = h * path_loss(r, cfg.path_loss.exponent(hop.z)) * ups;
    return hop;
}

// Scratch storage reused across the trials of one worker.
struct Workspace {
    InterferenceRealization real;
};

thread_local Workspace tls_workspace;

// Per-run constants shared by every trial.
struct Prepared {
    double ups = 0.0;
    std::array<double, kReceiverCount> far{};  // far-field mean at R, D1, D2
    std::array<NodePolar, kReceiverCount> polar{};
};

Prepared prepare(const ScenarioConfig& cfg)
{
    Prepared p;
    p.ups = upsilon(cfg.beam);
    const Position rx[] = {cfg.r, cfg.d1, cfg.d2};
    for (std::size_t j = 0; j < kReceiverCount; ++j) {
        p.polar[j] = to_polar(rx[j]);
        p.far[j] = far_field_mean(p.polar[j], cfg.ppp, cfg.path_loss, p.ups).total();
    }
    return p;
}

double received(const ScenarioConfig& cfg, const Prepared& prep, const InterferenceRealization& real, Receiver rx)
{
    const auto j = static_cast<std::size_t>(rx);
    return aggregate_interference(prep.polar[j], rx, real, cfg.path_loss, prep.ups).total() + prep.far[j];
}

double interference_at(const ScenarioConfig& cfg, const Prepared& prep, const CounterRng& stream, Receiver rx,
                       InterferenceRealization& real)
{
    CounterRng rng = stream;
    draw_realization_into(cfg.ppp, rng, real, mask_of(rx));
    return received(cfg, prep, real, rx);
}

// Integral of (h^2 + u^2)^(-alpha/2) over u in [a, inf).
double tail_integral(double h, double alpha, double a)
{
    const double h2 = h * h;
    auto g = [h2, alpha](double u) { return std::pow(h2 + u * u, -0.5 * alpha); };
    double head = 0.0;
    if (a <= 0.0) {
        // receiver beyond the simulated edge; never the case for sane layouts
        head = integrate_adaptive(g, a, 1.0, 0.0, 1e-10).value;
        a = 1.0;
    }
    return head + integrate_power_tail(g, a, alpha, 0.0, 1e-10).value;
}

}  // namespace

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::AnalyticPaper:
        return "analytic-paper";
    case Provenance::AnalyticExact:
        return "analytic-exact";
    case Provenance::MonteCarlo:
        return "monte-carlo";
    }
    return "?";
}

OutageEstimate OutageEstimate::from_counts(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed)
{
    OutageEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
    e.provenance = Provenance::MonteCarlo;
    return e;
}

RoadInterference aggregate_interference(NodePolar receiver, Receiver marks, const InterferenceRealization& real,
                                        const PathLossParams& path_loss_params, double ups)
{
    RoadInterference out;
    const auto mark = static_cast<std::size_t>(marks);
    for (Road road : {Road::X, Road::Y}) {
        const double h = offset_from_road(receiver, road);
        const double h2 = h * h;
        const double c = projection_on_road(receiver, road);
        double sum = 0.0;
        for (LinkClass k : {LinkClass::LOS, LinkClass::NLOS}) {
            const double alpha = path_loss_params.exponent(k);
            for (const MarkedPoint& pt : real.at(road, k)) {
                if (!pt.active) {
                    continue;
                }
                const double du = pt.t - c;
                const double d2 = h2 + du * du;
                double gain;
                if (alpha == 2.0) {
                    gain = 1.0 / d2;
                } else if (alpha == 4.0) {
                    gain = 1.0 / (d2 * d2);
                } else {
                    gain = std::pow(d2, -0.5 * alpha);
                }
                sum += pt.fading[mark] * gain;
            }
        }
        (road == Road::X ? out.x : out.y) = sum * ups;
    }
    return out;
}

RoadInterference far_field_mean(NodePolar receiver, const PppConfig& ppp, const PathLossParams& path_loss_params,
                                double ups)
{
    RoadInterference out;
    for (Road road : {Road::X, Road::Y}) {
        const double h = offset_from_road(receiver, road);
        const double c = projection_on_road(receiver, road);
        double sum = 0.0;
        for (LinkClass k : {LinkClass::LOS, LinkClass::NLOS}) {
            const double active = ppp.p * ppp.intensity(road, k);
            if (active == 0.0) {
                continue;
            }
            const double alpha = path_loss_params.exponent(k);
            const double e = ppp.extent(road, k);
            sum += active * (tail_integral(h, alpha, e - c) + tail_integral(h, alpha, e + c));
        }
        (road == Road::X ? out.x : out.y) = sum * ups;
    }
    return out;
}

NomaSirs compute_sirs(double signal, double a1, double a2, double interference)
{
    if (interference == 0.0) {
        return {a1 / a2, kInf};
    }
    return {signal * a1 / (signal * a2 + interference), signal * a2 / interference};
}

double oma_sir(double signal, double interference)
{
    return interference == 0.0 ? kInf : signal / interference;
}

TrialOutcome evaluate_outage_events(const PhaseOneSirs& phase1, const PhaseTwoSirs& phase2,
                                    const SirThresholds& t)
{
    TrialOutcome o;
    if (t.degenerate()) {
        o.o_r1 = o.o_d1 = o.o_r2 = o.o_d2 = true;
    } else {
        o.o_r1 = phase1.relay.first < t.theta1;
        o.o_d1 = phase2.d1.first < t.theta1;
        o.o_r2 = phase1.relay.first < t.theta1 || phase1.relay.second < t.theta2;
        o.o_d2 = phase2.d2.first < t.theta1 || phase2.d2.second < t.theta2;
    }
    o.o1 = o.o_r1 || o.o_d1;
    o.o2 = o.o_r2 || o.o_d2;
    return o;
}

namespace {

TrialOutcome noma_trial(const ScenarioConfig& cfg, const Prepared& prep, const CounterRng& master,
                        std::uint64_t trial)
{
    const CounterRng rng = master.fork({trial});
    const double ups = prep.ups;
    const NomaParams& n = cfg.noma;
    auto& real = tls_workspace.real;

    const HopDraw sr = draw_hop(cfg, cfg.s, cfg.r, ups, rng.fork({kHopSR}));
    const HopDraw rd1 = draw_hop(cfg, cfg.r, cfg.d1, ups, rng.fork({kHopRD1}));
    const HopDraw rd2 = draw_hop(cfg, cfg.r, cfg.d2, ups, rng.fork({kHopRD2}));

    PhaseOneSirs phase1;
    phase1.relay = compute_sirs(sr.signal, n.a1, n.a2, interference_at(cfg, prep, rng.fork({kPhaseOne}), Receiver::R, real));

    // one realization for phase two, seen by both destinations
    CounterRng phase_two = rng.fork({kPhaseTwo});
    draw_realization_into(cfg.ppp, phase_two, real, mask_of(Receiver::D1) | mask_of(Receiver::D2));
    PhaseTwoSirs phase2;
    phase2.d1 = compute_sirs(rd1.signal, n.a1, n.a2, received(cfg, prep, real, Receiver::D1));
    phase2.d2 = compute_sirs(rd2.signal, n.a1, n.a2, received(cfg, prep, real, Receiver::D2));

    TrialOutcome o = evaluate_outage_events(phase1, phase2, psi_values(n));
    o.z_sr = sr.z;
    o.z_rd1 = rd1.z;
    o.z_rd2 = rd2.z;
    return o;
}

TrialOutcome oma_trial(const ScenarioConfig& cfg, const Prepared& prep, const CounterRng& master, std::uint64_t trial)
{
    const CounterRng rng = master.fork({trial});
    const double ups = prep.ups;
    const double theta1 = threshold(cfg.noma.rate1, Scheme::OMA);
    const double theta2 = threshold(cfg.noma.rate2, Scheme::OMA);
    auto& real = tls_workspace.real;

    const HopDraw sr1 = draw_hop(cfg, cfg.s, cfg.r, ups, rng.fork({kOmaSR1}));
    const HopDraw rd1 = draw_hop(cfg, cfg.r, cfg.d1, ups, rng.fork({kOmaRD1}));
    const HopDraw sr2 = draw_hop(cfg, cfg.s, cfg.r, ups, rng.fork({kOmaSR2}));
    const HopDraw rd2 = draw_hop(cfg, cfg.r, cfg.d2, ups, rng.fork({kOmaRD2}));

    TrialOutcome o;
    o.o_r1 = oma_sir(sr1.signal, interference_at(cfg, prep, rng.fork({kOmaSlot1}), Receiver::R, real)) < theta1;
    o.o_d1 = oma_sir(rd1.signal, interference_at(cfg, prep, rng.fork({kOmaSlot2}), Receiver::D1, real)) < theta1;
    o.o_r2 = oma_sir(sr2.signal, interference_at(cfg, prep, rng.fork({kOmaSlot3}), Receiver::R, real)) < theta2;
    o.o_d2 = oma_sir(rd2.signal, interference_at(cfg, prep, rng.fork({kOmaSlot4}), Receiver::D2, real)) < theta2;
    o.o1 = o.o_r1 || o.o_d1;
    o.o2 = o.o_r2 || o.o_d2;
    o.z_sr = sr1.z;
    o.z_rd1 = rd1.z;
    o.z_rd2 = rd2.z;
    return o;
}

}  // namespace

TrialOutcome simulate_noma_trial(const ScenarioConfig& cfg, const CounterRng& master, std::uint64_t trial)
{
    return noma_trial(cfg, prepare(cfg), master, trial);
}

TrialOutcome simulate_oma_trial(const ScenarioConfig& cfg, const CounterRng& master, std::uint64_t trial)
{
    return oma_trial(cfg, prepare(cfg), master, trial);
}

EstimatePair estimate(const ScenarioConfig& cfg, Scheme scheme, std::uint64_t trials, std::uint64_t master_seed,
                      unsigned workers)
{
    validate(cfg);
    if (trials < 1) {
        throw ValidationError("trials", "must be >= 1");
    }
    if (scheme == Scheme::Both) {
        throw ValidationError("scheme", "estimate runs one scheme at a time");
    }
    const CounterRng master = CounterRng::from_seed(master_seed);
    const auto simulate = scheme == Scheme::NOMA ? &noma_trial : &oma_trial;
    const Prepared prep = prepare(cfg);

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    constexpr std::uint64_t kChunk = 256;
    const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

    std::atomic<std::uint64_t> next{0};
    std::vector<std::uint64_t> hits1(workers, 0);
    std::vector<std::uint64_t> hits2(workers, 0);
    auto run = [&](unsigned w) {
        std::uint64_t local1 = 0;
        std::uint64_t local2 = 0;
        for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
            const std::uint64_t end = std::min(trials, (c + 1) * kChunk);
            for (std::uint64_t t = c * kChunk; t < end; ++t) {
                const TrialOutcome o = simulate(cfg, prep, master, t);
                local1 += o.o1 ? 1 : 0;
                local2 += o.o2 ? 1 : 0;
            }
        }
        hits1[w] = local1;
        hits2[w] = local2;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
    }
    std::uint64_t total1 = 0;
    std::uint64_t total2 = 0;
    for (unsigned w = 0; w < workers; ++w) {
        total1 += hits1[w];
        total2 += hits2[w];
    }
    return {OutageEstimate::from_counts(total1, trials, master_seed),
            OutageEstimate::from_counts(total2, trials, master_seed)};
}

}  // namespace noma
