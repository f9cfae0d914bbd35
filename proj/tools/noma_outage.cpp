// Command-line front end: analytic, simulate, compare, sweep, validate.

#include "noma/analytic.hpp"
#include "noma/checks.hpp"
#include "noma/config.hpp"
#include "noma/errors.hpp"
#include "noma/experiments.hpp"
#include "noma/montecarlo.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace noma;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Flags {
    std::string config;
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 42;
    std::string kernel = "exact";
    std::string scheme;
    std::string out;
    double window = 0.0;
    int figure = 0;
    std::string spec;
};

struct Given {
    CLI::Option* trials = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* kernel = nullptr;
    CLI::Option* scheme = nullptr;
    CLI::Option* window = nullptr;
};

std::vector<Scheme> schemes_of(Scheme s)
{
    if (s == Scheme::Both) {
        return {Scheme::NOMA, Scheme::OMA};
    }
    return {s};
}

std::vector<Kernel> kernels_of(KernelChoice k)
{
    switch (k) {
    case KernelChoice::Paper:
        return {Kernel::Paper};
    case KernelChoice::Exact:
        return {Kernel::Exact};
    case KernelChoice::Both:
        break;
    }
    return {Kernel::Paper, Kernel::Exact};
}

std::string_view kernel_name(Kernel k)
{
    return k == Kernel::Paper ? "paper" : "exact";
}

// Command-line flags win over the config file; trials, seed and kernel
// always take the flag value (its default when absent).
void apply_flags(ScenarioConfig& cfg, const Flags& f, const Given& g, bool from_file)
{
    if (g.trials->count() > 0 || !from_file) {
        cfg.trials = f.trials;
    }
    if (g.seed->count() > 0 || !from_file) {
        cfg.master_seed = f.seed;
    }
    if (g.kernel->count() > 0 || !from_file) {
        cfg.kernel = parse_kernel("kernel", f.kernel);
    }
    if (g.scheme->count() > 0) {
        cfg.scheme = parse_scheme("scheme", f.scheme);
    }
    if (g.window->count() > 0) {
        cfg.ppp.window = f.window;
    }
    validate(cfg);
}

ScenarioConfig resolve_config(const Flags& f, const Given& g)
{
    ScenarioConfig cfg;
    if (!f.config.empty()) {
        LoadedConfig loaded = load_config(f.config);
        for (const std::string& note : loaded.notes) {
            std::cerr << "note: " << note << '\n';
        }
        cfg = loaded.config;
    }
    apply_flags(cfg, f, g, !f.config.empty());
    return cfg;
}

void emit(const Flags& f, const std::string& text)
{
    if (f.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(f.out, std::ios::binary);
    if (!file) {
        throw ValidationError("out", "cannot open " + f.out + " for writing");
    }
    file << text;
    if (!file) {
        throw ValidationError("out", "write to " + f.out + " failed");
    }
}

std::string num(double v)
{
    return std::isnan(v) ? std::string{} : format_double(v);
}

int run_analytic(const ScenarioConfig& cfg, const Flags& f)
{
    std::ostringstream out;
    out << "scheme,event,kernel,outage\n";
    for (Scheme scheme : schemes_of(cfg.scheme)) {
        for (int event : {1, 2}) {
            for (Kernel k : kernels_of(cfg.kernel)) {
                out << to_string(scheme) << ',' << event << ',' << kernel_name(k) << ','
                    << num(analytic_outage(cfg, scheme, event, k)) << '\n';
            }
        }
    }
    emit(f, out.str());
    return 0;
}

int run_simulate(const ScenarioConfig& cfg, const Flags& f)
{
    std::ostringstream out;
    out << "scheme,event,p_hat,std_err,trials,seed\n";
    for (Scheme scheme : schemes_of(cfg.scheme)) {
        const EstimatePair est = estimate(cfg, scheme, cfg.trials, cfg.master_seed);
        for (int event : {1, 2}) {
            const OutageEstimate& e = event == 1 ? est.o1 : est.o2;
            out << to_string(scheme) << ',' << event << ',' << num(e.p_hat) << ',' << num(e.std_err) << ','
                << e.trials << ',' << e.seed << '\n';
        }
    }
    emit(f, out.str());
    return 0;
}

int run_compare(const ScenarioConfig& cfg, const Flags& f)
{
    std::ostringstream out;
    out << "scheme,event,analytic_paper,analytic_exact,mc_p_hat,mc_std_err,mc_trials,seed,z_score_exact,"
           "gap_paper_exact\n";
    for (Scheme scheme : schemes_of(cfg.scheme)) {
        const ComparisonRecord rec = compare(cfg, scheme, cfg.trials, cfg.master_seed);
        for (int event : {1, 2}) {
            const EventComparison& e = event == 1 ? rec.o1 : rec.o2;
            out << to_string(scheme) << ',' << event << ',' << num(e.analytic_paper) << ','
                << num(e.analytic_exact) << ',' << num(e.mc.p_hat) << ',' << num(e.mc.std_err) << ','
                << e.mc.trials << ',' << e.mc.seed << ',' << num(e.z_score_exact) << ','
                << num(e.gap_paper_exact) << '\n';
        }
    }
    emit(f, out.str());
    return 0;
}

std::string read_file(const std::string& path, const char* key)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError(key, "cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_sweep_cmd(const Flags& f, const Given& g)
{
    if ((f.figure != 0) == !f.spec.empty()) {
        throw ValidationError("sweep", "give exactly one of --figure or --spec");
    }
    SweepSpec spec;
    if (f.figure != 0) {
        spec = figure_preset(f.figure, resolve_config(f, g));
    } else {
        if (!f.config.empty()) {
            throw ValidationError("config", "a sweep spec carries its own config keys; drop --config");
        }
        spec = parse_sweep_spec(read_file(f.spec, "spec"));
        apply_flags(spec.base, f, g, true);
        if (g.kernel->count() > 0) {
            spec.analytic_paper = spec.base.kernel != KernelChoice::Exact;
            spec.analytic_exact = spec.base.kernel != KernelChoice::Paper;
        }
    }
    if (g.scheme->count() > 0) {
        spec.schemes = schemes_of(spec.base.scheme);
    }
    emit(f, write_sweep_csv(run_sweep(spec)));
    return 0;
}

int run_validate(const ScenarioConfig& cfg, const Flags& f)
{
    checks::CheckOptions opt;
    opt.trials = cfg.trials;
    opt.seed = cfg.master_seed;
    std::vector<checks::CheckResult> results = checks::quick_suite(opt);

    // the configured scenario itself, exact kernel against simulation
    for (Scheme scheme : schemes_of(cfg.scheme)) {
        const ComparisonRecord rec = compare(cfg, scheme, cfg.trials, cfg.master_seed);
        const double z1 = rec.o1.z_score_exact;
        const double z2 = rec.o2.z_score_exact;
        const bool ok = std::abs(z1) <= 3.0 && std::abs(z2) <= 3.0;
        results.push_back({"configured scenario, " + std::string(to_string(scheme)), ok,
                           "z = " + format_double(z1) + ", " + format_double(z2)});
    }

    std::ostringstream out;
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail << ")\n";
        all = all && r.passed;
    }
    emit(f, out.str());
    return all ? 0 : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Outage of cooperative NOMA and OMA relaying at a road intersection"};
    app.require_subcommand(1);

    Flags f;
    Given g;
    app.add_option("--config", f.config, "key = value configuration file");
    g.trials = app.add_option("--trials", f.trials, "Monte Carlo trials")->capture_default_str();
    g.seed = app.add_option("--seed", f.seed, "master seed")->capture_default_str();
    g.kernel = app.add_option("--kernel", f.kernel, "analytic kernel")
                   ->check(CLI::IsMember({"paper", "exact", "both"}))
                   ->capture_default_str();
    g.scheme = app.add_option("--scheme", f.scheme, "scheme")->check(CLI::IsMember({"noma", "oma", "both"}));
    app.add_option("--out", f.out, "output file (default stdout)");
    g.window = app.add_option("--window", f.window, "half-width of the simulated road segment [m]");

    auto* analytic = app.add_subcommand("analytic", "closed-form outage");
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo outage estimate");
    auto* cmp = app.add_subcommand("compare", "analytic and simulation side by side with z-scores");
    auto* sweep = app.add_subcommand("sweep", "figure protocol or sweep spec to CSV");
    sweep->add_option("--figure", f.figure, "preset figure")->check(CLI::IsMember({2, 3, 4, 5}));
    sweep->add_option("--spec", f.spec, "sweep spec file");
    auto* validate_cmd = app.add_subcommand("validate", "run the invariant suite");
    for (auto* sub : {analytic, simulate, cmp, sweep, validate_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (sweep->parsed()) {
            return run_sweep_cmd(f, g);
        }
        const ScenarioConfig cfg = resolve_config(f, g);
        if (analytic->parsed()) {
            return run_analytic(cfg, f);
        }
        if (simulate->parsed()) {
            return run_simulate(cfg, f);
        }
        if (cmp->parsed()) {
            return run_compare(cfg, f);
        }
        return run_validate(cfg, f);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}
