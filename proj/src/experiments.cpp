#include "noma/experiments.hpp"

#include "noma/config.hpp"
#include "noma/errors.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace noma {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> g;
    for (int i = 0; i < n; ++i) {
        g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    }
    return g;
}

std::vector<double> linear_grid(double lo, double step, int n)
{
    std::vector<double> g;
    for (int i = 0; i < n; ++i) {
        g.push_back(lo + step * i);
    }
    return g;
}

std::string format_optional(double v)
{
    return std::isnan(v) ? std::string() : format_double(v);
}

}  // namespace

std::string_view to_string(SweptVariable v)
{
    switch (v) {
    case SweptVariable::LambdaCommon:
        return "lambda_common";
    case SweptVariable::SourceDestinationDistance:
        return "source_destination_distance";
    case SweptVariable::DistanceToIntersection:
        return "distance_to_intersection";
    case SweptVariable::RatePair:
        return "rate_pair";
    }
    return "?";
}

SweptVariable parse_swept_variable(std::string_view token)
{
    for (SweptVariable v : {SweptVariable::LambdaCommon, SweptVariable::SourceDestinationDistance,
                            SweptVariable::DistanceToIntersection, SweptVariable::RatePair}) {
        if (to_string(v) == token) {
            return v;
        }
    }
    throw ValidationError("swept", "unknown swept variable '" + std::string(token) + "'");
}

void validate(const SweepSpec& spec)
{
    if (spec.grid.empty()) {
        throw ValidationError("grid", "must not be empty");
    }
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        if (!std::isfinite(spec.grid[i])) {
            throw ValidationError("grid", "values must be finite");
        }
        if (i > 0 && !(spec.grid[i] > spec.grid[i - 1])) {
            throw ValidationError("grid", "values must be strictly increasing");
        }
    }
    if (spec.schemes.empty()) {
        throw ValidationError("schemes", "must not be empty");
    }
    for (Scheme s : spec.schemes) {
        if (s == Scheme::Both) {
            throw ValidationError("schemes", "list noma and oma separately");
        }
    }
    if (spec.link_models.empty()) {
        throw ValidationError("link_models", "must not be empty");
    }
    validate(spec.base);
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweptVariable variable, double value)
{
    ScenarioConfig cfg = base;
    switch (variable) {
    case SweptVariable::LambdaCommon:
        cfg.ppp.set_common(value);
        break;
    case SweptVariable::SourceDestinationDistance: {
        const double off1 = base.d1.y - base.s.y;
        const double off2 = base.d2.y - base.s.y;
        const double lateral = std::max(std::abs(off1), std::abs(off2));
        if (!(value > lateral)) {
            throw ValidationError("grid", "source-destination distance must exceed the lateral offset");
        }
        // keep the base offsets; |S - D1| = |S - D2| needs symmetric offsets
        const double along = std::sqrt(value * value - lateral * lateral);
        cfg.r = {base.s.x + along / 2.0, base.s.y};
        cfg.d1 = {base.s.x + along, base.s.y + std::copysign(lateral, off1)};
        cfg.d2 = {base.s.x + along, base.s.y + std::copysign(lateral, off2)};
        break;
    }
    case SweptVariable::DistanceToIntersection: {
        const double shift = value - base.s.x;
        for (Position* node : {&cfg.s, &cfg.r, &cfg.d1, &cfg.d2}) {
            node->x += shift;
        }
        break;
    }
    case SweptVariable::RatePair:
        cfg.noma.rate1 = base.noma.rate1 * value;
        cfg.noma.rate2 = base.noma.rate2 * value;
        break;
    }
    return cfg;
}

ScenarioConfig apply_link_model(const ScenarioConfig& cfg, LinkModel model)
{
    ScenarioConfig out = cfg;
    out.link_model = model;
    if (model == LinkModel::LosOnly) {
        out.ppp.lambda_x_nlos = 0.0;
        out.ppp.lambda_y_nlos = 0.0;
    } else if (model == LinkModel::NlosOnly) {
        out.ppp.lambda_x_los = 0.0;
        out.ppp.lambda_y_los = 0.0;
    }
    return out;
}

double analytic_outage(const ScenarioConfig& cfg, Scheme scheme, int event, Kernel kernel)
{
    if (scheme == Scheme::OMA) {
        return outage_oma(cfg, event == 1 ? Destination::D1 : Destination::D2, kernel);
    }
    return event == 1 ? outage_o1(cfg, kernel) : outage_o2(cfg, kernel);
}

SweepResult run_sweep(const SweepSpec& spec)
{
    validate(spec);
    SweepResult result{spec, {}};
    for (double value : spec.grid) {
        const ScenarioConfig at_point = apply_sweep_value(spec.base, spec.variable, value);
        for (LinkModel model : spec.link_models) {
            const ScenarioConfig cfg = apply_link_model(at_point, model);
            validate(cfg);
            for (Scheme scheme : spec.schemes) {
                EstimatePair mc;
                if (spec.monte_carlo) {
                    mc = estimate(cfg, scheme, cfg.trials, cfg.master_seed);
                }
                for (int event : {1, 2}) {
                    SweepRow row;
                    row.value = value;
                    row.link_model = model;
                    row.scheme = scheme;
                    row.event = event;
                    row.analytic_paper = spec.analytic_paper ? analytic_outage(cfg, scheme, event, Kernel::Paper) : kNaN;
                    row.analytic_exact = spec.analytic_exact ? analytic_outage(cfg, scheme, event, Kernel::Exact) : kNaN;
                    if (spec.monte_carlo) {
                        row.mc = event == 1 ? mc.o1 : mc.o2;
                    } else {
                        row.mc.p_hat = kNaN;
                        row.mc.std_err = kNaN;
                        row.mc.seed = cfg.master_seed;
                    }
                    result.rows.push_back(row);
                }
            }
        }
    }
    return result;
}

SweepSpec figure_preset(int figure, const ScenarioConfig& base)
{
    SweepSpec spec;
    spec.base = base;
    spec.analytic_paper = base.kernel != KernelChoice::Exact;
    spec.analytic_exact = base.kernel != KernelChoice::Paper;
    switch (figure) {
    case 2:
        spec.variable = SweptVariable::SourceDestinationDistance;
        spec.grid = linear_grid(20.0, 20.0, 20);
        spec.schemes = {Scheme::NOMA, Scheme::OMA};
        break;
    case 3:
        spec.variable = SweptVariable::LambdaCommon;
        spec.grid = log_grid(1e-4, 1e-2, 10);
        spec.link_models = {LinkModel::LosOnly, LinkModel::Mixed, LinkModel::NlosOnly};
        break;
    case 4:
        // high-rate pair; a1 = 0.9 keeps theta1 = 2^2.4 - 1 below a1/a2
        spec.variable = SweptVariable::LambdaCommon;
        spec.grid = log_grid(1e-5, 1e-3, 10);
        spec.schemes = {Scheme::NOMA, Scheme::OMA};
        spec.base.noma = NomaParams{0.9, 0.1, 1.2, 4.0};
        break;
    case 5:
        spec.variable = SweptVariable::DistanceToIntersection;
        spec.grid = linear_grid(0.0, 50.0, 11);
        spec.schemes = {Scheme::NOMA, Scheme::OMA};
        spec.link_models = {LinkModel::LosOnly, LinkModel::Mixed, LinkModel::NlosOnly};
        break;
    default:
        throw ValidationError("figure", "presets exist for figures 2, 3, 4 and 5");
    }
    return spec;
}

SweepSpec parse_sweep_spec(std::string_view text)
{
    SweepSpec spec;
    std::string config_text;
    std::set<std::string, std::less<>> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        const auto eq = line.find('=');
        if (line.empty() || eq == std::string_view::npos) {
            config_text += raw + '\n';
            continue;
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "swept") {
            spec.variable = parse_swept_variable(value);
        } else if (key == "grid") {
            spec.grid.clear();
            for (std::string_view item : split_list(value)) {
                spec.grid.push_back(parse_double("grid", item));
            }
        } else if (key == "outputs") {
            spec.analytic_paper = spec.analytic_exact = spec.monte_carlo = false;
            for (std::string_view item : split_list(value)) {
                if (item == "paper") {
                    spec.analytic_paper = true;
                } else if (item == "exact") {
                    spec.analytic_exact = true;
                } else if (item == "mc") {
                    spec.monte_carlo = true;
                } else {
                    throw ValidationError("outputs", "expected paper, exact or mc");
                }
            }
        } else if (key == "schemes") {
            spec.schemes.clear();
            for (std::string_view item : split_list(value)) {
                spec.schemes.push_back(parse_scheme("schemes", item));
            }
        } else if (key == "link_models") {
            spec.link_models.clear();
            for (std::string_view item : split_list(value)) {
                spec.link_models.push_back(parse_link_model("link_models", item));
            }
        } else {
            config_text += raw + '\n';
            continue;
        }
        if (!seen.emplace(key).second) {
            throw ValidationError(std::string(key), "given more than once");
        }
    }
    spec.base = parse_config(config_text).config;
    if (!seen.contains("grid")) {
        throw ValidationError("grid", "sweep spec needs a grid");
    }
    validate(spec);
    return spec;
}

std::string write_sweep_csv(const SweepResult& result)
{
    const SweepSpec& spec = result.spec;
    std::ostringstream out;
    out << "# outage sweep\n";
    out << "# swept = " << to_string(spec.variable) << '\n';
    std::istringstream cfg_lines(format_config(spec.base));
    for (std::string line; std::getline(cfg_lines, line);) {
        out << "# " << line << '\n';
    }
    out << "variable,value,link_model,scheme,event,analytic_paper,analytic_exact,mc_p_hat,mc_std_err,mc_trials,"
           "seed\n";
    for (const SweepRow& row : result.rows) {
        out << to_string(spec.variable) << ',' << format_double(row.value) << ',' << to_string(row.link_model) << ','
            << to_string(row.scheme) << ",O" << row.event << ',' << format_optional(row.analytic_paper) << ','
            << format_optional(row.analytic_exact) << ',' << format_optional(row.mc.p_hat) << ','
            << format_optional(row.mc.std_err) << ',' << row.mc.trials << ',' << row.mc.seed << '\n';
    }
    return out.str();
}

std::vector<SweepRow> read_sweep_csv(std::string_view text)
{
    std::vector<SweepRow> rows;
    std::istringstream in{std::string(text)};
    bool header_seen = false;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::vector<std::string_view> cells;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            cells.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (cells.size() != 11) {
            throw ValidationError("csv", "expected 11 columns, got " + std::to_string(cells.size()));
        }
        auto optional_number = [](std::string_view key, std::string_view cell) {
            return cell.empty() ? kNaN : parse_double(key, cell);
        };
        SweepRow row;
        row.value = parse_double("value", cells[1]);
        row.link_model = parse_link_model("link_model", cells[2]);
        row.scheme = parse_scheme("scheme", cells[3]);
        row.event = cells[4] == "O1" ? 1 : 2;
        row.analytic_paper = optional_number("analytic_paper", cells[5]);
        row.analytic_exact = optional_number("analytic_exact", cells[6]);
        row.mc.p_hat = optional_number("mc_p_hat", cells[7]);
        row.mc.std_err = optional_number("mc_std_err", cells[8]);
        row.mc.trials = static_cast<std::uint64_t>(parse_double("mc_trials", cells[9]));
        row.mc.seed = std::stoull(std::string(cells[10]));
        rows.push_back(row);
    }
    return rows;
}

double z_score(double analytic, const OutageEstimate& mc)
{
    const double diff = analytic - mc.p_hat;
    if (mc.std_err == 0.0) {
        if (diff == 0.0) {
            return 0.0;
        }
        return std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    return diff / mc.std_err;
}

ComparisonRecord compare(const ScenarioConfig& cfg, Scheme scheme, std::uint64_t trials, std::uint64_t seed,
                         unsigned workers)
{
    validate(cfg);
    ComparisonRecord rec;
    rec.scheme = scheme;
    const EstimatePair mc = estimate(cfg, scheme, trials, seed, workers);
    for (int event : {1, 2}) {
        EventComparison& e = event == 1 ? rec.o1 : rec.o2;
        e.analytic_paper = analytic_outage(cfg, scheme, event, Kernel::Paper);
        e.analytic_exact = analytic_outage(cfg, scheme, event, Kernel::Exact);
        e.mc = event == 1 ? mc.o1 : mc.o2;
        e.z_score_exact = z_score(e.analytic_exact, e.mc);
        e.gap_paper_exact = e.analytic_paper - e.analytic_exact;
    }
    return rec;
}

}  // namespace noma
