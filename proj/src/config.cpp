#include "noma/config.hpp"

#include "noma/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace noma {

namespace {

int parse_shape(std::string_view key, std::string_view token)
{
    const double v = parse_double(key, token);
    if (v != std::floor(v) || v < 1.0 || v > std::numeric_limits<int>::max()) {
        throw ValidationError(std::string(key), "integer Nakagami parameter required");
    }
    return static_cast<int>(v);
}

std::uint64_t parse_u64(std::string_view key, std::string_view token)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ValidationError(std::string(key), "expected an unsigned integer, got '" + std::string(token) + "'");
    }
    return v;
}

}  // namespace

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view text)
{
    std::vector<std::string_view> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        if (!item.empty()) {
            out.push_back(item);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view key, std::string_view token)
{
    token = trim(token);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw ValidationError(std::string(key), "expected a number, got '" + std::string(token) + "'");
    }
    return v;
}

Scheme parse_scheme(std::string_view key, std::string_view token)
{
    if (token == "noma") return Scheme::NOMA;
    if (token == "oma") return Scheme::OMA;
    if (token == "both") return Scheme::Both;
    throw ValidationError(std::string(key), "expected noma, oma or both");
}

KernelChoice parse_kernel(std::string_view key, std::string_view token)
{
    if (token == "paper") return KernelChoice::Paper;
    if (token == "exact") return KernelChoice::Exact;
    if (token == "both") return KernelChoice::Both;
    throw ValidationError(std::string(key), "expected paper, exact or both");
}

LinkModel parse_link_model(std::string_view key, std::string_view token)
{
    if (token == "mixed") return LinkModel::Mixed;
    if (token == "los_only") return LinkModel::LosOnly;
    if (token == "nlos_only") return LinkModel::NlosOnly;
    throw ValidationError(std::string(key), "expected mixed, los_only or nlos_only");
}

bool apply_config_key(ScenarioConfig& cfg, std::string_view key, std::string_view value)
{
    auto num = [&] { return parse_double(key, value); };
    struct DoubleField {
        std::string_view name;
        double* target;
    };
    const DoubleField doubles[] = {
        {"s_x", &cfg.s.x},
        {"s_y", &cfg.s.y},
        {"r_x", &cfg.r.x},
        {"r_y", &cfg.r.y},
        {"d1_x", &cfg.d1.x},
        {"d1_y", &cfg.d1.y},
        {"d2_x", &cfg.d2.x},
        {"d2_y", &cfg.d2.y},
        {"a1", &cfg.noma.a1},
        {"a2", &cfg.noma.a2},
        {"rate1", &cfg.noma.rate1},
        {"rate2", &cfg.noma.rate2},
        {"alpha_los", &cfg.path_loss.alpha_los},
        {"alpha_nlos", &cfg.path_loss.alpha_nlos},
        {"mu", &cfg.fading.mu},
        {"beta", &cfg.blockage.beta},
        {"g_max", &cfg.beam.g_max},
        {"g_min", &cfg.beam.g_min},
        {"phi", &cfg.beam.phi},
        {"carrier_freq", &cfg.beam.carrier_freq},
        {"lambda_x_los", &cfg.ppp.lambda_x_los},
        {"lambda_x_nlos", &cfg.ppp.lambda_x_nlos},
        {"lambda_y_los", &cfg.ppp.lambda_y_los},
        {"lambda_y_nlos", &cfg.ppp.lambda_y_nlos},
        {"p", &cfg.ppp.p},
        {"window", &cfg.ppp.window},
    };
    for (const auto& f : doubles) {
        if (f.name == key) {
            *f.target = num();
            return true;
        }
    }
    if (key == "lambda") {
        cfg.ppp.set_common(num());
    } else if (key == "m_los") {
        cfg.fading.m_los = parse_shape(key, value);
    } else if (key == "m_nlos") {
        cfg.fading.m_nlos = parse_shape(key, value);
    } else if (key == "link_model") {
        cfg.link_model = parse_link_model(key, value);
    } else if (key == "scheme") {
        cfg.scheme = parse_scheme(key, value);
    } else if (key == "kernel") {
        cfg.kernel = parse_kernel(key, value);
    } else if (key == "trials") {
        cfg.trials = parse_u64(key, value);
    } else if (key == "master_seed") {
        cfg.master_seed = parse_u64(key, value);
    } else {
        return false;
    }
    return true;
}

LoadedConfig parse_config(std::string_view text)
{
    LoadedConfig out;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ValidationError("line " + std::to_string(line_no), "expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!seen.emplace(key).second) {
            throw ValidationError(std::string(key), "given more than once");
        }
        if (!apply_config_key(out.config, key, value)) {
            throw ValidationError(std::string(key), "unknown key");
        }
    }

    NomaParams& n = out.config.noma;
    const bool has_a1 = seen.contains("a1");
    const bool has_a2 = seen.contains("a2");
    if (has_a1 && !has_a2) {
        n.a2 = 1.0 - n.a1;
    } else if (has_a2 && !has_a1) {
        n.a1 = 1.0 - n.a2;
    }
    if (!seen.contains("beta")) {
        out.notes.emplace_back("beta defaults to 9.5e-3 1/m (the literal 9.5e3 blocks every link)");
    }
    if (!seen.contains("carrier_freq")) {
        out.notes.emplace_back("carrier_freq defaults to 30 GHz; wavelength = c / carrier_freq");
    }
    validate(out.config);
    return out;
}

LoadedConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("config", "cannot read '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string format_config(const ScenarioConfig& cfg)
{
    std::ostringstream out;
    auto put = [&](std::string_view key, const std::string& value) { out << key << " = " << value << '\n'; };
    auto putd = [&](std::string_view key, double v) { put(key, format_double(v)); };
    putd("s_x", cfg.s.x);
    putd("s_y", cfg.s.y);
    putd("r_x", cfg.r.x);
    putd("r_y", cfg.r.y);
    putd("d1_x", cfg.d1.x);
    putd("d1_y", cfg.d1.y);
    putd("d2_x", cfg.d2.x);
    putd("d2_y", cfg.d2.y);
    putd("a1", cfg.noma.a1);
    putd("a2", cfg.noma.a2);
    putd("rate1", cfg.noma.rate1);
    putd("rate2", cfg.noma.rate2);
    putd("alpha_los", cfg.path_loss.alpha_los);
    putd("alpha_nlos", cfg.path_loss.alpha_nlos);
    put("m_los", std::to_string(cfg.fading.m_los));
    put("m_nlos", std::to_string(cfg.fading.m_nlos));
    putd("mu", cfg.fading.mu);
    putd("beta", cfg.blockage.beta);
    putd("g_max", cfg.beam.g_max);
    putd("g_min", cfg.beam.g_min);
    putd("phi", cfg.beam.phi);
    putd("carrier_freq", cfg.beam.carrier_freq);
    putd("lambda_x_los", cfg.ppp.lambda_x_los);
    putd("lambda_x_nlos", cfg.ppp.lambda_x_nlos);
    putd("lambda_y_los", cfg.ppp.lambda_y_los);
    putd("lambda_y_nlos", cfg.ppp.lambda_y_nlos);
    putd("p", cfg.ppp.p);
    putd("window", cfg.ppp.window);
    put("link_model", std::string(to_string(cfg.link_model)));
    put("scheme", std::string(to_string(cfg.scheme)));
    put("kernel", std::string(to_string(cfg.kernel)));
    put("trials", std::to_string(cfg.trials));
    put("master_seed", std::to_string(cfg.master_seed));
    return out.str();
}

}  // namespace noma
