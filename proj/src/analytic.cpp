#include "noma/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace noma {

namespace {

double clamp_probability(double v)
{
    return std::clamp(v, 0.0, 1.0);
}

double binomial(std::size_t k, std::size_t n)
{
    double c = 1.0;
    for (std::size_t i = 1; i <= n; ++i) {
        c = c * static_cast<double>(k - n + i) / static_cast<double>(i);
    }
    return c;
}

}  // namespace

double threshold(double rate, Scheme scheme)
{
    const double slots = scheme == Scheme::OMA ? 4.0 : 2.0;
    return std::exp2(slots * rate) - 1.0;
}

SirThresholds psi_values(const NomaParams& n)
{
    SirThresholds t;
    t.theta1 = threshold(n.rate1, Scheme::NOMA);
    t.theta2 = threshold(n.rate2, Scheme::NOMA);
    t.psi2 = t.theta2 / n.a2;
    const double denom = n.a1 - t.theta1 * n.a2;
    if (denom > 0.0) {
        t.psi1 = t.theta1 / denom;
        t.psi_max = std::max(*t.psi1, t.psi2);
    }
    return t;
}

InterferenceEnv make_env(const ScenarioConfig& cfg, Position receiver)
{
    InterferenceEnv env;
    env.receiver = to_polar(receiver);
    env.upsilon = upsilon(cfg.beam);
    for (Road road : {Road::X, Road::Y}) {
        for (LinkClass k : {LinkClass::LOS, LinkClass::NLOS}) {
            env.components[InterferenceRealization::component_index(road, k)] =
                InterferenceComponent{road, k, cfg.ppp.p, cfg.ppp.intensity(road, k), cfg.path_loss.exponent(k)};
        }
    }
    return env;
}

double kernel_argument(int m_z, double psi, double mu, double r_link, double alpha_z, double ups)
{
    return m_z * psi / (mu * path_loss(r_link, alpha_z) * ups);
}

double lambda_kernel_paper(int m_z, double psi, double mu, double r_link, double alpha_z, double ups,
                           const InterferenceEnv& env)
{
    const double omega = kernel_argument(m_z, psi, mu, r_link, alpha_z, ups);
    const std::size_t order = static_cast<std::size_t>(m_z - 1);
    double product = 1.0;
    for (LinkClass k : {LinkClass::LOS, LinkClass::NLOS}) {
        const TaylorScalar lx = env.component_taylor(InterferenceRealization::component_index(Road::X, k), order, omega);
        const TaylorScalar ly = env.component_taylor(InterferenceRealization::component_index(Road::Y, k), order, omega);
        double sum = 0.0;
        double power = 1.0;  // (-omega)^j / j!
        for (std::size_t j = 0; j <= order; ++j) {
            double inner = 0.0;
            for (std::size_t n = 0; n <= j; ++n) {
                inner += binomial(j, n) * lx.derivative(j - n) * ly.derivative(n);
            }
            sum += power * inner;
            power *= -omega / static_cast<double>(j + 1);
        }
        product *= sum;
    }
    return clamp_probability(product);
}

double lambda_kernel_exact(int m_z, double psi, double mu, double r_link, double alpha_z, double ups,
                           const InterferenceEnv& env)
{
    const double omega = kernel_argument(m_z, psi, mu, r_link, alpha_z, ups);
    const std::size_t order = static_cast<std::size_t>(m_z - 1);
    TaylorScalar total = TaylorScalar::constant(order, 1.0);
    for (std::size_t c = 0; c < env.components.size(); ++c) {
        total *= env.component_taylor(c, order, omega);
    }
    // E[exp(-omega I) (omega I)^k / k!] = (-omega)^k c_k
    double sum = 0.0;
    double power = 1.0;
    for (std::size_t k = 0; k <= order; ++k) {
        sum += power * total[k];
        power *= -omega;
    }
    return clamp_probability(sum);
}

double hop_success(const ScenarioConfig& cfg, Position a, Position b, double psi, Kernel kernel)
{
    const double r = distance(a, b);
    const double ups = upsilon(cfg.beam);
    const InterferenceEnv env = make_env(cfg, b);
    auto lambda_for = [&](LinkClass z) {
        const int m = cfg.fading.shape(z);
        const double alpha = cfg.path_loss.exponent(z);
        return kernel == Kernel::Exact ? lambda_kernel_exact(m, psi, cfg.fading.mu, r, alpha, ups, env)
                                       : lambda_kernel_paper(m, psi, cfg.fading.mu, r, alpha, ups, env);
    };
    const double p_los = link_los_probability(cfg, r);
    if (p_los == 1.0) {
        return lambda_for(LinkClass::LOS);
    }
    if (p_los == 0.0) {
        return lambda_for(LinkClass::NLOS);
    }
    const double nlos = lambda_for(LinkClass::NLOS);
    // written so that equal kernels give that value exactly
    return nlos + p_los * (lambda_for(LinkClass::LOS) - nlos);
}

double outage_o1(const ScenarioConfig& cfg, Kernel kernel)
{
    const SirThresholds t = psi_values(cfg.noma);
    if (t.degenerate()) {
        return 1.0;
    }
    const double first = hop_success(cfg, cfg.s, cfg.r, *t.psi1, kernel);
    const double second = hop_success(cfg, cfg.r, cfg.d1, *t.psi1, kernel);
    return clamp_probability(1.0 - first * second);
}

double outage_o2(const ScenarioConfig& cfg, Kernel kernel)
{
    const SirThresholds t = psi_values(cfg.noma);
    if (t.degenerate()) {
        return 1.0;
    }
    const double first = hop_success(cfg, cfg.s, cfg.r, *t.psi_max, kernel);
    const double second = hop_success(cfg, cfg.r, cfg.d2, *t.psi_max, kernel);
    return clamp_probability(1.0 - first * second);
}

double outage_oma(const ScenarioConfig& cfg, Destination dest, Kernel kernel)
{
    const bool first_dest = dest == Destination::D1;
    const double psi = threshold(first_dest ? cfg.noma.rate1 : cfg.noma.rate2, Scheme::OMA);
    const Position target = first_dest ? cfg.d1 : cfg.d2;
    const double first = hop_success(cfg, cfg.s, cfg.r, psi, kernel);
    const double second = hop_success(cfg, cfg.r, target, psi, kernel);
    return clamp_probability(1.0 - first * second);
}

}  // namespace noma
