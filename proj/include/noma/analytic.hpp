#pragma once

#include "noma/laplace.hpp"
#include "noma/scenario.hpp"

#include <optional>

namespace noma {

enum class Kernel { Paper, Exact };

enum class Destination { D1, D2 };

/// Linear SIR threshold for a target rate. Cooperative NOMA spends two slots
/// per message (2^(2R) - 1); the OMA baseline spends four (2^(4R) - 1).
double threshold(double rate, Scheme scheme);

/// Decoding thresholds. psi1 and psi_max are empty in the degenerate regime
/// theta1 >= a1/a2, where the first message can never be decoded.
struct SirThresholds {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double psi2 = 0.0;
    std::optional<double> psi1;
    std::optional<double> psi_max;

    bool degenerate() const noexcept { return !psi1.has_value(); }
};

SirThresholds psi_values(const NomaParams& n);

/// Interference seen at `receiver` under the configured intensities.
InterferenceEnv make_env(const ScenarioConfig& cfg, Position receiver);

/// Omega = m psi / (mu r^-alpha upsilon): the argument at which the Laplace
/// transforms of the receiver's interference are evaluated.
double kernel_argument(int m_z, double psi, double mu, double r_link, double alpha_z, double ups);

/// Per-hop success probability with the incomplete-gamma expectation split
/// into a product over interferer classes (exact for m_z = 1 only).
double lambda_kernel_paper(int m_z, double psi, double mu, double r_link, double alpha_z, double ups,
                           const InterferenceEnv& env);

/// Per-hop success probability sum_k (-Omega)^k / k! * d^k/dOmega^k prod_c L_c(Omega)
/// over all four interferer components.
double lambda_kernel_exact(int m_z, double psi, double mu, double r_link, double alpha_z, double ups,
                           const InterferenceEnv& env);

/// Blockage-mixed success probability of one hop a -> b with threshold psi.
double hop_success(const ScenarioConfig& cfg, Position a, Position b, double psi, Kernel kernel);

/// Outage of the first message (relay and D1 both decode it).
double outage_o1(const ScenarioConfig& cfg, Kernel kernel);

/// Outage of the second message (relay and D2 decode both, SIC order).
double outage_o2(const ScenarioConfig& cfg, Kernel kernel);

/// Two-hop orthogonal baseline: dedicated slots, full power, threshold 2^(4R) - 1.
double outage_oma(const ScenarioConfig& cfg, Destination dest, Kernel kernel);

}  // namespace noma
