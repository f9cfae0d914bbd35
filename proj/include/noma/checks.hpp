#pragma once

#include "noma/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace noma::checks {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckOptions {
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 42;
    unsigned workers = 0;
};

/// Exact kernel vs Monte Carlo at lambda in {1e-4, 1e-3, 5e-3}, both
/// schemes, both events: |z| <= 3. `use_paper_kernel` swaps the analytic side.
CheckResult analytic_vs_simulation(const CheckOptions& opt, bool use_paper_kernel = false);

/// Closed-form alpha=2 transform vs quadrature on a 50-point grid, and the
/// alpha=4 integral vs pi*sqrt(2)/2.
CheckResult laplace_closed_vs_quadrature();

/// First-order Taylor coefficient vs the bracket form, and orders 1-2 vs
/// central differences on 50 random configurations.
CheckResult derivative_correctness();

/// Empirical E[exp(-s I)] per interferer component vs the analytic transform.
CheckResult pgfl_empirical(const CheckOptions& opt);

/// Degenerate thresholds give outage exactly 1; no interferers give exactly 0.
CheckResult degenerate_regime(const CheckOptions& opt);

CheckResult figure3_ordering();
CheckResult figure4_ordering();
CheckResult figure5_monotone();
CheckResult gamma_sum_identity();

/// Paper vs exact kernel gap over the lambda grid, equality at m=1.
CheckResult kernel_gap();

/// Window doubling moves every estimate by less than one standard error.
CheckResult window_doubling(const CheckOptions& opt);

/// Checks that need no Monte Carlo beyond a few thousand trials.
std::vector<CheckResult> quick_suite(const CheckOptions& opt);

}  // namespace noma::checks
