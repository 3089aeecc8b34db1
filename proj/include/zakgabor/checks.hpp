#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zakgabor {

/// Scale knobs for the oracle cross-check suites.  The defaults reproduce
/// the full acceptance configuration.
struct CheckConfig {
    std::int64_t max_order = 48;
    std::uint64_t seed = 7;
    double tol = 1e-10;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_dev = 0.0;
    long instances = 0;
    std::string note;            // extra findings (e.g. the fiber-reading verdict)
    std::string counterexample;  // JSON blob for the first failure, else empty
};

CheckResult check_zak_unitarity(const CheckConfig& cfg);
CheckResult check_quasi_periodicity(const CheckConfig& cfg);
CheckResult check_spectral_identity(const CheckConfig& cfg);
CheckResult check_bounds_consistency(const CheckConfig& cfg);
CheckResult check_divisor_condition(const CheckConfig& cfg);
CheckResult check_quotient_duality(const CheckConfig& cfg);
CheckResult check_complete_minimal(const CheckConfig& cfg);
CheckResult check_support_condition(const CheckConfig& cfg);
CheckResult check_modulation_average(const CheckConfig& cfg);
CheckResult check_ti_fiberization(const CheckConfig& cfg);
CheckResult check_reading_disambiguation(const CheckConfig& cfg);
CheckResult check_three_routes(const CheckConfig& cfg);
CheckResult check_convention_scaling(const CheckConfig& cfg);

std::vector<CheckResult> run_all_checks(const CheckConfig& cfg);

}  // namespace zakgabor
