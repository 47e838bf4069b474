#include "vr3c/symmetric.hpp"

#include <algorithm>
#include <cmath>

namespace vr3c {

namespace {

struct Floors {
    double server; // R0
    double device; // R1
};

Floors rate_floors(const SymmetricInstance& inst) {
    const double r0 = server_rate_floor(inst.task, inst.config.server_freq_hz);
    const auto r1 = device_rate_floor(inst.task, inst.config.device_freq_hz);
    if (!r1)
        throw NotLocallyComputable("device compute time I*w/f1 exceeds the deadline");
    return {r0, *r1};
}

long long effective_cache_fovs(const SymmetricInstance& inst) {
    return std::clamp(inst.cache_fovs, 0LL, inst.viewpoints);
}

} // namespace

const char* to_string(SymmetricRegime regime) {
    switch (regime) {
    case SymmetricRegime::EnergyLimitedCached:
        return "ENERGY_LIMITED_CACHED";
    case SymmetricRegime::EnergyLimitedUncached:
        return "ENERGY_LIMITED_UNCACHED";
    case SymmetricRegime::CacheLimited:
        return "CACHE_LIMITED";
    }
    return "UNKNOWN";
}

SymmetricInstance symmetric_instance(const Scenario& scenario) {
    if (scenario.kind != ScenarioKind::Symmetric)
        throw NotSymmetric("operation requires a symmetric scenario");
    SymmetricInstance inst;
    inst.task = scenario.tasks.front();
    inst.viewpoints = static_cast<long long>(scenario.tasks.size());
    inst.cache_fovs = scenario.cache_fovs();
    inst.config = scenario.config;
    return inst;
}

long long max_offload_count(const SymmetricInstance& inst) {
    const double per_task = inst.offload_energy_j();
    const double raw =
        static_cast<double>(inst.viewpoints) * inst.config.energy_budget_j / per_task;
    if (!(raw > 0.0))
        return 0;
    const double floored = std::floor(raw);
    if (floored >= static_cast<double>(inst.viewpoints))
        return inst.viewpoints;
    return static_cast<long long>(floored);
}

long long max_offload_count(const Scenario& scenario) {
    return max_offload_count(symmetric_instance(scenario));
}

std::pair<long long, SymmetricRegime> optimal_offload_count(const SymmetricInstance& inst) {
    const Floors floors = rate_floors(inst);
    const long long d_max = max_offload_count(inst);
    const long long cache = effective_cache_fovs(inst);
    if (d_max <= cache)
        return {d_max, SymmetricRegime::EnergyLimitedCached};
    if (floors.server > floors.device)
        return {d_max, SymmetricRegime::EnergyLimitedUncached};
    return {cache, SymmetricRegime::CacheLimited};
}

std::pair<long long, SymmetricRegime> optimal_offload_count(const Scenario& scenario) {
    return optimal_offload_count(symmetric_instance(scenario));
}

std::pair<double, SymmetricRegime> min_average_rate(const SymmetricInstance& inst) {
    const Floors floors = rate_floors(inst);
    const auto [d_star, regime] = optimal_offload_count(inst);
    const double n = static_cast<double>(inst.viewpoints);
    const double cache = static_cast<double>(effective_cache_fovs(inst));
    switch (regime) {
    case SymmetricRegime::EnergyLimitedCached:
        return {floors.server * (1.0 - static_cast<double>(d_star) / n), regime};
    case SymmetricRegime::EnergyLimitedUncached:
        return {floors.server - (floors.server - floors.device) * static_cast<double>(d_star) / n -
                    floors.device * cache / n,
                regime};
    case SymmetricRegime::CacheLimited:
        return {floors.server * (1.0 - cache / n), regime};
    }
    return {floors.server, regime};
}

std::pair<double, SymmetricRegime> min_average_rate(const Scenario& scenario) {
    return min_average_rate(symmetric_instance(scenario));
}

SymmetricSolution optimal_policy(const SymmetricInstance& inst) {
    const auto [d_star, regime] = optimal_offload_count(inst);
    const auto [r_star, regime2] = min_average_rate(inst);
    (void)regime2;
    const long long cache_used = std::min(effective_cache_fovs(inst), d_star);

    SymmetricSolution sol;
    sol.offload_count = d_star;
    sol.cache_count = cache_used;
    sol.min_rate = r_star;
    sol.regime = regime;

    const auto n = static_cast<std::size_t>(inst.viewpoints);
    sol.policy = Policy::zeros(n);
    std::fill_n(sol.policy.offload.begin(), static_cast<std::size_t>(d_star), std::uint8_t{1});
    std::fill_n(sol.policy.cache.begin(), static_cast<std::size_t>(cache_used), std::uint8_t{1});

    const auto [gain_plain, gain_cached] = gain_decomposition(inst);
    sol.gain_no_cache = gain_plain;
    sol.gain_with_cache = gain_cached;

    // The closed form must price out to the emitted policy through the
    // per-viewpoint rate formulas.
    const double f0 = inst.config.server_freq_hz;
    const double f1 = inst.config.device_freq_hz;
    const double n_d = static_cast<double>(inst.viewpoints);
    const double policy_rate =
        (n_d - static_cast<double>(d_star)) / n_d * required_rate(inst.task, false, false, f0, f1) +
        static_cast<double>(d_star - cache_used) / n_d * required_rate(inst.task, false, true, f0, f1);
    if (std::fabs(policy_rate - sol.min_rate) > 1e-9 * std::max(1.0, std::fabs(sol.min_rate)))
        throw Error("internal: closed-form R* does not match the emitted policy");
    return sol;
}

SymmetricSolution optimal_policy(const Scenario& scenario) {
    return optimal_policy(symmetric_instance(scenario));
}

std::pair<double, double> gain_decomposition(const SymmetricInstance& inst) {
    const Floors floors = rate_floors(inst);
    const auto [d_star, regime] = optimal_offload_count(inst);
    (void)regime;
    const double n = static_cast<double>(inst.viewpoints);
    const long long cached = std::min(effective_cache_fovs(inst), d_star);
    return {(floors.server - floors.device) / n * static_cast<double>(d_star),
            floors.device / n * static_cast<double>(cached)};
}

std::pair<double, double> gain_decomposition(const Scenario& scenario) {
    return gain_decomposition(symmetric_instance(scenario));
}

} // namespace vr3c
