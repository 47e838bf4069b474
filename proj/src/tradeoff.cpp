#include "vr3c/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vr3c {

namespace {

// Grid points at or below f_min * (1 + this margin) are treated as
// device-infeasible instead of sampling the R1 pole.
constexpr double kF1PoleMargin = 1e-6;

void check_grid(const SweepSpec& spec) {
    if (spec.grid.empty())
        throw EmptyGrid("sweep grid is empty");
    for (std::size_t i = 0; i + 1 < spec.grid.size(); ++i) {
        if (!(spec.grid[i] < spec.grid[i + 1]))
            throw SchemaError("grid: points must be strictly increasing");
    }
    for (double v : spec.grid) {
        switch (spec.axis) {
        case SweepAxis::CacheFraction:
            if (!(v >= 0.0 && v <= 1.0))
                throw SchemaError("grid: cache fraction must be in [0,1]");
            break;
        case SweepAxis::EnergyFraction:
        case SweepAxis::Energy:
            if (!(v >= 0.0))
                throw SchemaError("grid: energy values must be >= 0");
            break;
        case SweepAxis::DeviceFreq:
            if (!(v > 0.0))
                throw SchemaError("grid: device frequency must be > 0");
            break;
        }
    }
}

} // namespace

const char* to_string(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::CacheFraction:
        return "cache_fraction";
    case SweepAxis::EnergyFraction:
        return "energy_fraction";
    case SweepAxis::DeviceFreq:
        return "device_freq_hz";
    case SweepAxis::Energy:
        return "energy_budget_j";
    }
    return "unknown";
}

const char* to_string(F1Regime regime) {
    switch (regime) {
    case F1Regime::MonotoneIncreasing:
        return "MONOTONE_INCREASING";
    case F1Regime::Unimodal:
        return "UNIMODAL";
    case F1Regime::FlatThenCacheLimited:
        return "FLAT_THEN_CACHE_LIMITED";
    }
    return "UNKNOWN";
}

SymmetricInstance with_axis_value(SymmetricInstance inst, SweepAxis axis, double value) {
    switch (axis) {
    case SweepAxis::CacheFraction: {
        const long long cache =
            std::clamp(static_cast<long long>(std::llround(value * static_cast<double>(inst.viewpoints))),
                       0LL, inst.viewpoints);
        inst.cache_fovs = cache;
        inst.config.cache_bits = static_cast<double>(cache) * inst.task.input_bits;
        break;
    }
    case SweepAxis::EnergyFraction:
        inst.config.energy_budget_j = value * inst.offload_energy_j();
        break;
    case SweepAxis::DeviceFreq:
        inst.config.device_freq_hz = value;
        break;
    case SweepAxis::Energy:
        inst.config.energy_budget_j = value;
        break;
    }
    return inst;
}

std::vector<TradeoffPoint> sweep(const SweepSpec& spec) {
    check_grid(spec);
    const double f_min = min_device_frequency(spec.base.task);

    std::vector<TradeoffPoint> points;
    points.reserve(spec.grid.size());
    for (double value : spec.grid) {
        const SymmetricInstance inst = with_axis_value(spec.base, spec.axis, value);

        TradeoffPoint p;
        p.axis_value = value;
        const double r0 = server_rate_floor(inst.task, inst.config.server_freq_hz);
        if (spec.axis == SweepAxis::DeviceFreq &&
            inst.config.device_freq_hz <= f_min * (1.0 + kF1PoleMargin)) {
            // Device cannot compute in time: no offloading, rate floor stays R0.
            p.device_infeasible = true;
            p.min_rate = r0;
            p.regime = SymmetricRegime::EnergyLimitedCached;
            p.gain_fraction = 0.0;
        } else {
            const SymmetricSolution sol = optimal_policy(inst);
            p.min_rate = sol.min_rate;
            p.regime = sol.regime;
            p.gain_fraction = 1.0 - sol.min_rate / r0;
            p.offload_count = sol.offload_count;
            p.cache_count = sol.cache_count;
            p.energy_used_j = static_cast<double>(sol.offload_count) * inst.offload_energy_j() /
                              static_cast<double>(inst.viewpoints);
            p.cache_used_bits = static_cast<double>(sol.cache_count) * inst.task.input_bits;
        }
        points.push_back(p);
    }
    return points;
}

long long min_cache_size(const SymmetricInstance& inst) {
    return max_offload_count(inst);
}

long long min_cache_size(const Scenario& scenario) {
    return min_cache_size(symmetric_instance(scenario));
}

double optimal_f1_no_cache(const ProjectionTask& task, double server_freq_hz) {
    double r0 = 0.0;
    try {
        r0 = server_rate_floor(task, server_freq_hz);
    } catch (const InfeasibleServerCompute&) {
        throw DomainError("optimal_f1_no_cache: R0 undefined (tau <= I*w/f0)");
    }
    const double tx_slack = task.deadline_s - task.input_bits / r0;
    if (!(tx_slack > 0.0))
        throw DomainError("optimal_f1_no_cache: f_R undefined (tau <= I/R0)");
    const double f_r = task.cycles() / tx_slack;
    const double lead = 1.0 - task.input_bits / (4.0 * r0 * task.deadline_s);
    const double discriminant = lead * lead * f_r * f_r - min_device_frequency(task) * f_r;
    if (discriminant < 0.0)
        throw DomainError("optimal_f1_no_cache: negative discriminant");
    return lead * f_r + std::sqrt(discriminant);
}

F1Regime classify_f1_regime(const SymmetricInstance& inst) {
    const double r0 = server_rate_floor(inst.task, inst.config.server_freq_hz);
    const auto r1 = device_rate_floor(inst.task, inst.config.device_freq_hz);
    if (!r1)
        throw NotLocallyComputable("device compute time I*w/f1 exceeds the deadline");
    const long long d_max = max_offload_count(inst);
    const long long cache = std::clamp(inst.cache_fovs, 0LL, inst.viewpoints);
    if (d_max <= cache)
        return F1Regime::MonotoneIncreasing;
    if (r0 > *r1)
        return F1Regime::Unimodal;
    return F1Regime::FlatThenCacheLimited;
}

F1Regime classify_f1_regime(const Scenario& scenario) {
    return classify_f1_regime(symmetric_instance(scenario));
}

} // namespace vr3c
