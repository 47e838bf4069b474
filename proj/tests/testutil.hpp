#pragma once

// Shared test helpers: an exhaustive reference solver and random instance
// generators. The reference solver computes rate floors and constraint
// checks directly from the task fields, independent of the library code it
// is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "vr3c/model.hpp"

namespace testutil {

struct OracleResult {
    bool found = false;
    double rate = 0.0;
    std::vector<int> offload;
    std::vector<int> cache;
};

inline bool oracle_within(double used, double limit) {
    return used <= limit + 1e-9 * std::max(std::fabs(used), std::fabs(limit));
}

// Exhaustive minimum over per-viewpoint states. States per viewpoint:
// (d=0,c=0), (d=1,c=0), (d=1,c=1); with include_unnormalized also (d=0,c=1),
// which exercises the claim that normalized policies lose nothing.
inline OracleResult enumerate_policies(const vr3c::Scenario& s, bool include_unnormalized = false) {
    const std::size_t n = s.tasks.size();
    std::vector<double> r0(n), energy(n);
    std::vector<double> r1(n, -1.0); // -1 = device-infeasible
    for (std::size_t i = 0; i < n; ++i) {
        const auto& t = s.tasks[i];
        const double server_slack = t.deadline_s - t.input_bits * t.cycles_per_bit / s.config.server_freq_hz;
        r0[i] = t.output_bits / server_slack; // instances are built server-feasible
        const double device_slack = t.deadline_s - t.input_bits * t.cycles_per_bit / s.config.device_freq_hz;
        if (device_slack > 0.0)
            r1[i] = t.input_bits / device_slack;
        energy[i] = t.probability * s.config.energy_coeff * s.config.device_freq_hz *
                    s.config.device_freq_hz * t.input_bits * t.cycles_per_bit;
    }

    OracleResult best;
    std::vector<int> d(n, 0), c(n, 0);
    // state order (d,c): (0,0) < (0,1) < (1,0) < (1,1); the unnormalized
    // (0,1) state is only visited on request.
    const auto visit = [&](auto&& self, std::size_t depth, double rate, double e_used,
                           double c_used) -> void {
        if (!oracle_within(e_used, s.config.energy_budget_j) ||
            !oracle_within(c_used, s.config.cache_bits))
            return;
        if (depth == n) {
            if (!best.found || rate < best.rate) {
                best.found = true;
                best.rate = rate;
                best.offload = d;
                best.cache = c;
            }
            return;
        }
        const auto& t = s.tasks[depth];
        d[depth] = 0;
        c[depth] = 0;
        self(self, depth + 1, rate + t.probability * r0[depth], e_used, c_used);
        if (include_unnormalized) {
            c[depth] = 1;
            self(self, depth + 1, rate + t.probability * r0[depth], e_used, c_used + t.input_bits);
            c[depth] = 0;
        }
        if (r1[depth] >= 0.0) {
            d[depth] = 1;
            self(self, depth + 1, rate + t.probability * r1[depth], e_used + energy[depth], c_used);
            c[depth] = 1;
            self(self, depth + 1, rate, e_used + energy[depth], c_used + t.input_bits);
            c[depth] = 0;
        }
        d[depth] = 0;
    };
    visit(visit, 0, 0.0, 0.0, 0.0);
    return best;
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(engine() >> 11) * 0x1.0p-53);
    }
    long long integer(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Random symmetric scenario with both rate floors defined. Spans all three
// regimes: device slack is sometimes tight (pushing R1 above R0) and energy
// budgets range from empty to saturating.
inline vr3c::Scenario random_symmetric(Rng& rng, long long max_n = 10) {
    const long long n = rng.integer(1, max_n);
    vr3c::ProjectionTask t;
    t.input_bits = rng.uniform(1e5, 5e7);
    t.output_bits = t.input_bits * rng.uniform(1.2, 4.0);
    t.cycles_per_bit = rng.uniform(1.0, 200.0);
    t.deadline_s = rng.uniform(5e-3, 5e-2);
    const double cycles = t.input_bits * t.cycles_per_bit;
    vr3c::SystemConfig cfg;
    cfg.server_freq_hz = cycles / (t.deadline_s * rng.uniform(0.05, 0.9));
    cfg.device_freq_hz = cycles / (t.deadline_s * rng.uniform(0.05, 0.95));
    cfg.energy_coeff = 1e-27;
    const double per_task = cfg.energy_coeff * cfg.device_freq_hz * cfg.device_freq_hz * cycles;
    cfg.energy_budget_j = rng.uniform(0.0, 1.3) * per_task;
    cfg.cache_bits = static_cast<double>(rng.integer(0, n)) * t.input_bits;
    return vr3c::make_symmetric_scenario(t, n, cfg);
}

// Random heterogeneous scenario; a slice of viewpoints may be
// device-infeasible when allow_infeasible is set.
inline vr3c::Scenario random_heterogeneous(Rng& rng, long long n, double gamma,
                                           bool allow_infeasible = false) {
    std::vector<vr3c::ProjectionTask> tasks(static_cast<std::size_t>(n));
    double z = 0.0;
    for (long long i = 0; i < n; ++i)
        z += std::pow(static_cast<double>(i + 1), -gamma);
    vr3c::SystemConfig cfg;
    cfg.server_freq_hz = 1e11;
    cfg.device_freq_hz = 1e10;
    cfg.energy_coeff = 1e-27;

    double total_bits = 0.0, total_energy = 0.0;
    for (long long i = 0; i < n; ++i) {
        auto& t = tasks[static_cast<std::size_t>(i)];
        t.input_bits = rng.uniform(1e6, 3e7);
        t.output_bits = t.input_bits * rng.uniform(1.5, 3.5);
        t.deadline_s = rng.uniform(0.01, 0.03);
        // device compute fraction of the deadline; > 1 means not locally computable
        const double frac = allow_infeasible && rng.uniform(0.0, 1.0) < 0.2
                                ? rng.uniform(1.0, 1.5)
                                : rng.uniform(0.05, 0.9);
        t.cycles_per_bit = frac * t.deadline_s * cfg.device_freq_hz / t.input_bits;
        t.probability = std::pow(static_cast<double>(i + 1), -gamma) / z;
        total_bits += t.input_bits;
        total_energy += t.probability * cfg.energy_coeff * cfg.device_freq_hz *
                        cfg.device_freq_hz * t.input_bits * t.cycles_per_bit;
    }
    cfg.cache_bits = rng.uniform(0.0, 1.0) * total_bits;
    cfg.energy_budget_j = rng.uniform(0.0, 1.1) * total_energy;
    return vr3c::make_heterogeneous_scenario(std::move(tasks), cfg);
}

} // namespace testutil
