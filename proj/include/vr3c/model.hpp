#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vr3c/errors.hpp"

namespace vr3c {

/// One VR viewpoint's projection workload: 2D-FOV input size, 3D-FOV output
/// size, compute density, playback deadline and request probability.
///
/// Units are fixed across the library: bits, cycles/bit, seconds, and a
/// dimensionless probability.
struct ProjectionTask {
    double input_bits = 0.0;     // I
    double output_bits = 0.0;    // O
    double cycles_per_bit = 0.0; // w
    double deadline_s = 0.0;     // tau
    double probability = 0.0;    // P

    double cycles() const { return input_bits * cycles_per_bit; }
};

/// Platform resources shared by all viewpoints.
///
/// energy_coeff is the hardware constant k in the per-cycle energy k*f1^2;
/// its units are whatever makes k*f1^2*I*w come out in Joules.
struct SystemConfig {
    double server_freq_hz = 0.0;  // f0, cycles/s at the MEC server
    double device_freq_hz = 0.0;  // f1, cycles/s at the VR device
    double energy_coeff = 0.0;    // k
    double energy_budget_j = 0.0; // average energy available per deadline period
    double cache_bits = 0.0;      // C', device cache capacity in bits

    /// Energy spent computing one projection of `cycles` cycles locally.
    double offload_energy_j(double cycles) const {
        return energy_coeff * device_freq_hz * device_freq_hz * cycles;
    }
};

enum class ScenarioKind { Symmetric, Heterogeneous };

/// A task set plus the platform it runs on. Construct through
/// make_symmetric_scenario / make_heterogeneous_scenario so the invariants
/// (positive fields, probabilities summing to one) are enforced.
struct Scenario {
    ScenarioKind kind = ScenarioKind::Heterogeneous;
    std::vector<ProjectionTask> tasks;
    SystemConfig config;

    std::size_t size() const { return tasks.size(); }

    /// Symmetric cache capacity in whole 2D FOVs: floor(C' / I).
    long long cache_fovs() const;
};

/// Per-viewpoint caching (c) and offloading (d) indicators.
struct Policy {
    std::vector<std::uint8_t> cache;   // c_i
    std::vector<std::uint8_t> offload; // d_i

    std::size_t size() const { return offload.size(); }

    static Policy zeros(std::size_t n) {
        return Policy{std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0)};
    }
};

/// Outcome of checking a policy against the cache, energy and latency
/// constraints. Infeasibility is reported here, never thrown.
struct FeasibilityReport {
    bool cache_ok = false;
    double cache_used_bits = 0.0;
    double cache_limit_bits = 0.0;
    bool energy_ok = false;
    double energy_used_j = 0.0;
    double energy_limit_j = 0.0;
    std::vector<std::uint8_t> latency_ok; // per viewpoint: required floor defined
    bool overall = false;
};

/// Builds a symmetric scenario of n identical viewpoints with P_i = 1/n.
/// task.probability is ignored. Throws InvalidScenario on bad fields.
Scenario make_symmetric_scenario(ProjectionTask task, long long n, SystemConfig config);

/// Builds a heterogeneous scenario from per-viewpoint tasks.
/// Throws InvalidScenario on bad fields or probabilities not summing to one.
Scenario make_heterogeneous_scenario(std::vector<ProjectionTask> tasks, SystemConfig config);

/// Re-checks the construction invariants of an existing scenario.
void validate_scenario(const Scenario& scenario);

/// Non-fatal observations about a scenario (e.g. output/input ratio below
/// the stereo-projection doubling). Empty when nothing is noteworthy.
std::vector<std::string> scenario_warnings(const Scenario& scenario);

/// Least transmission rate meeting the deadline when the projection runs at
/// the MEC server: O / (tau - I*w/f0).
/// Throws InfeasibleServerCompute when tau <= I*w/f0.
double server_rate_floor(const ProjectionTask& task, double server_freq_hz);

/// Least transmission rate when the projection runs on the device without a
/// cached input: I / (tau - I*w/f1). Returns nullopt when the device cannot
/// meet the deadline at any rate (tau <= I*w/f1); that is a modeled outcome,
/// not an error, so heterogeneous solvers can pin those viewpoints to d_i=0.
std::optional<double> device_rate_floor(const ProjectionTask& task, double device_freq_hz);

/// Minimal device frequency that makes local projection meet the deadline:
/// I*w / tau.
double min_device_frequency(const ProjectionTask& task);

/// Rate floor for one viewpoint under (c_i, d_i) with the latency constraint
/// tight: R0 when d=0, R1 when d=1 and c=0, and 0 when d=1 and c=1.
/// Propagates InfeasibleServerCompute; throws NotLocallyComputable when the
/// policy demands an undefined device floor.
double required_rate(const ProjectionTask& task, bool cached, bool offloaded,
                     double server_freq_hz, double device_freq_hz);

/// Probability-weighted transmission rate of a policy: sum_i P_i * R_i.
/// Throws LengthMismatch when the policy does not match the scenario.
double average_rate(const Scenario& scenario, const Policy& policy);

FeasibilityReport check_feasibility(const Scenario& scenario, const Policy& policy);

/// Clears c_i wherever d_i = 0. Never changes the average rate and never
/// increases cache usage.
Policy normalize_policy(Policy policy);

/// Shared budget comparison: a resource sum counts as within budget up to a
/// 1e-9 relative slack, so exact-hit policies stay feasible while a zero
/// budget stays strict against any real usage.
bool within_budget(double used, double limit);

} // namespace vr3c
