#pragma once

#include <utility>

#include "vr3c/model.hpp"

namespace vr3c {

/// Which constraint shapes the optimal symmetric policy.
enum class SymmetricRegime {
    EnergyLimitedCached,   // every offloaded task also fits in cache
    EnergyLimitedUncached, // offloading pays even without caching (R0 > R1)
    CacheLimited,          // offloading pays only through caching (R0 <= R1)
};

const char* to_string(SymmetricRegime regime);

/// The scalar view of a symmetric scenario: one task, a viewpoint count and
/// a cache capacity in whole FOVs. Solvers work on this form so sweeps can
/// vary resources without rebuilding task vectors.
struct SymmetricInstance {
    ProjectionTask task; // probability = 1/n
    long long viewpoints = 0;
    long long cache_fovs = 0;
    SystemConfig config;

    /// Energy to compute one projection locally, k*f1^2*I*w.
    double offload_energy_j() const { return config.offload_energy_j(task.cycles()); }
};

/// Extracts the scalar instance. Throws NotSymmetric for heterogeneous input.
SymmetricInstance symmetric_instance(const Scenario& scenario);

struct SymmetricSolution {
    long long offload_count = 0; // d*
    long long cache_count = 0;   // cached-and-offloaded viewpoints
    Policy policy;               // canonical layout: prefix offloads, prefix caches
    double min_rate = 0.0;       // R*
    SymmetricRegime regime = SymmetricRegime::EnergyLimitedCached;
    double gain_no_cache = 0.0;   // (R0-R1)/N * d*
    double gain_with_cache = 0.0; // R1/N * min(d*, C)
};

/// Energy-limited offload ceiling floor(N*E/(k*f1^2*I*w)), clamped to [0, N].
long long max_offload_count(const SymmetricInstance& inst);
long long max_offload_count(const Scenario& scenario);

/// Optimal number of offloaded viewpoints and the regime that produced it.
/// Requires both rate floors to be defined; throws otherwise.
std::pair<long long, SymmetricRegime> optimal_offload_count(const SymmetricInstance& inst);
std::pair<long long, SymmetricRegime> optimal_offload_count(const Scenario& scenario);

/// Minimum achievable average transmission rate R*, evaluated at the floored
/// offload count so the value always matches a realizable policy.
std::pair<double, SymmetricRegime> min_average_rate(const SymmetricInstance& inst);
std::pair<double, SymmetricRegime> min_average_rate(const Scenario& scenario);

/// Full optimal solution with the canonical policy layout (viewpoints are
/// exchangeable, so callers may permute the layout afterwards).
SymmetricSolution optimal_policy(const SymmetricInstance& inst);
SymmetricSolution optimal_policy(const Scenario& scenario);

/// Splits R0 - R* into the local-computing gain without caching and the
/// additional gain from caching.
std::pair<double, double> gain_decomposition(const SymmetricInstance& inst);
std::pair<double, double> gain_decomposition(const Scenario& scenario);

} // namespace vr3c
