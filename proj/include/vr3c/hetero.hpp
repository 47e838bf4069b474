#pragma once

#include <cstdint>
#include <vector>

#include "vr3c/model.hpp"

namespace vr3c {

enum class HeteroMethod { GA, MCA, Oracle };

const char* to_string(HeteroMethod method);

struct HeteroSolveResult {
    Policy policy; // normalized
    double objective = 0.0; // average transmission rate, bit/s
    HeteroMethod method = HeteroMethod::GA;
    int iterations = 0; // MCA only
    FeasibilityReport diagnostics;
};

/// A plain 0/1 maximization knapsack with real-valued weights mapped onto an
/// integer grid of `resolution` cells by ceiling, which keeps every returned
/// selection feasible on the true weights.
struct KnapsackInstance {
    std::vector<double> values;  // >= 0
    std::vector<double> weights; // > 0
    double budget = 0.0;
    long long resolution = 100000; // Q
};

struct KnapsackSolution {
    std::vector<std::uint8_t> selection;
    double value = 0.0;
};

KnapsackSolution knapsack_max(const KnapsackInstance& inst);

/// Two-stage greedy heuristic: a joint cache+offload allocation over
/// viewpoints sorted by P_i*R0_i/I_i, then additional offloading of
/// uncached viewpoints by energy efficiency while budget remains.
/// O(N log N); throws NotHeterogeneous for symmetric input.
HeteroSolveResult greedy_solve(const Scenario& scenario);

/// Alternating-knapsack local search on the bilinear objective: optimizes
/// the cache vector with offloads fixed, then the offload vector with the
/// cache fixed, accepting only strict improvements, until an iteration
/// improves by < 1e-12 relative or the cap is hit.
/// Throws InfeasibleInitial when the seed policy violates a constraint.
HeteroSolveResult mca_solve(const Scenario& scenario, const Policy& initial,
                            long long resolution = 100000, int iteration_cap = 100);

/// Exact minimizer by enumeration of the 3^N normalized per-viewpoint
/// states; ties broken by lexicographically smallest (d, c).
/// Throws TooLarge when N exceeds the cap.
HeteroSolveResult brute_force_solve(const Scenario& scenario, int size_cap = 14);

/// Deterministic Zipf-popularity scenario: P_i proportional to i^-gamma and
/// input sizes drawn uniformly from [input_bits_min, input_bits_max] by the
/// seeded generator; outputs scale by output_input_ratio; w and tau shared.
Scenario zipf_scenario(long long n, double gamma, double input_bits_min, double input_bits_max,
                       double output_input_ratio, double cycles_per_bit, double deadline_s,
                       SystemConfig config, std::uint64_t seed);

/// One cell of the heterogeneous trade-off surface. Fractions are relative
/// to full resources: cache_fraction = C'/sum(I_i), energy_fraction =
/// E/sum(P_i k f1^2 I_i w_i); base_rate is the no-offload average rate.
struct HeteroSweepPoint {
    double cache_fraction = 0.0;
    double energy_fraction = 0.0;
    double objective = 0.0;
    double gain_fraction = 0.0; // 1 - objective / base_rate
    double energy_used_j = 0.0;
    double cache_used_bits = 0.0;
};

/// Evaluates the greedy solver over the cache x energy fraction grid,
/// ordered energy-major then cache index. The base scenario's own cache and
/// energy budgets are ignored.
std::vector<HeteroSweepPoint> ga_tradeoff_sweep(const Scenario& base,
                                                const std::vector<double>& cache_fractions,
                                                const std::vector<double>& energy_fractions);

} // namespace vr3c
