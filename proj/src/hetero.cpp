#include "vr3c/hetero.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace vr3c {

namespace {

struct TaskRates {
    std::vector<double> server;              // R0_i, always defined
    std::vector<std::optional<double>> device; // R1_i, may be missing
    std::vector<double> offload_energy;      // P_i * k * f1^2 * I_i * w_i
};

TaskRates compute_rates(const Scenario& s) {
    TaskRates rates;
    const std::size_t n = s.tasks.size();
    rates.server.reserve(n);
    rates.device.reserve(n);
    rates.offload_energy.reserve(n);
    for (const ProjectionTask& t : s.tasks) {
        rates.server.push_back(server_rate_floor(t, s.config.server_freq_hz));
        rates.device.push_back(device_rate_floor(t, s.config.device_freq_hz));
        rates.offload_energy.push_back(t.probability * s.config.offload_energy_j(t.cycles()));
    }
    return rates;
}

HeteroSolveResult finish_result(const Scenario& s, Policy policy, HeteroMethod method,
                                int iterations) {
    HeteroSolveResult result;
    result.policy = normalize_policy(std::move(policy));
    result.objective = average_rate(s, result.policy);
    result.method = method;
    result.iterations = iterations;
    result.diagnostics = check_feasibility(s, result.policy);
    if (!result.diagnostics.overall)
        throw Error("internal: solver produced an infeasible policy");
    return result;
}

} // namespace

const char* to_string(HeteroMethod method) {
    switch (method) {
    case HeteroMethod::GA:
        return "GA";
    case HeteroMethod::MCA:
        return "MCA";
    case HeteroMethod::Oracle:
        return "ORACLE";
    }
    return "UNKNOWN";
}

KnapsackSolution knapsack_max(const KnapsackInstance& inst) {
    if (inst.values.size() != inst.weights.size())
        throw LengthMismatch("knapsack: values/weights lengths differ");
    if (inst.resolution < 1)
        throw SchemaError("knapsack: resolution must be >= 1");
    if (inst.budget < 0.0)
        throw SchemaError("knapsack: budget must be >= 0");

    const std::size_t n = inst.values.size();
    KnapsackSolution sol;
    sol.selection.assign(n, 0);
    if (inst.budget <= 0.0 || n == 0)
        return sol;

    // Items worth nothing are never selected; items heavier than the whole
    // budget cannot be.
    const auto q = static_cast<std::size_t>(inst.resolution);
    std::vector<std::size_t> items;
    std::vector<std::size_t> scaled;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(inst.weights[i] > 0.0))
            throw SchemaError("knapsack: weights must be > 0");
        if (!(inst.values[i] > 0.0))
            continue;
        const double cells = std::ceil(inst.weights[i] / inst.budget * static_cast<double>(q));
        if (cells > static_cast<double>(q))
            continue;
        items.push_back(i);
        scaled.push_back(static_cast<std::size_t>(cells));
    }
    if (items.empty())
        return sol;

    std::vector<double> best(q + 1, 0.0);
    const std::size_t words = (q + 1 + 63) / 64;
    std::vector<std::uint64_t> taken(items.size() * words, 0);
    for (std::size_t j = 0; j < items.size(); ++j) {
        const std::size_t w = scaled[j];
        const double v = inst.values[items[j]];
        std::uint64_t* row = taken.data() + j * words;
        for (std::size_t cap = q; cap >= w; --cap) {
            const double candidate = best[cap - w] + v;
            if (candidate > best[cap]) {
                best[cap] = candidate;
                row[cap / 64] |= std::uint64_t{1} << (cap % 64);
            }
        }
    }

    std::size_t cap = q;
    for (std::size_t j = items.size(); j-- > 0;) {
        const std::uint64_t* row = taken.data() + j * words;
        if (row[cap / 64] >> (cap % 64) & 1) {
            sol.selection[items[j]] = 1;
            sol.value += inst.values[items[j]];
            cap -= scaled[j];
        }
    }
    return sol;
}

HeteroSolveResult greedy_solve(const Scenario& scenario) {
    if (scenario.kind != ScenarioKind::Heterogeneous)
        throw NotHeterogeneous("greedy solver requires a heterogeneous scenario");

    const std::size_t n = scenario.tasks.size();
    const TaskRates rates = compute_rates(scenario);

    // Stage 1: joint allocation over locally computable viewpoints ordered
    // by cache value density P_i*R0_i/I_i.
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rates.device[i])
            order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ka = scenario.tasks[a].probability * rates.server[a] / scenario.tasks[a].input_bits;
        const double kb = scenario.tasks[b].probability * rates.server[b] / scenario.tasks[b].input_bits;
        if (ka != kb)
            return ka > kb;
        return a < b;
    });

    std::size_t cache_n = 0;
    double cache_sum = 0.0;
    while (cache_n < order.size()) {
        const double next = cache_sum + scenario.tasks[order[cache_n]].input_bits;
        if (next > scenario.config.cache_bits)
            break;
        cache_sum = next;
        ++cache_n;
    }
    std::size_t energy_n = 0;
    double energy_sum = 0.0;
    while (energy_n < order.size()) {
        const double next = energy_sum + rates.offload_energy[order[energy_n]];
        if (next > scenario.config.energy_budget_j)
            break;
        energy_sum = next;
        ++energy_n;
    }

    Policy policy = Policy::zeros(n);
    for (std::size_t j = 0; j < cache_n; ++j)
        policy.cache[order[j]] = 1;
    const std::size_t offload_n = std::min(energy_n, cache_n);
    double committed = 0.0;
    for (std::size_t j = 0; j < offload_n; ++j) {
        policy.offload[order[j]] = 1;
        committed += rates.offload_energy[order[j]];
    }

    // Stage 2: spend leftover energy on uncached viewpoints where local
    // computing beats server computing, by rate gain per Joule.
    if (energy_n > cache_n) {
        std::vector<std::size_t> pool;
        for (std::size_t i : order) {
            if (!policy.offload[i] && rates.server[i] > *rates.device[i])
                pool.push_back(i);
        }
        std::stable_sort(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) {
            const double ka = (rates.server[a] - *rates.device[a]) /
                              (scenario.config.offload_energy_j(scenario.tasks[a].cycles()));
            const double kb = (rates.server[b] - *rates.device[b]) /
                              (scenario.config.offload_energy_j(scenario.tasks[b].cycles()));
            if (ka != kb)
                return ka > kb;
            return a < b;
        });
        for (std::size_t i : pool) {
            const double next = committed + rates.offload_energy[i];
            if (next > scenario.config.energy_budget_j)
                break;
            committed = next;
            policy.offload[i] = 1;
        }
    }

    return finish_result(scenario, std::move(policy), HeteroMethod::GA, 0);
}

HeteroSolveResult mca_solve(const Scenario& scenario, const Policy& initial,
                            long long resolution, int iteration_cap) {
    const std::size_t n = scenario.tasks.size();
    if (initial.cache.size() != n || initial.offload.size() != n)
        throw LengthMismatch("initial policy length does not match scenario");
    if (!check_feasibility(scenario, initial).overall)
        throw InfeasibleInitial("initial policy violates a constraint");

    const TaskRates rates = compute_rates(scenario);
    Policy current = normalize_policy(initial);
    double objective = average_rate(scenario, current);

    int iterations = 0;
    while (iterations < iteration_cap) {
        ++iterations;
        const double before = objective;

        // Cache step: with d fixed, caching viewpoint i saves P_i*R1_i*d_i
        // under the cache capacity.
        {
            KnapsackInstance ki;
            ki.resolution = resolution;
            ki.budget = scenario.config.cache_bits;
            ki.values.resize(n, 0.0);
            ki.weights.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                ki.weights[i] = scenario.tasks[i].input_bits;
                if (current.offload[i] && rates.device[i])
                    ki.values[i] = scenario.tasks[i].probability * *rates.device[i];
            }
            Policy candidate = current;
            candidate.cache = knapsack_max(ki).selection;
            const double cand_obj = average_rate(scenario, candidate);
            if (cand_obj < objective) {
                current = std::move(candidate);
                objective = cand_obj;
            }
        }

        // Offload step: with c fixed, offloading viewpoint i saves
        // P_i*(R0_i - R1_i + R1_i*c_i) under the energy budget. Viewpoints
        // with no positive saving (or no device floor) stay at d_i = 0.
        {
            KnapsackInstance ki;
            ki.resolution = resolution;
            ki.budget = scenario.config.energy_budget_j;
            ki.values.resize(n, 0.0);
            ki.weights.resize(n, 1.0);
            for (std::size_t i = 0; i < n; ++i) {
                if (!rates.device[i])
                    continue;
                const double saving =
                    scenario.tasks[i].probability *
                    (rates.server[i] - *rates.device[i] + *rates.device[i] * (current.cache[i] ? 1.0 : 0.0));
                if (saving > 0.0 && rates.offload_energy[i] > 0.0) {
                    ki.values[i] = saving;
                    ki.weights[i] = rates.offload_energy[i];
                }
            }
            Policy candidate = current;
            candidate.offload = knapsack_max(ki).selection;
            candidate = normalize_policy(std::move(candidate));
            const double cand_obj = average_rate(scenario, candidate);
            if (cand_obj < objective) {
                current = std::move(candidate);
                objective = cand_obj;
            }
        }

        const double improvement = (before - objective) / std::max(std::fabs(before), 1e-300);
        if (improvement < 1e-12)
            break;
    }

    return finish_result(scenario, std::move(current), HeteroMethod::MCA, iterations);
}

HeteroSolveResult brute_force_solve(const Scenario& scenario, int size_cap) {
    const std::size_t n = scenario.tasks.size();
    if (n > static_cast<std::size_t>(size_cap))
        throw TooLarge("instance exceeds the enumeration cap of " + std::to_string(size_cap));

    const TaskRates rates = compute_rates(scenario);

    Policy current = Policy::zeros(n);
    Policy best_policy;
    double best_rate = 0.0;
    bool found = false;

    // Depth-first over the normalized per-viewpoint states in the order
    // (d=0), (d=1,c=0), (d=1,c=1), which visits policies in lexicographic
    // (d, c) order; keeping the first strict minimum makes ties
    // deterministic.
    auto visit = [&](auto&& self, std::size_t depth, double rate, double energy,
                     double cache) -> void {
        if (!within_budget(energy, scenario.config.energy_budget_j) ||
            !within_budget(cache, scenario.config.cache_bits))
            return;
        if (depth == n) {
            if (!found || rate < best_rate) {
                found = true;
                best_rate = rate;
                best_policy = current;
            }
            return;
        }
        const ProjectionTask& t = scenario.tasks[depth];
        current.offload[depth] = 0;
        current.cache[depth] = 0;
        self(self, depth + 1, rate + t.probability * rates.server[depth], energy, cache);
        if (rates.device[depth]) {
            current.offload[depth] = 1;
            self(self, depth + 1, rate + t.probability * *rates.device[depth],
                 energy + rates.offload_energy[depth], cache);
            current.cache[depth] = 1;
            self(self, depth + 1, rate, energy + rates.offload_energy[depth],
                 cache + t.input_bits);
            current.offload[depth] = 0;
            current.cache[depth] = 0;
        }
    };
    visit(visit, 0, 0.0, 0.0, 0.0);

    if (!found)
        throw Error("internal: enumeration found no feasible policy");
    return finish_result(scenario, std::move(best_policy), HeteroMethod::Oracle, 0);
}

Scenario zipf_scenario(long long n, double gamma, double input_bits_min, double input_bits_max,
                       double output_input_ratio, double cycles_per_bit, double deadline_s,
                       SystemConfig config, std::uint64_t seed) {
    if (n < 1)
        throw InvalidScenario("zipf: n must be >= 1");
    if (!(gamma >= 0.0))
        throw InvalidScenario("zipf: exponent must be >= 0");
    if (!(input_bits_min > 0.0) || !(input_bits_max >= input_bits_min))
        throw InvalidScenario("zipf: need 0 < input_bits_min <= input_bits_max");
    if (!(output_input_ratio > 0.0))
        throw InvalidScenario("zipf: output_input_ratio must be > 0");
    if (!(cycles_per_bit > 0.0) || !(deadline_s > 0.0))
        throw InvalidScenario("zipf: cycles_per_bit and deadline_s must be > 0");

    std::vector<double> popularity(static_cast<std::size_t>(n));
    double z = 0.0;
    for (long long i = 0; i < n; ++i) {
        popularity[static_cast<std::size_t>(i)] = std::pow(static_cast<double>(i + 1), -gamma);
        z += popularity[static_cast<std::size_t>(i)];
    }

    // Map raw 64-bit draws to [0,1) explicitly so scenarios are reproducible
    // across standard libraries.
    std::mt19937_64 rng(seed);
    const auto uniform01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::vector<ProjectionTask> tasks(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        ProjectionTask& t = tasks[i];
        t.input_bits = input_bits_min + uniform01() * (input_bits_max - input_bits_min);
        t.output_bits = output_input_ratio * t.input_bits;
        t.cycles_per_bit = cycles_per_bit;
        t.deadline_s = deadline_s;
        t.probability = popularity[i] / z;
    }
    return make_heterogeneous_scenario(std::move(tasks), config);
}

std::vector<HeteroSweepPoint> ga_tradeoff_sweep(const Scenario& base,
                                                const std::vector<double>& cache_fractions,
                                                const std::vector<double>& energy_fractions) {
    if (cache_fractions.empty() || energy_fractions.empty())
        throw EmptyGrid("hetero sweep grid is empty");

    double total_input_bits = 0.0;
    double full_energy = 0.0;
    double base_rate = 0.0;
    for (const ProjectionTask& t : base.tasks) {
        total_input_bits += t.input_bits;
        full_energy += t.probability * base.config.offload_energy_j(t.cycles());
        base_rate += t.probability * server_rate_floor(t, base.config.server_freq_hz);
    }

    std::vector<HeteroSweepPoint> points;
    points.reserve(cache_fractions.size() * energy_fractions.size());
    for (double ef : energy_fractions) {
        for (double cf : cache_fractions) {
            Scenario s = base;
            s.config.cache_bits = cf * total_input_bits;
            s.config.energy_budget_j = ef * full_energy;
            const HeteroSolveResult res = greedy_solve(s);
            HeteroSweepPoint p;
            p.cache_fraction = cf;
            p.energy_fraction = ef;
            p.objective = res.objective;
            p.gain_fraction = 1.0 - res.objective / base_rate;
            p.energy_used_j = res.diagnostics.energy_used_j;
            p.cache_used_bits = res.diagnostics.cache_used_bits;
            points.push_back(p);
        }
    }
    return points;
}

} // namespace vr3c
