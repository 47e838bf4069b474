#include "vr3c/model.hpp"

#include <cmath>
#include <string>

namespace vr3c {

bool within_budget(double used, double limit) {
    return used <= limit + 1e-9 * std::max(std::fabs(used), std::fabs(limit));
}

namespace {

void check_task_fields(const ProjectionTask& t, std::size_t index) {
    const auto field = [&](const char* name) {
        return "task " + std::to_string(index) + ": " + name;
    };
    if (!(t.input_bits > 0.0))
        throw InvalidScenario(field("input_bits must be > 0"));
    if (!(t.output_bits > 0.0))
        throw InvalidScenario(field("output_bits must be > 0"));
    if (!(t.cycles_per_bit > 0.0))
        throw InvalidScenario(field("cycles_per_bit must be > 0"));
    if (!(t.deadline_s > 0.0))
        throw InvalidScenario(field("deadline_s must be > 0"));
    if (!(t.probability >= 0.0 && t.probability <= 1.0))
        throw InvalidScenario(field("probability must be in [0,1]"));
}

void check_config_fields(const SystemConfig& c) {
    if (!(c.server_freq_hz > 0.0))
        throw InvalidScenario("config: server_freq_hz must be > 0");
    if (!(c.device_freq_hz > 0.0))
        throw InvalidScenario("config: device_freq_hz must be > 0");
    if (!(c.energy_coeff > 0.0))
        throw InvalidScenario("config: energy_coeff must be > 0");
    if (!(c.energy_budget_j >= 0.0))
        throw InvalidScenario("config: energy_budget_j must be >= 0");
    if (!(c.cache_bits >= 0.0))
        throw InvalidScenario("config: cache_bits must be >= 0");
}

} // namespace

long long Scenario::cache_fovs() const {
    if (tasks.empty())
        return 0;
    return static_cast<long long>(std::floor(config.cache_bits / tasks.front().input_bits));
}

Scenario make_symmetric_scenario(ProjectionTask task, long long n, SystemConfig config) {
    if (n < 1)
        throw InvalidScenario("symmetric scenario needs n >= 1");
    task.probability = 1.0 / static_cast<double>(n);
    Scenario s;
    s.kind = ScenarioKind::Symmetric;
    s.tasks.assign(static_cast<std::size_t>(n), task);
    s.config = config;
    validate_scenario(s);
    return s;
}

Scenario make_heterogeneous_scenario(std::vector<ProjectionTask> tasks, SystemConfig config) {
    Scenario s;
    s.kind = ScenarioKind::Heterogeneous;
    s.tasks = std::move(tasks);
    s.config = config;
    validate_scenario(s);
    return s;
}

void validate_scenario(const Scenario& scenario) {
    if (scenario.tasks.empty())
        throw InvalidScenario("scenario needs at least one viewpoint");
    check_config_fields(scenario.config);
    double prob_sum = 0.0;
    for (std::size_t i = 0; i < scenario.tasks.size(); ++i) {
        check_task_fields(scenario.tasks[i], i);
        prob_sum += scenario.tasks[i].probability;
    }
    if (std::fabs(prob_sum - 1.0) > 1e-9)
        throw InvalidScenario("probabilities must sum to 1 (got " + std::to_string(prob_sum) + ")");
    if (scenario.kind == ScenarioKind::Symmetric) {
        const ProjectionTask& first = scenario.tasks.front();
        for (const ProjectionTask& t : scenario.tasks) {
            if (t.input_bits != first.input_bits || t.output_bits != first.output_bits ||
                t.cycles_per_bit != first.cycles_per_bit || t.deadline_s != first.deadline_s ||
                t.probability != first.probability)
                throw InvalidScenario("symmetric scenario requires identical tasks and uniform probabilities");
        }
    }
}

std::vector<std::string> scenario_warnings(const Scenario& scenario) {
    std::vector<std::string> warnings;
    for (std::size_t i = 0; i < scenario.tasks.size(); ++i) {
        const ProjectionTask& t = scenario.tasks[i];
        if (t.output_bits / t.input_bits < 2.0) {
            warnings.push_back("task " + std::to_string(i) +
                               ": output/input ratio below 2; stereo projection usually at "
                               "least doubles the data size");
        }
        if (scenario.kind == ScenarioKind::Symmetric)
            break; // identical tasks, one note is enough
    }
    return warnings;
}

double server_rate_floor(const ProjectionTask& task, double server_freq_hz) {
    const double slack = task.deadline_s - task.cycles() / server_freq_hz;
    if (!(slack > 0.0))
        throw InfeasibleServerCompute("server compute time I*w/f0 exceeds the deadline");
    return task.output_bits / slack;
}

std::optional<double> device_rate_floor(const ProjectionTask& task, double device_freq_hz) {
    const double slack = task.deadline_s - task.cycles() / device_freq_hz;
    if (!(slack > 0.0))
        return std::nullopt;
    return task.input_bits / slack;
}

double min_device_frequency(const ProjectionTask& task) {
    return task.cycles() / task.deadline_s;
}

double required_rate(const ProjectionTask& task, bool cached, bool offloaded,
                     double server_freq_hz, double device_freq_hz) {
    if (!offloaded)
        return server_rate_floor(task, server_freq_hz);
    if (cached)
        return 0.0;
    const auto floor = device_rate_floor(task, device_freq_hz);
    if (!floor)
        throw NotLocallyComputable("device compute time I*w/f1 exceeds the deadline");
    return *floor;
}

double average_rate(const Scenario& scenario, const Policy& policy) {
    const std::size_t n = scenario.tasks.size();
    if (policy.cache.size() != n || policy.offload.size() != n)
        throw LengthMismatch("policy length does not match scenario");
    double rate = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        rate += scenario.tasks[i].probability *
                required_rate(scenario.tasks[i], policy.cache[i] != 0, policy.offload[i] != 0,
                              scenario.config.server_freq_hz, scenario.config.device_freq_hz);
    }
    return rate;
}

FeasibilityReport check_feasibility(const Scenario& scenario, const Policy& policy) {
    const std::size_t n = scenario.tasks.size();
    if (policy.cache.size() != n || policy.offload.size() != n)
        throw LengthMismatch("policy length does not match scenario");

    FeasibilityReport report;
    report.cache_limit_bits = scenario.config.cache_bits;
    report.energy_limit_j = scenario.config.energy_budget_j;
    report.latency_ok.resize(n, 1);

    bool latency_all_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const ProjectionTask& t = scenario.tasks[i];
        if (policy.cache[i])
            report.cache_used_bits += t.input_bits;
        if (policy.offload[i])
            report.energy_used_j += t.probability * scenario.config.offload_energy_j(t.cycles());

        bool ok = true;
        if (!policy.offload[i]) {
            ok = t.deadline_s - t.cycles() / scenario.config.server_freq_hz > 0.0;
        } else if (!policy.cache[i]) {
            ok = device_rate_floor(t, scenario.config.device_freq_hz).has_value();
        }
        report.latency_ok[i] = ok ? 1 : 0;
        latency_all_ok = latency_all_ok && ok;
    }

    report.cache_ok = within_budget(report.cache_used_bits, report.cache_limit_bits);
    report.energy_ok = within_budget(report.energy_used_j, report.energy_limit_j);
    report.overall = report.cache_ok && report.energy_ok && latency_all_ok;
    return report;
}

Policy normalize_policy(Policy policy) {
    if (policy.cache.size() != policy.offload.size())
        throw LengthMismatch("policy cache/offload lengths differ");
    for (std::size_t i = 0; i < policy.cache.size(); ++i) {
        if (!policy.offload[i])
            policy.cache[i] = 0;
    }
    return policy;
}

} // namespace vr3c
