#include "vr3c/reports.hpp"

#include <sstream>

#include "vr3c/csvout.hpp"

namespace vr3c {

namespace {

std::string policy_bits(const std::vector<std::uint8_t>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t b : bits)
        s += b ? '1' : '0';
    return s;
}

struct PolicyCounts {
    long long offloaded = 0;
    long long cached = 0;
};

PolicyCounts count_policy(const Policy& policy) {
    PolicyCounts c;
    for (std::size_t i = 0; i < policy.size(); ++i) {
        c.offloaded += policy.offload[i];
        c.cached += policy.cache[i];
    }
    return c;
}

} // namespace

double base_average_rate(const Scenario& scenario) {
    double rate = 0.0;
    for (const ProjectionTask& t : scenario.tasks)
        rate += t.probability * server_rate_floor(t, scenario.config.server_freq_hz);
    return rate;
}

std::string symmetric_report(const SymmetricInstance& inst, const SymmetricSolution& sol) {
    const double r0 = server_rate_floor(inst.task, inst.config.server_freq_hz);
    const double r1 = device_rate_floor(inst.task, inst.config.device_freq_hz).value();
    const double energy_used = static_cast<double>(sol.offload_count) * inst.offload_energy_j() /
                               static_cast<double>(inst.viewpoints);
    const double cache_used = static_cast<double>(sol.cache_count) * inst.task.input_bits;
    std::ostringstream out;
    out << "kind: symmetric\n"
        << "viewpoints: " << inst.viewpoints << "\n"
        << "cache_capacity_fovs: " << inst.cache_fovs << "\n"
        << "R0 = " << format_sci9(r0) << " bit/s\n"
        << "R1 = " << format_sci9(r1) << " bit/s\n"
        << "d* = " << sol.offload_count << "\n"
        << "c* = " << sol.cache_count << "\n"
        << "regime = " << to_string(sol.regime) << "\n"
        << "R* = " << format_sci9(sol.min_rate) << " bit/s\n"
        << "gain_no_cache = " << format_sci9(sol.gain_no_cache) << " bit/s\n"
        << "gain_with_cache = " << format_sci9(sol.gain_with_cache) << " bit/s\n"
        << "gain_fraction = " << format_g9(1.0 - sol.min_rate / r0) << "\n"
        << "energy_used_j = " << format_g9(energy_used) << " of "
        << format_g9(inst.config.energy_budget_j) << "\n"
        << "cache_used_bits = " << format_g9(cache_used) << " of "
        << format_g9(inst.config.cache_bits) << "\n";
    return out.str();
}

std::string symmetric_solve_csv(const SymmetricInstance& inst, const SymmetricSolution& sol) {
    const double r0 = server_rate_floor(inst.task, inst.config.server_freq_hz);
    const double energy_used = static_cast<double>(sol.offload_count) * inst.offload_energy_j() /
                               static_cast<double>(inst.viewpoints);
    const double cache_used = static_cast<double>(sol.cache_count) * inst.task.input_bits;
    CsvTable csv({"viewpoints", "cache_capacity_fovs", "offload_count", "cache_count", "regime",
                  "min_rate_bps", "gain_no_cache_bps", "gain_with_cache_bps", "gain_fraction",
                  "energy_used_j", "energy_budget_j", "cache_used_bits", "cache_limit_bits"});
    csv.add_row({std::to_string(inst.viewpoints), std::to_string(inst.cache_fovs),
                 std::to_string(sol.offload_count), std::to_string(sol.cache_count),
                 to_string(sol.regime), format_g9(sol.min_rate), format_g9(sol.gain_no_cache),
                 format_g9(sol.gain_with_cache), format_g9(1.0 - sol.min_rate / r0),
                 format_g9(energy_used), format_g9(inst.config.energy_budget_j),
                 format_g9(cache_used), format_g9(inst.config.cache_bits)});
    return csv.to_string();
}

std::string hetero_report(const Scenario& scenario, const HeteroSolveResult& result) {
    const double base = base_average_rate(scenario);
    const PolicyCounts counts = count_policy(result.policy);
    std::ostringstream out;
    out << "kind: heterogeneous\n"
        << "viewpoints: " << scenario.tasks.size() << "\n"
        << "method = " << to_string(result.method) << "\n";
    if (result.method == HeteroMethod::MCA)
        out << "iterations = " << result.iterations << "\n";
    out << "objective = " << format_sci9(result.objective) << " bit/s\n"
        << "base_rate = " << format_sci9(base) << " bit/s\n"
        << "gain_fraction = " << format_g9(1.0 - result.objective / base) << "\n"
        << "offloaded = " << counts.offloaded << ", cached = " << counts.cached << "\n"
        << "energy_used_j = " << format_g9(result.diagnostics.energy_used_j) << " of "
        << format_g9(result.diagnostics.energy_limit_j) << "\n"
        << "cache_used_bits = " << format_g9(result.diagnostics.cache_used_bits) << " of "
        << format_g9(result.diagnostics.cache_limit_bits) << "\n";
    if (result.policy.size() <= 64) {
        out << "d = " << policy_bits(result.policy.offload) << "\n"
            << "c = " << policy_bits(result.policy.cache) << "\n";
    }
    return out.str();
}

std::string hetero_solve_csv(const Scenario& scenario, const HeteroSolveResult& result) {
    const double base = base_average_rate(scenario);
    const PolicyCounts counts = count_policy(result.policy);
    CsvTable csv({"viewpoints", "method", "iterations", "objective_bps", "base_rate_bps",
                  "gain_fraction", "offload_count", "cache_count", "energy_used_j",
                  "energy_budget_j", "cache_used_bits", "cache_limit_bits"});
    csv.add_row({std::to_string(scenario.tasks.size()), to_string(result.method),
                 std::to_string(result.iterations), format_g9(result.objective), format_g9(base),
                 format_g9(1.0 - result.objective / base), std::to_string(counts.offloaded),
                 std::to_string(counts.cached), format_g9(result.diagnostics.energy_used_j),
                 format_g9(result.diagnostics.energy_limit_j),
                 format_g9(result.diagnostics.cache_used_bits),
                 format_g9(result.diagnostics.cache_limit_bits)});
    return csv.to_string();
}

std::string symmetric_sweep_csv(const SymmetricInstance& base, SweepAxis axis,
                                const std::vector<double>& grid,
                                std::optional<SweepAxis> axis2,
                                const std::vector<double>& grid2) {
    std::vector<std::string> header{to_string(axis)};
    if (axis2)
        header.push_back(to_string(*axis2));
    header.insert(header.end(),
                  {"min_rate_bps", "regime", "gain_fraction", "energy_used_j", "cache_used_bits"});
    CsvTable csv(std::move(header));

    const std::vector<double> outer = axis2 ? grid2 : std::vector<double>{0.0};
    if (axis2 && grid2.empty())
        throw EmptyGrid("sweep grid2 is empty");
    for (double outer_value : outer) {
        SweepSpec spec;
        spec.axis = axis;
        spec.grid = grid;
        spec.base = axis2 ? with_axis_value(base, *axis2, outer_value) : base;
        for (const TradeoffPoint& p : sweep(spec)) {
            std::vector<std::string> row{format_g9(p.axis_value)};
            if (axis2)
                row.push_back(format_g9(outer_value));
            row.insert(row.end(),
                       {format_g9(p.min_rate),
                        p.device_infeasible ? "NOT_LOCALLY_COMPUTABLE" : to_string(p.regime),
                        format_g9(p.gain_fraction), format_g9(p.energy_used_j),
                        format_g9(p.cache_used_bits)});
            csv.add_row(std::move(row));
        }
    }
    return csv.to_string();
}

std::string hetero_sweep_csv(const Scenario& base, SweepAxis axis, const std::vector<double>& grid,
                             std::optional<SweepAxis> axis2, const std::vector<double>& grid2) {
    const auto fraction_grid = [](SweepAxis a, const std::vector<double>& g) {
        if (a != SweepAxis::CacheFraction && a != SweepAxis::EnergyFraction)
            throw SchemaError("axis: heterogeneous sweeps support cache-fraction and "
                              "energy-fraction only");
        for (double v : g)
            if (!(v >= 0.0))
                throw SchemaError("grid: fractions must be >= 0");
        return g;
    };

    std::vector<double> cache_fractions, energy_fractions;
    const bool cache_is_primary = axis == SweepAxis::CacheFraction;
    (cache_is_primary ? cache_fractions : energy_fractions) = fraction_grid(axis, grid);
    if (axis2) {
        if (*axis2 == axis)
            throw SchemaError("axis2: must differ from the first axis");
        (*axis2 == SweepAxis::CacheFraction ? cache_fractions : energy_fractions) =
            fraction_grid(*axis2, grid2);
    }

    double total_input_bits = 0.0;
    double full_energy = 0.0;
    for (const ProjectionTask& t : base.tasks) {
        total_input_bits += t.input_bits;
        full_energy += t.probability * base.config.offload_energy_j(t.cycles());
    }
    if (cache_fractions.empty())
        cache_fractions = {base.config.cache_bits / total_input_bits};
    if (energy_fractions.empty())
        energy_fractions = {base.config.energy_budget_j / full_energy};

    const auto points = ga_tradeoff_sweep(base, cache_fractions, energy_fractions);

    CsvTable csv({cache_is_primary ? "cache_fraction" : "energy_fraction",
                  cache_is_primary ? "energy_fraction" : "cache_fraction", "objective_bps",
                  "method", "gain_fraction", "energy_used_j", "cache_used_bits"});
    for (const HeteroSweepPoint& p : points) {
        const double primary = cache_is_primary ? p.cache_fraction : p.energy_fraction;
        const double secondary = cache_is_primary ? p.energy_fraction : p.cache_fraction;
        csv.add_row({format_g9(primary), format_g9(secondary), format_g9(p.objective), "GA",
                     format_g9(p.gain_fraction), format_g9(p.energy_used_j),
                     format_g9(p.cache_used_bits)});
    }
    return csv.to_string();
}

} // namespace vr3c
