// vr3c command line tool: solve, sweep and generate caching/offloading
// scenarios for mobile VR FOV delivery.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vr3c/csvout.hpp"
#include "vr3c/hetero.hpp"
#include "vr3c/reports.hpp"
#include "vr3c/scenario_io.hpp"
#include "vr3c/tradeoff.hpp"

namespace fs = std::filesystem;
using namespace vr3c;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTooLarge = 4;

// Reports and CSVs go to stdout unless --out or VR3C_OUT_DIR routes them to
// a file; files are written atomically.
void emit(const std::string& text, const std::string& out, const std::string& default_name) {
    if (out.empty() && std::getenv("VR3C_OUT_DIR") == nullptr) {
        std::cout << text;
        return;
    }
    fs::path path = out;
    if (out.empty()) {
        const char* dir = std::getenv("VR3C_OUT_DIR");
        path = fs::path(dir ? dir : ".") / default_name;
    }
    atomic_write_file(path, text);
    std::cerr << "wrote " << path.string() << "\n";
}

void print_warnings(const LoadedScenario& loaded) {
    for (const std::string& w : loaded.warnings)
        std::cerr << "warning: " << w << "\n";
}

std::vector<double> parse_grid_spec(const std::string& spec) {
    // Either an inclusive linspace "lo:hi:count" or an explicit list "a,b,c".
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        double lo = 0, hi = 0;
        long long count = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(spec);
        if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 1)
            throw SchemaError("--grid: expected lo:hi:count, got \"" + spec + "\"");
        if (count == 1) {
            grid.push_back(lo);
        } else {
            for (long long i = 0; i < count; ++i)
                grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
        }
        return grid;
    }
    std::istringstream in(spec);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        std::size_t used = 0;
        try {
            grid.push_back(std::stod(cell, &used));
        } catch (const std::exception&) {
            throw SchemaError("--grid: bad number \"" + cell + "\"");
        }
        if (used != cell.size())
            throw SchemaError("--grid: bad number \"" + cell + "\"");
    }
    if (grid.empty())
        throw SchemaError("--grid: empty grid");
    return grid;
}

SweepAxis parse_axis(const std::string& name) {
    if (name == "cache-fraction")
        return SweepAxis::CacheFraction;
    if (name == "energy-fraction")
        return SweepAxis::EnergyFraction;
    if (name == "device-freq")
        return SweepAxis::DeviceFreq;
    if (name == "energy")
        return SweepAxis::Energy;
    throw SchemaError("--axis: unknown axis \"" + name +
                      "\" (cache-fraction|energy-fraction|device-freq|energy)");
}

int cmd_solve_symmetric(const std::string& file, const std::string& format, const std::string& out) {
    const LoadedScenario loaded = load_scenario_file(file);
    print_warnings(loaded);
    const SymmetricInstance inst = symmetric_instance(loaded.scenario);
    const SymmetricSolution sol = optimal_policy(inst);
    const std::string text =
        format == "csv" ? symmetric_solve_csv(inst, sol) : symmetric_report(inst, sol);
    emit(text, out, format == "csv" ? "solve_symmetric.csv" : "solve_symmetric.txt");
    return kExitOk;
}

int cmd_solve_hetero(const std::string& file, const std::string& method, long long resolution,
                     std::optional<std::uint64_t> seed, const std::string& format,
                     const std::string& out) {
    const LoadedScenario loaded = load_scenario_file(file, seed);
    print_warnings(loaded);
    const Scenario& s = loaded.scenario;

    HeteroSolveResult res;
    if (method == "ga") {
        res = greedy_solve(s);
    } else if (method == "mca") {
        res = mca_solve(s, greedy_solve(s).policy, resolution);
    } else if (method == "oracle") {
        res = brute_force_solve(s);
    } else {
        throw SchemaError("--method: unknown method \"" + method + "\" (ga|mca|oracle)");
    }

    const std::string text = format == "csv" ? hetero_solve_csv(s, res) : hetero_report(s, res);
    emit(text, out, format == "csv" ? "solve_hetero.csv" : "solve_hetero.txt");
    return kExitOk;
}

int cmd_sweep(const std::string& file, const std::string& axis_name, const std::string& grid_spec,
              const std::string& axis2_name, const std::string& grid2_spec,
              std::optional<std::uint64_t> seed, const std::string& out) {
    const LoadedScenario loaded = load_scenario_file(file, seed);
    print_warnings(loaded);

    const SweepAxis axis = parse_axis(axis_name);
    const std::vector<double> grid = parse_grid_spec(grid_spec);
    std::optional<SweepAxis> axis2;
    std::vector<double> grid2;
    if (!axis2_name.empty()) {
        if (grid2_spec.empty())
            throw SchemaError("--grid2: required when --axis2 is given");
        axis2 = parse_axis(axis2_name);
        grid2 = parse_grid_spec(grid2_spec);
    } else if (!grid2_spec.empty()) {
        throw SchemaError("--axis2: required when --grid2 is given");
    }

    const std::string text =
        loaded.scenario.kind == ScenarioKind::Symmetric
            ? symmetric_sweep_csv(symmetric_instance(loaded.scenario), axis, grid, axis2, grid2)
            : hetero_sweep_csv(loaded.scenario, axis, grid, axis2, grid2);
    emit(text, out, "sweep.csv");
    return kExitOk;
}

int cmd_gen_scenario(long long n, double gamma, double i_min, double i_max, double ratio,
                     double cycles_per_bit, double deadline_s, double f0, double f1, double k,
                     double energy_budget, double cache_bits, std::uint64_t seed,
                     const std::string& out) {
    SystemConfig config;
    config.server_freq_hz = f0;
    config.device_freq_hz = f1;
    config.energy_coeff = k;
    config.energy_budget_j = energy_budget;
    config.cache_bits = cache_bits;
    Scenario s;
    try {
        s = zipf_scenario(n, gamma, i_min, i_max, ratio, cycles_per_bit, deadline_s, config, seed);
    } catch (const InvalidScenario& e) {
        throw SchemaError(e.what());
    }
    emit(serialize_scenario(s), out, "scenario.json");
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"Joint caching + computation-offloading policies for mobile VR FOV delivery"};
    app.require_subcommand(1);

    std::string file, format = "report", out, method = "ga";
    std::string axis_name, grid_spec, axis2_name, grid2_spec;
    long long resolution = 100000;
    std::optional<std::uint64_t> seed;

    auto* solve_sym = app.add_subcommand("solve-symmetric", "Optimal symmetric policy and R*");
    solve_sym->add_option("file", file, "scenario JSON file")->required();
    solve_sym->add_option("--format", format, "report|csv")->check(CLI::IsMember({"report", "csv"}));
    solve_sym->add_option("--out", out, "output path (default: stdout or $VR3C_OUT_DIR)");

    auto* solve_het = app.add_subcommand("solve-hetero", "Heterogeneous policy via ga|mca|oracle");
    solve_het->add_option("file", file, "scenario JSON file")->required();
    solve_het->add_option("--method", method, "ga|mca|oracle")
        ->check(CLI::IsMember({"ga", "mca", "oracle"}));
    solve_het->add_option("--Q", resolution, "knapsack weight grid resolution (mca)");
    solve_het->add_option("--seed", seed, "override the zipf stanza seed");
    solve_het->add_option("--format", format, "report|csv")->check(CLI::IsMember({"report", "csv"}));
    solve_het->add_option("--out", out, "output path (default: stdout or $VR3C_OUT_DIR)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Trade-off curves/surfaces as CSV");
    sweep_cmd->add_option("file", file, "scenario JSON file")->required();
    sweep_cmd->add_option("--axis", axis_name, "cache-fraction|energy-fraction|device-freq|energy")
        ->required();
    sweep_cmd->add_option("--grid", grid_spec, "lo:hi:count or comma list")->required();
    sweep_cmd->add_option("--axis2", axis2_name, "optional second axis for a surface");
    sweep_cmd->add_option("--grid2", grid2_spec, "grid for --axis2");
    sweep_cmd->add_option("--seed", seed, "override the zipf stanza seed");
    sweep_cmd->add_option("--out", out, "output path (default: stdout or $VR3C_OUT_DIR)");

    long long n = 0;
    double gamma = 0.0, i_min = 0.0, i_max = 0.0, ratio = 2.0;
    double cycles_per_bit = 0.0, deadline_s = 0.0, f0 = 0.0, f1 = 0.0, k = 0.0;
    double energy_budget = 0.0, cache_bits = 0.0;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen-scenario", "Write a seeded Zipf-popularity scenario file");
    gen->add_option("--n", n, "viewpoint count")->required();
    gen->add_option("--gamma", gamma, "Zipf exponent")->required();
    gen->add_option("--i-min", i_min, "min input bits")->required();
    gen->add_option("--i-max", i_max, "max input bits")->required();
    gen->add_option("--ratio", ratio, "output/input size ratio");
    gen->add_option("--w", cycles_per_bit, "cycles per bit")->required();
    gen->add_option("--tau", deadline_s, "deadline, seconds")->required();
    gen->add_option("--f0", f0, "server frequency, cycles/s")->required();
    gen->add_option("--f1", f1, "device frequency, cycles/s")->required();
    gen->add_option("--k", k, "energy coefficient")->required();
    gen->add_option("--energy", energy_budget, "energy budget, Joules")->required();
    gen->add_option("--cache-bits", cache_bits, "cache capacity, bits")->required();
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--out", out, "output path (default: stdout or $VR3C_OUT_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (solve_sym->parsed())
        return cmd_solve_symmetric(file, format, out);
    if (solve_het->parsed())
        return cmd_solve_hetero(file, method, resolution, seed, format, out);
    if (sweep_cmd->parsed())
        return cmd_sweep(file, axis_name, grid_spec, axis2_name, grid2_spec, seed, out);
    if (gen->parsed())
        return cmd_gen_scenario(n, gamma, i_min, i_max, ratio, cycles_per_bit, deadline_s, f0, f1,
                                k, energy_budget, cache_bits, gen_seed, out);
    return kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SchemaError& e) {
        std::cerr << "error: SchemaError: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvalidScenario& e) {
        std::cerr << "error: InvalidScenario: " << e.what() << "\n";
        return kExitInput;
    } catch (const EmptyGrid& e) {
        std::cerr << "error: EmptyGrid: " << e.what() << "\n";
        return kExitInput;
    } catch (const NotSymmetric& e) {
        std::cerr << "error: NotSymmetric: " << e.what() << "\n";
        return kExitInput;
    } catch (const NotHeterogeneous& e) {
        std::cerr << "error: NotHeterogeneous: " << e.what() << "\n";
        return kExitInput;
    } catch (const LengthMismatch& e) {
        std::cerr << "error: LengthMismatch: " << e.what() << "\n";
        return kExitInput;
    } catch (const InfeasibleServerCompute& e) {
        std::cerr << "error: InfeasibleServerCompute: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const NotLocallyComputable& e) {
        std::cerr << "error: NotLocallyComputable: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const InfeasibleInitial& e) {
        std::cerr << "error: InfeasibleInitial: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const DomainError& e) {
        std::cerr << "error: DomainError: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const TooLarge& e) {
        std::cerr << "error: TooLarge: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnexpected;
    }
}
