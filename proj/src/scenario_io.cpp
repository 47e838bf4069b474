#include "vr3c/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vr3c/csvout.hpp"
#include "vr3c/hetero.hpp"

namespace vr3c {

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const std::string& where, const char* name) {
    const auto it = obj.find(name);
    if (it == obj.end())
        throw SchemaError(where + "." + name + ": missing required field");
    return *it;
}

double require_number(const json& obj, const std::string& where, const char* name) {
    const json& v = require_field(obj, where, name);
    if (!v.is_number())
        throw SchemaError(where + "." + name + ": expected a number");
    return v.get<double>();
}

long long require_integer(const json& obj, const std::string& where, const char* name) {
    const json& v = require_field(obj, where, name);
    if (!v.is_number_integer())
        throw SchemaError(where + "." + name + ": expected an integer");
    return v.get<long long>();
}

SystemConfig parse_config(const json& root) {
    const json& cfg = require_field(root, "scenario", "config");
    if (!cfg.is_object())
        throw SchemaError("scenario.config: expected an object");
    SystemConfig c;
    c.server_freq_hz = require_number(cfg, "config", "server_freq_hz");
    c.device_freq_hz = require_number(cfg, "config", "device_freq_hz");
    c.energy_coeff = require_number(cfg, "config", "energy_coeff");
    c.energy_budget_j = require_number(cfg, "config", "energy_budget_j");
    if (cfg.contains("cache_bits"))
        c.cache_bits = require_number(cfg, "config", "cache_bits");
    return c;
}

ProjectionTask parse_task(const json& obj, const std::string& where, bool with_probability) {
    if (!obj.is_object())
        throw SchemaError(where + ": expected an object");
    ProjectionTask t;
    t.input_bits = require_number(obj, where, "input_bits");
    t.output_bits = require_number(obj, where, "output_bits");
    t.cycles_per_bit = require_number(obj, where, "cycles_per_bit");
    t.deadline_s = require_number(obj, where, "deadline_s");
    if (with_probability)
        t.probability = require_number(obj, where, "probability");
    return t;
}

std::vector<ProjectionTask> read_viewpoints_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("heterogeneous.viewpoints_csv: cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw SchemaError("heterogeneous.viewpoints_csv: empty file " + path.string());
    if (line != "input_bits,output_bits,cycles_per_bit,deadline_s,probability")
        throw SchemaError("heterogeneous.viewpoints_csv: unexpected header in " + path.string());
    std::vector<ProjectionTask> tasks;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream cells(line);
        ProjectionTask t;
        char comma = 0;
        if (!(cells >> t.input_bits >> comma >> t.output_bits >> comma >> t.cycles_per_bit >>
              comma >> t.deadline_s >> comma >> t.probability))
            throw SchemaError("heterogeneous.viewpoints_csv: bad row at line " +
                              std::to_string(line_no) + " of " + path.string());
        tasks.push_back(t);
    }
    return tasks;
}

Scenario parse_scenario(const json& root, const std::filesystem::path& csv_base_dir,
                        std::optional<std::uint64_t> seed_override) {
    if (!root.is_object())
        throw SchemaError("scenario: expected a JSON object");
    const long long version = require_integer(root, "scenario", "schema_version");
    if (version != 1)
        throw SchemaError("scenario.schema_version: unsupported version " + std::to_string(version));
    const json& kind = require_field(root, "scenario", "kind");

    if (kind == "symmetric") {
        const json& sym = require_field(root, "scenario", "symmetric");
        SystemConfig config = parse_config(root);
        ProjectionTask task = parse_task(require_field(sym, "symmetric", "task"), "symmetric.task", false);
        const long long n = require_integer(sym, "symmetric", "viewpoints");
        const bool has_fovs = sym.contains("cache_fovs");
        const bool has_bits = root.at("config").contains("cache_bits");
        if (has_fovs == has_bits)
            throw SchemaError("symmetric.cache_fovs: give exactly one of symmetric.cache_fovs "
                              "or config.cache_bits");
        if (has_fovs) {
            const long long fovs = require_integer(sym, "symmetric", "cache_fovs");
            if (fovs < 0)
                throw SchemaError("symmetric.cache_fovs: must be >= 0");
            config.cache_bits = static_cast<double>(fovs) * task.input_bits;
        }
        try {
            return make_symmetric_scenario(task, n, config);
        } catch (const InvalidScenario& e) {
            throw SchemaError(std::string("symmetric: ") + e.what());
        }
    }

    if (kind == "heterogeneous") {
        const json& het = require_field(root, "scenario", "heterogeneous");
        const SystemConfig config = parse_config(root);
        const int sources = int(het.contains("viewpoints")) + int(het.contains("viewpoints_csv")) +
                            int(het.contains("zipf"));
        if (sources != 1)
            throw SchemaError("heterogeneous: give exactly one of viewpoints, viewpoints_csv, zipf");

        if (het.contains("zipf")) {
            const json& z = het.at("zipf");
            const auto seed = seed_override
                                  ? *seed_override
                                  : static_cast<std::uint64_t>(require_integer(z, "zipf", "seed"));
            try {
                return zipf_scenario(require_integer(z, "zipf", "count"),
                                     require_number(z, "zipf", "exponent"),
                                     require_number(z, "zipf", "input_bits_min"),
                                     require_number(z, "zipf", "input_bits_max"),
                                     require_number(z, "zipf", "output_input_ratio"),
                                     require_number(z, "zipf", "cycles_per_bit"),
                                     require_number(z, "zipf", "deadline_s"), config, seed);
            } catch (const InvalidScenario& e) {
                throw SchemaError(std::string("heterogeneous.zipf: ") + e.what());
            }
        }

        std::vector<ProjectionTask> tasks;
        if (het.contains("viewpoints_csv")) {
            const json& ref = het.at("viewpoints_csv");
            if (!ref.is_string())
                throw SchemaError("heterogeneous.viewpoints_csv: expected a path string");
            std::filesystem::path p = ref.get<std::string>();
            if (p.is_relative())
                p = csv_base_dir / p;
            tasks = read_viewpoints_csv(p);
        } else {
            const json& rows = het.at("viewpoints");
            if (!rows.is_array() || rows.empty())
                throw SchemaError("heterogeneous.viewpoints: expected a non-empty array");
            tasks.reserve(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                tasks.push_back(parse_task(rows[i], "heterogeneous.viewpoints[" + std::to_string(i) + "]", true));
        }
        try {
            return make_heterogeneous_scenario(std::move(tasks), config);
        } catch (const InvalidScenario& e) {
            throw SchemaError(std::string("heterogeneous: ") + e.what());
        }
    }

    throw SchemaError("scenario.kind: expected \"symmetric\" or \"heterogeneous\"");
}

} // namespace

LoadedScenario load_scenario_file(const std::filesystem::path& path,
                                  std::optional<std::uint64_t> seed_override) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("scenario file: cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    return parse_scenario_text(buffer.str(), base, seed_override);
}

LoadedScenario parse_scenario_text(const std::string& text,
                                   const std::filesystem::path& csv_base_dir,
                                   std::optional<std::uint64_t> seed_override) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("scenario file: invalid JSON: ") + e.what());
    }
    LoadedScenario loaded;
    loaded.scenario = parse_scenario(root, csv_base_dir, seed_override);
    loaded.warnings = scenario_warnings(loaded.scenario);
    return loaded;
}

std::string serialize_scenario(const Scenario& scenario) {
    json root;
    root["schema_version"] = 1;
    json cfg;
    cfg["server_freq_hz"] = scenario.config.server_freq_hz;
    cfg["device_freq_hz"] = scenario.config.device_freq_hz;
    cfg["energy_coeff"] = scenario.config.energy_coeff;
    cfg["energy_budget_j"] = scenario.config.energy_budget_j;
    cfg["cache_bits"] = scenario.config.cache_bits;
    root["config"] = std::move(cfg);

    if (scenario.kind == ScenarioKind::Symmetric) {
        root["kind"] = "symmetric";
        const ProjectionTask& t = scenario.tasks.front();
        json task;
        task["input_bits"] = t.input_bits;
        task["output_bits"] = t.output_bits;
        task["cycles_per_bit"] = t.cycles_per_bit;
        task["deadline_s"] = t.deadline_s;
        json sym;
        sym["task"] = std::move(task);
        sym["viewpoints"] = static_cast<long long>(scenario.tasks.size());
        root["symmetric"] = std::move(sym);
    } else {
        root["kind"] = "heterogeneous";
        json rows = json::array();
        for (const ProjectionTask& t : scenario.tasks) {
            json row;
            row["input_bits"] = t.input_bits;
            row["output_bits"] = t.output_bits;
            row["cycles_per_bit"] = t.cycles_per_bit;
            row["deadline_s"] = t.deadline_s;
            row["probability"] = t.probability;
            rows.push_back(std::move(row));
        }
        json het;
        het["viewpoints"] = std::move(rows);
        root["heterogeneous"] = std::move(het);
    }
    return root.dump(2) + "\n";
}

void write_scenario_file(const std::filesystem::path& path, const Scenario& scenario) {
    atomic_write_file(path, serialize_scenario(scenario));
}

} // namespace vr3c
