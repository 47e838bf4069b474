#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "vr3c/csvout.hpp"
#include "vr3c/hetero.hpp"
#include "vr3c/scenario_io.hpp"
#include "vr3c/symmetric.hpp"

using namespace vr3c;
namespace fs = std::filesystem;

namespace {

const char* kWorkedJson = R"({
  "schema_version": 1,
  "kind": "symmetric",
  "config": {
    "server_freq_hz": 1e11,
    "device_freq_hz": 1e10,
    "energy_coeff": 1e-27,
    "energy_budget_j": 5.0
  },
  "symmetric": {
    "task": {"input_bits": 1e6, "output_bits": 2e6, "cycles_per_bit": 100, "deadline_s": 0.02},
    "viewpoints": 4,
    "cache_fovs": 1
  }
})";

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream out(path, std::ios::trunc);
    out << content;
    return path;
}

} // namespace

TEST_SUITE("scenario_io") {

TEST_CASE("parses the symmetric schema") {
    const auto loaded = parse_scenario_text(kWorkedJson, ".");
    const SymmetricInstance inst = symmetric_instance(loaded.scenario);
    CHECK(inst.viewpoints == 4);
    CHECK(inst.cache_fovs == 1);
    CHECK(inst.task.input_bits == 1e6);
    CHECK(inst.task.probability == 0.25);
    CHECK(inst.config.cache_bits == 1e6);
    CHECK(loaded.warnings.empty());
}

TEST_CASE("schema errors name the offending field") {
    const auto expect_error = [](const std::string& text, const char* needle) {
        try {
            (void)parse_scenario_text(text, ".");
            FAIL_CHECK("expected SchemaError containing \"" << needle << "\"");
        } catch (const SchemaError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("{]", "invalid JSON");
    expect_error(R"({"kind": "symmetric"})", "schema_version");
    expect_error(R"({"schema_version": 2, "kind": "symmetric"})", "unsupported");
    expect_error(R"({"schema_version": 1, "kind": "banana"})", "kind");
    expect_error(R"({"schema_version": 1, "kind": "symmetric",
                     "config": {"device_freq_hz": 1, "energy_coeff": 1, "energy_budget_j": 0},
                     "symmetric": {"task": {"input_bits": 1, "output_bits": 2,
                                            "cycles_per_bit": 1, "deadline_s": 1},
                                   "viewpoints": 1, "cache_fovs": 0}})",
                 "config.server_freq_hz");

    // both cache fields present is ambiguous
    std::string both = kWorkedJson;
    both.replace(both.find("\"energy_budget_j\": 5.0"), 22, "\"energy_budget_j\": 5.0, \"cache_bits\": 1e6");
    expect_error(both, "cache_fovs");

    // probabilities must sum to one
    expect_error(R"({"schema_version": 1, "kind": "heterogeneous",
                     "config": {"server_freq_hz": 1e11, "device_freq_hz": 1e10,
                                "energy_coeff": 1e-27, "energy_budget_j": 5, "cache_bits": 0},
                     "heterogeneous": {"viewpoints": [
                       {"input_bits": 1e6, "output_bits": 2e6, "cycles_per_bit": 100,
                        "deadline_s": 0.02, "probability": 0.7},
                       {"input_bits": 1e6, "output_bits": 2e6, "cycles_per_bit": 100,
                        "deadline_s": 0.02, "probability": 0.7}]}})",
                 "sum to 1");
}

TEST_CASE("zipf stanza and seed override") {
    const std::string text = R"({
      "schema_version": 1,
      "kind": "heterogeneous",
      "config": {"server_freq_hz": 1e11, "device_freq_hz": 1e10,
                 "energy_coeff": 1e-27, "energy_budget_j": 5, "cache_bits": 4e7},
      "heterogeneous": {"zipf": {"count": 3, "exponent": 0.0,
                                 "input_bits_min": 15e6, "input_bits_max": 25e6,
                                 "output_input_ratio": 2.0, "cycles_per_bit": 1.0,
                                 "deadline_s": 0.02, "seed": 9}}
    })";
    const auto loaded = parse_scenario_text(text, ".");
    REQUIRE(loaded.scenario.tasks.size() == 3);
    for (const auto& t : loaded.scenario.tasks)
        CHECK(t.probability == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const auto same = parse_scenario_text(text, ".");
    CHECK(same.scenario.tasks[0].input_bits == loaded.scenario.tasks[0].input_bits);
    const auto other = parse_scenario_text(text, ".", 10);
    CHECK(other.scenario.tasks[0].input_bits != loaded.scenario.tasks[0].input_bits);
}

TEST_CASE("serialization round-trips byte-stable and lossless") {
    SystemConfig cfg{1e11, 1e10, 1e-27, 5.0, 4e7};
    const Scenario s = zipf_scenario(20, 0.8, 15e6, 25e6, 2.0, 1.0, 0.02, cfg, 42);
    const std::string text = serialize_scenario(s);
    const auto loaded = parse_scenario_text(text, ".");
    REQUIRE(loaded.scenario.tasks.size() == 20);
    for (std::size_t i = 0; i < 20; ++i) {
        CHECK(loaded.scenario.tasks[i].input_bits == s.tasks[i].input_bits);
        CHECK(loaded.scenario.tasks[i].probability == s.tasks[i].probability);
    }
    CHECK(serialize_scenario(loaded.scenario) == text);

    // symmetric scenarios round-trip through config.cache_bits
    const auto sym = parse_scenario_text(kWorkedJson, ".");
    const std::string sym_text = serialize_scenario(sym.scenario);
    const auto sym_again = parse_scenario_text(sym_text, ".");
    CHECK(serialize_scenario(sym_again.scenario) == sym_text);
    CHECK(symmetric_instance(sym_again.scenario).cache_fovs == 1);
}

TEST_CASE("viewpoint tables can live in a referenced csv") {
    const fs::path csv = temp_file("vr3c_test_tasks.csv",
                                   "input_bits,output_bits,cycles_per_bit,deadline_s,probability\n"
                                   "1e6,2e6,100,0.02,0.5\n"
                                   "2e6,4e6,50,0.02,0.5\n");
    const std::string text = R"({
      "schema_version": 1,
      "kind": "heterogeneous",
      "config": {"server_freq_hz": 1e11, "device_freq_hz": 1e10,
                 "energy_coeff": 1e-27, "energy_budget_j": 5, "cache_bits": 0},
      "heterogeneous": {"viewpoints_csv": ")" + csv.filename().string() + R"("}
    })";
    const auto loaded = parse_scenario_text(text, csv.parent_path());
    REQUIRE(loaded.scenario.tasks.size() == 2);
    CHECK(loaded.scenario.tasks[1].input_bits == 2e6);
    CHECK(loaded.scenario.tasks[1].cycles_per_bit == 50);
    fs::remove(csv);
}

TEST_CASE("warnings surface low output/input ratios") {
    std::string text = kWorkedJson;
    text.replace(text.find("\"output_bits\": 2e6"), 18, "\"output_bits\": 1.5e6");
    const auto loaded = parse_scenario_text(text, ".");
    REQUIRE(loaded.warnings.size() == 1);
    CHECK(loaded.warnings[0].find("ratio") != std::string::npos);
}

TEST_CASE("numeric formatting contracts") {
    CHECK(format_g9(77631578.94736841) == "77631578.9");
    CHECK(format_g9(105263157.89473684) == "105263158");
    CHECK(format_g9(0.2625) == "0.2625");
    CHECK(format_g9(2531645569.6202531) == "2.53164557e+09");
    CHECK(format_sci9(77631578.94736841) == "7.76315789e7");
    CHECK(format_sci9(1e8) == "1e8");
    CHECK(format_sci9(2631578.9473684207) == "2.63157895e6");
    CHECK(format_sci9(0.001) == "1e-3");
}

TEST_CASE("atomic write replaces content completely") {
    const fs::path path = fs::temp_directory_path() / "vr3c_test_atomic.txt";
    atomic_write_file(path, "first\n");
    atomic_write_file(path, "second\n");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "second\n");
    CHECK_FALSE(fs::exists(path.string() + ".tmp"));
    fs::remove(path);
}

} // TEST_SUITE
