#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vr3c/model.hpp"

namespace vr3c {

/// A scenario read from disk plus anything worth telling the user about it.
struct LoadedScenario {
    Scenario scenario;
    std::vector<std::string> warnings;
};

/// Reads a scenario JSON file (schema_version 1). Heterogeneous viewpoint
/// tables may live inline, in a referenced CSV, or come from an inline zipf
/// generator stanza; seed_override replaces the stanza's seed when set.
/// Throws SchemaError naming the offending field.
LoadedScenario load_scenario_file(const std::filesystem::path& path,
                                  std::optional<std::uint64_t> seed_override = std::nullopt);

/// Same, from already-read text. csv_base_dir anchors relative
/// viewpoints_csv references.
LoadedScenario parse_scenario_text(const std::string& text,
                                   const std::filesystem::path& csv_base_dir,
                                   std::optional<std::uint64_t> seed_override = std::nullopt);

/// Canonical JSON for a scenario. Doubles round-trip losslessly, keys are
/// sorted, so serialize(parse(serialize(s))) is byte-identical.
std::string serialize_scenario(const Scenario& scenario);

void write_scenario_file(const std::filesystem::path& path, const Scenario& scenario);

} // namespace vr3c
