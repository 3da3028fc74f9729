#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "topo/finitetop.hpp"
#include "topo/monoid.hpp"
#include "topo/realline.hpp"

namespace topo {

// All emitters are deterministic: keys are sorted by the JSON library and
// every array is filled in a fixed enumeration order, so identical inputs
// yield byte-identical dumps.

nlohmann::json realline_to_json(const RealLineSet& s);
nlohmann::json spaces_to_json(int n, const std::vector<FiniteSpace>& spaces);
nlohmann::json witness_to_json(const Witness& w);
nlohmann::json monoid_report_to_json(const MonoidReport& report);
nlohmann::json poset_to_json(const Poset& poset);
nlohmann::json experiment_to_json(const ExperimentReport& report);

// Writes to a sibling temp file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace topo
