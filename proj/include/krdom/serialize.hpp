#pragma once

#include <string>

#include "json.hpp"
#include "krdom/construction.hpp"
#include "krdom/domination.hpp"
#include "krdom/experiment.hpp"

namespace krdom {

// Ordered JSON so identical inputs serialize to identical bytes. Runtime
// fields are kept out of the primary output unless explicitly requested.
nlohmann::ordered_json to_json(const DominationResult& result);
nlohmann::ordered_json to_json(const ConstructionTrace& trace);
nlohmann::ordered_json to_json(const ExperimentReport& report, bool include_runtime = false);

std::string to_csv_row(const ConstructionTrace& trace);

// Header plus one row per trial.
std::string to_csv(const ExperimentReport& report);

const char* mode_name(AugmentationMode mode);

}  // namespace krdom
