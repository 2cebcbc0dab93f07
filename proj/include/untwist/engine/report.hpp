#pragma once

#include <string>

#include <json.hpp>

#include "untwist/engine/engine.hpp"

namespace untwist {

std::string format_text(const AnalysisReport& r);
nlohmann::json report_to_json(const AnalysisReport& r);
std::string format_csv(const AnalysisReport& r);

}  // namespace untwist
