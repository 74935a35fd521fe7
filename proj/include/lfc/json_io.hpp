#pragma once

#include "lfc/harness.hpp"
#include "lfc/inequality.hpp"

#include <json.hpp>

#include <string>

namespace lfc {

// Serializers produce ordered objects with a fixed key layout so that
// equal inputs yield byte-identical documents.
nlohmann::ordered_json to_ordered_json(const IneqReport& report);
nlohmann::ordered_json to_ordered_json(const SuiteReport& report);

// Canonical text form used for files and stdout: two-space indent plus a
// trailing newline.
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace lfc
