#pragma once

#include <json.hpp>

#include "hk/invariants.hpp"
#include "hk/taskfile.hpp"

namespace hk {

struct ResultDocument {
    nlohmann::ordered_json body;
    double seconds = 0;
};

ResultDocument run_task(const TaskSpec& spec);

// format is "json" or "table"; timing goes in last so scripted consumers can
// compare documents with the final key stripped
std::string emit(const ResultDocument& doc, const std::string& format);

}  // namespace hk
