#pragma once

#include <string>

#include "dcm/schema.hpp"

namespace dcm::cli {

// Human-readable rendering of a command's JSON result.
std::string render_text(const std::string& command, const json& result);

}  // namespace dcm::cli
