#pragma once

#include <ostream>

#include "json.hpp"

namespace primepoly::cli {

using Json = nlohmann::ordered_json;

// Indented "key: value" rendering of a report; key order is preserved.
void render_text(const Json& report, std::ostream& os);

}  // namespace primepoly::cli
