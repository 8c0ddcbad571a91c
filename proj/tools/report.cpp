#include "report.hpp"

#include <algorithm>
#include <string>

namespace primepoly::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool flat(const Json& v) {
  return v.is_array() && std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
}

void render_object(const Json& obj, std::ostream& os, int indent);

void render_entry(const std::string& key, const Json& v, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  if (!v.is_structured()) {
    os << pad << key << ": " << scalar(v) << '\n';
  } else if (v.empty()) {
    os << pad << key << ": " << (v.is_array() ? "[]" : "{}") << '\n';
  } else if (flat(v)) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) {
      // quote items that would otherwise read as several
      const bool quote = v[i].is_string() && v[i].get<std::string>().find_first_of(", ") != std::string::npos;
      os << (i ? ", " : "") << (quote ? v[i].dump() : scalar(v[i]));
    }
    os << "]\n";
  } else if (v.is_object()) {
    os << pad << key << ":\n";
    render_object(v, os, indent + 2);
  } else {
    os << pad << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) render_entry("[" + std::to_string(i) + "]", v[i], os, indent + 2);
  }
}

void render_object(const Json& obj, std::ostream& os, int indent) {
  for (const auto& [key, value] : obj.items()) render_entry(key, value, os, indent);
}

}  // namespace

void render_text(const Json& report, std::ostream& os) { render_object(report, os, 0); }

}  // namespace primepoly::cli
