#pragma once

#include <json.hpp>
#include <string>

namespace hopfrad {

// Like dump(2), but arrays of scalars stay on one line so that triples and
// matrix rows read as rows.
inline void compact_dump(const nlohmann::json& j, std::size_t indent, std::string& out) {
  auto scalar_array = [](const nlohmann::json& a) {
    for (const auto& e : a)
      if (e.is_structured()) return false;
    return true;
  };
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += pad + nlohmann::json(k).dump() + ": ";
      compact_dump(v, indent + 2, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      compact_dump(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

inline std::string compact_dump(const nlohmann::json& j) {
  std::string out;
  compact_dump(j, 0, out);
  return out + "\n";
}

}  // namespace hopfrad
