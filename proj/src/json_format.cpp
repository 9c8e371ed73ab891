#include "json_format.hpp"

#include <algorithm>

namespace modelhom::detail {

namespace {

bool scalar(const nlohmann::json& v) { return !v.is_array() && !v.is_object(); }

void write(const nlohmann::json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, item] : v.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + nlohmann::json(key).dump() + ": ";
      write(item, indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
    return;
  }
  if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
      return;
    }
    if (std::all_of(v.begin(), v.end(), scalar)) {
      std::string line = "[";
      for (std::size_t i = 0; i < v.size(); ++i) line += (i ? ", " : "") + v[i].dump();
      line += "]";
      if (line.size() + static_cast<std::size_t>(indent) <= 100) {
        out += line;
        return;
      }
    }
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      write(v[i], indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
    return;
  }
  out += v.dump();
}

}  // namespace

std::string canonical_dump(const nlohmann::json& value) {
  std::string out;
  write(value, 0, out);
  out += "\n";
  return out;
}

}  // namespace modelhom::detail
