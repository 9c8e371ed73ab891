#include "modelhom/barcode.hpp"

#include "modelhom/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace modelhom {

using nlohmann::json;

BarcodeFormat parse_barcode_format(std::string_view name) {
  if (name == "json") return BarcodeFormat::Json;
  if (name == "svg") return BarcodeFormat::Svg;
  if (name == "text") return BarcodeFormat::Text;
  throw InputError("unknown barcode format '" + std::string(name) + "' (expected json, svg or text)");
}

namespace {

std::string to_json(const PersistenceDiagram& d) {
  std::ostringstream os;
  os << "{\n  \"filtration\": " << json(d.filtration()).dump() << ",\n  \"intervals\": {";
  bool first_dim = true;
  for (int k = 0; k < d.dimensions(); ++k) {
    const auto& list = d.intervals(k);
    if (list.empty()) continue;
    os << (first_dim ? "\n" : ",\n") << "    \"H" << k << "\": [";
    first_dim = false;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i) os << ',';
      os << '[' << list[i].birth << ',';
      if (list[i].death) {
        os << *list[i].death;
      } else {
        os << "null";
      }
      os << ']';
    }
    os << ']';
  }
  os << (first_dim ? "}" : "\n  }") << ",\n  \"model\": " << json(d.model()).dump()
     << ",\n  \"universe_hash\": " << json(d.universe_hash()).dump() << "\n}\n";
  return os.str();
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string to_svg(const PersistenceDiagram& d) {
  constexpr int width = 800, row = 20, left = 40, right = 780;
  const std::size_t count = d.interval_count();
  const int height = static_cast<int>(count) * row;

  Rank lo = 0, hi = 1;
  bool any = false;
  for (const auto& i : d.all()) {
    lo = any ? std::min(lo, i.birth) : i.birth;
    hi = std::max({hi, i.birth + 1, i.death.value_or(0)});
    any = true;
  }
  const double span = static_cast<double>(hi - lo);
  auto x_of = [&](Rank v) { return left + (static_cast<double>(v - lo) / span) * (right - 20 - left); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  if (!d.model().empty()) os << "<title>" << escape_xml(d.model()) << "</title>\n";
  os << "<g font-family=\"monospace\" font-size=\"10\" stroke-width=\"2\">\n";
  int y_row = 0;
  for (int k = 0; k < d.dimensions(); ++k) {
    const auto& list = d.intervals(k);
    if (list.empty()) continue;
    os << "<text x=\"4\" y=\"" << y_row * row + 14 << "\">H" << k << "</text>\n";
    for (const auto& i : list) {
      const int y = y_row * row + row / 2;
      const std::string x0 = fixed2(x_of(i.birth));
      if (i.death) {
        os << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << fixed2(x_of(*i.death)) << "\" y2=\"" << y
           << "\" stroke=\"black\"/>\n";
      } else {
        os << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << right << "\" y2=\"" << y
           << "\" stroke=\"black\"/>\n";
        os << "<polygon points=\"" << right + 10 << ',' << y << ' ' << right << ',' << y - 4 << ' ' << right << ','
           << y + 4 << "\" fill=\"black\"/>\n";
      }
      ++y_row;
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string to_text(const PersistenceDiagram& d) {
  std::ostringstream os;
  for (int k = 0; k < d.dimensions(); ++k)
    for (const auto& i : d.intervals(k)) {
      os << 'H' << k << " [" << i.birth << ", ";
      if (i.death) {
        os << *i.death;
      } else {
        os << "inf";
      }
      os << ")\n";
    }
  return os.str();
}

}  // namespace

std::string export_barcode(const PersistenceDiagram& diagram, BarcodeFormat format) {
  switch (format) {
    case BarcodeFormat::Json: return to_json(diagram);
    case BarcodeFormat::Svg: return to_svg(diagram);
    case BarcodeFormat::Text: return to_text(diagram);
  }
  throw InputError("unknown barcode format");
}

PersistenceDiagram parse_barcode_json(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("barcode JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("barcode JSON: top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "filtration" && key != "intervals" && key != "model" && key != "universe_hash")
      throw InputError("barcode JSON: unknown key '" + key + "'");
  auto text = [&](const char* key) -> std::string {
    if (!doc.contains(key)) return {};
    if (!doc[key].is_string()) throw InputError(std::string("barcode JSON: '") + key + "' must be a string");
    return doc[key].get<std::string>();
  };
  std::vector<std::vector<PersistenceInterval>> by_dim;
  std::size_t simplices = 0;
  if (doc.contains("intervals")) {
    const auto& iv = doc["intervals"];
    if (!iv.is_object()) throw InputError("barcode JSON: 'intervals' must be an object");
    for (const auto& [key, list] : iv.items()) {
      if (key.size() < 2 || key[0] != 'H' || key.find_first_not_of("0123456789", 1) != std::string::npos)
        throw InputError("barcode JSON: bad dimension key '" + key + "'");
      const int k = std::stoi(key.substr(1));
      if (by_dim.size() <= static_cast<std::size_t>(k)) by_dim.resize(static_cast<std::size_t>(k) + 1);
      if (!list.is_array()) throw InputError("barcode JSON: '" + key + "' must be an array");
      for (const auto& pair : list) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !(pair[1].is_null() || pair[1].is_number_unsigned()))
          throw InputError("barcode JSON: intervals are [birth, death|null] pairs of positive integers");
        PersistenceInterval interval{k, pair[0].get<Rank>(), std::nullopt};
        if (!pair[1].is_null()) interval.death = pair[1].get<Rank>();
        if (interval.death && *interval.death <= interval.birth)
          throw InputError("barcode JSON: death must exceed birth");
        simplices += interval.finite() ? 2 : 1;
        by_dim[static_cast<std::size_t>(k)].push_back(interval);
      }
    }
  }
  return PersistenceDiagram(std::move(by_dim), simplices, text("filtration"), text("universe_hash"), text("model"));
}

}  // namespace modelhom
