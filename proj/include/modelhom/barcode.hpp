#pragma once

#include "modelhom/persistence.hpp"

#include <string>
#include <string_view>

namespace modelhom {

enum class BarcodeFormat { Json, Svg, Text };

/// Throws InputError for anything other than json, svg or text.
BarcodeFormat parse_barcode_format(std::string_view name);

/// JSON lists intervals per dimension sorted by birth, with null for an
/// infinite death. SVG is 800 x (20 * #intervals) pixels with arrows for
/// infinite deaths. Text writes one "H<k> [<birth>, <death|inf>)" line per interval.
std::string export_barcode(const PersistenceDiagram& diagram, BarcodeFormat format);

/// Inverse of the JSON export.
PersistenceDiagram parse_barcode_json(std::string_view document);

}  // namespace modelhom
