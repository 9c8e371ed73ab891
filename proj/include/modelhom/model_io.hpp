#pragma once

#include "modelhom/complex.hpp"
#include "modelhom/equivalence.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modelhom {

enum class BuildMode { Flag, Explicit };

/// A model file. Labels are kept as written; serialization orders them by
/// universe position.
struct ModelDocument {
  std::string name;
  UniversePtr universe;
  BuildMode mode = BuildMode::Flag;
  int max_dim = 1;
  /// Flag mode: vertices of the graph, isolated ones included. Empty means
  /// "the endpoints of the edges".
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<std::string>> simplices;
  std::map<std::string, std::string> metadata;

  bool operator==(const ModelDocument& other) const;
};

struct ParsedModel {
  ModelDocument document;
  LabelledComplex complex;
  std::vector<std::string> warnings;
};

struct ParseOptions {
  /// Explicit mode: add missing faces (with a warning) instead of failing.
  bool auto_close = false;
  /// Used as the location prefix in error messages.
  std::string source = "<model>";
};

/// Throws InputError with a "source: /json/pointer: message" location.
ParsedModel parse_model(std::string_view text, const ParseOptions& options = {});
/// Runs the construction of an already-parsed document.
ParsedModel build_model(ModelDocument document, const ParseOptions& options = {});
std::string serialize_model(const ModelDocument& document);

/// Explicit-mode document listing every simplex of the complex.
ModelDocument document_from_complex(const LabelledComplex& complex, std::string name);

UniversePtr parse_universe(std::string_view text, const std::string& source = "<universe>");
std::string serialize_universe(const ComponentUniverse& universe);

ConceptDeclaration parse_declaration(std::string_view text, const std::string& source = "<declaration>");
std::string serialize_declaration(const ConceptDeclaration& decl);

std::vector<EquivalenceOp> parse_script(std::string_view text, const std::string& source = "<script>");
std::string serialize_script(const std::vector<EquivalenceOp>& script);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace modelhom
