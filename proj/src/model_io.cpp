#include "modelhom/model_io.hpp"

#include "json_format.hpp"
#include "modelhom/error.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace modelhom {

using nlohmann::json;

namespace {

// Cursor into a parsed document that knows its JSON pointer for messages.
class Node {
 public:
  Node(const json& value, std::string source, std::string path = "")
      : value_(value), source_(std::move(source)), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError(source_ + ": " + (path_.empty() ? "/" : path_) + ": " + message);
  }

  const json& value() const { return value_; }
  const std::string& source() const { return source_; }

  Node at(const std::string& key) const {
    if (!value_.contains(key)) fail("missing required key '" + key + "'");
    return Node(value_.at(key), source_, path_ + "/" + key);
  }
  Node at(std::size_t i) const { return Node(value_.at(i), source_, path_ + "/" + std::to_string(i)); }
  bool has(const std::string& key) const { return value_.contains(key); }
  std::size_t size() const { return value_.size(); }

  void object(std::initializer_list<const char*> allowed) const {
    if (!value_.is_object()) fail("expected an object");
    for (const auto& [key, _] : value_.items())
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
        fail("unknown key '" + key + "'");
  }
  void array() const {
    if (!value_.is_array()) fail("expected an array");
  }
  std::string string() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }
  std::vector<std::string> strings() const {
    array();
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).string());
    return out;
  }
  int integer() const {
    if (!value_.is_number_integer()) fail("expected an integer");
    return value_.get<int>();
  }

 private:
  const json& value_;
  std::string source_;
  std::string path_;
};

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

UniversePtr universe_from(const Node& n) {
  n.object({"hash", "labels", "name"});
  const auto labels = n.at("labels").strings();
  std::string name = n.has("name") ? n.at("name").string() : std::string();
  UniversePtr u;
  try {
    u = make_universe(std::move(name), labels);
  } catch (const InputError& e) {
    n.at("labels").fail(e.what());
  }
  if (n.has("hash") && n.at("hash").string() != u->hash())
    n.at("hash").fail("hash " + n.at("hash").string() + " does not match the labels (" + u->hash() + ")");
  return u;
}

json universe_json(const ComponentUniverse& u) {
  return json{{"hash", u.hash()}, {"labels", u.labels()}, {"name", u.name()}};
}

std::vector<IdentifyGroup> groups_from(const Node& n) {
  n.array();
  std::vector<IdentifyGroup> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const Node g = n.at(i);
    g.object({"into", "members"});
    out.push_back({g.at("members").strings(), g.at("into").string()});
  }
  return out;
}

json groups_json(const std::vector<IdentifyGroup>& groups) {
  json out = json::array();
  for (const auto& g : groups) out.push_back(json{{"into", g.into}, {"members", g.members}});
  return out;
}

EquivalenceOp op_from(const Node& n) {
  if (!n.value().is_object()) n.fail("expected an operation object");
  const std::string kind = n.at("op").string();
  if (kind == "identify_adjacent") {
    n.object({"op", "u", "v", "into"});
    return IdentifyAdjacent{n.at("u").string(), n.at("v").string(), n.at("into").string()};
  }
  if (kind == "identify_nonadjacent") {
    n.object({"op", "u", "v", "into", "groups"});
    if (n.has("groups")) {
      if (n.has("u") || n.has("v") || n.has("into")) n.fail("give either u/v/into or groups, not both");
      return IdentifyNonadjacent{groups_from(n.at("groups"))};
    }
    return IdentifyNonadjacent{{IdentifyGroup{{n.at("u").string(), n.at("v").string()}, n.at("into").string()}}};
  }
  if (kind == "split") {
    n.object({"op", "u", "into"});
    const auto into = n.at("into").strings();
    if (into.size() != 2) n.at("into").fail("a split produces exactly two labels");
    return Split{n.at("u").string(), into[0], into[1]};
  }
  if (kind == "include") {
    n.object({"op", "simplices", "groups"});
    Include inc;
    const Node s = n.at("simplices");
    s.array();
    for (std::size_t i = 0; i < s.size(); ++i) inc.simplices.push_back(s.at(i).strings());
    if (n.has("groups")) inc.groups = groups_from(n.at("groups"));
    return inc;
  }
  if (kind == "substitute") {
    n.object({"op", "u", "into"});
    return Substitute{n.at("u").string(), n.at("into").string()};
  }
  n.at("op").fail("unknown operation '" + kind + "'");
}

json op_json(const EquivalenceOp& op) {
  json out{{"op", op_name(op)}};
  if (auto o = std::get_if<IdentifyAdjacent>(&op)) {
    out["u"] = o->u;
    out["v"] = o->v;
    out["into"] = o->into;
  } else if (auto o = std::get_if<IdentifyNonadjacent>(&op)) {
    if (o->groups.size() == 1 && o->groups[0].members.size() == 2) {
      out["u"] = o->groups[0].members[0];
      out["v"] = o->groups[0].members[1];
      out["into"] = o->groups[0].into;
    } else {
      out["groups"] = groups_json(o->groups);
    }
  } else if (auto o = std::get_if<Split>(&op)) {
    out["u"] = o->u;
    out["into"] = json::array({o->c, o->d});
  } else if (auto o = std::get_if<Include>(&op)) {
    out["simplices"] = o->simplices;
    if (!o->groups.empty()) out["groups"] = groups_json(o->groups);
  } else if (auto o = std::get_if<Substitute>(&op)) {
    out["u"] = o->u;
    out["into"] = o->into;
  }
  return out;
}

}  // namespace

bool ModelDocument::operator==(const ModelDocument& o) const {
  return name == o.name && same_universe(universe, o.universe) && universe->name() == o.universe->name() &&
         mode == o.mode && max_dim == o.max_dim && vertices == o.vertices && edges == o.edges &&
         simplices == o.simplices && metadata == o.metadata;
}

ParsedModel parse_model(std::string_view text, const ParseOptions& options) {
  const json doc = parse_json(text, options.source);
  const Node root(doc, options.source);
  root.object({"edges", "max_dim", "metadata", "mode", "name", "simplices", "universe", "vertices"});

  ModelDocument d;
  d.name = root.at("name").string();
  d.universe = universe_from(root.at("universe"));
  const std::string mode = root.at("mode").string();
  if (mode == "flag") {
    d.mode = BuildMode::Flag;
  } else if (mode == "explicit") {
    d.mode = BuildMode::Explicit;
  } else {
    root.at("mode").fail("mode must be 'flag' or 'explicit'");
  }
  d.max_dim = root.at("max_dim").integer();
  if (d.max_dim < 0 || (d.mode == BuildMode::Flag && d.max_dim < 1))
    root.at("max_dim").fail(d.mode == BuildMode::Flag ? "flag mode needs max_dim >= 1" : "max_dim must be >= 0");

  auto known = [&](const Node& n) {
    const std::string label = n.string();
    if (!d.universe->contains(label)) n.fail("unknown label '" + label + "'");
    return label;
  };

  if (d.mode == BuildMode::Flag) {
    if (root.has("simplices")) root.at("simplices").fail("flag mode takes edges, not simplices");
    if (root.has("vertices")) {
      const Node vs = root.at("vertices");
      vs.array();
      for (std::size_t i = 0; i < vs.size(); ++i) d.vertices.push_back(known(vs.at(i)));
    }
    const Node es = root.at("edges");
    es.array();
    for (std::size_t i = 0; i < es.size(); ++i) {
      const Node e = es.at(i);
      e.array();
      if (e.size() != 2) e.fail("an edge has exactly two labels");
      std::string a = known(e.at(0)), b = known(e.at(1));
      if (a == b) e.fail("self-loop on '" + a + "'");
      if (!d.vertices.empty()) {
        for (const auto& x : {a, b})
          if (std::find(d.vertices.begin(), d.vertices.end(), x) == d.vertices.end())
            e.fail("endpoint '" + x + "' is not listed under vertices");
      }
      d.edges.emplace_back(std::move(a), std::move(b));
    }
  } else {
    if (root.has("edges")) root.at("edges").fail("explicit mode takes simplices, not edges");
    if (root.has("vertices")) root.at("vertices").fail("explicit mode lists vertices as 0-simplices");
    const Node ss = root.at("simplices");
    ss.array();
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const Node s = ss.at(i);
      s.array();
      if (s.size() == 0) s.fail("empty simplex");
      std::vector<std::string> labels;
      for (std::size_t j = 0; j < s.size(); ++j) labels.push_back(known(s.at(j)));
      if (static_cast<int>(labels.size()) - 1 > d.max_dim) s.fail("simplex exceeds max_dim");
      std::set<std::string> distinct(labels.begin(), labels.end());
      if (distinct.size() != labels.size()) s.fail("repeated label in simplex");
      d.simplices.push_back(std::move(labels));
    }
  }
  if (root.has("metadata")) {
    const Node m = root.at("metadata");
    if (!m.value().is_object()) m.fail("expected an object");
    for (const auto& [key, _] : m.value().items()) d.metadata[key] = m.at(key).string();
  }

  ParseOptions opts = options;
  try {
    return build_model(std::move(d), opts);
  } catch (const InputError& e) {
    throw InputError(options.source + ": " + e.what());
  }
}

ParsedModel build_model(ModelDocument document, const ParseOptions& options) {
  ParsedModel out;
  const UniversePtr& u = document.universe;
  if (!u) throw InputError("model has no universe");
  if (document.mode == BuildMode::Flag) {
    std::vector<Vertex> verts;
    for (const auto& l : document.vertices) verts.push_back(u->index(l));
    std::vector<Edge> edges;
    for (const auto& [a, b] : document.edges) {
      edges.emplace_back(u->index(a), u->index(b));
      if (document.vertices.empty()) {
        verts.push_back(edges.back().first);
        verts.push_back(edges.back().second);
      }
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.complex = clique_complete(u, verts, edges, document.max_dim);
  } else {
    std::vector<Simplex> simplices;
    for (const auto& labels : document.simplices) {
      std::vector<Vertex> vs;
      for (const auto& l : labels) vs.push_back(u->index(l));
      simplices.emplace_back(std::move(vs));
    }
    LabelledComplex k(u, std::move(simplices), document.max_dim);
    const auto report = validate(k);
    if (!report.ok()) {
      if (!options.auto_close) {
        std::size_t at = 0;
        for (; at < document.simplices.size(); ++at) {
          std::vector<Vertex> vs;
          for (const auto& l : document.simplices[at]) vs.push_back(u->index(l));
          if (Simplex(vs) == report.violations.front().simplex) break;
        }
        throw InputError("/simplices/" + std::to_string(at) + ": not closed under faces: " + report.describe(*u));
      }
      out.warnings.push_back("added missing faces: " + report.describe(*u));
      k = close_downward(k);
    }
    out.complex = std::move(k);
  }
  out.document = std::move(document);
  return out;
}

std::string serialize_model(const ModelDocument& d) {
  const auto& u = *d.universe;
  json out{{"name", d.name}, {"universe", universe_json(u)}, {"max_dim", d.max_dim}};
  auto by_index = [&](const std::string& a, const std::string& b) { return u.index(a) < u.index(b); };
  if (d.mode == BuildMode::Flag) {
    out["mode"] = "flag";
    if (!d.vertices.empty()) {
      auto vs = d.vertices;
      std::sort(vs.begin(), vs.end(), by_index);
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      out["vertices"] = vs;
    }
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const auto& [a, b] : d.edges) es.emplace_back(std::minmax(u.index(a), u.index(b)));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    json edges = json::array();
    for (const auto& [a, b] : es) edges.push_back(json::array({u.label(a), u.label(b)}));
    out["edges"] = std::move(edges);
  } else {
    out["mode"] = "explicit";
    std::vector<Simplex> ss;
    for (const auto& labels : d.simplices) {
      std::vector<Vertex> vs;
      for (const auto& l : labels) vs.push_back(u.index(l));
      ss.emplace_back(std::move(vs));
    }
    std::sort(ss.begin(), ss.end());
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
    json simplices = json::array();
    for (const auto& s : ss) simplices.push_back(simplex_labels(u, s));
    out["simplices"] = std::move(simplices);
  }
  if (!d.metadata.empty()) out["metadata"] = d.metadata;
  return detail::canonical_dump(out);
}

ModelDocument document_from_complex(const LabelledComplex& complex, std::string name) {
  ModelDocument d;
  d.name = std::move(name);
  d.universe = complex.universe();
  d.mode = BuildMode::Explicit;
  d.max_dim = complex.max_dim();
  for (const auto& s : complex.simplices()) d.simplices.push_back(simplex_labels(*complex.universe(), s));
  return d;
}

UniversePtr parse_universe(std::string_view text, const std::string& source) {
  const json doc = parse_json(text, source);
  return universe_from(Node(doc, source));
}

std::string serialize_universe(const ComponentUniverse& universe) {
  return detail::canonical_dump(universe_json(universe));
}

ConceptDeclaration parse_declaration(std::string_view text, const std::string& source) {
  const json doc = parse_json(text, source);
  const Node root(doc, source);
  root.object({"classes"});
  const Node cs = root.at("classes");
  cs.array();
  std::vector<std::vector<std::string>> classes;
  for (std::size_t i = 0; i < cs.size(); ++i) classes.push_back(cs.at(i).strings());
  try {
    return ConceptDeclaration(std::move(classes));
  } catch (const InputError& e) {
    cs.fail(e.what());
  }
}

std::string serialize_declaration(const ConceptDeclaration& decl) {
  return detail::canonical_dump(json{{"classes", decl.classes()}});
}

std::vector<EquivalenceOp> parse_script(std::string_view text, const std::string& source) {
  const json doc = parse_json(text, source);
  const Node root(doc, source);
  root.array();
  std::vector<EquivalenceOp> out;
  for (std::size_t i = 0; i < root.size(); ++i) out.push_back(op_from(root.at(i)));
  return out;
}

std::string serialize_script(const std::vector<EquivalenceOp>& script) {
  json out = json::array();
  for (const auto& op : script) out.push_back(op_json(op));
  return detail::canonical_dump(out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace modelhom
