#include "modelhom/fixtures.hpp"

#include "modelhom/error.hpp"

#include <algorithm>
#include <filesystem>

namespace modelhom {

namespace {

const std::vector<std::string> bisubstrate_base = {"E", "A", "EA", "B", "EAB", "EPQ", "P", "EQ", "Q"};

// Copy i of a bisubstrate label: every species letter gets the subscript.
std::string subscripted(const std::string& label, int i) {
  std::string out;
  for (char c : label) {
    out.push_back(c);
    out += "_" + std::to_string(i);
  }
  return out;
}

std::vector<std::vector<std::string>> closed(const std::vector<std::vector<std::string>>& maximal) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : maximal) {
    const std::size_t n = s.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::string> face;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) face.push_back(s[j]);
      out.push_back(std::move(face));
    }
  }
  return out;
}

const std::vector<std::vector<std::string>> ordered_steps = {
    {"E", "A", "EA"}, {"EA", "B", "EAB"}, {"EAB", "EPQ"}, {"EPQ", "P", "EQ"}, {"EQ", "E", "Q"}};

std::vector<std::vector<std::string>> random_copy(int i) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : ordered_steps) {
    std::vector<std::string> t;
    for (const auto& l : s) t.push_back(subscripted(l, i));
    out.push_back(std::move(t));
  }
  return out;
}

ModelDocument explicit_document(std::string name, const UniversePtr& u,
                                const std::vector<std::vector<std::string>>& maximal, int max_dim) {
  ModelDocument d;
  d.name = std::move(name);
  d.universe = u;
  d.mode = BuildMode::Explicit;
  d.max_dim = max_dim;
  ModelDocument tmp = d;
  tmp.simplices = closed(maximal);
  // canonical order and no duplicates, via the complex
  const auto complex = build_model(std::move(tmp)).complex;
  for (const auto& s : complex.simplices()) d.simplices.push_back(simplex_labels(*u, s));
  return d;
}

using Pair = std::pair<std::string, std::string>;

// 1-skeleton of the annihilation model, recovered so that flag completion
// matches the published simplex counts of both morphogen models (see
// tools/reconstruct_turing_pi.py).
const std::vector<Pair> pi4_edges = {
    {"Morphogen 1", "Diffusion 1"},
    {"Morphogen 1", "Degradation 1"},
    {"Morphogen 1", "Influx 1"},
    {"Morphogen 1", "Morphogen 2"},
    {"Morphogen 1", "Influx 2"},
    {"Morphogen 1", "Annihilation between Morphogens 1 and 2"},
    {"Morphogen 1", "Monotonic gradient"},
    {"Morphogen 1", "Global scale-invariance"},
    {"Diffusion 1", "Degradation 1"},
    {"Diffusion 1", "Influx 1"},
    {"Diffusion 1", "Annihilation between Morphogens 1 and 2"},
    {"Diffusion 1", "Monotonic gradient"},
    {"Diffusion 1", "Global scale-invariance"},
    {"Degradation 1", "Influx 1"},
    {"Degradation 1", "Morphogen 2"},
    {"Degradation 1", "Influx 2"},
    {"Degradation 1", "Annihilation between Morphogens 1 and 2"},
    {"Degradation 1", "Monotonic gradient"},
    {"Degradation 1", "Global scale-invariance"},
    {"Influx 1", "Influx 2"},
    {"Influx 1", "Monotonic gradient"},
    {"Morphogen 2", "Diffusion 2"},
    {"Morphogen 2", "Degradation 2"},
    {"Morphogen 2", "Influx 2"},
    {"Morphogen 2", "Annihilation between Morphogens 1 and 2"},
    {"Morphogen 2", "Monotonic gradient"},
    {"Morphogen 2", "Global scale-invariance"},
    {"Diffusion 2", "Degradation 2"},
    {"Diffusion 2", "Influx 2"},
    {"Degradation 2", "Influx 2"},
    {"Influx 2", "Global scale-invariance"},
    {"Annihilation between Morphogens 1 and 2", "Global scale-invariance"},
    {"Monotonic gradient", "Global scale-invariance"},
};

const std::vector<std::string> pi4_vertices = {
    "Morphogen 1", "Diffusion 1", "Degradation 1", "Influx 1",
    "Morphogen 2", "Diffusion 2", "Degradation 2", "Influx 2",
    "Annihilation between Morphogens 1 and 2", "Monotonic gradient", "Global scale-invariance"};

// The activator-inhibitor graph differs by relabelling and by doubling two
// vertices into adjacent twins.
const std::vector<std::pair<std::string, std::vector<std::string>>> tp1_replacements = {
    {"Influx 1", {"Basal production 1", "Self-activation of Morphogen 1"}},
    {"Influx 2", {"Basal production 2"}},
    {"Annihilation between Morphogens 1 and 2",
     {"Activation of Morphogen 2 by Morphogen 1", "Inhibition of Morphogen 1 by Morphogen 2"}},
    {"Monotonic gradient", {"Oscillatory gradient"}},
};

std::vector<std::string> images(const std::string& label) {
  for (const auto& [from, to] : tp1_replacements)
    if (from == label) return to;
  return {label};
}

ModelDocument flag_document(std::string name, const UniversePtr& u, std::vector<std::string> vertices,
                            std::vector<Pair> edges, int max_dim) {
  ModelDocument d;
  d.name = std::move(name);
  d.universe = u;
  d.mode = BuildMode::Flag;
  d.max_dim = max_dim;
  std::sort(vertices.begin(), vertices.end(),
            [&](const std::string& a, const std::string& b) { return u->index(a) < u->index(b); });
  d.vertices = std::move(vertices);
  for (auto& [a, b] : edges)
    if (u->index(b) < u->index(a)) std::swap(a, b);
  std::sort(edges.begin(), edges.end(), [&](const Pair& x, const Pair& y) {
    return std::make_pair(u->index(x.first), u->index(x.second)) <
           std::make_pair(u->index(y.first), u->index(y.second));
  });
  d.edges = std::move(edges);
  return d;
}

ModelDocument lotka_volterra() {
  const auto u = lotka_volterra_universe();
  // union of the marks in each row of the interconnection table
  std::vector<Pair> edges = {
      {"Prey", "Prey growth"},
      {"Prey", "Predation"},
      {"Prey", "Oscillatory population"},
      {"Prey growth", "Predation"},
      {"Prey growth", "Oscillatory population"},
      {"Predation", "Oscillatory population"},
      {"Predation", "Predator"},
      {"Predation", "Predator growth"},
      {"Oscillatory population", "Predator"},
      {"Oscillatory population", "Predator growth"},
      {"Oscillatory population", "Predator death"},
      {"Predator", "Predator growth"},
      {"Predator", "Predator death"},
      {"Predator growth", "Predator death"},
  };
  auto d = flag_document("lotka_volterra", u, u->labels(), std::move(edges), 6);
  return d;
}

ModelDocument pi4() {
  auto d = flag_document("pi4_annihilation", turing_pi_universe(), pi4_vertices, pi4_edges, 5);
  d.metadata["model"] = "positional information: annihilation";
  d.metadata["status"] = "reconstructed";
  return d;
}

ModelDocument tp1() {
  std::vector<std::string> vertices;
  for (const auto& v : pi4_vertices)
    for (const auto& w : images(v)) vertices.push_back(w);
  std::vector<Pair> edges;
  for (const auto& [a, b] : pi4_edges)
    for (const auto& x : images(a))
      for (const auto& y : images(b)) edges.emplace_back(x, y);
  for (const auto& [from, to] : tp1_replacements)
    if (to.size() == 2) edges.emplace_back(to[0], to[1]);
  auto d = flag_document("tp1_activator_inhibitor", turing_pi_universe(), std::move(vertices), std::move(edges), 5);
  d.metadata["model"] = "Turing pattern: activator-inhibitor";
  d.metadata["status"] = "reconstructed";
  return d;
}

ModelDocument ordered_sequential() {
  return explicit_document("ordered_sequential", bisubstrate_universe(), ordered_steps, 2);
}

ModelDocument random_sequential() {
  std::vector<std::vector<std::string>> maximal;
  for (int i = 1; i <= 4; ++i) {
    auto copy = random_copy(i);
    maximal.insert(maximal.end(), copy.begin(), copy.end());
  }
  return explicit_document("random_sequential", bisubstrate_universe(), maximal, 2);
}

ModelDocument ping_pong() {
  return explicit_document("ping_pong", bisubstrate_universe(),
                           {{"E", "A", "EA"},
                            {"EA", "E*P"},
                            {"E*P", "E*", "P"},
                            {"E*", "B", "E*B"},
                            {"E*B", "EQ"},
                            {"EQ", "E", "Q"}},
                           2);
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"lotka_volterra", "ordered_sequential", "random_sequential",
          "ping_pong",      "pi4_annihilation",   "tp1_activator_inhibitor"};
}

ModelDocument fixture_document(const std::string& name) {
  if (name == "lotka_volterra") return lotka_volterra();
  if (name == "ordered_sequential") return ordered_sequential();
  if (name == "random_sequential") return random_sequential();
  if (name == "ping_pong") return ping_pong();
  if (name == "pi4_annihilation") return pi4();
  if (name == "tp1_activator_inhibitor") return tp1();
  throw InputError("unknown fixture '" + name + "'");
}

LabelledComplex load_fixture(const std::string& name) { return build_model(fixture_document(name)).complex; }

UniversePtr lotka_volterra_universe() {
  static const UniversePtr u =
      make_universe("lotka_volterra", {"Prey", "Prey growth", "Predation", "Oscillatory population", "Predator",
                                       "Predator growth", "Predator death"});
  return u;
}

UniversePtr bisubstrate_universe() {
  static const UniversePtr u = [] {
    std::vector<std::string> labels = bisubstrate_base;
    for (const char* extra : {"E*P", "E*", "E*B"}) labels.emplace_back(extra);
    for (int i = 1; i <= 4; ++i)
      for (const auto& l : bisubstrate_base) labels.push_back(subscripted(l, i));
    return make_universe("bisubstrate", std::move(labels));
  }();
  return u;
}

UniversePtr turing_pi_universe() {
  static const UniversePtr u = [] {
    std::vector<std::string> labels;
    for (int i = 1; i <= 43; ++i) labels.push_back("Component " + std::to_string(i));
    const std::pair<int, const char*> named[] = {
        {1, "Morphogen 1"},
        {2, "Diffusion 1"},
        {3, "Degradation 1"},
        {5, "Basal production 1"},
        {6, "Influx 1"},
        {9, "Morphogen 2"},
        {10, "Diffusion 2"},
        {11, "Degradation 2"},
        {12, "Basal production 2"},
        {13, "Influx 2"},
        {26, "Annihilation between Morphogens 1 and 2"},
        {27, "Self-activation of Morphogen 1"},
        {28, "Activation of Morphogen 2 by Morphogen 1"},
        {29, "Inhibition of Morphogen 1 by Morphogen 2"},
        {40, "Monotonic gradient"},
        {41, "Oscillatory gradient"},
        {43, "Global scale-invariance"},
    };
    for (const auto& [i, l] : named) labels[static_cast<std::size_t>(i - 1)] = l;
    return make_universe("turing_pi", std::move(labels));
  }();
  return u;
}

ConceptDeclaration turing_pi_declaration() {
  return ConceptDeclaration({
      {"Influx 1", "Basal production 1", "Self-activation of Morphogen 1"},
      {"Influx 2", "Basal production 2"},
      {"Monotonic gradient", "Oscillatory gradient"},
      {"Annihilation between Morphogens 1 and 2", "Activation of Morphogen 2 by Morphogen 1",
       "Inhibition of Morphogen 1 by Morphogen 2"},
  });
}

ConceptDeclaration bisubstrate_declaration() {
  std::vector<std::vector<std::string>> classes;
  for (const auto& l : bisubstrate_base) {
    std::vector<std::string> c{l};
    for (int i = 1; i <= 4; ++i) c.push_back(subscripted(l, i));
    classes.push_back(std::move(c));
  }
  return ConceptDeclaration(std::move(classes));
}

std::vector<std::string> script_names() {
  return {"tp1_to_pi4", "pi4_to_tp1", "ordered_to_random", "random_to_ordered"};
}

std::vector<EquivalenceOp> fixture_script(const std::string& name) {
  const std::string b1 = "Basal production 1", sa1 = "Self-activation of Morphogen 1", in1 = "Influx 1";
  const std::string b2 = "Basal production 2", in2 = "Influx 2";
  const std::string osc = "Oscillatory gradient", mono = "Monotonic gradient";
  const std::string act = "Activation of Morphogen 2 by Morphogen 1", inh = "Inhibition of Morphogen 1 by Morphogen 2",
                    ann = "Annihilation between Morphogens 1 and 2";
  if (name == "tp1_to_pi4")
    return {IdentifyAdjacent{b1, sa1, in1}, Substitute{b2, in2}, Substitute{osc, mono},
            IdentifyAdjacent{act, inh, ann}};
  if (name == "pi4_to_tp1")
    return {Split{ann, act, inh}, Substitute{mono, osc}, Substitute{in2, b2}, Split{in1, b1, sa1}};
  if (name == "ordered_to_random") {
    std::vector<EquivalenceOp> out;
    for (const auto& l : bisubstrate_base) out.emplace_back(Substitute{l, subscripted(l, 1)});
    Include inc;
    for (int i = 2; i <= 4; ++i) {
      const auto copy = explicit_document("copy", bisubstrate_universe(), random_copy(i), 2);
      inc.simplices.insert(inc.simplices.end(), copy.simplices.begin(), copy.simplices.end());
    }
    for (const auto& l : bisubstrate_base) {
      IdentifyGroup g{{}, subscripted(l, 1)};
      for (int i = 1; i <= 4; ++i) g.members.push_back(subscripted(l, i));
      inc.groups.push_back(std::move(g));
    }
    out.emplace_back(std::move(inc));
    return out;
  }
  if (name == "random_to_ordered") {
    IdentifyNonadjacent op;
    for (const auto& l : bisubstrate_base) {
      IdentifyGroup g{{}, l};
      for (int i = 1; i <= 4; ++i) g.members.push_back(subscripted(l, i));
      op.groups.push_back(std::move(g));
    }
    return {op};
  }
  throw InputError("unknown script '" + name + "'");
}

std::vector<std::string> export_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  for (const char* sub : {"models", "universes", "declarations", "scripts"}) fs::create_directories(root / sub);
  std::vector<std::string> written;
  auto put = [&](const std::string& rel, const std::string& content) {
    write_file((root / rel).string(), content);
    written.push_back(rel);
  };
  for (const auto& n : fixture_names()) put("models/" + n + ".json", serialize_model(fixture_document(n)));
  put("universes/lotka_volterra.json", serialize_universe(*lotka_volterra_universe()));
  put("universes/bisubstrate.json", serialize_universe(*bisubstrate_universe()));
  put("universes/turing_pi.json", serialize_universe(*turing_pi_universe()));
  put("declarations/turing_pi.json", serialize_declaration(turing_pi_declaration()));
  put("declarations/bisubstrate.json", serialize_declaration(bisubstrate_declaration()));
  for (const auto& n : script_names()) put("scripts/" + n + ".json", serialize_script(fixture_script(n)));
  return written;
}

}  // namespace modelhom
