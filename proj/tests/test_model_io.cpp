#include "doctest.h"
#include "oracles.hpp"

#include "modelhom/error.hpp"
#include "modelhom/fixtures.hpp"

#include <filesystem>

using namespace modelhom;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = MODELHOM_DATA_DIR;

std::string error_of(const std::string& text, const ParseOptions& options = {}) {
  try {
    parse_model(text, options);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

const char* flag_triangle = R"({
  "name": "tri",
  "universe": {"labels": ["a", "b", "c"]},
  "mode": "flag",
  "max_dim": 2,
  "edges": [["a", "b"], ["b", "c"], ["a", "c"]]
})";

}  // namespace

TEST_CASE("flag documents build their clique complex") {
  const auto m = parse_model(flag_triangle);
  CHECK(m.complex.size() == 7);
  CHECK(m.warnings.empty());
  CHECK(m.document.name == "tri");
  CHECK(m.document.mode == BuildMode::Flag);
}

TEST_CASE("explicit documents and auto-close") {
  const std::string doc = R"({"name": "e", "universe": {"labels": ["a", "b", "c"]}, "mode": "explicit",
    "max_dim": 2, "simplices": [["a"], ["b"], ["a", "b"], ["a", "b", "c"]]})";
  const auto err = error_of(doc, {false, "e.json"});
  CHECK(err.rfind("e.json: ", 0) == 0);
  CHECK(err.find("/simplices") != std::string::npos);

  const auto closed = parse_model(doc, {true, "e.json"});
  CHECK(closed.complex.size() == 7);
  CHECK_FALSE(closed.warnings.empty());
  CHECK(validate(closed.complex).ok());
}

TEST_CASE("schema errors point at the offending location") {
  CHECK(error_of("{").find("<model>") == 0);
  CHECK(error_of("[]").find("<model>") == 0);
  CHECK(error_of(R"({"name": "x", "universe": {"labels": ["a"]}, "mode": "flag", "max_dim": 1, "edges": [], "colour": 1})")
            .find("colour") != std::string::npos);
  CHECK(error_of(R"({"name": "x", "universe": {"labels": ["a"]}, "mode": "sideways", "max_dim": 1, "edges": []})")
            .find("/mode") != std::string::npos);
  CHECK(error_of(R"({"name": "x", "universe": {"labels": ["a", "b"]}, "mode": "flag", "max_dim": 1, "edges": [["a", "z"]]})")
            .find("/edges/0") != std::string::npos);
  CHECK(error_of(R"({"name": "x", "universe": {"labels": ["a", "a"]}, "mode": "flag", "max_dim": 1, "edges": []})")
            .find("/universe") != std::string::npos);
  CHECK(error_of(R"({"name": "x", "universe": {"labels": ["a", "b"], "hash": "0000000000000000"}, "mode": "flag",
    "max_dim": 1, "edges": []})")
            .find("hash") != std::string::npos);
  CHECK(error_of(R"({"name": "x", "universe": {"labels": ["a", "b"]}, "mode": "explicit", "max_dim": 0,
    "simplices": [["a", "b"]]})")
            .find("/simplices/0") != std::string::npos);
  CHECK(error_of(R"({"name": "x", "universe": {"labels": ["a", "b"]}, "mode": "explicit", "max_dim": 2,
    "simplices": [["a", "a"]]})")
            .find("/simplices/0") != std::string::npos);
  CHECK(error_of(R"({"name": "x", "universe": {"labels": ["a"]}, "mode": "explicit", "max_dim": 1, "simplices": [],
    "edges": []})")
            .find("edges") != std::string::npos);
}

TEST_CASE("documents round trip through serialization") {
  for (const auto& name : fixture_names()) {
    const auto doc = fixture_document(name);
    const auto text = serialize_model(doc);
    const auto again = parse_model(text, {false, name});
    CHECK(again.document == doc);
    CHECK(serialize_model(again.document) == text);
    CHECK(again.complex == load_fixture(name));
  }

  std::mt19937_64 rng(73);
  auto u = oracle::numbered_universe(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto k = oracle::random_complex(rng, u, 3, 4);
    const auto doc = document_from_complex(k, "r" + std::to_string(trial));
    CHECK(parse_model(serialize_model(doc)).complex == k);
  }
}

TEST_CASE("checked-in fixtures match the generators byte for byte") {
  const auto tmp = fs::temp_directory_path() / "modelhom_fixture_check";
  fs::remove_all(tmp);
  const auto written = export_fixtures(tmp.string());
  CHECK(written.size() == 15);
  for (const auto& rel : written) {
    CAPTURE(rel);
    CHECK(read_file((tmp / rel).string()) == read_file(data_dir + "/fixtures/" + rel));
  }
  fs::remove_all(tmp);
}

TEST_CASE("templates parse as empty models") {
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(data_dir + "/templates")) {
    const auto m = parse_model(read_file(entry.path().string()), {false, entry.path().string()});
    CHECK(m.complex.empty());
    CHECK(m.document.universe->hash() == turing_pi_universe()->hash());
    ++n;
  }
  CHECK(n == 7);
}

TEST_CASE("universe, declaration and script files round trip") {
  const auto u = turing_pi_universe();
  CHECK(u->size() == 43);
  const auto back = parse_universe(serialize_universe(*u));
  CHECK(back->labels() == u->labels());
  CHECK(back->hash() == u->hash());

  const auto decl = bisubstrate_declaration();
  CHECK(parse_declaration(serialize_declaration(decl)).classes() == decl.classes());
  CHECK_THROWS_AS(parse_declaration(R"({"classes": [["a", "b"], ["b"]]})"), InputError);
  CHECK_THROWS_AS(parse_declaration(R"({"groups": []})"), InputError);

  for (const auto& name : script_names()) {
    const auto s = fixture_script(name);
    CHECK(parse_script(serialize_script(s)) == s);
  }
  const std::vector<EquivalenceOp> all_kinds{
      IdentifyAdjacent{"a", "b", "c"}, IdentifyNonadjacent{{{{"a", "b"}, "c"}}},
      IdentifyNonadjacent{{{{"a", "b", "x"}, "c"}, {{"d", "e"}, "d"}}}, Split{"a", "b", "c"},
      Include{{{"a"}, {"a", "b"}}, {{{"a", "x"}, "x"}}}, Substitute{"a", "z"}};
  CHECK(parse_script(serialize_script(all_kinds)) == all_kinds);
  CHECK_THROWS_AS(parse_script(R"([{"op": "teleport"}])"), InputError);
  CHECK_THROWS_AS(parse_script(R"([{"op": "substitute", "u": "a"}])"), InputError);
  CHECK_THROWS_AS(parse_script(R"({"op": "substitute"})"), InputError);
}

TEST_CASE("file helpers") {
  CHECK_THROWS_AS(read_file("/nonexistent/modelhom.json"), InputError);
  const auto path = (fs::temp_directory_path() / "modelhom_io_check.txt").string();
  write_file(path, "abc\n");
  CHECK(read_file(path) == "abc\n");
  fs::remove(path);
}
