#include "doctest.h"
#include "oracles.hpp"

#include "modelhom/barcode.hpp"
#include "modelhom/error.hpp"
#include "modelhom/fixtures.hpp"

using namespace modelhom;

namespace {

UniversePtr abc() { return make_universe("abc", {"a", "b", "c"}); }

LabelledComplex hollow(const UniversePtr& u) { return LabelledComplex(u, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}, 2); }

std::vector<std::size_t> infinite_counts(const PersistenceDiagram& d, int top) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= top; ++k) out.push_back(d.infinite_count(k));
  return out;
}

}  // namespace

TEST_CASE("hollow triangle diagram") {
  auto u = abc();
  const auto d = compute_persistence(hollow(u), FiltrationOrder::shortlex(u, 2), "hollow");
  using I = PersistenceInterval;
  CHECK(d.intervals(0) == std::vector<I>{{0, 1, std::nullopt}, {0, 2, 4}, {0, 3, 5}});
  CHECK(d.intervals(1) == std::vector<I>{{1, 6, std::nullopt}});
  CHECK(d.betti() == std::vector<std::size_t>{1, 1});
  CHECK(oracle::diagram_invariants_hold(d));
}

TEST_CASE("full triangle kills the loop") {
  auto u = abc();
  const LabelledComplex full(u, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
  const auto d = compute_persistence(full, FiltrationOrder::shortlex(u, 2));
  CHECK(d.intervals(1) == std::vector<PersistenceInterval>{{1, 6, 7}});
  CHECK(d.betti() == std::vector<std::size_t>{1, 0});
  CHECK(betti(full, FiltrationOrder::shortlex(u, 2)) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("empty complex has an empty diagram") {
  auto u = abc();
  const auto d = compute_persistence(LabelledComplex(u, {}), FiltrationOrder::shortlex(u, 2));
  CHECK(d.interval_count() == 0);
  CHECK(d.simplex_count() == 0);
  CHECK(oracle::diagram_invariants_hold(d));
}

TEST_CASE("betti numbers agree with the boundary-rank oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    auto u = oracle::numbered_universe(n);
    const int m = 1 + static_cast<int>(rng() % 3);
    const auto k = oracle::random_complex(rng, u, m, 1 + rng() % 5);
    const auto d = compute_persistence(k, FiltrationOrder::permuted(FiltrationOrder::shortlex(u, m), rng()));
    CHECK(infinite_counts(d, k.dimension()) == oracle::betti(k));
    CHECK(oracle::diagram_invariants_hold(d));
  }
}

TEST_CASE("diagram endpoints are ranks of simplices of the right dimension") {
  std::mt19937_64 rng(23);
  auto u = oracle::numbered_universe(7);
  const auto o = FiltrationOrder::shortlex(u, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = oracle::random_complex(rng, u, 3, 4);
    const auto d = compute_persistence(k, o);
    for (const auto& i : d.all()) {
      CHECK(o.unrank(i.birth).dimension() == i.dim);
      CHECK(k.contains(o.unrank(i.birth)));
      if (i.death) {
        CHECK(o.unrank(*i.death).dimension() == i.dim + 1);
        CHECK(k.contains(o.unrank(*i.death)));
      }
    }
  }
}

TEST_CASE("submodel births persist in the larger model") {
  std::mt19937_64 rng(29);
  auto u = oracle::numbered_universe(7);
  const auto o = FiltrationOrder::permuted(FiltrationOrder::shortlex(u, 3), 5);
  std::size_t infinite_checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto l = oracle::random_complex(rng, u, 3, 5);
    // K: closure of a random subset of L's simplices
    std::vector<oracle::Set> keep;
    for (const auto& s : l.simplices())
      if (rng() % 3 == 0) keep.emplace_back(s.vertices().begin(), s.vertices().end());
    const auto k = oracle::to_complex(u, oracle::closure(keep), 3);
    REQUIRE(is_subcomplex(k, l));
    const auto pk = compute_persistence(k, o), pl = compute_persistence(l, o);
    for (int dim = 0; dim < pk.dimensions(); ++dim) {
      const auto& big = pl.intervals(dim);
      for (const auto& i : pk.intervals(dim)) {
        // a positive simplex of K stays positive in L
        const auto match = std::find_if(big.begin(), big.end(), [&](const auto& j) { return j.birth == i.birth; });
        CHECK(match != big.end());
        if (!i.death && match != big.end()) {
          ++infinite_checked;
          CHECK((!match->death || *match->death > i.birth));
        }
      }
    }
  }
  CHECK(infinite_checked > 0);
}

TEST_CASE("finite intervals of a submodel can shorten in the larger model") {
  // K = {2, 3, 23}, L = K + {1, 13}; with ranks 13 -> 5 and 23 -> 6 the
  // component born at 3 merges into 1 before 23 arrives.
  auto u = abc();
  const auto o = FiltrationOrder::shortlex(u, 2);
  const LabelledComplex k(u, {{2}, {3}, {2, 3}}, 2), l(u, {{1}, {2}, {3}, {1, 3}, {2, 3}}, 2);
  using I = PersistenceInterval;
  CHECK(compute_persistence(k, o).intervals(0) == std::vector<I>{{0, 2, std::nullopt}, {0, 3, 6}});
  CHECK(compute_persistence(l, o).intervals(0) == std::vector<I>{{0, 1, std::nullopt}, {0, 2, 6}, {0, 3, 5}});
}

TEST_CASE("diagrams are unchanged by extending the filtration") {
  auto u = abc();
  const auto base = FiltrationOrder::shortlex(u, 2);
  const auto ext = FiltrationOrder::extend(base, extend_universe(u, std::vector<std::string>{"d", "e"}), 3);
  CHECK(compute_persistence(hollow(u), base) == compute_persistence(hollow(u), ext));
  CHECK(compute_persistence(hollow(u), base).filtration() != compute_persistence(hollow(u), ext).filtration());
}

TEST_CASE("barcode json export") {
  auto u = abc();
  const auto d = compute_persistence(hollow(u), FiltrationOrder::shortlex(u, 2), "hollow");
  const auto json = export_barcode(d, BarcodeFormat::Json);
  CHECK(json.find("\"H0\": [[1,null],[2,4],[3,5]]") != std::string::npos);
  CHECK(json.find("\"H1\": [[6,null]]") != std::string::npos);
  CHECK(json.find("\"model\": \"hollow\"") != std::string::npos);
  CHECK(json.find("\"universe_hash\": \"" + u->hash() + "\"") != std::string::npos);
  CHECK(json.back() == '\n');

  const auto back = parse_barcode_json(json);
  CHECK(back == d);
  CHECK(back.model() == "hollow");
  CHECK(back.filtration() == d.filtration());
  CHECK(back.universe_hash() == d.universe_hash());
  CHECK(export_barcode(back, BarcodeFormat::Json) == json);
}

TEST_CASE("empty diagram exports valid documents") {
  const PersistenceDiagram empty({}, 0, "f", "h", "none");
  const auto json = export_barcode(empty, BarcodeFormat::Json);
  CHECK(json.find("\"intervals\": {}") != std::string::npos);
  CHECK(parse_barcode_json(json).interval_count() == 0);
  CHECK(export_barcode(empty, BarcodeFormat::Text).empty());
  const auto svg = export_barcode(empty, BarcodeFormat::Svg);
  CHECK(svg.find("height=\"0\"") != std::string::npos);
}

TEST_CASE("barcode round trip on random diagrams") {
  std::mt19937_64 rng(31);
  auto u = oracle::numbered_universe(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = oracle::random_complex(rng, u, 3, 4);
    const auto d = compute_persistence(k, FiltrationOrder::shortlex(u, 3), "m" + std::to_string(trial));
    const auto again = parse_barcode_json(export_barcode(d, BarcodeFormat::Json));
    CHECK(again == d);
    CHECK(again.simplex_count() == d.simplex_count());
  }
}

TEST_CASE("svg and text exports") {
  auto u = abc();
  const auto d = compute_persistence(hollow(u), FiltrationOrder::shortlex(u, 2), "hollow");
  const auto text = export_barcode(d, BarcodeFormat::Text);
  CHECK(text == "H0 [1, inf)\nH0 [2, 4)\nH0 [3, 5)\nH1 [6, inf)\n");
  const auto svg = export_barcode(d, BarcodeFormat::Svg);
  CHECK(svg.find("width=\"800\" height=\"80\"") != std::string::npos);
  // one arrow head per infinite interval
  std::size_t arrows = 0;
  for (auto pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1)) ++arrows;
  CHECK(arrows == 2);
  CHECK(export_barcode(d, BarcodeFormat::Svg) == svg);
}

TEST_CASE("barcode format and parse errors") {
  CHECK_THROWS_AS(parse_barcode_format("png"), InputError);
  CHECK(parse_barcode_format("svg") == BarcodeFormat::Svg);
  CHECK_THROWS_AS(parse_barcode_json("[]"), InputError);
  CHECK_THROWS_AS(parse_barcode_json("{\"intervals\": {\"X0\": []}}"), InputError);
  CHECK_THROWS_AS(parse_barcode_json("{\"intervals\": {\"H0\": [[3, 2]]}}"), InputError);
  CHECK_THROWS_AS(parse_barcode_json("{\"extra\": 1}"), InputError);
  CHECK_THROWS_AS(parse_barcode_json("{"), InputError);
}

TEST_CASE("turing fixtures have consistent diagrams") {
  const auto tp1 = load_fixture("tp1_activator_inhibitor");
  const auto o = FiltrationOrder::shortlex(tp1.universe(), 5);
  const auto d = compute_persistence(tp1, o);
  CHECK(oracle::diagram_invariants_hold(d));
  CHECK(infinite_counts(d, tp1.dimension()) == oracle::betti(tp1));
}
