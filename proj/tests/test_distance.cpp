#include "doctest.h"
#include "oracles.hpp"

#include "modelhom/distance.hpp"
#include "modelhom/error.hpp"
#include "modelhom/fixtures.hpp"

#include <json.hpp>

using namespace modelhom;

namespace {

UniversePtr abc() { return make_universe("abc", {"a", "b", "c"}); }

}  // namespace

TEST_CASE("simplicial distance on small examples") {
  auto u = abc();
  const LabelledComplex full(u, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
  const LabelledComplex hollow(u, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}, 2);
  const LabelledComplex path(u, {{1}, {2}, {3}, {1, 2}, {2, 3}}, 2);
  CHECK(d_simplicial(full, hollow) == 1);
  CHECK(d_simplicial(full, path) == 2);
  CHECK(d_simplicial(full, LabelledComplex(u, {})) == 7);
  CHECK(d_simplicial(full, full) == 0);
}

TEST_CASE("theta collects births and finite deaths") {
  auto u = abc();
  const LabelledComplex hollow(u, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}, 2);
  const auto d = compute_persistence(hollow, FiltrationOrder::shortlex(u, 2));
  CHECK(theta(d) == EndpointSet{1, 2, 3, 4, 5, 6});
}

TEST_CASE("persistence distance equals simplicial distance") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    auto u = oracle::numbered_universe(3 + rng() % 6);
    const int m = 1 + static_cast<int>(rng() % 3);
    auto order = FiltrationOrder::shortlex(u, m);
    if (trial % 2) order = FiltrationOrder::permuted(order, rng());
    const auto k = oracle::random_complex(rng, u, m, 1 + rng() % 5);
    const auto l = oracle::random_complex(rng, u, m, 1 + rng() % 5);
    const auto pk = compute_persistence(k, order), pl = compute_persistence(l, order);
    CHECK(d_persistence(pk, pl) == oracle::symdiff_size(k, l));
    CHECK(d_simplicial(k, l) == oracle::symdiff_size(k, l));
    // theta is exactly the set of ranks of the complex
    EndpointSet ranks;
    for (const auto& s : k.simplices()) ranks.insert(order.rank(s));
    CHECK(theta(pk) == ranks);
  }
}

TEST_CASE("distance is a metric") {
  std::mt19937_64 rng(43);
  auto u = oracle::numbered_universe(6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = oracle::random_complex(rng, u, 2, 3), b = oracle::random_complex(rng, u, 2, 3),
               c = oracle::random_complex(rng, u, 2, 3);
    CHECK(d_simplicial(a, b) == d_simplicial(b, a));
    CHECK(d_simplicial(a, c) <= d_simplicial(a, b) + d_simplicial(b, c));
    CHECK((d_simplicial(a, b) == 0) == (a.simplices() == b.simplices()));
  }
}

TEST_CASE("persistence distance does not depend on the face-monotone order") {
  const auto tp1 = load_fixture("tp1_activator_inhibitor"), pi4 = load_fixture("pi4_annihilation");
  const auto base = FiltrationOrder::shortlex(tp1.universe(), 5);
  const std::size_t expected = d_simplicial(tp1, pi4);
  CHECK(d_persistence(compute_persistence(tp1, base), compute_persistence(pi4, base)) == expected);
  for (std::uint64_t seed : {1u, 2u}) {
    const auto o = FiltrationOrder::permuted(base, seed);
    CHECK(d_persistence(compute_persistence(tp1, o), compute_persistence(pi4, o)) == expected);
  }
}

TEST_CASE("distance is invariant under relabelling both models") {
  const auto ord = load_fixture("ordered_sequential"), pp = load_fixture("ping_pong");
  auto labels = ord.universe()->labels();
  std::reverse(labels.begin(), labels.end());
  auto w = make_universe("reversed", labels);
  CHECK(d_simplicial(relabel_into(ord, w), relabel_into(pp, w)) == d_simplicial(ord, pp));
}

TEST_CASE("mismatched filtrations are refused") {
  auto u = abc();
  const LabelledComplex k(u, {{1}, {2}, {1, 2}});
  const auto p = compute_persistence(k, FiltrationOrder::shortlex(u, 2));
  const auto q = compute_persistence(k, FiltrationOrder::permuted(FiltrationOrder::shortlex(u, 2), 3));
  const auto r = compute_persistence(k, FiltrationOrder::shortlex(u, 1));
  CHECK_THROWS_AS(d_persistence(p, q), InputError);
  CHECK_THROWS_AS(d_persistence(p, r), InputError);
  CHECK(d_persistence(p, p) == 0);
}

TEST_CASE("distance inference from two differences") {
  std::mt19937_64 rng(47);
  auto u = oracle::numbered_universe(6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto j = oracle::random_complex(rng, u, 3, 3), k = oracle::random_complex(rng, u, 3, 3),
               l = oracle::random_complex(rng, u, 3, 3);
    CHECK(infer_distance(symmetric_difference(j, k), symmetric_difference(k, l)) == d_simplicial(j, l));
  }
  CHECK(infer_distance({}, {}) == 0);
}

TEST_CASE("distance matrix") {
  const std::vector<std::string> names{"lotka_volterra", "ordered_sequential", "ping_pong"};
  std::vector<LabelledComplex> models;
  for (const auto& n : names) models.push_back(load_fixture(n));
  // lotka_volterra lives in its own universe
  CHECK_THROWS_AS(distance_matrix(models, names, DistanceMode::Simplicial), InputError);

  models.erase(models.begin());
  const std::vector<std::string> two(names.begin() + 1, names.end());
  const auto s = distance_matrix(models, two, DistanceMode::Simplicial);
  const auto p = distance_matrix(models, two, DistanceMode::Persistence);
  CHECK(s == p);
  CHECK(s.at(0, 0) == 0);
  CHECK(s.at(0, 1) == s.at(1, 0));
  CHECK(s.at(0, 1) == oracle::symdiff_size(models[0], models[1]));

  const auto csv = s.to_csv();
  const auto d = std::to_string(s.at(0, 1));
  CHECK(csv == ",ordered_sequential,ping_pong\nordered_sequential,0," + d + "\nping_pong," + d + ",0\n");
  const auto j = nlohmann::json::parse(s.to_json());
  CHECK(j.at("models") == nlohmann::json(two));
  CHECK(j.at("distances")[0][1] == s.at(0, 1));
  CHECK(s.to_json().back() == '\n');
}

TEST_CASE("distance matrix edge cases") {
  auto u = abc();
  const LabelledComplex k(u, {{1}});
  const auto one = distance_matrix({k}, {"solo"}, DistanceMode::Persistence);
  CHECK(one.size() == 1);
  CHECK(one.at(0, 0) == 0);
  CHECK(one.to_csv() == ",solo\nsolo,0\n");
  CHECK_THROWS_AS(distance_matrix({k}, {"a", "b"}, DistanceMode::Simplicial), InputError);
  CHECK_THROWS_AS(parse_distance_mode("hamming"), InputError);
  CHECK(parse_distance_mode("persistence") == DistanceMode::Persistence);
}

TEST_CASE("parallel matrix matches the serial definition") {
  std::mt19937_64 rng(53);
  auto u = oracle::numbered_universe(7);
  std::vector<LabelledComplex> models;
  std::vector<std::string> names;
  for (int i = 0; i < 9; ++i) {
    models.push_back(oracle::random_complex(rng, u, 3, 4));
    names.push_back("m" + std::to_string(i));
  }
  const auto p = distance_matrix(models, names, DistanceMode::Persistence);
  for (std::size_t i = 0; i < models.size(); ++i)
    for (std::size_t j = 0; j < models.size(); ++j) CHECK(p.at(i, j) == oracle::symdiff_size(models[i], models[j]));
  CHECK(distance_matrix(models, names, DistanceMode::Persistence) == p);
}
