#pragma once

// Slow, obviously-correct reference implementations used to referee the
// library. Nothing here calls into the code under test except for the plain
// data types.

#include "modelhom/complex.hpp"
#include "modelhom/persistence.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using modelhom::LabelledComplex;
using modelhom::Simplex;
using modelhom::UniversePtr;
using modelhom::Vertex;

using Set = std::vector<Vertex>;

inline void subsets_of_size(Vertex n, std::size_t k, Vertex start, Set& cur, std::vector<Set>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (Vertex v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets_of_size(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

/// Every simplex of the m-skeleton of the full simplex on n vertices, in
/// shortlex order: by size, then lexicographically.
inline std::vector<Set> shortlex_enumeration(Vertex n, int m) {
  std::vector<Set> out;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(m) + 1 && k <= n; ++k) {
    Set cur;
    subsets_of_size(n, k, 1, cur, out);
  }
  return out;
}

inline UniversePtr numbered_universe(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return modelhom::make_universe("numbered", std::move(labels));
}

/// All nonempty subsets of s, s included.
inline std::vector<Set> all_faces(const Set& s) {
  std::vector<Set> out;
  for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
    Set f;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask & (1u << i)) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

/// Downward closure of a family of vertex sets.
inline std::set<Set> closure(const std::vector<Set>& generators) {
  std::set<Set> out;
  for (const auto& g : generators)
    for (auto& f : all_faces(g)) out.insert(std::move(f));
  return out;
}

inline LabelledComplex to_complex(const UniversePtr& u, const std::set<Set>& sets, int max_dim) {
  std::vector<Simplex> ss;
  for (const auto& s : sets) ss.emplace_back(s);
  return LabelledComplex(u, std::move(ss), max_dim);
}

/// Random subcomplex of R^(m) on n vertices: closure of a few random simplices.
inline LabelledComplex random_complex(std::mt19937_64& rng, const UniversePtr& u, int m, std::size_t generators) {
  const Vertex n = static_cast<Vertex>(u->size());
  std::vector<Set> gens;
  std::uniform_int_distribution<int> dim(0, m);
  for (std::size_t i = 0; i < generators; ++i) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v + 1;
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(dim(rng)) + 1, n);
    Set s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(s.begin(), s.end());
    gens.push_back(std::move(s));
  }
  return to_complex(u, closure(gens), m);
}

/// Rank over Z/2 of a dense 0/1 matrix by row reduction.
inline std::size_t gf2_rank(std::vector<std::vector<std::uint8_t>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t j = c; j < cols; ++j) rows[r][j] ^= rows[rank][j];
    ++rank;
  }
  return rank;
}

/// Betti numbers over Z/2 from boundary-matrix ranks:
/// beta_k = n_k - rank d_k - rank d_{k+1}.
inline std::vector<std::size_t> betti(const LabelledComplex& k) {
  std::map<int, std::vector<Set>> by_dim;
  for (const auto& s : k.simplices()) by_dim[s.dimension()].emplace_back(s.vertices().begin(), s.vertices().end());
  const int top = k.dimension();
  std::vector<std::size_t> rank_d(static_cast<std::size_t>(top + 2), 0);
  for (int d = 1; d <= top; ++d) {
    const auto& rows = by_dim[d - 1];
    const auto& cols = by_dim[d];
    std::map<Set, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    std::vector<std::vector<std::uint8_t>> m(rows.size(), std::vector<std::uint8_t>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t drop = 0; drop < cols[j].size(); ++drop) {
        Set f = cols[j];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
        m[row_of.at(f)][j] = 1;
      }
    rank_d[static_cast<std::size_t>(d)] = gf2_rank(std::move(m));
  }
  std::vector<std::size_t> out;
  for (int d = 0; d <= top; ++d)
    out.push_back(by_dim[d].size() - rank_d[static_cast<std::size_t>(d)] - rank_d[static_cast<std::size_t>(d + 1)]);
  return out;
}

/// Triangles of a graph given as an edge list, by checking every triple.
inline std::size_t count_triangles(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::set<std::pair<Vertex, Vertex>> e;
  for (auto [a, b] : edges) e.insert(std::minmax(a, b));
  std::size_t count = 0;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c)
        count += e.count({a, b}) && e.count({a, c}) && e.count({b, c});
  return count;
}

/// k-cliques of a graph by checking every k-subset.
inline std::vector<Set> cliques(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::size_t k) {
  std::set<std::pair<Vertex, Vertex>> e;
  for (auto [a, b] : edges) e.insert(std::minmax(a, b));
  std::vector<Set> all, out;
  Set cur;
  subsets_of_size(n, k, 1, cur, all);
  for (const auto& s : all) {
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i)
      for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = e.count({s[i], s[j]}) > 0;
    if (ok) out.push_back(s);
  }
  return out;
}

/// Set-based symmetric difference size.
inline std::size_t symdiff_size(const LabelledComplex& a, const LabelledComplex& b) {
  std::set<Set> x, y;
  for (const auto& s : a.simplices()) x.emplace(s.vertices().begin(), s.vertices().end());
  for (const auto& s : b.simplices()) y.emplace(s.vertices().begin(), s.vertices().end());
  std::size_t common = 0;
  for (const auto& s : x) common += y.count(s);
  return x.size() + y.size() - 2 * common;
}

/// Multiplicity one and the 2 * finite + infinite = |K| accounting.
inline bool diagram_invariants_hold(const modelhom::PersistenceDiagram& d) {
  std::set<modelhom::Rank> births, deaths;
  std::size_t finite = 0, infinite = 0;
  for (const auto& i : d.all()) {
    if (!births.insert(i.birth).second) return false;
    if (i.death) {
      if (!deaths.insert(*i.death).second || *i.death <= i.birth) return false;
      ++finite;
    } else {
      ++infinite;
    }
  }
  return 2 * finite + infinite == d.simplex_count();
}

}  // namespace oracle
