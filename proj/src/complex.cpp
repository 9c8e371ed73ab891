#include "modelhom/complex.hpp"

#include "modelhom/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace modelhom {

namespace {

void require_same_universe(const LabelledComplex& k, const LabelledComplex& l, const char* what) {
  if (!same_universe(k.universe(), l.universe()))
    throw InputError(std::string(what) + ": complexes live in different universes");
}

}  // namespace

LabelledComplex::LabelledComplex(UniversePtr universe, std::vector<Simplex> simplices, int max_dim)
    : universe_(std::move(universe)), simplices_(std::move(simplices)) {
  if (!universe_) throw InputError("complex requires a universe");
  std::sort(simplices_.begin(), simplices_.end());
  simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
  max_dim_ = max_dim < 0 ? std::max(0, dimension()) : max_dim;
}

int LabelledComplex::dimension() const { return simplices_.empty() ? -1 : simplices_.back().dimension(); }

bool LabelledComplex::contains(const Simplex& s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s);
}

std::vector<Vertex> LabelledComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices_) {
    if (s.size() != 1) break;
    out.push_back(s.front());
  }
  return out;
}

bool LabelledComplex::has_vertex(Vertex v) const { return contains(make_sorted_simplex({v})); }

std::vector<std::size_t> LabelledComplex::count_by_dimension() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : simplices_) ++counts[static_cast<std::size_t>(s.dimension())];
  return counts;
}

LabelledComplex LabelledComplex::with_max_dim(int max_dim) const {
  LabelledComplex out = *this;
  out.max_dim_ = max_dim;
  return out;
}

bool LabelledComplex::operator==(const LabelledComplex& other) const {
  return same_universe(universe_, other.universe_) && simplices_ == other.simplices_;
}

std::string ValidationReport::describe(const ComponentUniverse& universe) const {
  std::ostringstream os;
  for (const auto& v : violations) {
    if (&v != &violations.front()) os << "; ";
    auto name = [&](const Simplex& s) {
      std::string out = "{";
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += (s[i] >= 1 && s[i] <= universe.size()) ? universe.label(s[i]) : std::to_string(s[i]);
      }
      return out + "}";
    };
    switch (v.kind) {
      case Violation::Kind::MissingFace:
        os << name(v.simplex) << " is missing face " << name(Simplex(v.missing));
        break;
      case Violation::Kind::VertexOutOfRange:
        os << name(v.simplex) << " uses a vertex outside the universe";
        break;
      case Violation::Kind::DimensionExceeded:
        os << name(v.simplex) << " exceeds the maximum dimension";
        break;
    }
  }
  return os.str();
}

ValidationReport validate(const LabelledComplex& complex) {
  ValidationReport report;
  const auto n = complex.universe()->size();
  std::set<std::vector<Vertex>> reported;
  for (const auto& s : complex.simplices()) {
    if (s.back() > n) {
      report.violations.push_back({Violation::Kind::VertexOutOfRange, s, {}});
      continue;
    }
    if (s.dimension() > complex.max_dim()) report.violations.push_back({Violation::Kind::DimensionExceeded, s, {}});
    for (const auto& f : s.proper_faces()) {
      if (complex.contains(f)) continue;
      std::vector<Vertex> fv(f.vertices().begin(), f.vertices().end());
      // a face missing under several cofaces is reported once
      if (!reported.insert(fv).second) continue;
      report.violations.push_back({Violation::Kind::MissingFace, s, fv});
    }
  }
  return report;
}

LabelledComplex close_downward(const LabelledComplex& complex) {
  std::vector<Simplex> all = complex.simplices();
  for (const auto& s : complex.simplices())
    for (auto& f : s.proper_faces()) all.push_back(std::move(f));
  return LabelledComplex(complex.universe(), std::move(all), complex.max_dim());
}

LabelledComplex clique_complete(const UniversePtr& universe, std::span<const Vertex> vertices,
                                std::span<const Edge> edges, int max_dim) {
  if (max_dim < 0) throw InputError("max_dim must be non-negative");
  const std::size_t n = universe->size();
  std::vector<char> present(n + 1, 0);
  for (Vertex v : vertices) {
    if (v == 0 || v > n) throw InputError("vertex " + std::to_string(v) + " outside universe");
    present[v] = 1;
  }
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (auto [a, b] : edges) {
    if (a == 0 || b == 0 || a > n || b > n || !present[a] || !present[b])
      throw InputError("edge references a vertex that is not part of the model");
    if (a == b) throw InputError("self-loop on vertex " + universe->label(a));
    adj[a][b] = adj[b][a] = 1;
  }

  std::vector<Simplex> out;
  std::vector<Simplex> layer;
  for (Vertex v = 1; v <= n; ++v)
    if (present[v]) layer.push_back(make_sorted_simplex({v}));
  for (int dim = 0; !layer.empty(); ++dim) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (dim == max_dim) break;
    std::vector<Simplex> next;
    for (const auto& s : layer) {
      for (Vertex w = s.back() + 1; w <= n; ++w) {
        if (!present[w]) continue;
        bool clique = true;
        for (Vertex v : s.vertices())
          if (!adj[v][w]) {
            clique = false;
            break;
          }
        if (!clique) continue;
        std::vector<Vertex> grown(s.vertices().begin(), s.vertices().end());
        grown.push_back(w);
        next.push_back(make_sorted_simplex(std::move(grown)));
      }
    }
    layer = std::move(next);
  }
  return LabelledComplex(universe, std::move(out), max_dim);
}

LabelledComplex skeleton(const LabelledComplex& complex, int k) {
  if (k < 0) throw InputError("skeleton dimension must be non-negative");
  std::vector<Simplex> kept;
  for (const auto& s : complex.simplices())
    if (s.dimension() <= k) kept.push_back(s);
  return LabelledComplex(complex.universe(), std::move(kept), std::min(k, complex.max_dim()));
}

std::vector<Simplex> symmetric_difference(const LabelledComplex& k, const LabelledComplex& l) {
  require_same_universe(k, l, "symmetric_difference");
  std::vector<Simplex> out;
  std::set_symmetric_difference(k.simplices().begin(), k.simplices().end(), l.simplices().begin(),
                                l.simplices().end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const LabelledComplex& k, const LabelledComplex& l) {
  require_same_universe(k, l, "intersection_size");
  std::size_t count = 0;
  auto a = k.simplices().begin(), b = l.simplices().begin();
  while (a != k.simplices().end() && b != l.simplices().end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count, ++a, ++b;
    }
  }
  return count;
}

std::vector<Vertex> neighbors(const LabelledComplex& complex, Vertex u) {
  if (!complex.has_vertex(u)) throw InputError("vertex " + std::to_string(u) + " is not in the complex");
  std::vector<Vertex> out;
  for (const auto& s : complex.simplices()) {
    if (s.size() < 2 || !s.contains(u)) continue;
    for (Vertex v : s.vertices())
      if (v != u) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_subcomplex(const LabelledComplex& k, const LabelledComplex& l) {
  require_same_universe(k, l, "is_subcomplex");
  return std::includes(l.simplices().begin(), l.simplices().end(), k.simplices().begin(), k.simplices().end());
}

std::vector<std::string> simplex_labels(const ComponentUniverse& universe, const Simplex& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Vertex v : s.vertices()) out.push_back(universe.label(v));
  return out;
}

std::string format_simplex(const ComponentUniverse& universe, const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += universe.label(s[i]);
  }
  return out + "}";
}

std::string complex_fingerprint(const LabelledComplex& complex) {
  std::vector<std::string> rows;
  rows.reserve(complex.size());
  for (const auto& s : complex.simplices()) {
    auto labels = simplex_labels(*complex.universe(), s);
    std::sort(labels.begin(), labels.end());
    std::string row;
    for (const auto& l : labels) {
      row += l;
      row.push_back('\x1f');
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::string joined;
  for (const auto& r : rows) {
    joined += r;
    joined.push_back('\x1e');
  }
  return fnv1a_hex(joined);
}

LabelledComplex relabel_into(const LabelledComplex& complex, const UniversePtr& target) {
  if (same_universe(complex.universe(), target)) return LabelledComplex(target, complex.simplices(), complex.max_dim());
  std::vector<Simplex> out;
  out.reserve(complex.size());
  for (const auto& s : complex.simplices()) {
    std::vector<Vertex> vs;
    for (Vertex v : s.vertices()) vs.push_back(target->index(complex.universe()->label(v)));
    out.emplace_back(std::move(vs));
  }
  return LabelledComplex(target, std::move(out), complex.max_dim());
}

}  // namespace modelhom
