#include "modelhom/simplex.hpp"

#include "modelhom/error.hpp"

#include <algorithm>

namespace modelhom {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() == 0) throw InputError("vertex indices are 1-based");
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InputError("repeated vertex in simplex");
}

Simplex make_sorted_simplex(std::vector<Vertex> sorted) { return Simplex(std::move(sorted), Simplex::Trusted{}); }

bool Simplex::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    std::vector<Vertex> f;
    f.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != skip) f.push_back(vertices_[i]);
    out.push_back(make_sorted_simplex(std::move(f)));
  }
  return out;
}

std::vector<Simplex> Simplex::proper_faces() const {
  std::vector<Simplex> out;
  const std::size_t n = vertices_.size();
  const std::uint64_t full = (n >= 64) ? ~0ULL : ((1ULL << n) - 1);
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::vector<Vertex> f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) f.push_back(vertices_[i]);
    out.push_back(make_sorted_simplex(std::move(f)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering Simplex::operator<=>(const Simplex& other) const {
  if (auto c = vertices_.size() <=> other.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                                                other.vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Vertex v : s.vertices()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace modelhom
