#pragma once

#include "modelhom/universe.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace modelhom {

/// A nonempty, strictly increasing set of vertex indices. Orientation is not
/// tracked; homology is over Z/2.
class Simplex {
 public:
  /// Sorts and validates; throws InputError on duplicates, zero or empty input.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(Vertex v) const;
  /// True when every vertex of `this` lies in `other`.
  bool is_face_of(const Simplex& other) const;

  /// Codimension-one faces, empty for a vertex.
  std::vector<Simplex> facets() const;
  /// All nonempty proper faces.
  std::vector<Simplex> proper_faces() const;

  /// Shortlex: lower dimension first, then lexicographic on sorted vertices.
  std::strong_ordering operator<=>(const Simplex& other) const;
  bool operator==(const Simplex& other) const = default;

 private:
  struct Trusted {};
  Simplex(std::vector<Vertex> sorted, Trusted) : vertices_(std::move(sorted)) {}
  friend Simplex make_sorted_simplex(std::vector<Vertex>);

  std::vector<Vertex> vertices_;
};

/// Skips validation; the caller guarantees a nonempty strictly increasing list.
Simplex make_sorted_simplex(std::vector<Vertex> sorted);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace modelhom
