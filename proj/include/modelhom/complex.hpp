#pragma once

#include "modelhom/simplex.hpp"
#include "modelhom/universe.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modelhom {

/// A finite set of simplices over a universe, stored in shortlex order.
///
/// Instances are immutable. Construction does not enforce downward closure;
/// run `validate` (every operation in this library returns closed complexes).
class LabelledComplex {
 public:
  LabelledComplex() = default;
  /// Deduplicates and sorts. `max_dim` < 0 means "top dimension of the input".
  LabelledComplex(UniversePtr universe, std::vector<Simplex> simplices, int max_dim = -1);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  int max_dim() const { return max_dim_; }
  /// Top dimension, -1 when empty.
  int dimension() const;

  bool contains(const Simplex& s) const;
  /// Sorted vertex indices of the 0-simplices.
  std::vector<Vertex> vertices() const;
  bool has_vertex(Vertex v) const;
  /// Entry k is the number of k-simplices, for k in [0, dimension()].
  std::vector<std::size_t> count_by_dimension() const;

  /// Same simplices, different declared maximum dimension.
  LabelledComplex with_max_dim(int max_dim) const;

  bool operator==(const LabelledComplex& other) const;

 private:
  UniversePtr universe_;
  std::vector<Simplex> simplices_;
  int max_dim_ = 0;
};

struct Violation {
  enum class Kind { MissingFace, VertexOutOfRange, DimensionExceeded };
  Kind kind;
  Simplex simplex;
  /// Set for MissingFace.
  std::vector<Vertex> missing;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe(const ComponentUniverse& universe) const;
};

/// Checks downward closure, vertex range and the dimension cap.
ValidationReport validate(const LabelledComplex& complex);

/// Adds every missing face.
LabelledComplex close_downward(const LabelledComplex& complex);

using Edge = std::pair<Vertex, Vertex>;

/// Flag complex of the graph truncated at `max_dim`, built dimension by dimension.
LabelledComplex clique_complete(const UniversePtr& universe, std::span<const Vertex> vertices,
                                std::span<const Edge> edges, int max_dim);

LabelledComplex skeleton(const LabelledComplex& complex, int k);

/// Simplices in exactly one of the two complexes, in shortlex order.
std::vector<Simplex> symmetric_difference(const LabelledComplex& k, const LabelledComplex& l);
std::size_t intersection_size(const LabelledComplex& k, const LabelledComplex& l);

/// Vertices sharing a simplex with `u`, excluding `u`.
std::vector<Vertex> neighbors(const LabelledComplex& complex, Vertex u);

/// True when every simplex of `k` is in `l`.
bool is_subcomplex(const LabelledComplex& k, const LabelledComplex& l);

/// Labels of a simplex, in vertex order.
std::vector<std::string> simplex_labels(const ComponentUniverse& universe, const Simplex& s);
std::string format_simplex(const ComponentUniverse& universe, const Simplex& s);

/// Stable digest over the labelled simplex set; independent of the universe's index order.
std::string complex_fingerprint(const LabelledComplex& complex);

/// Re-expresses a complex over another universe by label. Throws InputError if a
/// label is missing from the target.
LabelledComplex relabel_into(const LabelledComplex& complex, const UniversePtr& target);

}  // namespace modelhom
