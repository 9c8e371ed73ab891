#pragma once

#include "modelhom/persistence.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace modelhom {

/// Births and finite deaths of a diagram, as raw ranks.
using EndpointSet = std::set<Rank>;

/// |K △ L|. Throws InputError if the universes differ.
std::size_t d_simplicial(const LabelledComplex& k, const LabelledComplex& l);

EndpointSet theta(const PersistenceDiagram& diagram);

/// |Θ(P) △ Θ(Q)|. Throws InputError unless both diagrams carry the same
/// filtration fingerprint.
std::size_t d_persistence(const PersistenceDiagram& p, const PersistenceDiagram& q);

/// |(J △ K) △ (K △ L)|, which equals d(J, L).
std::size_t infer_distance(const std::vector<Simplex>& jk, const std::vector<Simplex>& kl);

enum class DistanceMode { Simplicial, Persistence };

DistanceMode parse_distance_mode(const std::string& name);

class DistanceMatrix {
 public:
  DistanceMatrix(std::vector<std::string> names, std::vector<std::size_t> entries);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t at(std::size_t i, std::size_t j) const { return entries_[i * names_.size() + j]; }

  /// Header row and column hold the model names; LF line endings.
  std::string to_csv() const;
  /// {"models": [...], "distances": [[...], ...]}
  std::string to_json() const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> entries_;
};

/// All pairwise distances. Persistence mode uses `order` when given, else the
/// shortlex order capped at the largest model dimension. Pairs are evaluated on
/// up to MODELHOM_THREADS threads (default: hardware concurrency).
DistanceMatrix distance_matrix(const std::vector<LabelledComplex>& models, const std::vector<std::string>& names,
                               DistanceMode mode, const std::optional<FiltrationOrder>& order = std::nullopt);

}  // namespace modelhom
