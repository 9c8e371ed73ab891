#pragma once

#include "modelhom/filtration.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modelhom {

struct PersistenceInterval {
  int dim = 0;
  Rank birth = 0;
  /// Empty for a class that is never killed.
  std::optional<Rank> death;

  bool finite() const { return death.has_value(); }
  bool operator==(const PersistenceInterval&) const = default;
};

/// Per-dimension persistence intervals of one complex under one flat filtration.
/// Endpoints are raw reference-complex ranks.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  PersistenceDiagram(std::vector<std::vector<PersistenceInterval>> by_dim, std::size_t simplex_count,
                     std::string filtration, std::string universe_hash, std::string model = {});

  /// Intervals of dimension k sorted by birth; empty for k beyond the top.
  const std::vector<PersistenceInterval>& intervals(int k) const;
  std::vector<PersistenceInterval> all() const;
  /// One past the highest dimension holding an interval.
  int dimensions() const { return static_cast<int>(by_dim_.size()); }

  std::size_t finite_count(int k) const;
  std::size_t infinite_count(int k) const;
  std::size_t interval_count() const;
  std::vector<std::size_t> betti() const;

  std::size_t simplex_count() const { return simplex_count_; }
  const std::string& filtration() const { return filtration_; }
  const std::string& universe_hash() const { return universe_hash_; }
  const std::string& model() const { return model_; }
  PersistenceDiagram named(std::string model) const;

  /// Compares intervals only.
  bool operator==(const PersistenceDiagram& other) const { return by_dim_ == other.by_dim_; }

 private:
  std::vector<std::vector<PersistenceInterval>> by_dim_;
  std::size_t simplex_count_ = 0;
  std::string filtration_;
  std::string universe_hash_;
  std::string model_;
};

/// Z/2 persistent homology by left-to-right column reduction over bit-packed
/// columns; one column per filtration step.
PersistenceDiagram compute_persistence(const InducedFiltration& filtration, std::string model = {});

/// Convenience: induce then reduce.
PersistenceDiagram compute_persistence(const LabelledComplex& complex, const FiltrationOrder& order,
                                       std::string model = {});

/// Betti numbers over Z/2 read off the infinite intervals. Index k is dimension k,
/// up to the complex's top dimension.
std::vector<std::size_t> betti(const LabelledComplex& complex, const FiltrationOrder& order);

}  // namespace modelhom
