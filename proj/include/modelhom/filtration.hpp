#pragma once

#include "modelhom/complex.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace modelhom {

/// 1-based position in a flat filtration of the reference complex.
using Rank = std::uint64_t;

/// C(n, k); throws InputError if the value does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of simplices of the m-skeleton of the full simplex on n vertices.
std::uint64_t reference_size(std::uint64_t n, int max_dim);

/// Position of `s` in the shortlex order of the m-skeleton on n vertices,
/// computed with the combinatorial number system.
Rank shortlex_rank(const Simplex& s, std::uint64_t n, int max_dim);
Simplex shortlex_unrank(Rank r, std::uint64_t n, int max_dim);

namespace detail {
class OrderImpl;
}

/// A face-monotone bijection between the reference complex R^(m) and
/// [1, |R^(m)|]. The reference complex is never materialized for shortlex
/// and extended orders; permuted orders store one permutation.
class FiltrationOrder {
 public:
  enum class Kind { Shortlex, Permuted, Extended };

  static FiltrationOrder shortlex(UniversePtr universe, int max_dim);

  /// Pseudorandom face-monotone reordering of `base`, reproducible from the seed.
  /// Materializes |R^(m)| entries; refuses reference complexes above 2^26 simplices.
  static FiltrationOrder permuted(const FiltrationOrder& base, std::uint64_t seed);

  /// Extends `base` to a universe whose ordered prefix is the base universe and
  /// to a dimension cap >= the base one. Old simplices keep ranks 1..|R^(m)|;
  /// the new ones follow in shortlex order of the larger universe.
  static FiltrationOrder extend(const FiltrationOrder& base, UniversePtr larger, int max_dim);

  Rank rank(const Simplex& s) const;
  Simplex unrank(Rank r) const;
  /// |R^(m)|.
  Rank size() const;

  const UniversePtr& universe() const;
  int max_dim() const;
  Kind kind() const;
  /// Provenance tag: universe hash, dimension cap, order kind and seed.
  const std::string& fingerprint() const;

 private:
  explicit FiltrationOrder(std::shared_ptr<const detail::OrderImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::OrderImpl> impl_;
};

struct FiltrationStep {
  Rank rank;
  Simplex simplex;
};

/// Restriction of a flat filtration to a subcomplex: one simplex per step,
/// indexed by its rank in the reference complex.
class InducedFiltration {
 public:
  InducedFiltration(LabelledComplex complex, FiltrationOrder order, std::vector<FiltrationStep> steps)
      : complex_(std::move(complex)), order_(std::move(order)), steps_(std::move(steps)) {}

  const LabelledComplex& complex() const { return complex_; }
  const FiltrationOrder& order() const { return order_; }
  const std::vector<FiltrationStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  /// Compressed 1-based step index of a reference rank, 0 if absent.
  std::size_t position_of(Rank r) const;

 private:
  LabelledComplex complex_;
  FiltrationOrder order_;
  std::vector<FiltrationStep> steps_;
};

/// The complex may live in the order's universe or in an ordered prefix of it.
InducedFiltration induce(const LabelledComplex& complex, const FiltrationOrder& order);

}  // namespace modelhom
