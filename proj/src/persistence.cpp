#include "modelhom/persistence.hpp"

#include "modelhom/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace modelhom {

PersistenceDiagram::PersistenceDiagram(std::vector<std::vector<PersistenceInterval>> by_dim, std::size_t simplex_count,
                                       std::string filtration, std::string universe_hash, std::string model)
    : by_dim_(std::move(by_dim)),
      simplex_count_(simplex_count),
      filtration_(std::move(filtration)),
      universe_hash_(std::move(universe_hash)),
      model_(std::move(model)) {
  while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
  for (auto& list : by_dim_)
    std::sort(list.begin(), list.end(),
              [](const PersistenceInterval& a, const PersistenceInterval& b) { return a.birth < b.birth; });
}

const std::vector<PersistenceInterval>& PersistenceDiagram::intervals(int k) const {
  static const std::vector<PersistenceInterval> none;
  if (k < 0 || k >= dimensions()) return none;
  return by_dim_[static_cast<std::size_t>(k)];
}

std::vector<PersistenceInterval> PersistenceDiagram::all() const {
  std::vector<PersistenceInterval> out;
  for (const auto& list : by_dim_) out.insert(out.end(), list.begin(), list.end());
  return out;
}

std::size_t PersistenceDiagram::finite_count(int k) const {
  const auto& list = intervals(k);
  return static_cast<std::size_t>(std::count_if(list.begin(), list.end(), [](const auto& i) { return i.finite(); }));
}

std::size_t PersistenceDiagram::infinite_count(int k) const { return intervals(k).size() - finite_count(k); }

std::size_t PersistenceDiagram::interval_count() const {
  std::size_t n = 0;
  for (const auto& list : by_dim_) n += list.size();
  return n;
}

std::vector<std::size_t> PersistenceDiagram::betti() const {
  std::vector<std::size_t> out;
  for (int k = 0; k < dimensions(); ++k) out.push_back(infinite_count(k));
  return out;
}

PersistenceDiagram PersistenceDiagram::named(std::string model) const {
  PersistenceDiagram copy = *this;
  copy.model_ = std::move(model);
  return copy;
}

namespace {

// A reduced column, trimmed to the word holding its pivot.
using BitColumn = std::vector<std::uint64_t>;

std::ptrdiff_t lowest_one(const BitColumn& col) {
  for (std::size_t w = col.size(); w-- > 0;)
    if (col[w]) return static_cast<std::ptrdiff_t>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(col[w])));
  return -1;
}

void trim(BitColumn& col) {
  while (!col.empty() && col.back() == 0) col.pop_back();
}

}  // namespace

PersistenceDiagram compute_persistence(const InducedFiltration& filtration, std::string model) {
  const auto& steps = filtration.steps();
  const std::size_t n = steps.size();

  std::unordered_map<Simplex, std::size_t, SimplexHash> position;
  position.reserve(n * 2);
  for (std::size_t j = 0; j < n; ++j) position.emplace(steps[j].simplex, j);

  std::vector<std::ptrdiff_t> pivot_owner(n, -1);  // row -> column whose pivot it is
  std::vector<BitColumn> reduced(n);

  for (std::size_t j = 0; j < n; ++j) {
    const Simplex& s = steps[j].simplex;
    if (s.size() < 2) continue;
    BitColumn col(j / 64 + 1, 0);
    for (const auto& f : s.facets()) {
      auto it = position.find(f);
      if (it == position.end() || it->second >= j)
        throw InputError("induced filtration is not face-monotone or not closed at " + std::to_string(steps[j].rank));
      col[it->second / 64] ^= std::uint64_t{1} << (it->second % 64);
    }
    trim(col);
    std::ptrdiff_t low = lowest_one(col);
    while (low >= 0 && pivot_owner[static_cast<std::size_t>(low)] >= 0) {
      const BitColumn& other = reduced[static_cast<std::size_t>(pivot_owner[static_cast<std::size_t>(low)])];
      for (std::size_t w = 0; w < other.size(); ++w) col[w] ^= other[w];
      trim(col);
      low = lowest_one(col);
    }
    if (low >= 0) {
      pivot_owner[static_cast<std::size_t>(low)] = static_cast<std::ptrdiff_t>(j);
      reduced[j] = std::move(col);
    }
  }

  std::vector<std::vector<PersistenceInterval>> by_dim;
  for (std::size_t j = 0; j < n; ++j) {
    if (!reduced[j].empty()) continue;  // destroyer
    const int dim = steps[j].simplex.dimension();
    if (by_dim.size() <= static_cast<std::size_t>(dim)) by_dim.resize(static_cast<std::size_t>(dim) + 1);
    PersistenceInterval interval{dim, steps[j].rank, std::nullopt};
    if (pivot_owner[j] >= 0) interval.death = steps[static_cast<std::size_t>(pivot_owner[j])].rank;
    by_dim[static_cast<std::size_t>(dim)].push_back(interval);
  }
  return PersistenceDiagram(std::move(by_dim), n, filtration.order().fingerprint(),
                            filtration.order().universe()->hash(), std::move(model));
}

PersistenceDiagram compute_persistence(const LabelledComplex& complex, const FiltrationOrder& order, std::string model) {
  return compute_persistence(induce(complex, order), std::move(model));
}

std::vector<std::size_t> betti(const LabelledComplex& complex, const FiltrationOrder& order) {
  const auto diagram = compute_persistence(complex, order);
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(0, complex.dimension() + 1)), 0);
  for (int k = 0; k < static_cast<int>(out.size()); ++k) out[static_cast<std::size_t>(k)] = diagram.infinite_count(k);
  return out;
}

}  // namespace modelhom
