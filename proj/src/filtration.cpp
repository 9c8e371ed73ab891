#include "modelhom/filtration.hpp"

#include "modelhom/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace modelhom {

__extension__ using u128 = unsigned __int128;

namespace {

constexpr std::uint64_t pascal_rows = 256;
constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

// Pascal's triangle for small n; entries that overflow hold `saturated`.
const std::vector<std::uint64_t>& pascal() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> t(pascal_rows * pascal_rows, 0);
    for (std::uint64_t n = 0; n < pascal_rows; ++n) {
      t[n * pascal_rows] = 1;
      for (std::uint64_t k = 1; k <= n; ++k) {
        const std::uint64_t a = t[(n - 1) * pascal_rows + k - 1], b = t[(n - 1) * pascal_rows + k];
        t[n * pascal_rows + k] = (a == saturated || b == saturated || a > saturated - b) ? saturated : a + b;
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (n < pascal_rows) {
    const std::uint64_t v = pascal()[n * pascal_rows + k];
    if (v != saturated) return v;
  }
  k = std::min(k, n - k);
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw InputError("binomial coefficient C(" + std::to_string(n) + ", " + std::to_string(k) +
                       ") overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw InputError("rank arithmetic overflows 64 bits");
  return a + b;
}

// Number of d-subsets of [1, bound] that precede `s` lexicographically; `s`
// may contain vertices above `bound`.
std::uint64_t count_lex_less(std::span<const Vertex> s, std::uint64_t bound) {
  const std::uint64_t d = s.size();
  std::uint64_t count = 0;
  std::uint64_t prev = 0;
  for (std::uint64_t i = 0; i < d; ++i) {
    const std::uint64_t rest = d - i - 1;
    const std::uint64_t lo = prev + 1;
    const std::uint64_t hi = std::min<std::uint64_t>(s[i] - 1, bound);
    if (hi >= lo) count = checked_add(count, binomial(bound - lo + 1, rest + 1) - binomial(bound - hi, rest + 1));
    if (s[i] > bound) break;
    prev = s[i];
  }
  return count;
}

// The t-th (0-based) d-subset of [1, n] in lexicographic order.
Simplex unrank_lex(std::uint64_t t, std::uint64_t n, std::uint64_t d) {
  std::vector<Vertex> out;
  out.reserve(d);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    const std::uint64_t rest = d - i - 1;
    for (;; ++x) {
      const std::uint64_t c = binomial(n - x, rest);
      if (t < c) break;
      t -= c;
    }
    out.push_back(static_cast<Vertex>(x));
    ++x;
  }
  return make_sorted_simplex(std::move(out));
}

std::uint64_t blocks_below(std::uint64_t n, std::uint64_t d) {
  std::uint64_t total = 0;
  for (std::uint64_t j = 1; j < d; ++j) total = checked_add(total, binomial(n, j));
  return total;
}

void check_in_reference(const Simplex& s, std::uint64_t n, int max_dim) {
  if (s.dimension() > max_dim)
    throw InputError("simplex of dimension " + std::to_string(s.dimension()) + " exceeds reference dimension " +
                     std::to_string(max_dim));
  if (s.back() > n) throw InputError("vertex " + std::to_string(s.back()) + " outside universe of size " + std::to_string(n));
}

}  // namespace

std::uint64_t reference_size(std::uint64_t n, int max_dim) {
  return blocks_below(n, static_cast<std::uint64_t>(max_dim) + 2);
}

Rank shortlex_rank(const Simplex& s, std::uint64_t n, int max_dim) {
  check_in_reference(s, n, max_dim);
  return checked_add(blocks_below(n, s.size()), count_lex_less(s.vertices(), n)) + 1;
}

Simplex shortlex_unrank(Rank r, std::uint64_t n, int max_dim) {
  if (r == 0 || r > reference_size(n, max_dim))
    throw InputError("rank " + std::to_string(r) + " outside [1, " + std::to_string(reference_size(n, max_dim)) + "]");
  std::uint64_t t = r - 1;
  for (std::uint64_t d = 1;; ++d) {
    const std::uint64_t block = binomial(n, d);
    if (t < block) return unrank_lex(t, n, d);
    t -= block;
  }
}

namespace detail {

class OrderImpl {
 public:
  OrderImpl(UniversePtr universe, int max_dim, FiltrationOrder::Kind kind, std::string fingerprint)
      : universe(std::move(universe)),
        max_dim(max_dim),
        size(reference_size(this->universe->size(), max_dim)),
        kind(kind),
        fingerprint(std::move(fingerprint)) {}
  virtual ~OrderImpl() = default;
  virtual Rank rank(const Simplex& s) const = 0;
  virtual Simplex unrank(Rank r) const = 0;

  UniversePtr universe;
  int max_dim;
  Rank size;
  FiltrationOrder::Kind kind;
  std::string fingerprint;
};

namespace {

std::string base_tag(const UniversePtr& u, int max_dim) { return u->hash() + "/m" + std::to_string(max_dim); }

class ShortlexImpl final : public OrderImpl {
 public:
  ShortlexImpl(UniversePtr u, int m) : OrderImpl(u, m, FiltrationOrder::Kind::Shortlex, base_tag(u, m) + "/shortlex") {}
  Rank rank(const Simplex& s) const override { return shortlex_rank(s, universe->size(), max_dim); }
  Simplex unrank(Rank r) const override { return shortlex_unrank(r, universe->size(), max_dim); }
};

class PermutedImpl final : public OrderImpl {
 public:
  PermutedImpl(FiltrationOrder base, std::vector<std::uint32_t> to_new, std::vector<std::uint32_t> to_base,
               std::uint64_t seed)
      : OrderImpl(base.universe(), base.max_dim(), FiltrationOrder::Kind::Permuted,
                  base.fingerprint() + "/permuted:" + std::to_string(seed)),
        base_(std::move(base)),
        to_new_(std::move(to_new)),
        to_base_(std::move(to_base)) {}
  Rank rank(const Simplex& s) const override { return Rank{to_new_[base_.rank(s) - 1]} + 1; }
  Simplex unrank(Rank r) const override {
    if (r == 0 || r > size) throw InputError("rank " + std::to_string(r) + " outside the reference complex");
    return base_.unrank(Rank{to_base_[r - 1]} + 1);
  }

 private:
  FiltrationOrder base_;
  std::vector<std::uint32_t> to_new_;
  std::vector<std::uint32_t> to_base_;
};

class ExtendedImpl final : public OrderImpl {
 public:
  ExtendedImpl(FiltrationOrder base, UniversePtr larger, int max_dim)
      : OrderImpl(larger, max_dim, FiltrationOrder::Kind::Extended,
                  base.fingerprint() + "/extended:" + base_tag(larger, max_dim)),
        base_(std::move(base)),
        old_n_(base_.universe()->size()),
        old_m_(base_.max_dim()) {}

  Rank rank(const Simplex& s) const override {
    check_in_reference(s, universe->size(), max_dim);
    if (is_old(s)) return base_.rank(s);
    const std::uint64_t before_in_shortlex = shortlex_rank(s, universe->size(), max_dim) - 1;
    return base_.size() + (before_in_shortlex - old_before(s)) + 1;
  }

  Simplex unrank(Rank r) const override {
    if (r == 0 || r > size) throw InputError("rank " + std::to_string(r) + " outside the reference complex");
    if (r <= base_.size()) return base_.unrank(r);
    std::uint64_t j = r - base_.size() - 1;
    const std::uint64_t n = universe->size();
    for (std::uint64_t d = 1;; ++d) {
      const bool has_old = d <= static_cast<std::uint64_t>(old_m_) + 1;
      const std::uint64_t fresh = binomial(n, d) - (has_old ? binomial(old_n_, d) : 0);
      if (j >= fresh) {
        j -= fresh;
        continue;
      }
      if (!has_old) return unrank_lex(j, n, d);
      // smallest lexicographic index t whose prefix [0, t] holds j + 1 new subsets
      std::uint64_t lo = 0, hi = binomial(n, d) - 1;
      while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        const Simplex s = unrank_lex(mid, n, d);
        const std::uint64_t old_upto = count_lex_less(s.vertices(), old_n_) + (s.back() <= old_n_ ? 1 : 0);
        if (mid + 1 - old_upto >= j + 1) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      return unrank_lex(lo, n, d);
    }
  }

 private:
  bool is_old(const Simplex& s) const { return s.back() <= old_n_ && s.dimension() <= old_m_; }

  // Old simplices preceding a new simplex `s` in the larger shortlex order.
  std::uint64_t old_before(const Simplex& s) const {
    const std::uint64_t d = s.size();
    const std::uint64_t cap = static_cast<std::uint64_t>(old_m_) + 1;
    std::uint64_t count = blocks_below(old_n_, std::min(d, cap + 1));
    if (d <= cap) count += count_lex_less(s.vertices(), old_n_);
    return count;
  }

  FiltrationOrder base_;
  std::uint64_t old_n_;
  int old_m_;
};

}  // namespace
}  // namespace detail

FiltrationOrder FiltrationOrder::shortlex(UniversePtr universe, int max_dim) {
  if (!universe) throw InputError("filtration requires a universe");
  if (max_dim < 0) throw InputError("max_dim must be non-negative");
  reference_size(universe->size(), max_dim);  // overflow check up front
  return FiltrationOrder(std::make_shared<detail::ShortlexImpl>(std::move(universe), max_dim));
}

FiltrationOrder FiltrationOrder::permuted(const FiltrationOrder& base, std::uint64_t seed) {
  const Rank n = base.size();
  if (n > (Rank{1} << 26)) throw InputError("reference complex too large to materialize a permuted order");
  std::mt19937_64 rng(seed);
  // key(s) = max(own draw, keys of facets); sorting by (key, dim) keeps faces first
  std::vector<std::uint64_t> key(n);
  std::vector<std::uint8_t> dim(n);
  for (Rank r = 1; r <= n; ++r) {
    const Simplex s = base.unrank(r);
    std::uint64_t k = rng();
    for (const auto& f : s.facets()) k = std::max(k, key[base.rank(f) - 1]);
    key[r - 1] = k;
    dim[r - 1] = static_cast<std::uint8_t>(s.dimension());
  }
  std::vector<std::uint32_t> to_base(n);
  std::iota(to_base.begin(), to_base.end(), 0u);
  std::sort(to_base.begin(), to_base.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (key[a] != key[b]) return key[a] < key[b];
    if (dim[a] != dim[b]) return dim[a] < dim[b];
    return a < b;
  });
  std::vector<std::uint32_t> to_new(n);
  for (std::uint32_t i = 0; i < n; ++i) to_new[to_base[i]] = i;
  return FiltrationOrder(std::make_shared<detail::PermutedImpl>(base, std::move(to_new), std::move(to_base), seed));
}

FiltrationOrder FiltrationOrder::extend(const FiltrationOrder& base, UniversePtr larger, int max_dim) {
  if (!larger || !base.universe()->is_prefix_of(*larger))
    throw InputError("extension universe must start with the original components in their original order");
  if (max_dim < base.max_dim()) throw InputError("extension cannot lower the maximum dimension");
  reference_size(larger->size(), max_dim);
  if (larger->size() == base.universe()->size() && max_dim == base.max_dim()) return base;
  return FiltrationOrder(std::make_shared<detail::ExtendedImpl>(base, std::move(larger), max_dim));
}

Rank FiltrationOrder::rank(const Simplex& s) const { return impl_->rank(s); }
Simplex FiltrationOrder::unrank(Rank r) const { return impl_->unrank(r); }
Rank FiltrationOrder::size() const { return impl_->size; }
const UniversePtr& FiltrationOrder::universe() const { return impl_->universe; }
int FiltrationOrder::max_dim() const { return impl_->max_dim; }
FiltrationOrder::Kind FiltrationOrder::kind() const { return impl_->kind; }
const std::string& FiltrationOrder::fingerprint() const { return impl_->fingerprint; }

std::size_t InducedFiltration::position_of(Rank r) const {
  auto it = std::lower_bound(steps_.begin(), steps_.end(), r,
                             [](const FiltrationStep& step, Rank value) { return step.rank < value; });
  if (it == steps_.end() || it->rank != r) return 0;
  return static_cast<std::size_t>(it - steps_.begin()) + 1;
}

InducedFiltration induce(const LabelledComplex& complex, const FiltrationOrder& order) {
  if (!same_universe(complex.universe(), order.universe()) && !complex.universe()->is_prefix_of(*order.universe()))
    throw InputError("complex universe is not compatible with the filtration's universe");
  std::vector<FiltrationStep> steps;
  steps.reserve(complex.size());
  for (const auto& s : complex.simplices()) {
    if (s.dimension() > order.max_dim())
      throw InputError("complex has a simplex of dimension " + std::to_string(s.dimension()) +
                       " above the filtration's maximum " + std::to_string(order.max_dim()));
    steps.push_back({order.rank(s), s});
  }
  std::sort(steps.begin(), steps.end(), [](const FiltrationStep& a, const FiltrationStep& b) { return a.rank < b.rank; });
  return InducedFiltration(complex, order, std::move(steps));
}

}  // namespace modelhom
