#include "modelhom/distance.hpp"

#include "modelhom/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iterator>
#include <sstream>
#include <thread>

namespace modelhom {

std::size_t d_simplicial(const LabelledComplex& k, const LabelledComplex& l) {
  return k.size() + l.size() - 2 * intersection_size(k, l);
}

EndpointSet theta(const PersistenceDiagram& diagram) {
  EndpointSet out;
  for (const auto& i : diagram.all()) {
    out.insert(i.birth);
    if (i.death) out.insert(*i.death);
  }
  return out;
}

std::size_t d_persistence(const PersistenceDiagram& p, const PersistenceDiagram& q) {
  if (p.filtration() != q.filtration())
    throw InputError("diagrams come from different filtrations ('" + p.filtration() + "' vs '" + q.filtration() +
                     "')");
  const EndpointSet a = theta(p), b = theta(q);
  std::vector<Rank> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  return diff.size();
}

std::size_t infer_distance(const std::vector<Simplex>& jk, const std::vector<Simplex>& kl) {
  std::vector<Simplex> a = jk, b = kl;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<Simplex> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  return diff.size();
}

DistanceMode parse_distance_mode(const std::string& name) {
  if (name == "simplicial") return DistanceMode::Simplicial;
  if (name == "persistence") return DistanceMode::Persistence;
  throw InputError("unknown distance mode '" + name + "' (expected simplicial or persistence)");
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> names, std::vector<std::size_t> entries)
    : names_(std::move(names)), entries_(std::move(entries)) {
  if (entries_.size() != names_.size() * names_.size()) throw InputError("distance matrix shape mismatch");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MODELHOM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = static_cast<unsigned>(v);
  }
  return n;
}

}  // namespace

std::string DistanceMatrix::to_csv() const {
  std::ostringstream os;
  for (const auto& n : names_) os << ',' << csv_field(n);
  os << '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    os << csv_field(names_[i]);
    for (std::size_t j = 0; j < size(); ++j) os << ',' << at(i, j);
    os << '\n';
  }
  return os.str();
}

std::string DistanceMatrix::to_json() const {
  std::ostringstream os;
  os << "{\n  \"distances\": [";
  for (std::size_t i = 0; i < size(); ++i) {
    os << (i ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < size(); ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << (size() ? "\n  ]" : "]") << ",\n  \"models\": " << nlohmann::json(names_).dump() << "\n}\n";
  return os.str();
}

DistanceMatrix distance_matrix(const std::vector<LabelledComplex>& models, const std::vector<std::string>& names,
                               DistanceMode mode, const std::optional<FiltrationOrder>& order) {
  if (models.size() != names.size()) throw InputError("distance matrix: one name per model required");
  const std::size_t n = models.size();
  for (std::size_t i = 1; i < n; ++i)
    if (!same_universe(models[0].universe(), models[i].universe()))
      throw InputError("distance matrix: models '" + names[0] + "' and '" + names[i] + "' use different universes");

  std::vector<PersistenceDiagram> diagrams;
  if (mode == DistanceMode::Persistence && n > 0) {
    int m = 0;
    for (const auto& k : models) m = std::max(m, k.dimension());
    const FiltrationOrder shared = order ? *order : FiltrationOrder::shortlex(models[0].universe(), m);
    diagrams.resize(n);
    for (std::size_t i = 0; i < n; ++i) diagrams[i] = compute_persistence(models[i], shared, names[i]);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<std::size_t> entries(n * n, 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t p; (p = next.fetch_add(1)) < pairs.size();) {
      const auto [i, j] = pairs[p];
      const std::size_t d = mode == DistanceMode::Simplicial ? d_simplicial(models[i], models[j])
                                                             : d_persistence(diagrams[i], diagrams[j]);
      entries[i * n + j] = entries[j * n + i] = d;
    }
  };
  const unsigned threads = std::min<std::size_t>(thread_cap(), std::max<std::size_t>(1, pairs.size() / 16));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return DistanceMatrix(names, std::move(entries));
}

}  // namespace modelhom
