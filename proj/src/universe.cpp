#include "modelhom/universe.hpp"

#include "modelhom/error.hpp"

#include <cstdio>

namespace modelhom {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ComponentUniverse::ComponentUniverse(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
  std::string joined;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("universe '" + name_ + "': empty label at position " + std::to_string(i + 1));
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<Vertex>(i + 1));
    if (!inserted) throw InputError("universe '" + name_ + "': duplicate label '" + labels_[i] + "'");
    joined += labels_[i];
    joined.push_back('\0');
  }
  hash_ = fnv1a_hex(joined);
}

const std::string& ComponentUniverse::label(Vertex v) const {
  if (v == 0 || v > labels_.size()) throw InputError("vertex index " + std::to_string(v) + " outside universe '" + name_ + "'");
  return labels_[v - 1];
}

std::optional<Vertex> ComponentUniverse::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex ComponentUniverse::index(std::string_view label) const {
  auto v = find(label);
  if (!v) throw InputError("unknown label '" + std::string(label) + "' in universe '" + name_ + "'");
  return *v;
}

bool ComponentUniverse::is_prefix_of(const ComponentUniverse& other) const {
  if (labels_.size() > other.labels_.size()) return false;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] != other.labels_[i]) return false;
  return true;
}

UniversePtr make_universe(std::string name, std::vector<std::string> labels) {
  return std::make_shared<const ComponentUniverse>(std::move(name), std::move(labels));
}

UniversePtr extend_universe(const UniversePtr& base, std::span<const std::string> extra) {
  std::vector<std::string> labels = base->labels();
  std::unordered_map<std::string, bool> seen;
  for (const auto& l : labels) seen[l] = true;
  bool changed = false;
  for (const auto& l : extra) {
    if (seen.emplace(l, true).second) {
      labels.push_back(l);
      changed = true;
    }
  }
  if (!changed) return base;
  return make_universe(base->name(), std::move(labels));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && a->hash() == b->hash() && *a == *b);
}

}  // namespace modelhom
