#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace modelhom {

/// 1-based position of a component in its universe.
using Vertex = std::uint32_t;

/// Stable 64-bit FNV-1a digest rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// The ordered component set shared by every model under comparison.
///
/// Position i (1-based) is the component's vertex index; labels are only
/// consulted at I/O boundaries.
class ComponentUniverse {
 public:
  ComponentUniverse(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& label(Vertex v) const;
  std::optional<Vertex> find(std::string_view label) const;
  /// Throws InputError for unknown labels.
  Vertex index(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  /// Digest of the ordered label list; the name does not participate.
  const std::string& hash() const { return hash_; }

  /// True when this universe's labels are an ordered prefix of `other`'s.
  bool is_prefix_of(const ComponentUniverse& other) const;

  bool operator==(const ComponentUniverse& other) const { return labels_ == other.labels_; }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::string hash_;
};

using UniversePtr = std::shared_ptr<const ComponentUniverse>;

UniversePtr make_universe(std::string name, std::vector<std::string> labels);

/// Appends the labels of `extra` not already present, preserving order.
UniversePtr extend_universe(const UniversePtr& base, std::span<const std::string> extra);

bool same_universe(const UniversePtr& a, const UniversePtr& b);

}  // namespace modelhom
