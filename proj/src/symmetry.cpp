#include "mapkit/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mapkit/parallel.hpp"

namespace mapkit {

bool Automorphism::is_identity() const {
  for (std::size_t x = 0; x < perm_.size(); ++x)
    if (perm_[x] != x) return false;
  return true;
}

std::vector<Automorphism> automorphism_group(const InvolutionSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<std::optional<std::vector<Point>>> found(n);
  parallel_for(n, [&](std::size_t target) {
    auto f = extend_morphism(sys, sys, 0, static_cast<Point>(target));
    if (!f) return;
    // A morphism onto a connected system of the same size is onto, hence a
    // bijection; the check below is for systems that are not connected.
    std::vector<bool> hit(n, false);
    for (Point y : *f) {
      if (hit[y]) return;
      hit[y] = true;
    }
    found[target] = std::move(f);
  });
  std::vector<Automorphism> group;
  for (auto& f : found)
    if (f) group.emplace_back(std::move(*f));
  return group;
}

OrbitPartition orbit_partition(const std::vector<Automorphism>& group, std::size_t n_points) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n_points, kNone);
  std::size_t next = 0;
  for (Point x = 0; x < n_points; ++x) {
    if (label[x] != kNone) continue;
    for (const auto& g : group) label[g(x)] = next;
    label[x] = next;
    ++next;
  }
  return OrbitPartition::from_labels(label);
}

OrbitPartition flag_orbit_partition(const FlagMap& map) {
  return orbit_partition(automorphism_group(map), map.size());
}

SymmetryTypeGraph symmetry_type_graph(const FlagMap& map) {
  auto classes = flag_orbit_partition(map);
  auto graph = quotient(map, classes);
  return {std::move(graph), std::move(classes), std::nullopt};
}

std::size_t two_factor_components(const InvolutionSystem& graph, Colour i, Colour j) {
  return orbits(graph, ColourSet{i, j}).size();
}

// ---------------------------------------------------------------------------

std::string NamedTypeEntry::label() const {
  if (status == PinStatus::pinned) return names.front();
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += '|';
    s += names[i];
  }
  return s + "}";
}

void TypeRegistry::pin(const std::string& name, const CanonicalKey& key) {
  if (auto it = pinned_names_.find(name); it != pinned_names_.end() && it->second != key)
    throw std::logic_error("type name " + name + " pinned to two different graphs");
  if (auto it = by_key_.find(key); it != by_key_.end() && it->second.status == PinStatus::pinned) {
    if (it->second.names.front() != name)
      throw std::logic_error("graph pinned as both " + it->second.names.front() + " and " + name);
    return;
  }
  by_key_[key] = NamedTypeEntry{{name}, key, PinStatus::pinned};
  pinned_names_[name] = key;
}

void TypeRegistry::alias(const std::vector<std::string>& names, const CanonicalKey& key) {
  auto it = by_key_.find(key);
  if (it != by_key_.end() && it->second.status == PinStatus::pinned) return;
  std::vector<std::string> merged = names;
  if (it != by_key_.end()) {
    // The graph lies in both candidate sets.
    std::vector<std::string> both;
    std::vector<std::string> a = it->second.names, b = names;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    merged = both.empty() ? a : both;
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  if (merged.size() == 1) {
    pin(merged.front(), key);
    return;
  }
  by_key_[key] = NamedTypeEntry{std::move(merged), key, PinStatus::alias_set};
}

std::optional<NamedTypeEntry> TypeRegistry::find(const CanonicalKey& key) const {
  if (auto it = by_key_.find(key); it != by_key_.end()) return it->second;
  return std::nullopt;
}

std::optional<CanonicalKey> TypeRegistry::key_of(const std::string& pinned_name) const {
  if (auto it = pinned_names_.find(pinned_name); it != pinned_names_.end()) return it->second;
  return std::nullopt;
}

std::vector<NamedTypeEntry> TypeRegistry::entries() const {
  std::vector<NamedTypeEntry> out;
  out.reserve(by_key_.size());
  for (const auto& [key, entry] : by_key_) out.push_back(entry);
  std::sort(out.begin(), out.end(), [](const NamedTypeEntry& a, const NamedTypeEntry& b) {
    return std::pair(a.label(), a.key) < std::pair(b.label(), b.key);
  });
  return out;
}

const TypeRegistry& standard_registry() {
  static const TypeRegistry registry = build_standard_registry();
  return registry;
}

std::optional<NamedTypeEntry> classify_name(const InvolutionSystem& graph, const TypeRegistry& registry) {
  return registry.find(canonical_key(graph));
}

InvolutionSystem named_type_graph(const std::string& name) {
  auto key = standard_registry().key_of(name);
  if (!key) throw std::out_of_range("no pinned symmetry type named " + name);
  return system_from_key(*key);
}

std::string type_label(const CanonicalKey& key) {
  if (auto entry = standard_registry().find(key)) return entry->label();
  return "#" + key.hex().substr(0, 12);
}

std::string type_label(const InvolutionSystem& graph) { return type_label(canonical_key(graph)); }

}  // namespace mapkit
