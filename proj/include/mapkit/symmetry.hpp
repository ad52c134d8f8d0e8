#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mapkit/involution_system.hpp"

namespace mapkit {

/// A point permutation commuting with t0, t1 and t2.
class Automorphism {
 public:
  explicit Automorphism(std::vector<Point> perm) : perm_(std::move(perm)) {}
  Point operator()(Point x) const { return perm_[x]; }
  const std::vector<Point>& perm() const noexcept { return perm_; }
  bool is_identity() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  std::vector<Point> perm_;
};

/// All colour-preserving automorphisms, one per target of point 0 that admits
/// an extension, ordered by that target. For maps the action on flags is
/// free, so the group order divides the flag count.
std::vector<Automorphism> automorphism_group(const InvolutionSystem& sys);

/// Orbits of the given group on points, ordered by least point.
OrbitPartition orbit_partition(const std::vector<Automorphism>& group, std::size_t n_points);

/// Orbits of Aut(map) on flags; their number is the k of a k-orbit map.
OrbitPartition flag_orbit_partition(const FlagMap& map);

struct SymmetryTypeGraph {
  InvolutionSystem graph;
  std::optional<OrbitPartition> orbit_classes;
  std::optional<std::string> name;

  std::size_t vertex_count() const { return graph.size(); }
};

/// The quotient of the flag graph by the automorphism group.
SymmetryTypeGraph symmetry_type_graph(const FlagMap& map);

/// Components of the subgraph spanned by colours i and j (semi-edges count as
/// incident). For a type graph this is the number of orbits of the cells of
/// the remaining dimension.
std::size_t two_factor_components(const InvolutionSystem& graph, Colour i, Colour j);

// ---------------------------------------------------------------------------
// Named symmetry types

enum class PinStatus { pinned, alias_set };

struct NamedTypeEntry {
  std::vector<std::string> names;  // one name when pinned, the candidate set otherwise
  CanonicalKey key;
  PinStatus status = PinStatus::pinned;

  /// "4_D" for a pinned entry, "{6_Bp|6_Gp}" for an alias set.
  std::string label() const;
};

class TypeRegistry {
 public:
  /// Throws std::logic_error when the key already carries a different pin or
  /// the name is already pinned to another key.
  void pin(const std::string& name, const CanonicalKey& key);
  /// Records that the graph with `key` is one of `names`. Ignored when the key
  /// is pinned already; merges with an existing alias set otherwise.
  void alias(const std::vector<std::string>& names, const CanonicalKey& key);

  std::optional<NamedTypeEntry> find(const CanonicalKey& key) const;
  std::optional<CanonicalKey> key_of(const std::string& pinned_name) const;
  /// Entries sorted by label.
  std::vector<NamedTypeEntry> entries() const;

  friend bool operator==(const TypeRegistry& a, const TypeRegistry& b) { return a.entries() == b.entries(); }

 private:
  std::unordered_map<CanonicalKey, NamedTypeEntry, CanonicalKeyHash> by_key_;
  std::unordered_map<std::string, CanonicalKey> pinned_names_;
};

inline bool operator==(const NamedTypeEntry& a, const NamedTypeEntry& b) {
  return a.names == b.names && a.key == b.key && a.status == b.status;
}

/// Builds the registry from scratch: exhaustive enumeration for k <= 3, the
/// truncation partition quotient for 3^0, and the textual fingerprints and
/// truncation tables for the larger names. Deterministic.
TypeRegistry build_standard_registry();

/// Lazily built, shared instance of build_standard_registry().
const TypeRegistry& standard_registry();

std::optional<NamedTypeEntry> classify_name(const InvolutionSystem& graph,
                                            const TypeRegistry& registry = standard_registry());

/// Pinned graph by name; throws std::out_of_range for unknown or unpinned names.
InvolutionSystem named_type_graph(const std::string& name);

/// Label of the graph in the standard registry, or the first 12 hex digits of
/// its canonical key prefixed by '#'.
std::string type_label(const InvolutionSystem& graph);
std::string type_label(const CanonicalKey& key);

}  // namespace mapkit
