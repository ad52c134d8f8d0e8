#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mapkit/involution_system.hpp"

namespace mapkit {

inline constexpr std::size_t kMaxTypeGraphVertices = 18;
inline constexpr std::size_t kMaxMapFlags = 16;

enum class ConstraintKind { all, truncation_admissible, leapfrog_admissible };

struct EnumerationConstraint {
  ConstraintKind kind = ConstraintKind::all;

  /// Shapes required of the two-coloured orbits, for reports.
  std::string description() const;
};

/// All connected relaxed systems on k points up to isomorphism, canonical
/// forms sorted by key. Every <t0,t2>-orbit is a square quotient; the
/// admissible kinds also require hexagon-quotient <t1,t2>-orbits.
std::vector<InvolutionSystem> enumerate_type_graphs(std::size_t k, EnumerationConstraint c = {},
                                                    std::size_t bound = kMaxTypeGraphVertices);
std::vector<InvolutionSystem> enumerate_admissible(std::size_t k, std::size_t bound = kMaxTypeGraphVertices);

/// All maps on n_flags flags up to isomorphism, canonical forms sorted by key.
std::vector<FlagMap> enumerate_maps(std::size_t n_flags, std::size_t bound = kMaxMapFlags);

struct Ratio {
  std::size_t num = 0;
  std::size_t den = 1;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

std::string to_string(const Ratio& r);

struct CensusRecord {
  CanonicalKey key;
  std::size_t n_flags = 0;
  std::size_t V = 0, E = 0, F = 0;
  int chi = 0;
  bool orientable = false;
  std::size_t k = 0;
  CanonicalKey type_key;
  std::size_t tr_k = 0;
  CanonicalKey tr_type_key;
  std::size_t le_k = 0;
  CanonicalKey le_type_key;
  Ratio tr_ratio;
  std::vector<std::string> labels;  // builder names that produced this map
};

CensusRecord census_record(const FlagMap& map);

/// One record per map on at most max_flags flags, merged with one record per
/// standard builder map; sorted by (n_flags, key), duplicates merged.
std::vector<CensusRecord> census(std::size_t max_flags, bool include_builders = true);

}  // namespace mapkit
