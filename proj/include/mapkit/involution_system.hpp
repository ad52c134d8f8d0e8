#pragma once

// Edge-coloured involution systems: the common representation of flag graphs
// of maps and of symmetry type graphs.
//
// A system on n points carries three self-inverse mappings t0, t1, t2. A fixed
// point x = t_i(x) is a semi-edge of colour i. Points are 0-based here; the
// text formats in formats.hpp use 1-based indices.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mapkit/errors.hpp"

namespace mapkit {

using Point = std::uint32_t;
using Colour = int;
using Word = std::vector<Colour>;

inline constexpr int kColours = 3;

/// Subset of {0,1,2}.
class ColourSet {
 public:
  constexpr ColourSet() = default;
  constexpr ColourSet(std::initializer_list<Colour> colours) {
    for (Colour c : colours) bits_ |= static_cast<std::uint8_t>(1U << c);
  }
  constexpr bool contains(Colour c) const { return (bits_ >> c) & 1U; }
  constexpr void insert(Colour c) { bits_ |= static_cast<std::uint8_t>(1U << c); }
  static constexpr ColourSet all() { return ColourSet{0, 1, 2}; }

 private:
  std::uint8_t bits_ = 0;
};

class InvolutionSystem {
 public:
  /// Throws std::invalid_argument unless the three mappings are total on the
  /// same non-empty point set with images in range.
  explicit InvolutionSystem(std::array<std::vector<Point>, 3> images);

  /// One point per entry of `size`, every t_i the identity.
  static InvolutionSystem identity(std::size_t size);

  std::size_t size() const noexcept { return images_[0].size(); }
  Point operator()(Colour c, Point x) const { return images_[c][x]; }
  std::span<const Point> involution(Colour c) const { return images_[c]; }
  const std::array<std::vector<Point>, 3>& images() const noexcept { return images_; }
  bool is_semi_edge(Colour c, Point x) const { return images_[c][x] == x; }

  friend bool operator==(const InvolutionSystem&, const InvolutionSystem&) = default;

 private:
  std::array<std::vector<Point>, 3> images_;
};

// ---------------------------------------------------------------------------
// Validation

enum class Strictness { relaxed, strict };

enum class ViolationKind {
  not_involution,    // t_i(t_i(x)) != x
  disconnected,      // x unreachable from point 0
  four_cycle,        // (t0 t2)^2 (x) != x
  fixed_point,       // strict: t_i(x) == x
  fixed_point_t0t2,  // strict: t0(t2(x)) == x
};

struct Violation {
  ViolationKind kind;
  Colour colour;  // -1 when the invariant is not tied to one colour
  Point point;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using ValidationReport = std::vector<Violation>;

std::string to_string(ViolationKind kind);
std::string describe(const Violation& violation);

/// Staged check: involution, then connectivity and the 4-cycle condition,
/// then (strict only) fixed points of t_i and of t0t2. A failing involution
/// stage ends the run. Each failing invariant is reported once, with the
/// least offending point.
ValidationReport validate(const InvolutionSystem& sys, Strictness mode);

class InvalidSystemError : public Error {
 public:
  explicit InvalidSystemError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// An involution system that passed strict validation: the flags of a map.
class FlagMap {
 public:
  /// Throws InvalidSystemError when `sys` is not a strict system.
  explicit FlagMap(InvolutionSystem sys);

  const InvolutionSystem& system() const noexcept { return sys_; }
  operator const InvolutionSystem&() const noexcept { return sys_; }  // NOLINT
  std::size_t size() const noexcept { return sys_.size(); }
  Point operator()(Colour c, Point x) const { return sys_(c, x); }

  friend bool operator==(const FlagMap&, const FlagMap&) = default;

 private:
  InvolutionSystem sys_;
};

// ---------------------------------------------------------------------------
// Partitions and orbits

class OrbitPartition {
 public:
  /// Classes must be non-empty, disjoint and cover 0..n_points-1. The class
  /// order is kept; points inside each class are sorted.
  OrbitPartition(std::vector<std::vector<Point>> classes, std::size_t n_points);

  /// Classes ordered by least point; `labels[x]` names the class of x.
  static OrbitPartition from_labels(std::span<const std::size_t> labels);

  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t point_count() const noexcept { return class_of_.size(); }
  const std::vector<Point>& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<std::vector<Point>>& classes() const noexcept { return classes_; }
  std::size_t class_of(Point x) const { return class_of_[x]; }

  friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;

 private:
  std::vector<std::vector<Point>> classes_;
  std::vector<std::size_t> class_of_;
};

/// Orbits of the subgroup generated by {t_i : i in colours}, ordered by least
/// point. {1,2} gives vertices, {0,2} edges, {0,1} faces.
OrbitPartition orbits(const InvolutionSystem& sys, ColourSet colours);

struct CellCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
};

CellCounts cell_counts(const FlagMap& map);
int euler_characteristic(const FlagMap& map);

/// True iff the points split into two classes swapped by every t_i.
bool is_orientable(const FlagMap& map);

/// Applies t_{w[0]}, then t_{w[1]}, ... to x.
Point apply_word(const InvolutionSystem& sys, Point x, std::span<const Colour> word);

// ---------------------------------------------------------------------------
// Canonical forms

/// Total isomorphism invariant: the least breadth-first transition table over
/// all roots, serialized big-endian. Ordering is lexicographic on bytes.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;
  static CanonicalKey from_hex(std::string_view hex);
  bool empty() const noexcept { return bytes_.empty(); }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string bytes_;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept;
};

struct CanonicalForm {
  CanonicalKey key;
  InvolutionSystem system;      // relabelled copy whose identity BFS is minimal
  std::vector<Point> relabel;   // original point -> canonical point
};

/// Requires a connected system with fewer than 65536 points.
CanonicalForm canonical_form(const InvolutionSystem& sys);
CanonicalKey canonical_key(const InvolutionSystem& sys);

/// Inverse of canonical_key: the canonical system the key encodes.
InvolutionSystem system_from_key(const CanonicalKey& key);

bool isomorphic(const InvolutionSystem& a, const InvolutionSystem& b);

/// The unique colour-respecting map f from `from` to `to` with
/// f(source) = target, if one exists. `from` must be connected.
std::optional<std::vector<Point>> extend_morphism(const InvolutionSystem& from,
                                                  const InvolutionSystem& to, Point source,
                                                  Point target);

/// Relabels points: the result maps perm[x] to perm[t_i(x)].
InvolutionSystem relabel(const InvolutionSystem& sys, std::span<const Point> perm);

// ---------------------------------------------------------------------------
// Quotients

class IncompatiblePartitionError : public Error {
 public:
  IncompatiblePartitionError(Colour colour, std::size_t from_class, std::size_t to_class_a,
                             std::size_t to_class_b);
  Colour colour() const noexcept { return colour_; }
  std::size_t from_class() const noexcept { return from_; }

 private:
  Colour colour_;
  std::size_t from_;
};

/// Points become classes; t_i sends the class of x to the class of t_i(x).
/// Throws IncompatiblePartitionError when some t_i splits a class.
InvolutionSystem quotient(const InvolutionSystem& sys, const OrbitPartition& partition);

}  // namespace mapkit
