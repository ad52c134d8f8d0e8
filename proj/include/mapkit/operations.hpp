#pragma once

// Dual, truncation, leapfrog and two-dimensional subdivision, on maps and on
// symmetry type graphs, plus recognition of truncated maps and type-level
// assembly of truncation sources.

#include <array>
#include <optional>
#include <vector>

#include "mapkit/involution_system.hpp"

namespace mapkit {

/// Swaps colours 0 and 2.
InvolutionSystem dual(const InvolutionSystem& sys);
FlagMap dual(const FlagMap& map);

// ---------------------------------------------------------------------------
// Flag-splitting schemes

/// One adjacency rule: the c-neighbour of (x, tag) is (x, next_tag) when
/// `via` is -1, otherwise (s_via(x), next_tag).
struct ExpansionStep {
  int via;
  int tag;
};

/// Every source point x splits into (x,0), (x,1), (x,2), numbered 3x + tag.
struct ExpansionScheme {
  std::array<std::array<ExpansionStep, 3>, 3> step;  // [tag][colour]
  /// Tag whose points carry the source structure back.
  int base_tag;
  /// On base-tag points, s_j is recovered as the word source_words[j].
  std::array<Word, 3> source_words;
  /// Tags listed in tripartition order (A0, A2, A1).
  std::array<int, 3> class_tags;

  /// Tag of the c-neighbour of a point with tag `tag`.
  int next_tag(int tag, Colour c) const { return step[tag][c].tag; }
};

extern const ExpansionScheme kTruncation;
extern const ExpansionScheme kLeapfrog;

/// The 3n-point system obtained by applying `scheme` to every point; fixed
/// points of the input stay fixed where a rule goes through them.
InvolutionSystem expand(const InvolutionSystem& sys, const ExpansionScheme& scheme);

struct FlagOrigin {
  Point source;
  int tag;
};

struct TruncationResult {
  FlagMap map;
  OrbitPartition tripartition;      // classes A0, A2, A1
  std::vector<FlagOrigin> origin;   // new flag -> (source flag, tag)
};

TruncationResult truncate(const FlagMap& map);
FlagMap leapfrog(const FlagMap& map);
/// Dual of the truncation: every face a triangle.
FlagMap subdivide2d(const FlagMap& map);

struct RecognizedTruncation {
  FlagMap source;
  OrbitPartition tripartition;
};

/// Finds a partition (A0, A2, A1) of the flags that follows the class
/// automaton and rebuilds the source on A0. Seeds flag 0 in A0, A2, A1 in that
/// order; the first seed whose source truncates back to `map` wins.
std::optional<RecognizedTruncation> recognize_truncation(const FlagMap& map);

InvolutionSystem expand_type_graph_truncation(const InvolutionSystem& graph);
InvolutionSystem expand_type_graph_leapfrog(const InvolutionSystem& graph);

// ---------------------------------------------------------------------------
// Admissibility

/// Quotients of the alternating cycle of the given length in colours a and b
/// by the subgroups of its colour-preserving automorphism group, one per
/// isomorphism class. The remaining colour is the identity. Sorted by key.
std::vector<InvolutionSystem> alternating_cycle_quotients(Colour a, Colour b, std::size_t length);

/// The <t1,t2>-orbit shapes a truncated map can show: quotients of the 6-cycle.
const std::vector<InvolutionSystem>& hexagon_quotients();
/// The <t0,t2>-orbit shapes every type graph shows: quotients of the 4-cycle.
const std::vector<InvolutionSystem>& square_quotients();

/// The orbit of `graph` under <t_a,t_b> containing x, as a system on its own
/// points (in orbit order) with the third colour the identity.
InvolutionSystem two_colour_component(const InvolutionSystem& graph, Colour a, Colour b, Point x);

/// First <t1,t2>-orbit whose shape is not a hexagon quotient, if any.
std::optional<std::vector<Point>> inadmissible_orbit(const InvolutionSystem& graph);
bool is_truncation_admissible(const InvolutionSystem& graph);

class InadmissibleTypeGraphError : public Error {
 public:
  explicit InadmissibleTypeGraphError(std::vector<Point> orbit);
  const std::vector<Point>& orbit() const noexcept { return orbit_; }

 private:
  std::vector<Point> orbit_;
};

// ---------------------------------------------------------------------------
// Assembly

/// One component of the product of a type graph with the class automaton.
struct AssemblyProduct {
  std::vector<std::pair<Point, int>> states;  // (type-graph vertex, tag)
  InvolutionSystem transitions;               // on state indices
  std::vector<Point> base_states;             // indices of the base-tag states
};

struct AssemblyCandidate {
  AssemblyProduct product;
  InvolutionSystem source;  // canonical form of the graph on the base-tag states
  /// |component| / |graph|: 3 when the source has as many vertices as the
  /// graph, 2 for a source of 2/3 the size, 1 when the graph is the full
  /// expansion of the source.
  std::size_t fold;
};

/// Candidate source types of maps whose image under `scheme` has type graph
/// `graph`, one per canonical key, sorted by (fold descending, key). Throws
/// InadmissibleTypeGraphError when some <t1,t2>-orbit is not a hexagon quotient.
std::vector<AssemblyCandidate> assemble_source_type(const InvolutionSystem& graph,
                                                    const ExpansionScheme& scheme = kTruncation);

}  // namespace mapkit
