#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mapkit/involution_system.hpp"

namespace mapkit {

/// Cyclic orderings of half-edge identifiers around each vertex. Every
/// identifier occurs exactly twice; twice at one vertex makes a loop.
struct RotationSystem {
  std::vector<std::vector<std::string>> vertices;
};

/// Flags are (dart, side): t2 flips the side, t1 moves to the next dart at
/// the vertex, t0 crosses to the other dart of the edge. Throws
/// std::invalid_argument when some identifier does not occur exactly twice.
FlagMap from_rotation_system(const RotationSystem& rs);

/// Map from face boundaries given as vertex cycles. Every edge, an unordered
/// pair of consecutive vertices, must lie on exactly two face sides and no two
/// edges may share both endpoints.
FlagMap from_face_cycles(const std::vector<std::vector<int>>& faces);

FlagMap tetrahedron();
FlagMap cube();
FlagMap octahedron();
FlagMap dodecahedron();
FlagMap icosahedron();
/// {n,2}: n vertices, n edges, two n-gonal faces.
FlagMap dihedron(int n);
/// {2,n}: two vertices, n edges, n digons.
FlagMap hosohedron(int n);
/// Two n-gons joined by n squares.
FlagMap prism(int n);
/// {4,4}_(b,c) on the torus: b^2 + c^2 vertices, 8(b^2 + c^2) flags.
FlagMap torus44(int b, int c);

/// Names: tetrahedron, cube, octahedron, dodecahedron, icosahedron,
/// dihedron, hosohedron, prism (one parameter), torus44 (two). Throws
/// std::invalid_argument for unknown names or bad parameters.
FlagMap build_named(const std::string& name, const std::vector<int>& params);
/// Accepts "cube", "dihedron(4)", "torus44(2,1)".
FlagMap build_named(const std::string& spec_text);

/// The builder maps added to every census, labelled like "prism(5)".
std::vector<std::pair<std::string, FlagMap>> standard_builder_maps();

}  // namespace mapkit
