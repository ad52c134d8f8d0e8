#pragma once

#include <string>
#include <vector>

#include "mapkit/builders.hpp"
#include "mapkit/enumeration.hpp"
#include "mapkit/involution_system.hpp"

namespace mapkit {

struct CisDocument {
  InvolutionSystem system;
  Strictness mode = Strictness::relaxed;
};

/// Reads a cis document without validating or relabelling it.
CisDocument read_cis(const std::string& text);

/// cis text:
///
///   cis <k> strict|relaxed
///   0: <k 1-based images>
///   1: ...
///   2: ...
///
/// '#' starts a comment. Throws ParseError with the line number on malformed
/// input and InvalidSystemError when validation in the header's mode fails.
/// The system is returned in canonical form unless `canonicalize` is false.
CisDocument parse_cis(const std::string& text, bool canonicalize = true);

/// The mode word defaults to strict when the system passes strict validation.
std::string serialize_cis(const InvolutionSystem& sys, bool canonicalize = true);
std::string serialize_cis(const InvolutionSystem& sys, Strictness mode, bool canonicalize = true);

/// "rot" header, then one "v<i>: <ids>" line per vertex in order.
RotationSystem parse_rotation(const std::string& text);

struct DotOptions {
  std::string graph_name = "G";
  bool canonicalize = true;
};

/// Undirected DOT: one node per point, colour-i edges labelled i, a fixed
/// point of t_i drawn as an edge to the point node h_<vertex>_<i>.
std::string export_dot(const InvolutionSystem& sys, const DotOptions& options = {});

/// Header plus one row per record, 13 columns.
std::string census_csv(const std::vector<CensusRecord>& records);
extern const char* const kCensusHeader;

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace mapkit
