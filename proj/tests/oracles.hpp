#pragma once

// Slow, independent reimplementations used to check the library.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mapkit/involution_system.hpp"

namespace oracle {

using mapkit::ColourSet;
using mapkit::InvolutionSystem;
using mapkit::Point;

/// Strict map axioms scanned point by point.
bool is_strict_map(const InvolutionSystem& sys);

/// Orbits of the subgroup generated by the colours, by union-find. Each class
/// sorted, classes sorted.
std::vector<std::vector<Point>> union_find_orbits(const InvolutionSystem& sys, ColourSet colours);

/// Backtracking search for a colour-preserving bijection.
bool brute_isomorphic(const InvolutionSystem& a, const InvolutionSystem& b);

/// Number of colour-preserving permutations of the points.
std::size_t brute_automorphism_count(const InvolutionSystem& sys);

/// Vertices 0..n-1 reachable from 0: true when connected.
bool connected(const InvolutionSystem& sys);

/// Keys of every strict connected system on n points: all triples of
/// fixed-point-free involutions, filtered.
std::set<std::string> naive_map_keys(std::size_t n);

/// Fixed-point-free involutions on n points.
std::vector<std::vector<Point>> perfect_matchings(std::size_t n);

/// Random relabelling with a fixed seed.
InvolutionSystem shuffled(const InvolutionSystem& sys, unsigned seed);

}  // namespace oracle
