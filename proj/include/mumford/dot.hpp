#pragma once

#include <string>
#include <vector>

#include "mumford/covering.hpp"
#include "mumford/tree.hpp"

namespace mumford {

/// Hull nodes joined along the tree, with the ends attached as leaves.
std::string hull_dot(const HullTree& h);

/// Positions on the geodesic between the fixed points, marked by which
/// generator fixes them.
std::string scan_dot(const GeodesicScan& scan);

/// Pieces as nodes; an edge joins index tuples that differ by one step in a
/// single coordinate.
std::string pieces_dot(const std::vector<Piece>& pieces);

}  // namespace mumford
