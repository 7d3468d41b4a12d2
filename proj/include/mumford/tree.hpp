#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mumford/moebius.hpp"

namespace mumford {

/// Vertex of the Bruhat-Tits tree as the closed ball {x : ord(x - center) >= level}.
/// The center is reduced modulo pi^level, so equal vertices compare equal.
struct TreeVertex {
  LaurentElem center;
  std::int64_t level;

  friend bool operator==(const TreeVertex& a, const TreeVertex& b) {
    return a.level == b.level && a.center == b.center;
  }
  bool contains(const LaurentElem& x) const;
  std::string str() const;
};

TreeVertex vertex_canonical(const LaurentElem& a, std::int64_t level);
/// v1 = (0, 0), the class of the standard lattice.
TreeVertex base_vertex(const FieldParams& params);

std::int64_t distance(const TreeVertex& v, const TreeVertex& w);

/// The unique vertex common to the three geodesics between pairwise distinct ends.
TreeVertex meet_vertex(const End& a, const End& b, const End& c);
/// Projection of w onto the geodesic between the ends a and b.
TreeVertex meet_vertex(const End& a, const End& b, const TreeVertex& w);

TreeVertex apply_moebius(const Moebius& g, const TreeVertex& v);
/// g fixes v iff h^-1 g h lies in K^x GL_2(O), h = [[pi^level, center], [0, 1]].
bool is_fixed(const Moebius& g, const TreeVertex& v);

/// Vertices of the segment [v, w] in order, both extremities included.
std::vector<TreeVertex> path_vertices(const TreeVertex& v, const TreeVertex& w);

/// Unordered edge between adjacent vertices, stored with the deeper vertex first.
struct TreeEdge {
  TreeVertex lower;
  TreeVertex upper;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};
TreeEdge make_edge(const TreeVertex& v, const TreeVertex& w);
TreeEdge apply_moebius(const Moebius& g, const TreeEdge& e);

/// Neighbours of v: its q children and its parent.
std::vector<TreeVertex> neighbours(const TreeVertex& v);

/// Vertices of the geodesic between two distinct ends, by signed position:
/// position s >= 0 is s steps from the meeting point towards `a`.
class Geodesic {
 public:
  Geodesic(End a, End b);
  TreeVertex at(std::int64_t position) const;
  const End& from() const noexcept { return a_; }
  const End& to() const noexcept { return b_; }

 private:
  End a_;
  End b_;
  std::int64_t join_ = 0;
};

struct MirrorDistance {
  std::int64_t distance;  // pi-units
  TreeVertex xi1;         // closest vertex of M(g1)
  TreeVertex xi2;         // closest vertex of M(g2)
  LaurentElem eta;        // parameter of g2 in the normal frame
  LaurentElem p2;         // fixed point of g2 in the normal frame
  Moebius conjugator;     // sends g1 to [[1,0],[1,1]] and g2 to eta-form at p2
};

/// Unique fixed point of a parabolic element (throws NotParabolic otherwise).
End parabolic_fixed_point(const Moebius& g);
bool is_parabolic(const Moebius& g);

/// Distance between the mirrors of two parabolic elements via the normal
/// form [[1,0],[1,1]] / eta-form, where the distance is -ord(eta).
MirrorDistance mirror_distance(const Moebius& g1, const Moebius& g2);

struct GeodesicScan {
  std::int64_t distance;
  std::vector<std::int64_t> fixed_by_first;   // positions fixed by g1
  std::vector<std::int64_t> fixed_by_second;  // positions fixed by g2
  bool convex;                                // both fixed sets contiguous
};

/// Walk the geodesic between the fixed points testing is_fixed directly.
GeodesicScan mirror_distance_scan(const Moebius& g1, const Moebius& g2,
                                  std::int64_t max_window = 256);

/// Hull of marked points of P^1(K) together with infinity. Every point of the
/// hull lies on some path from a finite a_i up to infinity, parametrized by
/// rho = ord(x - a_i) along it; on that path ord(x - a_j) = min(rho, ord(a_i - a_j)).
struct HullTree {
  std::vector<End> points;
  TreeVertex base;                 // projection of v1 onto the hull
  std::vector<TreeVertex> nodes;   // base plus all triple meets
  /// For each finite point index i: breakpoints ord(a_i - a_j), j != i, sorted.
  std::vector<std::vector<Valu>> branch_breaks;
  std::vector<std::size_t> finite_index;  // indices into points of finite ends

  /// ord(x - a_j) for all finite j, at parameter rho on the path from finite point k.
  std::vector<Valu> tuple_on_branch(std::size_t k, const Valu& rho) const;
};

HullTree hull_tree(const std::vector<End>& points);

}  // namespace mumford
