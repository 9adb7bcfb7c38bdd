#pragma once

#include <utility>
#include <vector>

#include "idealpoly/polygon.hpp"

namespace idealpoly {

/// Interior point at equal distance to at least three sides. `sides` lists the
/// equidistant sides in fan order: cyclic by the angle of their perpendicular
/// feet around the location, rotated to start at the smallest index.
struct CutVertex {
  DiskPoint location;
  double distance = 0.0;
  std::vector<int> sides;

  int degree() const { return static_cast<int>(sides.size()); }
};

/// An edge of the cut locus: the arc of points whose two nearest sides are
/// exactly `side_pair`, carried by the bisector of those sides. Each end is
/// either an internal CutVertex (index into the tree's vertices) or an ideal
/// polygon vertex (leaf).
struct CutEdge {
  struct End {
    enum Kind { Vertex, Leaf } kind;
    int index;
  };
  std::pair<int, int> side_pair;  // first < second
  End end1, end2;
  Geodesic carrier;
};

/// The cut locus of an ideal polygon: the geodesic tree of points equidistant
/// to two or more sides, with one leaf at each ideal vertex.
struct CutLocusTree {
  IdealPolygon polygon;
  std::vector<CutVertex> vertices;
  std::vector<CutEdge> edges;
};

/// Builds the nearest-side cell decomposition of P. Candidate vertices come
/// from every side triple; candidates closer than kMergeTol coalesce (this is
/// where degree >= 4 vertices arise); edges join nodes sharing a consecutive
/// fan pair. Structural invariants are verified before returning.
CutLocusTree build_cut_locus(const IdealPolygon& P);

/// Side pairs of the edges separating non-adjacent sides, each once, sorted.
/// Leaf edges (adjacent side pairs) are excluded.
std::vector<std::pair<int, int>> internal_edges(const CutLocusTree& T);

/// The sides equidistant from v, in fan order around the vertex.
const std::vector<int>& vertex_fan_sides(const CutVertex& v);

}  // namespace idealpoly
