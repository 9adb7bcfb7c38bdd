#pragma once

#include <utility>
#include <vector>

#include "idealpoly/hyperbolic.hpp"

namespace idealpoly {

/// An ideal n-gon: n >= 3 vertex angles on the boundary circle, strictly
/// increasing within [0, 2*pi). Side k is the geodesic from vertex k to
/// vertex k+1 (mod n), oriented so the interior lies on its left.
struct IdealPolygon {
  std::vector<double> angles;

  int n() const { return static_cast<int>(angles.size()); }
  IdealPoint vertex(int k) const;
  Geodesic side(int k) const;
  bool adjacent_sides(int i, int j) const;
};

/// Validates, normalizes into [0, 2*pi) and sorts the angles cyclically.
IdealPolygon make_polygon(std::vector<double> angles);

/// The regular ideal n-gon: vertices at angles 2*pi*k/n.
IdealPolygon regular_polygon(int n);

/// Radius of the largest disk embedded in the regular ideal n-gon,
/// arccosh(1 / sin(pi/n)).
double inradius(int n);

/// Strict interior test: p lies on the interior side of every side geodesic.
bool contains(const IdealPolygon& P, DiskPoint p);

/// The perpendicular segment between two non-adjacent sides, together with
/// the partition (split1, split2) of the n ideal vertices it separates.
struct OrthoGeodesic {
  int i = 0, j = 0;  // side indices, i < j
  OrthoSegment segment;
  int split1 = 0, split2 = 0;  // split1 + split2 = n, both >= 2

  double length() const { return segment.length; }
};

OrthoGeodesic orthogeodesic(const IdealPolygon& P, int i, int j);

/// One orthogeodesic per unordered non-adjacent side pair; n(n-3)/2 in total.
std::vector<OrthoGeodesic> all_orthogeodesics(const IdealPolygon& P);

/// Length of any orthogeodesic of the regular n-gon that splits the vertices
/// (n1, n - n1): 2 arccosh(sin(n1 pi / n) cosh(r_n)). Symmetric in n1 <-> n-n1
/// and strictly increasing up to n1 = n/2, where it reaches 2 r_n.
double regular_ortho_length(int n, int n1);

/// Length of the geodesic chord between the two points where the inscribed
/// disk of the regular n-gon touches the sides of a split-(n1, n-n1) pair:
/// 2 asinh(sin(n1 pi / n) sinh(r_n)). Strictly longer than the orthogeodesic
/// between those sides except at n1 = n/2, where the two coincide.
double regular_tangency_chord_length(int n, int n1);

/// Sum over the sides of arcsin(1 / cosh(distance to side)); equals pi for
/// every interior point.
double basmajian_sum(const IdealPolygon& P, DiskPoint p);

/// Radius of the largest disk centered at p embedded in P, i.e. the minimum
/// distance from p to the sides. Bounded above by inradius(n).
double max_inradius(const IdealPolygon& P, DiskPoint p);

/// A triangulation of the abstract n-gon: n-3 pairwise non-crossing chords
/// between non-adjacent vertices, stored sorted with first < second.
struct Triangulation {
  int n = 0;
  std::vector<std::pair<int, int>> chords;
};

Triangulation make_triangulation(int n, std::vector<std::pair<int, int>> chords);

/// Do two vertex chords of the n-gon cross in the interior?
bool chords_cross(std::pair<int, int> c1, std::pair<int, int> c2);

/// Do two side pairs interleave cyclically (i.e. their orthogeodesics cross)?
bool side_pairs_interleave(int n, std::pair<int, int> p1, std::pair<int, int> p2);

/// Chord (a, b) <-> orthogeodesic between sides (a-1, b-1) mod n. The chord is
/// obtained by pulling each orthogeodesic endpoint forward (counterclockwise)
/// to the next vertex; these two maps are mutually inverse bijections.
std::pair<int, int> chord_to_side_pair(int n, std::pair<int, int> chord);
std::pair<int, int> side_pair_to_chord(int n, std::pair<int, int> sides);

/// A maximal family of pairwise-disjoint orthogeodesics; always n-3 of them.
struct OrthoDecomposition {
  int n = 0;
  std::vector<OrthoGeodesic> members;
  double max_length = 0.0;
};

/// Validates the decomposition invariants: exactly n-3 members, side pairs
/// pairwise non-interleaving, segments at positive pairwise distance.
OrthoDecomposition make_decomposition(const IdealPolygon& P, std::vector<OrthoGeodesic> members);

/// Members follow the chord order of T.
OrthoDecomposition decomposition_from_triangulation(const IdealPolygon& P, const Triangulation& T);

/// For an ideal 4-gon with orthogeodesic lengths x and y,
/// sinh(x/2) sinh(y/2) = 1; returns the y paired with a given x > 0.
double quad_partner_length(double x);

}  // namespace idealpoly
