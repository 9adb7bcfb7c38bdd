#include "idealpoly/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace idealpoly {

IdealPoint IdealPolygon::vertex(int k) const {
  const int nn = n();
  return IdealPoint(angles[((k % nn) + nn) % nn]);
}

Geodesic IdealPolygon::side(int k) const { return Geodesic(vertex(k), vertex(k + 1)); }

bool IdealPolygon::adjacent_sides(int i, int j) const {
  const int d = ((i - j) % n() + n()) % n();
  return d == 1 || d == n() - 1;
}

IdealPolygon make_polygon(std::vector<double> angles) {
  const int n = static_cast<int>(angles.size());
  if (n < 3) throw DomainError("a polygon needs at least 3 vertices, got " + std::to_string(n));
  for (double& a : angles) a = IdealPoint(a).angle;
  std::sort(angles.begin(), angles.end());
  for (int k = 0; k < n; ++k) {
    const double gap = (k + 1 < n) ? angles[k + 1] - angles[k] : angles[0] + kTwoPi - angles[n - 1];
    if (!(gap > kSepTol))
      throw DomainError("vertex angles " + std::to_string(k) + " and " +
                        std::to_string((k + 1) % n) + " coincide within separation tolerance");
  }
  return IdealPolygon{std::move(angles)};
}

IdealPolygon regular_polygon(int n) {
  if (n < 3) throw DomainError("n must be >= 3, got " + std::to_string(n));
  std::vector<double> angles(n);
  for (int k = 0; k < n; ++k) angles[k] = kTwoPi * k / n;
  return IdealPolygon{std::move(angles)};
}

double inradius(int n) {
  if (n < 3) throw DomainError("n must be >= 3, got " + std::to_string(n));
  return std::acosh(1.0 / std::sin(kPi / n));
}

bool contains(const IdealPolygon& P, DiskPoint p) {
  for (int k = 0; k < P.n(); ++k)
    if (!(signed_sinh_distance(p, P.side(k)) > 0.0)) return false;
  return true;
}

OrthoGeodesic orthogeodesic(const IdealPolygon& P, int i, int j) {
  const int n = P.n();
  if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("side index out of range");
  if (i == j || P.adjacent_sides(i, j))
    throw AdjacentSides("orthogeodesics require non-adjacent sides, got " + std::to_string(i) +
                        " and " + std::to_string(j));
  if (i > j) std::swap(i, j);
  OrthoSegment seg = common_perpendicular(P.side(i), P.side(j));
  return OrthoGeodesic{i, j, seg, j - i, n - (j - i)};
}

std::vector<OrthoGeodesic> all_orthogeodesics(const IdealPolygon& P) {
  std::vector<OrthoGeodesic> out;
  const int n = P.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!P.adjacent_sides(i, j)) out.push_back(orthogeodesic(P, i, j));
  return out;
}

namespace {
void check_split(int n, int n1) {
  if (n < 3) throw DomainError("n must be >= 3");
  if (n1 < 2 || n1 > n - 2)
    throw DomainError("split count must satisfy 2 <= n1 <= n-2, got n1 = " + std::to_string(n1));
}
}  // namespace

double regular_ortho_length(int n, int n1) {
  check_split(n, n1);
  // cosh(r_n) = 1 / sin(pi/n); the trirectangle with acute angle n1*pi/n and
  // adjacent side r_n has opposite side ell/2 with cosh(ell/2) = sin * cosh.
  return 2.0 * std::acosh(std::sin(n1 * kPi / n) / std::sin(kPi / n));
}

double regular_tangency_chord_length(int n, int n1) {
  check_split(n, n1);
  // hinge of two inradius segments meeting at angle 2*n1*pi/n
  const double sinh_r = std::cos(kPi / n) / std::sin(kPi / n);
  return 2.0 * std::asinh(std::sin(n1 * kPi / n) * sinh_r);
}

double basmajian_sum(const IdealPolygon& P, DiskPoint p) {
  if (!contains(P, p)) throw DomainError("point is not strictly inside the polygon");
  double sum = 0.0;
  for (int k = 0; k < P.n(); ++k) {
    const double x = distance(p, P.side(k));
    sum += std::asin(std::min(1.0, 1.0 / std::cosh(x)));
  }
  return sum;
}

double max_inradius(const IdealPolygon& P, DiskPoint p) {
  if (!contains(P, p)) throw DomainError("point is not strictly inside the polygon");
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < P.n(); ++k) best = std::min(best, distance(p, P.side(k)));
  return best;
}

bool chords_cross(std::pair<int, int> c1, std::pair<int, int> c2) {
  auto [a, b] = c1;
  auto [c, d] = c2;
  if (a == c || a == d || b == c || b == d) return false;
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

Triangulation make_triangulation(int n, std::vector<std::pair<int, int>> chords) {
  if (n < 3) throw DomainError("triangulation needs n >= 3");
  if (static_cast<int>(chords.size()) != n - 3)
    throw DomainError("a triangulation of the " + std::to_string(n) + "-gon has exactly " +
                      std::to_string(n - 3) + " chords, got " + std::to_string(chords.size()));
  for (auto& ch : chords) {
    if (ch.first > ch.second) std::swap(ch.first, ch.second);
    if (ch.first < 0 || ch.second >= n) throw DomainError("chord vertex out of range");
    const int d = ch.second - ch.first;
    if (d == 0 || d == 1 || d == n - 1)
      throw DomainError("chord (" + std::to_string(ch.first) + "," + std::to_string(ch.second) +
                        ") does not join non-adjacent vertices");
  }
  std::sort(chords.begin(), chords.end());
  for (size_t i = 0; i + 1 < chords.size(); ++i)
    if (chords[i] == chords[i + 1]) throw DomainError("duplicate chord in triangulation");
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j)
      if (chords_cross(chords[i], chords[j]))
        throw DomainError("chords (" + std::to_string(chords[i].first) + "," +
                          std::to_string(chords[i].second) + ") and (" +
                          std::to_string(chords[j].first) + "," + std::to_string(chords[j].second) +
                          ") cross");
  return Triangulation{n, std::move(chords)};
}

bool side_pairs_interleave(int n, std::pair<int, int> p1, std::pair<int, int> p2) {
  auto [a, b] = p1;
  auto [c, d] = p2;
  if (a == c || a == d || b == c || b == d) return false;
  auto between = [&](int x) { return a < x && x < b; };
  (void)n;
  return between(c) != between(d);
}

std::pair<int, int> chord_to_side_pair(int n, std::pair<int, int> chord) {
  int i = (chord.first + n - 1) % n;
  int j = (chord.second + n - 1) % n;
  if (i > j) std::swap(i, j);
  return {i, j};
}

std::pair<int, int> side_pair_to_chord(int n, std::pair<int, int> sides) {
  int a = (sides.first + 1) % n;
  int b = (sides.second + 1) % n;
  if (a > b) std::swap(a, b);
  return {a, b};
}

OrthoDecomposition make_decomposition(const IdealPolygon& P, std::vector<OrthoGeodesic> members) {
  const int n = P.n();
  if (static_cast<int>(members.size()) != n - 3)
    throw InternalConsistencyError("decomposition of an " + std::to_string(n) + "-gon must have " +
                                   std::to_string(n - 3) + " members, got " +
                                   std::to_string(members.size()));
  double max_len = 0.0;
  for (const auto& m : members) max_len = std::max(max_len, m.length());
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      const auto pi = std::make_pair(members[i].i, members[i].j);
      const auto pj = std::make_pair(members[j].i, members[j].j);
      if (pi == pj) throw InternalConsistencyError("duplicate orthogeodesic in decomposition");
      if (side_pairs_interleave(n, pi, pj))
        throw InternalConsistencyError("decomposition members interleave combinatorially");
      if (!(segment_distance(members[i].segment, members[j].segment) > 1e-12))
        throw InternalConsistencyError("decomposition members are not geometrically disjoint");
    }
  }
  return OrthoDecomposition{n, std::move(members), max_len};
}

OrthoDecomposition decomposition_from_triangulation(const IdealPolygon& P,
                                                    const Triangulation& T) {
  if (T.n != P.n()) throw DomainError("triangulation size does not match the polygon");
  std::vector<OrthoGeodesic> members;
  members.reserve(T.chords.size());
  for (const auto& ch : T.chords) {
    const auto [i, j] = chord_to_side_pair(T.n, ch);
    members.push_back(orthogeodesic(P, i, j));
  }
  return make_decomposition(P, std::move(members));
}

double quad_partner_length(double x) {
  if (!(x > 0.0)) throw DomainError("orthogeodesic length must be positive");
  return 2.0 * std::asinh(1.0 / std::sinh(0.5 * x));
}

}  // namespace idealpoly
