#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "idealpoly/errors.hpp"

namespace idealpoly {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Tolerances shared across the library.
inline constexpr double kSepTol = 1e-9;    // ideal-point distinctness, radians
inline constexpr double kNumTol = 1e-10;   // metric assertions
inline constexpr double kMergeTol = 1e-7;  // cut-locus vertex coalescing, hyperbolic distance

/// A point on the boundary circle at infinity, identified by its angle,
/// normalized into [0, 2*pi).
struct IdealPoint {
  double angle = 0.0;

  IdealPoint() = default;
  explicit IdealPoint(double a);

  Complex unit() const { return std::polar(1.0, angle); }
};

/// Angular separation in [0, pi].
double angular_separation(IdealPoint a, IdealPoint b);
/// Two ideal points are considered identical when their separation is <= kSepTol.
bool same_ideal_point(IdealPoint a, IdealPoint b);

/// A point strictly inside the open unit disk.
struct DiskPoint {
  double x = 0.0;
  double y = 0.0;

  DiskPoint() = default;
  DiskPoint(double x, double y);

  Complex c() const { return Complex(x, y); }
  static DiskPoint from(Complex z);
};

/// A complete geodesic, given by its two (distinct) ideal endpoints. Swapping
/// a and b yields the same geodesic; the stored order only fixes a sign
/// convention for signed distances (positive on the left of a -> b).
struct Geodesic {
  IdealPoint a, b;
  Geodesic(IdealPoint a, IdealPoint b);
};

bool same_geodesic(const Geodesic& g1, const Geodesic& g2);
/// Number of shared ideal endpoints (0, 1, or 2), up to kSepTol.
int shared_endpoints(const Geodesic& g1, const Geodesic& g2);
/// True iff the endpoint pairs strictly interleave on the circle, i.e. the
/// geodesics cross at a single interior point.
bool geodesics_cross(const Geodesic& g1, const Geodesic& g2);

/// A finite geodesic segment meeting two geodesics orthogonally at its feet.
struct OrthoSegment {
  DiskPoint foot1, foot2;
  double length = 0.0;
};

/// Orientation-preserving isometry of the disk, z -> (a z + b)/(conj(b) z + conj(a))
/// with |a|^2 - |b|^2 normalized to 1.
class MobiusMap {
 public:
  MobiusMap() : a_(1.0, 0.0), b_(0.0, 0.0) {}
  MobiusMap(Complex a, Complex b);

  Complex apply(Complex z) const;
  DiskPoint operator()(DiskPoint p) const;
  IdealPoint operator()(IdealPoint t) const;
  Geodesic operator()(const Geodesic& g) const;

  MobiusMap inverse() const;
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);  // f after g

  static MobiusMap rotation(double theta);
  /// The map taking the origin to w, |w| < 1.
  static MobiusMap translation(Complex w);

  Complex a() const { return a_; }
  Complex b() const { return b_; }

 private:
  Complex a_, b_;
};

/// Working chart for a geodesic: an isometry carrying it to the real diameter.
/// m is the point of the geodesic closest to the origin, u the unit tangent
/// there (parallel to the chord b - a). The formulas stay finite for every
/// endpoint separation, including the diameter case.
struct GeodesicFrame {
  Complex m;
  Complex u;

  explicit GeodesicFrame(const Geodesic& g);

  Complex to_frame(Complex z) const;
  Complex from_frame(Complex w) const;
  /// sinh of the signed distance from z to the geodesic (left of a -> b positive).
  double signed_sinh(Complex z) const;
  /// Coordinate along the real diameter of the foot of the perpendicular from z.
  double foot_coordinate(Complex z) const;
  /// Point of the geodesic at frame coordinate t in (-1, 1).
  Complex point_at(double t) const { return from_frame(Complex(t, 0.0)); }
};

/// Hyperbolic distance between two interior points,
/// cosh d = 1 + 2|p-q|^2 / ((1-|p|^2)(1-|q|^2)), evaluated as 2 asinh(...)
/// so that small distances keep full relative accuracy.
double distance(DiskPoint p, DiskPoint q);

/// Distance from a point to a complete geodesic.
double distance(DiskPoint p, const Geodesic& g);

/// sinh of the signed distance from p to g; positive on the left of a -> b.
double signed_sinh_distance(DiskPoint p, const Geodesic& g);

/// The point of g realizing the distance to p.
DiskPoint foot(DiskPoint p, const Geodesic& g);

/// The unique segment meeting both geodesics orthogonally. Throws
/// IntersectingGeodesics / AsymptoticGeodesics when no such segment exists.
/// foot1 lies on g1, foot2 on g2.
OrthoSegment common_perpendicular(const Geodesic& g1, const Geodesic& g2);

/// The locus of points equidistant from g1 and g2, itself a geodesic.
/// Defined for disjoint geodesics (perpendicular bisector of their common
/// perpendicular) and for asymptotic ones (a geodesic into the shared
/// ideal point).
Geodesic bisector(const Geodesic& g1, const Geodesic& g2);

/// Point at equal distance from three pairwise-distinct geodesics bounding a
/// common region, found by intersecting two bisectors and polishing with a
/// damped 2-D Newton iteration. Returns the point and the common distance.
std::pair<DiskPoint, double> equidistant_point(const Geodesic& g1, const Geodesic& g2,
                                               const Geodesic& g3);

/// The unique orientation-preserving isometry sending three counterclockwise
/// ideal points to angles 0, 2*pi/3, 4*pi/3.
MobiusMap mobius_normalize(IdealPoint t1, IdealPoint t2, IdealPoint t3);

/// Crossing point of two geodesics, when they cross.
std::optional<DiskPoint> intersection(const Geodesic& g1, const Geodesic& g2);

/// The complete geodesic through two distinct interior points.
Geodesic geodesic_through(DiskPoint p, DiskPoint q);

/// Hyperbolic midpoint of the segment pq.
DiskPoint midpoint(DiskPoint p, DiskPoint q);

/// The geodesic through p (assumed on g) orthogonal to g.
Geodesic perpendicular_at(const Geodesic& g, DiskPoint p);

/// Distance from p to the sub-segment of g between frame coordinates
/// [t_lo, t_hi] (see GeodesicFrame::foot_coordinate).
double point_to_segment(DiskPoint p, const GeodesicFrame& f, double t_lo, double t_hi);

/// Minimum distance between two orthogonal segments. Distance along a
/// geodesic to a convex set is convex, so a golden-section scan over one
/// segment finds the global minimum.
double segment_distance(const OrthoSegment& s1, const OrthoSegment& s2);

}  // namespace idealpoly
