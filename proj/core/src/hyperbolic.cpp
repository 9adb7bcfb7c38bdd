#include "idealpoly/hyperbolic.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace idealpoly {

namespace {

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Angle wrapped into (-pi, pi].
double wrap_pm(double a) {
  double r = std::remainder(a, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

// Is x strictly inside the counterclockwise arc from s to e?
bool in_ccw_arc(double x, double s, double e) {
  return wrap_angle(x - s) < wrap_angle(e - s);
}

}  // namespace

IdealPoint::IdealPoint(double a) {
  if (!std::isfinite(a)) throw DomainError("ideal point angle must be finite");
  angle = wrap_angle(a);
}

double angular_separation(IdealPoint a, IdealPoint b) {
  const double d = wrap_angle(a.angle - b.angle);
  return std::min(d, kTwoPi - d);
}

bool same_ideal_point(IdealPoint a, IdealPoint b) {
  return angular_separation(a, b) <= kSepTol;
}

DiskPoint::DiskPoint(double x, double y) : x(x), y(y) {
  if (!(x * x + y * y < 1.0)) throw DomainError("point is not strictly inside the unit disk");
}

DiskPoint DiskPoint::from(Complex z) { return DiskPoint(z.real(), z.imag()); }

Geodesic::Geodesic(IdealPoint a, IdealPoint b) : a(a), b(b) {
  if (same_ideal_point(a, b)) throw DomainError("geodesic endpoints must be distinct ideal points");
}

bool same_geodesic(const Geodesic& g1, const Geodesic& g2) {
  return (same_ideal_point(g1.a, g2.a) && same_ideal_point(g1.b, g2.b)) ||
         (same_ideal_point(g1.a, g2.b) && same_ideal_point(g1.b, g2.a));
}

int shared_endpoints(const Geodesic& g1, const Geodesic& g2) {
  int c = 0;
  if (same_ideal_point(g1.a, g2.a) || same_ideal_point(g1.a, g2.b)) ++c;
  if (same_ideal_point(g1.b, g2.a) || same_ideal_point(g1.b, g2.b)) ++c;
  return c;
}

bool geodesics_cross(const Geodesic& g1, const Geodesic& g2) {
  if (shared_endpoints(g1, g2) > 0) return false;
  const bool a_in = in_ccw_arc(g1.a.angle, g2.a.angle, g2.b.angle);
  const bool b_in = in_ccw_arc(g1.b.angle, g2.a.angle, g2.b.angle);
  return a_in != b_in;
}

MobiusMap::MobiusMap(Complex a, Complex b) {
  const double det = std::norm(a) - std::norm(b);
  if (!(det > 0.0) || !std::isfinite(det))
    throw DomainError("matrix does not represent an orientation-preserving disk isometry");
  const double s = 1.0 / std::sqrt(det);
  a_ = a * s;
  b_ = b * s;
}

Complex MobiusMap::apply(Complex z) const {
  return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
}

DiskPoint MobiusMap::operator()(DiskPoint p) const { return DiskPoint::from(apply(p.c())); }

IdealPoint MobiusMap::operator()(IdealPoint t) const {
  const Complex e = t.unit();
  const Complex num = a_ * e + b_;
  const Complex den = std::conj(b_) * e + std::conj(a_);
  return IdealPoint(std::arg(num) - std::arg(den));
}

Geodesic MobiusMap::operator()(const Geodesic& g) const {
  return Geodesic((*this)(g.a), (*this)(g.b));
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(std::conj(a_), -b_); }

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
  return MobiusMap(f.a_ * g.a_ + f.b_ * std::conj(g.b_), f.a_ * g.b_ + f.b_ * std::conj(g.a_));
}

MobiusMap MobiusMap::rotation(double theta) {
  return MobiusMap(std::polar(1.0, 0.5 * theta), Complex(0.0, 0.0));
}

MobiusMap MobiusMap::translation(Complex w) {
  if (!(std::norm(w) < 1.0)) throw DomainError("translation target must lie inside the disk");
  return MobiusMap(Complex(1.0, 0.0), w);
}

GeodesicFrame::GeodesicFrame(const Geodesic& g) {
  const Complex ea = g.a.unit();
  const Complex eb = g.b.unit();
  // s = 1 + cos(angle between endpoints); 2 - s = 1 - cos, both nonnegative.
  const double s = 1.0 + ea.real() * eb.real() + ea.imag() * eb.imag();
  const double root2 = std::sqrt(2.0);
  m = (ea + eb) / (root2 * (root2 + std::sqrt(std::max(0.0, 2.0 - s))));
  u = (eb - ea) / std::abs(eb - ea);
}

Complex GeodesicFrame::to_frame(Complex z) const {
  return ((z - m) / (1.0 - std::conj(m) * z)) * std::conj(u);
}

Complex GeodesicFrame::from_frame(Complex w) const {
  const Complex uw = u * w;
  return (uw + m) / (1.0 + std::conj(m) * uw);
}

double GeodesicFrame::signed_sinh(Complex z) const {
  const Complex v = to_frame(z);
  return 2.0 * v.imag() / (1.0 - std::norm(v));
}

double GeodesicFrame::foot_coordinate(Complex z) const {
  const Complex v = to_frame(z);
  const double w = 1.0 + std::norm(v);
  const double x = v.real();
  return 2.0 * x / (w + std::sqrt(std::max(0.0, w * w - 4.0 * x * x)));
}

double distance(DiskPoint p, DiskPoint q) {
  const double pq2 = std::norm(p.c() - q.c());
  const double dp = 1.0 - std::norm(p.c());
  const double dq = 1.0 - std::norm(q.c());
  return 2.0 * std::asinh(std::sqrt(pq2 / (dp * dq)));
}

double signed_sinh_distance(DiskPoint p, const Geodesic& g) {
  return GeodesicFrame(g).signed_sinh(p.c());
}

double distance(DiskPoint p, const Geodesic& g) {
  return std::asinh(std::fabs(signed_sinh_distance(p, g)));
}

DiskPoint foot(DiskPoint p, const Geodesic& g) {
  const GeodesicFrame f(g);
  return DiskPoint::from(f.point_at(f.foot_coordinate(p.c())));
}

OrthoSegment common_perpendicular(const Geodesic& g1, const Geodesic& g2) {
  if (shared_endpoints(g1, g2) > 0)
    throw AsymptoticGeodesics("geodesics share an ideal endpoint; no common perpendicular");
  if (geodesics_cross(g1, g2))
    throw IntersectingGeodesics("geodesics cross; no common perpendicular");

  // Carry g2 to the real diameter. The images of g1's endpoints land on the
  // same open half-circle; the perpendicular has endpoints e^{+-i theta} with
  // cos(theta) = Re(center of the image circle of g1). Half-angle products
  // keep theta and the length accurate even in the nearly-asymptotic regime.
  const GeodesicFrame f2(g2);
  Complex p = f2.to_frame(g1.a.unit());
  Complex q = f2.to_frame(g1.b.unit());
  p /= std::abs(p);
  q /= std::abs(q);
  const double ap = std::fabs(std::arg(p));
  const double aq = std::fabs(std::arg(q));
  const double hd = 0.5 * (std::arg(p) - std::arg(q));  // |hd| < pi/2 for disjoint inputs
  const double chd = std::cos(hd);
  const double s2 = std::sqrt(std::sin(0.5 * ap) * std::sin(0.5 * aq) / chd);  // sin(theta/2)
  const double c2 = std::sqrt(std::cos(0.5 * ap) * std::cos(0.5 * aq) / chd);  // cos(theta/2)
  const double sin_theta = 2.0 * s2 * c2;
  const double cos_theta = (c2 - s2) * (c2 + s2);

  const double t2 = cos_theta / (1.0 + sin_theta);
  const DiskPoint foot2 = DiskPoint::from(f2.point_at(t2));
  const DiskPoint foot1 = foot(foot2, g1);
  const double sinh_len = sin_theta / std::fabs(std::tan(hd));
  return OrthoSegment{foot1, foot2, std::asinh(sinh_len)};
}

Geodesic geodesic_through(DiskPoint p, DiskPoint q) {
  const Complex pc = p.c(), qc = q.c();
  const Complex w = (qc - pc) / (1.0 - std::conj(pc) * qc);
  const double r = std::abs(w);
  if (r == 0.0) throw DomainError("geodesic through two coincident points is undefined");
  const Complex dir = w / r;
  const Complex behind = (-dir + pc) / (1.0 - std::conj(pc) * dir);
  const Complex ahead = (dir + pc) / (1.0 + std::conj(pc) * dir);
  return Geodesic(IdealPoint(std::arg(behind)), IdealPoint(std::arg(ahead)));
}

DiskPoint midpoint(DiskPoint p, DiskPoint q) {
  const Complex pc = p.c(), qc = q.c();
  const Complex w = (qc - pc) / (1.0 - std::conj(pc) * qc);
  const double r = std::abs(w);
  if (r == 0.0) return p;
  const double rm = std::tanh(0.5 * std::atanh(r));
  const Complex wm = w * (rm / r);
  return DiskPoint::from((wm + pc) / (1.0 + std::conj(pc) * wm));
}

Geodesic perpendicular_at(const Geodesic& g, DiskPoint p) {
  const GeodesicFrame f(g);
  const double t = f.to_frame(p.c()).real();
  const double theta = 0.5 * kPi - 2.0 * std::atan(t);
  const Complex e1 = f.from_frame(std::polar(1.0, theta));
  const Complex e2 = f.from_frame(std::polar(1.0, -theta));
  return Geodesic(IdealPoint(std::arg(e1)), IdealPoint(std::arg(e2)));
}

Geodesic bisector(const Geodesic& g1, const Geodesic& g2) {
  if (same_geodesic(g1, g2)) throw DomainError("bisector of identical geodesics is undefined");
  if (geodesics_cross(g1, g2))
    throw IntersectingGeodesics("bisector requires disjoint or asymptotic geodesics");

  if (shared_endpoints(g1, g2) == 1) {
    // Asymptotic case. With the shared endpoint rotated to -1, the other
    // endpoints carry the parabolic-invariant boundary coordinate tan(phi/2);
    // the equidistant locus ends at the coordinate midpoint.
    IdealPoint shared = g1.a, o1 = g1.b;
    if (same_ideal_point(g1.b, g2.a) || same_ideal_point(g1.b, g2.b)) {
      shared = g1.b;
      o1 = g1.a;
    }
    const IdealPoint o2 = same_ideal_point(g2.a, shared) ? g2.b : g2.a;
    const double psi = shared.angle;
    const double x1 = std::tan(0.5 * wrap_pm(o1.angle + kPi - psi));
    const double x2 = std::tan(0.5 * wrap_pm(o2.angle + kPi - psi));
    const double mid_angle = 2.0 * std::atan(0.5 * (x1 + x2));
    return Geodesic(shared, IdealPoint(mid_angle + psi - kPi));
  }

  const OrthoSegment seg = common_perpendicular(g1, g2);
  const Geodesic carrier = geodesic_through(seg.foot1, seg.foot2);
  return perpendicular_at(carrier, midpoint(seg.foot1, seg.foot2));
}

std::optional<DiskPoint> intersection(const Geodesic& g1, const Geodesic& g2) {
  if (!geodesics_cross(g1, g2)) return std::nullopt;
  const GeodesicFrame f(g1);
  Complex p = f.to_frame(g2.a.unit());
  Complex q = f.to_frame(g2.b.unit());
  p /= std::abs(p);
  q /= std::abs(q);
  const double s = 1.0 + p.real() * q.real() + p.imag() * q.imag();
  if (s < 1e-15) {
    // Image of g2 is itself a diameter; the crossing is at the frame origin.
    return DiskPoint::from(f.point_at(0.0));
  }
  const Complex c = (p + q) / s;
  const double cr = c.real();
  const double disc = cr * cr - 1.0;
  if (disc <= 0.0) return std::nullopt;  // numerically tangent
  const double t = (cr >= 0.0 ? 1.0 : -1.0) / (std::fabs(cr) + std::sqrt(disc));
  return DiskPoint::from(f.point_at(t));
}

std::pair<DiskPoint, double> equidistant_point(const Geodesic& g1, const Geodesic& g2,
                                               const Geodesic& g3) {
  if (same_geodesic(g1, g2) || same_geodesic(g1, g3) || same_geodesic(g2, g3))
    throw DomainError("equidistant point requires three pairwise-distinct geodesics");

  std::optional<DiskPoint> start;
  try {
    start = intersection(bisector(g1, g2), bisector(g1, g3));
    if (!start) start = intersection(bisector(g1, g2), bisector(g2, g3));
    if (!start) start = intersection(bisector(g1, g3), bisector(g2, g3));
  } catch (const Error&) {
    throw NoEquidistantPoint("bisector construction failed for the given triple");
  }
  if (!start) throw NoEquidistantPoint("bisectors of the triple do not intersect");

  const GeodesicFrame f1(g1), f2(g2), f3(g3);
  Complex z = start->c();
  // Smooth signed distances, sign-fixed so all three are positive near the start.
  const double e1 = f1.signed_sinh(z) >= 0 ? 1.0 : -1.0;
  const double e2 = f2.signed_sinh(z) >= 0 ? 1.0 : -1.0;
  const double e3 = f3.signed_sinh(z) >= 0 ? 1.0 : -1.0;
  auto dists = [&](Complex w) -> std::array<double, 3> {
    return {e1 * std::asinh(f1.signed_sinh(w)), e2 * std::asinh(f2.signed_sinh(w)),
            e3 * std::asinh(f3.signed_sinh(w))};
  };
  auto residual = [&](Complex w) -> std::array<double, 2> {
    const auto d = dists(w);
    return {d[0] - d[1], d[0] - d[2]};
  };
  auto inf_norm = [](const std::array<double, 2>& r) {
    return std::max(std::fabs(r[0]), std::fabs(r[1]));
  };

  const double h = 1e-7;
  std::array<double, 2> r = residual(z);
  double rn = inf_norm(r);
  bool converged = rn < 1e-12;
  for (int it = 0; it < 50 && !converged; ++it) {
    if (std::norm(z) + 4.0 * h >= 1.0)
      throw NoEquidistantPoint("iterate too close to the boundary circle");
    const auto rxp = residual(z + Complex(h, 0));
    const auto rxm = residual(z - Complex(h, 0));
    const auto ryp = residual(z + Complex(0, h));
    const auto rym = residual(z - Complex(0, h));
    const double j00 = (rxp[0] - rxm[0]) / (2 * h), j01 = (ryp[0] - rym[0]) / (2 * h);
    const double j10 = (rxp[1] - rxm[1]) / (2 * h), j11 = (ryp[1] - rym[1]) / (2 * h);
    const double det = j00 * j11 - j01 * j10;
    if (!(std::fabs(det) > 1e-300)) throw NoEquidistantPoint("singular Jacobian in Newton solve");
    const double dx = -(r[0] * j11 - r[1] * j01) / det;
    const double dy = -(j00 * r[1] - j10 * r[0]) / det;
    Complex step(dx, dy);

    double lambda = 1.0;
    Complex znew = z + step;
    std::array<double, 2> rnew{};
    double rnnew = 0.0;
    bool ok = false;
    for (int halving = 0; halving < 30; ++halving) {
      znew = z + lambda * step;
      if (std::norm(znew) < 1.0) {
        rnew = residual(znew);
        rnnew = inf_norm(rnew);
        if (rnnew < rn) {
          ok = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!ok) break;  // stalled
    z = znew;
    r = rnew;
    rn = rnnew;
    converged = rn < 1e-12;
  }
  if (!converged) throw NoEquidistantPoint("Newton iteration did not reach the residual target");

  const auto d = dists(z);
  const double dist = (d[0] + d[1] + d[2]) / 3.0;
  if (!(dist > 0.0)) throw NoEquidistantPoint("equidistant point degenerated onto a geodesic");
  return {DiskPoint::from(z), dist};
}

MobiusMap mobius_normalize(IdealPoint t1, IdealPoint t2, IdealPoint t3) {
  if (same_ideal_point(t1, t2) || same_ideal_point(t1, t3) || same_ideal_point(t2, t3))
    throw DomainError("normalization requires three distinct ideal points");
  const double d12 = wrap_angle(t2.angle - t1.angle);
  const double d23 = wrap_angle(t3.angle - t2.angle);
  if (!(d12 + d23 < kTwoPi))
    throw DomainError("normalization requires counterclockwise ordered points");

  // Compose the maps sending each triple to (0, 1, infinity); the quotient
  // preserves the disk and is projected onto its su(1,1) representative.
  auto to_std = [](Complex z1, Complex z2, Complex z3) -> std::array<Complex, 4> {
    return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
  };
  const auto F = to_std(t1.unit(), t2.unit(), t3.unit());
  const auto G = to_std(Complex(1, 0), std::polar(1.0, kTwoPi / 3), std::polar(1.0, 2 * kTwoPi / 3));
  // T = adj(G) * F
  Complex m00 = G[3] * F[0] - G[1] * F[2];
  Complex m01 = G[3] * F[1] - G[1] * F[3];
  Complex m10 = -G[2] * F[0] + G[0] * F[2];
  Complex m11 = -G[2] * F[1] + G[0] * F[3];
  const Complex det = m00 * m11 - m01 * m10;
  const Complex scale = 1.0 / std::sqrt(det);
  m00 *= scale;
  m01 *= scale;
  m10 *= scale;
  m11 *= scale;
  const Complex a = 0.5 * (m00 + std::conj(m11));
  const Complex b = 0.5 * (m01 + std::conj(m10));
  return MobiusMap(a, b);
}

double point_to_segment(DiskPoint p, const GeodesicFrame& f, double t_lo, double t_hi) {
  const double t = std::clamp(f.foot_coordinate(p.c()), t_lo, t_hi);
  return distance(p, DiskPoint::from(f.point_at(t)));
}

double segment_distance(const OrthoSegment& s1, const OrthoSegment& s2) {
  const Geodesic c1 = geodesic_through(s1.foot1, s1.foot2);
  const Geodesic c2 = geodesic_through(s2.foot1, s2.foot2);
  const GeodesicFrame f1(c1), f2(c2);
  double a = f1.to_frame(s1.foot1.c()).real();
  double b = f1.to_frame(s1.foot2.c()).real();
  if (a > b) std::swap(a, b);
  double lo2 = f2.to_frame(s2.foot1.c()).real();
  double hi2 = f2.to_frame(s2.foot2.c()).real();
  if (lo2 > hi2) std::swap(lo2, hi2);

  auto eval = [&](double t) {
    return point_to_segment(DiskPoint::from(f1.point_at(t)), f2, lo2, hi2);
  };
  // Golden-section: the objective is convex in the arclength parameter.
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double v1 = eval(x1), v2 = eval(x2);
  for (int i = 0; i < 70; ++i) {
    if (v1 < v2) {
      b = x2;
      x2 = x1;
      v2 = v1;
      x1 = b - gr * (b - a);
      v1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      v1 = v2;
      x2 = a + gr * (b - a);
      v2 = eval(x2);
    }
  }
  return std::min(v1, v2);
}

}  // namespace idealpoly
