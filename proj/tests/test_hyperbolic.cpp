#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "idealpoly/hyperbolic.hpp"
#include "idealpoly/polygon.hpp"
#include "test_util.hpp"

using namespace idealpoly;
using namespace testutil;

TEST_CASE("point distance: identity and radial value") {
  CHECK(distance(DiskPoint(0, 0), DiskPoint(0, 0)) == 0.0);
  const double t = std::tanh(0.5);
  CHECK(distance(DiskPoint(0, 0), DiskPoint(t, 0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("point distance agrees with path-length quadrature") {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = random_disk_point(rng);
    const DiskPoint q = random_disk_point(rng);
    if (std::abs(p.c() - q.c()) < 1e-6) continue;
    worst = std::max(worst, std::fabs(distance(p, q) - path_length_oracle(p, q)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("point distance: symmetry and triangle inequality") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = random_disk_point(rng), q = random_disk_point(rng),
                    r = random_disk_point(rng);
    CHECK(distance(p, q) == doctest::Approx(distance(q, p)).epsilon(1e-14));
    CHECK(distance(p, r) <= distance(p, q) + distance(q, r) + 1e-12);
  }
}

TEST_CASE("disk point validation") {
  CHECK_THROWS_AS(DiskPoint(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(DiskPoint(0.8, 0.7), DomainError);
  CHECK_THROWS_AS(Geodesic(IdealPoint(1.0), IdealPoint(1.0 + 1e-12)), DomainError);
}

TEST_CASE("distance to geodesic: point on it, center of regular polygon") {
  const Geodesic g(IdealPoint(0.3), IdealPoint(2.1));
  const GeodesicFrame f(g);
  const DiskPoint on = DiskPoint::from(f.point_at(0.37));
  CHECK(distance(on, g) < 1e-14);

  for (int n : {3, 4, 5, 6, 12, 30}) {
    const IdealPolygon P = regular_polygon(n);
    const DiskPoint center(0, 0);
    for (int k = 0; k < n; ++k)
      CHECK(distance(center, P.side(k)) == doctest::Approx(inradius(n)).epsilon(1e-12));
  }
}

TEST_CASE("distance to geodesic matches 1-D minimization oracle") {
  std::mt19937_64 rng(13);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = random_disk_point(rng);
    const Geodesic g = random_geodesic(rng);
    worst = std::max(worst, std::fabs(distance(p, g) - point_geodesic_oracle(p, g)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("foot of perpendicular") {
  const Geodesic g(IdealPoint(5.1), IdealPoint(1.2));
  const GeodesicFrame f(g);
  const DiskPoint on = DiskPoint::from(f.point_at(-0.23));
  const DiskPoint ft = foot(on, g);
  CHECK(std::abs(ft.c() - on.c()) < 1e-13);  // a point of g is its own foot

  // center of a regular polygon: the foot is the side's deepest point
  const IdealPolygon P = regular_polygon(6);
  const DiskPoint f0 = foot(DiskPoint(0, 0), P.side(0));
  const double mid_angle = 0.5 * (P.angles[0] + P.angles[1]);
  CHECK(std::arg(f0.c()) == doctest::Approx(mid_angle).epsilon(1e-12));

  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const DiskPoint p = random_disk_point(rng);
    const Geodesic gg = random_geodesic(rng);
    const DiskPoint fp = foot(p, gg);
    if (distance(p, gg) < 1e-6) continue;
    CHECK(distance(fp, gg) < 1e-10);                                  // foot lies on g
    CHECK(distance(p, fp) == doctest::Approx(distance(p, gg)).epsilon(1e-10));
    CHECK(std::fabs(angle_between_at(fp, p, gg) - 0.5 * kPi) < 1e-8);  // meets orthogonally
  }
}

TEST_CASE("common perpendicular: classical values") {
  const IdealPolygon P4 = regular_polygon(4);
  const OrthoSegment s4 = common_perpendicular(P4.side(0), P4.side(2));
  CHECK(s4.length == doctest::Approx(2.0 * std::asinh(1.0)).epsilon(1e-12));
  CHECK(s4.length == doctest::Approx(1.7627471740).epsilon(1e-9));

  const IdealPolygon P6 = regular_polygon(6);
  const OrthoSegment s6 = common_perpendicular(P6.side(0), P6.side(3));
  CHECK(s6.length == doctest::Approx(2.0 * std::acosh(2.0)).epsilon(1e-12));
  CHECK(s6.length == doctest::Approx(2.6339157938).epsilon(1e-9));
}

TEST_CASE("common perpendicular: errors") {
  const IdealPolygon P6 = regular_polygon(6);
  CHECK_THROWS_AS(common_perpendicular(P6.side(0), P6.side(1)), AsymptoticGeodesics);
  const Geodesic g1(IdealPoint(0.0), IdealPoint(kPi));
  const Geodesic g2(IdealPoint(0.5 * kPi), IdealPoint(1.5 * kPi));
  CHECK_THROWS_AS(common_perpendicular(g1, g2), IntersectingGeodesics);
}

TEST_CASE("common perpendicular matches 2-D minimization oracle") {
  std::mt19937_64 rng(15);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const auto [g1, g2] = random_disjoint_geodesics(rng);
    const OrthoSegment seg = common_perpendicular(g1, g2);
    worst = std::max(worst, std::fabs(seg.length - geodesic_pair_oracle(g1, g2)));
    CHECK(distance(seg.foot1, g1) < 1e-10);
    CHECK(distance(seg.foot2, g2) < 1e-10);
    CHECK(std::fabs(distance(seg.foot1, seg.foot2) - seg.length) < 1e-10);
    if (seg.length > 1e-5) {
      CHECK(std::fabs(angle_between_at(seg.foot1, seg.foot2, g1) - 0.5 * kPi) < 1e-7);
      CHECK(std::fabs(angle_between_at(seg.foot2, seg.foot1, g2) - 0.5 * kPi) < 1e-7);
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("bisector: symmetric examples") {
  // two sides of the regular hexagon swapped by reflection across a diameter
  const IdealPolygon P6 = regular_polygon(6);
  const Geodesic b = bisector(P6.side(1), P6.side(4));
  const double e1 = std::min(angular_separation(b.a, IdealPoint(0.0)),
                             angular_separation(b.a, IdealPoint(kPi)));
  const double e2 = std::min(angular_separation(b.b, IdealPoint(0.0)),
                             angular_separation(b.b, IdealPoint(kPi)));
  CHECK(e1 < 1e-9);
  CHECK(e2 < 1e-9);

  // adjacent sides of the regular 4-gon: through the shared vertex and the center
  const IdealPolygon P4 = regular_polygon(4);
  const Geodesic ba = bisector(P4.side(0), P4.side(1));
  const bool through_shared = same_ideal_point(ba.a, IdealPoint(0.5 * kPi)) ||
                              same_ideal_point(ba.b, IdealPoint(0.5 * kPi));
  CHECK(through_shared);
  CHECK(angular_separation(ba.a, ba.b) == doctest::Approx(kPi).epsilon(1e-12));  // a diameter
}

TEST_CASE("bisector: sampled points equidistant, random pairs") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 200; ++i) {
    const auto [g1, g2] = random_disjoint_geodesics(rng);
    const Geodesic b = bisector(g1, g2);
    const GeodesicFrame f(b);
    for (int s = 0; s < 20; ++s) {
      const DiskPoint p = DiskPoint::from(f.point_at(uniform(rng, -0.95, 0.95)));
      CHECK(std::fabs(distance(p, g1) - distance(p, g2)) < 1e-9);
    }
  }
}

TEST_CASE("bisector: asymptotic pairs stay equidistant") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const double shared = uniform(rng, 0.0, kTwoPi);
    const double o1 = shared + uniform(rng, 0.2, 3.0);
    const double o2 = shared + uniform(rng, 0.2, 3.0);
    if (std::fabs(o1 - o2) < 1e-3) continue;
    const Geodesic g1{IdealPoint{shared}, IdealPoint{o1}};
    const Geodesic g2{IdealPoint{shared}, IdealPoint{o2}};
    const Geodesic b = bisector(g1, g2);
    CHECK((same_ideal_point(b.a, IdealPoint(shared)) || same_ideal_point(b.b, IdealPoint(shared))));
    const GeodesicFrame f(b);
    for (int s = 0; s < 20; ++s) {
      const DiskPoint p = DiskPoint::from(f.point_at(uniform(rng, -0.9, 0.9)));
      CHECK(std::fabs(distance(p, g1) - distance(p, g2)) < 1e-9);
    }
  }
  CHECK_THROWS_AS(bisector(Geodesic(IdealPoint(0), IdealPoint(1)), Geodesic(IdealPoint(0), IdealPoint(1))),
                  DomainError);
}

TEST_CASE("equidistant point: symmetric cases and residuals") {
  const IdealPolygon P6 = regular_polygon(6);
  auto [c6, d6] = equidistant_point(P6.side(0), P6.side(2), P6.side(4));
  CHECK(std::abs(c6.c()) < 1e-10);
  CHECK(d6 == doctest::Approx(inradius(6)).epsilon(1e-12));

  const IdealPolygon P3 = regular_polygon(3);
  auto [c3, d3] = equidistant_point(P3.side(0), P3.side(1), P3.side(2));
  CHECK(std::abs(c3.c()) < 1e-10);
  CHECK(d3 == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-12));
  CHECK(d3 == doctest::Approx(std::acosh(2.0 / std::sqrt(3.0))).epsilon(1e-12));

  std::mt19937_64 rng(18);
  int found = 0;
  for (int i = 0; i < 3000 && found < 200; ++i) {
    const IdealPolygon P = random_polygon(5 + static_cast<int>(rng() % 5), rng());
    const int n = P.n();
    const int a = static_cast<int>(rng() % n);
    const int b = (a + 1 + static_cast<int>(rng() % (n - 2))) % n;
    const int c = (b + 1 + static_cast<int>(rng() % (n - 2))) % n;
    if (a == b || b == c || a == c) continue;
    try {
      auto [p, d] = equidistant_point(P.side(a), P.side(b), P.side(c));
      ++found;
      CHECK(std::fabs(distance(p, P.side(a)) - d) < 1e-10);
      CHECK(std::fabs(distance(p, P.side(b)) - d) < 1e-10);
      CHECK(std::fabs(distance(p, P.side(c)) - d) < 1e-10);
    } catch (const NoEquidistantPoint&) {
      // some triples bound no common region; that is a legitimate outcome
    }
  }
  CHECK(found >= 200);
}

TEST_CASE("mobius normalization: fixed points and group laws") {
  const MobiusMap id = mobius_normalize(IdealPoint(0), IdealPoint(kTwoPi / 3), IdealPoint(2 * kTwoPi / 3));
  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    const DiskPoint p = random_disk_point(rng);
    CHECK(std::abs(id(p).c() - p.c()) < 1e-12);
  }

  for (int i = 0; i < 200; ++i) {
    double a = uniform(rng, 0.0, kTwoPi);
    double b = a + uniform(rng, 0.05, 2.5);
    double c = b + uniform(rng, 0.05, 2.5);
    const MobiusMap m = mobius_normalize(IdealPoint(a), IdealPoint(b), IdealPoint(c));
    CHECK(angular_separation(m(IdealPoint(a)), IdealPoint(0)) < 1e-12);
    CHECK(angular_separation(m(IdealPoint(b)), IdealPoint(kTwoPi / 3)) < 1e-12);
    CHECK(angular_separation(m(IdealPoint(c)), IdealPoint(2 * kTwoPi / 3)) < 1e-12);
  }

  // map composed with its inverse is the identity
  for (int i = 0; i < 100; ++i) {
    const MobiusMap m = random_mobius(rng);
    const MobiusMap mi = m.inverse();
    const DiskPoint p = random_disk_point(rng);
    CHECK(std::abs(mi(m(p)).c() - p.c()) < 1e-10);
    CHECK(std::abs((m * mi)(p).c() - p.c()) < 1e-10);
  }

  CHECK_THROWS_AS(mobius_normalize(IdealPoint(0), IdealPoint(0), IdealPoint(1)), DomainError);
  CHECK_THROWS_AS(mobius_normalize(IdealPoint(0), IdealPoint(4), IdealPoint(2)), DomainError);
}

TEST_CASE("mobius maps are isometries") {
  std::mt19937_64 rng(20);
  for (int i = 0; i < 300; ++i) {
    const MobiusMap m = random_mobius(rng);
    const DiskPoint p = random_disk_point(rng), q = random_disk_point(rng);
    CHECK(std::fabs(distance(m(p), m(q)) - distance(p, q)) < 1e-10);
  }
}

TEST_CASE("common perpendicular length is isometry invariant") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto [g1, g2] = random_disjoint_geodesics(rng);
    const MobiusMap m = random_mobius(rng);
    const double l1 = common_perpendicular(g1, g2).length;
    const double l2 = common_perpendicular(m(g1), m(g2)).length;
    CHECK(std::fabs(l1 - l2) < 1e-10);
  }
}

TEST_CASE("geodesic crossing predicate and intersection point") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const Geodesic g1 = random_geodesic(rng), g2 = random_geodesic(rng);
    if (shared_endpoints(g1, g2) > 0) continue;
    const auto x = intersection(g1, g2);
    CHECK(x.has_value() == geodesics_cross(g1, g2));
    if (x) {
      CHECK(distance(*x, g1) < 1e-9);
      CHECK(distance(*x, g2) < 1e-9);
    }
  }
}

TEST_CASE("midpoint and geodesic through points") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const DiskPoint p = random_disk_point(rng), q = random_disk_point(rng);
    if (std::abs(p.c() - q.c()) < 1e-6) continue;
    const DiskPoint m = midpoint(p, q);
    CHECK(std::fabs(distance(p, m) - distance(q, m)) < 1e-11);
    CHECK(std::fabs(distance(p, m) + distance(m, q) - distance(p, q)) < 1e-11);
    const Geodesic g = geodesic_through(p, q);
    CHECK(distance(p, g) < 1e-10);
    CHECK(distance(q, g) < 1e-10);
    CHECK(distance(m, g) < 1e-10);
  }
}

TEST_CASE("segment distance: crossing segments are at distance zero") {
  // two diameters crossing at the origin, restricted to crossing sub-segments
  const OrthoSegment s1{DiskPoint(-0.5, 0), DiskPoint(0.5, 0), 0};
  const OrthoSegment s2{DiskPoint(0, -0.5), DiskPoint(0, 0.5), 0};
  CHECK(segment_distance(s1, s2) < 1e-10);
  // far apart sub-segments of the same pair of carriers
  const OrthoSegment s3{DiskPoint(0.6, 0), DiskPoint(0.9, 0), 0};
  const OrthoSegment s4{DiskPoint(0, 0.6), DiskPoint(0, 0.9), 0};
  const double expect = distance(DiskPoint(0.6, 0), DiskPoint(0, 0.6));
  CHECK(segment_distance(s3, s4) == doctest::Approx(expect).epsilon(1e-9));
}
