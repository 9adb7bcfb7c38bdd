#include "idealpoly/render.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <vector>

#include "idealpoly/cutlocus.hpp"
#include "idealpoly/decompose.hpp"

namespace idealpoly {

namespace {

constexpr double kView = 512.0;
constexpr double kCx = 256.0, kCy = 256.0, kScale = 250.0;

struct Px {
  double x, y;
};

Px to_px(Complex z) { return Px{kCx + kScale * z.real(), kCy - kScale * z.imag()}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  // avoid the two representations of zero
  if (std::strcmp(buf, "-0.0000") == 0) return "0.0000";
  return buf;
}

// One SVG path element along the geodesic carrying z1 and z2 (both on it;
// either may lie on the boundary circle). Diameters become straight lines.
std::string geodesic_path(const Geodesic& carrier, Complex z1, Complex z2,
                          const std::string& cls, const std::string& stroke) {
  const Complex ea = carrier.a.unit(), eb = carrier.b.unit();
  const double sep = angular_separation(carrier.a, carrier.b);
  const Px p1 = to_px(z1), p2 = to_px(z2);
  std::ostringstream out;
  if (std::fabs(sep - kPi) < 1e-9) {
    out << "<line class=\"" << cls << "\" x1=\"" << num(p1.x) << "\" y1=\"" << num(p1.y)
        << "\" x2=\"" << num(p2.x) << "\" y2=\"" << num(p2.y) << "\" stroke=\"" << stroke
        << "\" fill=\"none\"/>";
    return out.str();
  }
  const double s = 1.0 + ea.real() * eb.real() + ea.imag() * eb.imag();
  const Complex c = (ea + eb) / s;
  const double r = std::sqrt((2.0 - s) / s);
  const Px cpx = to_px(c);
  const double a1 = std::atan2(p1.y - cpx.y, p1.x - cpx.x);
  const double a2 = std::atan2(p2.y - cpx.y, p2.x - cpx.x);
  const double delta = std::remainder(a2 - a1, kTwoPi);
  const int sweep = delta > 0.0 ? 1 : 0;  // positive-angle direction in pixel coords
  out << "<path class=\"" << cls << "\" d=\"M " << num(p1.x) << " " << num(p1.y) << " A "
      << num(r * kScale) << " " << num(r * kScale) << " 0 0 " << sweep << " " << num(p2.x) << " "
      << num(p2.y) << "\" stroke=\"" << stroke << "\" fill=\"none\"/>";
  return out.str();
}

}  // namespace

unsigned parse_layers(const std::string& csv) {
  unsigned layers = 0;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "polygon")
      layers |= kLayerPolygon;
    else if (item == "decomposition")
      layers |= kLayerDecomposition;
    else if (item == "cutlocus")
      layers |= kLayerCutLocus;
    else if (item == "inscribed-disk")
      layers |= kLayerInscribedDisk;
    else if (!item.empty())
      throw DomainError("unknown render layer '" + item + "'");
  }
  if (layers == 0) throw DomainError("no render layers selected");
  return layers;
}

EuclideanCircle euclidean_circle(DiskPoint center, double rho) {
  if (!(rho > 0.0)) throw DomainError("circle radius must be positive");
  const double k = std::tanh(0.5 * rho);
  const double p2 = std::norm(center.c());
  const double denom = 1.0 - k * k * p2;
  return EuclideanCircle{center.x * (1.0 - k * k) / denom, center.y * (1.0 - k * k) / denom,
                         k * (1.0 - p2) / denom};
}

std::string render_svg(const IdealPolygon& P, unsigned layers) {
  const int n = P.n();
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
         "viewBox=\"0 0 512 512\">\n";
  svg << "<circle class=\"boundary\" cx=\"" << num(kCx) << "\" cy=\"" << num(kCy) << "\" r=\""
      << num(kScale) << "\" stroke=\"#202020\" fill=\"none\"/>\n";

  // Build the tree at most once; two layers use it.
  const bool need_tree = (layers & kLayerCutLocus) || (layers & kLayerInscribedDisk);
  std::vector<CutLocusTree> tree;
  if (need_tree) tree.push_back(build_cut_locus(P));

  if (layers & kLayerPolygon) {
    for (int k = 0; k < n; ++k) {
      const Geodesic g = P.side(k);
      svg << geodesic_path(g, g.a.unit(), g.b.unit(), "side", "#1f4e8c") << "\n";
    }
  }

  if (layers & kLayerCutLocus) {
    for (const auto& e : tree.front().edges) {
      auto end_point = [&](const CutEdge::End& end) -> Complex {
        if (end.kind == CutEdge::End::Vertex) return tree.front().vertices[end.index].location.c();
        return P.vertex(end.index).unit();
      };
      svg << geodesic_path(e.carrier, end_point(e.end1), end_point(e.end2), "cutlocus-edge",
                           "#999999")
          << "\n";
    }
  }

  if ((layers & kLayerDecomposition) && n >= 4) {
    const OrthoDecomposition D = short_decomposition(P);
    for (const auto& m : D.members) {
      const Geodesic carrier = geodesic_through(m.segment.foot1, m.segment.foot2);
      svg << geodesic_path(carrier, m.segment.foot1.c(), m.segment.foot2.c(), "ortho", "#c0392b")
          << "\n";
    }
  }

  if (layers & kLayerInscribedDisk) {
    const CutVertex* deepest = &tree.front().vertices.front();
    for (const auto& v : tree.front().vertices)
      if (v.distance > deepest->distance) deepest = &v;
    const EuclideanCircle c = euclidean_circle(deepest->location, deepest->distance);
    const Px cp = to_px(Complex(c.cx, c.cy));
    svg << "<circle class=\"incircle\" cx=\"" << num(cp.x) << "\" cy=\"" << num(cp.y) << "\" r=\""
        << num(c.r * kScale) << "\" stroke=\"#2e8b57\" fill=\"none\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace idealpoly
