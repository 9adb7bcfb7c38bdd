#pragma once

#include <string>

#include "idealpoly/polygon.hpp"

namespace idealpoly {

/// Drawable layers, combinable as a bitmask.
enum RenderLayer : unsigned {
  kLayerPolygon = 1u,
  kLayerDecomposition = 2u,
  kLayerCutLocus = 4u,
  kLayerInscribedDisk = 8u,
};

/// Parses a comma-separated layer list: polygon, decomposition, cutlocus,
/// inscribed-disk.
unsigned parse_layers(const std::string& csv);

/// Euclidean circle representing the hyperbolic circle of radius rho around
/// center (hyperbolic circles in the disk model are Euclidean circles).
struct EuclideanCircle {
  double cx = 0.0, cy = 0.0, r = 0.0;
};
EuclideanCircle euclidean_circle(DiskPoint center, double rho);

/// Renders the polygon to a 512 x 512 SVG. Geodesics become circular arcs
/// orthogonal to the boundary circle (straight lines for diameters); the
/// decomposition layer draws short_decomposition (absent for n = 3), the
/// cut-locus layer the tree edges, and the inscribed-disk layer the largest
/// embedded disk at the deepest cut vertex. Output is deterministic.
std::string render_svg(const IdealPolygon& P, unsigned layers);

}  // namespace idealpoly
