#pragma once

#include <cstdint>
#include <vector>

#include "idealpoly/polygon.hpp"

namespace idealpoly {

/// A polygon in standard position: vertices 0, 1, 2 fixed at angles
/// 0, 2*pi/3, 4*pi/3 and the remaining n-3 angles free inside (4*pi/3, 2*pi).
struct ModuliSample {
  IdealPolygon polygon;
  std::uint64_t seed = 0;
  int n = 0;
};

/// The n-3 orthogeodesic lengths of a decomposition, aligned with the chord
/// order of the triangulation. They determine the polygon uniquely.
struct MarkedLengths {
  Triangulation triangulation;
  std::vector<double> lengths;
};

/// Moves P to standard position by the isometry taking its first three
/// vertices to 0, 2*pi/3, 4*pi/3. All orthogeodesic lengths are preserved.
IdealPolygon normalize(const IdealPolygon& P);

/// Draws the n-3 free angles as sorted uniforms in (4*pi/3, 2*pi), rejecting
/// draws with any gap <= 10 * kSepTol. Deterministic per seed.
ModuliSample sample_polygon(int n, std::uint64_t seed);

MarkedLengths marked_lengths(const IdealPolygon& P, const Triangulation& T);

/// Solves for the standard-position polygon whose decomposition lengths along
/// M's triangulation equal M's lengths: damped Newton on the free angles
/// (log-gap parametrized so every iterate is a valid polygon), initialized at
/// the normalized regular polygon. Throws ReconstructionFailed on
/// non-convergence, carrying the best residual reached.
IdealPolygon reconstruct(const MarkedLengths& M);

/// Sorted lengths of all n(n-3)/2 orthogeodesics: an isometry invariant.
std::vector<double> spectrum(const IdealPolygon& P);

/// Spectra agree within tol and some cyclic relabeling of the vertices aligns
/// every orthogeodesic length.
bool isometric(const IdealPolygon& P, const IdealPolygon& Q, double tol = 1e-8);

namespace detail {
/// Residual of the reconstruction solve at free-gap parameters u (see
/// reconstruct), exposed so tests can check the Jacobian independently.
std::vector<double> reconstruction_residual(const MarkedLengths& M, const std::vector<double>& u);
/// The Jacobian used by reconstruct (central differences, step 1e-7).
std::vector<std::vector<double>> reconstruction_jacobian(const MarkedLengths& M,
                                                         const std::vector<double>& u);
/// Free-gap parameters of a standard-position polygon.
std::vector<double> gap_parameters(const IdealPolygon& P);
}  // namespace detail

}  // namespace idealpoly
