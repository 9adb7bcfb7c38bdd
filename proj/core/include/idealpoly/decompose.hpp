#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "idealpoly/cutlocus.hpp"
#include "idealpoly/polygon.hpp"

namespace idealpoly {

/// Bounds on O_n, the smallest constant such that every ideal n-gon admits an
/// orthogeodesic decomposition with all lengths <= O_n.
struct BoundPair {
  int n = 0;
  double lower = 0.0;
  double upper = 0.0;
};

/// Upper bound 2 arccosh(1 / sin(pi/n)) = 2 r_n, realized constructively by
/// short_decomposition.
double o_n_upper(int n);

/// Lower bound from the regular polygon: every decomposition of it contains an
/// orthogeodesic splitting at least n/3 vertices on both sides, hence of
/// length >= regular_ortho_length(n, ceil(n/3)).
double o_n_lower(int n);

/// The chord-form expression 2 asinh(c * cot(pi/n)) for a general constant c.
/// The discrepancy report evaluates it at c = 3/2 (which exceeds o_n_upper
/// already at n = 6) and at c = sin(pi/3) = sqrt(3)/2 (which does not), and
/// compares both against the orthogeodesic-based o_n_lower.
double o_n_lower_chord_form(int n, double c);

BoundPair theorem_bounds(int n);

/// A short orthogeodesic decomposition with every length <= 2 r_n, built from
/// the cut locus: one orthogeodesic per internal edge, plus a fan of
/// orthogeodesics at every vertex of degree >= 4.
OrthoDecomposition short_decomposition(const IdealPolygon& P);

/// Result of the exhaustive minimax search over all triangulations.
struct OracleResult {
  OrthoDecomposition best;
  Triangulation best_triangulation;
  double minmax = 0.0;
  long long triangulations_searched = 0;
};

/// Enumerates all Catalan(n-2) triangulations and returns the one minimizing
/// the maximum orthogeodesic length (ties broken lexicographically on the
/// sorted chord list). Refuses n > 14.
OracleResult oracle_minmax(const IdealPolygon& P);

/// Maximum over the chords of T of the smaller vertex count split off; the
/// value is >= n/3 for every triangulation.
int splitting_width(const Triangulation& T);

/// Catalan number C_m = binom(2m, m)/(m+1), exact for m <= 33.
long long catalan(int m);

/// Calls fn once per triangulation of the n-gon with its sorted chord list.
void for_each_triangulation(int n,
                            const std::function<void(const std::vector<std::pair<int, int>>&)>& fn);

std::vector<Triangulation> all_triangulations(int n);

/// Uniformly-seeded (not uniformly distributed) random triangulation, built by
/// recursive apex choices; deterministic per generator state.
Triangulation random_triangulation(int n, std::mt19937_64& rng);

}  // namespace idealpoly
