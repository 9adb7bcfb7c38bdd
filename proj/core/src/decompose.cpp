#include "idealpoly/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace idealpoly {

double o_n_upper(int n) {
  if (n < 4) throw DomainError("bounds are defined for n >= 4");
  return 2.0 * inradius(n);
}

double o_n_lower(int n) {
  if (n < 4) throw DomainError("bounds are defined for n >= 4");
  const int n1 = (n + 2) / 3;  // ceil(n/3)
  return regular_ortho_length(n, n1);
}

double o_n_lower_chord_form(int n, double c) {
  if (n < 4) throw DomainError("bounds are defined for n >= 4");
  return 2.0 * std::asinh(c * std::cos(kPi / n) / std::sin(kPi / n));
}

BoundPair theorem_bounds(int n) { return BoundPair{n, o_n_lower(n), o_n_upper(n)}; }

OrthoDecomposition short_decomposition(const IdealPolygon& P) {
  const int n = P.n();
  if (n < 4) throw DomainError("decomposition requires n >= 4");
  const CutLocusTree tree = build_cut_locus(P);

  std::set<std::pair<int, int>> pairs;
  for (const auto& pr : internal_edges(tree)) pairs.insert(pr);

  // Each vertex of degree m >= 4 spans a fan: pick the anchor side a1 (the
  // fan side whose foot sits at the smallest angle around the vertex, ties to
  // the smallest index) and join it to every other fan side it is not
  // adjacent to. Consecutive fan pairs coincide with the incident edges, so
  // the set collapses everything to exactly n-3 members.
  for (const auto& v : tree.vertices) {
    const int m = v.degree();
    if (m < 4) continue;
    const Complex z = v.location.c();
    int a1 = -1;
    double best_angle = 0.0;
    for (int s : v.sides) {
      const Complex w = foot(v.location, P.side(s)).c();
      const double ang = std::arg((w - z) / (1.0 - std::conj(z) * w));
      if (a1 < 0 || ang < best_angle - 1e-15 ||
          (std::fabs(ang - best_angle) <= 1e-15 && s < a1)) {
        a1 = s;
        best_angle = ang;
      }
    }
    for (int s : v.sides) {
      if (s == a1 || P.adjacent_sides(a1, s)) continue;
      pairs.insert({std::min(a1, s), std::max(a1, s)});
    }
  }

  if (static_cast<int>(pairs.size()) != n - 3)
    throw InternalConsistencyError("cut-locus construction produced " +
                                   std::to_string(pairs.size()) + " orthogeodesics, expected " +
                                   std::to_string(n - 3));

  std::vector<OrthoGeodesic> members;
  members.reserve(pairs.size());
  for (const auto& [i, j] : pairs) members.push_back(orthogeodesic(P, i, j));
  OrthoDecomposition D = make_decomposition(P, std::move(members));

  if (D.max_length > o_n_upper(n) + 1e-9)
    throw InternalConsistencyError("decomposition length " + std::to_string(D.max_length) +
                                   " exceeds the 2 r_n bound " + std::to_string(o_n_upper(n)));
  return D;
}

long long catalan(int m) {
  if (m < 0) throw DomainError("Catalan numbers are defined for m >= 0");
  if (m > 33) throw DomainError("Catalan(m) overflows for m > 33");
  long long c = 1;
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

void for_each_triangulation(int n,
                            const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (n < 3) throw DomainError("triangulation enumeration needs n >= 3");
  std::vector<std::pair<int, int>> chords;
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  std::vector<std::pair<int, int>> sorted;

  std::function<void()> go = [&]() {
    if (pending.empty()) {
      sorted = chords;
      std::sort(sorted.begin(), sorted.end());
      fn(sorted);
      return;
    }
    const auto [l, r] = pending.back();
    pending.pop_back();
    if (r - l <= 1) {
      go();
    } else {
      for (int k = l + 1; k < r; ++k) {
        const size_t csz = chords.size(), psz = pending.size();
        if (k - l >= 2) {
          chords.emplace_back(l, k);
          pending.emplace_back(l, k);
        }
        if (r - k >= 2) {
          chords.emplace_back(k, r);
          pending.emplace_back(k, r);
        }
        go();
        pending.resize(psz);
        chords.resize(csz);
      }
    }
    pending.emplace_back(l, r);
  };
  go();
}

std::vector<Triangulation> all_triangulations(int n) {
  std::vector<Triangulation> out;
  for_each_triangulation(n, [&](const std::vector<std::pair<int, int>>& chords) {
    out.push_back(Triangulation{n, chords});
  });
  return out;
}

Triangulation random_triangulation(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> chords;
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  while (!pending.empty()) {
    const auto [l, r] = pending.back();
    pending.pop_back();
    if (r - l <= 1) continue;
    const int k = l + 1 + static_cast<int>(rng() % static_cast<unsigned long long>(r - l - 1));
    if (k - l >= 2) {
      chords.emplace_back(l, k);
      pending.emplace_back(l, k);
    }
    if (r - k >= 2) {
      chords.emplace_back(k, r);
      pending.emplace_back(k, r);
    }
  }
  return make_triangulation(n, std::move(chords));
}

OracleResult oracle_minmax(const IdealPolygon& P) {
  const int n = P.n();
  if (n < 4) throw DomainError("oracle requires n >= 4");
  if (n > 14)
    throw OracleSizeError("refusing exhaustive search for n = " + std::to_string(n) + ": Catalan(" +
                          std::to_string(n - 2) + ") = " + std::to_string(catalan(n - 2)) +
                          " triangulations");

  // Chord lengths are shared by every triangulation; precompute them once.
  std::vector<std::vector<double>> len(n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 2; b < n; ++b) {
      if (a == 0 && b == n - 1) continue;
      const auto [i, j] = chord_to_side_pair(n, {a, b});
      len[a][b] = orthogeodesic(P, i, j).length();
    }
  }

  long long count = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<int, int>> best_chords;
  for_each_triangulation(n, [&](const std::vector<std::pair<int, int>>& chords) {
    ++count;
    double mx = 0.0;
    for (const auto& [a, b] : chords) mx = std::max(mx, len[a][b]);
    if (mx < best - 1e-12 || (std::fabs(mx - best) <= 1e-12 && chords < best_chords)) {
      best = mx;
      best_chords = chords;
    }
  });

  Triangulation T = make_triangulation(n, best_chords);
  OrthoDecomposition D = decomposition_from_triangulation(P, T);
  return OracleResult{std::move(D), std::move(T), best, count};
}

int splitting_width(const Triangulation& T) {
  int width = 0;
  for (const auto& [a, b] : T.chords) width = std::max(width, std::min(b - a, T.n - (b - a)));
  return width;
}

}  // namespace idealpoly
