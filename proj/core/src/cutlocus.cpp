#include "idealpoly/cutlocus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <queue>
#include <string>
#include <tuple>

namespace idealpoly {

namespace {

constexpr double kValidTol = 1e-9;  // slack when comparing the common distance
                                    // against the remaining sides

struct Candidate {
  Complex z;
  double d;
  std::array<int, 3> triple;
};

// Fan order: feet angles around the vertex, measured in the chart centered at
// the vertex, then rotated so the smallest side index comes first.
std::vector<int> fan_order(const CutVertex& v, const std::vector<Geodesic>& sides) {
  const Complex z = v.location.c();
  std::vector<std::pair<double, int>> by_angle;
  by_angle.reserve(v.sides.size());
  for (int s : v.sides) {
    const Complex w = foot(v.location, sides[s]).c();
    const Complex img = (w - z) / (1.0 - std::conj(z) * w);
    by_angle.emplace_back(std::arg(img), s);
  }
  std::sort(by_angle.begin(), by_angle.end());
  std::vector<int> fan(by_angle.size());
  for (size_t k = 0; k < by_angle.size(); ++k) fan[k] = by_angle[k].second;
  const auto min_it = std::min_element(fan.begin(), fan.end());
  std::rotate(fan.begin(), min_it, fan.end());
  return fan;
}

}  // namespace

CutLocusTree build_cut_locus(const IdealPolygon& P) {
  const int n = P.n();
  std::vector<Geodesic> sides;
  std::vector<GeodesicFrame> frames;
  sides.reserve(n);
  frames.reserve(n);
  for (int k = 0; k < n; ++k) {
    sides.push_back(P.side(k));
    frames.emplace_back(sides.back());
  }
  auto side_dist = [&](Complex z, int k) { return std::asinh(std::fabs(frames[k].signed_sinh(z))); };

  // Pass 1: equidistant point of every side triple, kept when no other side
  // comes closer.
  std::vector<Candidate> candidates;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        DiskPoint p{};
        double d = 0.0;
        try {
          std::tie(p, d) = equidistant_point(sides[i], sides[j], sides[k]);
        } catch (const Error&) {
          continue;  // triple admits no equidistant point
        }
        bool keep = true;
        for (int m = 0; m < n && keep; ++m) {
          if (m == i || m == j || m == k) continue;
          if (side_dist(p.c(), m) < d - kValidTol) keep = false;
        }
        if (keep) candidates.push_back({p.c(), d, {i, j, k}});
      }
    }
  }

  // Pass 2: coalesce candidates within kMergeTol of a cluster representative.
  // Candidates arrive in lexicographic triple order, so clustering is
  // deterministic; representatives are the first member of each cluster.
  struct Cluster {
    Complex z;
    double d;
    std::vector<int> side_set;
  };
  std::vector<Cluster> clusters;
  for (const auto& c : candidates) {
    bool merged = false;
    for (auto& cl : clusters) {
      if (distance(DiskPoint::from(c.z), DiskPoint::from(cl.z)) < kMergeTol) {
        for (int s : c.triple)
          if (std::find(cl.side_set.begin(), cl.side_set.end(), s) == cl.side_set.end())
            cl.side_set.push_back(s);
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back({c.z, c.d, {c.triple[0], c.triple[1], c.triple[2]}});
  }

  CutLocusTree tree{P, {}, {}};
  for (auto& cl : clusters) {
    std::sort(cl.side_set.begin(), cl.side_set.end());
    CutVertex v{DiskPoint::from(cl.z), cl.d, cl.side_set};
    for (int s : v.sides) {
      const double ds = side_dist(cl.z, s);
      if (std::fabs(ds - v.distance) > kValidTol)
        throw InternalConsistencyError(
            "merged cut vertex is not equidistant to all of its sides (spread " +
            std::to_string(std::fabs(ds - v.distance)) + ")");
    }
    v.sides = fan_order(v, sides);
    tree.vertices.push_back(std::move(v));
  }

  // Pass 3: edges. Every consecutive fan pair at a vertex is one edge stub;
  // each ideal polygon vertex is the leaf stub of its adjacent side pair.
  std::map<std::pair<int, int>, std::vector<CutEdge::End>> stubs;
  for (size_t vi = 0; vi < tree.vertices.size(); ++vi) {
    const auto& fan = tree.vertices[vi].sides;
    const int m = static_cast<int>(fan.size());
    for (int t = 0; t < m; ++t) {
      int a = fan[t], b = fan[(t + 1) % m];
      if (a > b) std::swap(a, b);
      stubs[{a, b}].push_back({CutEdge::End::Vertex, static_cast<int>(vi)});
    }
  }
  for (int leaf = 0; leaf < n; ++leaf) {
    int a = (leaf + n - 1) % n, b = leaf;  // the two sides meeting at vertex `leaf`
    if (a > b) std::swap(a, b);
    stubs[{a, b}].push_back({CutEdge::End::Leaf, leaf});
  }
  for (const auto& [pair, ends] : stubs) {
    if (ends.size() != 2)
      throw InternalConsistencyError("side pair (" + std::to_string(pair.first) + "," +
                                     std::to_string(pair.second) + ") has " +
                                     std::to_string(ends.size()) + " edge stubs, expected 2");
    tree.edges.push_back(CutEdge{pair, ends[0], ends[1], bisector(sides[pair.first], sides[pair.second])});
  }

  // Pass 4: tree bookkeeping. |edges| = |vertices| + n - 1 and connectivity
  // together say the locus is a tree with exactly n leaves.
  const int V = static_cast<int>(tree.vertices.size());
  const int E = static_cast<int>(tree.edges.size());
  if (V == 0) throw InternalConsistencyError("cut locus has no vertices");
  if (E != V + n - 1)
    throw InternalConsistencyError("cut locus is not a tree: " + std::to_string(E) + " edges for " +
                                   std::to_string(V) + " vertices and " + std::to_string(n) +
                                   " leaves");
  std::vector<std::vector<int>> adj(V + n);  // vertices, then leaves
  auto node_id = [&](const CutEdge::End& e) {
    return e.kind == CutEdge::End::Vertex ? e.index : V + e.index;
  };
  for (const auto& e : tree.edges) {
    adj[node_id(e.end1)].push_back(node_id(e.end2));
    adj[node_id(e.end2)].push_back(node_id(e.end1));
  }
  std::vector<char> seen(V + n, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 0;
  while (!bfs.empty()) {
    const int u = bfs.front();
    bfs.pop();
    ++reached;
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        bfs.push(w);
      }
  }
  if (reached != V + n) throw InternalConsistencyError("cut locus is not connected");
  for (const auto& v : tree.vertices)
    if (v.degree() < 3) throw InternalConsistencyError("internal cut vertex of degree < 3");

  return tree;
}

std::vector<std::pair<int, int>> internal_edges(const CutLocusTree& T) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : T.edges)
    if (!T.polygon.adjacent_sides(e.side_pair.first, e.side_pair.second))
      out.push_back(e.side_pair);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<int>& vertex_fan_sides(const CutVertex& v) { return v.sides; }

}  // namespace idealpoly
