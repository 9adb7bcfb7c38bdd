#include "idealpoly/moduli.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace idealpoly {

namespace {

constexpr double kThird = kTwoPi / 3.0;  // the free angles live in (2*kThird, 3*kThird)

// Free angles from gap parameters: the n-2 gaps between 4*pi/3 and 2*pi are
// the logistic image of u, so any u in R^{n-3} is a valid polygon.
std::vector<double> angles_from_gaps(const std::vector<double>& u) {
  const int f = static_cast<int>(u.size());
  std::vector<double> w(f + 1);
  double shift = 0.0;  // the last gap carries an implicit parameter of 0
  for (double v : u) shift = std::max(shift, v);
  double total = 0.0;
  for (int i = 0; i < f; ++i) total += (w[i] = std::exp(u[i] - shift));
  total += (w[f] = std::exp(-shift));
  std::vector<double> angles{0.0, kThird, 2.0 * kThird};
  double acc = 2.0 * kThird;
  for (int i = 0; i < f; ++i) {
    acc += kThird * w[i] / total;
    angles.push_back(acc);
  }
  return angles;
}

std::vector<double> lengths_along(const IdealPolygon& P, const Triangulation& T) {
  std::vector<double> out;
  out.reserve(T.chords.size());
  for (const auto& ch : T.chords) {
    const auto [i, j] = chord_to_side_pair(T.n, ch);
    out.push_back(orthogeodesic(P, i, j).length());
  }
  return out;
}

}  // namespace

IdealPolygon normalize(const IdealPolygon& P) {
  const MobiusMap map = mobius_normalize(P.vertex(0), P.vertex(1), P.vertex(2));
  std::vector<double> angles{0.0, kThird, 2.0 * kThird};
  for (int k = 3; k < P.n(); ++k) angles.push_back(map(P.vertex(k)).angle);
  return make_polygon(std::move(angles));
}

ModuliSample sample_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw DomainError("n must be >= 3, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<double> free_angles(n - 3);
  const double min_gap = 10.0 * kSepTol;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) throw DomainError("sampling failed to satisfy the minimum gap");
    for (double& a : free_angles) a = 2.0 * kThird + kThird * unit();
    std::sort(free_angles.begin(), free_angles.end());
    double prev = 2.0 * kThird;
    bool ok = true;
    for (double a : free_angles) {
      if (a - prev <= min_gap) {
        ok = false;
        break;
      }
      prev = a;
    }
    if (ok && kTwoPi - prev > min_gap) break;
  }

  std::vector<double> angles{0.0, kThird, 2.0 * kThird};
  angles.insert(angles.end(), free_angles.begin(), free_angles.end());
  return ModuliSample{make_polygon(std::move(angles)), seed, n};
}

MarkedLengths marked_lengths(const IdealPolygon& P, const Triangulation& T) {
  const OrthoDecomposition D = decomposition_from_triangulation(P, T);
  std::vector<double> lengths;
  lengths.reserve(D.members.size());
  for (const auto& m : D.members) lengths.push_back(m.length());
  return MarkedLengths{T, std::move(lengths)};
}

namespace detail {

std::vector<double> gap_parameters(const IdealPolygon& P) {
  const int f = P.n() - 3;
  std::vector<double> gaps(f + 1);
  double prev = 2.0 * kThird;
  for (int i = 0; i < f; ++i) {
    gaps[i] = P.angles[3 + i] - prev;
    prev = P.angles[3 + i];
  }
  gaps[f] = kTwoPi - prev;
  std::vector<double> u(f);
  for (int i = 0; i < f; ++i) u[i] = std::log(gaps[i] / gaps[f]);
  return u;
}

std::vector<double> reconstruction_residual(const MarkedLengths& M, const std::vector<double>& u) {
  const IdealPolygon P{angles_from_gaps(u)};
  std::vector<double> r = lengths_along(P, M.triangulation);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= M.lengths[i];
  return r;
}

std::vector<std::vector<double>> reconstruction_jacobian(const MarkedLengths& M,
                                                         const std::vector<double>& u) {
  const int f = static_cast<int>(u.size());
  const double h = 1e-7;
  std::vector<std::vector<double>> J(f, std::vector<double>(f, 0.0));
  std::vector<double> up = u;
  for (int c = 0; c < f; ++c) {
    up[c] = u[c] + h;
    const auto rp = reconstruction_residual(M, up);
    up[c] = u[c] - h;
    const auto rm = reconstruction_residual(M, up);
    up[c] = u[c];
    for (int r = 0; r < f; ++r) J[r][c] = (rp[r] - rm[r]) / (2.0 * h);
  }
  return J;
}

}  // namespace detail

IdealPolygon reconstruct(const MarkedLengths& M) {
  const int n = M.triangulation.n;
  const int f = n - 3;
  if (n < 4) throw DomainError("reconstruction requires n >= 4");
  if (static_cast<int>(M.lengths.size()) != f)
    throw DomainError("expected " + std::to_string(f) + " marked lengths");
  for (double L : M.lengths)
    if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("marked lengths must be positive");

  std::vector<double> u = detail::gap_parameters(normalize(regular_polygon(n)));
  auto norm_inf = [](const std::vector<double>& r) {
    double m = 0.0;
    for (double v : r) m = std::max(m, std::fabs(v));
    return m;
  };

  std::vector<double> r = detail::reconstruction_residual(M, u);
  double rn = norm_inf(r);
  double best = rn;
  for (int it = 0; it < 200 && rn >= 1e-10; ++it) {
    const auto J = detail::reconstruction_jacobian(M, u);
    Eigen::MatrixXd A(f, f);
    Eigen::VectorXd b(f);
    for (int i = 0; i < f; ++i) {
      b(i) = -r[i];
      for (int j = 0; j < f; ++j) A(i, j) = J[i][j];
    }
    const Eigen::VectorXd step = A.fullPivLu().solve(b);
    if (!step.allFinite()) break;

    double lambda = 1.0;
    bool improved = false;
    std::vector<double> u_new(f), r_new;
    for (int halving = 0; halving < 60; ++halving) {
      for (int i = 0; i < f; ++i) u_new[i] = u[i] + lambda * step(i);
      r_new = detail::reconstruction_residual(M, u_new);
      const double rn_new = norm_inf(r_new);
      if (rn_new < rn) {
        u = u_new;
        r = r_new;
        rn = rn_new;
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    best = std::min(best, rn);
    if (!improved) break;  // stalled; report the best residual reached
  }
  if (rn >= 1e-10)
    throw ReconstructionFailed(
        "reconstruction did not converge (best residual " + std::to_string(best) + ")", best);
  return IdealPolygon{angles_from_gaps(u)};
}

std::vector<double> spectrum(const IdealPolygon& P) {
  if (P.n() < 4) throw DomainError("spectrum requires n >= 4");
  std::vector<double> out;
  for (const auto& o : all_orthogeodesics(P)) out.push_back(o.length());
  std::sort(out.begin(), out.end());
  return out;
}

bool isometric(const IdealPolygon& P, const IdealPolygon& Q, double tol) {
  const int n = P.n();
  if (Q.n() != n) return false;
  const auto sp = spectrum(P), sq = spectrum(Q);
  for (size_t i = 0; i < sp.size(); ++i)
    if (std::fabs(sp[i] - sq[i]) > tol) return false;

  // Look for a cyclic relabeling aligning all marked lengths.
  std::vector<std::vector<double>> lp(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> lq(n, std::vector<double>(n, 0.0));
  for (const auto& o : all_orthogeodesics(P)) lp[o.i][o.j] = lp[o.j][o.i] = o.length();
  for (const auto& o : all_orthogeodesics(Q)) lq[o.i][o.j] = lq[o.j][o.i] = o.length();
  for (int r = 0; r < n; ++r) {
    bool match = true;
    for (int i = 0; i < n && match; ++i)
      for (int j = i + 1; j < n && match; ++j) {
        if (P.adjacent_sides(i, j)) continue;
        if (std::fabs(lp[i][j] - lq[(i + r) % n][(j + r) % n]) > tol) match = false;
      }
    if (match) return true;
  }
  return false;
}

}  // namespace idealpoly
