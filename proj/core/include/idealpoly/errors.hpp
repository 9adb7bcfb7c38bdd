#pragma once

#include <stdexcept>
#include <string>

namespace idealpoly {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input: points outside the disk, coincident ideal points, bad sizes.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// The two geodesics cross inside the disk, so no common perpendicular exists.
class IntersectingGeodesics : public DomainError {
 public:
  explicit IntersectingGeodesics(const std::string& what) : DomainError(what) {}
};

// The two geodesics share an ideal endpoint: distance 0, no perpendicular.
class AsymptoticGeodesics : public DomainError {
 public:
  explicit AsymptoticGeodesics(const std::string& what) : DomainError(what) {}
};

// Orthogeodesics are only defined between non-adjacent polygon sides.
class AdjacentSides : public DomainError {
 public:
  explicit AdjacentSides(const std::string& what) : DomainError(what) {}
};

// Newton iteration for a three-sides equidistant point did not converge.
class NoEquidistantPoint : public Error {
 public:
  explicit NoEquidistantPoint(const std::string& what) : Error(what) {}
};

// Polygon reconstruction from marked lengths did not converge; carries the
// best residual reached so callers can report how close the solve got.
class ReconstructionFailed : public Error {
 public:
  ReconstructionFailed(const std::string& what, double best_residual)
      : Error(what), best_residual(best_residual) {}
  double best_residual;
};

// The exhaustive triangulation search was refused because it would be too big.
class OracleSizeError : public DomainError {
 public:
  explicit OracleSizeError(const std::string& what) : DomainError(what) {}
};

// A constructed object failed its own structural checks. Never returned
// silently; indicates a degenerate input or a genuine bug.
class InternalConsistencyError : public Error {
 public:
  explicit InternalConsistencyError(const std::string& what) : Error(what) {}
};

}  // namespace idealpoly
