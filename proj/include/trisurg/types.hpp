#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisurg {

using VertexId = int;

/// Unordered vertex triple as stored in a face list.
using Face = std::array<VertexId, 3>;
using FaceList = std::vector<Face>;

/// An unordered vertex pair, normalized so that `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(VertexId x) const { return x == u || x == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  auto operator<=>(const Edge&) const = default;
};

inline Face sorted(Face f) {
  if (f[0] > f[1]) std::swap(f[0], f[1]);
  if (f[1] > f[2]) std::swap(f[1], f[2]);
  if (f[0] > f[1]) std::swap(f[0], f[1]);
  return f;
}

inline bool contains(const Face& f, VertexId x) { return f[0] == x || f[1] == x || f[2] == x; }

enum class ErrorKind {
  EmptyInput,
  InvalidFace,
  MultiEdgeViolation,
  TwoFacesShareTwoEdges,
  NonManifoldEdge,
  DisconnectedComplex,
  BadVertexLink,
  UnknownVertex,
  UnknownEdge,
  EmptyBoundary,
  NotContractible,
  BadPartition,
  DegreeViolation,
  FlipCreatesMultiEdge,
  BoundaryEdgeFlip,
  SitePreconditionFailed,
  ClassViolation,
  NonPuncturedInput,
  NotCnkc,
  PreconditionDistance,
  NoFinding,
  MixedSurfaces,
  ParseError,
  MoveMismatch,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` carries the error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trisurg
