#pragma once

// Core data model: validated surface triangulations with boundary.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trisurg/types.hpp"

namespace trisurg {

/// Neighbors of a vertex in rotation order. `cyclic` is true for inner
/// vertices; for boundary vertices the walk runs between the two boundary
/// neighbors.
struct VertexLink {
  std::vector<VertexId> walk;
  bool cyclic = false;

  bool operator==(const VertexLink&) const = default;
};

struct SurfaceClass {
  int euler_characteristic = 0;
  bool orientable = true;
  int boundary_components = 0;

  bool operator==(const SurfaceClass&) const = default;
  std::string to_string() const;
};

struct BoundaryGraph {
  /// One entry per boundary component; each cycle starts at its smallest
  /// vertex and continues toward the smaller of that vertex's two neighbors.
  std::vector<std::vector<VertexId>> cycles;
  std::vector<Edge> edges;
};

/// F°²(4): min degree >= 3 and inner degree >= 4. F²(4): min degree >= 4.
enum class DegreeClass { Neither, InnerDegree4, MinDegree4 };

const char* to_string(DegreeClass c);

/// A triangulation of a compact connected surface, possibly with boundary.
///
/// Immutable after `build`. Faces keep the order and vertex order in which
/// they were supplied; all incidence data is derived.
class Triangulation {
 public:
  /// Validates `faces` and derives incidence. Throws `Error` with one of
  /// EmptyInput, InvalidFace, TwoFacesShareTwoEdges, NonManifoldEdge,
  /// DisconnectedComplex or BadVertexLink. A face list cannot express a
  /// multi-edge, so MultiEdgeViolation only arises from surgery.
  static Triangulation build(FaceList faces);

  const FaceList& faces() const { return faces_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_boundary_edges() const { return boundary_edge_count_; }
  VertexId max_vertex_id() const { return vertices_.back(); }
  /// Smallest non-negative id not in use.
  VertexId smallest_unused_id() const;

  bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_face(VertexId a, VertexId b, VertexId c) const;

  int degree(VertexId v) const { return static_cast<int>(vertex(v).link.walk.size()); }
  bool is_boundary_vertex(VertexId v) const { return !vertex(v).link.cyclic; }
  bool is_inner_vertex(VertexId v) const { return vertex(v).link.cyclic; }
  bool is_boundary_edge(VertexId a, VertexId b) const;
  bool has_boundary() const { return boundary_edge_count_ > 0; }

  /// Neighbors in rotation order. Throws UnknownVertex.
  const VertexLink& link(VertexId v) const { return vertex(v).link; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return vertex(v).link.walk; }
  bool adjacent(VertexId a, VertexId b) const { return has_edge(a, b); }

  /// Indices into faces() of the one or two faces containing edge ab.
  std::vector<int> edge_faces(VertexId a, VertexId b) const;
  /// Third vertices of the faces containing ab. Throws UnknownEdge.
  std::vector<VertexId> apexes(VertexId a, VertexId b) const;
  /// Index of the other face across edge ab from face `f`, or -1.
  int face_across(int f, VertexId a, VertexId b) const;

  std::vector<Edge> boundary_edges() const;
  std::vector<VertexId> boundary_vertices() const;

  int min_degree() const;

 private:
  struct VertexData {
    VertexLink link;
  };
  struct EdgeData {
    int f0 = -1;
    int f1 = -1;
  };

  const VertexData& vertex(VertexId v) const;
  const EdgeData* find_edge(VertexId a, VertexId b) const;

  FaceList faces_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<VertexId, int> index_;
  std::vector<VertexData> data_;
  std::unordered_map<std::uint64_t, EdgeData> edge_map_;
  std::size_t boundary_edge_count_ = 0;
};

/// Builds, returning the error instead of throwing.
std::optional<Triangulation> try_build(FaceList faces, Error* error = nullptr);

SurfaceClass classify_surface(const Triangulation& t);
BoundaryGraph boundary(const Triangulation& t);

/// 0 when e touches the boundary, else the graph distance from the nearer
/// endpoint to the boundary. Throws EmptyBoundary, UnknownEdge.
int edge_distance_to_boundary(const Triangulation& t, Edge e);
/// Graph distance from every vertex to the nearest vertex of `sources`.
std::unordered_map<VertexId, int> distances_from(const Triangulation& t,
                                                 const std::vector<VertexId>& sources);

DegreeClass class_membership(const Triangulation& t);
/// True when `t` lies in `c` (F²(4) implies F°²(4)).
bool in_class(const Triangulation& t, DegreeClass c);

/// Isomorphism-invariant code of the 2-complex. Reflections are included
/// since the code ranges over both orientations of every starting face.
struct CanonicalForm {
  std::vector<std::uint16_t> code;

  std::string hex() const;
  static CanonicalForm from_hex(const std::string& text);
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const;
};

CanonicalForm canonical_form(const Triangulation& t);
bool is_equivalent(const Triangulation& a, const Triangulation& b);

// .tri text format: `tri <num_faces>` then one `a b c` line per face.
FaceList parse_tri(std::istream& in);
FaceList parse_tri(const std::string& text);
std::string serialize_tri(const FaceList& faces);
Triangulation read_tri_file(const std::string& path);
void write_tri_file(const std::string& path, const FaceList& faces);

std::string format_faces(const FaceList& faces);

}  // namespace trisurg
