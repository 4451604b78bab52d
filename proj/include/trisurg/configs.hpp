#pragma once

// Detectors for the named local configurations and the locator that finds
// one of them next to a contractible edge which is not 4-contractible.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trisurg/complex.hpp"

namespace trisurg {

// ---------------------------------------------------------------------------
// Triodes

/// Boundary vertices of degree 3, ascending.
std::vector<VertexId> find_triodes(const Triangulation& t);

/// Contractible, and t/e has minimum degree >= 3 with every degree-3 vertex
/// on its boundary, i.e. t/e stays in F°²(4). Throws NotContractible.
bool is_triode_detecting(const Triangulation& t, Edge e);

/// Class membership of t/e from degree bookkeeping alone. Requires e
/// contractible.
bool contraction_stays_in(const Triangulation& t, Edge e, DegreeClass c);

// ---------------------------------------------------------------------------
// Octahedra

/// v1v2v3 is the 4-valent center 3-cycle, a_i the vertex adjacent to the two
/// centers other than v_i. For external components `apex` is the index j of
/// a_j, the degree-4 vertex whose two a-edges lie on the boundary.
struct OctahedronComponent {
  std::array<VertexId, 3> center{};
  std::array<VertexId, 3> remaining{};
  int boundary_case = 1;
  bool external = false;
  int apex = -1;

  std::vector<VertexId> vertices() const;
  bool operator==(const OctahedronComponent&) const = default;
};

/// One component per vertex set. Where several center triangles share the
/// same six vertices the one with the largest boundary case, then the
/// smallest center, is reported.
std::vector<OctahedronComponent> find_octahedra(const Triangulation& t);

/// The component centered at exactly this 3-cycle (any order), if any.
std::optional<OctahedronComponent> octahedron_at(const Triangulation& t, std::array<VertexId, 3> center);

enum class OctahedronStatus { Removable, Redundant, Neither };
const char* to_string(OctahedronStatus s);

struct OctahedronVerdict {
  OctahedronStatus status = OctahedronStatus::Neither;
  /// For Neither: the smallest remaining vertex of degree 5, if any.
  std::optional<VertexId> blocker;
};

/// Faces of t minus the centers; for an interior component the hole a1a2a3
/// is closed with a face. Empty when nothing would remain.
FaceList octahedron_removal_faces(const Triangulation& t, const OctahedronComponent& o);
/// Faces of t minus the centers and a_apex. External components only.
FaceList redundant_deletion_faces(const Triangulation& t, const OctahedronComponent& o);

OctahedronVerdict octahedron_status(const Triangulation& t, const OctahedronComponent& o, DegreeClass c);

// ---------------------------------------------------------------------------
// Quasi-octahedra

/// Normalized so that center[2] (v3) is the center on the boundary and a1a2
/// is the distinguished pair: an inner edge in variant 1, missing in
/// variant 2. The six patch faces are v1v2v3, v1v2a3, v1v3a2, v2v3a1,
/// v1a2a3, v2a1a3.
struct QuasiOctahedronComponent {
  std::array<VertexId, 3> center{};
  std::array<VertexId, 3> remaining{};
  int variant = 1;

  std::vector<VertexId> vertices() const;
  FaceList patch_faces() const;
  bool operator==(const QuasiOctahedronComponent&) const = default;
};

std::vector<QuasiOctahedronComponent> find_quasi_octahedra(const Triangulation& t);

std::optional<QuasiOctahedronComponent> quasi_octahedron_at(const Triangulation& t,
                                                            std::array<VertexId, 3> center);

enum class QuasiStatus { RemovableCase1, RemovableCase2, NonRemovable };
const char* to_string(QuasiStatus s);

/// Case 1 deletes the patch; case 2 replaces it by the face a1a2a3.
FaceList quasi_removal_faces(const Triangulation& t, const QuasiOctahedronComponent& q, int removal_case);
QuasiStatus quasi_status(const Triangulation& t, const QuasiOctahedronComponent& q);

// ---------------------------------------------------------------------------
// Flags

/// Inner 4-valent x with link x1 a b x2, the path x1-a-b-x2 on the boundary,
/// deg(a) = deg(b) = 3 and no 4-valent neighbor. `whole_complex` marks the
/// 5-vertex wheel, where removal would leave nothing.
struct Flag {
  VertexId x = -1;
  std::array<VertexId, 4> rim{};  // x1, a, b, x2
  bool removable = false;
  bool whole_complex = false;

  std::vector<VertexId> vertices() const;
  bool operator==(const Flag&) const = default;
};

std::vector<Flag> find_flags(const Triangulation& t);
FaceList flag_removal_faces(const Triangulation& t, const Flag& f);

// ---------------------------------------------------------------------------
// N- and M-components

/// Faces x z y and x z v sharing the inner edge xz, with the disjoint pair
/// first = (x, y), second = (z, v). Both edges are contractible and at least
/// one lies on the boundary. Double contraction sends y to x and v to z.
struct NComponent {
  Edge shared;
  std::pair<VertexId, VertexId> first;   // (kept, removed)
  std::pair<VertexId, VertexId> second;  // (kept, removed)
  bool contractible = false;

  std::vector<VertexId> vertices() const;
  bool operator==(const NComponent&) const = default;
};

std::vector<NComponent> find_N_components(const Triangulation& t);
/// Face list after the double contraction, without validation.
FaceList double_contraction_faces(const Triangulation& t, const NComponent& n);

/// Faces xab, xax1, xbx2 with x a 4-valent boundary vertex, ab a boundary
/// edge which is contractible but not 4-contractible, xx1 and xx2 on the
/// boundary and x1x2 an inner edge.
struct MComponent {
  VertexId x = -1, a = -1, b = -1, x1 = -1, x2 = -1;

  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  bool operator==(const MComponent&) const = default;
};

std::vector<MComponent> find_M_components(const Triangulation& t);

// ---------------------------------------------------------------------------
// Findings and the locator

enum class FindingKind {
  FourContractibleEdge,
  TriodeDetectingEdge,
  Flag,
  Octahedron,
  QuasiOctahedron,
  NComponent,
  MComponent,
  WholeComplexIsFlag,
  WholeComplexIsOctahedron,
};

const char* to_string(FindingKind k);

struct Finding {
  FindingKind kind = FindingKind::FourContractibleEdge;
  std::vector<VertexId> witness;
  int distance = 0;

  bool operator==(const Finding&) const = default;
};

/// `<kind> @ <vertex ids> d=<distance>`
std::string format_finding(const Finding& f);

/// Every configuration relevant to class c, with distances measured from
/// the vertex set `near` (distance -1 when `near` is empty).
std::vector<Finding> detect_all(const Triangulation& t, DegreeClass c,
                                const std::vector<VertexId>& near = {});

/// Throws NotCnkc, PreconditionDistance, NoFinding.
Finding locate_near_cn4c(const Triangulation& t, Edge e, DegreeClass c);

}  // namespace trisurg
