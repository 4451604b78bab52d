#pragma once

// Reversible local surgeries: contraction, splitting, diagonal flips.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisurg/complex.hpp"

namespace trisurg {

/// Reductions R1-R6 and expansions E1-E6; RF/EF are flag removal/addition.
enum class MoveKind { R1, R2, R3, R4, R5, R6, RF, Flip, E1, E2, E3, E4, E5, E6, EF };

const char* to_string(MoveKind kind);
MoveKind parse_move_kind(const std::string& text);
MoveKind inverse_kind(MoveKind kind);
bool is_reduction(MoveKind kind);

/// One applied operation recorded as a face replacement. `site` lists the
/// vertices the operation was applied at; `removed`/`added` are exactly the
/// faces taken out of and appended to the face list, which is all that is
/// needed to replay or invert it.
struct Move {
  MoveKind kind = MoveKind::R1;
  std::vector<VertexId> site;
  FaceList removed;
  FaceList added;

  bool operator==(const Move&) const = default;
};

/// Builds the move turning `before` into a triangulation with face set
/// `after` (compared as unordered triples).
Move make_move(MoveKind kind, std::vector<VertexId> site, const Triangulation& before,
               const FaceList& after);

/// Removes `m.removed` (keeping the order of the rest) and appends
/// `m.added`. Throws MoveMismatch when a removed face is absent or an added
/// face already present; validation errors propagate from build.
Triangulation apply(const Triangulation& t, const Move& m);
Move invert(const Move& m);

/// `<kind> <site ids...> | <n> <3n removed ids> <m> <3m added ids>`
std::string format_move(const Move& m);
Move parse_move(const std::string& line);
std::string format_trace(const std::vector<Move>& moves);
std::vector<Move> parse_trace(std::istream& in);

// ---------------------------------------------------------------------------
// Contraction

enum class ContractionBlock {
  None,
  CriticalCycle,
  InnerEdgeBothEndpointsOnBoundary,
  SingleTriangle,
  Tetrahedron,
};

const char* to_string(ContractionBlock b);

struct ContractionWitness {
  Edge edge;
  std::vector<VertexId> apexes;
  ContractionBlock blocked_by = ContractionBlock::None;
  /// Set when blocked by a critical 3-cycle.
  std::optional<Face> critical_cycle;

  bool contractible() const { return blocked_by == ContractionBlock::None; }
};

/// 3-cycles through e that bound no face. A boundary hole of length 3 shows
/// up here as well. Throws UnknownEdge.
std::vector<Face> critical_3cycles_through(const Triangulation& t, Edge e);

ContractionWitness is_contractible(const Triangulation& t, Edge e);

/// Faces after identifying `removed` with `keep`, dropping degenerate faces.
/// No validity checks.
FaceList identify_vertices(const FaceList& faces, VertexId keep, VertexId removed);

/// Contracts edge keep-removed; the merged vertex keeps the id `keep`.
/// Throws NotContractible.
std::pair<Triangulation, Move> contract(const Triangulation& t, VertexId keep, VertexId removed);
inline std::pair<Triangulation, Move> contract(const Triangulation& t, Edge e) {
  return contract(t, e.u, e.v);
}

/// Minimum degree of t/e, computed from the degree bookkeeping. Requires e
/// contractible.
int min_degree_after_contraction(const Triangulation& t, Edge e);

/// Contractible and min degree of t/e >= k.
bool k_contractible(const Triangulation& t, Edge e, int k);
/// Contractible but not k-contractible.
bool is_cnkc(const Triangulation& t, Edge e, int k);

// ---------------------------------------------------------------------------
// Splitting

/// Pivots of a vertex split. For an inner vertex give two link neighbors;
/// the new vertex takes the arc running forward in link order from
/// pivots[0] to pivots[1]. For a boundary vertex with walk w0..wm, one pivot
/// wi splits off wi..wm across a new boundary edge; two pivots wi, wj
/// (i < j in walk order) split off an inner vertex over wi..wj.
struct SplitSpec {
  std::vector<VertexId> pivots;
};

/// Throws BadPartition, DegreeViolation (when either split vertex ends with
/// degree < k; k = 0 disables the check).
std::pair<Triangulation, Move> split_vertex(const Triangulation& t, VertexId v, const SplitSpec& spec,
                                            int k = 0);
/// Face list after the split without building; `new_id` receives the id.
FaceList split_faces(const Triangulation& t, VertexId v, const SplitSpec& spec, VertexId new_id);

/// All split specs of v in deterministic walk order.
std::vector<SplitSpec> enumerate_splits(const Triangulation& t, VertexId v);

// ---------------------------------------------------------------------------
// Flips

/// Replaces faces uvx, uvy by xyu, xyv. Throws BoundaryEdgeFlip,
/// FlipCreatesMultiEdge, UnknownEdge.
std::pair<Triangulation, Move> diagonal_flip(const Triangulation& t, Edge e);

}  // namespace trisurg
