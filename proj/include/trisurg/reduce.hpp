#pragma once

// The reduction and expansion calculi built from surgeries and detected
// configurations, the greedy drivers, and minimality certificates.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisurg/complex.hpp"
#include "trisurg/configs.hpp"
#include "trisurg/surgery.hpp"

namespace trisurg {

// ---------------------------------------------------------------------------
// Single operations
//
// Sites are vertex lists:
//   R1 keep removed            E1 v pivots...
//   R2 v1 v2 v3 [aj]           E2 a1 a2 a3 (into a face) | p q (along a boundary edge)
//   R3 v1 v2 v3 v              E3 v1 v2 v3 p q (unfold along boundary edge pq)
//   R4 v1 v2 v3                E4 a1 a2 a3
//   R5 v1 v2 v3 a2             E5 v3 w
//   R6 x y z v                 E6 x p0 p1 z q0 q1
//   RF x                       EF x1 x2
// R2 with a fourth id is the deletion of a redundant external octahedron.
// E1 is recorded as v new pivots. E6 splits x at pivots p0 p1 (equal for a
// single pivot) and then z, one of them, at q0 q1, which must include x or
// the new vertex; it is recorded with the site of the inverse R6.

using Step = std::pair<Triangulation, Move>;

/// Throws SitePreconditionFailed when the site does not carry the
/// configuration, ClassViolation when the result leaves class c.
Step apply_R(const Triangulation& t, MoveKind kind, const std::vector<VertexId>& site, DegreeClass c);
Step apply_E(const Triangulation& t, MoveKind kind, const std::vector<VertexId>& site, DegreeClass c);

/// All reductions available in class c, in driver priority order: for
/// F²(4) R1 (4-contractions), R2, R5, R3, R4, R6; for F°²(4) R1 (4c, then
/// class-preserving contractions), RF, R2. Sites are lexicographic within a
/// kind. `first_only` stops at the first hit.
std::vector<Step> available_reductions(const Triangulation& t, DegreeClass c, bool first_only = false);
std::optional<Step> first_reduction(const Triangulation& t, DegreeClass c);

/// Every in-class result of one expansion at every site.
std::vector<Step> available_expansions(const Triangulation& t, DegreeClass c);

// ---------------------------------------------------------------------------
// Traces

struct ReductionTrace {
  CanonicalForm initial;
  std::vector<Move> moves;
  CanonicalForm terminal;
  DegreeClass cls = DegreeClass::MinDegree4;
  bool flips_allowed = false;
};

std::string format_reduction_trace(const ReductionTrace& trace);
ReductionTrace parse_reduction_trace(std::istream& in);

/// Applies the moves to `initial`. Throws MoveMismatch when the initial or
/// terminal canonical form disagrees or a move does not apply.
Triangulation replay(const Triangulation& initial, const ReductionTrace& trace);

// ---------------------------------------------------------------------------
// Certificates

enum class Verdict { Irreducible, FourMinimal, NotMinimal };
enum class Housing { QuasiOctahedron, MComponent, DiskOctahedron, DiskFlag, None };

const char* to_string(Verdict v);
const char* to_string(Housing h);

struct Residual {
  Edge edge;
  Housing housing = Housing::None;
  std::vector<VertexId> witness;
};

struct MinimalityCertificate {
  Verdict verdict = Verdict::Irreducible;
  std::optional<Move> next;
  std::vector<Residual> residuals;

  bool all_housed() const;
};

MinimalityCertificate certify(const Triangulation& t, DegreeClass c);

std::string format_certificate(const MinimalityCertificate& cert);

// ---------------------------------------------------------------------------
// Drivers

struct Reduction {
  Triangulation terminal;
  ReductionTrace trace;
  MinimalityCertificate certificate;
};

/// F°²(4) driver. Throws ClassViolation, NonPuncturedInput.
Reduction reduce_to_irreducible(const Triangulation& t);

/// F²(4) driver. With flips, a stuck triangulation that still has
/// contractible edges tries diagonal flips that stay in F²(4) and unlock a
/// reduction within two flips. Throws ClassViolation.
Reduction reduce_to_4minimal(const Triangulation& t, bool flips_allowed);

}  // namespace trisurg
