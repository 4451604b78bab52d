#pragma once

// Breadth-first enumeration of a class by expansion, deduplicated by
// canonical form, with an on-disk catalog that can be resumed.

#include <map>
#include <string>
#include <vector>

#include "trisurg/complex.hpp"
#include "trisurg/reduce.hpp"

namespace trisurg {

/// Every in-class result of one expansion of t, in site order.
std::vector<Step> expand_once(const Triangulation& t, DegreeClass c);

struct Catalog {
  SurfaceClass surface;
  DegreeClass cls = DegreeClass::MinDegree4;
  int max_vertices = 0;
  std::vector<CanonicalForm> seeds;
  /// Vertex count -> code -> representative face list.
  std::map<int, std::map<CanonicalForm, FaceList>> levels;
  /// Levels whose members have all been expanded.
  int expanded_through = 0;

  std::size_t size() const;
  bool contains(const Triangulation& t) const;
};

struct EnumerateOptions {
  int threads = 1;
  /// Stop after this many levels have been expanded (0 = no limit). The
  /// catalog can be continued with `resume`.
  int level_budget = 0;
};

/// Throws MixedSurfaces when the seeds disagree on SurfaceClass,
/// ClassViolation when a seed is not in class c.
Catalog enumerate(const std::vector<Triangulation>& seeds, DegreeClass c, int max_vertices,
                  const EnumerateOptions& opts = {});

/// Raises the vertex cap. Levels close enough to the old cap to have had
/// results cut off are marked unexpanded again.
void raise_limit(Catalog& catalog, int max_vertices);

/// Continues expansion of a partially expanded catalog up to max_vertices.
void resume(Catalog& catalog, const EnumerateOptions& opts = {});

/// Directory layout: `catalog.txt` with the header, then `v<NN>.txt` per
/// vertex count with lines `<code hex>\t<face list>`.
void save_catalog(const Catalog& catalog, const std::string& dir);
Catalog load_catalog(const std::string& dir);

}  // namespace trisurg
