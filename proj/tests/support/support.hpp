#pragma once

// Small builders shared by the unit tests. They work on raw face lists so
// they stay independent of the library's own expansion code.

#include <random>
#include <vector>

#include "trisurg/complex.hpp"
#include "trisurg/surgery.hpp"

namespace testing_support {

using namespace trisurg;

inline VertexId fresh(const FaceList& faces) {
  VertexId m = 0;
  for (const Face& f : faces)
    for (VertexId v : f) m = std::max(m, v);
  return m + 1;
}

// Replaces face a1a2a3 with a 4-valent octahedron core.
inline FaceList insert_octahedron(const FaceList& faces, Face a) {
  FaceList out;
  for (const Face& f : faces)
    if (sorted(f) != sorted(a)) out.push_back(f);
  VertexId v1 = fresh(faces), v2 = v1 + 1, v3 = v1 + 2;
  out.insert(out.end(), {{v1, v2, v3},
                         {v1, v2, a[2]},
                         {v2, v3, a[0]},
                         {v3, v1, a[1]},
                         {v1, a[1], a[2]},
                         {v2, a[2], a[0]},
                         {v3, a[0], a[1]}});
  return out;
}

// Glues a flag x, a, b along the boundary edge x1x2.
inline FaceList glue_flag(const FaceList& faces, VertexId x1, VertexId x2) {
  FaceList out = faces;
  VertexId x = fresh(faces), a = x + 1, b = x + 2;
  out.insert(out.end(), {{x, x1, a}, {x, a, b}, {x, b, x2}, {x, x2, x1}});
  return out;
}

// Glues the six-face quasi-octahedron patch along the boundary path a1 a3 a2.
inline FaceList glue_quasi(const FaceList& faces, VertexId a1, VertexId a3, VertexId a2) {
  FaceList out = faces;
  VertexId v1 = fresh(faces), v2 = v1 + 1, v3 = v1 + 2;
  out.insert(out.end(),
             {{v1, v2, v3}, {v1, v2, a3}, {v1, v3, a2}, {v2, v3, a1}, {v1, a2, a3}, {v2, a1, a3}});
  return out;
}

// A random vertex split keeping both halves at degree >= k, or t itself
// when none exists.
inline Triangulation random_k_split(const Triangulation& t, int k, std::mt19937& rng) {
  std::vector<std::pair<VertexId, SplitSpec>> options;
  for (VertexId v : t.vertices())
    for (auto& s : enumerate_splits(t, v)) options.emplace_back(v, s);
  std::shuffle(options.begin(), options.end(), rng);
  for (auto& [v, s] : options) {
    try {
      auto r = split_vertex(t, v, s, k).first;
      if (in_class(r, k == 4 ? DegreeClass::MinDegree4 : DegreeClass::InnerDegree4)) return r;
    } catch (const Error&) {
    }
  }
  return t;
}

}  // namespace testing_support
