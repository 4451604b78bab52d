#include <algorithm>
#include <set>

#include "trisurg/reduce.hpp"

namespace trisurg {

namespace {

[[noreturn]] void fail(MoveKind kind, const std::string& why) {
  throw Error(ErrorKind::SitePreconditionFailed, std::string(to_string(kind)) + ": " + why);
}

void need_size(MoveKind kind, const std::vector<VertexId>& site, std::size_t n) {
  if (site.size() != n) fail(kind, "expected " + std::to_string(n) + " site ids");
}

std::vector<VertexId> fresh_ids(const Triangulation& t, int n) {
  std::vector<VertexId> out;
  for (VertexId next = 0; static_cast<int>(out.size()) < n; ++next)
    if (!t.has_vertex(next)) out.push_back(next);
  return out;
}

Step finish(const Triangulation& t, MoveKind kind, std::vector<VertexId> site, const FaceList& faces,
            DegreeClass c) {
  if (faces.empty()) fail(kind, "nothing would remain");
  Move m = make_move(kind, std::move(site), t, faces);
  std::optional<Triangulation> r;
  try {
    r.emplace(apply(t, m));
  } catch (const Error& e) {
    fail(kind, std::string("invalid result: ") + e.what());
  }
  if (classify_surface(*r) != classify_surface(t)) fail(kind, "result is a different surface");
  if (!in_class(*r, c))
    throw Error(ErrorKind::ClassViolation, std::string(to_string(kind)) + ": result leaves " + to_string(c));
  return {std::move(*r), std::move(m)};
}

// The seven faces of an octahedron core sitting on a1a2a3, without that face.
FaceList octahedron_core(std::array<VertexId, 3> v, std::array<VertexId, 3> a) {
  return {{v[0], v[1], v[2]}, {v[0], v[1], a[2]}, {v[1], v[2], a[0]}, {v[2], v[0], a[1]},
          {v[0], a[1], a[2]}, {v[1], a[2], a[0]}, {v[2], a[0], a[1]}};
}

FaceList replace_face(const FaceList& faces, Face old, const FaceList& add) {
  FaceList out;
  for (const Face& f : faces)
    if (sorted(f) != sorted(old)) out.push_back(f);
  out.insert(out.end(), add.begin(), add.end());
  return out;
}

std::array<VertexId, 3> center_of(const std::vector<VertexId>& site) { return {site[0], site[1], site[2]}; }

// Degree of v read straight off a face list, to reject candidates before building.
int face_degree(const FaceList& faces, VertexId v) {
  std::vector<VertexId> nb;
  for (const Face& f : faces)
    if (contains(f, v))
      for (VertexId w : f)
        if (w != v) nb.push_back(w);
  std::sort(nb.begin(), nb.end());
  return static_cast<int>(std::unique(nb.begin(), nb.end()) - nb.begin());
}

template <class F>
bool succeeds(F&& f) {
  try {
    f();
    return true;
  } catch (const Error&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Reductions

Step do_R1(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::R1, site, 2);
  if (!t.has_edge(site[0], site[1])) fail(MoveKind::R1, "not an edge");
  Edge e(site[0], site[1]);
  auto w = is_contractible(t, e);
  if (!w.contractible()) fail(MoveKind::R1, std::string("edge blocked by ") + to_string(w.blocked_by));
  bool ok = c == DegreeClass::MinDegree4 ? min_degree_after_contraction(t, e) >= 4
                                         : contraction_stays_in(t, e, c);
  if (!ok) throw Error(ErrorKind::ClassViolation, std::string("R1: contraction leaves ") + to_string(c));
  return finish(t, MoveKind::R1, site, identify_vertices(t.faces(), site[0], site[1]), c);
}

Step do_R2(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  if (site.size() != 3 && site.size() != 4) fail(MoveKind::R2, "expected 3 or 4 site ids");
  auto o = octahedron_at(t, center_of(site));
  if (!o) fail(MoveKind::R2, "no octahedron component at the center");
  if (site.size() == 3) return finish(t, MoveKind::R2, site, octahedron_removal_faces(t, *o), c);
  if (!o->external || o->remaining[o->apex] != site[3]) fail(MoveKind::R2, "not an external apex");
  return finish(t, MoveKind::R2, site, redundant_deletion_faces(t, *o), c);
}

Step do_R3(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::R3, site, 4);
  auto o = octahedron_at(t, center_of(site));
  if (!o || !o->external) fail(MoveKind::R3, "no external octahedron at the center");
  int j = o->apex;
  VertexId ai = o->remaining[(j + 1) % 3], ak = o->remaining[(j + 2) % 3];
  if (t.degree(o->remaining[j]) != 4 || (t.degree(ai) != 6 && t.degree(ak) != 6))
    fail(MoveKind::R3, "degree condition fails");
  VertexId v = site[3];
  if (v == o->center[j] || !t.has_face(ai, ak, v)) fail(MoveKind::R3, "no face a1a2v");
  auto ids = fresh_ids(t, 3);
  FaceList faces = redundant_deletion_faces(t, *o);
  faces = replace_face(faces, {ai, ak, v}, octahedron_core({ids[0], ids[1], ids[2]}, {ai, ak, v}));
  return finish(t, MoveKind::R3, site, faces, c);
}

Step do_R4(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::R4, site, 3);
  auto q = quasi_octahedron_at(t, center_of(site));
  if (!q) fail(MoveKind::R4, "no quasi-octahedron component at the center");
  auto status = quasi_status(t, *q);
  if (status == QuasiStatus::NonRemovable) fail(MoveKind::R4, "quasi-octahedron is not removable");
  int which = status == QuasiStatus::RemovableCase1 ? 1 : 2;
  return finish(t, MoveKind::R4, site, quasi_removal_faces(t, *q, which), c);
}

Step do_R5(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::R5, site, 4);
  auto o = octahedron_at(t, center_of(site));
  if (!o || o->boundary_case != 1 || o->external) fail(MoveKind::R5, "no interior octahedron at the center");
  const auto six = o->vertices();
  std::vector<Edge> on_boundary;
  for (VertexId p : six)
    for (VertexId q : six)
      if (p < q && t.has_edge(p, q) && t.is_boundary_edge(p, q)) on_boundary.emplace_back(p, q);
  VertexId a2 = site[3];
  const auto& a = o->remaining;
  int p2 = static_cast<int>(std::find(a.begin(), a.end(), a2) - a.begin());
  if (p2 == 3 || on_boundary.size() != 1 || !on_boundary[0].contains(a2))
    fail(MoveKind::R5, "a2 is not on the only boundary edge of the component");
  VertexId a1 = on_boundary[0].other(a2);
  int p1 = static_cast<int>(std::find(a.begin(), a.end(), a1) - a.begin());
  if (p1 == 3) fail(MoveKind::R5, "boundary edge is not an a-edge");
  if (t.degree(a2) != 5) fail(MoveKind::R5, "deg(a2) != 5");
  VertexId v = -1;
  for (VertexId w : t.neighbors(a2))
    if (!std::binary_search(six.begin(), six.end(), w)) v = w;
  VertexId vk = o->center[3 - p1 - p2];
  FaceList faces = replace_face(t.faces(), {vk, a1, a2}, {});
  faces = identify_vertices(faces, v, a2);
  return finish(t, MoveKind::R5, site, faces, c);
}

Step do_R6(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::R6, site, 4);
  for (const auto& n : find_N_components(t)) {
    if (n.first != std::pair{site[0], site[1]} || n.second != std::pair{site[2], site[3]}) continue;
    if (!n.contractible) fail(MoveKind::R6, "N-component is not contractible");
    return finish(t, MoveKind::R6, site, double_contraction_faces(t, n), c);
  }
  fail(MoveKind::R6, "no N-component at the site");
}

Step do_RF(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::RF, site, 1);
  for (const auto& f : find_flags(t)) {
    if (f.x != site[0]) continue;
    if (f.whole_complex) fail(MoveKind::RF, "the flag is the whole complex");
    return finish(t, MoveKind::RF, site, flag_removal_faces(t, f), c);
  }
  fail(MoveKind::RF, "no flag centered at the site");
}

Step do_flip(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::Flip, site, 2);
  if (!t.has_edge(site[0], site[1])) fail(MoveKind::Flip, "not an edge");
  auto step = diagonal_flip(t, Edge(site[0], site[1]));
  if (!in_class(step.first, c)) throw Error(ErrorKind::ClassViolation, std::string("Flip: result leaves ") + to_string(c));
  return step;
}

// ---------------------------------------------------------------------------
// Expansions

Step do_E1(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  if (site.size() < 2 || site.size() > 3) fail(MoveKind::E1, "expected a vertex and one or two pivots");
  if (!t.has_vertex(site[0])) fail(MoveKind::E1, "unknown vertex");
  SplitSpec spec{{site.begin() + 1, site.end()}};
  VertexId n = t.smallest_unused_id();
  FaceList faces;
  try {
    faces = split_faces(t, site[0], spec, n);
  } catch (const Error& e) {
    fail(MoveKind::E1, e.what());
  }
  std::vector<VertexId> recorded{site[0], n};
  recorded.insert(recorded.end(), site.begin() + 1, site.end());
  return finish(t, MoveKind::E1, recorded, faces, c);
}

Step do_E2(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  if (site.size() == 3) {
    if (!t.has_face(site[0], site[1], site[2])) fail(MoveKind::E2, "not a face");
    auto ids = fresh_ids(t, 3);
    Face a{site[0], site[1], site[2]};
    return finish(t, MoveKind::E2, site,
                  replace_face(t.faces(), a, octahedron_core({ids[0], ids[1], ids[2]}, a)), c);
  }
  need_size(MoveKind::E2, site, 2);
  if (!t.has_edge(site[0], site[1]) || !t.is_boundary_edge(site[0], site[1]))
    fail(MoveKind::E2, "not a boundary edge");
  auto ids = fresh_ids(t, 4);
  FaceList faces = t.faces();
  auto core = octahedron_core({ids[1], ids[2], ids[3]}, {site[0], site[1], ids[0]});
  faces.insert(faces.end(), core.begin(), core.end());
  return finish(t, MoveKind::E2, site, faces, c);
}

Step do_E3(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::E3, site, 5);
  auto o = octahedron_at(t, center_of(site));
  if (!o || o->boundary_case != 1 || o->external) fail(MoveKind::E3, "no interior octahedron at the center");
  VertexId p = site[3], q = site[4];
  const auto& a = o->remaining;
  if (std::count(a.begin(), a.end(), p) != 1 || std::count(a.begin(), a.end(), q) != 1 || p == q ||
      !t.is_boundary_edge(p, q))
    fail(MoveKind::E3, "pq is not a boundary a-edge");
  auto ids = fresh_ids(t, 4);
  FaceList faces = octahedron_removal_faces(t, *o);
  auto core = octahedron_core({ids[1], ids[2], ids[3]}, {p, q, ids[0]});
  faces.insert(faces.end(), core.begin(), core.end());
  auto step = finish(t, MoveKind::E3, site, faces, c);
  if (step.first.degree(p) != 6 && step.first.degree(q) != 6) fail(MoveKind::E3, "result cannot be folded back");
  return step;
}

Step do_E4(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::E4, site, 3);
  VertexId a1 = site[0], a2 = site[1], a3 = site[2];
  auto ids = fresh_ids(t, 3);
  QuasiOctahedronComponent patch{{ids[0], ids[1], ids[2]}, {a1, a2, a3}, 1};
  FaceList faces;
  if (t.has_face(a1, a2, a3) && t.is_boundary_edge(a1, a2)) {
    faces = replace_face(t.faces(), {a1, a2, a3}, patch.patch_faces());
  } else if (t.has_edge(a1, a3) && t.is_boundary_edge(a1, a3) && t.has_edge(a2, a3) &&
             t.is_boundary_edge(a2, a3)) {
    faces = t.faces();
    auto add = patch.patch_faces();
    faces.insert(faces.end(), add.begin(), add.end());
  } else {
    fail(MoveKind::E4, "site is neither a boundary face nor a boundary path a1 a3 a2");
  }
  auto step = finish(t, MoveKind::E4, site, faces, c);
  auto q = quasi_octahedron_at(step.first, patch.center);
  if (!q || quasi_status(step.first, *q) == QuasiStatus::NonRemovable)
    fail(MoveKind::E4, "result carries no removable quasi-octahedron");
  return step;
}

Step do_E5(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::E5, site, 2);
  VertexId v3 = site[0], w = site[1];
  if (!t.has_vertex(v3) || !t.is_boundary_vertex(v3) || t.degree(v3) != 4) fail(MoveKind::E5, "v3 must be a 4-valent boundary vertex");
  if (!t.has_edge(v3, w) || !t.is_boundary_edge(v3, w)) fail(MoveKind::E5, "v3w is not a boundary edge");
  auto lv = t.link(v3).walk;
  if (lv.front() == w) std::reverse(lv.begin(), lv.end());
  auto lw = t.link(w).walk;
  if (lw.back() == v3) std::reverse(lw.begin(), lw.end());
  if (lw.size() < 4) fail(MoveKind::E5, "w has too few neighbors");
  VertexId a1 = lv[0], s1 = lw[1], s2 = lw[2];
  if (lv[2] != s1) fail(MoveKind::E5, "v3 and w share no center");
  VertexId n = fresh_ids(t, 1)[0];
  FaceList faces;
  for (Face f : t.faces()) {
    if (contains(f, w) && ((contains(f, v3) && contains(f, s1)) || (contains(f, s1) && contains(f, s2))))
      for (VertexId& x : f)
        if (x == w) x = n;
    faces.push_back(f);
  }
  faces.push_back({w, n, s2});
  faces.push_back({a1, n, v3});
  auto step = finish(t, MoveKind::E5, site, faces, c);
  std::array<VertexId, 3> center{lv[1], lv[2], v3};
  std::sort(center.begin(), center.end());
  if (!succeeds([&] { apply_R(step.first, MoveKind::R5, {center[0], center[1], center[2], n}, c); }))
    fail(MoveKind::E5, "result is not a boundary octahedron replacement");
  return step;
}

SplitSpec pivot_spec(VertexId p, VertexId q) { return p == q ? SplitSpec{{p}} : SplitSpec{{p, q}}; }

// Second half of E6 on t1, the result of splitting x into x and y. Returns
// the reason on cheap rejections so the enumeration avoids exceptions.
std::optional<Step> e6_second(const Triangulation& t, const Triangulation& t1, VertexId x, VertexId y,
                              const std::vector<VertexId>& site, DegreeClass c, const char** why) {
  VertexId z = site[3];
  VertexId h = site[4] == x || site[5] == x ? x : y;
  if (site[4] != h && site[5] != h) return *why = "z must split at x or at the new vertex", std::nullopt;
  VertexId v = t1.smallest_unused_id();
  FaceList faces;
  try {
    faces = split_faces(t1, z, pivot_spec(site[4], site[5]), v);
  } catch (const Error&) {
    return *why = "bad second split", std::nullopt;
  }
  // Only the four split vertices can lose degree.
  const std::array<VertexId, 4> split{x, y, z, v};
  if (c == DegreeClass::MinDegree4 &&
      std::any_of(split.begin(), split.end(), [&](VertexId w) { return face_degree(faces, w) < 4; }))
    return *why = "a vertex ends below degree 4", std::nullopt;
  VertexId other = h == x ? y : x;
  auto has = [&](Face f) {
    f = sorted(f);
    return std::any_of(faces.begin(), faces.end(), [&](const Face& g) { return sorted(g) == f; });
  };
  if (!has({h, z, other}) || !has({h, z, v})) return *why = "split does not produce an N-component", std::nullopt;
  auto on_boundary = [&](VertexId p, VertexId q) {
    return std::count_if(faces.begin(), faces.end(), [&](const Face& f) { return contains(f, p) && contains(f, q); }) == 1;
  };
  if (!on_boundary(h, other) && !on_boundary(z, v)) return *why = "neither N edge is on the boundary", std::nullopt;
  auto step = finish(t, MoveKind::E6, {h, other, z, v}, faces, c);
  if (!succeeds([&] { apply_R(step.first, MoveKind::R6, {h, other, z, v}, c); }))
    return *why = "result carries no contractible N-component", std::nullopt;
  return step;
}

Step do_E6(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::E6, site, 6);
  VertexId x = site[0], z = site[3];
  if (!t.has_edge(x, z) || (site[1] != z && site[2] != z)) fail(MoveKind::E6, "x must split at z");
  VertexId y = t.smallest_unused_id();
  std::optional<Triangulation> t1;
  try {
    t1.emplace(Triangulation::build(split_faces(t, x, pivot_spec(site[1], site[2]), y)));
  } catch (const Error& e) {
    fail(MoveKind::E6, e.what());
  }
  const char* why = "";
  auto step = e6_second(t, *t1, x, y, site, c, &why);
  if (!step) fail(MoveKind::E6, why);
  return std::move(*step);
}

Step do_EF(const Triangulation& t, const std::vector<VertexId>& site, DegreeClass c) {
  need_size(MoveKind::EF, site, 2);
  VertexId x1 = site[0], x2 = site[1];
  if (!t.has_edge(x1, x2) || !t.is_boundary_edge(x1, x2)) fail(MoveKind::EF, "not a boundary edge");
  auto ids = fresh_ids(t, 3);
  VertexId x = ids[0], a = ids[1], b = ids[2];
  FaceList faces = t.faces();
  faces.insert(faces.end(), {{x, x1, a}, {x, a, b}, {x, b, x2}, {x, x2, x1}});
  auto step = finish(t, MoveKind::EF, site, faces, c);
  auto flags = find_flags(step.first);
  if (std::none_of(flags.begin(), flags.end(), [&](const Flag& f) { return f.x == x && f.removable; }))
    fail(MoveKind::EF, "added flag is not removable");
  return step;
}

}  // namespace

Step apply_R(const Triangulation& t, MoveKind kind, const std::vector<VertexId>& site, DegreeClass c) {
  switch (kind) {
    case MoveKind::R1: return do_R1(t, site, c);
    case MoveKind::R2: return do_R2(t, site, c);
    case MoveKind::R3: return do_R3(t, site, c);
    case MoveKind::R4: return do_R4(t, site, c);
    case MoveKind::R5: return do_R5(t, site, c);
    case MoveKind::R6: return do_R6(t, site, c);
    case MoveKind::RF: return do_RF(t, site, c);
    case MoveKind::Flip: return do_flip(t, site, c);
    default: break;
  }
  fail(kind, "not a reduction");
}

Step apply_E(const Triangulation& t, MoveKind kind, const std::vector<VertexId>& site, DegreeClass c) {
  switch (kind) {
    case MoveKind::E1: return do_E1(t, site, c);
    case MoveKind::E2: return do_E2(t, site, c);
    case MoveKind::E3: return do_E3(t, site, c);
    case MoveKind::E4: return do_E4(t, site, c);
    case MoveKind::E5: return do_E5(t, site, c);
    case MoveKind::E6: return do_E6(t, site, c);
    case MoveKind::EF: return do_EF(t, site, c);
    case MoveKind::Flip: return do_flip(t, site, c);
    default: break;
  }
  fail(kind, "not an expansion");
}

// ---------------------------------------------------------------------------

std::vector<Step> available_reductions(const Triangulation& t, DegreeClass c, bool first_only) {
  std::vector<Step> out;
  auto attempt = [&](MoveKind kind, std::vector<VertexId> site) {
    try {
      out.push_back(apply_R(t, kind, site, c));
    } catch (const Error&) {
      return false;
    }
    return first_only;
  };

  if (c == DegreeClass::MinDegree4) {
    for (Edge e : t.edges())
      if (is_contractible(t, e).contractible() && min_degree_after_contraction(t, e) >= 4)
        if (attempt(MoveKind::R1, {e.u, e.v})) return out;
    const auto octs = find_octahedra(t);
    for (const auto& o : octs) {
      auto st = octahedron_status(t, o, c).status;
      if (st == OctahedronStatus::Removable &&
          attempt(MoveKind::R2, {o.center[0], o.center[1], o.center[2]}))
        return out;
      if (st == OctahedronStatus::Redundant &&
          attempt(MoveKind::R2, {o.center[0], o.center[1], o.center[2], o.remaining[o.apex]}))
        return out;
    }
    for (const auto& o : octs) {
      if (o.boundary_case != 1 || o.external) continue;
      std::array<VertexId, 3> a = o.remaining;
      std::sort(a.begin(), a.end());
      for (VertexId a2 : a)
        if (t.degree(a2) == 5 && t.is_boundary_vertex(a2) &&
            attempt(MoveKind::R5, {o.center[0], o.center[1], o.center[2], a2}))
          return out;
    }
    for (const auto& o : octs) {
      if (!o.external) continue;
      VertexId ai = o.remaining[(o.apex + 1) % 3], ak = o.remaining[(o.apex + 2) % 3];
      for (VertexId v : t.apexes(ai, ak))
        if (v != o.center[o.apex] && attempt(MoveKind::R3, {o.center[0], o.center[1], o.center[2], v}))
          return out;
    }
    for (const auto& q : find_quasi_octahedra(t)) {
      std::array<VertexId, 3> cen = q.center;
      std::sort(cen.begin(), cen.end());
      if (attempt(MoveKind::R4, {cen[0], cen[1], cen[2]})) return out;
    }
    for (const auto& n : find_N_components(t))
      if (n.contractible &&
          attempt(MoveKind::R6, {n.first.first, n.first.second, n.second.first, n.second.second}))
        return out;
  } else if (c == DegreeClass::InnerDegree4) {
    std::vector<Edge> weaker;
    for (Edge e : t.edges()) {
      if (!is_contractible(t, e).contractible()) continue;
      if (min_degree_after_contraction(t, e) >= 4) {
        if (attempt(MoveKind::R1, {e.u, e.v})) return out;
      } else if (contraction_stays_in(t, e, c)) {
        weaker.push_back(e);
      }
    }
    for (Edge e : weaker)
      if (attempt(MoveKind::R1, {e.u, e.v})) return out;
    for (const auto& f : find_flags(t))
      if (f.removable && attempt(MoveKind::RF, {f.x})) return out;
    for (const auto& o : find_octahedra(t)) {
      auto st = octahedron_status(t, o, c).status;
      if (st == OctahedronStatus::Removable &&
          attempt(MoveKind::R2, {o.center[0], o.center[1], o.center[2]}))
        return out;
      if (st == OctahedronStatus::Redundant &&
          attempt(MoveKind::R2, {o.center[0], o.center[1], o.center[2], o.remaining[o.apex]}))
        return out;
    }
  }
  return out;
}

std::optional<Step> first_reduction(const Triangulation& t, DegreeClass c) {
  auto all = available_reductions(t, c, true);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<Step> available_expansions(const Triangulation& t, DegreeClass c) {
  std::vector<Step> out;
  auto attempt = [&](MoveKind kind, std::vector<VertexId> site) {
    try {
      out.push_back(apply_E(t, kind, site, c));
    } catch (const Error&) {
    }
  };
  if (c == DegreeClass::Neither) return out;

  for (VertexId v : t.vertices())
    for (const auto& spec : enumerate_splits(t, v)) {
      std::vector<VertexId> site{v};
      site.insert(site.end(), spec.pivots.begin(), spec.pivots.end());
      attempt(MoveKind::E1, site);
    }
  for (const Face& f : t.faces()) attempt(MoveKind::E2, {f[0], f[1], f[2]});
  const auto bedges = t.boundary_edges();
  for (Edge e : bedges) attempt(MoveKind::E2, {e.u, e.v});

  if (c == DegreeClass::InnerDegree4) {
    for (Edge e : bedges) attempt(MoveKind::EF, {e.u, e.v});
    return out;
  }

  for (const auto& o : find_octahedra(t)) {
    if (o.boundary_case != 1 || o.external) continue;
    for (Edge e : bedges) {
      const auto& a = o.remaining;
      if (std::count(a.begin(), a.end(), e.u) && std::count(a.begin(), a.end(), e.v))
        attempt(MoveKind::E3, {o.center[0], o.center[1], o.center[2], e.u, e.v});
    }
  }
  for (VertexId a3 : t.boundary_vertices()) {
    const auto& w = t.link(a3).walk;
    attempt(MoveKind::E4, {w.front(), w.back(), a3});
  }
  for (Edge e : bedges) {
    for (VertexId a3 : t.apexes(e.u, e.v)) attempt(MoveKind::E4, {e.u, e.v, a3});
  }
  for (VertexId v3 : t.boundary_vertices()) {
    if (t.degree(v3) != 4) continue;
    const auto& w = t.link(v3).walk;
    attempt(MoveKind::E5, {v3, w.front()});
    attempt(MoveKind::E5, {v3, w.back()});
  }
  // Double splittings: one of the two new edges must end up on the boundary,
  // so the first split is a boundary split of x that has z as a pivot.
  for (VertexId x : t.boundary_vertices()) {
    for (const auto& sx : enumerate_splits(t, x)) {
      VertexId p0 = sx.pivots[0], p1 = sx.pivots.size() > 1 ? sx.pivots[1] : sx.pivots[0];
      VertexId y = t.smallest_unused_id();
      auto t1 = try_build(split_faces(t, x, sx, y));
      if (!t1) continue;
      auto try_e6 = [&](std::vector<VertexId> site) {
        const char* why = "";
        try {
          if (auto step = e6_second(t, *t1, x, y, site, c, &why)) out.push_back(std::move(*step));
        } catch (const Error&) {
        }
      };
      for (VertexId z : sx.pivots) {
        if (!t1->adjacent(y, z)) continue;
        for (const auto& sz : enumerate_splits(*t1, z)) {
          VertexId q0 = sz.pivots[0], q1 = sz.pivots.size() > 1 ? sz.pivots[1] : sz.pivots[0];
          bool hits = q0 == x || q1 == x || q0 == y || q1 == y;
          if (!hits) continue;
          try_e6({x, p0, p1, z, q0, q1});
          if (sz.pivots.size() == 2 && t1->is_inner_vertex(z)) try_e6({x, p0, p1, z, q1, q0});
        }
      }
    }
  }
  return out;
}

}  // namespace trisurg
