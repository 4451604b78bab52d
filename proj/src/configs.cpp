#include "trisurg/configs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "trisurg/surgery.hpp"

namespace trisurg {

namespace {

bool degree_ok(int degree, bool on_boundary, DegreeClass c) {
  switch (c) {
    case DegreeClass::Neither: return true;
    case DegreeClass::InnerDegree4: return degree >= 4 || (degree == 3 && on_boundary);
    case DegreeClass::MinDegree4: return degree >= 4;
  }
  return false;
}

// Builds `faces` and checks it is a surface of the same kind as `t` in class c.
bool result_in_class(const Triangulation& t, const FaceList& faces, DegreeClass c) {
  if (faces.empty()) return false;
  auto r = try_build(faces);
  return r && in_class(*r, c) && classify_surface(*r) == classify_surface(t);
}

FaceList faces_without(const Triangulation& t, const std::vector<VertexId>& gone) {
  FaceList out;
  for (const Face& f : t.faces()) {
    bool hit = false;
    for (VertexId v : gone) hit = hit || contains(f, v);
    if (!hit) out.push_back(f);
  }
  return out;
}

// The unique common neighbor of p and q other than `skip`, or -1.
VertexId unique_common_neighbor(const Triangulation& t, VertexId p, VertexId q, VertexId skip) {
  VertexId found = -1;
  for (VertexId w : t.neighbors(p)) {
    if (w == skip || w == q || !t.adjacent(w, q)) continue;
    if (found != -1) return -1;
    found = w;
  }
  return found;
}

// Rotates (i, j, k) so that index `first` leads, keeping the cyclic order.
std::array<int, 3> order_from(int first) { return {first, (first + 1) % 3, (first + 2) % 3}; }

struct CenterCandidate {
  std::array<VertexId, 3> v;
  std::array<VertexId, 3> a;
};

std::vector<CenterCandidate> center_candidates(const Triangulation& t) {
  std::vector<CenterCandidate> out;
  for (VertexId v1 : t.vertices()) {
    if (t.degree(v1) != 4) continue;
    for (VertexId v2 : t.neighbors(v1)) {
      if (v2 <= v1 || t.degree(v2) != 4) continue;
      for (VertexId v3 : t.neighbors(v2)) {
        if (v3 <= v2 || t.degree(v3) != 4 || !t.adjacent(v1, v3)) continue;
        CenterCandidate c{{v1, v2, v3}, {}};
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          c.a[i] = unique_common_neighbor(t, c.v[(i + 1) % 3], c.v[(i + 2) % 3], c.v[i]);
          ok = c.a[i] != -1;
        }
        if (!ok) continue;
        std::set<VertexId> six(c.v.begin(), c.v.end());
        six.insert(c.a.begin(), c.a.end());
        if (six.size() != 6) continue;
        out.push_back(c);
      }
    }
  }
  return out;
}

bool boundary_is_cycle(const Triangulation& t, VertexId p, VertexId q, VertexId r) {
  return t.num_boundary_edges() == 3 && t.is_boundary_edge(p, q) && t.is_boundary_edge(q, r) &&
         t.is_boundary_edge(r, p);
}

std::optional<OctahedronComponent> as_octahedron(const Triangulation& t, const CenterCandidate& c) {
  const auto& v = c.v;
  const auto& a = c.a;
  for (int i = 0; i < 3; ++i)
    if (!t.adjacent(a[i], a[(i + 1) % 3])) return std::nullopt;
  int nb = 0;
  for (VertexId x : v) nb += t.is_boundary_vertex(x);
  OctahedronComponent o{v, a, 0, false, -1};
  if (nb == 0) {
    o.boundary_case = 1;
    for (int j = 0; j < 3; ++j) {
      VertexId ai = a[(j + 1) % 3], ak = a[(j + 2) % 3];
      if (t.is_boundary_edge(a[j], ai) && t.is_boundary_edge(a[j], ak)) {
        o.external = true;
        o.apex = j;
      }
    }
    return o;
  }
  if (nb == 1) {
    for (int i = 0; i < 3; ++i)
      if (t.is_boundary_vertex(v[i]) && boundary_is_cycle(t, v[i], a[(i + 1) % 3], a[(i + 2) % 3])) {
        o.boundary_case = 2;
        return o;
      }
    return std::nullopt;
  }
  if (nb == 2) {
    for (int k = 0; k < 3; ++k)
      if (!t.is_boundary_vertex(v[k]) && boundary_is_cycle(t, v[(k + 1) % 3], v[(k + 2) % 3], a[k])) {
        o.boundary_case = 3;
        return o;
      }
    return std::nullopt;
  }
  if (boundary_is_cycle(t, v[0], v[1], v[2])) {
    o.boundary_case = 4;
    return o;
  }
  return std::nullopt;
}

std::optional<QuasiOctahedronComponent> as_quasi(const Triangulation& t, const CenterCandidate& c) {
  const auto& v = c.v;
  const auto& a = c.a;
  int missing = -1, present = 0;
  // Edge a_i a_{i+1} is opposite center v_{i+2}.
  for (int i = 0; i < 3; ++i) {
    if (t.adjacent(a[i], a[(i + 1) % 3]))
      ++present;
    else
      missing = (i + 2) % 3;
  }
  int boundary_center = -1, nb = 0;
  for (int i = 0; i < 3; ++i)
    if (t.is_boundary_vertex(v[i])) {
      boundary_center = i;
      ++nb;
    }
  int k;
  int variant;
  if (present == 3) {
    if (nb != 1 || t.has_face(a[0], a[1], a[2])) return std::nullopt;
    k = boundary_center;
    if (t.is_boundary_edge(a[(k + 1) % 3], a[(k + 2) % 3])) return std::nullopt;
    variant = 1;
  } else if (present == 2) {
    k = missing;
    if (!t.is_boundary_vertex(v[k])) return std::nullopt;
    variant = 2;
  } else {
    return std::nullopt;
  }
  auto ord = order_from((k + 1) % 3);  // ord[2] == k
  QuasiOctahedronComponent q;
  q.center = {v[ord[0]], v[ord[1]], v[ord[2]]};
  q.remaining = {a[ord[0]], a[ord[1]], a[ord[2]]};
  if (q.center[0] > q.center[1]) {
    std::swap(q.center[0], q.center[1]);
    std::swap(q.remaining[0], q.remaining[1]);
  }
  q.variant = variant;
  for (const Face& f : q.patch_faces())
    if (!t.has_face(f[0], f[1], f[2])) return std::nullopt;
  if (!t.is_boundary_edge(q.center[2], q.remaining[0]) || !t.is_boundary_edge(q.center[2], q.remaining[1]))
    return std::nullopt;
  return q;
}

std::vector<VertexId> sorted_ids(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<VertexId> find_triodes(const Triangulation& t) {
  std::vector<VertexId> out;
  for (VertexId v : t.vertices())
    if (t.is_boundary_vertex(v) && t.degree(v) == 3) out.push_back(v);
  return out;
}

bool contraction_stays_in(const Triangulation& t, Edge e, DegreeClass c) {
  auto apex = t.apexes(e.u, e.v);
  int merged = t.degree(e.u) + t.degree(e.v) - (t.is_boundary_edge(e.u, e.v) ? 3 : 4);
  if (!degree_ok(merged, t.is_boundary_vertex(e.u) || t.is_boundary_vertex(e.v), c)) return false;
  for (VertexId v : t.vertices()) {
    if (v == e.u || v == e.v) continue;
    int d = t.degree(v);
    if (std::find(apex.begin(), apex.end(), v) != apex.end()) --d;
    if (!degree_ok(d, t.is_boundary_vertex(v), c)) return false;
  }
  return true;
}

bool is_triode_detecting(const Triangulation& t, Edge e) {
  auto w = is_contractible(t, e);
  if (!w.contractible())
    throw Error(ErrorKind::NotContractible, std::to_string(e.u) + "-" + std::to_string(e.v));
  return contraction_stays_in(t, e, DegreeClass::InnerDegree4);
}

// ---------------------------------------------------------------------------

std::vector<VertexId> OctahedronComponent::vertices() const {
  return sorted_ids({center[0], center[1], center[2], remaining[0], remaining[1], remaining[2]});
}

const char* to_string(OctahedronStatus s) {
  switch (s) {
    case OctahedronStatus::Removable: return "removable";
    case OctahedronStatus::Redundant: return "redundant";
    case OctahedronStatus::Neither: return "neither";
  }
  return "?";
}

std::vector<OctahedronComponent> find_octahedra(const Triangulation& t) {
  std::map<std::vector<VertexId>, OctahedronComponent> best;
  for (const auto& c : center_candidates(t)) {
    auto o = as_octahedron(t, c);
    if (!o) continue;
    auto key = o->vertices();
    auto it = best.find(key);
    if (it == best.end() || o->boundary_case > it->second.boundary_case) best[key] = *o;
  }
  std::vector<OctahedronComponent> out;
  for (auto& [key, o] : best) out.push_back(o);
  return out;
}

namespace {

std::optional<CenterCandidate> candidate_at(const Triangulation& t, std::array<VertexId, 3> v) {
  std::sort(v.begin(), v.end());
  for (VertexId x : v)
    if (!t.has_vertex(x) || t.degree(x) != 4) return std::nullopt;
  if (!t.adjacent(v[0], v[1]) || !t.adjacent(v[1], v[2]) || !t.adjacent(v[0], v[2])) return std::nullopt;
  CenterCandidate c{v, {}};
  for (int i = 0; i < 3; ++i) {
    c.a[i] = unique_common_neighbor(t, v[(i + 1) % 3], v[(i + 2) % 3], v[i]);
    if (c.a[i] == -1) return std::nullopt;
  }
  std::set<VertexId> six(c.v.begin(), c.v.end());
  six.insert(c.a.begin(), c.a.end());
  if (six.size() != 6) return std::nullopt;
  return c;
}

}  // namespace

std::optional<OctahedronComponent> octahedron_at(const Triangulation& t, std::array<VertexId, 3> center) {
  auto c = candidate_at(t, center);
  if (!c) return std::nullopt;
  return as_octahedron(t, *c);
}

std::optional<QuasiOctahedronComponent> quasi_octahedron_at(const Triangulation& t,
                                                            std::array<VertexId, 3> center) {
  auto c = candidate_at(t, center);
  if (!c) return std::nullopt;
  return as_quasi(t, *c);
}

FaceList octahedron_removal_faces(const Triangulation& t, const OctahedronComponent& o) {
  FaceList out = faces_without(t, {o.center[0], o.center[1], o.center[2]});
  if (out.empty()) return out;
  if (o.boundary_case == 1) {
    const auto& a = o.remaining;
    if (t.has_face(a[0], a[1], a[2])) return {};
    out.push_back({a[0], a[1], a[2]});
  }
  return out;
}

FaceList redundant_deletion_faces(const Triangulation& t, const OctahedronComponent& o) {
  if (!o.external) return {};
  return faces_without(t, {o.center[0], o.center[1], o.center[2]});
}

OctahedronVerdict octahedron_status(const Triangulation& t, const OctahedronComponent& o, DegreeClass c) {
  if (result_in_class(t, octahedron_removal_faces(t, o), c)) return {OctahedronStatus::Removable, {}};
  if (o.external && result_in_class(t, redundant_deletion_faces(t, o), c))
    return {OctahedronStatus::Redundant, {}};
  OctahedronVerdict v;
  for (VertexId a : sorted_ids({o.remaining.begin(), o.remaining.end()}))
    if (t.degree(a) == 5) {
      v.blocker = a;
      break;
    }
  return v;
}

// ---------------------------------------------------------------------------

std::vector<VertexId> QuasiOctahedronComponent::vertices() const {
  return sorted_ids({center[0], center[1], center[2], remaining[0], remaining[1], remaining[2]});
}

FaceList QuasiOctahedronComponent::patch_faces() const {
  auto [v1, v2, v3] = center;
  auto [a1, a2, a3] = remaining;
  return {{v1, v2, v3}, {v1, v2, a3}, {v1, v3, a2}, {v2, v3, a1}, {v1, a2, a3}, {v2, a1, a3}};
}

const char* to_string(QuasiStatus s) {
  switch (s) {
    case QuasiStatus::RemovableCase1: return "removable-case1";
    case QuasiStatus::RemovableCase2: return "removable-case2";
    case QuasiStatus::NonRemovable: return "non-removable";
  }
  return "?";
}

std::vector<QuasiOctahedronComponent> find_quasi_octahedra(const Triangulation& t) {
  std::map<std::vector<VertexId>, QuasiOctahedronComponent> best;
  for (const auto& c : center_candidates(t)) {
    auto q = as_quasi(t, c);
    if (q) best.emplace(q->vertices(), *q);
  }
  std::vector<QuasiOctahedronComponent> out;
  for (auto& [key, q] : best) out.push_back(q);
  return out;
}

FaceList quasi_removal_faces(const Triangulation& t, const QuasiOctahedronComponent& q, int removal_case) {
  std::set<Face> patch;
  for (const Face& f : q.patch_faces()) patch.insert(sorted(f));
  FaceList out;
  for (const Face& f : t.faces())
    if (!patch.count(sorted(f))) out.push_back(f);
  if (removal_case == 2) {
    if (t.adjacent(q.remaining[0], q.remaining[1])) return {};
    out.push_back({q.remaining[0], q.remaining[1], q.remaining[2]});
  }
  return out;
}

QuasiStatus quasi_status(const Triangulation& t, const QuasiOctahedronComponent& q) {
  if (result_in_class(t, quasi_removal_faces(t, q, 1), DegreeClass::MinDegree4))
    return QuasiStatus::RemovableCase1;
  if (q.variant == 2 && result_in_class(t, quasi_removal_faces(t, q, 2), DegreeClass::MinDegree4))
    return QuasiStatus::RemovableCase2;
  return QuasiStatus::NonRemovable;
}

// ---------------------------------------------------------------------------

std::vector<VertexId> Flag::vertices() const { return sorted_ids({x, rim[0], rim[1], rim[2], rim[3]}); }

FaceList flag_removal_faces(const Triangulation& t, const Flag& f) {
  return faces_without(t, {f.x, f.rim[1], f.rim[2]});
}

std::vector<Flag> find_flags(const Triangulation& t) {
  std::vector<Flag> out;
  for (VertexId x : t.vertices()) {
    if (t.degree(x) != 4 || !t.is_inner_vertex(x)) continue;
    const auto& w = t.link(x).walk;
    if (std::any_of(w.begin(), w.end(), [&](VertexId n) { return t.degree(n) == 4; })) continue;
    std::optional<Flag> best;
    for (int s = 0; s < 4; ++s) {
      for (int dir : {1, 3}) {
        std::array<VertexId, 4> r{w[s], w[(s + dir) % 4], w[(s + 2 * dir) % 4], w[(s + 3 * dir) % 4]};
        if (r[0] > r[3]) continue;
        if (t.degree(r[1]) != 3 || t.degree(r[2]) != 3) continue;
        if (!t.is_boundary_edge(r[0], r[1]) || !t.is_boundary_edge(r[1], r[2]) ||
            !t.is_boundary_edge(r[2], r[3]))
          continue;
        bool whole = t.num_faces() == 4;
        if (t.is_boundary_edge(r[0], r[3]) && !whole) continue;
        Flag f{x, r, false, whole};
        if (!best || f.rim < best->rim) best = f;
      }
    }
    if (!best) continue;
    if (!best->whole_complex)
      best->removable = result_in_class(t, flag_removal_faces(t, *best), DegreeClass::InnerDegree4);
    out.push_back(*best);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<VertexId> NComponent::vertices() const {
  return sorted_ids({first.first, first.second, second.first, second.second});
}

std::vector<NComponent> find_N_components(const Triangulation& t) {
  std::vector<NComponent> out;
  for (Edge xz : t.edges()) {
    if (t.is_boundary_edge(xz.u, xz.v)) continue;
    auto apex = t.apexes(xz.u, xz.v);
    VertexId y = apex[0], v = apex[1];
    for (auto [p, q] : {std::pair{xz.u, xz.v}, std::pair{xz.v, xz.u}}) {
      Edge e1(p, y), e2(q, v);
      bool b1 = t.is_boundary_edge(e1.u, e1.v), b2 = t.is_boundary_edge(e2.u, e2.v);
      if (!b1 && !b2) continue;
      if (!is_contractible(t, e1).contractible() || !is_contractible(t, e2).contractible()) continue;
      NComponent n{xz, {p, y}, {q, v}, false};
      if (b1 && b2) {
        n.contractible = true;
      } else {
        for (VertexId w : {p, q, y, v})
          if (t.is_inner_vertex(w) && t.degree(w) >= 5) n.contractible = true;
      }
      out.push_back(n);
    }
  }
  return out;
}

FaceList double_contraction_faces(const Triangulation& t, const NComponent& n) {
  FaceList faces = identify_vertices(t.faces(), n.first.first, n.first.second);
  return identify_vertices(faces, n.second.first, n.second.second);
}

std::vector<VertexId> MComponent::vertices() const { return sorted_ids({x, a, b, x1, x2}); }

std::vector<Edge> MComponent::edges() const {
  return {Edge(x, a), Edge(x, b), Edge(a, b), Edge(x, x1), Edge(a, x1), Edge(x, x2), Edge(b, x2)};
}

std::vector<MComponent> find_M_components(const Triangulation& t) {
  std::vector<MComponent> out;
  for (VertexId x : t.vertices()) {
    if (t.degree(x) != 4 || !t.is_boundary_vertex(x)) continue;
    auto w = t.link(x).walk;
    if (w.front() > w.back()) std::reverse(w.begin(), w.end());
    MComponent m{x, w[1], w[2], w[0], w[3]};
    if (!t.is_boundary_edge(m.a, m.b)) continue;
    if (!t.has_edge(m.x1, m.x2) || t.is_boundary_edge(m.x1, m.x2)) continue;
    if (!is_cnkc(t, Edge(m.a, m.b), 4)) continue;
    out.push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(FindingKind k) {
  switch (k) {
    case FindingKind::FourContractibleEdge: return "FourContractibleEdge";
    case FindingKind::TriodeDetectingEdge: return "TriodeDetectingEdge";
    case FindingKind::Flag: return "Flag";
    case FindingKind::Octahedron: return "Octahedron";
    case FindingKind::QuasiOctahedron: return "QuasiOctahedron";
    case FindingKind::NComponent: return "NComponent";
    case FindingKind::MComponent: return "MComponent";
    case FindingKind::WholeComplexIsFlag: return "WholeComplexIsFlag";
    case FindingKind::WholeComplexIsOctahedron: return "WholeComplexIsOctahedron";
  }
  return "?";
}

std::string format_finding(const Finding& f) {
  std::ostringstream os;
  os << to_string(f.kind) << " @";
  for (VertexId v : f.witness) os << " " << v;
  os << " d=" << f.distance;
  return os.str();
}

std::vector<Finding> detect_all(const Triangulation& t, DegreeClass c, const std::vector<VertexId>& near) {
  const bool inner_family = c != DegreeClass::MinDegree4;
  const bool min_family = c != DegreeClass::InnerDegree4;
  std::unordered_map<VertexId, int> dist;
  if (!near.empty()) dist = distances_from(t, near);
  std::vector<Finding> out;
  auto add = [&](FindingKind kind, std::vector<VertexId> witness) {
    int d = -1;
    if (!near.empty())
      for (VertexId v : witness) {
        auto it = dist.find(v);
        if (it != dist.end() && (d < 0 || it->second < d)) d = it->second;
      }
    out.push_back({kind, std::move(witness), d});
  };

  for (Edge e : t.edges()) {
    if (!is_contractible(t, e).contractible()) continue;
    if (min_degree_after_contraction(t, e) >= 4)
      add(FindingKind::FourContractibleEdge, {e.u, e.v});
    else if (inner_family && contraction_stays_in(t, e, DegreeClass::InnerDegree4))
      add(FindingKind::TriodeDetectingEdge, {e.u, e.v});
  }
  if (inner_family)
    for (const Flag& f : find_flags(t))
      add(f.whole_complex ? FindingKind::WholeComplexIsFlag : FindingKind::Flag,
          {f.x, f.rim[0], f.rim[1], f.rim[2], f.rim[3]});
  for (const auto& o : find_octahedra(t)) {
    bool whole = inner_family && !min_family && t.num_vertices() == 6 && t.has_boundary();
    add(whole ? FindingKind::WholeComplexIsOctahedron : FindingKind::Octahedron,
        {o.center[0], o.center[1], o.center[2], o.remaining[0], o.remaining[1], o.remaining[2]});
  }
  if (min_family) {
    for (const auto& q : find_quasi_octahedra(t))
      add(FindingKind::QuasiOctahedron,
          {q.center[0], q.center[1], q.center[2], q.remaining[0], q.remaining[1], q.remaining[2]});
    for (const auto& n : find_N_components(t))
      add(FindingKind::NComponent, {n.first.first, n.first.second, n.second.first, n.second.second});
    for (const auto& m : find_M_components(t)) add(FindingKind::MComponent, {m.x, m.a, m.b, m.x1, m.x2});
  }
  std::stable_sort(out.begin(), out.end(), [](const Finding& l, const Finding& r) {
    return std::tie(l.kind, l.witness) < std::tie(r.kind, r.witness);
  });
  return out;
}

Finding locate_near_cn4c(const Triangulation& t, Edge e, DegreeClass c) {
  if (!is_cnkc(t, e, 4))
    throw Error(ErrorKind::NotCnkc, std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " is not contractible-but-not-4-contractible");
  if (!t.has_boundary() || edge_distance_to_boundary(t, e) > 1)
    throw Error(ErrorKind::PreconditionDistance,
                std::to_string(e.u) + "-" + std::to_string(e.v) + " is farther than 1 from the boundary");
  if (c == DegreeClass::Neither) c = class_membership(t);
  if (c == DegreeClass::Neither) throw Error(ErrorKind::ClassViolation, "input lies in neither class");
  std::optional<Finding> best;
  for (Finding& f : detect_all(t, c, {e.u, e.v})) {
    if (f.distance < 0 || f.distance > 1) continue;
    if (!best || std::tie(f.distance, f.kind, f.witness) < std::tie(best->distance, best->kind, best->witness))
      best = std::move(f);
  }
  if (!best)
    throw Error(ErrorKind::NoFinding,
                "no configuration within distance 1 of " + std::to_string(e.u) + "-" + std::to_string(e.v));
  return *best;
}

}  // namespace trisurg
