#include "trisurg/complex.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_set>

namespace trisurg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidFace: return "InvalidFace";
    case ErrorKind::MultiEdgeViolation: return "MultiEdgeViolation";
    case ErrorKind::TwoFacesShareTwoEdges: return "TwoFacesShareTwoEdges";
    case ErrorKind::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorKind::DisconnectedComplex: return "DisconnectedComplex";
    case ErrorKind::BadVertexLink: return "BadVertexLink";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::EmptyBoundary: return "EmptyBoundary";
    case ErrorKind::NotContractible: return "NotContractible";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::DegreeViolation: return "DegreeViolation";
    case ErrorKind::FlipCreatesMultiEdge: return "FlipCreatesMultiEdge";
    case ErrorKind::BoundaryEdgeFlip: return "BoundaryEdgeFlip";
    case ErrorKind::SitePreconditionFailed: return "SitePreconditionFailed";
    case ErrorKind::ClassViolation: return "ClassViolation";
    case ErrorKind::NonPuncturedInput: return "NonPuncturedInput";
    case ErrorKind::NotCnkc: return "NotCnkc";
    case ErrorKind::PreconditionDistance: return "PreconditionDistance";
    case ErrorKind::NoFinding: return "NoFinding";
    case ErrorKind::MixedSurfaces: return "MixedSurfaces";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MoveMismatch: return "MoveMismatch";
  }
  return "Unknown";
}

const char* to_string(DegreeClass c) {
  switch (c) {
    case DegreeClass::Neither: return "neither";
    case DegreeClass::InnerDegree4: return "F0(4)";
    case DegreeClass::MinDegree4: return "F(4)";
  }
  return "?";
}

std::string SurfaceClass::to_string() const {
  std::ostringstream os;
  os << "chi=" << euler_characteristic << " " << (orientable ? "orientable" : "non-orientable")
     << " boundary=" << boundary_components;
  return os.str();
}

namespace {

std::string face_text(const Face& f) {
  std::ostringstream os;
  os << f[0] << " " << f[1] << " " << f[2];
  return os.str();
}

// Orders the link edges of one vertex into a single path or cycle.
std::optional<VertexLink> order_link(VertexId center,
                                     const std::vector<std::pair<VertexId, VertexId>>& link_edges) {
  std::unordered_map<VertexId, std::vector<VertexId>> adj;
  for (auto [a, b] : link_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<VertexId> ends;
  for (auto& [w, ns] : adj) {
    if (ns.size() > 2) return std::nullopt;
    if (ns.size() == 1) ends.push_back(w);
  }
  VertexLink link;
  VertexId start;
  if (ends.empty()) {
    link.cyclic = true;
    start = adj.begin()->first;
    for (auto& [w, ns] : adj) start = std::min(start, w);
  } else if (ends.size() == 2) {
    link.cyclic = false;
    start = std::min(ends[0], ends[1]);
  } else {
    return std::nullopt;
  }
  VertexId prev = -1;
  VertexId cur = start;
  while (true) {
    link.walk.push_back(cur);
    const auto& ns = adj[cur];
    VertexId next = -1;
    if (prev == -1) {
      next = ns.size() == 1 ? ns[0] : std::min(ns[0], ns[1]);
    } else {
      for (VertexId n : ns)
        if (n != prev) next = n;
      if (ns.size() == 2 && ns[0] == ns[1]) next = -1;
    }
    if (next == -1 || next == start) break;
    if (link.walk.size() > adj.size()) return std::nullopt;
    prev = cur;
    cur = next;
  }
  if (link.walk.size() != adj.size()) return std::nullopt;
  (void)center;
  return link;
}

}  // namespace

Triangulation Triangulation::build(FaceList faces) {
  if (faces.empty()) throw Error(ErrorKind::EmptyInput, "no faces");
  Triangulation t;
  t.faces_ = std::move(faces);

  std::set<VertexId> ids;
  std::unordered_set<std::uint64_t> seen_faces;
  for (const Face& f : t.faces_) {
    if (f[0] < 0 || f[1] < 0 || f[2] < 0 || f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
      throw Error(ErrorKind::InvalidFace, face_text(f));
    Face s = sorted(f);
    if (s[2] >= (1 << 20)) throw Error(ErrorKind::InvalidFace, "vertex id too large: " + face_text(f));
    std::uint64_t key = (static_cast<std::uint64_t>(s[0]) << 40) |
                        (static_cast<std::uint64_t>(s[1]) << 20) | static_cast<std::uint64_t>(s[2]);
    if (!seen_faces.insert(key).second)
      throw Error(ErrorKind::TwoFacesShareTwoEdges, "repeated face " + face_text(f));
    ids.insert(f.begin(), f.end());
  }
  t.vertices_.assign(ids.begin(), ids.end());
  for (std::size_t i = 0; i < t.vertices_.size(); ++i) t.index_[t.vertices_[i]] = static_cast<int>(i);

  for (int fi = 0; fi < static_cast<int>(t.faces_.size()); ++fi) {
    const Face& f = t.faces_[fi];
    for (int k = 0; k < 3; ++k) {
      Edge e(f[k], f[(k + 1) % 3]);
      EdgeData& d = t.edge_map_[e.key()];
      if (d.f0 == -1) {
        d.f0 = fi;
      } else if (d.f1 == -1) {
        d.f1 = fi;
      } else {
        std::ostringstream os;
        os << "edge " << e.u << "-" << e.v << " lies in 3 or more faces";
        throw Error(ErrorKind::NonManifoldEdge, os.str());
      }
    }
  }
  for (auto& [key, d] : t.edge_map_) {
    t.edges_.emplace_back(static_cast<VertexId>(key >> 32), static_cast<VertexId>(key & 0xffffffffu));
    if (d.f1 == -1) ++t.boundary_edge_count_;
  }
  std::sort(t.edges_.begin(), t.edges_.end());

  // Connectivity over the vertex graph.
  {
    std::unordered_map<VertexId, std::vector<VertexId>> adj;
    for (const Edge& e : t.edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::unordered_set<VertexId> reached{t.vertices_.front()};
    std::deque<VertexId> queue{t.vertices_.front()};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : adj[v])
        if (reached.insert(w).second) queue.push_back(w);
    }
    if (reached.size() != t.vertices_.size())
      throw Error(ErrorKind::DisconnectedComplex,
                  std::to_string(reached.size()) + " of " + std::to_string(t.vertices_.size()) +
                      " vertices reachable");
  }

  std::vector<std::vector<std::pair<VertexId, VertexId>>> link_edges(t.vertices_.size());
  for (const Face& f : t.faces_) {
    for (int k = 0; k < 3; ++k)
      link_edges[t.index_[f[k]]].emplace_back(f[(k + 1) % 3], f[(k + 2) % 3]);
  }
  t.data_.resize(t.vertices_.size());
  for (std::size_t i = 0; i < t.vertices_.size(); ++i) {
    auto link = order_link(t.vertices_[i], link_edges[i]);
    if (!link) throw Error(ErrorKind::BadVertexLink, "vertex " + std::to_string(t.vertices_[i]));
    t.data_[i].link = std::move(*link);
  }
  return t;
}

std::optional<Triangulation> try_build(FaceList faces, Error* error) {
  try {
    return Triangulation::build(std::move(faces));
  } catch (const Error& e) {
    if (error) *error = e;
    return std::nullopt;
  }
}

VertexId Triangulation::smallest_unused_id() const {
  VertexId next = 0;
  for (VertexId v : vertices_) {
    if (v != next) break;
    ++next;
  }
  return next;
}

const Triangulation::VertexData& Triangulation::vertex(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw Error(ErrorKind::UnknownVertex, std::to_string(v));
  return data_[it->second];
}

const Triangulation::EdgeData* Triangulation::find_edge(VertexId a, VertexId b) const {
  if (a == b) return nullptr;
  auto it = edge_map_.find(Edge(a, b).key());
  return it == edge_map_.end() ? nullptr : &it->second;
}

bool Triangulation::has_edge(VertexId a, VertexId b) const { return find_edge(a, b) != nullptr; }

bool Triangulation::has_face(VertexId a, VertexId b, VertexId c) const {
  const EdgeData* d = find_edge(a, b);
  if (!d) return false;
  for (int f : {d->f0, d->f1})
    if (f >= 0 && contains(faces_[f], c)) return true;
  return false;
}

bool Triangulation::is_boundary_edge(VertexId a, VertexId b) const {
  const EdgeData* d = find_edge(a, b);
  return d && d->f1 == -1;
}

std::vector<int> Triangulation::edge_faces(VertexId a, VertexId b) const {
  const EdgeData* d = find_edge(a, b);
  if (!d) throw Error(ErrorKind::UnknownEdge, std::to_string(a) + "-" + std::to_string(b));
  std::vector<int> out{d->f0};
  if (d->f1 >= 0) out.push_back(d->f1);
  return out;
}

std::vector<VertexId> Triangulation::apexes(VertexId a, VertexId b) const {
  std::vector<VertexId> out;
  for (int f : edge_faces(a, b))
    for (VertexId x : faces_[f])
      if (x != a && x != b) out.push_back(x);
  return out;
}

int Triangulation::face_across(int f, VertexId a, VertexId b) const {
  const EdgeData* d = find_edge(a, b);
  if (!d) return -1;
  return d->f0 == f ? d->f1 : d->f0;
}

std::vector<Edge> Triangulation::boundary_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (is_boundary_edge(e.u, e.v)) out.push_back(e);
  return out;
}

std::vector<VertexId> Triangulation::boundary_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : vertices_)
    if (is_boundary_vertex(v)) out.push_back(v);
  return out;
}

int Triangulation::min_degree() const {
  int m = degree(vertices_.front());
  for (VertexId v : vertices_) m = std::min(m, degree(v));
  return m;
}

SurfaceClass classify_surface(const Triangulation& t) {
  SurfaceClass sc;
  sc.euler_characteristic = static_cast<int>(t.num_vertices()) - static_cast<int>(t.num_edges()) +
                            static_cast<int>(t.num_faces());
  sc.boundary_components = static_cast<int>(boundary(t).cycles.size());

  // Propagate a face orientation; a conflict means the surface is non-orientable.
  const FaceList& faces = t.faces();
  std::vector<Face> oriented(faces.size());
  std::vector<char> done(faces.size(), 0);
  oriented[0] = faces[0];
  done[0] = 1;
  std::deque<int> queue{0};
  auto has_directed = [](const Face& f, VertexId a, VertexId b) {
    for (int k = 0; k < 3; ++k)
      if (f[k] == a && f[(k + 1) % 3] == b) return true;
    return false;
  };
  while (!queue.empty() && sc.orientable) {
    int f = queue.front();
    queue.pop_front();
    const Face& of = oriented[f];
    for (int k = 0; k < 3 && sc.orientable; ++k) {
      VertexId a = of[k], b = of[(k + 1) % 3];
      int g = t.face_across(f, a, b);
      if (g < 0) continue;
      if (done[g]) {
        if (!has_directed(oriented[g], b, a)) sc.orientable = false;
        continue;
      }
      VertexId s = -1;
      for (VertexId x : faces[g])
        if (x != a && x != b) s = x;
      oriented[g] = {b, a, s};
      done[g] = 1;
      queue.push_back(g);
    }
  }
  return sc;
}

BoundaryGraph boundary(const Triangulation& t) {
  BoundaryGraph bg;
  bg.edges = t.boundary_edges();
  std::unordered_map<VertexId, std::vector<VertexId>> adj;
  for (const Edge& e : bg.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<VertexId> starts;
  for (auto& [v, ns] : adj) starts.push_back(v);
  std::sort(starts.begin(), starts.end());
  std::unordered_set<VertexId> used;
  for (VertexId s : starts) {
    if (used.count(s)) continue;
    std::vector<VertexId> cycle{s};
    used.insert(s);
    VertexId prev = s;
    VertexId cur = std::min(adj[s][0], adj[s][1]);
    while (cur != s) {
      cycle.push_back(cur);
      used.insert(cur);
      const auto& ns = adj[cur];
      VertexId next = ns[0] == prev ? ns[1] : ns[0];
      prev = cur;
      cur = next;
    }
    bg.cycles.push_back(std::move(cycle));
  }
  return bg;
}

std::unordered_map<VertexId, int> distances_from(const Triangulation& t,
                                                 const std::vector<VertexId>& sources) {
  std::unordered_map<VertexId, int> dist;
  std::deque<VertexId> queue;
  for (VertexId s : sources)
    if (dist.emplace(s, 0).second) queue.push_back(s);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : t.neighbors(v))
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
  }
  return dist;
}

int edge_distance_to_boundary(const Triangulation& t, Edge e) {
  if (!t.has_edge(e.u, e.v))
    throw Error(ErrorKind::UnknownEdge, std::to_string(e.u) + "-" + std::to_string(e.v));
  if (!t.has_boundary()) throw Error(ErrorKind::EmptyBoundary, "closed surface");
  auto dist = distances_from(t, t.boundary_vertices());
  return std::min(dist.at(e.u), dist.at(e.v));
}

DegreeClass class_membership(const Triangulation& t) {
  bool all4 = true;
  bool inner4 = true;
  for (VertexId v : t.vertices()) {
    int d = t.degree(v);
    if (d < 4) all4 = false;
    if (d < 3 || (d < 4 && t.is_inner_vertex(v))) inner4 = false;
  }
  if (all4) return DegreeClass::MinDegree4;
  if (inner4) return DegreeClass::InnerDegree4;
  return DegreeClass::Neither;
}

bool in_class(const Triangulation& t, DegreeClass c) {
  DegreeClass m = class_membership(t);
  switch (c) {
    case DegreeClass::Neither: return true;
    case DegreeClass::InnerDegree4: return m != DegreeClass::Neither;
    case DegreeClass::MinDegree4: return m == DegreeClass::MinDegree4;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Canonical form.
//
// From a starting flag (face with an ordering of its corners) faces are
// visited breadth first; each visited flag emits, for its three directed
// edges, the label of the vertex across that edge (0 when the edge is on the
// boundary). Labels are assigned in order of discovery, so the emitted string
// determines the complex. The code is the minimum over starting flags whose
// corner invariants are minimal.

namespace {

struct CanonicalContext {
  const Triangulation& t;
  std::vector<int> face_key;  // per face index: combined corner invariant
  std::unordered_map<VertexId, int> idx;
  std::vector<int> vertex_key;

  explicit CanonicalContext(const Triangulation& tri) : t(tri) {
    for (std::size_t i = 0; i < t.vertices().size(); ++i) {
      VertexId v = t.vertices()[i];
      idx[v] = static_cast<int>(i);
      vertex_key.push_back(t.degree(v) * 2 + (t.is_boundary_vertex(v) ? 1 : 0));
    }
  }
};

// Returns true and replaces `best` if the traversal from (p,q,r) is smaller.
bool traverse(const CanonicalContext& ctx, int start_face, VertexId p, VertexId q, VertexId r,
              std::vector<std::uint16_t>& best, std::size_t header) {
  const Triangulation& t = ctx.t;
  const std::size_t nv = t.num_vertices();
  std::vector<int> label(nv, -1);
  std::vector<char> visited(t.num_faces(), 0);
  int next_label = 0;
  label[ctx.idx.at(p)] = next_label++;
  label[ctx.idx.at(q)] = next_label++;
  label[ctx.idx.at(r)] = next_label++;

  std::size_t pos = header;
  bool smaller = best.size() <= header;
  std::vector<std::uint16_t> out(best.begin(), best.begin() + static_cast<long>(header));
  if (smaller) out.resize(header);
  auto emit = [&](std::uint16_t value) -> bool {
    if (!smaller) {
      std::uint16_t b = best[pos];
      if (value > b) return false;
      if (value < b) smaller = true;
    }
    out.push_back(value);
    ++pos;
    return true;
  };

  struct Flag {
    int face;
    VertexId a, b, c;
  };
  std::deque<Flag> queue{{start_face, p, q, r}};
  visited[start_face] = 1;
  while (!queue.empty()) {
    Flag fl = queue.front();
    queue.pop_front();
    const VertexId corners[3] = {fl.a, fl.b, fl.c};
    for (int k = 0; k < 3; ++k) {
      VertexId x = corners[k], y = corners[(k + 1) % 3];
      int g = t.face_across(fl.face, x, y);
      if (g < 0) {
        if (!emit(0)) return false;
        continue;
      }
      VertexId s = -1;
      for (VertexId w : t.faces()[g])
        if (w != x && w != y) s = w;
      int& ls = label[ctx.idx.at(s)];
      if (ls < 0) ls = next_label++;
      if (!emit(static_cast<std::uint16_t>(ls + 1))) return false;
      if (!visited[g]) {
        visited[g] = 1;
        queue.push_back({g, y, x, s});
      }
    }
  }
  if (!smaller) return false;  // equal to best
  best = std::move(out);
  return true;
}

}  // namespace

CanonicalForm canonical_form(const Triangulation& t) {
  CanonicalContext ctx(t);
  const FaceList& faces = t.faces();
  // Minimal corner-invariant triple over all flags.
  std::array<int, 3> min_key{INT32_MAX, INT32_MAX, INT32_MAX};
  struct Start {
    int face;
    VertexId p, q, r;
  };
  std::vector<Start> starts;
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    for (const auto& pm : perms) {
      VertexId p = faces[f][pm[0]], q = faces[f][pm[1]], r = faces[f][pm[2]];
      std::array<int, 3> key{ctx.vertex_key[ctx.idx[p]], ctx.vertex_key[ctx.idx[q]],
                             ctx.vertex_key[ctx.idx[r]]};
      if (key < min_key) {
        min_key = key;
        starts.clear();
      }
      if (key == min_key) starts.push_back({f, p, q, r});
    }
  }
  std::vector<std::uint16_t> header{static_cast<std::uint16_t>(t.num_vertices()),
                                    static_cast<std::uint16_t>(t.num_faces()),
                                    static_cast<std::uint16_t>(min_key[0]),
                                    static_cast<std::uint16_t>(min_key[1]),
                                    static_cast<std::uint16_t>(min_key[2])};
  std::vector<std::uint16_t> best = header;
  for (const Start& s : starts) traverse(ctx, s.face, s.p, s.q, s.r, best, header.size());
  return CanonicalForm{std::move(best)};
}

bool is_equivalent(const Triangulation& a, const Triangulation& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_faces() != b.num_faces()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::string CanonicalForm::hex() const {
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (std::uint16_t x : code) os << std::setw(4) << x;
  return os.str();
}

CanonicalForm CanonicalForm::from_hex(const std::string& text) {
  if (text.size() % 4 != 0) throw Error(ErrorKind::ParseError, "canonical code length");
  CanonicalForm c;
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(text.substr(i, 4), &used, 16);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != 4) throw Error(ErrorKind::ParseError, "canonical code digit");
    c.code.push_back(static_cast<std::uint16_t>(v));
  }
  return c;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& c) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint16_t x : c.code) h = (h ^ x) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------
// .tri format

FaceList parse_tri(std::istream& in) {
  std::string line;
  int line_no = 0;
  long expected = -1;
  FaceList faces;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    auto fail = [&](const std::string& what) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
    };
    if (expected < 0) {
      std::string tag;
      ls >> tag >> expected;
      if (tag != "tri" || !ls || expected < 0) fail("expected header 'tri <num_faces>'");
    } else {
      long a, b, c;
      if (!(ls >> a >> b >> c)) fail("expected three vertex ids");
      std::string rest;
      if (ls >> rest) fail("trailing text '" + rest + "'");
      if (a < 0 || b < 0 || c < 0) fail("negative vertex id");
      faces.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<VertexId>(c)});
    }
  }
  if (expected < 0) throw Error(ErrorKind::ParseError, "missing header");
  if (static_cast<long>(faces.size()) != expected)
    throw Error(ErrorKind::ParseError, "header announces " + std::to_string(expected) + " faces, found " +
                                           std::to_string(faces.size()));
  return faces;
}

FaceList parse_tri(const std::string& text) {
  std::istringstream in(text);
  return parse_tri(in);
}

std::string serialize_tri(const FaceList& faces) {
  std::ostringstream os;
  os << "tri " << faces.size() << "\n";
  for (const Face& f : faces) os << f[0] << " " << f[1] << " " << f[2] << "\n";
  return os.str();
}

Triangulation read_tri_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return Triangulation::build(parse_tri(in));
}

void write_tri_file(const std::string& path, const FaceList& faces) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << serialize_tri(faces);
}

std::string format_faces(const FaceList& faces) {
  std::ostringstream os;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) os << ",";
    os << faces[i][0] << " " << faces[i][1] << " " << faces[i][2];
  }
  return os.str();
}

}  // namespace trisurg
