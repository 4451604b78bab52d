#include "trisurg/surgery.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace trisurg {

namespace {

constexpr std::pair<MoveKind, const char*> kKindNames[] = {
    {MoveKind::R1, "R1"}, {MoveKind::R2, "R2"}, {MoveKind::R3, "R3"},     {MoveKind::R4, "R4"},
    {MoveKind::R5, "R5"}, {MoveKind::R6, "R6"}, {MoveKind::RF, "RF"},     {MoveKind::Flip, "Flip"},
    {MoveKind::E1, "E1"}, {MoveKind::E2, "E2"}, {MoveKind::E3, "E3"},     {MoveKind::E4, "E4"},
    {MoveKind::E5, "E5"}, {MoveKind::E6, "E6"}, {MoveKind::EF, "EF"},
};

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

const char* to_string(MoveKind kind) {
  for (auto [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

MoveKind parse_move_kind(const std::string& text) {
  for (auto [k, name] : kKindNames)
    if (text == name) return k;
  throw Error(ErrorKind::ParseError, "unknown move kind '" + text + "'");
}

MoveKind inverse_kind(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1: return MoveKind::E1;
    case MoveKind::R2: return MoveKind::E2;
    case MoveKind::R3: return MoveKind::E3;
    case MoveKind::R4: return MoveKind::E4;
    case MoveKind::R5: return MoveKind::E5;
    case MoveKind::R6: return MoveKind::E6;
    case MoveKind::RF: return MoveKind::EF;
    case MoveKind::Flip: return MoveKind::Flip;
    case MoveKind::E1: return MoveKind::R1;
    case MoveKind::E2: return MoveKind::R2;
    case MoveKind::E3: return MoveKind::R3;
    case MoveKind::E4: return MoveKind::R4;
    case MoveKind::E5: return MoveKind::R5;
    case MoveKind::E6: return MoveKind::R6;
    case MoveKind::EF: return MoveKind::RF;
  }
  return kind;
}

bool is_reduction(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1:
    case MoveKind::R2:
    case MoveKind::R3:
    case MoveKind::R4:
    case MoveKind::R5:
    case MoveKind::R6:
    case MoveKind::RF: return true;
    default: return false;
  }
}

Move make_move(MoveKind kind, std::vector<VertexId> site, const Triangulation& before,
               const FaceList& after) {
  std::set<Face> old_set, new_set;
  for (const Face& f : before.faces()) old_set.insert(sorted(f));
  for (const Face& f : after) new_set.insert(sorted(f));
  Move m{kind, std::move(site), {}, {}};
  for (const Face& f : before.faces())
    if (!new_set.count(sorted(f))) m.removed.push_back(f);
  for (const Face& f : after)
    if (!old_set.count(sorted(f))) m.added.push_back(f);
  return m;
}

Triangulation apply(const Triangulation& t, const Move& m) {
  std::set<Face> removed;
  for (const Face& f : m.removed) removed.insert(sorted(f));
  FaceList faces;
  faces.reserve(t.num_faces() + m.added.size());
  std::size_t hits = 0;
  for (const Face& f : t.faces()) {
    if (removed.count(sorted(f))) {
      ++hits;
      continue;
    }
    faces.push_back(f);
  }
  if (hits != removed.size() || removed.size() != m.removed.size())
    throw Error(ErrorKind::MoveMismatch, std::string(to_string(m.kind)) + ": removed face not present");
  for (const Face& f : m.added) {
    if (t.has_face(f[0], f[1], f[2]) && !removed.count(sorted(f)))
      throw Error(ErrorKind::MoveMismatch, std::string(to_string(m.kind)) + ": added face already present");
    faces.push_back(f);
  }
  return Triangulation::build(std::move(faces));
}

Move invert(const Move& m) { return Move{inverse_kind(m.kind), m.site, m.added, m.removed}; }

std::string format_move(const Move& m) {
  std::ostringstream os;
  os << to_string(m.kind);
  for (VertexId v : m.site) os << " " << v;
  os << " | " << m.removed.size();
  for (const Face& f : m.removed) os << " " << f[0] << " " << f[1] << " " << f[2];
  os << " " << m.added.size();
  for (const Face& f : m.added) os << " " << f[0] << " " << f[1] << " " << f[2];
  return os.str();
}

Move parse_move(const std::string& line) {
  auto bar = line.find('|');
  if (bar == std::string::npos) throw Error(ErrorKind::ParseError, "move without '|': " + line);
  std::istringstream head(line.substr(0, bar));
  std::istringstream tail(line.substr(bar + 1));
  std::string kind;
  if (!(head >> kind)) throw Error(ErrorKind::ParseError, "empty move line");
  Move m;
  m.kind = parse_move_kind(kind);
  VertexId v;
  while (head >> v) m.site.push_back(v);
  if (!head.eof()) throw Error(ErrorKind::ParseError, "bad site ids: " + line);
  auto read_faces = [&](FaceList& out) {
    long n;
    if (!(tail >> n) || n < 0) throw Error(ErrorKind::ParseError, "bad face count: " + line);
    for (long i = 0; i < n; ++i) {
      Face f;
      if (!(tail >> f[0] >> f[1] >> f[2])) throw Error(ErrorKind::ParseError, "truncated faces: " + line);
      out.push_back(f);
    }
  };
  read_faces(m.removed);
  read_faces(m.added);
  std::string rest;
  if (tail >> rest) throw Error(ErrorKind::ParseError, "trailing text in move: " + line);
  return m;
}

std::string format_trace(const std::vector<Move>& moves) {
  std::string out;
  for (const Move& m : moves) out += format_move(m) + "\n";
  return out;
}

std::vector<Move> parse_trace(std::istream& in) {
  std::vector<Move> moves;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    moves.push_back(parse_move(line));
  }
  return moves;
}

// ---------------------------------------------------------------------------

const char* to_string(ContractionBlock b) {
  switch (b) {
    case ContractionBlock::None: return "none";
    case ContractionBlock::CriticalCycle: return "CriticalCycle";
    case ContractionBlock::InnerEdgeBothEndpointsOnBoundary: return "InnerEdgeBothEndpointsOnBoundary";
    case ContractionBlock::SingleTriangle: return "SingleTriangle";
    case ContractionBlock::Tetrahedron: return "Tetrahedron";
  }
  return "?";
}

std::vector<Face> critical_3cycles_through(const Triangulation& t, Edge e) {
  std::vector<VertexId> apex = t.apexes(e.u, e.v);
  std::vector<Face> out;
  for (VertexId w : t.neighbors(e.u)) {
    if (w == e.v || !t.has_edge(w, e.v)) continue;
    if (std::find(apex.begin(), apex.end(), w) != apex.end()) continue;
    out.push_back(sorted(Face{e.u, e.v, w}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ContractionWitness is_contractible(const Triangulation& t, Edge e) {
  ContractionWitness w;
  w.edge = e;
  w.apexes = t.apexes(e.u, e.v);
  if (t.num_faces() == 1) {
    w.blocked_by = ContractionBlock::SingleTriangle;
    return w;
  }
  if (t.num_faces() == 4 && t.num_vertices() == 4 && !t.has_boundary()) {
    w.blocked_by = ContractionBlock::Tetrahedron;
    return w;
  }
  auto critical = critical_3cycles_through(t, e);
  if (!critical.empty()) {
    w.blocked_by = ContractionBlock::CriticalCycle;
    w.critical_cycle = critical.front();
    return w;
  }
  if (!t.is_boundary_edge(e.u, e.v) && t.is_boundary_vertex(e.u) && t.is_boundary_vertex(e.v))
    w.blocked_by = ContractionBlock::InnerEdgeBothEndpointsOnBoundary;
  return w;
}

FaceList identify_vertices(const FaceList& faces, VertexId keep, VertexId removed) {
  FaceList out;
  out.reserve(faces.size());
  for (Face f : faces) {
    if (contains(f, removed)) {
      if (contains(f, keep)) continue;
      for (VertexId& x : f)
        if (x == removed) x = keep;
    }
    out.push_back(f);
  }
  return out;
}

std::pair<Triangulation, Move> contract(const Triangulation& t, VertexId keep, VertexId removed) {
  Edge e(keep, removed);
  auto w = is_contractible(t, e);
  if (!w.contractible())
    throw Error(ErrorKind::NotContractible, edge_text(e) + " blocked by " + to_string(w.blocked_by));
  Move m = make_move(MoveKind::R1, {keep, removed}, t, identify_vertices(t.faces(), keep, removed));
  Triangulation result = apply(t, m);
  return {std::move(result), std::move(m)};
}

int min_degree_after_contraction(const Triangulation& t, Edge e) {
  auto apex = t.apexes(e.u, e.v);
  int merged = t.degree(e.u) + t.degree(e.v) - (t.is_boundary_edge(e.u, e.v) ? 3 : 4);
  int m = merged;
  for (VertexId v : t.vertices()) {
    if (v == e.u || v == e.v) continue;
    int d = t.degree(v);
    if (std::find(apex.begin(), apex.end(), v) != apex.end()) --d;
    m = std::min(m, d);
  }
  return m;
}

bool k_contractible(const Triangulation& t, Edge e, int k) {
  if (!is_contractible(t, e).contractible()) return false;
  return min_degree_after_contraction(t, e) >= k;
}

bool is_cnkc(const Triangulation& t, Edge e, int k) {
  return is_contractible(t, e).contractible() && min_degree_after_contraction(t, e) < k;
}

// ---------------------------------------------------------------------------

namespace {

// Index of each link edge (w_t, w_{t+1}) of v, keyed by the unordered pair.
std::map<std::pair<VertexId, VertexId>, int> link_edge_index(const VertexLink& link) {
  std::map<std::pair<VertexId, VertexId>, int> idx;
  const auto& w = link.walk;
  int n = static_cast<int>(w.size());
  int edges = link.cyclic ? n : n - 1;
  for (int i = 0; i < edges; ++i) {
    VertexId a = w[i], b = w[(i + 1) % n];
    idx[{std::min(a, b), std::max(a, b)}] = i;
  }
  return idx;
}

}  // namespace

FaceList split_faces(const Triangulation& t, VertexId v, const SplitSpec& spec, VertexId new_id) {
  const VertexLink& link = t.link(v);
  const auto& w = link.walk;
  const int n = static_cast<int>(w.size());
  auto pos = [&](VertexId p) {
    auto it = std::find(w.begin(), w.end(), p);
    if (it == w.end())
      throw Error(ErrorKind::BadPartition, "pivot " + std::to_string(p) + " not a neighbor of " +
                                               std::to_string(v));
    return static_cast<int>(it - w.begin());
  };
  std::vector<char> moves_to_new;  // per link edge index
  std::vector<VertexId> pivots;
  if (link.cyclic) {
    if (spec.pivots.size() != 2) throw Error(ErrorKind::BadPartition, "inner vertex split needs two pivots");
    int i = pos(spec.pivots[0]), j = pos(spec.pivots[1]);
    if (i == j) throw Error(ErrorKind::BadPartition, "pivots coincide");
    moves_to_new.assign(n, 0);
    for (int s = i; s != j; s = (s + 1) % n) moves_to_new[s] = 1;
    pivots = {w[i], w[j]};
  } else {
    moves_to_new.assign(n - 1, 0);
    if (spec.pivots.size() == 1) {
      int i = pos(spec.pivots[0]);
      for (int s = i; s < n - 1; ++s) moves_to_new[s] = 1;
      pivots = {w[i]};
    } else if (spec.pivots.size() == 2) {
      int i = pos(spec.pivots[0]), j = pos(spec.pivots[1]);
      if (i == j) throw Error(ErrorKind::BadPartition, "pivots coincide");
      if (i > j) std::swap(i, j);
      for (int s = i; s < j; ++s) moves_to_new[s] = 1;
      pivots = {w[i], w[j]};
    } else {
      throw Error(ErrorKind::BadPartition, "boundary vertex split needs one or two pivots");
    }
  }
  auto index = link_edge_index(link);
  FaceList out;
  out.reserve(t.num_faces() + 2);
  for (Face f : t.faces()) {
    if (contains(f, v)) {
      VertexId a = -1, b = -1;
      for (VertexId x : f) {
        if (x == v) continue;
        (a == -1 ? a : b) = x;
      }
      if (moves_to_new[index.at({std::min(a, b), std::max(a, b)})])
        for (VertexId& x : f)
          if (x == v) x = new_id;
    }
    out.push_back(f);
  }
  for (VertexId p : pivots) out.push_back({v, new_id, p});
  return out;
}

std::pair<Triangulation, Move> split_vertex(const Triangulation& t, VertexId v, const SplitSpec& spec,
                                            int k) {
  VertexId new_id = t.smallest_unused_id();
  FaceList faces = split_faces(t, v, spec, new_id);
  Move m = make_move(MoveKind::E1, {v, new_id}, t, faces);
  m.site.insert(m.site.end(), spec.pivots.begin(), spec.pivots.end());
  Triangulation result = apply(t, m);
  if (k > 0 && (result.degree(v) < k || result.degree(new_id) < k))
    throw Error(ErrorKind::DegreeViolation, "split of " + std::to_string(v) + " leaves degrees " +
                                                std::to_string(result.degree(v)) + "," +
                                                std::to_string(result.degree(new_id)) + " below " +
                                                std::to_string(k));
  return {std::move(result), std::move(m)};
}

std::vector<SplitSpec> enumerate_splits(const Triangulation& t, VertexId v) {
  const VertexLink& link = t.link(v);
  const auto& w = link.walk;
  const int n = static_cast<int>(w.size());
  std::vector<SplitSpec> out;
  if (link.cyclic) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back({{w[i], w[j]}});
  } else {
    for (int i = 0; i < n; ++i) out.push_back({{w[i]}});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back({{w[i], w[j]}});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::pair<Triangulation, Move> diagonal_flip(const Triangulation& t, Edge e) {
  auto faces_of_e = t.edge_faces(e.u, e.v);
  if (faces_of_e.size() != 2) throw Error(ErrorKind::BoundaryEdgeFlip, edge_text(e));
  auto apex = t.apexes(e.u, e.v);
  VertexId x = apex[0], y = apex[1];
  if (t.has_edge(x, y))
    throw Error(ErrorKind::FlipCreatesMultiEdge, edge_text(e) + " -> " + edge_text(Edge(x, y)));
  FaceList faces;
  for (const Face& f : t.faces())
    if (!(contains(f, e.u) && contains(f, e.v))) faces.push_back(f);
  faces.push_back({x, y, e.u});
  faces.push_back({y, x, e.v});
  Move m = make_move(MoveKind::Flip, {e.u, e.v, x, y}, t, faces);
  Triangulation result = apply(t, m);
  return {std::move(result), std::move(m)};
}

}  // namespace trisurg
