#include <algorithm>
#include <istream>
#include <sstream>

#include "trisurg/reduce.hpp"

namespace trisurg {

namespace {

const char* class_token(DegreeClass c) {
  switch (c) {
    case DegreeClass::InnerDegree4: return "f0";
    case DegreeClass::MinDegree4: return "f4";
    case DegreeClass::Neither: break;
  }
  return "none";
}

DegreeClass parse_class_token(const std::string& s) {
  if (s == "f0") return DegreeClass::InnerDegree4;
  if (s == "f4") return DegreeClass::MinDegree4;
  throw Error(ErrorKind::ParseError, "unknown class '" + s + "'");
}

[[noreturn]] void bad_trace(const std::string& why) { throw Error(ErrorKind::ParseError, "trace: " + why); }

std::string expect_field(std::istream& in, const std::string& key) {
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::istringstream ls(line);
  std::string k, v;
  ls >> k;
  if (k != key) bad_trace("expected '" + key + "'");
  if (key == "trace") return "";
  if (!(ls >> v)) bad_trace("missing value for '" + key + "'");
  return v;
}

bool edge_within(Edge e, const std::vector<VertexId>& vs) {
  return std::find(vs.begin(), vs.end(), e.u) != vs.end() && std::find(vs.begin(), vs.end(), e.v) != vs.end();
}

std::vector<Edge> contractible_edges(const Triangulation& t) {
  std::vector<Edge> out;
  for (Edge e : t.edges())
    if (is_contractible(t, e).contractible()) out.push_back(e);
  return out;
}

Residual house(const Triangulation& t, Edge e, DegreeClass c) {
  if (c == DegreeClass::InnerDegree4) {
    for (const auto& f : find_flags(t))
      if (f.whole_complex) return {e, Housing::DiskFlag, f.vertices()};
    if (t.num_vertices() == 6 && t.has_boundary())
      for (const auto& o : find_octahedra(t)) return {e, Housing::DiskOctahedron, o.vertices()};
    return {e, Housing::None, {}};
  }
  for (const auto& q : find_quasi_octahedra(t))
    if (quasi_status(t, q) == QuasiStatus::NonRemovable && edge_within(e, q.vertices()))
      return {e, Housing::QuasiOctahedron, q.vertices()};
  for (const auto& m : find_M_components(t)) {
    auto es = m.edges();
    if (std::find(es.begin(), es.end(), e) != es.end()) return {e, Housing::MComponent, m.vertices()};
  }
  if (t.num_vertices() == 6 && t.has_boundary())
    for (const auto& o : find_octahedra(t)) return {e, Housing::DiskOctahedron, o.vertices()};
  return {e, Housing::None, {}};
}

// Flips worth trying first: the diagonals of M-components and quasi-octahedra.
std::vector<Edge> flip_candidates(const Triangulation& t) {
  std::vector<Edge> out;
  for (const auto& m : find_M_components(t)) {
    out.emplace_back(m.x, m.a);
    out.emplace_back(m.x, m.b);
  }
  for (const auto& q : find_quasi_octahedra(t)) {
    out.emplace_back(q.remaining[0], q.remaining[2]);
    out.emplace_back(q.remaining[1], q.remaining[2]);
  }
  for (Edge e : t.edges())
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  std::erase_if(out, [&](Edge e) { return !t.has_edge(e.u, e.v) || t.is_boundary_edge(e.u, e.v); });
  return out;
}

std::optional<Step> flip_in(const Triangulation& t, Edge e, DegreeClass c) {
  try {
    return apply_R(t, MoveKind::Flip, {e.u, e.v}, c);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Up to `depth` flips followed by one reduction.
std::optional<std::vector<Step>> unlocking_flips(const Triangulation& t, DegreeClass c, int depth) {
  for (Edge e : flip_candidates(t)) {
    auto f = flip_in(t, e, c);
    if (!f) continue;
    if (auto r = first_reduction(f->first, c)) return std::vector<Step>{std::move(*f), std::move(*r)};
  }
  if (depth < 2) return std::nullopt;
  for (Edge e : flip_candidates(t)) {
    auto f = flip_in(t, e, c);
    if (!f) continue;
    for (Edge g : flip_candidates(f->first)) {
      if (g == Edge(f->second.site[2], f->second.site[3])) continue;
      auto h = flip_in(f->first, g, c);
      if (!h) continue;
      if (auto r = first_reduction(h->first, c)) return std::vector<Step>{*f, std::move(*h), std::move(*r)};
    }
  }
  return std::nullopt;
}

Reduction drive(const Triangulation& t, DegreeClass c, bool flips) {
  Reduction out{t, {canonical_form(t), {}, {}, c, flips}, {}};
  for (;;) {
    if (auto r = first_reduction(out.terminal, c)) {
      out.trace.moves.push_back(r->second);
      out.terminal = std::move(r->first);
      continue;
    }
    if (!flips || contractible_edges(out.terminal).empty()) break;
    auto steps = unlocking_flips(out.terminal, c, 2);
    if (!steps) break;
    for (auto& s : *steps) {
      out.trace.moves.push_back(s.second);
      out.terminal = std::move(s.first);
    }
  }
  out.trace.terminal = canonical_form(out.terminal);
  out.certificate = certify(out.terminal, c);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string format_reduction_trace(const ReductionTrace& trace) {
  std::ostringstream os;
  os << "trace\n"
     << "class " << class_token(trace.cls) << "\n"
     << "flips " << (trace.flips_allowed ? 1 : 0) << "\n"
     << "initial " << trace.initial.hex() << "\n"
     << "terminal " << trace.terminal.hex() << "\n"
     << "moves " << trace.moves.size() << "\n"
     << format_trace(trace.moves);
  return os.str();
}

ReductionTrace parse_reduction_trace(std::istream& in) {
  ReductionTrace trace;
  expect_field(in, "trace");
  trace.cls = parse_class_token(expect_field(in, "class"));
  auto flips = expect_field(in, "flips");
  if (flips != "0" && flips != "1") bad_trace("flips must be 0 or 1");
  trace.flips_allowed = flips == "1";
  try {
    trace.initial = CanonicalForm::from_hex(expect_field(in, "initial"));
    trace.terminal = CanonicalForm::from_hex(expect_field(in, "terminal"));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    bad_trace(e.what());
  }
  std::size_t n = 0;
  try {
    n = std::stoul(expect_field(in, "moves"));
  } catch (const std::logic_error&) {
    bad_trace("bad move count");
  }
  trace.moves = parse_trace(in);
  if (trace.moves.size() != n) bad_trace("move count does not match");
  return trace;
}

Triangulation replay(const Triangulation& initial, const ReductionTrace& trace) {
  if (canonical_form(initial) != trace.initial)
    throw Error(ErrorKind::MoveMismatch, "initial triangulation does not match the trace");
  Triangulation t = initial;
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    try {
      t = apply(t, trace.moves[i]);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::MoveMismatch) throw;
      throw Error(ErrorKind::MoveMismatch, "move " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (canonical_form(t) != trace.terminal)
    throw Error(ErrorKind::MoveMismatch, "terminal triangulation does not match the trace");
  return t;
}

// ---------------------------------------------------------------------------

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Irreducible: return "irreducible";
    case Verdict::FourMinimal: return "4-minimal";
    case Verdict::NotMinimal: return "not-minimal";
  }
  return "?";
}

const char* to_string(Housing h) {
  switch (h) {
    case Housing::QuasiOctahedron: return "quasi-octahedron";
    case Housing::MComponent: return "M-component";
    case Housing::DiskOctahedron: return "disk-octahedron";
    case Housing::DiskFlag: return "disk-flag";
    case Housing::None: return "unhoused";
  }
  return "?";
}

bool MinimalityCertificate::all_housed() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.housing != Housing::None; });
}

MinimalityCertificate certify(const Triangulation& t, DegreeClass c) {
  MinimalityCertificate cert;
  if (!in_class(t, c))
    throw Error(ErrorKind::ClassViolation, std::string("triangulation is not in ") + to_string(c));
  if (auto r = first_reduction(t, c)) {
    cert.verdict = Verdict::NotMinimal;
    cert.next = r->second;
    return cert;
  }
  auto edges = contractible_edges(t);
  cert.verdict = edges.empty() ? Verdict::Irreducible : Verdict::FourMinimal;
  for (Edge e : edges) cert.residuals.push_back(house(t, e, c));
  return cert;
}

std::string format_certificate(const MinimalityCertificate& cert) {
  std::ostringstream os;
  os << "verdict " << to_string(cert.verdict) << "\n";
  if (cert.next) os << "next " << format_move(*cert.next) << "\n";
  os << "residuals " << cert.residuals.size() << "\n";
  for (const auto& r : cert.residuals) {
    os << r.edge.u << "-" << r.edge.v << " " << to_string(r.housing);
    for (VertexId v : r.witness) os << " " << v;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Reduction reduce_to_irreducible(const Triangulation& t) {
  if (!in_class(t, DegreeClass::InnerDegree4))
    throw Error(ErrorKind::ClassViolation, "input is not in F0(4)");
  if (classify_surface(t).boundary_components > 1)
    throw Error(ErrorKind::NonPuncturedInput, "input has more than one boundary component");
  return drive(t, DegreeClass::InnerDegree4, false);
}

Reduction reduce_to_4minimal(const Triangulation& t, bool flips_allowed) {
  if (!in_class(t, DegreeClass::MinDegree4)) throw Error(ErrorKind::ClassViolation, "input is not in F(4)");
  return drive(t, DegreeClass::MinDegree4, flips_allowed);
}

}  // namespace trisurg
