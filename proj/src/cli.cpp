#include "trisurg/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "trisurg/configs.hpp"
#include "trisurg/fixtures.hpp"
#include "trisurg/generate.hpp"
#include "trisurg/reduce.hpp"

namespace trisurg::cli {

namespace {

namespace fs = std::filesystem;

// Key/value lines in insertion order; the order is part of the format.
class Report {
 public:
  explicit Report(std::string command) { add("command", std::move(command)); }

  template <class T>
  void add(const std::string& key, const T& value) {
    std::ostringstream os;
    os << value;
    lines_.emplace_back(key, os.str());
  }
  void raw(const std::string& line) { lines_.emplace_back("", line); }

  void print(std::ostream& out) const {
    for (const auto& [k, v] : lines_) {
      if (k.empty())
        out << "  " << v << "\n";
      else
        out << k << ": " << v << "\n";
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct Input {
  std::string name;
  std::string text;
};

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A path, else <name>.tri under TRISURG_SEED_DIR, else a built-in fixture.
Input resolve(const std::string& arg) {
  if (fs::exists(arg)) return {arg, slurp(arg)};
  if (const char* dir = std::getenv("TRISURG_SEED_DIR")) {
    for (const auto& candidate : {fs::path(dir) / arg, fs::path(dir) / (arg + ".tri")})
      if (fs::exists(candidate)) return {candidate.string(), slurp(candidate)};
  }
  for (const auto& f : fixtures::all())
    if (f.name == arg) return {"fixture:" + arg, serialize_tri(f.tri.faces())};
  throw Error(ErrorKind::ParseError, "no such file or fixture: " + arg);
}

Triangulation load(const Input& in) { return Triangulation::build(parse_tri(in.text)); }

DegreeClass parse_class(const std::string& s) {
  if (s == "f0") return DegreeClass::InnerDegree4;
  if (s == "f4") return DegreeClass::MinDegree4;
  throw Error(ErrorKind::ParseError, "class must be f0 or f4");
}

const char* class_token(DegreeClass c) {
  switch (c) {
    case DegreeClass::InnerDegree4: return "f0";
    case DegreeClass::MinDegree4: return "f4";
    case DegreeClass::Neither: break;
  }
  return "none";
}

std::string surface_line(const SurfaceClass& s) {
  std::ostringstream os;
  os << "chi=" << s.euler_characteristic << " " << (s.orientable ? "orientable" : "non-orientable")
     << " boundary=" << s.boundary_components;
  return os.str();
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return ParseFailure;
    case ErrorKind::EmptyInput:
    case ErrorKind::InvalidFace:
    case ErrorKind::MultiEdgeViolation:
    case ErrorKind::TwoFacesShareTwoEdges:
    case ErrorKind::NonManifoldEdge:
    case ErrorKind::DisconnectedComplex:
    case ErrorKind::BadVertexLink: return ValidationFailure;
    case ErrorKind::MoveMismatch: return ReplayMismatch;
    default: return PreconditionFailure;
  }
}

void describe(Report& r, const Input& in, const Triangulation& t) {
  r.add("input", in.name);
  r.add("digest", digest(in.text));
  r.add("vertices", t.num_vertices());
  r.add("edges", t.num_edges());
  r.add("faces", t.num_faces());
}

int cmd_validate(Report& r, const std::string& file) {
  auto in = resolve(file);
  auto t = load(in);
  describe(r, in, t);
  r.add("boundary_edges", t.num_boundary_edges());
  r.add("min_degree", t.min_degree());
  r.add("valid", "yes");
  return Ok;
}

int cmd_classify(Report& r, const std::string& file) {
  auto in = resolve(file);
  auto t = load(in);
  describe(r, in, t);
  r.add("surface", surface_line(classify_surface(t)));
  r.add("class", class_token(class_membership(t)));
  r.add("code", canonical_form(t).hex());
  return Ok;
}

int cmd_detect(Report& r, const std::string& file, const std::string& cls) {
  auto in = resolve(file);
  auto t = load(in);
  describe(r, in, t);
  DegreeClass c = cls.empty() ? class_membership(t) : parse_class(cls);
  r.add("class", class_token(c));
  std::vector<Edge> contractible;
  for (Edge e : t.edges())
    if (is_contractible(t, e).contractible()) contractible.push_back(e);
  r.add("contractible_edges", contractible.size());
  if (contractible.empty()) r.add("note", "irreducible");
  auto findings = c == DegreeClass::Neither ? std::vector<Finding>{} : detect_all(t, c);
  r.add("findings", findings.size());
  for (const auto& f : findings) r.raw(format_finding(f));
  return Ok;
}

void add_certificate(Report& r, const MinimalityCertificate& cert) {
  r.add("verdict", to_string(cert.verdict));
  r.add("residuals", cert.residuals.size());
  for (const auto& res : cert.residuals) {
    std::ostringstream os;
    os << res.edge.u << "-" << res.edge.v << " " << to_string(res.housing);
    r.raw(os.str());
  }
  r.add("all_housed", cert.all_housed() ? "yes" : "no");
}

int cmd_reduce(Report& r, const std::string& file, const std::string& cls, bool flips, const std::string& out_tri,
               const std::string& out_trace) {
  auto in = resolve(file);
  auto t = load(in);
  describe(r, in, t);
  DegreeClass c = parse_class(cls);
  if (flips && c != DegreeClass::MinDegree4) throw Error(ErrorKind::ParseError, "--flips needs --class f4");
  r.add("class", class_token(c));
  r.add("flips", flips ? "on" : "off");
  auto red = c == DegreeClass::InnerDegree4 ? reduce_to_irreducible(t) : reduce_to_4minimal(t, flips);
  r.add("moves", red.trace.moves.size());
  r.add("terminal_vertices", red.terminal.num_vertices());
  r.add("terminal_code", red.trace.terminal.hex());
  r.add("surface", surface_line(classify_surface(red.terminal)));
  add_certificate(r, red.certificate);
  if (!out_tri.empty()) {
    write_tri_file(out_tri, red.terminal.faces());
    r.add("terminal", out_tri);
  }
  if (!out_trace.empty()) {
    std::ofstream(out_trace) << format_reduction_trace(red.trace);
    r.add("trace", out_trace);
  }
  return Ok;
}

int cmd_generate(Report& r, const std::vector<std::string>& seeds, const std::string& cls, int max_v,
                 const std::string& out_dir, int threads) {
  std::vector<Triangulation> ts;
  for (const auto& s : seeds) ts.push_back(load(resolve(s)));
  EnumerateOptions opts;
  opts.threads = threads;
  Catalog cat;
  if (fs::exists(fs::path(out_dir) / "catalog.txt")) {
    cat = load_catalog(out_dir);
    if (cat.cls != parse_class(cls)) throw Error(ErrorKind::MixedSurfaces, "existing catalog has another class");
    raise_limit(cat, max_v);
    resume(cat, opts);
    r.add("resumed", "yes");
  } else {
    cat = enumerate(ts, parse_class(cls), max_v, opts);
    r.add("resumed", "no");
  }
  save_catalog(cat, out_dir);
  r.add("surface", surface_line(cat.surface));
  r.add("class", class_token(cat.cls));
  r.add("max_vertices", cat.max_vertices);
  r.add("members", cat.size());
  for (const auto& [v, level] : cat.levels) r.raw("v=" + std::to_string(v) + " " + std::to_string(level.size()));
  r.add("out", out_dir);
  return Ok;
}

int cmd_replay(Report& r, const std::string& file, const std::string& trace_file) {
  auto in = resolve(file);
  auto t = load(in);
  describe(r, in, t);
  std::istringstream ts(slurp(trace_file));
  auto trace = parse_reduction_trace(ts);
  r.add("moves", trace.moves.size());
  auto end = replay(t, trace);
  r.add("terminal_code", canonical_form(end).hex());
  r.add("match", "yes");
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surgery on triangulated punctured surfaces", "trisurg"};
  app.require_subcommand(1);

  std::string file, cls, out_tri, out_trace, out_dir, trace_file;
  std::vector<std::string> seeds;
  bool flips = false;
  int max_v = 0, threads = 1;

  auto* validate = app.add_subcommand("validate", "Check a .tri file and report its invariants");
  validate->add_option("file", file, ".tri file or fixture name")->required();
  auto* classify = app.add_subcommand("classify", "Report surface and degree class");
  classify->add_option("file", file)->required();
  auto* detect = app.add_subcommand("detect", "List detected configurations");
  detect->add_option("file", file)->required();
  detect->add_option("--class", cls, "f0 or f4 (default: the input's class)");
  auto* reduce = app.add_subcommand("reduce", "Reduce to an irreducible or 4-minimal triangulation");
  reduce->add_option("file", file)->required();
  reduce->add_option("--class", cls)->required()->check(CLI::IsMember({"f0", "f4"}));
  reduce->add_flag("--flips", flips, "Allow diagonal flips (f4 only)");
  reduce->add_option("--out", out_tri, "Write the terminal .tri here");
  reduce->add_option("--trace", out_trace, "Write the reduction trace here");
  auto* generate = app.add_subcommand("generate", "Enumerate a catalog by expansion");
  generate->add_option("--seed", seeds)->required();
  generate->add_option("--class", cls)->required()->check(CLI::IsMember({"f0", "f4"}));
  generate->add_option("--max-v", max_v)->required()->check(CLI::Range(3, 64));
  generate->add_option("--out", out_dir)->required();
  generate->add_option("--threads", threads)->check(CLI::Range(1, 256));
  auto* replay_cmd = app.add_subcommand("replay", "Replay a trace against its initial triangulation");
  replay_cmd->add_option("file", file)->required();
  replay_cmd->add_option("trace", trace_file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return ParseFailure;
  }

  auto* sub = app.get_subcommands().front();
  Report report(sub->get_name());
  int code = Ok;
  try {
    if (sub == validate) code = cmd_validate(report, file);
    if (sub == classify) code = cmd_classify(report, file);
    if (sub == detect) code = cmd_detect(report, file, cls);
    if (sub == reduce) code = cmd_reduce(report, file, cls, flips, out_tri, out_trace);
    if (sub == generate) code = cmd_generate(report, seeds, cls, max_v, out_dir, threads);
    if (sub == replay_cmd) code = cmd_replay(report, file, trace_file);
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    report.add("error", e.what());
  } catch (const std::exception& e) {
    code = PreconditionFailure;
    report.add("error", e.what());
  }
  report.add("exit", code);
  report.print(out);
  return code;
}

}  // namespace trisurg::cli
