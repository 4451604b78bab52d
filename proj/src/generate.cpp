#include "trisurg/generate.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace trisurg {

namespace fs = std::filesystem;

namespace {

const char* class_token(DegreeClass c) { return c == DegreeClass::InnerDegree4 ? "f0" : "f4"; }

[[noreturn]] void bad_catalog(const std::string& why) { throw Error(ErrorKind::ParseError, "catalog: " + why); }

FaceList parse_face_list(const std::string& text) {
  FaceList faces;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::istringstream fs(item);
    Face f{};
    if (!(fs >> f[0] >> f[1] >> f[2])) bad_catalog("bad face '" + item + "'");
    faces.push_back(f);
  }
  return faces;
}

std::string level_file(int v) {
  std::ostringstream os;
  os << "v" << std::setw(2) << std::setfill('0') << v << ".txt";
  return os.str();
}

// Expands every member of one level. Results are gathered per member and
// merged in member order, so the catalog does not depend on thread timing.
void expand_level(Catalog& cat, int v, int threads) {
  const auto& level = cat.levels[v];
  std::vector<const FaceList*> members;
  for (const auto& [code, faces] : level) members.push_back(&faces);
  std::vector<std::vector<Triangulation>> found(members.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < members.size();) {
      auto t = Triangulation::build(*members[i]);
      for (auto& [r, m] : expand_once(t, cat.cls))
        if (static_cast<int>(r.num_vertices()) <= cat.max_vertices) found[i].push_back(std::move(r));
    }
  };
  int n = std::max(1, std::min<int>(threads, static_cast<int>(members.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& results : found)
    for (auto& r : results) cat.levels[static_cast<int>(r.num_vertices())].try_emplace(canonical_form(r), r.faces());
}

}  // namespace

std::vector<Step> expand_once(const Triangulation& t, DegreeClass c) {
  if (!in_class(t, c)) return {};
  return available_expansions(t, c);
}

std::size_t Catalog::size() const {
  std::size_t n = 0;
  for (const auto& [v, level] : levels) n += level.size();
  return n;
}

bool Catalog::contains(const Triangulation& t) const {
  auto it = levels.find(static_cast<int>(t.num_vertices()));
  return it != levels.end() && it->second.count(canonical_form(t));
}

Catalog enumerate(const std::vector<Triangulation>& seeds, DegreeClass c, int max_vertices,
                  const EnumerateOptions& opts) {
  if (seeds.empty()) throw Error(ErrorKind::EmptyInput, "no seeds");
  if (c == DegreeClass::Neither) throw Error(ErrorKind::ClassViolation, "enumeration needs F0(4) or F(4)");
  Catalog cat;
  cat.surface = classify_surface(seeds.front());
  cat.cls = c;
  cat.max_vertices = max_vertices;
  for (const auto& s : seeds) {
    if (classify_surface(s) != cat.surface)
      throw Error(ErrorKind::MixedSurfaces, classify_surface(s).to_string() + " vs " + cat.surface.to_string());
    if (!in_class(s, c)) throw Error(ErrorKind::ClassViolation, std::string("seed is not in ") + to_string(c));
    auto code = canonical_form(s);
    cat.seeds.push_back(code);
    if (static_cast<int>(s.num_vertices()) <= max_vertices)
      cat.levels[static_cast<int>(s.num_vertices())].try_emplace(code, s.faces());
  }
  std::sort(cat.seeds.begin(), cat.seeds.end());
  cat.seeds.erase(std::unique(cat.seeds.begin(), cat.seeds.end()), cat.seeds.end());
  resume(cat, opts);
  return cat;
}

void raise_limit(Catalog& cat, int max_vertices) {
  if (max_vertices <= cat.max_vertices) return;
  // No expansion adds more than four vertices (boundary octahedron).
  constexpr int kMaxGrowth = 4;
  cat.expanded_through = std::min(cat.expanded_through, cat.max_vertices - kMaxGrowth);
  cat.max_vertices = max_vertices;
}

void resume(Catalog& cat, const EnumerateOptions& opts) {
  int budget = opts.level_budget;
  for (int v = cat.expanded_through + 1; v <= cat.max_vertices; ++v) {
    if (cat.levels.count(v)) {
      if (opts.level_budget > 0 && budget-- == 0) return;
      expand_level(cat, v, opts.threads);
    }
    cat.expanded_through = v;
  }
}

void save_catalog(const Catalog& cat, const std::string& dir) {
  fs::create_directories(dir);
  {
    std::ofstream out(fs::path(dir) / "catalog.txt");
    out << "catalog\n"
        << "surface " << cat.surface.euler_characteristic << " " << (cat.surface.orientable ? 1 : 0) << " "
        << cat.surface.boundary_components << "\n"
        << "class " << class_token(cat.cls) << "\n"
        << "max_vertices " << cat.max_vertices << "\n"
        << "expanded_through " << cat.expanded_through << "\n"
        << "seeds " << cat.seeds.size() << "\n";
    for (const auto& s : cat.seeds) out << s.hex() << "\n";
    out << "levels";
    for (const auto& [v, level] : cat.levels) out << " " << v << ":" << level.size();
    out << "\n";
  }
  for (const auto& [v, level] : cat.levels) {
    std::ofstream out(fs::path(dir) / level_file(v));
    for (const auto& [code, faces] : level) out << code.hex() << "\t" << format_faces(faces) << "\n";
  }
}

Catalog load_catalog(const std::string& dir) {
  std::ifstream in(fs::path(dir) / "catalog.txt");
  if (!in) bad_catalog("cannot open " + dir + "/catalog.txt");
  Catalog cat;
  std::string key, cls, levels;
  int orientable = 0;
  std::size_t nseeds = 0;
  in >> key;
  if (key != "catalog") bad_catalog("missing header");
  if (!(in >> key >> cat.surface.euler_characteristic >> orientable >> cat.surface.boundary_components) || key != "surface")
    bad_catalog("bad surface line");
  cat.surface.orientable = orientable != 0;
  if (!(in >> key >> cls) || key != "class" || (cls != "f0" && cls != "f4")) bad_catalog("bad class line");
  cat.cls = cls == "f0" ? DegreeClass::InnerDegree4 : DegreeClass::MinDegree4;
  if (!(in >> key >> cat.max_vertices) || key != "max_vertices") bad_catalog("bad max_vertices line");
  if (!(in >> key >> cat.expanded_through) || key != "expanded_through") bad_catalog("bad expanded_through line");
  if (!(in >> key >> nseeds) || key != "seeds") bad_catalog("bad seeds line");
  for (std::size_t i = 0; i < nseeds; ++i) {
    std::string hex;
    if (!(in >> hex)) bad_catalog("missing seed code");
    cat.seeds.push_back(CanonicalForm::from_hex(hex));
  }
  in >> key;
  if (key != "levels") bad_catalog("missing levels line");
  std::getline(in, levels);
  std::istringstream ls(levels);
  std::string item;
  while (ls >> item) {
    auto colon = item.find(':');
    if (colon == std::string::npos) bad_catalog("bad level entry '" + item + "'");
    int v = std::stoi(item.substr(0, colon));
    std::size_t count = std::stoul(item.substr(colon + 1));
    std::ifstream lf(fs::path(dir) / level_file(v));
    if (!lf) bad_catalog("missing " + level_file(v));
    auto& level = cat.levels[v];
    std::string line;
    while (std::getline(lf, line)) {
      if (line.empty()) continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos) bad_catalog(level_file(v) + ": missing tab");
      level.emplace(CanonicalForm::from_hex(line.substr(0, tab)), parse_face_list(line.substr(tab + 1)));
    }
    if (level.size() != count) bad_catalog(level_file(v) + ": member count does not match header");
  }
  return cat;
}

}  // namespace trisurg
