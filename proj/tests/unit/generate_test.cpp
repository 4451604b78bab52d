#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "disk_oracle.hpp"
#include "support.hpp"
#include "trisurg/fixtures.hpp"
#include "trisurg/generate.hpp"

using namespace trisurg;
namespace fx = trisurg::fixtures;

namespace {

std::set<CanonicalForm> codes(const Catalog& c) {
  std::set<CanonicalForm> out;
  for (const auto& [v, level] : c.levels)
    for (const auto& [code, faces] : level) out.insert(code);
  return out;
}

Triangulation shuffled(const Triangulation& t, std::mt19937& rng) {
  std::vector<VertexId> ids = t.vertices();
  std::vector<VertexId> perm = ids;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<VertexId, VertexId> to;
  for (std::size_t i = 0; i < ids.size(); ++i) to[ids[i]] = perm[i] + 100;
  FaceList faces = t.faces();
  std::shuffle(faces.begin(), faces.end(), rng);
  for (Face& f : faces)
    for (VertexId& v : f) v = to[v];
  return Triangulation::build(faces);
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("trisurg_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST(Oracle, SphereCounts) {
  // Known counts of simplicial sphere triangulations on 4..9 vertices.
  const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 50};
  for (int n = 4; n <= 9; ++n) EXPECT_EQ(disk_oracle::spheres(n).size(), expected[n - 4]) << n;
}

TEST(Oracle, ProjectivePlaneCounts) {
  // Known counts of projective-plane triangulations on 6..9 vertices.
  const std::vector<std::size_t> expected{1, 3, 16, 134};
  for (int n = 6; n <= 9; ++n) EXPECT_EQ(disk_oracle::projective_planes(n).size(), expected[n - 6]) << n;
}

TEST(Expand, DiskOctahedron) {
  auto steps = expand_once(fx::disk_oct(), DegreeClass::MinDegree4);
  bool e1 = false, e2 = false;
  for (const auto& [r, m] : steps) {
    EXPECT_TRUE(in_class(r, DegreeClass::MinDegree4));
    EXPECT_TRUE(try_build(r.faces()).has_value());
    e1 |= m.kind == MoveKind::E1;
    e2 |= m.kind == MoveKind::E2;
  }
  EXPECT_TRUE(e1);
  EXPECT_TRUE(e2);
}

TEST(Expand, Flag5SplitsTriodes) {
  auto t = fx::flag5();
  bool split_a = false, split_b = false;
  for (const auto& [r, m] : expand_once(t, DegreeClass::InnerDegree4)) {
    if (m.kind != MoveKind::E1) continue;
    split_a |= m.site[0] == 2;
    split_b |= m.site[0] == 3;
  }
  EXPECT_TRUE(split_a);
  EXPECT_TRUE(split_b);
}

TEST(Expand, ClosedSphereOnlySplitsAndInsertions) {
  for (const auto& [r, m] : expand_once(fx::sphere_oct(), DegreeClass::MinDegree4))
    EXPECT_TRUE(m.kind == MoveKind::E1 || m.kind == MoveKind::E2) << to_string(m.kind);
  EXPECT_TRUE(expand_once(fx::flag5(), DegreeClass::MinDegree4).empty());
}

TEST(Enumerate, MixedSurfaces) {
  try {
    enumerate({fx::disk_oct(), fx::mobius_m1()}, DegreeClass::MinDegree4, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedSurfaces);
  }
}

TEST(Enumerate, DisksMatchBruteForce) {
  auto cat = enumerate({fx::flag5(), fx::disk_oct()}, DegreeClass::InnerDegree4, 8);
  std::set<CanonicalForm> oracle;
  for (int n = 3; n <= 8; ++n)
    for (const auto& [code, faces] : disk_oracle::disks(n))
      if (in_class(Triangulation::build(faces), DegreeClass::InnerDegree4)) oracle.insert(code);
  EXPECT_EQ(codes(cat), oracle);
  EXPECT_GT(oracle.size(), 2u);
}

// The recorded irreducible Möbius strips are exactly the brute-force ones,
// and expanding them reaches every F0(4) Möbius strip.
TEST(Enumerate, MobiusFromIrreduciblesMatchesBruteForce) {
  const int max_v = 8;
  std::set<CanonicalForm> recorded, irreducible, oracle;
  std::vector<Triangulation> seeds;
  for (const auto& entry : std::filesystem::directory_iterator(std::filesystem::path(TRISURG_DATA_DIR) / "mobius_irreducible")) {
    seeds.push_back(read_tri_file(entry.path().string()));
    recorded.insert(canonical_form(seeds.back()));
  }
  for (int n = 5; n <= max_v; ++n)
    for (const auto& [code, faces] : disk_oracle::mobius_strips(n)) {
      auto t = Triangulation::build(faces);
      if (!in_class(t, DegreeClass::InnerDegree4)) continue;
      oracle.insert(code);
      bool stuck = true;
      for (Edge e : t.edges()) stuck = stuck && !is_contractible(t, e).contractible();
      if (stuck) irreducible.insert(code);
    }
  EXPECT_EQ(recorded.size(), 6u);
  EXPECT_EQ(recorded, irreducible);
  EXPECT_EQ(codes(enumerate(seeds, DegreeClass::InnerDegree4, max_v)), oracle);
}

TEST(Enumerate, MobiusMembersKeepTheirSurface) {
  auto cat = enumerate({fx::mobius_m1()}, DegreeClass::MinDegree4, 7);
  EXPECT_GT(cat.size(), 1u);
  for (const auto& [v, level] : cat.levels)
    for (const auto& [code, faces] : level) {
      auto t = Triangulation::build(faces);
      EXPECT_EQ(classify_surface(t), (SurfaceClass{0, false, 1}));
      EXPECT_TRUE(in_class(t, DegreeClass::MinDegree4));
      EXPECT_EQ(static_cast<int>(t.num_vertices()), v);
      EXPECT_EQ(canonical_form(t), code);
    }
}

TEST(Property, EnumerationIgnoresSeedLabels) {
  std::mt19937 rng(61);
  auto base = enumerate({fx::disk_oct()}, DegreeClass::MinDegree4, 9);
  for (int i = 0; i < 3; ++i) {
    auto again = enumerate({shuffled(fx::disk_oct(), rng)}, DegreeClass::MinDegree4, 9, {2, 0});
    EXPECT_EQ(codes(again), codes(base));
  }
}

TEST(Property, DiskCatalogReducesToDiskOct) {
  auto cat = enumerate({fx::disk_oct()}, DegreeClass::MinDegree4, 9);
  for (const auto& [v, level] : cat.levels)
    for (const auto& [code, faces] : level) {
      auto red = reduce_to_4minimal(Triangulation::build(faces), false);
      EXPECT_TRUE(is_equivalent(red.terminal, fx::disk_oct()));
    }
}

TEST(Catalogs, SaveLoadAndResume) {
  auto dir = scratch_dir("resume");
  auto full = enumerate({fx::mobius_m1()}, DegreeClass::MinDegree4, 8);
  auto partial = enumerate({fx::mobius_m1()}, DegreeClass::MinDegree4, 8, {1, 1});
  EXPECT_LT(partial.expanded_through, 8);
  save_catalog(partial, dir.string());
  auto loaded = load_catalog(dir.string());
  EXPECT_EQ(codes(loaded), codes(partial));
  EXPECT_EQ(loaded.expanded_through, partial.expanded_through);
  EXPECT_EQ(loaded.surface, partial.surface);
  resume(loaded);
  EXPECT_EQ(codes(loaded), codes(full));
  save_catalog(full, (dir / "full").string());
  EXPECT_EQ(codes(load_catalog((dir / "full").string())), codes(full));
  std::filesystem::remove_all(dir);
  EXPECT_THROW(load_catalog(dir.string()), Error);
}
