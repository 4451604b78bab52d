#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "trisurg/complex.hpp"
#include "trisurg/fixtures.hpp"

using namespace trisurg;
namespace fx = trisurg::fixtures;

namespace {

ErrorKind build_error(FaceList faces) {
  Error err(ErrorKind::EmptyInput, "");
  EXPECT_FALSE(try_build(std::move(faces), &err).has_value());
  return err.kind();
}

FaceList relabel(const FaceList& faces, std::mt19937& rng) {
  std::vector<VertexId> ids;
  for (const Face& f : faces) ids.insert(ids.end(), f.begin(), f.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<VertexId> image(ids.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<VertexId>(10 + 3 * i);
  std::shuffle(image.begin(), image.end(), rng);
  FaceList out;
  for (const Face& f : faces) {
    Face g;
    for (int k = 0; k < 3; ++k)
      g[k] = image[std::lower_bound(ids.begin(), ids.end(), f[k]) - ids.begin()];
    std::shuffle(g.begin(), g.end(), rng);
    out.push_back(g);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace

TEST(Build, AcceptsSmallDisks) {
  EXPECT_EQ(fx::single_triangle().num_faces(), 1u);
  auto k4 = fx::k4_disk();
  EXPECT_EQ(k4.num_vertices(), 4u);
  EXPECT_EQ(k4.num_edges(), 6u);
  auto strip = Triangulation::build({{1, 2, 3}, {1, 2, 4}});
  EXPECT_EQ(strip.num_boundary_edges(), 4u);
  EXPECT_FALSE(strip.is_boundary_edge(1, 2));
}

TEST(Build, RejectsDegenerateInput) {
  EXPECT_EQ(build_error({}), ErrorKind::EmptyInput);
  EXPECT_EQ(build_error({{1, 1, 2}}), ErrorKind::InvalidFace);
  EXPECT_EQ(build_error({{1, 2, 3}, {1, 2, 3}}), ErrorKind::TwoFacesShareTwoEdges);
  EXPECT_EQ(build_error({{1, 2, 3}, {3, 2, 1}}), ErrorKind::TwoFacesShareTwoEdges);
  EXPECT_EQ(build_error({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}), ErrorKind::NonManifoldEdge);
  EXPECT_EQ(build_error({{1, 2, 3}, {4, 5, 6}}), ErrorKind::DisconnectedComplex);
  // Two triangles sharing only a vertex: link of 1 is two disjoint edges.
  EXPECT_EQ(build_error({{1, 2, 3}, {1, 4, 5}}), ErrorKind::BadVertexLink);
}

TEST(Classify, Fixtures) {
  EXPECT_EQ(classify_surface(fx::disk_oct()), (SurfaceClass{1, true, 1}));
  EXPECT_EQ(classify_surface(fx::mobius_m1()), (SurfaceClass{0, false, 1}));
  EXPECT_EQ(classify_surface(fx::sphere_oct()), (SurfaceClass{2, true, 0}));
  EXPECT_EQ(classify_surface(fx::torus7()), (SurfaceClass{0, true, 0}));
  EXPECT_EQ(classify_surface(fx::punctured_torus6()), (SurfaceClass{-1, true, 1}));
  EXPECT_EQ(classify_surface(fx::flag5()), (SurfaceClass{1, true, 1}));
}

TEST(Link, RotationOrder) {
  EXPECT_EQ(fx::k4_disk().link(4), (VertexLink{{1, 2, 3}, true}));
  EXPECT_EQ(fx::flag5().link(5), (VertexLink{{1, 2, 3, 4}, true}));
  // Faces at vertex 1 of M1: 132, 521, 415 -> path 3-2-5-4.
  EXPECT_EQ(fx::mobius_m1().link(1), (VertexLink{{3, 2, 5, 4}, false}));
  EXPECT_THROW(fx::k4_disk().link(9), Error);
}

TEST(Boundary, Cycles) {
  EXPECT_EQ(boundary(fx::single_triangle()).cycles, (std::vector<std::vector<VertexId>>{{1, 2, 3}}));
  EXPECT_EQ(boundary(fx::mobius_m1()).cycles, (std::vector<std::vector<VertexId>>{{1, 3, 5, 2, 4}}));
  EXPECT_TRUE(boundary(fx::sphere_oct()).cycles.empty());
  EXPECT_EQ(boundary(fx::disk_oct()).cycles, (std::vector<std::vector<VertexId>>{{2, 5, 6}}));
}

TEST(Boundary, Distance) {
  EXPECT_EQ(edge_distance_to_boundary(fx::mobius_m1(), Edge(1, 2)), 0);
  EXPECT_EQ(edge_distance_to_boundary(fx::disk_oct(), Edge(1, 3)), 1);
  EXPECT_EQ(edge_distance_to_boundary(fx::disk_oct(), Edge(2, 6)), 0);
  try {
    edge_distance_to_boundary(fx::sphere_oct(), Edge(1, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyBoundary);
  }
}

TEST(ClassMembership, Fixtures) {
  EXPECT_EQ(class_membership(fx::mobius_m1()), DegreeClass::MinDegree4);
  EXPECT_EQ(class_membership(fx::flag5()), DegreeClass::InnerDegree4);
  EXPECT_EQ(class_membership(fx::k4_disk()), DegreeClass::Neither);
  EXPECT_EQ(class_membership(fx::disk_oct()), DegreeClass::MinDegree4);
  EXPECT_TRUE(in_class(fx::disk_oct(), DegreeClass::InnerDegree4));
}

TEST(CanonicalForm, DistinguishesAndMatches) {
  EXPECT_NE(canonical_form(fx::disk_oct()), canonical_form(fx::flag5()));
  EXPECT_NE(canonical_form(fx::torus7()), canonical_form(fx::sphere_oct()));
  // Mirror image: reverse every face.
  const auto m1 = fx::mobius_m1();
  FaceList mirror;
  for (Face f : m1.faces()) mirror.push_back({f[2], f[1], f[0]});
  EXPECT_TRUE(is_equivalent(fx::mobius_m1(), Triangulation::build(mirror)));
  // Same graph, different complexes: disk strip vs. its flip.
  auto a = Triangulation::build({{1, 2, 3}, {1, 3, 4}});
  auto b = Triangulation::build({{1, 2, 4}, {2, 3, 4}});
  EXPECT_TRUE(is_equivalent(a, b));
  EXPECT_EQ(CanonicalForm::from_hex(canonical_form(a).hex()), canonical_form(a));
}

TEST(Property, RelabelingInvariance) {
  std::mt19937 rng(7);
  for (const auto& named : fx::all()) {
    const auto code = canonical_form(named.tri);
    for (int trial = 0; trial < 5; ++trial) {
      auto t = Triangulation::build(relabel(named.tri.faces(), rng));
      EXPECT_EQ(canonical_form(t), code) << named.name;
      EXPECT_EQ(classify_surface(t), classify_surface(named.tri)) << named.name;
    }
  }
}

TEST(Property, CountingIdentities) {
  for (const auto& named : fx::all()) {
    const auto& t = named.tri;
    std::size_t degree_sum = 0;
    for (VertexId v : t.vertices()) degree_sum += static_cast<std::size_t>(t.degree(v));
    EXPECT_EQ(degree_sum, 2 * t.num_edges()) << named.name;
    EXPECT_EQ(3 * t.num_faces(), 2 * t.num_edges() - t.num_boundary_edges()) << named.name;
    auto sc = classify_surface(t);
    EXPECT_LE(sc.boundary_components, 1) << named.name;
  }
}

TEST(TriFormat, RoundTripKeepsOrder) {
  auto faces = fx::mobius_m1().faces();
  std::string text = serialize_tri(faces);
  EXPECT_EQ(text.substr(0, 6), "tri 5\n");
  EXPECT_EQ(parse_tri(text), faces);
  EXPECT_EQ(parse_tri("# comment\ntri 1\n1 2 3 # trailing\n"), (FaceList{{1, 2, 3}}));
  EXPECT_THROW(parse_tri("tri 2\n1 2 3\n"), Error);
  EXPECT_THROW(parse_tri("tri 1\n1 2\n"), Error);
  EXPECT_THROW(parse_tri("1 2 3\n"), Error);
}
