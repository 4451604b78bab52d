#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "trisurg/fixtures.hpp"
#include "trisurg/reduce.hpp"

using namespace trisurg;
using namespace testing_support;
namespace fx = trisurg::fixtures;

namespace {

std::vector<Triangulation> grown(DegreeClass c, unsigned seed, int count, int max_steps) {
  std::mt19937 rng(seed);
  std::vector<Triangulation> seeds;
  if (c == DegreeClass::MinDegree4)
    seeds = {fx::disk_oct(), fx::mobius_m1(), fx::torus7(),
             Triangulation::build(glue_quasi(fx::punctured_torus6().faces(), 1, 3, 2))};
  else
    seeds = {fx::flag5(), fx::disk_oct(), fx::mobius_m1(), fx::punctured_torus6()};
  std::vector<Triangulation> out;
  for (int i = 0; i < count; ++i) {
    Triangulation t = seeds[rng() % seeds.size()];
    int steps = 1 + static_cast<int>(rng() % max_steps);
    for (int s = 0; s < steps; ++s) {
      auto ex = available_expansions(t, c);
      if (ex.empty()) break;
      t = ex[rng() % ex.size()].first;
    }
    out.push_back(t);
  }
  return out;
}

bool has_4c_edge(const Triangulation& t) {
  for (Edge e : t.edges())
    if (k_contractible(t, e, 4)) return true;
  return false;
}

}  // namespace

TEST(Reductions, FaceInsertionUndoneByR2) {
  const auto torus = fx::torus7();
  auto [t, m] = apply_E(torus, MoveKind::E2, {1, 2, 4}, DegreeClass::MinDegree4);
  EXPECT_EQ(t.num_vertices(), 10u);
  EXPECT_EQ(m.site, (std::vector<VertexId>{1, 2, 4}));
  auto octs = find_octahedra(t);
  ASSERT_EQ(octs.size(), 1u);
  auto c = octs[0].center;
  auto back = apply_R(t, MoveKind::R2, {c[0], c[1], c[2]}, DegreeClass::MinDegree4);
  EXPECT_TRUE(is_equivalent(back.first, torus));
  EXPECT_EQ(back.second.kind, MoveKind::R2);
}

TEST(Reductions, BoundaryAdditionUndoneByRedundantDeletion) {
  const auto m1 = fx::mobius_m1();
  auto [t, m] = apply_E(m1, MoveKind::E2, {1, 3}, DegreeClass::MinDegree4);
  EXPECT_EQ(t.num_vertices(), m1.num_vertices() + 4);
  auto octs = find_octahedra(t);
  ASSERT_EQ(octs.size(), 1u);
  ASSERT_TRUE(octs[0].external);
  EXPECT_EQ(octahedron_status(t, octs[0], DegreeClass::MinDegree4).status, OctahedronStatus::Redundant);
  auto c = octs[0].center;
  auto back = apply_R(t, MoveKind::R2, {c[0], c[1], c[2], octs[0].remaining[octs[0].apex]},
                      DegreeClass::MinDegree4);
  EXPECT_TRUE(is_equivalent(back.first, m1));
}

TEST(Reductions, SiteErrors) {
  auto t = fx::mobius_m1();
  try {
    apply_R(t, MoveKind::R2, {1, 2, 3}, DegreeClass::MinDegree4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SitePreconditionFailed);
  }
  EXPECT_THROW(apply_R(t, MoveKind::E2, {1, 2, 3}, DegreeClass::MinDegree4), Error);
  EXPECT_THROW(apply_E(t, MoveKind::E2, {1, 2}, DegreeClass::MinDegree4), Error);
  // Contracting a flag spoke leaves F0(4).
  try {
    apply_R(fx::flag5(), MoveKind::R1, {5, 2}, DegreeClass::InnerDegree4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ClassViolation);
  }
}

TEST(Reductions, FlagRemoval) {
  auto t = Triangulation::build(glue_flag(fx::disk_oct().faces(), 2, 6));
  auto [r, m] = apply_R(t, MoveKind::RF, {7}, DegreeClass::InnerDegree4);
  EXPECT_TRUE(is_equivalent(r, fx::disk_oct()));
  auto [back, m2] = apply_E(r, MoveKind::EF, {2, 6}, DegreeClass::InnerDegree4);
  EXPECT_TRUE(is_equivalent(back, t));
  EXPECT_THROW(apply_R(fx::flag5(), MoveKind::RF, {5}, DegreeClass::InnerDegree4), Error);
}

TEST(Reductions, QuasiRemoval) {
  auto base = fx::punctured_torus6();
  auto t = Triangulation::build(glue_quasi(base.faces(), 1, 3, 2));
  auto q = find_quasi_octahedra(t).at(0);
  auto c = q.center;
  std::sort(c.begin(), c.end());
  auto [r, m] = apply_R(t, MoveKind::R4, {c[0], c[1], c[2]}, DegreeClass::MinDegree4);
  EXPECT_TRUE(is_equivalent(r, base));
}

TEST(Certificates, Fixtures) {
  auto cert = certify(fx::mobius_m1(), DegreeClass::MinDegree4);
  EXPECT_EQ(cert.verdict, Verdict::Irreducible);
  EXPECT_TRUE(cert.residuals.empty());

  auto split = split_vertex(fx::disk_oct(), 1, SplitSpec{{2, 4}}, 4).first;
  ASSERT_TRUE(in_class(split, DegreeClass::MinDegree4));
  cert = certify(split, DegreeClass::MinDegree4);
  EXPECT_EQ(cert.verdict, Verdict::NotMinimal);
  ASSERT_TRUE(cert.next.has_value());

  cert = certify(fx::disk_oct(), DegreeClass::MinDegree4);
  EXPECT_EQ(cert.verdict, Verdict::FourMinimal);
  EXPECT_TRUE(cert.all_housed());
  EXPECT_NE(format_certificate(cert).find("disk-octahedron"), std::string::npos);

  cert = certify(fx::flag5(), DegreeClass::InnerDegree4);
  EXPECT_EQ(cert.verdict, Verdict::FourMinimal);
  EXPECT_TRUE(cert.all_housed());
}

TEST(Drivers, FlagOnDiskOct) {
  auto t = Triangulation::build(glue_flag(fx::disk_oct().faces(), 2, 6));
  auto red = reduce_to_irreducible(t);
  EXPECT_LT(red.terminal.num_vertices(), t.num_vertices());
  EXPECT_NE(red.certificate.verdict, Verdict::NotMinimal);
  EXPECT_TRUE(is_equivalent(replay(t, red.trace), red.terminal));
}

TEST(Drivers, InputErrors) {
  try {
    reduce_to_4minimal(fx::flag5(), false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ClassViolation);
  }
}

TEST(Traces, RoundTripAndMismatch) {
  auto t = grown(DegreeClass::MinDegree4, 5, 1, 4)[0];
  auto red = reduce_to_4minimal(t, false);
  auto text = format_reduction_trace(red.trace);
  std::istringstream in(text);
  auto parsed = parse_reduction_trace(in);
  EXPECT_EQ(parsed.moves, red.trace.moves);
  EXPECT_EQ(parsed.initial, red.trace.initial);
  EXPECT_EQ(parsed.terminal, red.trace.terminal);
  EXPECT_EQ(format_reduction_trace(parsed), text);
  try {
    replay(fx::mobius_m1(), parsed);
    if (!is_equivalent(t, fx::mobius_m1())) FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MoveMismatch);
  }
  std::istringstream junk("trace\nclass f9\n");
  EXPECT_THROW(parse_reduction_trace(junk), Error);
}

TEST(Property, ExpansionsInvertToReductions) {
  for (auto c : {DegreeClass::InnerDegree4, DegreeClass::MinDegree4}) {
    for (const auto& t : grown(c, 41, 12, 3)) {
      for (const auto& [r, m] : available_expansions(t, c)) {
        EXPECT_TRUE(in_class(r, c));
        EXPECT_GT(r.num_vertices(), t.num_vertices()) << to_string(m.kind);
        EXPECT_EQ(classify_surface(r), classify_surface(t));
        EXPECT_TRUE(is_equivalent(apply(r, invert(m)), t));
      }
    }
  }
}

TEST(Property, ReductionsShrinkAndStayInClass) {
  for (auto c : {DegreeClass::InnerDegree4, DegreeClass::MinDegree4}) {
    for (const auto& t : grown(c, 43, 20, 4)) {
      for (const auto& [r, m] : available_reductions(t, c)) {
        EXPECT_TRUE(in_class(r, c)) << to_string(m.kind);
        EXPECT_LT(r.num_vertices(), t.num_vertices()) << to_string(m.kind);
        EXPECT_EQ(classify_surface(r), classify_surface(t));
        EXPECT_TRUE(is_equivalent(apply(r, invert(m)), t));
      }
    }
  }
}

TEST(Property, DriverTerminalsHaveNo4ContractibleEdge) {
  for (const auto& t : grown(DegreeClass::MinDegree4, 47, 25, 5)) {
    auto red = reduce_to_4minimal(t, false);
    EXPECT_TRUE(in_class(red.terminal, DegreeClass::MinDegree4));
    EXPECT_FALSE(has_4c_edge(red.terminal));
    EXPECT_NE(red.certificate.verdict, Verdict::NotMinimal);
    EXPECT_TRUE(is_equivalent(replay(t, red.trace), red.terminal));
  }
}

namespace {

// Flag on DISK_OCT with an octahedron inserted into the flag face x a b.
Triangulation folded_fixture() {
  return Triangulation::build(insert_octahedron(glue_flag(fx::disk_oct().faces(), 2, 6), {7, 8, 9}));
}

bool some_reduction_returns_to(const Triangulation& r, const Triangulation& t, MoveKind kind) {
  for (const auto& [back, m] : available_reductions(r, DegreeClass::MinDegree4))
    if (m.kind == kind && is_equivalent(back, t)) return true;
  return false;
}

}  // namespace

TEST(Reductions, UnfoldThenFold) {
  auto t = folded_fixture();
  ASSERT_TRUE(in_class(t, DegreeClass::MinDegree4));
  auto [r, m] = apply_E(t, MoveKind::E3, {10, 11, 12, 8, 9}, DegreeClass::MinDegree4);
  EXPECT_EQ(r.num_vertices(), t.num_vertices() + 1);
  EXPECT_TRUE(some_reduction_returns_to(r, t, MoveKind::R3));
  // p and q keep too few neighbors for a fold in the punctured torus.
  auto pt = fx::punctured_torus6();
  Edge e = pt.boundary_edges()[0];
  auto u = Triangulation::build(insert_octahedron(pt.faces(), {e.u, e.v, pt.apexes(e.u, e.v)[0]}));
  auto o = find_octahedra(u).at(0);
  EXPECT_THROW(apply_E(u, MoveKind::E3, {o.center[0], o.center[1], o.center[2], e.u, e.v}, DegreeClass::MinDegree4),
               Error);
}

TEST(Reductions, BoundaryOctahedronReplacement) {
  const auto t = folded_fixture();
  int found = 0;
  for (const auto& [r, m] : available_expansions(t, DegreeClass::MinDegree4)) {
    if (m.kind != MoveKind::E5) continue;
    ++found;
    EXPECT_TRUE(some_reduction_returns_to(r, t, MoveKind::R5));
  }
  EXPECT_EQ(found, 2);
}

TEST(Reductions, DoubleSplitUndoneByDoubleContraction) {
  const auto t = fx::mobius_m1();
  int found = 0;
  for (const auto& [r, m] : available_expansions(t, DegreeClass::MinDegree4)) {
    if (m.kind != MoveKind::E6) continue;
    ++found;
    EXPECT_EQ(r.num_vertices(), t.num_vertices() + 2);
    auto back = apply_R(r, MoveKind::R6, m.site, DegreeClass::MinDegree4);
    EXPECT_TRUE(is_equivalent(back.first, t));
  }
  EXPECT_GT(found, 0);
}

TEST(Reductions, EveryQuasiAdditionIsRemovable) {
  auto t = folded_fixture();
  for (const auto& [r, m] : available_expansions(t, DegreeClass::MinDegree4)) {
    if (m.kind != MoveKind::E4) continue;
    bool r4 = false;
    for (const auto& step : available_reductions(r, DegreeClass::MinDegree4)) r4 |= step.second.kind == MoveKind::R4;
    EXPECT_TRUE(r4) << format_move(m);
  }
}

TEST(Certificates, TorusQuasiOctahedronIsFourMinimal) {
  auto t = fx::torus_quasi_oct();
  auto cert = certify(t, DegreeClass::MinDegree4);
  EXPECT_EQ(cert.verdict, Verdict::FourMinimal);
  ASSERT_FALSE(cert.residuals.empty());
  for (const auto& r : cert.residuals) EXPECT_EQ(r.housing, Housing::QuasiOctahedron);
  // No further progress without flips; with flips the driver reaches an irreducible one.
  EXPECT_TRUE(reduce_to_4minimal(t, false).trace.moves.empty());
  auto flipped = reduce_to_4minimal(t, true);
  EXPECT_EQ(flipped.certificate.verdict, Verdict::Irreducible);
  EXPECT_EQ(classify_surface(flipped.terminal), classify_surface(t));
}

TEST(Property, MComponentsSurviveReductionsElsewhere) {
  std::mt19937 rng(53);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    Triangulation t = fx::mobius_m_component();
    int steps = static_cast<int>(rng() % 3);
    for (int s = 0; s < steps; ++s) {
      auto ex = available_expansions(t, DegreeClass::MinDegree4);
      t = ex[rng() % ex.size()].first;
    }
    for (const auto& m : find_M_components(t)) {
      auto mv = m.vertices();
      for (const auto& [r, move] : available_reductions(t, DegreeClass::MinDegree4)) {
        bool touches = false;
        for (const FaceList* fl : {&move.removed, &move.added})
          for (const Face& f : *fl)
            for (VertexId v : f) touches |= std::find(mv.begin(), mv.end(), v) != mv.end();
        if (touches) continue;
        ++checked;
        auto after = find_M_components(r);
        EXPECT_NE(std::find(after.begin(), after.end(), m), after.end());
      }
    }
  }
  EXPECT_GT(checked, 0);
}
