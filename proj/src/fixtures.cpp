#include "trisurg/fixtures.hpp"

namespace trisurg::fixtures {

Triangulation single_triangle() { return Triangulation::build({{1, 2, 3}}); }

Triangulation k4_disk() { return Triangulation::build({{1, 2, 4}, {2, 3, 4}, {3, 1, 4}}); }

Triangulation disk_oct() {
  return Triangulation::build(
      {{1, 3, 4}, {1, 3, 2}, {3, 4, 5}, {1, 4, 6}, {5, 6, 4}, {5, 2, 3}, {6, 2, 1}});
}

Triangulation sphere_oct() {
  return Triangulation::build(
      {{1, 3, 4}, {1, 3, 2}, {3, 4, 5}, {1, 4, 6}, {5, 6, 4}, {5, 2, 3}, {6, 2, 1}, {2, 5, 6}});
}

Triangulation mobius_m1() {
  return Triangulation::build({{1, 3, 2}, {3, 5, 4}, {5, 2, 1}, {2, 4, 3}, {4, 1, 5}});
}

Triangulation flag5() { return Triangulation::build({{5, 1, 2}, {5, 2, 3}, {5, 3, 4}, {5, 4, 1}}); }

Triangulation torus7() {
  FaceList faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return Triangulation::build(faces);
}

Triangulation punctured_torus6() {
  const Triangulation torus = torus7();
  FaceList faces;
  for (const Face& f : torus.faces())
    if (!contains(f, 0)) faces.push_back(f);
  return Triangulation::build(faces);
}

// DISK_OCT with a flag on 2 6; x = 7.
Triangulation flag_ext_removable() {
  return Triangulation::build({{1, 2, 3}, {1, 2, 4}, {2, 3, 5}, {1, 3, 6}, {5, 6, 3}, {5, 4, 2},
                               {6, 4, 1}, {7, 4, 8}, {7, 8, 9}, {7, 9, 6}, {7, 6, 4}});
}

// DISK_OCT plus the ear 4 6 7, with a flag on 7 4; x = 8 and deg(7) = 4.
Triangulation flag_ext_blocked() {
  return Triangulation::build({{1, 2, 3}, {1, 2, 4}, {2, 3, 5}, {1, 3, 6}, {5, 6, 3}, {5, 4, 2},
                               {6, 4, 1}, {4, 6, 7}, {8, 7, 9}, {8, 9, 10}, {8, 10, 4}, {8, 4, 7}});
}

// Found by reducing random expansions of the punctured K7 torus.
Triangulation torus_quasi_oct() {
  return Triangulation::build({{1, 2, 3}, {4, 5, 6}, {4, 5, 7}, {3, 8, 2}, {3, 9, 1}, {6, 3, 9}, {9, 8, 1},
                               {1, 4, 6}, {1, 7, 4}, {7, 5, 3}, {6, 3, 5}, {8, 2, 6}, {8, 1, 6}});
}

// M-component centered at 1 2 3 (x = 3, x1 = 4, x2 = 5).
Triangulation mobius_m_component() {
  return Triangulation::build({{1, 2, 3},    {4, 3, 1},   {3, 5, 2},   {6, 7, 8},    {6, 7, 5},  {7, 8, 4},
                               {7, 4, 5},    {9, 10, 11}, {9, 10, 4},  {9, 11, 1},   {10, 11, 5}, {9, 1, 4},
                               {10, 5, 4},   {12, 13, 2}, {12, 2, 5},  {8, 13, 6},   {6, 12, 5}, {6, 12, 13}});
}

// Every N-component here has both edges on the boundary.
Triangulation mobius_n_strip() {
  return Triangulation::build({{1, 2, 3}, {2, 4, 5}, {6, 3, 1}, {3, 5, 2}, {7, 1, 6}, {7, 5, 4}, {4, 6, 7}});
}


}  // namespace trisurg::fixtures

namespace trisurg::fixtures {

std::vector<Named> all() {
  return {
      {"single_triangle", single_triangle()},
      {"k4_disk", k4_disk()},
      {"disk_oct", disk_oct()},
      {"sphere_oct", sphere_oct()},
      {"mobius_m1", mobius_m1()},
      {"flag5", flag5()},
      {"torus7", torus7()},
      {"punctured_torus6", punctured_torus6()},
      {"flag_ext_removable", flag_ext_removable()},
      {"flag_ext_blocked", flag_ext_blocked()},
      {"torus_quasi_oct", torus_quasi_oct()},
      {"mobius_m_component", mobius_m_component()},
      {"mobius_n_strip", mobius_n_strip()},
  };
}

Triangulation by_name(const std::string& name) {
  for (auto& n : all())
    if (n.name == name) return n.tri;
  throw Error(ErrorKind::ParseError, "unknown fixture '" + name + "'");
}

}  // namespace trisurg::fixtures
