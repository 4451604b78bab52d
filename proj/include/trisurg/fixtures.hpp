#pragma once

// Small named triangulations used by tests, the CLI and the Python module.

#include <string>
#include <vector>

#include "trisurg/complex.hpp"

namespace trisurg::fixtures {

/// Faces {1 2 3}.
Triangulation single_triangle();
/// K4 as a disk: center 4 over the triangle 1 2 3.
Triangulation k4_disk();
/// Octahedron minus one face; inner center 1 3 4, boundary hole 2 6 5.
Triangulation disk_oct();
/// Closed octahedron (sphere).
Triangulation sphere_oct();
/// K5 in the Möbius strip, boundary 1 3 5 2 4; all degrees 4.
Triangulation mobius_m1();
/// Wheel with four spokes: center 5, rim 1 2 3 4 (x1=1, a=2, b=3, x2=4).
Triangulation flag5();
/// Seven-vertex torus (K7).
Triangulation torus7();
/// K7 torus with vertex 0 removed: punctured torus, hexagonal boundary.
Triangulation punctured_torus6();

/// Flag glued to a larger disk along x1 x2 with deg(x1), deg(x2) >= 5.
Triangulation flag_ext_removable();
/// Flag pattern with deg(x1) == 4, so removing it would leave the class.
/// x has a 4-valent neighbor, so it is not reported as a flag.
Triangulation flag_ext_blocked();
/// Four-minimal punctured torus with exactly one non-removable
/// quasi-octahedron component.
Triangulation torus_quasi_oct();
/// Möbius strip carrying an M-component (not itself 4-minimal).
Triangulation mobius_m_component();
/// Möbius strip with an N-component whose two edges are boundary edges.
Triangulation mobius_n_strip();

struct Named {
  std::string name;
  Triangulation tri;
};
/// Every fixture above, by lowercase name.
std::vector<Named> all();
/// Looks up a fixture by name; throws UnknownVertex-free ParseError if absent.
Triangulation by_name(const std::string& name);

}  // namespace trisurg::fixtures
