#pragma once

#include <array>
#include <vector>

#include "reptile/certify.hpp"
#include "reptile/lattice.hpp"
#include "reptile/topology.hpp"

namespace fixtures {

using reptile::Polycube;

inline Polycube cells(std::vector<std::array<int, 3>> list) { return reptile::make_polycube(list); }

inline Polycube unit_cube() { return cells({{0, 0, 0}}); }
inline Polycube bar2() { return cells({{0, 0, 0}, {0, 0, 1}}); }
inline Polycube l_tricube() { return cells({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}); }
inline Polycube i_tricube() { return cells({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}); }
// Steps along x, y, z in turn: a chiral tetracube.
inline Polycube skew_tetracube() { return cells({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}}); }
inline Polycube skew_mirror() { return cells({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, -1}}); }

inline Polycube hollow_block() {
  std::vector<std::array<int, 3>> out;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        if (!(x == 1 && y == 1 && z == 1)) out.push_back({x, y, z});
  return cells(out);
}

// The half-turn pairing two figure-one pieces into the 4-cube.
inline reptile::Isometry figure_one_pairing() {
  return {reptile::Mat3{1, 0, 0, 0, -1, 0, 0, 0, -1}, reptile::Vec3{0, 0, 4}};
}

// Every certified piece must have a connected boundary.
inline bool piece_boundary_connected(const reptile::TilingCertificate& c) {
  return reptile::surface_components(reptile::boundary_surface(c.piece)).size() == 1;
}

}  // namespace fixtures
