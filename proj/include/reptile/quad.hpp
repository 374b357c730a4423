#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "reptile/lattice.hpp"

namespace reptile {

// One unit boundary square: the face of `cell` in direction kFaceOffsets[dir].
struct Quad {
  Cell cell;
  int dir = 0;

  auto operator<=>(const Quad&) const = default;
};

// Corners counter-clockwise as seen from the side the face normal points to.
std::array<Vec3, 4> quad_corners(const Quad& q);

// Faces of cells in p whose face neighbour is not in p, sorted.
std::vector<Quad> boundary_quads(const Polycube& p);

// Packed lattice-point and lattice-edge keys. Coordinates must lie in
// [-2^19, 2^19).
std::uint64_t point_key(const Vec3& p);
Vec3 point_from_key(std::uint64_t key);
// Edge between two lattice points at unit distance.
std::uint64_t edge_key(const Vec3& a, const Vec3& b);

}  // namespace reptile
