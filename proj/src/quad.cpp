#include "reptile/quad.hpp"

#include <algorithm>

namespace reptile {

namespace {

constexpr int kKeyBits = 20;
constexpr int kKeyBias = 1 << (kKeyBits - 1);
constexpr std::uint64_t kKeyMask = (1ULL << kKeyBits) - 1;

// Unit-cube corners for each face, counter-clockwise seen from outside.
constexpr std::array<std::array<Vec3, 4>, 6> kFaceCorners = {{
    {{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}},  // +x
    {{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 0}}},  // -x
    {{{0, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}}},  // +y
    {{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1}}},  // -y
    {{{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}}},  // +z
    {{{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}}},  // -z
}};

}  // namespace

std::array<Vec3, 4> quad_corners(const Quad& q) {
  std::array<Vec3, 4> out;
  for (int i = 0; i < 4; ++i) {
    const Vec3& o = kFaceCorners[q.dir][i];
    out[i] = {q.cell.x + o[0], q.cell.y + o[1], q.cell.z + o[2]};
  }
  return out;
}

std::vector<Quad> boundary_quads(const Polycube& p) {
  std::vector<Quad> out;
  for (const Cell& c : p.cells()) {
    for (int dir = 0; dir < 6; ++dir) {
      if (!p.contains(c + kFaceOffsets[dir])) out.push_back({c, dir});
    }
  }
  return out;  // already sorted: cells ascend, dir ascends within a cell
}

std::uint64_t point_key(const Vec3& p) {
  std::uint64_t key = 0;
  for (int i = 0; i < 3; ++i) {
    key = (key << kKeyBits) | (static_cast<std::uint64_t>(p[i] + kKeyBias) & kKeyMask);
  }
  return key;
}

Vec3 point_from_key(std::uint64_t key) {
  Vec3 p;
  for (int i = 2; i >= 0; --i) {
    p[i] = static_cast<int>(key & kKeyMask) - kKeyBias;
    key >>= kKeyBits;
  }
  return p;
}

std::uint64_t edge_key(const Vec3& a, const Vec3& b) {
  const Vec3& lo = std::min(a, b);
  const Vec3& hi = std::max(a, b);
  int axis = 0;
  while (axis < 2 && lo[axis] == hi[axis]) ++axis;
  return point_key(lo) * 3 + static_cast<std::uint64_t>(axis);
}

}  // namespace reptile
