#pragma once

// Exact polycubes on the integer lattice and the cubic-lattice isometry group.
//
// A cell is the unit cube [x,x+1]x[y,y+1]x[z,z+1], keyed by its minimum
// corner. Every operation here is integer arithmetic; nothing is rounded.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "reptile/error.hpp"

namespace reptile {

using Vec3 = std::array<int, 3>;

struct Cell {
  int x = 0;
  int y = 0;
  int z = 0;

  auto operator<=>(const Cell&) const = default;

  int operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  Cell operator+(const Vec3& d) const { return {x + d[0], y + d[1], z + d[2]}; }
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(c.x);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(c.y);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(c.z);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// The six face neighbours, ordered +x, -x, +y, -y, +z, -z.
inline constexpr std::array<Vec3, 6> kFaceOffsets = {{
    {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};

// Finite, non-empty, duplicate-free set of cells kept in lexicographic order.
class Polycube {
 public:
  // Deduplicates; throws EmptyPolycube on an empty list.
  explicit Polycube(std::vector<Cell> cells);

  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(const Cell& c) const;

  Cell min_corner() const;  // componentwise minimum
  Cell max_corner() const;  // componentwise maximum

  Polycube translated(const Vec3& d) const;
  // Translate so that the componentwise minimum sits at the origin.
  Polycube normalized() const;

  bool operator==(const Polycube&) const = default;
  auto operator<=>(const Polycube& o) const { return cells_ <=> o.cells_; }

 private:
  std::vector<Cell> cells_;
};

Polycube make_polycube(std::span<const std::array<int, 3>> cells);

// Cells of the half-open box [lo, hi) in each axis.
Polycube make_box(const Vec3& lo, const Vec3& hi);

enum class SymmetryMode { Proper, Full };

const char* to_string(SymmetryMode mode);

// Row-major signed permutation matrix.
using Mat3 = std::array<int, 9>;

// p -> rot * p + trans acting on points of R^3.
struct Isometry {
  Mat3 rot{1, 0, 0, 0, 1, 0, 0, 0, 1};
  Vec3 trans{0, 0, 0};

  static Isometry identity() { return {}; }
  static Isometry translation(const Vec3& t) { return {Mat3{1, 0, 0, 0, 1, 0, 0, 0, 1}, t}; }

  // Throws InvalidArgument unless rot is a signed permutation matrix.
  static Isometry checked(const Mat3& rot, const Vec3& trans);

  int det() const;
  bool is_proper() const { return det() == 1; }

  Vec3 apply_point(const Vec3& p) const;
  // Image of the unit cube keyed by c, itself keyed by its minimum corner.
  Cell apply(const Cell& c) const;

  Isometry inverse() const;
  bool operator==(const Isometry&) const = default;
};

bool is_signed_permutation(const Mat3& m);

// (a * b)(p) = a(b(p)).
Isometry compose(const Isometry& a, const Isometry& b);

// Rotation matrices of the cube, translation zero. Order: permutations of the
// axes in lexicographic order, then sign patterns from (+,+,+) to (-,-,-) with
// the z sign varying fastest. The identity is first.
const std::vector<Isometry>& symmetry_group(SymmetryMode mode);

Polycube apply_isometry(const Isometry& g, const Polycube& p);

struct CanonicalForm {
  Polycube shape;
  Isometry witness;  // apply_isometry(witness, input) == shape
};

CanonicalForm canonical_form(const Polycube& p, SymmetryMode mode);

// First g (group order, identity first) with apply_isometry(g, a) == b.
std::optional<Isometry> congruent(const Polycube& a, const Polycube& b,
                                  SymmetryMode mode);

// Each cell becomes an s*s*s block; throws BadScale for s < 1.
Polycube scale_polycube(const Polycube& p, int s);

bool is_face_connected(const Polycube& p);

// The union of closed cells is a 3-manifold with boundary: every boundary
// edge lies on two boundary squares and every boundary vertex link is one cycle.
bool is_manifold(const Polycube& p);

}  // namespace reptile
