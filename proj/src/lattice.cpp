#include "reptile/lattice.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "reptile/quad.hpp"

namespace reptile {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyPolycube: return "EmptyPolycube";
    case ErrorCode::BadScale: return "BadScale";
    case ErrorCode::NotManifold: return "NotManifold";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::NotABrickPair: return "NotABrickPair";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::BadCertificate: return "BadCertificate";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

const char* to_string(SymmetryMode mode) {
  return mode == SymmetryMode::Proper ? "proper" : "full";
}

// ---------------------------------------------------------------------------
// Polycube

Polycube::Polycube(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw Error(ErrorCode::EmptyPolycube, "polycube has no cells");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Polycube::contains(const Cell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Cell Polycube::min_corner() const {
  Cell lo = cells_.front();
  for (const Cell& c : cells_) {
    lo.x = std::min(lo.x, c.x);
    lo.y = std::min(lo.y, c.y);
    lo.z = std::min(lo.z, c.z);
  }
  return lo;
}

Cell Polycube::max_corner() const {
  Cell hi = cells_.front();
  for (const Cell& c : cells_) {
    hi.x = std::max(hi.x, c.x);
    hi.y = std::max(hi.y, c.y);
    hi.z = std::max(hi.z, c.z);
  }
  return hi;
}

Polycube Polycube::translated(const Vec3& d) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (const Cell& c : cells_) out.push_back(c + d);
  return Polycube(std::move(out));
}

Polycube Polycube::normalized() const {
  const Cell lo = min_corner();
  return translated({-lo.x, -lo.y, -lo.z});
}

Polycube make_polycube(std::span<const std::array<int, 3>> cells) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back({c[0], c[1], c[2]});
  return Polycube(std::move(out));
}

Polycube make_box(const Vec3& lo, const Vec3& hi) {
  std::vector<Cell> out;
  for (int x = lo[0]; x < hi[0]; ++x)
    for (int y = lo[1]; y < hi[1]; ++y)
      for (int z = lo[2]; z < hi[2]; ++z) out.push_back({x, y, z});
  return Polycube(std::move(out));
}

// ---------------------------------------------------------------------------
// Isometry

bool is_signed_permutation(const Mat3& m) {
  for (int i = 0; i < 3; ++i) {
    int row_nz = 0;
    int col_nz = 0;
    for (int j = 0; j < 3; ++j) {
      const int r = m[3 * i + j];
      const int c = m[3 * j + i];
      if (r != 0 && r != 1 && r != -1) return false;
      row_nz += r != 0;
      col_nz += c != 0;
    }
    if (row_nz != 1 || col_nz != 1) return false;
  }
  return true;
}

Isometry Isometry::checked(const Mat3& rot, const Vec3& trans) {
  if (!is_signed_permutation(rot))
    throw Error(ErrorCode::InvalidArgument, "rotation is not a signed permutation matrix");
  return {rot, trans};
}

int Isometry::det() const {
  const Mat3& m = rot;
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Vec3 Isometry::apply_point(const Vec3& p) const {
  Vec3 out;
  for (int i = 0; i < 3; ++i)
    out[i] = rot[3 * i] * p[0] + rot[3 * i + 1] * p[1] + rot[3 * i + 2] * p[2] + trans[i];
  return out;
}

Cell Isometry::apply(const Cell& c) const {
  // The far corner c + (1,1,1) lands at image + rot*(1,1,1); a negative row
  // sum means that corner is the new minimum.
  Vec3 p = apply_point({c.x, c.y, c.z});
  for (int i = 0; i < 3; ++i) {
    if (rot[3 * i] + rot[3 * i + 1] + rot[3 * i + 2] < 0) p[i] -= 1;
  }
  return {p[0], p[1], p[2]};
}

Isometry Isometry::inverse() const {
  Isometry inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv.rot[3 * i + j] = rot[3 * j + i];
  for (int i = 0; i < 3; ++i) {
    inv.trans[i] = -(inv.rot[3 * i] * trans[0] + inv.rot[3 * i + 1] * trans[1] +
                     inv.rot[3 * i + 2] * trans[2]);
  }
  return inv;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  Isometry out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += a.rot[3 * i + k] * b.rot[3 * k + j];
      out.rot[3 * i + j] = s;
    }
  const Vec3 t = a.apply_point(b.trans);
  out.trans = t;
  return out;
}

namespace {

std::vector<Isometry> build_group(bool proper_only) {
  std::vector<Isometry> group;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Isometry g;
      g.rot.fill(0);
      for (int row = 0; row < 3; ++row) {
        const bool negative = (signs >> (2 - row)) & 1;
        g.rot[3 * row + perm[row]] = negative ? -1 : 1;
      }
      if (!proper_only || g.is_proper()) group.push_back(g);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return group;
}

}  // namespace

const std::vector<Isometry>& symmetry_group(SymmetryMode mode) {
  static const std::vector<Isometry> proper = build_group(true);
  static const std::vector<Isometry> full = build_group(false);
  return mode == SymmetryMode::Proper ? proper : full;
}

Polycube apply_isometry(const Isometry& g, const Polycube& p) {
  std::vector<Cell> out;
  out.reserve(p.size());
  for (const Cell& c : p.cells()) out.push_back(g.apply(c));
  return Polycube(std::move(out));
}

namespace {

// Image of p under rot, translated to the origin and sorted; returns the shift.
Vec3 oriented_image(const Isometry& rot, const Polycube& p, std::vector<Cell>& out) {
  out.clear();
  Cell lo{std::numeric_limits<int>::max(), std::numeric_limits<int>::max(),
          std::numeric_limits<int>::max()};
  for (const Cell& c : p.cells()) {
    const Cell d = rot.apply(c);
    lo.x = std::min(lo.x, d.x);
    lo.y = std::min(lo.y, d.y);
    lo.z = std::min(lo.z, d.z);
    out.push_back(d);
  }
  const Vec3 shift{-lo.x, -lo.y, -lo.z};
  for (Cell& c : out) c = c + shift;
  std::sort(out.begin(), out.end());
  return shift;
}

}  // namespace

CanonicalForm canonical_form(const Polycube& p, SymmetryMode mode) {
  std::vector<Cell> best;
  std::vector<Cell> scratch;
  Isometry best_g;
  bool first = true;
  for (const Isometry& g : symmetry_group(mode)) {
    const Vec3 shift = oriented_image(g, p, scratch);
    if (first || scratch < best) {
      best.swap(scratch);
      best_g = compose(Isometry::translation(shift), g);
      first = false;
    }
  }
  return {Polycube(std::move(best)), best_g};
}

std::optional<Isometry> congruent(const Polycube& a, const Polycube& b, SymmetryMode mode) {
  if (a.size() != b.size()) return std::nullopt;
  const Cell b_lo = b.min_corner();
  const Vec3 b_shift{b_lo.x, b_lo.y, b_lo.z};
  std::vector<Cell> target(b.cells().begin(), b.cells().end());
  for (Cell& c : target) c = c + Vec3{-b_lo.x, -b_lo.y, -b_lo.z};

  std::vector<Cell> image;
  for (const Isometry& g : symmetry_group(mode)) {
    const Vec3 shift = oriented_image(g, a, image);
    if (image == target) {
      const Vec3 t{shift[0] + b_shift[0], shift[1] + b_shift[1], shift[2] + b_shift[2]};
      return compose(Isometry::translation(t), g);
    }
  }
  return std::nullopt;
}

Polycube scale_polycube(const Polycube& p, int s) {
  if (s < 1) throw Error(ErrorCode::BadScale, "scale factor must be >= 1, got " + std::to_string(s));
  std::vector<Cell> out;
  out.reserve(p.size() * static_cast<std::size_t>(s) * s * s);
  for (const Cell& c : p.cells())
    for (int dx = 0; dx < s; ++dx)
      for (int dy = 0; dy < s; ++dy)
        for (int dz = 0; dz < s; ++dz) out.push_back({s * c.x + dx, s * c.y + dy, s * c.z + dz});
  return Polycube(std::move(out));
}

bool is_face_connected(const Polycube& p) {
  const auto cells = p.cells();
  std::vector<char> seen(cells.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Cell c = cells[stack.back()];
    stack.pop_back();
    for (const Vec3& d : kFaceOffsets) {
      const Cell n = c + d;
      auto it = std::lower_bound(cells.begin(), cells.end(), n);
      if (it == cells.end() || *it != n) continue;
      const auto idx = static_cast<std::size_t>(it - cells.begin());
      if (seen[idx]) continue;
      seen[idx] = 1;
      ++reached;
      stack.push_back(idx);
    }
  }
  return reached == cells.size();
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_manifold(const Polycube& p) {
  const std::vector<Quad> quads = boundary_quads(p);

  std::unordered_map<std::uint64_t, int> edge_use;
  edge_use.reserve(quads.size() * 2);
  // vertex -> pairs of edges meeting there on one quad
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> fans;
  fans.reserve(quads.size());

  for (const Quad& q : quads) {
    const auto v = quad_corners(q);
    for (int i = 0; i < 4; ++i) {
      ++edge_use[edge_key(v[i], v[(i + 1) % 4])];
      fans[point_key(v[i])].emplace_back(edge_key(v[(i + 3) % 4], v[i]),
                                         edge_key(v[i], v[(i + 1) % 4]));
    }
  }
  for (const auto& [key, count] : edge_use) {
    if (count != 2) return false;
  }
  std::unordered_map<std::uint64_t, int> local;
  for (const auto& [vertex, fan] : fans) {
    local.clear();
    for (const auto& [a, b] : fan) {
      local.emplace(a, static_cast<int>(local.size()));
      local.emplace(b, static_cast<int>(local.size()));
    }
    DisjointSets sets(local.size());
    std::size_t components = local.size();
    for (const auto& [a, b] : fan) {
      if (sets.unite(local[a], local[b])) --components;
    }
    if (components != 1) return false;
  }
  return true;
}

}  // namespace reptile
