#include "reptile/topology.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace reptile {

QuadSurface boundary_surface(const Polycube& p) {
  if (!is_manifold(p)) throw Error(ErrorCode::NotManifold, "polycube is not a 3-manifold");
  return {boundary_quads(p)};
}

std::vector<SurfaceComponent> surface_components(const QuadSurface& s) {
  const std::size_t n = s.quads.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  std::unordered_map<std::uint64_t, int> first_quad_on_edge;
  first_quad_on_edge.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = quad_corners(s.quads[i]);
    for (int k = 0; k < 4; ++k) {
      auto [it, fresh] = first_quad_on_edge.emplace(edge_key(v[k], v[(k + 1) % 4]), static_cast<int>(i));
      if (!fresh) {
        const int a = find(static_cast<int>(i));
        const int b = find(it->second);
        // smaller root wins so the component id is its least quad
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  std::map<int, std::size_t> slot;  // root -> output index, ordered by least quad
  for (std::size_t i = 0; i < n; ++i) slot.emplace(find(static_cast<int>(i)), 0);
  std::size_t next = 0;
  for (auto& [root, idx] : slot) idx = next++;

  std::vector<std::unordered_set<std::uint64_t>> verts(slot.size());
  std::vector<std::unordered_set<std::uint64_t>> edges(slot.size());
  std::vector<SurfaceComponent> out(slot.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = slot[find(static_cast<int>(i))];
    const auto v = quad_corners(s.quads[i]);
    for (int k = 0; k < 4; ++k) {
      verts[c].insert(point_key(v[k]));
      edges[c].insert(edge_key(v[k], v[(k + 1) % 4]));
    }
    ++out[c].quad_count;
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    out[c].euler_characteristic = static_cast<int>(verts[c].size()) -
                                  static_cast<int>(edges[c].size()) +
                                  static_cast<int>(out[c].quad_count);
    out[c].genus = (2 - out[c].euler_characteristic) / 2;
  }
  return out;
}

bool is_boundary_connected(const Polycube& p) {
  return surface_components(boundary_surface(p)).size() == 1;
}

namespace {

// A k-cell of the cubical complex: minimum lattice corner plus an axis tag.
// Squares are tagged by their normal axis, edges by their direction; vertices
// and cubes use tag 0.
struct Face {
  Vec3 corner;
  int axis;
  auto operator<=>(const Face&) const = default;
};

using Column = std::vector<int>;

std::vector<Face> sorted_unique(std::vector<Face> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int index_of(const std::vector<Face>& sorted, const Face& f) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), f) - sorted.begin());
}

Vec3 step(Vec3 p, int axis) {
  ++p[axis];
  return p;
}

// In-place symmetric difference of two sorted index lists.
void add_into(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

// Left-to-right column reduction over GF(2). Columns flagged in `skip` are
// known to reduce to zero. Returns the rank and flags each pivot row in
// `pivot_rows`.
std::size_t reduce_rank(std::vector<Column>& columns, std::size_t rows,
                        const std::vector<char>& skip, std::vector<char>& pivot_rows) {
  std::vector<int> owner(rows, -1);
  pivot_rows.assign(rows, 0);
  Column scratch;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (!skip.empty() && skip[j]) {
      columns[j].clear();
      continue;
    }
    Column& col = columns[j];
    while (!col.empty() && owner[col.back()] != -1) add_into(col, columns[owner[col.back()]], scratch);
    if (!col.empty()) {
      owner[col.back()] = static_cast<int>(j);
      pivot_rows[col.back()] = 1;
      ++rank;
    }
  }
  return rank;
}

}  // namespace

HomologyReport cubical_homology(const Polycube& p) {
  std::vector<Face> squares_raw, edges_raw, verts_raw;
  for (const Cell& c : p.cells()) {
    const Vec3 o{c.x, c.y, c.z};
    for (int a = 0; a < 3; ++a) {
      squares_raw.push_back({o, a});
      squares_raw.push_back({step(o, a), a});
    }
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy)
        for (int dz = 0; dz <= 1; ++dz) {
          const Vec3 v{o[0] + dx, o[1] + dy, o[2] + dz};
          verts_raw.push_back({v, 0});
          for (int a = 0; a < 3; ++a) {
            if (v[a] == o[a]) edges_raw.push_back({v, a});
          }
        }
  }
  const std::vector<Face> squares = sorted_unique(std::move(squares_raw));
  const std::vector<Face> edges = sorted_unique(std::move(edges_raw));
  const std::vector<Face> verts = sorted_unique(std::move(verts_raw));

  HomologyReport report;
  report.size = {verts.size(), edges.size(), squares.size(), p.size()};

  // d3: cubes -> squares
  std::vector<Column> d3;
  d3.reserve(p.size());
  for (const Cell& c : p.cells()) {
    const Vec3 o{c.x, c.y, c.z};
    Column col;
    for (int a = 0; a < 3; ++a) {
      col.push_back(index_of(squares, {o, a}));
      col.push_back(index_of(squares, {step(o, a), a}));
    }
    std::sort(col.begin(), col.end());
    d3.push_back(std::move(col));
  }

  // d2: squares -> edges
  std::vector<Column> d2;
  d2.reserve(squares.size());
  for (const Face& s : squares) {
    const int b = (s.axis + 1) % 3;
    const int c = (s.axis + 2) % 3;
    Column col{index_of(edges, {s.corner, b}), index_of(edges, {step(s.corner, c), b}),
               index_of(edges, {s.corner, c}), index_of(edges, {step(s.corner, b), c})};
    std::sort(col.begin(), col.end());
    d2.push_back(std::move(col));
  }

  // d1: edges -> vertices
  std::vector<Column> d1;
  d1.reserve(edges.size());
  for (const Face& e : edges) {
    Column col{index_of(verts, {e.corner, 0}), index_of(verts, {step(e.corner, e.axis), 0})};
    std::sort(col.begin(), col.end());
    d1.push_back(std::move(col));
  }

  // Pivot rows of d(k+1) index columns of d(k) that reduce to zero.
  std::vector<char> cleared_squares, cleared_edges, unused;
  report.rank_d3 = reduce_rank(d3, squares.size(), {}, cleared_squares);
  report.rank_d2 = reduce_rank(d2, edges.size(), cleared_squares, cleared_edges);
  report.rank_d1 = reduce_rank(d1, verts.size(), cleared_edges, unused);

  const auto V = static_cast<long long>(verts.size());
  const auto E = static_cast<long long>(edges.size());
  const auto F = static_cast<long long>(squares.size());
  const auto r1 = static_cast<long long>(report.rank_d1);
  const auto r2 = static_cast<long long>(report.rank_d2);
  const auto r3 = static_cast<long long>(report.rank_d3);
  report.betti.b0 = static_cast<int>(V - r1);
  report.betti.b1 = static_cast<int>((E - r1) - r2);
  report.betti.b2 = static_cast<int>((F - r2) - r3);
  return report;
}

}  // namespace reptile
