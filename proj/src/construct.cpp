#include "reptile/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace reptile {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonAdjacentStep: return "NonAdjacentStep";
    case ViolationKind::SelfContact: return "SelfContact";
    case ViolationKind::CrossArcContact: return "CrossArcContact";
    case ViolationKind::BadEndpoint: return "BadEndpoint";
    case ViolationKind::SideFaceContact: return "SideFaceContact";
    case ViolationKind::RefinementTooSmall: return "RefinementTooSmall";
  }
  return "Unknown";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (arc >= 0) os << " arc " << arc;
  for (const Cell& c : cells) os << " (" << c.x << ',' << c.y << ',' << c.z << ')';
  return os.str();
}

namespace {

int chebyshev(const Cell& a, const Cell& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

bool face_adjacent(const Cell& a, const Cell& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z) == 1;
}

struct PathSlot {
  int arc;
  int index;
};

}  // namespace

std::vector<Violation> validate_arc_diagram(const ArcDiagram& d) {
  std::vector<Violation> out;
  const int m = d.m;
  const int n = static_cast<int>(d.arcs.size());
  if (m < 1 || (n >= 1 && m < 3)) {
    out.push_back({ViolationKind::RefinementTooSmall, -1, {}});
    return out;
  }

  std::unordered_map<Cell, std::vector<PathSlot>, CellHash> where;
  for (int a = 0; a < n; ++a) {
    const auto& path = d.arcs[a];
    if (path.empty()) {
      out.push_back({ViolationKind::BadEndpoint, a, {}});
      continue;
    }
    const int last = static_cast<int>(path.size()) - 1;
    for (int i = 0; i <= last; ++i) {
      const Cell& c = path[i];
      where[c].push_back({a, i});
      if (i > 0 && !face_adjacent(path[i - 1], c))
        out.push_back({ViolationKind::NonAdjacentStep, a, {path[i - 1], c}});
      if (c.x < 1 || c.x > m - 2 || c.y < 1 || c.y > m - 2)
        out.push_back({ViolationKind::SideFaceContact, a, {c}});
      const bool bottom = c.z == 0;
      const bool top = c.z == m - 1;
      const bool inside = c.z >= 0 && c.z <= m - 1;
      if (!inside || (i == 0) != bottom || (i == last) != top)
        out.push_back({ViolationKind::BadEndpoint, a, {c}});
    }
  }

  // Vertex contacts, each unordered pair of path positions reported once.
  for (int a = 0; a < n; ++a) {
    const auto& path = d.arcs[a];
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
      const Cell& c = path[i];
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
          for (int dz = -1; dz <= 1; ++dz) {
            auto it = where.find(c + Vec3{dx, dy, dz});
            if (it == where.end()) continue;
            for (const PathSlot& other : it->second) {
              if (std::pair(other.arc, other.index) <= std::pair(a, i)) continue;
              if (other.arc != a) {
                out.push_back({ViolationKind::CrossArcContact, a, {c, d.arcs[other.arc][other.index]}});
              } else if (other.index - i > 2 || chebyshev(c, path[other.index]) == 0) {
                out.push_back({ViolationKind::SelfContact, a, {c, path[other.index]}});
              }
            }
          }
    }
  }
  return out;
}

namespace {

void require_valid(const ArcDiagram& d) {
  const auto violations = validate_arc_diagram(d);
  if (violations.empty()) return;
  std::string msg = "invalid arc diagram:";
  for (const auto& v : violations) msg += "\n  " + v.describe();
  throw Error(ErrorCode::InvalidDiagram, msg);
}

}  // namespace

Polycube thicken_arcs(const ArcDiagram& d) {
  require_valid(d);
  if (d.arcs.empty()) throw Error(ErrorCode::InvalidDiagram, "diagram has no arcs to thicken");
  std::vector<Cell> cells;
  for (const auto& path : d.arcs) cells.insert(cells.end(), path.begin(), path.end());
  return Polycube(std::move(cells));
}

Isometry half_turn(int m) {
  return {Mat3{1, 0, 0, 0, -1, 0, 0, 0, -1}, Vec3{0, 0, 2 * m}};
}

ConstructionResult construct_reptile(const ArcDiagram& d) {
  require_valid(d);
  const int m = d.m;
  const Isometry r = half_turn(m);

  std::unordered_set<Cell, CellHash> tube_set;
  std::vector<Cell> tubes;
  for (const auto& path : d.arcs)
    for (const Cell& c : path)
      if (tube_set.insert(c).second) tubes.push_back(c);
  std::sort(tubes.begin(), tubes.end());

  std::vector<Cell> cells;
  cells.reserve(4 * static_cast<std::size_t>(m) * m * m);
  for (int x = -m; x < m; ++x)
    for (int y = -m; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        const Cell c{x, y, z};
        // C minus A, and the padding cubes C1, C2, C3
        if (x >= 0 && y >= 0 && tube_set.count(c)) continue;
        cells.push_back(c);
      }
  for (const Cell& c : tubes) cells.push_back(r.apply(c));

  return {Polycube(std::move(cells)), std::move(tubes), r, m, static_cast<int>(d.arcs.size())};
}

namespace {

std::vector<Cell> column(int x, int y, int z0, int z1) {
  std::vector<Cell> out;
  for (int z = z0; z <= z1; ++z) out.push_back({x, y, z});
  return out;
}

// Walk from the last cell of `path` to (x, y) within its layer, one axis at a time.
void walk_to(std::vector<Cell>& path, int x, int y) {
  Cell c = path.back();
  while (c.x != x) {
    c.x += x > c.x ? 1 : -1;
    path.push_back(c);
  }
  while (c.y != y) {
    c.y += y > c.y ? 1 : -1;
    path.push_back(c);
  }
}

void climb_to(std::vector<Cell>& path, int z) {
  Cell c = path.back();
  while (c.z != z) {
    c.z += z > c.z ? 1 : -1;
    path.push_back(c);
  }
}

// Two arcs in the 7-refined cube: a straight column through the centre and a
// second arc that winds twice around it on the square ring of radius 2 before
// leaving through the top.
ArcDiagram figure_four() {
  constexpr int m = 7;
  ArcDiagram d;
  d.m = m;
  d.arcs.push_back(column(3, 3, 0, m - 1));

  std::vector<Cell> wind{{1, 1, 0}};
  climb_to(wind, 1);
  walk_to(wind, 1, 5);
  walk_to(wind, 5, 5);
  walk_to(wind, 5, 1);
  walk_to(wind, 3, 1);
  climb_to(wind, 3);
  walk_to(wind, 1, 1);
  walk_to(wind, 1, 5);
  walk_to(wind, 5, 5);
  walk_to(wind, 5, 1);
  climb_to(wind, m - 1);
  d.arcs.push_back(std::move(wind));
  return d;
}

}  // namespace

ArcDiagram builtin_diagram(std::string_view name) {
  if (name == "empty-m1") return ArcDiagram{1, {}};
  if (name == "column-m3") return ArcDiagram{3, {column(1, 1, 0, 2)}};
  if (name == "figure-4") return figure_four();
  throw Error(ErrorCode::InvalidArgument, "unknown built-in diagram '" + std::string(name) + "'");
}

std::vector<std::string> builtin_diagram_names() { return {"empty-m1", "column-m3", "figure-4"}; }

}  // namespace reptile
