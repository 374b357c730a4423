#pragma once

// Building a polycube rep-tile from arcs in a subdivided cube.
//
// The cube C = [0,m)^3 (cell units) carries n proper arcs given as cell
// paths from the bottom layer to the top layer. Removing the tubes A around
// the arcs, padding with three more m-cubes C1, C2, C3 and re-attaching the
// rotated tubes r(A) yields X with X u r(X) = [-m,m)^2 x [0,2m). Two copies of
// X tile a cube of side 2m, so scale(X, 2m) splits into 8m^3 copies of X.

#include <string>
#include <string_view>
#include <vector>

#include "reptile/lattice.hpp"

namespace reptile {

struct ArcDiagram {
  int m = 1;
  std::vector<std::vector<Cell>> arcs;

  bool operator==(const ArcDiagram&) const = default;
};

enum class ViolationKind {
  NonAdjacentStep,
  SelfContact,
  CrossArcContact,
  BadEndpoint,
  SideFaceContact,
  RefinementTooSmall,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int arc = -1;  // -1 when the violation is about the diagram as a whole
  std::vector<Cell> cells;

  std::string describe() const;
};

// Empty result means the diagram is valid. Paths may turn: two cells of the
// diagram may share a vertex only when they belong to the same arc and are at
// most two steps apart along it.
std::vector<Violation> validate_arc_diagram(const ArcDiagram& d);

// Union of the arc cells. Throws InvalidDiagram on an invalid or arc-free
// diagram.
Polycube thicken_arcs(const ArcDiagram& d);

struct ConstructionResult {
  Polycube x;
  std::vector<Cell> tubes;  // A; empty when there are no arcs
  Isometry r;               // (x,y,z) -> (x, -1-y, 2m-1-z) on cells
  int m = 1;
  int n = 0;
};

// Cell form of the half-turn about the line {(t, 0, m)}.
Isometry half_turn(int m);

// Throws InvalidDiagram unless validate_arc_diagram(d) is empty.
ConstructionResult construct_reptile(const ArcDiagram& d);

// Built-in diagrams: "empty-m1", "column-m3", "figure-4".
ArcDiagram builtin_diagram(std::string_view name);
std::vector<std::string> builtin_diagram_names();

}  // namespace reptile
