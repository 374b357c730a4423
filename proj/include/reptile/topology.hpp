#pragma once

// Topological fingerprint of a polycube: its boundary surface split into
// components with Euler characteristic and genus, and mod-2 Betti numbers of
// the cubical complex.

#include <cstddef>
#include <vector>

#include "reptile/lattice.hpp"
#include "reptile/quad.hpp"

namespace reptile {

struct QuadSurface {
  std::vector<Quad> quads;  // sorted; outward normals
};

struct SurfaceComponent {
  std::size_t quad_count = 0;
  int euler_characteristic = 0;
  int genus = 0;

  bool operator==(const SurfaceComponent&) const = default;
};

struct BettiTriple {
  int b0 = 0;
  int b1 = 0;
  int b2 = 0;

  bool operator==(const BettiTriple&) const = default;
};

// Cell counts of the cubical complex of a polycube (closed cells).
struct ComplexSize {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t squares = 0;
  std::size_t cubes = 0;

  long long euler_characteristic() const {
    return static_cast<long long>(vertices) - static_cast<long long>(edges) +
           static_cast<long long>(squares) - static_cast<long long>(cubes);
  }
};

// Throws NotManifold unless is_manifold(p).
QuadSurface boundary_surface(const Polycube& p);

// Components of the edge-adjacency graph of quads, ordered by their least quad.
std::vector<SurfaceComponent> surface_components(const QuadSurface& s);

struct HomologyReport {
  BettiTriple betti;
  ComplexSize size;
  std::size_t rank_d1 = 0;
  std::size_t rank_d2 = 0;
  std::size_t rank_d3 = 0;
};

// Ranks over GF(2) of the cubical boundary maps, by column reduction.
HomologyReport cubical_homology(const Polycube& p);

inline BettiTriple betti_numbers(const Polycube& p) { return cubical_homology(p).betti; }

// Throws NotManifold unless is_manifold(p).
bool is_boundary_connected(const Polycube& p);

}  // namespace reptile
