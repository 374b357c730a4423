#include "properties.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "reptile/certify.hpp"
#include "reptile/construct.hpp"
#include "reptile/io.hpp"
#include "reptile/lattice.hpp"
#include "reptile/topology.hpp"

namespace props {

using namespace reptile;

namespace {

std::string show(const Polycube& p) {
  std::ostringstream os;
  for (const Cell& c : p.cells()) os << '(' << c.x << ',' << c.y << ',' << c.z << ')';
  return os.str();
}

// Random subset of a small box; often disconnected or non-manifold.
Polycube random_subset(std::mt19937& rng, int side, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Cell> cells;
  for (int x = 0; x < side; ++x)
    for (int y = 0; y < side; ++y)
      for (int z = 0; z < side; ++z)
        if (keep(rng)) cells.push_back({x, y, z});
  if (cells.empty()) cells.push_back({0, 0, 0});
  return Polycube(std::move(cells));
}

int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::multiset<std::pair<int, int>> boundary_signature(const Polycube& p) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& c : surface_components(boundary_surface(p))) out.insert({c.euler_characteristic, c.genus});
  return out;
}

}  // namespace

Result group_axioms() {
  Result r{"group axioms"};
  for (SymmetryMode mode : {SymmetryMode::Proper, SymmetryMode::Full}) {
    const auto& group = symmetry_group(mode);
    const bool proper = mode == SymmetryMode::Proper;
    r.check(group.size() == (proper ? 24u : 48u), "group order");
    r.check(group.front() == Isometry::identity(), "identity first");
    auto reference = oracle::orthogonal_integer_matrices(proper);
    std::set<Mat3> ours;
    for (const auto& g : group) ours.insert(g.rot);
    r.check(ours == std::set<Mat3>(reference.begin(), reference.end()), "matches orthogonal matrices");
    for (const auto& a : group) {
      r.check(compose(a, a.inverse()) == Isometry::identity(), "inverse");
      for (const auto& b : group) r.check(ours.count(compose(a, b).rot) == 1, "closure");
    }
  }
  return r;
}

Result canonical_form_soundness(std::uint32_t seed, int cases) {
  Result r{"canonical-form soundness"};
  r.inputs = cases;
  std::mt19937 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Polycube p = oracle::random_polycube(rng, uniform(rng, 1, 8));
    const bool proper = i % 2 == 0;
    const SymmetryMode mode = proper ? SymmetryMode::Proper : SymmetryMode::Full;
    const Isometry g = oracle::random_isometry(rng, proper);
    const CanonicalForm a = canonical_form(p, mode);
    const CanonicalForm b = canonical_form(apply_isometry(g, p), mode);
    r.check(a.shape == b.shape && apply_isometry(a.witness, p) == a.shape &&
                canonical_form(a.shape, mode).shape == a.shape,
            "canonical form of " + show(p));
  }
  return r;
}

Result congruence_symmetry(std::uint32_t seed, int cases) {
  Result r{"congruence symmetry"};
  r.inputs = cases;
  std::mt19937 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int n = uniform(rng, 1, 6);
    const Polycube a = oracle::random_polycube(rng, n);
    const bool related = i % 3 != 0;
    const Polycube b = related ? apply_isometry(oracle::random_isometry(rng, false, 2), a)
                               : oracle::random_polycube(rng, n);
    const auto ab = congruent(a, b, SymmetryMode::Proper);
    const auto ba = congruent(b, a, SymmetryMode::Proper);
    bool ok = ab.has_value() == ba.has_value();
    if (ab) ok = ok && apply_isometry(*ab, a) == b && apply_isometry(*ba, b) == a;
    if (i % 10 == 0) ok = ok && ab.has_value() == oracle::brute_congruence(a, b, true).has_value();
    r.check(ok, "congruence of " + show(a) + " and " + show(b));
  }
  return r;
}

Result scaling_multiplicativity(std::uint32_t seed, int cases) {
  Result r{"scaling multiplicativity"};
  r.inputs = cases;
  std::mt19937 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Polycube p = oracle::random_polycube(rng, uniform(rng, 1, 6));
    const int a = uniform(rng, 1, 3), b = uniform(rng, 1, 3);
    const Polycube ab = scale_polycube(p, a * b);
    r.check(scale_polycube(scale_polycube(p, a), b) == ab && ab.size() == p.size() * a * a * a * b * b * b,
            "scale " + show(p));
  }
  return r;
}

Result isometry_preserves_invariants(std::uint32_t seed, int cases) {
  Result r{"isometries preserve invariants"};
  r.inputs = cases;
  std::mt19937 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Polycube p = i % 2 ? oracle::random_polycube(rng, uniform(rng, 1, 12)) : random_subset(rng, 3, 0.6);
    const Polycube q = apply_isometry(oracle::random_isometry(rng, false), p);
    bool ok = q.size() == p.size() && is_face_connected(q) == is_face_connected(p) &&
              is_manifold(q) == is_manifold(p) && betti_numbers(q) == betti_numbers(p);
    if (ok && is_manifold(p)) ok = boundary_signature(p) == boundary_signature(q);
    r.check(ok, "invariants of " + show(p));
  }
  return r;
}

Result manifold_agrees_with_local_oracle(std::uint32_t seed, int cases) {
  Result r{"manifold test vs vertex-star oracle"};
  r.inputs = cases;
  std::mt19937 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Polycube p = i % 2 ? oracle::random_polycube(rng, uniform(rng, 2, 14))
                             : random_subset(rng, uniform(rng, 2, 4), 0.3 + 0.5 * (i % 7) / 7.0);
    r.check(is_manifold(p) == oracle::local_manifold(p), "manifold " + show(p));
  }
  return r;
}

Result euler_poincare(std::uint32_t seed, int cases) {
  Result r{"Euler-Poincare identity"};
  r.inputs = cases;
  std::mt19937 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Polycube p = i % 2 ? oracle::random_polycube(rng, uniform(rng, 1, 20)) : random_subset(rng, 4, 0.7);
    const HomologyReport h = cubical_homology(p);
    const long long alt = h.betti.b0 - h.betti.b1 + h.betti.b2;
    r.check(h.size.euler_characteristic() == alt && h.rank_d3 == h.size.cubes,
            "chi vs betti for " + show(p));
  }
  return r;
}

Result betti_agrees_with_duality_oracle(std::uint32_t seed, int cases) {
  Result r{"Betti numbers vs duality oracle"};
  r.inputs = cases;
  std::mt19937 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Polycube p = random_subset(rng, uniform(rng, 3, 5), 0.55 + 0.35 * (i % 5) / 5.0);
    r.check(betti_numbers(p) == oracle::betti_by_duality(p), "betti " + show(p));
  }
  return r;
}

Result subdivision_invariance(std::uint32_t seed, int cases) {
  Result r{"subdivision invariance"};
  r.inputs = cases;
  std::mt19937 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Polycube p = i % 2 ? oracle::random_polycube(rng, uniform(rng, 1, 8)) : random_subset(rng, 3, 0.7);
    const int s = uniform(rng, 2, 3);
    r.check(betti_numbers(scale_polycube(p, s)) == betti_numbers(p), "subdivide " + show(p));
  }
  return r;
}

Result certificate_fuzzing(std::uint32_t seed, int cases) {
  Result r{"certificate fuzzing"};
  r.inputs = cases;
  std::vector<TilingCertificate> pool;
  for (int n = 1; n <= 3; ++n)
    for (const Polycube& p : enumerate_polycubes(n, SymmetryMode::Proper)) {
      auto rs = certify_reptile(p, 2, SymmetryMode::Proper);
      if (rs.certificate) pool.push_back(*rs.certificate);
    }
  pool.push_back(brick_certificate(io::figure_one(), {Mat3{1, 0, 0, 0, -1, 0, 0, 0, -1}, Vec3{0, 0, 4}}, 4));
  pool.push_back(construction_certificate(construct_reptile(builtin_diagram("column-m3"))));

  for (const auto& c : pool) r.check(verify_certificate(c).ok(), "unperturbed certificate verifies");

  std::mt19937 rng(seed);
  for (int i = 0; i < cases; ++i) {
    TilingCertificate c = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, c.placements.size() - 1)(rng);
    const Vec3& d = kFaceOffsets[uniform(rng, 0, 5)];
    for (int a = 0; a < 3; ++a) c.placements[k].trans[a] += d[a];
    const VerifyStatus s = verify_certificate(c).status;
    r.check(s == VerifyStatus::Overlap || s == VerifyStatus::Gap,
            "perturbed placement " + std::to_string(k) + " gave " + to_string(s));
  }
  return r;
}

Result tiling_agrees_with_bitmask_oracle(std::uint32_t seed, int cases) {
  Result r{"exact cover vs bitmask oracle"};
  r.inputs = cases;
  std::mt19937 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Polycube piece = oracle::random_polycube(rng, uniform(rng, 1, 4));
    std::vector<Cell> cells;
    switch (i % 3) {
      case 0: {  // box
        int a, b, c;
        do {
          a = uniform(rng, 1, 4), b = uniform(rng, 1, 4), c = uniform(rng, 1, 4);
        } while (a * b * c < 2);
        const Polycube box = make_box({0, 0, 0}, {a, b, c});
        cells.assign(box.cells().begin(), box.cells().end());
        break;
      }
      case 1: {  // disjoint random placements of the piece, tileable by construction
        std::set<Cell> used;
        const int copies = uniform(rng, 1, 64 / static_cast<int>(piece.size()));
        for (int attempt = 0; attempt < 200 && static_cast<int>(used.size()) < copies * static_cast<int>(piece.size());
             ++attempt) {
          const Polycube img = apply_isometry(oracle::random_isometry(rng, true, 2), piece);
          if (std::none_of(img.cells().begin(), img.cells().end(), [&](const Cell& c) { return used.count(c); }))
            used.insert(img.cells().begin(), img.cells().end());
        }
        cells.assign(used.begin(), used.end());
        break;
      }
      default: {  // random blob with a size divisible by the piece
        const int n = static_cast<int>(piece.size()) * uniform(rng, 1, 64 / static_cast<int>(piece.size()));
        const Polycube blob = oracle::random_polycube(rng, n);
        cells.assign(blob.cells().begin(), blob.cells().end());
      }
    }
    const Polycube target(cells);
    const bool expected = oracle::bitmask_tiling_exists(target, piece, true);
    const TilingSearch found = find_tiling(target, piece, SymmetryMode::Proper);
    bool ok = !found.gave_up() && found.found() == expected;
    if (ok && found.found()) {
      ok = verify_certificate({piece, target, found.placements, SymmetryMode::Proper, std::nullopt}).ok();
    }
    r.check(ok, "tile " + show(target) + " with " + show(piece));
  }
  return r;
}

Result determinism_under_parallelism() {
  Result r{"determinism under parallelism"};
  const SearchReport serial = search_reptiles(4, 2, SymmetryMode::Proper, {}, 1);
  for (unsigned threads : {2u, 4u, 8u}) {
    const SearchReport parallel = search_reptiles(4, 2, SymmetryMode::Proper, {}, threads);
    r.check(parallel.entries.size() == serial.entries.size(), "entry count");
    for (std::size_t i = 0; i < std::min(parallel.entries.size(), serial.entries.size()); ++i) {
      const auto& a = serial.entries[i];
      const auto& b = parallel.entries[i];
      r.check(a.piece == b.piece && a.search.outcome == b.search.outcome && a.search.nodes == b.search.nodes &&
                  a.search.placements == b.search.placements && a.certificate == b.certificate &&
                  a.betti == b.betti && a.genera == b.genera,
              "entry " + std::to_string(i) + " differs with " + std::to_string(threads) + " threads");
    }
  }
  const Polycube box = make_box({0, 0, 0}, {4, 4, 4});
  const Polycube l = make_polycube(std::vector<std::array<int, 3>>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const TilingSearch first = find_tiling(box, l, SymmetryMode::Proper);
  const TilingSearch second = find_tiling(box, l, SymmetryMode::Proper);
  r.check(first.outcome == second.outcome && first.placements == second.placements && first.nodes == second.nodes,
          "repeat find_tiling");
  return r;
}

std::vector<Result> invariant_battery(std::uint32_t seed) {
  return {
      group_axioms(),
      canonical_form_soundness(seed + 1, 200),
      congruence_symmetry(seed + 2, 150),
      scaling_multiplicativity(seed + 3, 100),
      isometry_preserves_invariants(seed + 4, 150),
      manifold_agrees_with_local_oracle(seed + 5, 200),
      euler_poincare(seed + 6, 150),
      betti_agrees_with_duality_oracle(seed + 7, 150),
      subdivision_invariance(seed + 8, 100),
      certificate_fuzzing(seed + 9, 200),
      determinism_under_parallelism(),
  };
}

}  // namespace props
