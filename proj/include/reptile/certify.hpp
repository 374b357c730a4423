#pragma once

// Tiling certificates and the searches that produce them.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reptile/construct.hpp"
#include "reptile/lattice.hpp"
#include "reptile/topology.hpp"

namespace reptile {

// A piece, a target and placements whose images partition the target. When
// `scale` is set the target is the piece blown up by that factor and the
// certificate witnesses a rep-tile of index scale^3.
struct TilingCertificate {
  Polycube piece;
  Polycube target;
  std::vector<Isometry> placements;
  SymmetryMode mode = SymmetryMode::Proper;
  std::optional<int> scale;

  bool operator==(const TilingCertificate&) const = default;
};

enum class VerifyStatus { Ok, Overlap, Gap, NotScaled, BadMode };

const char* to_string(VerifyStatus status);

struct VerifyReport {
  VerifyStatus status = VerifyStatus::Ok;
  std::string detail;

  bool ok() const { return status == VerifyStatus::Ok; }
};

// Checks, in order: disjoint images, union equals target, target is a
// translate of scale(piece, s) with s^3 placements, placements proper under
// Proper mode.
VerifyReport verify_certificate(const TilingCertificate& c);

struct SearchLimits {
  std::uint64_t node_budget = 10'000'000;
  std::chrono::milliseconds time_budget{60'000};
};

enum class SearchOutcome { Found, Exhausted, NodeBudgetExceeded, Timeout };

const char* to_string(SearchOutcome outcome);

struct TilingSearch {
  SearchOutcome outcome = SearchOutcome::Exhausted;
  std::vector<Isometry> placements;  // set when outcome == Found
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};

  bool found() const { return outcome == SearchOutcome::Found; }
  bool gave_up() const {
    return outcome == SearchOutcome::NodeBudgetExceeded || outcome == SearchOutcome::Timeout;
  }
};

// Exact cover by backtracking: always fill the lexicographically least
// uncovered target cell, trying orientations in group order. The first
// solution in that order is returned. A node is one accepted placement.
TilingSearch find_tiling(const Polycube& target, const Polycube& piece, SymmetryMode mode,
                         const SearchLimits& limits = {});

struct ReptileSearch {
  TilingSearch search;
  std::optional<TilingCertificate> certificate;
};

// Tiles scale(canonical(p), s) with copies of canonical(p).
ReptileSearch certify_reptile(const Polycube& p, int s, SymmetryMode mode,
                              const SearchLimits& limits = {});

// Certificate for scale(p, s) when p u g(p) is exactly an s-cube: every cell
// of p becomes an s-cube filled by a translate of the pair. Throws
// NotABrickPair otherwise. Mode is Proper when g is a rotation, else Full.
TilingCertificate brick_certificate(const Polycube& p, const Isometry& g, int s);

// brick_certificate(x, r, 2m): 8m^3 placements.
TilingCertificate construction_certificate(const ConstructionResult& r);

// Re-expresses a certificate with its piece in canonical form; the target
// moves with it when the certificate is a rep-tile certificate.
TilingCertificate canonicalize(const TilingCertificate& c);

// Face-connected polycubes with n cells, one canonical representative per
// congruence class, in ascending order.
std::vector<Polycube> enumerate_polycubes(int n, SymmetryMode mode);

struct SearchEntry {
  Polycube piece;
  TilingSearch search;
  std::optional<TilingCertificate> certificate;
  BettiTriple betti;
  std::vector<int> genera;
};

struct SearchReport {
  std::vector<SearchEntry> entries;  // every piece tried, in enumeration order

  std::vector<const SearchEntry*> successes() const;
  std::vector<const SearchEntry*> gave_up() const;
};

// Tries every manifold polycube with at most n_max cells as a rep-tile of
// ratio s. Pieces are independent; `threads` > 1 spreads them over workers
// and the report is identical to the sequential one.
SearchReport search_reptiles(int n_max, int s, SymmetryMode mode, const SearchLimits& limits = {},
                             unsigned threads = 1);

}  // namespace reptile
