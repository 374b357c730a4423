#include "reptile/certify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace reptile {

const char* to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::Ok: return "ok";
    case VerifyStatus::Overlap: return "Overlap";
    case VerifyStatus::Gap: return "Gap";
    case VerifyStatus::NotScaled: return "NotScaled";
    case VerifyStatus::BadMode: return "BadMode";
  }
  return "unknown";
}

const char* to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found: return "Found";
    case SearchOutcome::Exhausted: return "Exhausted";
    case SearchOutcome::NodeBudgetExceeded: return "NodeBudgetExceeded";
    case SearchOutcome::Timeout: return "Timeout";
  }
  return "unknown";
}

namespace {

std::string cell_text(const Cell& c) {
  std::ostringstream os;
  os << '(' << c.x << ',' << c.y << ',' << c.z << ')';
  return os.str();
}

// Dense box of per-cell flags with a hash-set fallback for cells outside it.
class CellGrid {
 public:
  CellGrid(Cell lo, Cell hi) : lo_(lo) {
    dims_ = {hi.x - lo.x + 1, hi.y - lo.y + 1, hi.z - lo.z + 1};
    flags_.assign(static_cast<std::size_t>(dims_[0]) * dims_[1] * dims_[2], 0);
  }

  std::uint8_t* at(const Cell& c) {
    const int x = c.x - lo_.x, y = c.y - lo_.y, z = c.z - lo_.z;
    if (x < 0 || y < 0 || z < 0 || x >= dims_[0] || y >= dims_[1] || z >= dims_[2]) return nullptr;
    return &flags_[(static_cast<std::size_t>(x) * dims_[1] + y) * dims_[2] + z];
  }

  const std::vector<std::uint8_t>& flags() const { return flags_; }

 private:
  Cell lo_;
  std::array<int, 3> dims_;
  std::vector<std::uint8_t> flags_;
};

constexpr std::uint8_t kInTarget = 1;
constexpr std::uint8_t kCovered = 2;

}  // namespace

VerifyReport verify_certificate(const TilingCertificate& c) {
  for (std::size_t i = 0; i < c.placements.size(); ++i) {
    if (!is_signed_permutation(c.placements[i].rot))
      return {VerifyStatus::BadMode, "placement " + std::to_string(i) + " is not a lattice isometry"};
  }

  CellGrid grid(c.target.min_corner(), c.target.max_corner());
  for (const Cell& t : c.target.cells()) *grid.at(t) |= kInTarget;

  std::unordered_set<Cell, CellHash> outside;
  std::size_t stray = 0;
  for (std::size_t i = 0; i < c.placements.size(); ++i) {
    const Isometry& g = c.placements[i];
    for (const Cell& cell : c.piece.cells()) {
      const Cell img = g.apply(cell);
      std::uint8_t* f = grid.at(img);
      bool seen;
      if (f) {
        seen = *f & kCovered;
        *f |= kCovered;
        if (!seen && !(*f & kInTarget)) ++stray;
      } else {
        seen = !outside.insert(img).second;
        ++stray;
      }
      if (seen) {
        return {VerifyStatus::Overlap,
                "placement " + std::to_string(i) + " covers " + cell_text(img) + " a second time"};
      }
    }
  }
  if (stray > 0) return {VerifyStatus::Gap, std::to_string(stray) + " placed cells fall outside the target"};
  const auto& flags = grid.flags();
  const auto uncovered = std::count(flags.begin(), flags.end(), kInTarget);
  if (uncovered > 0) return {VerifyStatus::Gap, std::to_string(uncovered) + " target cells are uncovered"};

  if (c.scale) {
    const int s = *c.scale;
    const std::size_t k = s >= 1 ? static_cast<std::size_t>(s) * s * s : 0;
    if (s < 1 || c.target.size() != c.piece.size() * k ||
        c.target.normalized() != scale_polycube(c.piece, s).normalized()) {
      return {VerifyStatus::NotScaled, "target is not a translate of the piece scaled by " + std::to_string(s)};
    }
    if (c.placements.size() != k) {
      return {VerifyStatus::NotScaled, "expected " + std::to_string(k) + " placements, found " +
                                           std::to_string(c.placements.size())};
    }
  }

  if (c.mode == SymmetryMode::Proper) {
    for (std::size_t i = 0; i < c.placements.size(); ++i) {
      if (!c.placements[i].is_proper())
        return {VerifyStatus::BadMode, "placement " + std::to_string(i) + " is a reflection"};
    }
  }
  return {VerifyStatus::Ok, {}};
}

// ---------------------------------------------------------------------------
// Exact cover

namespace {

struct Orientation {
  Isometry rotation;
  Cell anchor;                         // least cell of rotation(piece)
  std::vector<Vec3> offsets;           // cells relative to the anchor, sorted
  std::vector<std::ptrdiff_t> strides; // offsets as linear grid displacements
};

std::vector<Orientation> distinct_orientations(const Polycube& piece, SymmetryMode mode) {
  std::vector<Orientation> out;
  std::set<std::vector<Vec3>> seen;
  for (const Isometry& g : symmetry_group(mode)) {
    const Polycube img = apply_isometry(g, piece);
    const Cell anchor = img.cells().front();
    std::vector<Vec3> offsets;
    for (const Cell& c : img.cells()) offsets.push_back({c.x - anchor.x, c.y - anchor.y, c.z - anchor.z});
    if (!seen.insert(offsets).second) continue;
    out.push_back({g, anchor, std::move(offsets), {}});
  }
  return out;
}

}  // namespace

TilingSearch find_tiling(const Polycube& target, const Polycube& piece, SymmetryMode mode,
                         const SearchLimits& limits) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  TilingSearch result;
  auto finish = [&](SearchOutcome o) {
    result.outcome = o;
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
  };
  if (target.size() % piece.size() != 0) return finish(SearchOutcome::Exhausted);

  std::vector<Orientation> orients = distinct_orientations(piece, mode);

  // Grid over the target's bounding box padded by the piece extent, so every
  // offset from a target cell stays inside it.
  int pad = 0;
  for (const auto& o : orients)
    for (const Vec3& d : o.offsets) pad = std::max({pad, std::abs(d[0]), std::abs(d[1]), std::abs(d[2])});
  const Cell lo = target.min_corner() + Vec3{-pad, -pad, -pad};
  const Cell hi = target.max_corner() + Vec3{pad, pad, pad};
  const std::ptrdiff_t dy = hi.z - lo.z + 1;
  const std::ptrdiff_t dx = dy * (hi.y - lo.y + 1);
  const std::size_t volume = static_cast<std::size_t>(dx) * (hi.x - lo.x + 1);
  auto linear = [&](const Cell& c) {
    return (c.x - lo.x) * dx + (c.y - lo.y) * dy + (c.z - lo.z);
  };

  enum : std::uint8_t { kOff = 0, kFree = 1, kTaken = 2 };
  std::vector<std::uint8_t> state(volume, kOff);
  std::vector<std::ptrdiff_t> order;  // target cells in lexicographic order
  order.reserve(target.size());
  for (const Cell& c : target.cells()) {
    state[linear(c)] = kFree;
    order.push_back(linear(c));
  }
  for (auto& o : orients)
    for (const Vec3& d : o.offsets) o.strides.push_back(d[0] * dx + d[1] * dy + d[2]);

  struct Frame {
    std::size_t pos;  // index into `order` of the cell being covered
    std::size_t next; // next orientation to try
    std::size_t placed = std::numeric_limits<std::size_t>::max();
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0});
  std::uint64_t attempts = 0;

  auto fits = [&](std::ptrdiff_t base, const Orientation& o) {
    for (std::ptrdiff_t s : o.strides)
      if (state[base + s] != kFree) return false;
    return true;
  };
  auto mark = [&](std::ptrdiff_t base, const Orientation& o, std::uint8_t v) {
    for (std::ptrdiff_t s : o.strides) state[base + s] = v;
  };

  while (!stack.empty()) {
    Frame& f = stack.back();
    const std::ptrdiff_t base = order[f.pos];
    if (f.placed != std::numeric_limits<std::size_t>::max()) {
      mark(base, orients[f.placed], kFree);
      f.placed = std::numeric_limits<std::size_t>::max();
    }
    bool advanced = false;
    while (f.next < orients.size()) {
      const std::size_t oi = f.next++;
      if ((++attempts & 0xFFFF) == 0 && Clock::now() - start > limits.time_budget)
        return finish(SearchOutcome::Timeout);
      if (!fits(base, orients[oi])) continue;
      mark(base, orients[oi], kTaken);
      f.placed = oi;
      if (++result.nodes > limits.node_budget) return finish(SearchOutcome::NodeBudgetExceeded);
      std::size_t pos = f.pos;
      while (pos < order.size() && state[order[pos]] != kFree) ++pos;
      if (pos == order.size()) {
        for (const Frame& fr : stack) {
          const Orientation& o = orients[fr.placed];
          const Cell at = target.cells()[fr.pos];
          const Vec3 t{at.x - o.anchor.x, at.y - o.anchor.y, at.z - o.anchor.z};
          result.placements.push_back(compose(Isometry::translation(t), o.rotation));
        }
        return finish(SearchOutcome::Found);
      }
      stack.push_back({pos, 0});
      advanced = true;
      break;
    }
    if (!advanced) stack.pop_back();
  }
  return finish(SearchOutcome::Exhausted);
}

// ---------------------------------------------------------------------------
// Certificates

TilingCertificate canonicalize(const TilingCertificate& c) {
  const CanonicalForm cf = canonical_form(c.piece, c.mode);
  const Isometry back = cf.witness.inverse();
  TilingCertificate out{cf.shape, c.target, {}, c.mode, c.scale};
  Isometry outer = Isometry::identity();
  if (c.scale) {
    const int s = *c.scale;
    outer = {cf.witness.rot, {s * cf.witness.trans[0], s * cf.witness.trans[1], s * cf.witness.trans[2]}};
    out.target = apply_isometry(outer, c.target);
  }
  out.placements.reserve(c.placements.size());
  for (const Isometry& g : c.placements) out.placements.push_back(compose(outer, compose(g, back)));
  return out;
}

ReptileSearch certify_reptile(const Polycube& p, int s, SymmetryMode mode, const SearchLimits& limits) {
  if (s < 1) throw Error(ErrorCode::BadScale, "scale factor must be >= 1, got " + std::to_string(s));
  const Polycube piece = canonical_form(p, mode).shape;
  Polycube target = scale_polycube(piece, s);
  ReptileSearch out;
  out.search = find_tiling(target, piece, mode, limits);
  if (out.search.found()) {
    out.certificate = TilingCertificate{piece, std::move(target), out.search.placements, mode, s};
  }
  return out;
}

TilingCertificate brick_certificate(const Polycube& p, const Isometry& g, int s) {
  if (s < 1) throw Error(ErrorCode::BadScale, "scale factor must be >= 1, got " + std::to_string(s));
  if (!is_signed_permutation(g.rot))
    throw Error(ErrorCode::NotABrickPair, "pairing map is not a lattice isometry");
  const Polycube image = apply_isometry(g, p);
  std::vector<Cell> both(p.cells().begin(), p.cells().end());
  both.insert(both.end(), image.cells().begin(), image.cells().end());
  const Polycube pair(std::move(both));
  const std::size_t cube = static_cast<std::size_t>(s) * s * s;
  const Cell lo = pair.min_corner();
  const Cell hi = pair.max_corner();
  if (pair.size() != 2 * p.size() || pair.size() != cube || hi.x - lo.x + 1 != s ||
      hi.y - lo.y + 1 != s || hi.z - lo.z + 1 != s) {
    throw Error(ErrorCode::NotABrickPair,
                "piece and its image do not partition a cube of side " + std::to_string(s));
  }

  TilingCertificate c{p, scale_polycube(p, s), {}, g.is_proper() ? SymmetryMode::Proper : SymmetryMode::Full, s};
  c.placements.reserve(2 * p.size());
  for (const Cell& cell : p.cells()) {
    const Isometry shift = Isometry::translation({s * cell.x - lo.x, s * cell.y - lo.y, s * cell.z - lo.z});
    c.placements.push_back(shift);
    c.placements.push_back(compose(shift, g));
  }
  return canonicalize(c);
}

TilingCertificate construction_certificate(const ConstructionResult& r) {
  return brick_certificate(r.x, r.r, 2 * r.m);
}

// ---------------------------------------------------------------------------
// Enumeration and search

std::vector<Polycube> enumerate_polycubes(int n, SymmetryMode mode) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cell count must be >= 1");
  std::set<Polycube> level{Polycube({Cell{0, 0, 0}})};
  for (int k = 2; k <= n; ++k) {
    std::set<Polycube> next;
    for (const Polycube& shape : level) {
      std::vector<Cell> cells(shape.cells().begin(), shape.cells().end());
      for (const Cell& c : shape.cells()) {
        for (const Vec3& d : kFaceOffsets) {
          const Cell extra = c + d;
          if (shape.contains(extra)) continue;
          cells.push_back(extra);
          next.insert(canonical_form(Polycube(cells), mode).shape);
          cells.pop_back();
        }
      }
    }
    level.swap(next);
  }
  return {level.begin(), level.end()};
}

std::vector<const SearchEntry*> SearchReport::successes() const {
  std::vector<const SearchEntry*> out;
  for (const auto& e : entries)
    if (e.certificate) out.push_back(&e);
  return out;
}

std::vector<const SearchEntry*> SearchReport::gave_up() const {
  std::vector<const SearchEntry*> out;
  for (const auto& e : entries)
    if (e.search.gave_up()) out.push_back(&e);
  return out;
}

SearchReport search_reptiles(int n_max, int s, SymmetryMode mode, const SearchLimits& limits,
                             unsigned threads) {
  std::vector<Polycube> pieces;
  for (int n = 1; n <= n_max; ++n) {
    for (Polycube& p : enumerate_polycubes(n, mode)) {
      if (is_face_connected(p) && is_manifold(p)) pieces.push_back(std::move(p));
    }
  }

  std::vector<std::optional<SearchEntry>> slots(pieces.size());
  auto work = [&](std::size_t i) {
    const Polycube& p = pieces[i];
    ReptileSearch rs = certify_reptile(p, s, mode, limits);
    SearchEntry e{p, std::move(rs.search), std::move(rs.certificate), betti_numbers(p), {}};
    for (const auto& comp : surface_components(boundary_surface(p))) e.genera.push_back(comp.genus);
    slots[i] = std::move(e);
  };

  threads = std::max(1u, threads);
  if (threads == 1 || pieces.size() < 2) {
    for (std::size_t i = 0; i < pieces.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, pieces.size()); ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < pieces.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  SearchReport report;
  report.entries.reserve(slots.size());
  for (auto& slot : slots) report.entries.push_back(std::move(*slot));
  return report;
}

}  // namespace reptile
