#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "reptile/certify.hpp"
#include "reptile/construct.hpp"
#include "reptile/io.hpp"
#include "reptile/reptile.h"
#include "reptile/topology.hpp"

struct rt_polycube {
  reptile::Polycube value;
};

struct rt_arcs {
  reptile::ArcDiagram value;
};

struct rt_certificate {
  reptile::TilingCertificate value;
};

namespace {

thread_local std::string last_error;

rt_status status_of(reptile::ErrorCode code) {
  using reptile::ErrorCode;
  switch (code) {
    case ErrorCode::EmptyPolycube: return RT_ERR_EMPTY_POLYCUBE;
    case ErrorCode::BadScale: return RT_ERR_BAD_SCALE;
    case ErrorCode::NotManifold: return RT_ERR_NOT_MANIFOLD;
    case ErrorCode::InvalidDiagram: return RT_ERR_INVALID_DIAGRAM;
    case ErrorCode::NotABrickPair: return RT_ERR_NOT_A_BRICK_PAIR;
    case ErrorCode::MalformedLine: return RT_ERR_MALFORMED_LINE;
    case ErrorCode::BadHeader: return RT_ERR_BAD_HEADER;
    case ErrorCode::BadCertificate: return RT_ERR_BAD_CERTIFICATE;
    case ErrorCode::Io: return RT_ERR_IO;
    case ErrorCode::InvalidArgument: return RT_ERR_INVALID_ARGUMENT;
  }
  return RT_ERR_INTERNAL;
}

rt_status fail(rt_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
rt_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const reptile::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RT_ERR_INTERNAL, e.what());
  }
}

#define RT_REQUIRE(cond)                                                   \
  do {                                                                     \
    if (!(cond)) return fail(RT_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

reptile::SymmetryMode mode_of(rt_mode m) {
  return m == RT_MODE_FULL ? reptile::SymmetryMode::Full : reptile::SymmetryMode::Proper;
}

reptile::SearchLimits limits_of(const rt_limits* limits) {
  reptile::SearchLimits out;
  if (limits) {
    out.node_budget = limits->node_budget;
    out.time_budget = std::chrono::milliseconds(static_cast<long long>(limits->time_budget_seconds * 1000.0));
  }
  return out;
}

rt_outcome outcome_of(reptile::SearchOutcome o) {
  switch (o) {
    case reptile::SearchOutcome::Found: return RT_FOUND;
    case reptile::SearchOutcome::Exhausted: return RT_EXHAUSTED;
    case reptile::SearchOutcome::NodeBudgetExceeded: return RT_NODE_BUDGET_EXCEEDED;
    case reptile::SearchOutcome::Timeout: return RT_TIMEOUT;
  }
  return RT_EXHAUSTED;
}

rt_search_stats stats_of(const reptile::TilingSearch& s) {
  return {outcome_of(s.outcome), s.nodes, static_cast<double>(s.elapsed.count()) / 1000.0};
}

void copy_text(const std::string& text, char* buffer, std::size_t capacity) {
  if (!buffer || capacity == 0) return;
  const std::size_t n = std::min(text.size(), capacity - 1);
  std::memcpy(buffer, text.data(), n);
  buffer[n] = '\0';
}

}  // namespace

extern "C" {

const char* rt_last_error(void) { return last_error.c_str(); }

const char* rt_status_name(rt_status status) {
  switch (status) {
    case RT_OK: return "ok";
    case RT_ERR_EMPTY_POLYCUBE: return "EmptyPolycube";
    case RT_ERR_BAD_SCALE: return "BadScale";
    case RT_ERR_NOT_MANIFOLD: return "NotManifold";
    case RT_ERR_INVALID_DIAGRAM: return "InvalidDiagram";
    case RT_ERR_NOT_A_BRICK_PAIR: return "NotABrickPair";
    case RT_ERR_MALFORMED_LINE: return "MalformedLine";
    case RT_ERR_BAD_HEADER: return "BadHeader";
    case RT_ERR_BAD_CERTIFICATE: return "BadCertificate";
    case RT_ERR_IO: return "Io";
    case RT_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case RT_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case RT_ERR_INTERNAL: return "Internal";
  }
  return "unknown";
}

const char* rt_outcome_name(rt_outcome outcome) {
  switch (outcome) {
    case RT_FOUND: return "Found";
    case RT_EXHAUSTED: return "Exhausted";
    case RT_NODE_BUDGET_EXCEEDED: return "Timeout (node budget)";
    case RT_TIMEOUT: return "Timeout (time budget)";
  }
  return "unknown";
}

const char* rt_verify_name(rt_verify result) {
  switch (result) {
    case RT_VERIFY_OK: return "ok";
    case RT_VERIFY_OVERLAP: return "Overlap";
    case RT_VERIFY_GAP: return "Gap";
    case RT_VERIFY_NOT_SCALED: return "NotScaled";
    case RT_VERIFY_BAD_MODE: return "BadMode";
  }
  return "unknown";
}

// --- polycubes -------------------------------------------------------------

rt_status rt_polycube_create(const int32_t* xyz, size_t n_cells, rt_polycube** out) {
  RT_REQUIRE(out);
  RT_REQUIRE(xyz || n_cells == 0);
  return guarded([&] {
    std::vector<reptile::Cell> cells;
    cells.reserve(n_cells);
    for (size_t i = 0; i < n_cells; ++i) cells.push_back({xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]});
    *out = new rt_polycube{reptile::Polycube(std::move(cells))};
    return RT_OK;
  });
}

rt_status rt_polycube_parse(const char* text, rt_polycube** out, size_t* n_warnings) {
  RT_REQUIRE(text && out);
  return guarded([&] {
    auto parsed = reptile::io::parse_polycube(text);
    if (n_warnings) *n_warnings = parsed.warnings.size();
    std::string joined;
    for (const auto& w : parsed.warnings) joined += w + "\n";
    *out = new rt_polycube{std::move(parsed.polycube)};
    last_error = joined;
    return RT_OK;
  });
}

rt_status rt_polycube_load(const char* path, rt_polycube** out, size_t* n_warnings) {
  RT_REQUIRE(path && out);
  std::string text;
  const rt_status s = guarded([&] {
    text = reptile::io::read_file(path);
    return RT_OK;
  });
  if (s != RT_OK) return s;
  return rt_polycube_parse(text.c_str(), out, n_warnings);
}

rt_status rt_polycube_save(const rt_polycube* p, const char* path) {
  RT_REQUIRE(p && path);
  return guarded([&] {
    reptile::io::write_file(path, reptile::io::emit_polycube(p->value));
    return RT_OK;
  });
}

rt_status rt_polycube_fixture(const char* name, rt_polycube** out) {
  RT_REQUIRE(name && out);
  return guarded([&] {
    if (std::string(name) != "fig1") return fail(RT_ERR_INVALID_ARGUMENT, std::string("unknown polycube fixture '") + name + "'");
    *out = new rt_polycube{reptile::io::figure_one()};
    return RT_OK;
  });
}

size_t rt_polycube_size(const rt_polycube* p) { return p ? p->value.size() : 0; }

rt_status rt_polycube_cells(const rt_polycube* p, int32_t* xyz, size_t capacity_cells) {
  RT_REQUIRE(p && xyz);
  if (capacity_cells < p->value.size()) return fail(RT_ERR_BUFFER_TOO_SMALL, "cell buffer too small");
  std::size_t i = 0;
  for (const auto& c : p->value.cells()) {
    xyz[i++] = c.x;
    xyz[i++] = c.y;
    xyz[i++] = c.z;
  }
  return RT_OK;
}

int rt_polycube_equal(const rt_polycube* a, const rt_polycube* b) {
  return a && b && a->value == b->value;
}

void rt_polycube_free(rt_polycube* p) { delete p; }

rt_status rt_polycube_invariants(const rt_polycube* p, rt_invariants* out) {
  RT_REQUIRE(p && out);
  return guarded([&] {
    const auto& poly = p->value;
    *out = {};
    out->cells = poly.size();
    out->face_connected = reptile::is_face_connected(poly);
    out->manifold = reptile::is_manifold(poly);
    const auto betti = reptile::betti_numbers(poly);
    out->betti[0] = betti.b0;
    out->betti[1] = betti.b1;
    out->betti[2] = betti.b2;
    if (out->manifold) {
      const auto surface = reptile::boundary_surface(poly);
      out->boundary_quads = surface.quads.size();
      out->boundary_components = reptile::surface_components(surface).size();
      out->boundary_connected = out->boundary_components == 1;
    }
    return RT_OK;
  });
}

rt_status rt_polycube_surface_components(const rt_polycube* p, rt_surface_component* out,
                                         size_t capacity, size_t* count) {
  RT_REQUIRE(p && count);
  return guarded([&] {
    const auto comps = reptile::surface_components(reptile::boundary_surface(p->value));
    *count = comps.size();
    for (std::size_t i = 0; i < comps.size() && i < capacity && out; ++i)
      out[i] = {comps[i].quad_count, comps[i].euler_characteristic, comps[i].genus};
    return RT_OK;
  });
}

rt_status rt_polycube_export_obj(const rt_polycube* p, const char* path) {
  RT_REQUIRE(p && path);
  return guarded([&] {
    reptile::io::write_file(path, reptile::io::emit_obj(p->value));
    return RT_OK;
  });
}

// --- arc diagrams ------------------------------------------------------------

rt_status rt_arcs_builtin(const char* name, rt_arcs** out) {
  RT_REQUIRE(name && out);
  return guarded([&] {
    *out = new rt_arcs{reptile::builtin_diagram(name)};
    return RT_OK;
  });
}

rt_status rt_arcs_load(const char* path, rt_arcs** out) {
  RT_REQUIRE(path && out);
  return guarded([&] {
    *out = new rt_arcs{reptile::io::parse_arc_diagram(reptile::io::read_file(path))};
    return RT_OK;
  });
}

rt_status rt_arcs_save(const rt_arcs* d, const char* path) {
  RT_REQUIRE(d && path);
  return guarded([&] {
    reptile::io::write_file(path, reptile::io::emit_arc_diagram(d->value));
    return RT_OK;
  });
}

int rt_arcs_refinement(const rt_arcs* d) { return d ? d->value.m : 0; }

size_t rt_arcs_count(const rt_arcs* d) { return d ? d->value.arcs.size() : 0; }

rt_status rt_arcs_validate(const rt_arcs* d, size_t* violations, char* report, size_t capacity) {
  RT_REQUIRE(d && violations);
  return guarded([&] {
    const auto found = reptile::validate_arc_diagram(d->value);
    *violations = found.size();
    std::string text;
    for (const auto& v : found) text += v.describe() + "\n";
    copy_text(text, report, capacity);
    return RT_OK;
  });
}

void rt_arcs_free(rt_arcs* d) { delete d; }

rt_status rt_construct(const rt_arcs* d, rt_polycube** x_out, rt_certificate** cert_out) {
  RT_REQUIRE(d && x_out);
  return guarded([&] {
    auto result = reptile::construct_reptile(d->value);
    if (cert_out) *cert_out = new rt_certificate{reptile::construction_certificate(result)};
    *x_out = new rt_polycube{std::move(result.x)};
    return RT_OK;
  });
}

// --- certificates ----------------------------------------------------------

rt_status rt_certificate_load(const char* path, rt_certificate** out) {
  RT_REQUIRE(path && out);
  return guarded([&] {
    *out = new rt_certificate{reptile::io::parse_certificate(reptile::io::read_file(path))};
    return RT_OK;
  });
}

rt_status rt_certificate_save(const rt_certificate* c, const char* path) {
  RT_REQUIRE(c && path);
  return guarded([&] {
    reptile::io::write_file(path, reptile::io::emit_certificate(c->value));
    return RT_OK;
  });
}

size_t rt_certificate_placements(const rt_certificate* c) { return c ? c->value.placements.size() : 0; }

int rt_certificate_scale(const rt_certificate* c) { return c && c->value.scale ? *c->value.scale : 0; }

rt_status rt_certificate_piece(const rt_certificate* c, rt_polycube** out) {
  RT_REQUIRE(c && out);
  return guarded([&] {
    *out = new rt_polycube{c->value.piece};
    return RT_OK;
  });
}

rt_status rt_certificate_verify(const rt_certificate* c, rt_verify* result, char* detail, size_t capacity) {
  RT_REQUIRE(c && result);
  return guarded([&] {
    const auto report = reptile::verify_certificate(c->value);
    *result = static_cast<rt_verify>(static_cast<int>(report.status));
    copy_text(report.detail, detail, capacity);
    return RT_OK;
  });
}

void rt_certificate_free(rt_certificate* c) { delete c; }

// --- searches ----------------------------------------------------------------

rt_status rt_certify(const rt_polycube* p, int scale, rt_mode mode, const rt_limits* limits,
                     rt_certificate** cert_out, rt_search_stats* stats) {
  RT_REQUIRE(p && cert_out);
  return guarded([&] {
    auto rs = reptile::certify_reptile(p->value, scale, mode_of(mode), limits_of(limits));
    if (stats) *stats = stats_of(rs.search);
    *cert_out = rs.certificate ? new rt_certificate{std::move(*rs.certificate)} : nullptr;
    return RT_OK;
  });
}

rt_status rt_tile(const rt_polycube* target, const rt_polycube* piece, rt_mode mode,
                  const rt_limits* limits, rt_certificate** cert_out, rt_search_stats* stats) {
  RT_REQUIRE(target && piece && cert_out);
  return guarded([&] {
    auto search = reptile::find_tiling(target->value, piece->value, mode_of(mode), limits_of(limits));
    if (stats) *stats = stats_of(search);
    *cert_out = nullptr;
    if (search.found()) {
      *cert_out = new rt_certificate{
          {piece->value, target->value, std::move(search.placements), mode_of(mode), std::nullopt}};
    }
    return RT_OK;
  });
}

rt_status rt_brick(const rt_polycube* p, const int32_t rot[9], const int32_t trans[3], int scale,
                   rt_certificate** cert_out) {
  RT_REQUIRE(p && rot && trans && cert_out);
  return guarded([&] {
    reptile::Mat3 m;
    std::copy(rot, rot + 9, m.begin());
    const auto g = reptile::Isometry::checked(m, {trans[0], trans[1], trans[2]});
    *cert_out = new rt_certificate{reptile::brick_certificate(p->value, g, scale)};
    return RT_OK;
  });
}

rt_status rt_enumerate(int n, rt_mode mode, rt_polycube_visitor visit, void* user, size_t* count) {
  return guarded([&] {
    const auto shapes = reptile::enumerate_polycubes(n, mode_of(mode));
    if (count) *count = shapes.size();
    if (visit) {
      for (const auto& s : shapes) {
        const rt_polycube handle{s};
        if (visit(&handle, user)) break;
      }
    }
    return RT_OK;
  });
}

rt_status rt_search(int n_max, int scale, rt_mode mode, const rt_limits* limits, unsigned threads,
                    rt_search_visitor visit, void* user) {
  RT_REQUIRE(visit);
  return guarded([&] {
    const auto report = reptile::search_reptiles(n_max, scale, mode_of(mode), limits_of(limits), threads);
    for (const auto& e : report.entries) {
      const rt_polycube piece{e.piece};
      std::optional<rt_certificate> cert;
      if (e.certificate) cert.emplace(rt_certificate{*e.certificate});
      rt_search_entry entry{&piece, stats_of(e.search), cert ? &*cert : nullptr,
                            {e.betti.b0, e.betti.b1, e.betti.b2}, e.genera.size(), e.genera.data()};
      if (visit(&entry, user)) break;
    }
    return RT_OK;
  });
}

}  // extern "C"
