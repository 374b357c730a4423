#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "reptile/reptile.h"

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("reptile_capi_") + name)).string();
}

}  // namespace

TEST_CASE("polycube handles") {
  const int32_t xyz[] = {0, 0, 0, 1, 0, 0, 0, 0, 0};
  rt_polycube* p = nullptr;
  REQUIRE(rt_polycube_create(xyz, 3, &p) == RT_OK);
  CHECK(rt_polycube_size(p) == 2);

  int32_t out[6];
  CHECK(rt_polycube_cells(p, out, 1) == RT_ERR_BUFFER_TOO_SMALL);
  REQUIRE(rt_polycube_cells(p, out, 2) == RT_OK);
  CHECK(out[3] == 1);

  rt_invariants inv{};
  REQUIRE(rt_polycube_invariants(p, &inv) == RT_OK);
  CHECK(inv.cells == 2);
  CHECK(inv.manifold == 1);
  CHECK(inv.boundary_quads == 10);
  rt_polycube_free(p);

  rt_polycube* empty = nullptr;
  CHECK(rt_polycube_create(xyz, 0, &empty) == RT_ERR_EMPTY_POLYCUBE);
  CHECK(empty == nullptr);
  CHECK(std::string(rt_last_error()).size() > 0);
  CHECK(rt_polycube_create(nullptr, 1, &empty) == RT_ERR_INVALID_ARGUMENT);
  rt_polycube_free(nullptr);
}

TEST_CASE("figure one through the C interface") {
  rt_polycube* fig = nullptr;
  REQUIRE(rt_polycube_fixture("fig1", &fig) == RT_OK);
  rt_invariants inv{};
  REQUIRE(rt_polycube_invariants(fig, &inv) == RT_OK);
  CHECK(inv.cells == 32);
  CHECK(inv.face_connected == 1);
  CHECK(inv.betti[0] == 1);
  CHECK(inv.betti[1] == 1);
  CHECK(inv.betti[2] == 0);
  CHECK(inv.boundary_components == 1);
  CHECK(inv.boundary_quads == 78);

  rt_surface_component comps[2];
  size_t count = 0;
  REQUIRE(rt_polycube_surface_components(fig, comps, 2, &count) == RT_OK);
  REQUIRE(count == 1);
  CHECK(comps[0].genus == 1);

  const int32_t rot[9] = {1, 0, 0, 0, -1, 0, 0, 0, -1};
  const int32_t trans[3] = {0, 0, 4};
  rt_certificate* cert = nullptr;
  REQUIRE(rt_brick(fig, rot, trans, 4, &cert) == RT_OK);
  CHECK(rt_certificate_placements(cert) == 64);
  CHECK(rt_certificate_scale(cert) == 4);
  rt_verify v = RT_VERIFY_GAP;
  REQUIRE(rt_certificate_verify(cert, &v, nullptr, 0) == RT_OK);
  CHECK(v == RT_VERIFY_OK);

  const std::string path = temp_path("cert.json");
  REQUIRE(rt_certificate_save(cert, path.c_str()) == RT_OK);
  rt_certificate* back = nullptr;
  REQUIRE(rt_certificate_load(path.c_str(), &back) == RT_OK);
  CHECK(rt_certificate_placements(back) == 64);
  rt_polycube* piece = nullptr;
  REQUIRE(rt_certificate_piece(back, &piece) == RT_OK);
  CHECK(rt_polycube_size(piece) == 32);
  rt_polycube_free(piece);
  rt_certificate_free(back);
  rt_certificate_free(cert);
  std::remove(path.c_str());

  const int32_t id[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  CHECK(rt_brick(fig, id, trans, 4, &cert) == RT_ERR_NOT_A_BRICK_PAIR);
  CHECK(rt_brick(fig, rot, trans, 0, &cert) != RT_OK);

  rt_polycube* box = nullptr;
  std::vector<int32_t> cells;
  for (int x = -2; x < 2; ++x)
    for (int y = -2; y < 2; ++y)
      for (int z = 0; z < 4; ++z) cells.insert(cells.end(), {x, y, z});
  REQUIRE(rt_polycube_create(cells.data(), 64, &box) == RT_OK);
  rt_search_stats stats{};
  REQUIRE(rt_tile(box, fig, RT_MODE_PROPER, nullptr, &cert, &stats) == RT_OK);
  CHECK(stats.outcome == RT_FOUND);
  CHECK(rt_certificate_placements(cert) == 2);
  rt_certificate_free(cert);

  rt_limits limits{500, 10.0};
  REQUIRE(rt_certify(fig, 3, RT_MODE_PROPER, &limits, &cert, &stats) == RT_OK);
  CHECK(stats.outcome == RT_NODE_BUDGET_EXCEEDED);
  CHECK(cert == nullptr);
  CHECK(std::string(rt_outcome_name(stats.outcome)).size() > 0);

  rt_polycube_free(box);
  rt_polycube_free(fig);
  CHECK(rt_polycube_fixture("nope", &fig) == RT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("parsing and files") {
  rt_polycube* p = nullptr;
  size_t warnings = 9;
  REQUIRE(rt_polycube_parse("poly v1\n0 0 0\n0 0 0\n", &p, &warnings) == RT_OK);
  CHECK(warnings == 1);
  rt_polycube_free(p);

  CHECK(rt_polycube_parse("poly v1\n0 0\n", &p, &warnings) == RT_ERR_MALFORMED_LINE);
  CHECK(std::string(rt_last_error()).find('2') != std::string::npos);
  CHECK(rt_polycube_parse("cubes\n", &p, &warnings) == RT_ERR_BAD_HEADER);
  CHECK(rt_polycube_load("/nonexistent/x.poly", &p, &warnings) == RT_ERR_IO);
  CHECK(rt_certificate_load("/nonexistent/x.json", nullptr) == RT_ERR_INVALID_ARGUMENT);

  REQUIRE(rt_polycube_parse("poly v1\n0 0 0\n1 1 0\n", &p, nullptr) == RT_OK);
  rt_invariants inv{};
  REQUIRE(rt_polycube_invariants(p, &inv) == RT_OK);
  CHECK(inv.manifold == 0);
  const std::string obj = temp_path("bad.obj");
  CHECK(rt_polycube_export_obj(p, obj.c_str()) == RT_ERR_NOT_MANIFOLD);
  rt_polycube_free(p);
}

TEST_CASE("construction through the C interface") {
  rt_arcs* d = nullptr;
  REQUIRE(rt_arcs_builtin("column-m3", &d) == RT_OK);
  CHECK(rt_arcs_refinement(d) == 3);
  CHECK(rt_arcs_count(d) == 1);
  size_t violations = 9;
  REQUIRE(rt_arcs_validate(d, &violations, nullptr, 0) == RT_OK);
  CHECK(violations == 0);

  rt_polycube* x = nullptr;
  rt_certificate* cert = nullptr;
  REQUIRE(rt_construct(d, &x, &cert) == RT_OK);
  CHECK(rt_polycube_size(x) == 108);
  CHECK(rt_certificate_placements(cert) == 216);
  rt_verify v = RT_VERIFY_GAP;
  REQUIRE(rt_certificate_verify(cert, &v, nullptr, 0) == RT_OK);
  CHECK(v == RT_VERIFY_OK);
  rt_certificate_free(cert);
  rt_polycube_free(x);
  rt_arcs_free(d);

  const std::string path = temp_path("bad.arcs");
  FILE* f = std::fopen(path.c_str(), "w");
  REQUIRE(f != nullptr);
  std::fputs("arcs v1\nm 5\narc\n0 2 0\n0 2 1\n0 2 2\n0 2 3\n0 2 4\n", f);
  std::fclose(f);
  REQUIRE(rt_arcs_load(path.c_str(), &d) == RT_OK);
  char report[512];
  REQUIRE(rt_arcs_validate(d, &violations, report, sizeof report) == RT_OK);
  CHECK(violations >= 1);
  CHECK(std::string(report).size() > 0);
  CHECK(rt_construct(d, &x, nullptr) == RT_ERR_INVALID_DIAGRAM);
  rt_arcs_free(d);
  std::remove(path.c_str());

  CHECK(rt_arcs_builtin("nope", &d) == RT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("enumeration and search callbacks") {
  size_t count = 0;
  REQUIRE(rt_enumerate(4, RT_MODE_PROPER, nullptr, nullptr, &count) == RT_OK);
  CHECK(count == 8);
  REQUIRE(rt_enumerate(4, RT_MODE_FULL, nullptr, nullptr, &count) == RT_OK);
  CHECK(count == 7);

  int seen = 0;
  auto stop_after_two = [](const rt_polycube*, void* user) { return ++*static_cast<int*>(user) >= 2 ? 1 : 0; };
  REQUIRE(rt_enumerate(4, RT_MODE_PROPER, stop_after_two, &seen, &count) == RT_OK);
  CHECK(seen == 2);
  CHECK(rt_enumerate(0, RT_MODE_PROPER, nullptr, nullptr, &count) == RT_ERR_INVALID_ARGUMENT);

  struct Tally {
    int entries = 0;
    int certified = 0;
  } tally;
  auto visit = [](const rt_search_entry* e, void* user) {
    auto* t = static_cast<Tally*>(user);
    ++t->entries;
    if (e->certificate) ++t->certified;
    return 0;
  };
  REQUIRE(rt_search(3, 2, RT_MODE_PROPER, nullptr, 2, visit, &tally) == RT_OK);
  CHECK(tally.entries == 4);
  CHECK(tally.certified == 4);
}

TEST_CASE("names") {
  CHECK(std::string(rt_status_name(RT_OK)) != std::string(rt_status_name(RT_ERR_IO)));
  CHECK(std::string(rt_verify_name(RT_VERIFY_OVERLAP)).size() > 0);
}
