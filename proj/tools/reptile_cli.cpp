// Command-line front end over the C interface.
//
// Exit codes: 0 success or verified, 1 verification failure or error,
// 2 usage error, 3 search timeout.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reptile/reptile.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

struct PolycubeDeleter {
  void operator()(rt_polycube* p) const { rt_polycube_free(p); }
};
struct ArcsDeleter {
  void operator()(rt_arcs* d) const { rt_arcs_free(d); }
};
struct CertificateDeleter {
  void operator()(rt_certificate* c) const { rt_certificate_free(c); }
};
using PolycubePtr = std::unique_ptr<rt_polycube, PolycubeDeleter>;
using ArcsPtr = std::unique_ptr<rt_arcs, ArcsDeleter>;
using CertificatePtr = std::unique_ptr<rt_certificate, CertificateDeleter>;

// Thrown to unwind with a specific exit code after printing a message.
struct Exit {
  int code;
};

void check(rt_status s) {
  if (s == RT_OK) return;
  std::cerr << "error: " << rt_status_name(s) << ": " << rt_last_error() << '\n';
  throw Exit{s == RT_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailed};
}

PolycubePtr load_polycube(const std::string& path) {
  rt_polycube* raw = nullptr;
  size_t warnings = 0;
  check(rt_polycube_load(path.c_str(), &raw, &warnings));
  if (warnings > 0) std::cerr << "warning: " << rt_last_error();
  return PolycubePtr(raw);
}

rt_mode parse_mode(const std::string& mode) { return mode == "full" ? RT_MODE_FULL : RT_MODE_PROPER; }

const char* yes_no(int flag) { return flag ? "yes" : "no"; }

int exit_for(const rt_search_stats& stats) {
  switch (stats.outcome) {
    case RT_FOUND: return kExitOk;
    case RT_EXHAUSTED: return kExitFailed;
    default: return kExitTimeout;
  }
}

void print_stats(const rt_search_stats& stats) {
  std::cout << "outcome: " << rt_outcome_name(stats.outcome) << '\n';
  std::cout << "nodes: " << stats.nodes << '\n';
}

void print_rotation(const int* rot) {
  for (int k = 0; k < 9; ++k) std::cout << (k ? " " : "") << rot[k];
}

struct LimitOptions {
  uint64_t node_budget = 10'000'000;
  double time_budget = 60.0;

  void attach(CLI::App* app) {
    app->add_option("--node-budget", node_budget, "Maximum placements tried")->capture_default_str();
    app->add_option("--time-budget", time_budget, "Wall-clock budget in seconds")->capture_default_str();
  }
  rt_limits limits() const { return {node_budget, time_budget}; }
};

int report_verify(const rt_certificate* c) {
  rt_verify result;
  char detail[512];
  check(rt_certificate_verify(c, &result, detail, sizeof detail));
  std::cout << "verify: " << rt_verify_name(result);
  if (result != RT_VERIFY_OK) std::cout << " (" << detail << ')';
  std::cout << '\n';
  return result == RT_VERIFY_OK ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polycube rep-tile construction, certification and invariants"};
  app.require_subcommand(1);

  // construct
  std::string arcs_path, builtin, out_path, cert_path;
  auto* construct = app.add_subcommand("construct", "Build a rep-tile from an arc diagram");
  auto* arcs_opt = construct->add_option("--arcs", arcs_path, "Arc diagram file");
  auto* builtin_opt = construct->add_option("--builtin", builtin, "Built-in diagram")
                          ->check(CLI::IsMember({"empty-m1", "column-m3", "figure-4"}));
  arcs_opt->excludes(builtin_opt);
  construct->add_option("-o,--output", out_path, "Output polycube file")->required();
  construct->add_option("--emit-cert", cert_path, "Write the construction certificate");

  // invariants
  std::string poly_path;
  auto* invariants = app.add_subcommand("invariants", "Print the topological fingerprint");
  invariants->add_option("poly", poly_path, "Polycube file")->required();

  // certify
  int scale = 2;
  std::string mode = "proper";
  LimitOptions certify_limits;
  auto* certify = app.add_subcommand("certify", "Search for a rep-tile tiling of scale(P, s)");
  certify->add_option("poly", poly_path, "Polycube file")->required();
  certify->add_option("--scale", scale, "Similarity ratio")->required()->check(CLI::PositiveNumber);
  certify->add_option("--mode", mode, "Congruence class")->check(CLI::IsMember({"proper", "full"}));
  certify_limits.attach(certify);
  certify->add_option("--emit-cert", cert_path, "Write the certificate when found");

  // verify-cert
  auto* verify = app.add_subcommand("verify-cert", "Check a tiling certificate");
  verify->add_option("cert", cert_path, "Certificate file")->required();

  // tile
  std::string target_path, piece_path;
  LimitOptions tile_limits;
  auto* tile = app.add_subcommand("tile", "Tile a target polycube with copies of a piece");
  tile->add_option("target", target_path, "Target polycube file")->required();
  tile->add_option("piece", piece_path, "Piece polycube file")->required();
  tile->add_option("--mode", mode, "Congruence class")->check(CLI::IsMember({"proper", "full"}));
  tile_limits.attach(tile);
  tile->add_option("--emit-cert", cert_path, "Write the tiling certificate when found");

  // enumerate
  int n = 1;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List polycubes with n cells up to congruence");
  enumerate->add_option("--n", n, "Cell count")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--mode", mode, "Congruence class")->check(CLI::IsMember({"proper", "full"}));
  enumerate->add_flag("--count-only", count_only, "Print only the count");

  // search
  int n_max = 1;
  unsigned threads = 1;
  LimitOptions search_limits;
  auto* search = app.add_subcommand("search", "Try every small polycube as a rep-tile");
  search->add_option("--n-max", n_max, "Largest cell count")->required()->check(CLI::PositiveNumber);
  search->add_option("--scale", scale, "Similarity ratio")->required()->check(CLI::PositiveNumber);
  search->add_option("--mode", mode, "Congruence class")->check(CLI::IsMember({"proper", "full"}));
  search->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  search_limits.attach(search);

  // export-obj
  auto* export_obj = app.add_subcommand("export-obj", "Write the boundary surface as Wavefront OBJ");
  export_obj->add_option("poly", poly_path, "Polycube file")->required();
  export_obj->add_option("-o,--output", out_path, "Output OBJ file")->required();

  // fixture
  std::string fixture_name;
  auto* fixture = app.add_subcommand("fixture", "Write a shipped fixture");
  fixture->add_option("name", fixture_name, "Fixture name")
      ->required()
      ->check(CLI::IsMember({"fig1", "empty-m1", "column-m3", "figure-4"}));
  fixture->add_option("-o,--output", out_path, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) {
      if (arcs_path.empty() == builtin.empty()) {
        std::cerr << "construct: exactly one of --arcs or --builtin is required\n";
        return kExitUsage;
      }
      rt_arcs* raw = nullptr;
      check(builtin.empty() ? rt_arcs_load(arcs_path.c_str(), &raw) : rt_arcs_builtin(builtin.c_str(), &raw));
      ArcsPtr arcs(raw);
      size_t violations = 0;
      char report[4096];
      check(rt_arcs_validate(arcs.get(), &violations, report, sizeof report));
      std::cout << "diagram: m=" << rt_arcs_refinement(arcs.get()) << " arcs=" << rt_arcs_count(arcs.get()) << '\n';
      if (violations > 0) {
        std::cout << "violations: " << violations << '\n' << report;
        return kExitFailed;
      }
      rt_polycube* x = nullptr;
      rt_certificate* c = nullptr;
      check(rt_construct(arcs.get(), &x, cert_path.empty() ? nullptr : &c));
      PolycubePtr poly(x);
      CertificatePtr cert(c);
      check(rt_polycube_save(poly.get(), out_path.c_str()));
      std::cout << "cells: " << rt_polycube_size(poly.get()) << '\n';
      std::cout << "written: " << out_path << '\n';
      if (cert) {
        check(rt_certificate_save(cert.get(), cert_path.c_str()));
        std::cout << "certificate: k=" << rt_certificate_placements(cert.get())
                  << " scale=" << rt_certificate_scale(cert.get()) << " written: " << cert_path << '\n';
      }
      return kExitOk;
    }

    if (*invariants) {
      auto poly = load_polycube(poly_path);
      rt_invariants inv;
      check(rt_polycube_invariants(poly.get(), &inv));
      std::cout << "cells: " << inv.cells << '\n';
      std::cout << "face-connected: " << yes_no(inv.face_connected) << '\n';
      std::cout << "manifold: " << yes_no(inv.manifold) << '\n';
      std::cout << "betti: " << inv.betti[0] << ' ' << inv.betti[1] << ' ' << inv.betti[2] << '\n';
      if (inv.manifold) {
        std::vector<rt_surface_component> comps(inv.boundary_components);
        size_t count = 0;
        check(rt_polycube_surface_components(poly.get(), comps.data(), comps.size(), &count));
        std::cout << "boundary-quads: " << inv.boundary_quads << '\n';
        std::cout << "boundary-components: " << count << '\n';
        for (size_t i = 0; i < count; ++i) {
          std::cout << "component " << i << ": quads " << comps[i].quads << " euler "
                    << comps[i].euler_characteristic << " genus " << comps[i].genus << '\n';
        }
        std::cout << "boundary-connected: " << yes_no(inv.boundary_connected) << '\n';
      } else {
        std::cout << "boundary-components: n/a (not a manifold)\n";
      }
      return kExitOk;
    }

    if (*certify) {
      auto poly = load_polycube(poly_path);
      const rt_limits limits = certify_limits.limits();
      rt_certificate* raw = nullptr;
      rt_search_stats stats;
      check(rt_certify(poly.get(), scale, parse_mode(mode), &limits, &raw, &stats));
      CertificatePtr cert(raw);
      print_stats(stats);
      if (cert) {
        std::cout << "placements: " << rt_certificate_placements(cert.get()) << '\n';
        const int code = report_verify(cert.get());
        if (!cert_path.empty()) {
          check(rt_certificate_save(cert.get(), cert_path.c_str()));
          std::cout << "written: " << cert_path << '\n';
        }
        return code;
      }
      return exit_for(stats);
    }

    if (*verify) {
      rt_certificate* raw = nullptr;
      check(rt_certificate_load(cert_path.c_str(), &raw));
      CertificatePtr cert(raw);
      std::cout << "placements: " << rt_certificate_placements(cert.get()) << '\n';
      std::cout << "scale: " << rt_certificate_scale(cert.get()) << '\n';
      return report_verify(cert.get());
    }

    if (*tile) {
      auto target = load_polycube(target_path);
      auto piece = load_polycube(piece_path);
      const rt_limits limits = tile_limits.limits();
      rt_certificate* raw = nullptr;
      rt_search_stats stats;
      check(rt_tile(target.get(), piece.get(), parse_mode(mode), &limits, &raw, &stats));
      CertificatePtr cert(raw);
      print_stats(stats);
      if (cert) {
        std::cout << "placements: " << rt_certificate_placements(cert.get()) << '\n';
        if (!cert_path.empty()) {
          check(rt_certificate_save(cert.get(), cert_path.c_str()));
          std::cout << "written: " << cert_path << '\n';
        }
      }
      return exit_for(stats);
    }

    if (*enumerate) {
      size_t count = 0;
      struct Printer {
        size_t index = 0;
      } printer;
      auto visit = [](const rt_polycube* p, void* user) -> int {
        auto& pr = *static_cast<Printer*>(user);
        std::vector<int32_t> xyz(3 * rt_polycube_size(p));
        rt_polycube_cells(p, xyz.data(), rt_polycube_size(p));
        std::cout << "polycube " << pr.index++ << ':';
        for (size_t i = 0; i < xyz.size(); i += 3) std::cout << ' ' << xyz[i] << ',' << xyz[i + 1] << ',' << xyz[i + 2];
        std::cout << '\n';
        return 0;
      };
      check(rt_enumerate(n, parse_mode(mode), count_only ? nullptr : +visit, &printer, &count));
      std::cout << "count: " << count << '\n';
      return kExitOk;
    }

    if (*search) {
      const rt_limits limits = search_limits.limits();
      struct Tally {
        size_t index = 0, certified = 0, gave_up = 0, broken_theorem = 0;
      } tally;
      auto visit = [](const rt_search_entry* e, void* user) -> int {
        auto& t = *static_cast<Tally*>(user);
        std::cout << "piece " << t.index++ << ": cells " << rt_polycube_size(e->piece) << " outcome "
                  << rt_outcome_name(e->stats.outcome);
        if (e->certificate) {
          std::cout << " k=" << rt_certificate_placements(e->certificate);
          ++t.certified;
          if (e->n_components != 1) ++t.broken_theorem;
        }
        if (e->stats.outcome == RT_TIMEOUT || e->stats.outcome == RT_NODE_BUDGET_EXCEEDED) ++t.gave_up;
        std::cout << " betti " << e->betti[0] << ' ' << e->betti[1] << ' ' << e->betti[2] << " genera";
        for (size_t i = 0; i < e->n_components; ++i) std::cout << ' ' << e->genera[i];
        std::cout << '\n';
        return 0;
      };
      check(rt_search(n_max, scale, parse_mode(mode), &limits, threads, +visit, &tally));
      std::cout << "certified: " << tally.certified << " of " << tally.index << '\n';
      std::cout << "timeouts: " << tally.gave_up << '\n';
      std::cout << "disconnected-boundary certified: " << tally.broken_theorem << '\n';
      if (tally.broken_theorem > 0) return kExitFailed;
      return tally.gave_up > 0 ? kExitTimeout : kExitOk;
    }

    if (*export_obj) {
      auto poly = load_polycube(poly_path);
      check(rt_polycube_export_obj(poly.get(), out_path.c_str()));
      std::cout << "written: " << out_path << '\n';
      return kExitOk;
    }

    if (*fixture) {
      if (fixture_name == "fig1") {
        rt_polycube* raw = nullptr;
        check(rt_polycube_fixture("fig1", &raw));
        PolycubePtr poly(raw);
        check(rt_polycube_save(poly.get(), out_path.c_str()));
      } else {
        rt_arcs* raw = nullptr;
        check(rt_arcs_builtin(fixture_name.c_str(), &raw));
        ArcsPtr arcs(raw);
        check(rt_arcs_save(arcs.get(), out_path.c_str()));
      }
      std::cout << "written: " << out_path << '\n';
      return kExitOk;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
