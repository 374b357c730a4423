#pragma once

// Text formats:
//
//   poly v1            arcs v1             certificate: JSON object
//   # comment          m 3                   {"format": "reptile-cert v1",
//   0 0 0              arc                    "mode": "proper", "scale": 2,
//   1 0 0              1 1 0                  "piece": [[x,y,z], ...],
//                      1 1 1                  "target": "scaled-piece" | [[x,y,z], ...],
//                      1 1 2                  "placements": [{"rot": [9 ints], "trans": [3 ints]}]}

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "reptile/certify.hpp"
#include "reptile/construct.hpp"
#include "reptile/lattice.hpp"

namespace reptile::io {

struct ParsedPolycube {
  Polycube polycube;
  std::vector<std::string> warnings;  // e.g. duplicate cell lines
};

ParsedPolycube parse_polycube(std::string_view text);
std::string emit_polycube(const Polycube& p);

ArcDiagram parse_arc_diagram(std::string_view text);
std::string emit_arc_diagram(const ArcDiagram& d);

TilingCertificate parse_certificate(std::string_view text);
std::string emit_certificate(const TilingCertificate& c);

// Wavefront OBJ of the boundary surface; throws NotManifold.
std::string emit_obj(const Polycube& p);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Fixture "fig1": the 32-cell solid torus that two copies of fill a 4-cube.
Polycube figure_one();

}  // namespace reptile::io
