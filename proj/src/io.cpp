#include "reptile/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fixture_data.hpp"
#include "reptile/quad.hpp"
#include "reptile/topology.hpp"

namespace reptile::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

bool parse_int(std::string_view word, int& out) {
  if (!word.empty() && word.front() == '+') word.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
  return ec == std::errc() && ptr == word.data() + word.size();
}

bool parse_cell(std::string_view line, Cell& out) {
  const auto words = split_words(line);
  return words.size() == 3 && parse_int(words[0], out.x) && parse_int(words[1], out.y) &&
         parse_int(words[2], out.z);
}

[[noreturn]] void malformed(int line, std::string_view content) {
  throw ParseError(ErrorCode::MalformedLine, line,
                   "line " + std::to_string(line) + ": malformed line '" + std::string(content) + "'");
}

void expect_header(const std::vector<std::string_view>& lines, std::string_view header) {
  if (lines.empty() || trim(lines[0]) != header)
    throw ParseError(ErrorCode::BadHeader, 1, "expected header '" + std::string(header) + "'");
}

void append_cell(std::ostringstream& os, const Cell& c) { os << c.x << ' ' << c.y << ' ' << c.z << '\n'; }

}  // namespace

ParsedPolycube parse_polycube(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "poly v1");
  std::vector<Cell> cells;
  std::set<Cell> seen;
  std::vector<std::string> warnings;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    const int number = static_cast<int>(i) + 1;
    if (line.empty() || line.front() == '#') continue;
    Cell c;
    if (!parse_cell(line, c)) malformed(number, line);
    if (!seen.insert(c).second) {
      warnings.push_back("line " + std::to_string(number) + ": duplicate cell " + std::string(line));
      continue;
    }
    cells.push_back(c);
  }
  if (cells.empty()) throw Error(ErrorCode::EmptyPolycube, "polycube file lists no cells");
  return {Polycube(std::move(cells)), std::move(warnings)};
}

std::string emit_polycube(const Polycube& p) {
  std::ostringstream os;
  os << "poly v1\n";
  for (const Cell& c : p.cells()) append_cell(os, c);
  return os.str();
}

ArcDiagram parse_arc_diagram(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "arcs v1");
  ArcDiagram d;
  bool have_m = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    const int number = static_cast<int>(i) + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);
    if (words[0] == "m") {
      if (have_m || !d.arcs.empty() || words.size() != 2 || !parse_int(words[1], d.m)) malformed(number, line);
      have_m = true;
    } else if (words[0] == "arc") {
      if (!have_m || words.size() != 1) malformed(number, line);
      d.arcs.emplace_back();
    } else {
      Cell c;
      if (d.arcs.empty() || !parse_cell(line, c)) malformed(number, line);
      d.arcs.back().push_back(c);
    }
  }
  if (!have_m) throw ParseError(ErrorCode::MalformedLine, static_cast<int>(lines.size()), "missing 'm' line");
  return d;
}

std::string emit_arc_diagram(const ArcDiagram& d) {
  std::ostringstream os;
  os << "arcs v1\nm " << d.m << '\n';
  for (const auto& path : d.arcs) {
    os << "arc\n";
    for (const Cell& c : path) append_cell(os, c);
  }
  return os.str();
}

namespace {

using nlohmann::json;

[[noreturn]] void bad_certificate(const std::string& why) {
  throw Error(ErrorCode::BadCertificate, "certificate: " + why);
}

Polycube cells_from_json(const json& j, const char* field) {
  if (!j.is_array()) bad_certificate(std::string(field) + " must be a list of cells");
  std::vector<Cell> cells;
  for (const json& c : j) {
    if (!c.is_array() || c.size() != 3) bad_certificate(std::string(field) + " entries must be [x,y,z]");
    cells.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
  }
  if (cells.empty()) bad_certificate(std::string(field) + " is empty");
  return Polycube(std::move(cells));
}

void cells_to_json(std::ostringstream& os, const Polycube& p) {
  os << '[';
  bool first = true;
  for (const Cell& c : p.cells()) {
    os << (first ? "" : ",") << '[' << c.x << ',' << c.y << ',' << c.z << ']';
    first = false;
  }
  os << ']';
}

}  // namespace

TilingCertificate parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_certificate(e.what());
  }
  try {
    if (!j.is_object()) bad_certificate("top level must be an object");
    if (j.value("format", "") != "reptile-cert v1") bad_certificate("unknown format tag");

    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "proper" && mode != "full") bad_certificate("mode must be 'proper' or 'full'");

    std::optional<int> scale;
    if (j.contains("scale") && !j.at("scale").is_null()) scale = j.at("scale").get<int>();

    Polycube piece = cells_from_json(j.at("piece"), "piece");
    const json& target_json = j.at("target");
    std::optional<Polycube> target;
    if (target_json.is_string()) {
      if (target_json.get<std::string>() != "scaled-piece" || !scale || *scale < 1)
        bad_certificate("target 'scaled-piece' needs a positive scale");
      target = scale_polycube(piece, *scale);
    } else {
      target = cells_from_json(target_json, "target");
    }

    std::vector<Isometry> placements;
    for (const json& p : j.at("placements")) {
      const auto rot = p.at("rot").get<std::vector<int>>();
      const auto trans = p.at("trans").get<std::vector<int>>();
      if (rot.size() != 9 || trans.size() != 3) bad_certificate("placement needs 9 rot and 3 trans entries");
      Mat3 m;
      std::copy(rot.begin(), rot.end(), m.begin());
      if (!is_signed_permutation(m)) bad_certificate("placement rotation is not a signed permutation");
      placements.push_back({m, {trans[0], trans[1], trans[2]}});
    }
    return {std::move(piece), std::move(*target), std::move(placements),
            mode == "proper" ? SymmetryMode::Proper : SymmetryMode::Full, scale};
  } catch (const json::exception& e) {
    bad_certificate(e.what());
  }
}

std::string emit_certificate(const TilingCertificate& c) {
  std::ostringstream os;
  os << "{\n  \"format\": \"reptile-cert v1\",\n  \"mode\": \"" << to_string(c.mode) << "\",\n  \"scale\": ";
  if (c.scale) os << *c.scale; else os << "null";
  os << ",\n  \"piece\": ";
  cells_to_json(os, c.piece);
  os << ",\n  \"target\": ";
  if (c.scale && *c.scale >= 1 && c.target == scale_polycube(c.piece, *c.scale)) {
    os << "\"scaled-piece\"";
  } else {
    cells_to_json(os, c.target);
  }
  os << ",\n  \"placements\": [";
  for (std::size_t i = 0; i < c.placements.size(); ++i) {
    const Isometry& g = c.placements[i];
    os << (i ? ",\n" : "\n") << "    {\"rot\": [";
    for (int k = 0; k < 9; ++k) os << (k ? "," : "") << g.rot[k];
    os << "], \"trans\": [" << g.trans[0] << ',' << g.trans[1] << ',' << g.trans[2] << "]}";
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::string emit_obj(const Polycube& p) {
  const QuadSurface surface = boundary_surface(p);
  std::map<Vec3, std::size_t> index;
  for (const Quad& q : surface.quads)
    for (const Vec3& v : quad_corners(q)) index.emplace(v, 0);
  std::size_t next = 1;
  for (auto& [v, i] : index) i = next++;

  std::ostringstream os;
  os << "# polycube boundary: " << index.size() << " vertices, " << surface.quads.size() << " quads\n";
  for (const auto& [v, i] : index) os << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const Quad& q : surface.quads) {
    os << 'f';
    for (const Vec3& v : quad_corners(q)) os << ' ' << index[v];
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::Io, "failed writing " + path.string());
}

Polycube figure_one() { return parse_polycube(kFigureOnePoly).polycube; }

}  // namespace reptile::io
