#include "mapkit/formats.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "mapkit/errors.hpp"

namespace mapkit {

const char* const kCensusHeader =
    "key,n_flags,V,E,F,chi,orientable,k,type_key,tr_k,tr_type_key,le_k,le_type_key";

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string strip(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Non-blank lines with comments removed.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto s = strip(raw);
    if (!s.empty()) out.push_back({number, s});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<std::size_t> parse_count(const std::string& s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  std::size_t value = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  return value;
}

}  // namespace

CisDocument read_cis(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input, expected 'cis <k> strict|relaxed'");

  const auto header = words(lines[0].text);
  if (header.empty() || header[0] != "cis")
    throw ParseError(lines[0].number, "expected header 'cis <k> strict|relaxed'");
  if (header.size() < 2 || header.size() > 3)
    throw ParseError(lines[0].number, "header takes a point count and an optional mode");
  auto k = parse_count(header[1]);
  if (!k || *k == 0) throw ParseError(lines[0].number, "bad point count '" + header[1] + "'");
  if (*k > 65535) throw ParseError(lines[0].number, "point count too large");
  Strictness mode = Strictness::relaxed;
  if (header.size() == 3) {
    if (header[2] == "strict")
      mode = Strictness::strict;
    else if (header[2] != "relaxed")
      throw ParseError(lines[0].number, "mode must be strict or relaxed, got '" + header[2] + "'");
  }

  std::array<std::vector<Point>, 3> images;
  std::array<bool, 3> seen{};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto colon = line.text.find(':');
    if (colon == std::string::npos)
      throw ParseError(line.number, "expected '<colour>: <images>'");
    auto label = strip(line.text.substr(0, colon));
    if (label.size() != 1 || label[0] < '0' || label[0] > '2')
      throw ParseError(line.number, "colour must be 0, 1 or 2, got '" + label + "'");
    const Colour c = static_cast<Colour>(label[0] - '0');
    if (seen[c]) throw ParseError(line.number, "colour " + label + " given twice");
    seen[c] = true;
    const auto values = words(line.text.substr(colon + 1));
    if (values.size() != *k)
      throw ParseError(line.number, "colour " + label + " lists " +
                                        std::to_string(values.size()) + " images, expected " +
                                        std::to_string(*k));
    for (const auto& v : values) {
      auto image = parse_count(v);
      if (!image || *image < 1 || *image > *k)
        throw ParseError(line.number, "image '" + v + "' outside 1.." + std::to_string(*k));
      images[c].push_back(static_cast<Point>(*image - 1));
    }
  }
  for (Colour c = 0; c < kColours; ++c)
    if (!seen[c])
      throw ParseError(lines.back().number, "missing line for colour " + std::to_string(c));

  return {InvolutionSystem(std::move(images)), mode};
}

CisDocument parse_cis(const std::string& text, bool canonicalize) {
  auto [sys, mode] = read_cis(text);
  auto report = validate(sys, mode);
  if (!report.empty()) throw InvalidSystemError(std::move(report));
  if (canonicalize) sys = canonical_form(sys).system;
  return {std::move(sys), mode};
}

std::string serialize_cis(const InvolutionSystem& sys, bool canonicalize) {
  return serialize_cis(sys, validate(sys, Strictness::strict).empty() ? Strictness::strict
                                                                      : Strictness::relaxed,
                       canonicalize);
}

std::string serialize_cis(const InvolutionSystem& sys, Strictness mode, bool canonicalize) {
  const InvolutionSystem out = canonicalize ? canonical_form(sys).system : sys;
  std::ostringstream os;
  os << "cis " << out.size() << (mode == Strictness::strict ? " strict" : " relaxed") << "\n";
  for (Colour c = 0; c < kColours; ++c) {
    os << static_cast<int>(c) << ":";
    for (Point x = 0; x < out.size(); ++x) os << " " << out(c, x) + 1;
    os << "\n";
  }
  return os.str();
}

RotationSystem parse_rotation(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty() || lines[0].text != "rot")
    throw ParseError(lines.empty() ? 0 : lines[0].number, "expected header 'rot'");
  RotationSystem rs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto colon = line.text.find(':');
    if (colon == std::string::npos) throw ParseError(line.number, "expected 'v<i>: <ids>'");
    auto label = strip(line.text.substr(0, colon));
    const std::string expected = "v" + std::to_string(rs.vertices.size());
    if (label != expected)
      throw ParseError(line.number, "expected vertex label " + expected + ", got '" + label + "'");
    auto ids = words(line.text.substr(colon + 1));
    if (ids.empty()) throw ParseError(line.number, "vertex without half-edges");
    rs.vertices.push_back(std::move(ids));
  }
  if (rs.vertices.empty()) throw ParseError(lines[0].number, "no vertices");
  return rs;
}

std::string export_dot(const InvolutionSystem& sys, const DotOptions& options) {
  const InvolutionSystem g = options.canonicalize ? canonical_form(sys).system : sys;
  std::ostringstream os;
  os << "graph " << options.graph_name << " {\n";
  os << "  node [shape=circle];\n";
  for (Point x = 0; x < g.size(); ++x) os << "  " << x << ";\n";
  for (Point x = 0; x < g.size(); ++x)
    for (Colour c = 0; c < kColours; ++c) {
      const Point y = g(c, x);
      const int label = static_cast<int>(c);
      if (y == x) {
        const std::string stub = "h_" + std::to_string(x) + "_" + std::to_string(label);
        os << "  " << stub << " [shape=point]; " << x << " -- " << stub << " [label=\"" << label
           << "\"];\n";
      } else if (x < y) {
        os << "  " << x << " -- " << y << " [label=\"" << label << "\"];\n";
      }
    }
  os << "}\n";
  return os.str();
}

std::string census_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream os;
  os << kCensusHeader << "\n";
  for (const auto& r : records)
    os << r.key.hex() << "," << r.n_flags << "," << r.V << "," << r.E << "," << r.F << ","
       << r.chi << "," << (r.orientable ? "true" : "false") << "," << r.k << ","
       << r.type_key.hex() << "," << r.tr_k << "," << r.tr_type_key.hex() << "," << r.le_k << ","
       << r.le_type_key.hex() << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace mapkit
