#include "mapkit/builders.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "mapkit/operations.hpp"

namespace mapkit {

FlagMap from_rotation_system(const RotationSystem& rs) {
  // Darts in vertex order; dart d sits at position pos in its vertex list.
  std::vector<std::size_t> next;
  std::map<std::string, std::vector<std::size_t>> occurrences;
  std::size_t darts = 0;
  for (const auto& ids : rs.vertices) {
    if (ids.empty()) throw std::invalid_argument("rotation system vertex without half-edges");
    for (std::size_t p = 0; p < ids.size(); ++p) {
      next.push_back(darts + (p + 1) % ids.size());
      occurrences[ids[p]].push_back(darts + p);
    }
    darts += ids.size();
  }
  if (darts == 0) throw std::invalid_argument("empty rotation system");
  std::vector<std::size_t> opp(darts);
  for (const auto& [id, at] : occurrences) {
    if (at.size() != 2)
      throw std::invalid_argument("half-edge identifier '" + id + "' occurs " + std::to_string(at.size()) +
                                  " times, expected 2");
    opp[at[0]] = at[1];
    opp[at[1]] = at[0];
  }
  // Flag (d, side) is 2d + side.
  const std::size_t n = 2 * darts;
  std::array<std::vector<Point>, 3> t;
  for (auto& v : t) v.resize(n);
  for (std::size_t d = 0; d < darts; ++d) {
    for (Point s = 0; s < 2; ++s) {
      Point f = static_cast<Point>(2 * d + s);
      t[2][f] = static_cast<Point>(2 * d + (1 - s));
      t[0][f] = static_cast<Point>(2 * opp[d] + (1 - s));
    }
    t[1][2 * d] = static_cast<Point>(2 * next[d] + 1);
    t[1][2 * next[d] + 1] = static_cast<Point>(2 * d);
  }
  return FlagMap(InvolutionSystem(std::move(t)));
}

FlagMap from_face_cycles(const std::vector<std::vector<int>>& faces) {
  // Flag (face f, side i, end e): vertex faces[f][i + e], edge i of f.
  std::vector<std::size_t> base(faces.size() + 1, 0);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].size() < 3) throw std::invalid_argument("face cycles need at least 3 vertices");
    base[f + 1] = base[f] + 2 * faces[f].size();
  }
  const std::size_t n = base.back();
  auto flag = [&](std::size_t f, std::size_t i, std::size_t e) {
    return static_cast<Point>(base[f] + 2 * (i % faces[f].size()) + e);
  };
  auto vertex = [&](std::size_t f, std::size_t i, std::size_t e) {
    return faces[f][(i + e) % faces[f].size()];
  };
  std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, std::size_t>>> sides;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t i = 0; i < faces[f].size(); ++i) {
      int a = vertex(f, i, 0), b = vertex(f, i, 1);
      sides[{std::min(a, b), std::max(a, b)}].emplace_back(f, i);
    }

  std::array<std::vector<Point>, 3> t;
  for (auto& v : t) v.resize(n);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const std::size_t m = faces[f].size();
    for (std::size_t i = 0; i < m; ++i) {
      t[0][flag(f, i, 0)] = flag(f, i, 1);
      t[0][flag(f, i, 1)] = flag(f, i, 0);
      t[1][flag(f, i, 1)] = flag(f, i + 1, 0);
      t[1][flag(f, i + 1, 0)] = flag(f, i, 1);
    }
  }
  for (const auto& [edge, at] : sides) {
    if (at.size() != 2)
      throw std::invalid_argument("edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
                                  " lies on " + std::to_string(at.size()) + " face sides");
    auto [f, i] = at[0];
    auto [g, j] = at[1];
    for (std::size_t e = 0; e < 2; ++e) {
      std::size_t other = vertex(g, j, 0) == vertex(f, i, e) ? 0 : 1;
      t[2][flag(f, i, e)] = flag(g, j, other);
      t[2][flag(g, j, other)] = flag(f, i, e);
    }
  }
  return FlagMap(InvolutionSystem(std::move(t)));
}

FlagMap tetrahedron() { return from_face_cycles({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

FlagMap cube() {
  // Vertex bits are coordinates; a face fixes one bit.
  std::vector<std::vector<int>> faces;
  for (int axis = 0; axis < 3; ++axis)
    for (int value = 0; value < 2; ++value) {
      int p = (axis + 1) % 3, q = (axis + 2) % 3;
      std::vector<int> cycle;
      for (auto [a, b] : {std::pair{0, 0}, {1, 0}, {1, 1}, {0, 1}})
        cycle.push_back(value << axis | a << p | b << q);
      faces.push_back(cycle);
    }
  return from_face_cycles(faces);
}

FlagMap octahedron() {
  // Vertex 2*axis + sign.
  std::vector<std::vector<int>> faces;
  for (int s = 0; s < 8; ++s) faces.push_back({0 + (s & 1), 2 + (s >> 1 & 1), 4 + (s >> 2 & 1)});
  return from_face_cycles(faces);
}

FlagMap icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<std::array<double, 3>> pts;
  for (int i = 0; i < 3; ++i)
    for (double a : {1.0, -1.0})
      for (double b : {phi, -phi}) {
        std::array<double, 3> p{};
        p[(i + 1) % 3] = a;
        p[(i + 2) % 3] = b;
        pts.push_back(p);
      }
  auto adjacent = [&](std::size_t u, std::size_t v) {
    double d = 0;
    for (int c = 0; c < 3; ++c) d += (pts[u][c] - pts[v][c]) * (pts[u][c] - pts[v][c]);
    return std::abs(d - 4.0) < 1e-9;
  };
  std::vector<std::vector<int>> faces;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c)
        if (adjacent(a, b) && adjacent(b, c) && adjacent(a, c))
          faces.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
  return from_face_cycles(faces);
}

FlagMap dodecahedron() { return dual(icosahedron()); }

namespace {
void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " needs n >= 1, got " + std::to_string(n));
}
}  // namespace

FlagMap dihedron(int n) {
  require_positive(n, "dihedron");
  // Flag (edge e, end, face f) is 4e + 2end + f.
  const Point m = static_cast<Point>(n);
  std::array<std::vector<Point>, 3> t;
  for (auto& v : t) v.resize(4 * m);
  for (Point e = 0; e < m; ++e)
    for (Point f = 0; f < 2; ++f) {
      for (Point end = 0; end < 2; ++end) {
        t[0][4 * e + 2 * end + f] = 4 * e + 2 * (1 - end) + f;
        t[2][4 * e + 2 * end + f] = 4 * e + 2 * end + (1 - f);
      }
      Point a = 4 * e + 2 + f, b = 4 * ((e + 1) % m) + f;
      t[1][a] = b;
      t[1][b] = a;
    }
  return FlagMap(InvolutionSystem(std::move(t)));
}

FlagMap hosohedron(int n) {
  require_positive(n, "hosohedron");
  // Flag (edge e, end, side s) is 4e + 2end + s.
  const Point m = static_cast<Point>(n);
  std::array<std::vector<Point>, 3> t;
  for (auto& v : t) v.resize(4 * m);
  for (Point e = 0; e < m; ++e)
    for (Point end = 0; end < 2; ++end) {
      for (Point s = 0; s < 2; ++s) {
        t[0][4 * e + 2 * end + s] = 4 * e + 2 * (1 - end) + s;
        t[2][4 * e + 2 * end + s] = 4 * e + 2 * end + (1 - s);
      }
      Point a = 4 * e + 2 * end, b = 4 * ((e + 1) % m) + 2 * end + 1;
      t[1][a] = b;
      t[1][b] = a;
    }
  return FlagMap(InvolutionSystem(std::move(t)));
}

FlagMap prism(int n) {
  require_positive(n, "prism");
  // Top ring inside, bottom ring outside, listed counter-clockwise.
  RotationSystem rs;
  auto id = [&](char kind, int i) { return std::string(1, kind) + std::to_string(((i % n) + n) % n); };
  for (int i = 0; i < n; ++i) rs.vertices.push_back({id('v', i), id('t', i), id('t', i - 1)});
  for (int i = 0; i < n; ++i) rs.vertices.push_back({id('b', i), id('v', i), id('b', i - 1)});
  return from_rotation_system(rs);
}

FlagMap torus44(int b, int c) {
  if (b == 0 && c == 0) throw std::invalid_argument("torus44 needs (b, c) != (0, 0)");
  const long long N = static_cast<long long>(b) * b + static_cast<long long>(c) * c;
  auto mod = [N](long long v) { return ((v % N) + N) % N; };
  // (x, y) and (x', y') are the same vertex iff their images here agree.
  auto image = [&](long long x, long long y) { return std::pair{mod(x * b + y * c), mod(y * b - x * c)}; };
  std::map<std::pair<long long, long long>, Point> index;
  std::vector<std::pair<long long, long long>> coords;
  for (long long x = 0; x < N; ++x)
    for (long long y = 0; y < N; ++y)
      if (index.emplace(image(x, y), static_cast<Point>(coords.size())).second) coords.emplace_back(x, y);
  static constexpr int dx[4] = {1, 0, -1, 0};
  static constexpr int dy[4] = {0, 1, 0, -1};
  // Flag (v, direction d, side s) is 8v + 2d + s.
  const std::size_t n = 8 * coords.size();
  std::array<std::vector<Point>, 3> t;
  for (auto& v : t) v.resize(n);
  for (Point v = 0; v < coords.size(); ++v)
    for (Point d = 0; d < 4; ++d) {
      auto [x, y] = coords[v];
      Point w = index.at(image(x + dx[d], y + dy[d]));
      Point back = (d + 2) % 4;
      for (Point s = 0; s < 2; ++s) {
        t[2][8 * v + 2 * d + s] = 8 * v + 2 * d + (1 - s);
        t[0][8 * v + 2 * d + s] = 8 * w + 2 * back + (1 - s);
      }
      Point a = 8 * v + 2 * d, bb = 8 * v + 2 * ((d + 1) % 4) + 1;
      t[1][a] = bb;
      t[1][bb] = a;
    }
  return FlagMap(InvolutionSystem(std::move(t)));
}

// ---------------------------------------------------------------------------

FlagMap build_named(const std::string& name, const std::vector<int>& params) {
  auto arity = [&](std::size_t want) {
    if (params.size() != want)
      throw std::invalid_argument(name + " takes " + std::to_string(want) + " parameter(s), got " +
                                  std::to_string(params.size()));
  };
  if (name == "tetrahedron") return arity(0), tetrahedron();
  if (name == "cube") return arity(0), cube();
  if (name == "octahedron") return arity(0), octahedron();
  if (name == "dodecahedron") return arity(0), dodecahedron();
  if (name == "icosahedron") return arity(0), icosahedron();
  if (name == "dihedron") return arity(1), dihedron(params[0]);
  if (name == "hosohedron") return arity(1), hosohedron(params[0]);
  if (name == "prism") return arity(1), prism(params[0]);
  if (name == "torus44") return arity(2), torus44(params[0], params[1]);
  throw std::invalid_argument("unknown map name '" + name + "'");
}

FlagMap build_named(const std::string& text) {
  auto open = text.find('(');
  if (open == std::string::npos) return build_named(text, {});
  if (text.back() != ')') throw std::invalid_argument("malformed map name '" + text + "'");
  std::vector<int> params;
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    auto comma = inner.find(',', pos);
    std::string part = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      params.push_back(std::stoi(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad parameter '" + part + "' in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return build_named(text.substr(0, open), params);
}

std::vector<std::pair<std::string, FlagMap>> standard_builder_maps() {
  std::vector<std::pair<std::string, FlagMap>> out;
  for (const char* name : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"})
    out.emplace_back(name, build_named(std::string(name)));
  for (int n = 1; n <= 6; ++n) {
    out.emplace_back("dihedron(" + std::to_string(n) + ")", dihedron(n));
    out.emplace_back("hosohedron(" + std::to_string(n) + ")", hosohedron(n));
    out.emplace_back("prism(" + std::to_string(n) + ")", prism(n));
  }
  for (auto [b, c] : {std::pair{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}})
    out.emplace_back("torus44(" + std::to_string(b) + "," + std::to_string(c) + ")", torus44(b, c));
  return out;
}

}  // namespace mapkit
