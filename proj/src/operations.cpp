#include "mapkit/operations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mapkit/symmetry.hpp"

namespace mapkit {

InvolutionSystem dual(const InvolutionSystem& sys) {
  const auto& img = sys.images();
  return InvolutionSystem({img[2], img[1], img[0]});
}

FlagMap dual(const FlagMap& map) { return FlagMap(dual(map.system())); }

// ---------------------------------------------------------------------------

// (Φ,0)r0 = (Φs1,0)  (Φ,0)r1 = (Φs2,0)  (Φ,0)r2 = (Φ,2)
// (Φ,1)r0 = (Φs0,1)  (Φ,1)r1 = (Φ,2)    (Φ,1)r2 = (Φs2,1)
// (Φ,2)r0 = (Φs1,2)  (Φ,2)r1 = (Φ,1)    (Φ,2)r2 = (Φ,0)
const ExpansionScheme kTruncation{
    {{{{{1, 0}, {2, 0}, {-1, 2}}},
      {{{0, 1}, {-1, 2}, {2, 1}}},
      {{{1, 2}, {-1, 1}, {-1, 0}}}}},
    0,
    {Word{2, 1, 0, 1, 2}, Word{0}, Word{1}},
    {0, 2, 1},
};

// (Φ,0)r'0 = (Φs2,0)  (Φ,0)r'1 = (Φ,1)    (Φ,0)r'2 = (Φs0,0)
// (Φ,1)r'0 = (Φs1,1)  (Φ,1)r'1 = (Φ,0)    (Φ,1)r'2 = (Φ,2)
// (Φ,2)r'0 = (Φs1,2)  (Φ,2)r'1 = (Φs0,2)  (Φ,2)r'2 = (Φ,1)
const ExpansionScheme kLeapfrog{
    {{{{{2, 0}, {-1, 1}, {0, 0}}},
      {{{1, 1}, {-1, 0}, {-1, 2}}},
      {{{1, 2}, {0, 2}, {-1, 1}}}}},
    2,
    {Word{1}, Word{0}, Word{2, 1, 0, 1, 2}},
    {2, 1, 0},
};

InvolutionSystem expand(const InvolutionSystem& sys, const ExpansionScheme& scheme) {
  const std::size_t n = sys.size();
  std::array<std::vector<Point>, 3> images;
  for (Colour c = 0; c < kColours; ++c) {
    images[c].resize(3 * n);
    for (Point x = 0; x < n; ++x)
      for (int tag = 0; tag < 3; ++tag) {
        const auto& st = scheme.step[tag][c];
        Point y = st.via < 0 ? x : sys(st.via, x);
        images[c][3 * x + tag] = 3 * y + static_cast<Point>(st.tag);
      }
  }
  return InvolutionSystem(std::move(images));
}

namespace {

OrbitPartition tag_partition(std::size_t n, const std::array<int, 3>& class_tags) {
  std::vector<std::vector<Point>> classes(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (Point x = 0; x < n; ++x) classes[i].push_back(3 * x + static_cast<Point>(class_tags[i]));
  return OrbitPartition(std::move(classes), 3 * n);
}

}  // namespace

TruncationResult truncate(const FlagMap& map) {
  const std::size_t n = map.size();
  std::vector<FlagOrigin> origin(3 * n);
  for (Point x = 0; x < n; ++x)
    for (int tag = 0; tag < 3; ++tag) origin[3 * x + tag] = {x, tag};
  return {FlagMap(expand(map, kTruncation)), tag_partition(n, kTruncation.class_tags), std::move(origin)};
}

FlagMap leapfrog(const FlagMap& map) { return FlagMap(expand(map, kLeapfrog)); }

FlagMap subdivide2d(const FlagMap& map) { return dual(truncate(map).map); }

InvolutionSystem expand_type_graph_truncation(const InvolutionSystem& graph) {
  return expand(graph, kTruncation);
}

InvolutionSystem expand_type_graph_leapfrog(const InvolutionSystem& graph) {
  return expand(graph, kLeapfrog);
}

// ---------------------------------------------------------------------------

namespace {

// Tags are renumbered to class positions: 0 = A0, 1 = A2, 2 = A1.
int class_position(const ExpansionScheme& s, int tag) {
  for (int i = 0; i < 3; ++i)
    if (s.class_tags[i] == tag) return i;
  throw std::logic_error("tag missing from class order");
}

bool all_valence_three(const InvolutionSystem& sys) {
  const auto vertices = orbits(sys, {1, 2});
  for (const auto& cls : vertices.classes())
    if (cls.size() != 6) return false;
  return true;
}

}  // namespace

std::optional<RecognizedTruncation> recognize_truncation(const FlagMap& map) {
  const ExpansionScheme& s = kTruncation;
  if (!all_valence_three(map)) return std::nullopt;
  const std::size_t n = map.size();
  if (n % 3 != 0) return std::nullopt;
  const CanonicalKey target = canonical_key(map);

  for (int seed = 0; seed < 3; ++seed) {
    std::vector<int> tag(n, -1);
    tag[0] = s.class_tags[seed];
    std::vector<Point> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      Point x = queue[i];
      for (Colour c = 0; c < kColours; ++c) {
        Point y = map(c, x);
        int t = s.next_tag(tag[x], c);
        if (tag[y] < 0) {
          tag[y] = t;
          queue.push_back(y);
        } else if (tag[y] != t) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    std::vector<Point> base;
    std::vector<Point> index(n, 0);
    for (Point x = 0; x < n; ++x)
      if (tag[x] == s.base_tag) {
        index[x] = static_cast<Point>(base.size());
        base.push_back(x);
      }
    if (3 * base.size() != n) continue;
    std::array<std::vector<Point>, 3> images;
    for (Colour j = 0; j < kColours; ++j) {
      images[j].resize(base.size());
      for (std::size_t i = 0; i < base.size(); ++i) {
        Point y = apply_word(map, base[i], s.source_words[j]);
        if (tag[y] != s.base_tag) {
          ok = false;
          break;
        }
        images[j][i] = index[y];
      }
    }
    if (!ok) continue;
    InvolutionSystem source(std::move(images));
    if (!validate(source, Strictness::strict).empty()) continue;
    FlagMap source_map(std::move(source));
    if (canonical_key(expand(source_map, s)) != target) continue;

    std::vector<std::size_t> labels(n);
    for (Point x = 0; x < n; ++x) labels[x] = static_cast<std::size_t>(class_position(s, tag[x]));
    std::vector<std::vector<Point>> classes(3);
    for (Point x = 0; x < n; ++x) classes[labels[x]].push_back(x);
    return RecognizedTruncation{std::move(source_map), OrbitPartition(std::move(classes), n)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Point> compose(const std::vector<Point>& f, const std::vector<Point>& g) {
  std::vector<Point> h(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) h[x] = g[f[x]];
  return h;
}

std::set<std::vector<Point>> closure(const std::vector<std::vector<Point>>& gens, std::size_t n) {
  std::vector<Point> id(n);
  for (std::size_t x = 0; x < n; ++x) id[x] = static_cast<Point>(x);
  std::set<std::vector<Point>> group{id};
  std::vector<std::vector<Point>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<Point>> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        auto b = compose(a, g);
        if (group.insert(b).second) next.push_back(std::move(b));
      }
    frontier = std::move(next);
  }
  return group;
}

}  // namespace

std::vector<InvolutionSystem> alternating_cycle_quotients(Colour a, Colour b, std::size_t length) {
  if (length < 2 || length % 2 != 0 || a == b)
    throw std::invalid_argument("alternating cycle needs two colours and an even length");
  std::array<std::vector<Point>, 3> images;
  for (auto& img : images) {
    img.resize(length);
    for (std::size_t x = 0; x < length; ++x) img[x] = static_cast<Point>(x);
  }
  for (std::size_t x = 0; x < length; x += 2) {
    images[a][x] = static_cast<Point>(x + 1);
    images[a][x + 1] = static_cast<Point>(x);
    std::size_t y = (x + 2) % length;
    images[b][x + 1] = static_cast<Point>(y);
    images[b][y] = static_cast<Point>(x + 1);
  }
  InvolutionSystem cycle(std::move(images));

  std::vector<std::vector<Point>> elements;
  for (const auto& g : automorphism_group(cycle)) elements.push_back(g.perm());

  std::map<CanonicalKey, InvolutionSystem> shapes;
  for (std::size_t mask = 0; mask < (std::size_t{1} << elements.size()); ++mask) {
    std::vector<std::vector<Point>> gens;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (mask >> i & 1U) gens.push_back(elements[i]);
    std::vector<Automorphism> sub;
    for (auto& p : closure(gens, length)) sub.emplace_back(p);
    auto q = quotient(cycle, orbit_partition(sub, length));
    auto form = canonical_form(q);
    shapes.emplace(form.key, std::move(form.system));
  }
  std::vector<InvolutionSystem> out;
  for (auto& [key, sys] : shapes) out.push_back(std::move(sys));
  return out;
}

const std::vector<InvolutionSystem>& hexagon_quotients() {
  static const auto shapes = alternating_cycle_quotients(1, 2, 6);
  return shapes;
}

const std::vector<InvolutionSystem>& square_quotients() {
  static const auto shapes = alternating_cycle_quotients(0, 2, 4);
  return shapes;
}

InvolutionSystem two_colour_component(const InvolutionSystem& graph, Colour a, Colour b, Point x) {
  std::vector<Point> pts{x};
  std::map<Point, Point> index{{x, 0}};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (Colour c : {a, b}) {
      Point y = graph(c, pts[i]);
      if (index.emplace(y, static_cast<Point>(pts.size())).second) pts.push_back(y);
    }
  std::array<std::vector<Point>, 3> images;
  for (Colour c = 0; c < kColours; ++c) {
    images[c].resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      images[c][i] = (c == a || c == b) ? index.at(graph(c, pts[i])) : static_cast<Point>(i);
  }
  return InvolutionSystem(std::move(images));
}

std::optional<std::vector<Point>> inadmissible_orbit(const InvolutionSystem& graph) {
  static const auto allowed = [] {
    std::set<CanonicalKey> keys;
    for (const auto& s : hexagon_quotients()) keys.insert(canonical_key(s));
    return keys;
  }();
  const auto vertex_orbits = orbits(graph, {1, 2});
  for (const auto& cls : vertex_orbits.classes()) {
    if (cls.size() > 6) return cls;
    if (!allowed.contains(canonical_key(two_colour_component(graph, 1, 2, cls.front())))) return cls;
  }
  return std::nullopt;
}

bool is_truncation_admissible(const InvolutionSystem& graph) { return !inadmissible_orbit(graph); }

namespace {
std::string orbit_text(const std::vector<Point>& orbit) {
  std::string s;
  for (Point x : orbit) s += (s.empty() ? "" : " ") + std::to_string(x + 1);
  return s;
}
}  // namespace

InadmissibleTypeGraphError::InadmissibleTypeGraphError(std::vector<Point> orbit)
    : Error("<t1,t2>-orbit {" + orbit_text(orbit) + "} is not a quotient of the alternating 6-cycle"),
      orbit_(std::move(orbit)) {}

// ---------------------------------------------------------------------------

std::vector<AssemblyCandidate> assemble_source_type(const InvolutionSystem& graph,
                                                    const ExpansionScheme& scheme) {
  if (auto bad = inadmissible_orbit(graph)) throw InadmissibleTypeGraphError(std::move(*bad));
  const std::size_t k = graph.size();
  // Product state (v, tag) is numbered 3v + tag.
  auto step = [&](Point state, Colour c) -> Point {
    Point v = state / 3;
    int tag = static_cast<int>(state % 3);
    return 3 * graph(c, v) + static_cast<Point>(scheme.next_tag(tag, c));
  };

  std::vector<bool> seen(3 * k, false);
  std::map<CanonicalKey, AssemblyCandidate> found;
  for (Point v0 = 0; v0 < k; ++v0) {
    Point seed = 3 * v0 + static_cast<Point>(scheme.base_tag);
    if (seen[seed]) continue;
    std::vector<Point> comp{seed};
    std::map<Point, Point> index{{seed, 0}};
    seen[seed] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Colour c = 0; c < kColours; ++c) {
        Point y = step(comp[i], c);
        if (index.emplace(y, static_cast<Point>(comp.size())).second) {
          comp.push_back(y);
          seen[y] = true;
        }
      }

    AssemblyProduct product{{}, InvolutionSystem::identity(comp.size()), {}};
    std::array<std::vector<Point>, 3> trans;
    for (Colour c = 0; c < kColours; ++c) {
      trans[c].resize(comp.size());
      for (std::size_t i = 0; i < comp.size(); ++i) trans[c][i] = index.at(step(comp[i], c));
    }
    product.transitions = InvolutionSystem(std::move(trans));
    std::vector<Point> base_index(comp.size(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      product.states.emplace_back(comp[i] / 3, static_cast<int>(comp[i] % 3));
      if (static_cast<int>(comp[i] % 3) == scheme.base_tag) {
        base_index[i] = static_cast<Point>(product.base_states.size());
        product.base_states.push_back(static_cast<Point>(i));
      }
    }

    std::array<std::vector<Point>, 3> src;
    bool ok = true;
    for (Colour j = 0; j < kColours && ok; ++j) {
      src[j].resize(product.base_states.size());
      for (std::size_t i = 0; i < product.base_states.size(); ++i) {
        Point y = apply_word(product.transitions, product.base_states[i], scheme.source_words[j]);
        if (product.states[y].second != scheme.base_tag) {
          ok = false;
          break;
        }
        src[j][i] = base_index[y];
      }
    }
    if (!ok) continue;
    InvolutionSystem source(std::move(src));
    if (!validate(source, Strictness::relaxed).empty()) continue;
    auto form = canonical_form(source);
    std::size_t fold = comp.size() / k;
    found.emplace(form.key, AssemblyCandidate{std::move(product), std::move(form.system), fold});
  }

  std::vector<AssemblyCandidate> out;
  for (auto& [key, cand] : found) out.push_back(std::move(cand));
  std::stable_sort(out.begin(), out.end(),
                   [](const AssemblyCandidate& a, const AssemblyCandidate& b) { return a.fold > b.fold; });
  return out;
}

}  // namespace mapkit
