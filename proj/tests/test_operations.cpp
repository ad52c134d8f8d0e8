#include <doctest.h>

#include <deque>
#include <map>
#include <set>

#include "mapkit/builders.hpp"
#include "mapkit/enumeration.hpp"
#include "mapkit/operations.hpp"
#include "mapkit/symmetry.hpp"
#include "oracles.hpp"

using namespace mapkit;

namespace {

bool same(const InvolutionSystem& a, const InvolutionSystem& b) {
  return canonical_key(a) == canonical_key(b);
}

std::vector<FlagMap> small_maps() {
  std::vector<FlagMap> out;
  for (std::size_t n = 4; n <= 12; n += 4)
    for (auto& m : enumerate_maps(n)) out.push_back(m);
  for (auto& [name, m] : standard_builder_maps()) out.push_back(m);
  return out;
}

// Symbolic flags (reduced word in s0, s1, s2 applied to a base flag, tag),
// with the truncation adjacencies written out one by one.
using Symbolic = std::pair<std::string, int>;

std::string times(std::string w, char s) {
  if (!w.empty() && w.back() == s)
    w.pop_back();
  else
    w.push_back(s);
  return w;
}

Symbolic truncation_step(const Symbolic& f, int r) {
  const auto& [w, tag] = f;
  if (tag == 0) {
    if (r == 0) return {times(w, '1'), 0};
    if (r == 1) return {times(w, '2'), 0};
    return {w, 2};
  }
  if (tag == 1) {
    if (r == 0) return {times(w, '0'), 1};
    if (r == 1) return {w, 2};
    return {times(w, '2'), 1};
  }
  if (r == 0) return {times(w, '1'), 2};
  if (r == 1) return {w, 1};
  return {w, 0};
}

// Shortest r-word taking (Φ,0) to (Φ^{s_i},0).
Word derive_source_word(char s) {
  std::map<Symbolic, Word> seen{{{"", 0}, {}}};
  std::deque<Symbolic> queue{{"", 0}};
  while (!queue.empty()) {
    auto f = queue.front();
    queue.pop_front();
    if (f == Symbolic{std::string(1, s), 0}) return seen[f];
    if (seen[f].size() >= 7) continue;
    for (int r = 0; r < 3; ++r) {
      auto g = truncation_step(f, r);
      if (seen.count(g)) continue;
      auto w = seen[f];
      w.push_back(static_cast<Colour>(r));
      seen[g] = w;
      queue.push_back(g);
    }
  }
  return {};
}

}  // namespace

TEST_CASE("dual") {
  const auto c = cube();
  CHECK(dual(dual(c)) == c);
  CHECK(same(dual(c), octahedron()));
  CHECK(same(dual(tetrahedron()), tetrahedron()));
  for (int n = 1; n <= 6; ++n) CHECK(same(dual(dihedron(n)), hosohedron(n)));
}

TEST_CASE("source words follow from the truncation adjacencies") {
  CHECK(derive_source_word('0') == kTruncation.source_words[0]);
  CHECK(derive_source_word('1') == kTruncation.source_words[1]);
  CHECK(derive_source_word('2') == kTruncation.source_words[2]);
  CHECK(kTruncation.source_words[0] == Word{2, 1, 0, 1, 2});
}

TEST_CASE("truncate") {
  const auto c = cube();
  auto tr = truncate(c);
  CHECK(tr.map.size() == 144);
  auto cells = cell_counts(tr.map);
  CHECK(cells.vertices == 24);
  CHECK(cells.edges == 36);
  CHECK(cells.faces == 14);
  CHECK(tr.tripartition.size() == 3);
  CHECK(same(quotient(tr.map, tr.tripartition), named_type_graph("3^0")));
  for (Point x = 0; x < tr.map.size(); ++x) {
    const auto& o = tr.origin[x];
    CHECK(o.source < c.size());
    CHECK(x == 3 * o.source + static_cast<Point>(o.tag));
  }
  CHECK(flag_orbit_partition(truncate(octahedron()).map).size() == 3);
}

TEST_CASE("truncated dihedron and hosohedron") {
  // Tr({4,2}) is the octagonal-faced 4-prism dual; Tr({2,4}) is the cube.
  CHECK(same(truncate(hosohedron(4)).map, cube()));
  CHECK_FALSE(same(truncate(dihedron(4)).map, cube()));
  CHECK(same(leapfrog(hosohedron(4)), truncate(dihedron(4)).map));
}

TEST_CASE("leapfrog and subdivision") {
  CHECK(same(leapfrog(octahedron()), truncate(cube()).map));
  auto s = subdivide2d(cube());
  CHECK(s.size() == 144);
  CHECK(cell_counts(s).faces == 24);
  const auto faces = orbits(s, {0, 1});
  for (const auto& cls : faces.classes()) CHECK(cls.size() == 6);
  CHECK(same(subdivide2d(hosohedron(4)), octahedron()));
}

TEST_CASE("operation properties on small maps") {
  for (const auto& m : small_maps()) {
    auto tr = truncate(m);
    const auto& t = tr.map;
    CHECK(t.size() == 3 * m.size());
    for (Point x = 0; x < t.size(); ++x) {
      CHECK(apply_word(t, x, Word{0, 2}) == apply_word(t, x, Word{2, 0}));
      CHECK(apply_word(t, x, Word{1, 2, 1, 2, 1, 2}) == x);
    }
    const auto tv = orbits(t, {1, 2});
    for (const auto& cls : tv.classes()) CHECK(cls.size() == 6);
    auto before = cell_counts(m), after = cell_counts(t);
    CHECK(after.vertices == 2 * before.edges);
    CHECK(after.edges == 3 * before.edges);
    CHECK(after.faces == before.vertices + before.faces);

    auto le = leapfrog(m);
    CHECK(same(le, truncate(dual(m)).map));
    const auto lv = orbits(le, {1, 2});
    for (const auto& cls : lv.classes()) CHECK(cls.size() == 6);

    const int chi = euler_characteristic(m);
    CHECK(euler_characteristic(dual(m)) == chi);
    CHECK(euler_characteristic(t) == chi);
    CHECK(euler_characteristic(le) == chi);
    CHECK(euler_characteristic(subdivide2d(m)) == chi);

    auto back = recognize_truncation(t);
    REQUIRE(back);
    CHECK(same(truncate(back->source).map, t));
  }
}

TEST_CASE("recognize truncation") {
  auto tr = truncate(cube());
  auto back = recognize_truncation(tr.map);
  REQUIRE(back);
  CHECK(same(back->source, cube()));

  auto from_cube = recognize_truncation(cube());
  REQUIRE(from_cube);
  CHECK(same(from_cube->source, hosohedron(4)));
  CHECK_FALSE(recognize_truncation(tetrahedron()).has_value());
  CHECK_FALSE(recognize_truncation(octahedron()).has_value());
}

TEST_CASE("type graph expansion") {
  const auto one = InvolutionSystem::identity(1);
  CHECK(same(expand_type_graph_truncation(one), named_type_graph("3^0")));
  CHECK(same(expand_type_graph_leapfrog(one), named_type_graph("3^0")));

  std::set<CanonicalKey> six;
  for (const auto& g : enumerate_type_graphs(2)) six.insert(canonical_key(expand_type_graph_truncation(g)));
  CHECK(six.size() == 7);

  CHECK(type_label(expand_type_graph_truncation(named_type_graph("3^0"))) == "9_A");
  CHECK(type_label(expand_type_graph_truncation(named_type_graph("3^2"))) == "9_B");
  CHECK(type_label(expand_type_graph_truncation(named_type_graph("3^02"))) == "9_Cd");
  CHECK(type_label(expand_type_graph_leapfrog(named_type_graph("3^0"))) == "9_B");

  for (const auto& g : enumerate_type_graphs(4))
    CHECK(same(expand_type_graph_leapfrog(g), expand_type_graph_truncation(dual(g))));
}

TEST_CASE("expansion commutes with realization") {
  for (const auto& m : small_maps()) {
    const auto t = symmetry_type_graph(m).graph;
    const auto tt = symmetry_type_graph(truncate(m).map).graph;
    if (tt.size() == 3 * t.size()) CHECK(same(tt, expand_type_graph_truncation(t)));
  }
}

TEST_CASE("admissibility shapes") {
  // Quotients of the alternating hexagon and square.
  CHECK(hexagon_quotients().size() == 4);
  CHECK(square_quotients().size() == 5);
  std::multiset<std::size_t> sizes;
  for (const auto& q : hexagon_quotients()) sizes.insert(q.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3, 6});

  CHECK(is_truncation_admissible(named_type_graph("3^0")));
  CHECK(is_truncation_admissible(named_type_graph("2")));
  CHECK_FALSE(is_truncation_admissible(named_type_graph("2_2")));
  CHECK_THROWS_AS(assemble_source_type(named_type_graph("2_2")), InadmissibleTypeGraphError);
}

TEST_CASE("assembly") {
  auto three = assemble_source_type(named_type_graph("3^0"));
  std::vector<std::string> fold_one;
  for (const auto& c : three)
    if (c.fold == 1) fold_one.push_back(type_label(c.source));
  CHECK(fold_one == std::vector<std::string>{"1"});

  auto five = assemble_source_type(named_type_graph("5_Bd"));
  REQUIRE(five.size() == 1);
  CHECK(five[0].fold == 3);
  CHECK(five[0].source.size() == 5);

  std::size_t pairs = 0, self = 0;
  for (const auto& g : enumerate_admissible(4))
    for (const auto& c : assemble_source_type(g))
      if (c.fold == 3) {
        ++pairs;
        self += same(c.source, g);
      }
  CHECK(pairs == 3);
  CHECK(self == 1);
}

TEST_CASE("assembled sources expand onto their images") {
  for (std::size_t k : {3, 4, 5, 6, 7}) {
    for (const auto& g : enumerate_admissible(k))
      for (const auto& c : assemble_source_type(g)) {
        CHECK(validate(c.source, Strictness::relaxed).empty());
        CHECK(validate(c.product.transitions, Strictness::relaxed).empty());
        const auto e = expand_type_graph_truncation(c.source);
        bool onto = false;
        for (Point y = 0; y < g.size() && !onto; ++y)
          onto = extend_morphism(e, g, 0, y).has_value();
        CHECK(onto);
      }
  }
}
