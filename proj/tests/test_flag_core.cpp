#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mapkit/builders.hpp"
#include "mapkit/enumeration.hpp"
#include "mapkit/involution_system.hpp"
#include "mapkit/operations.hpp"
#include "oracles.hpp"

using namespace mapkit;

namespace {

bool has(const ValidationReport& r, ViolationKind kind) {
  for (const auto& v : r)
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("validate strict and relaxed") {
  const auto c = cube();
  CHECK(validate(c, Strictness::strict).empty());
  CHECK(oracle::is_strict_map(c));

  const auto one = InvolutionSystem::identity(1);
  CHECK(validate(one, Strictness::relaxed).empty());
  auto strict = validate(one, Strictness::strict);
  CHECK(has(strict, ViolationKind::fixed_point));
  CHECK(has(strict, ViolationKind::fixed_point_t0t2));
}

TEST_CASE("validate names each violation") {
  // t0 = (0 1), t2 = (1 2): t0 t2 has order 3.
  InvolutionSystem bad({std::vector<Point>{1, 0, 2, 3}, std::vector<Point>{0, 1, 3, 2},
                        std::vector<Point>{0, 2, 1, 3}});
  auto report = validate(bad, Strictness::relaxed);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == ViolationKind::four_cycle);

  InvolutionSystem not_inv({std::vector<Point>{1, 2, 0}, std::vector<Point>{0, 1, 2},
                            std::vector<Point>{0, 1, 2}});
  report = validate(not_inv, Strictness::relaxed);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == ViolationKind::not_involution);
  CHECK(report[0].colour == 0);

  InvolutionSystem split({std::vector<Point>{0, 1}, std::vector<Point>{0, 1},
                          std::vector<Point>{0, 1}});
  report = validate(split, Strictness::relaxed);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == ViolationKind::disconnected);
  CHECK(describe(report[0]) == "disconnected at point 2");

  CHECK_THROWS_AS(FlagMap(InvolutionSystem::identity(1)), InvalidSystemError);
  CHECK_THROWS_AS(InvolutionSystem({std::vector<Point>{1}, std::vector<Point>{0},
                                    std::vector<Point>{0}}),
                  std::invalid_argument);
}

TEST_CASE("orbits against union-find") {
  const auto c = cube();
  auto edges = orbits(c, {0, 2});
  CHECK(edges.size() == 12);
  for (const auto& cls : edges.classes()) CHECK(cls.size() == 4);
  CHECK(orbits(tetrahedron(), {1, 2}).size() == 4);

  for (const auto& m : {cube(), tetrahedron(), torus44(2, 1), prism(5), dihedron(3)})
    for (ColourSet s : {ColourSet{0, 1}, ColourSet{0, 2}, ColourSet{1, 2}, ColourSet::all(),
                        ColourSet{1}}) {
      const auto p = orbits(m, s);
      auto mine = p.classes();
      std::sort(mine.begin(), mine.end());
      CHECK(mine == oracle::union_find_orbits(m, s));
      for (Point x = 0; x < m.size(); ++x) {
        const auto& cls = p[p.class_of(x)];
        CHECK(std::find(cls.begin(), cls.end(), x) != cls.end());
      }
      for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i - 1].front() < p[i].front());
    }
  CHECK(orbits(cube(), ColourSet::all()).size() == 1);
}

TEST_CASE("euler characteristic and orientability") {
  CHECK(euler_characteristic(cube()) == 2);
  CHECK(euler_characteristic(torus44(2, 1)) == 0);
  CHECK(euler_characteristic(dihedron(4)) == 2);
  auto cells = cell_counts(torus44(2, 1));
  CHECK(cells.vertices == 5);
  CHECK(cells.edges == 10);
  CHECK(cells.faces == 5);
  CHECK(is_orientable(cube()));
  CHECK(is_orientable(torus44(2, 1)));
}

TEST_CASE("apply_word") {
  const auto c = cube();
  for (Point x = 0; x < c.size(); ++x) {
    CHECK(apply_word(c, x, Word{}) == x);
    CHECK(apply_word(c, x, Word{0, 2}) == apply_word(c, x, Word{2, 0}));
    for (Colour i = 0; i < kColours; ++i) CHECK(apply_word(c, x, Word{i, i}) == x);
    CHECK(apply_word(c, x, Word{1, 2, 1, 2, 1, 2}) == x);
    CHECK(apply_word(c, x, Word{1, 2}) != x);
  }
  CHECK(apply_word(c, 0, Word{0, 1}) == c(1, c(0, 0)));
}

TEST_CASE("canonical key") {
  const auto c = cube();
  for (unsigned seed = 1; seed <= 5; ++seed)
    CHECK(canonical_key(oracle::shuffled(c, seed)) == canonical_key(c));
  CHECK(canonical_key(c) != canonical_key(octahedron()));
  CHECK_FALSE(oracle::brute_isomorphic(c, octahedron()));
  CHECK(canonical_key(leapfrog(octahedron())) == canonical_key(truncate(c).map));

  auto form = canonical_form(oracle::shuffled(c, 9));
  CHECK(form.system == system_from_key(form.key));
  CHECK(CanonicalKey::from_hex(form.key.hex()) == form.key);
}

TEST_CASE("canonical key agrees with brute force up to 12 points") {
  // All type graphs on up to 4 points and all maps on 4, 8, 12 flags, each
  // with a shuffled copy.
  std::vector<InvolutionSystem> systems;
  for (std::size_t k = 1; k <= 4; ++k)
    for (auto& g : enumerate_type_graphs(k)) systems.push_back(g);
  for (std::size_t n : {4, 8}) {
    for (auto& m : enumerate_maps(n)) systems.push_back(m.system());
  }
  const auto twelve = enumerate_maps(12);
  for (std::size_t i = 0; i < twelve.size(); i += 4) systems.push_back(twelve[i].system());

  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto copy = oracle::shuffled(systems[i], static_cast<unsigned>(i));
    CHECK(canonical_key(copy) == canonical_key(systems[i]));
    CHECK(oracle::brute_isomorphic(copy, systems[i]));
  }
  // Distinct keys of the same size are never isomorphic.
  for (std::size_t i = 0; i < systems.size(); ++i)
    for (std::size_t j = i + 1; j < systems.size(); ++j) {
      if (systems[i].size() != systems[j].size()) continue;
      if (canonical_key(systems[i]) == canonical_key(systems[j])) continue;
      CHECK_FALSE(oracle::brute_isomorphic(systems[i], systems[j]));
    }
}

TEST_CASE("quotient") {
  const auto c = cube();
  std::vector<std::size_t> singletons(c.size());
  std::iota(singletons.begin(), singletons.end(), 0);
  CHECK(quotient(c, OrbitPartition::from_labels(singletons)) == c.system());

  std::vector<std::size_t> one(c.size(), 0);
  CHECK(quotient(c, OrbitPartition::from_labels(one)) == InvolutionSystem::identity(1));

  auto tr = truncate(c);
  auto g = quotient(tr.map, tr.tripartition);
  CHECK(g.size() == 3);
  CHECK(validate(g, Strictness::relaxed).empty());

  // Two classes that t0 splits.
  std::vector<std::size_t> labels(c.size(), 0);
  labels[0] = 1;
  CHECK_THROWS_AS(quotient(c, OrbitPartition::from_labels(labels)), IncompatiblePartitionError);
}

TEST_CASE("every map has a multiple of 4 flags") {
  for (auto& [name, m] : standard_builder_maps()) {
    CAPTURE(name);
    CHECK(m.size() % 4 == 0);
    CHECK(oracle::is_strict_map(m));
  }
}
