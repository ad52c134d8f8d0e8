#include <doctest.h>

#include "mapkit/builders.hpp"
#include "mapkit/errors.hpp"
#include "mapkit/formats.hpp"
#include "mapkit/symmetry.hpp"
#include "oracles.hpp"

using namespace mapkit;

namespace {

std::string data(const std::string& name) { return read_file(std::string(MAPKIT_TEST_DATA) + "/" + name); }

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_cis(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("cis round trip") {
  for (auto& [name, m] : standard_builder_maps()) {
    CAPTURE(name);
    auto text = serialize_cis(m);
    CHECK(text.rfind("cis " + std::to_string(m.size()) + " strict\n", 0) == 0);
    auto doc = parse_cis(text);
    CHECK(doc.mode == Strictness::strict);
    CHECK(canonical_key(doc.system) == canonical_key(m));
    CHECK(serialize_cis(doc.system) == text);
  }
  auto g = named_type_graph("3^0");
  auto text = serialize_cis(g);
  CHECK(text == "cis 3 relaxed\n0: 1 2 3\n1: 1 3 2\n2: 2 1 3\n");
  CHECK(parse_cis(text).system == g);

  auto raw = serialize_cis(oracle::shuffled(cube(), 3), Strictness::strict, false);
  CHECK(read_cis(raw).system == oracle::shuffled(cube(), 3));
}

TEST_CASE("cis errors") {
  CHECK(parse_error_line("") == 0);
  CHECK(parse_error_line("# comment\nmap 3\n") == 2);
  CHECK(parse_error_line("cis 2 relaxed\n0: 1 2\n1: 1 2\n") == 3);
  CHECK(parse_error_line("cis 2 relaxed\n0: 1 2\n1: 1 2 3\n2: 1 2\n") == 3);
  CHECK(parse_error_line("cis 2 relaxed\n0: 1 x\n1: 1 2\n2: 1 2\n") == 2);
  CHECK(parse_error_line("cis 2 relaxed\n0: 1 3\n1: 1 2\n2: 1 2\n") == 2);
  CHECK(parse_error_line("cis 2 loose\n") == 1);
  CHECK_THROWS_AS(parse_cis("cis 1 strict\n0: 1\n1: 1\n2: 1\n"), InvalidSystemError);
  CHECK_NOTHROW(parse_cis("cis 1 relaxed\n0: 1\n1: 1\n2: 1\n"));
  CHECK_THROWS_AS(parse_cis("cis 2 relaxed\n0: 1 2\n1: 1 2\n2: 1 2\n"), InvalidSystemError);
}

TEST_CASE("fixture files") {
  auto cube_doc = parse_cis(data("cube.cis"));
  CHECK(cube_doc.mode == Strictness::strict);
  CHECK(cube_doc.system.size() == 48);
  CHECK(canonical_key(cube_doc.system) == canonical_key(cube()));

  auto hemi = FlagMap(parse_cis(data("hemicube.cis")).system);
  CHECK(hemi.size() == 24);
  CHECK_FALSE(is_orientable(hemi));
  CHECK(euler_characteristic(hemi) == 1);
  auto cells = cell_counts(hemi);
  CHECK(cells.vertices == 4);
  CHECK(cells.edges == 6);
  CHECK(cells.faces == 3);
  CHECK(automorphism_group(hemi).size() == 24);
}

TEST_CASE("rotation systems") {
  auto loop = from_rotation_system(parse_rotation("rot\nv0: a a\n"));
  CHECK(loop.size() == 4);
  CHECK(euler_characteristic(loop) == 2);

  auto torus = from_rotation_system(parse_rotation("rot\nv0: a b a b\n"));
  CHECK(torus.size() == 8);
  CHECK(euler_characteristic(torus) == 0);

  // Bottom face 0123, top face 4567.
  const std::string cube_text =
      "rot\n"
      "v0: e01 e03 e04\n"
      "v1: e12 e01 e15\n"
      "v2: e23 e12 e26\n"
      "v3: e03 e23 e37\n"
      "v4: e04 e47 e45\n"
      "v5: e15 e45 e56\n"
      "v6: e26 e56 e67\n"
      "v7: e37 e67 e47\n";
  auto c = from_rotation_system(parse_rotation(cube_text));
  CHECK(c.size() == 48);
  CHECK(canonical_key(c) == canonical_key(cube()));

  CHECK_THROWS_AS(parse_rotation("v0: a a\n"), ParseError);
  CHECK_THROWS_AS(parse_rotation("rot\nv1: a a\n"), ParseError);
  CHECK_THROWS_AS(from_rotation_system(parse_rotation("rot\nv0: a b\n")), std::invalid_argument);
}

TEST_CASE("dot export") {
  CHECK(export_dot(InvolutionSystem::identity(1)) == data("one.dot"));
  CHECK(export_dot(named_type_graph("3^0")) == data("three_zero.dot"));
  DotOptions named;
  named.graph_name = "T";
  CHECK(export_dot(InvolutionSystem::identity(1), named).rfind("graph T {\n", 0) == 0);
}

TEST_CASE("census csv") {
  std::vector<CensusRecord> records{census_record(cube()), census_record(torus44(2, 1))};
  auto csv = census_csv(records);
  CHECK(csv.rfind(std::string(kCensusHeader) + "\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 3);
  CHECK(csv.find(",48,8,12,6,2,true,1,") != std::string::npos);
}

TEST_CASE("named builders") {
  CHECK(canonical_key(build_named("dihedron(4)")) == canonical_key(dihedron(4)));
  CHECK(canonical_key(build_named("torus44(2,1)")) == canonical_key(torus44(2, 1)));
  CHECK(build_named("cube").size() == 48);
  CHECK_THROWS_AS(build_named("cuboctahedron"), std::invalid_argument);
  CHECK_THROWS_AS(build_named("prism(2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(build_named("dihedron(0)"), std::invalid_argument);
}
