// mapkit command-line tool.
//
// Inputs are cis files, rotation-system files ("rot" header), "-" for stdin,
// or "@name" for a builder map such as "@cube" or "@torus44(2,1)".

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

#include "mapkit/builders.hpp"
#include "mapkit/enumeration.hpp"
#include "mapkit/errors.hpp"
#include "mapkit/formats.hpp"
#include "mapkit/operations.hpp"
#include "mapkit/symmetry.hpp"
#include "mapkit/tables.hpp"

using namespace mapkit;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  return read_file(path);
}

bool is_rotation_text(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    if (word[0] == '#') {
      std::getline(in, word);
      continue;
    }
    return word == "rot";
  }
  return false;
}

InvolutionSystem load_system(const std::string& path) {
  if (!path.empty() && path[0] == '@') return build_named(path.substr(1)).system();
  const auto text = read_input(path);
  if (is_rotation_text(text)) return from_rotation_system(parse_rotation(text)).system();
  return parse_cis(text, false).system;
}

FlagMap load_map(const std::string& path) { return FlagMap(load_system(path)); }

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_file(out, text);
}

ColourSet parse_colours(const std::string& s) {
  ColourSet set;
  for (char ch : s) {
    if (ch < '0' || ch > '2') throw std::invalid_argument("colours are digits 0, 1, 2");
    set.insert(static_cast<Colour>(ch - '0'));
  }
  return set;
}

std::string orbit_lines(const OrbitPartition& p) {
  std::ostringstream os;
  const auto& classes = p.classes();
  for (const auto& cls : classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) os << (i ? " " : "") << cls[i] + 1;
    os << "\n";
  }
  return os.str();
}

const ExpansionScheme& scheme_named(const std::string& op) {
  return op == "le" ? kLeapfrog : kTruncation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial maps as flag systems: operations, symmetry types, enumeration"};
  app.require_subcommand(1);
  int status = kOk;

  std::string input, out;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "cis or rot file, '-' for stdin, '@name' for a builder")
        ->required();
  };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("-o,--out", out, "output file"); };

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check a system in strict or relaxed mode");
  add_input(validate_cmd);
  bool strict = false, relaxed = false;
  validate_cmd->add_flag("--strict", strict, "check as a map");
  validate_cmd->add_flag("--relaxed", relaxed, "check as a type graph");
  validate_cmd->callback([&] {
    Strictness mode = Strictness::relaxed;
    InvolutionSystem sys = InvolutionSystem::identity(1);
    if (!input.empty() && input[0] == '@') {
      sys = load_system(input);
      mode = Strictness::strict;
    } else {
      const auto text = read_input(input);
      if (is_rotation_text(text)) {
        sys = from_rotation_system(parse_rotation(text)).system();
        mode = Strictness::strict;
      } else {
        auto doc = read_cis(text);
        sys = doc.system;
        mode = doc.mode;
      }
    }
    if (strict) mode = Strictness::strict;
    if (relaxed) mode = Strictness::relaxed;
    const auto report = validate(sys, mode);
    std::cout << (mode == Strictness::strict ? "strict" : "relaxed") << ": "
              << (report.empty() ? "valid" : "invalid") << "\n";
    for (const auto& v : report) std::cout << "  " << describe(v) << "\n";
    if (!report.empty()) status = kFailure;
  });

  // info
  auto* info_cmd = app.add_subcommand("info", "cells, Euler characteristic and symmetry of a map");
  add_input(info_cmd);
  info_cmd->callback([&] {
    const auto map = load_map(input);
    const auto cells = cell_counts(map);
    const auto type = symmetry_type_graph(map);
    std::cout << "flags " << map.size() << "\n"
              << "V " << cells.vertices << "\nE " << cells.edges << "\nF " << cells.faces << "\n"
              << "chi " << euler_characteristic(map) << "\n"
              << "orientable " << (is_orientable(map) ? "yes" : "no") << "\n"
              << "automorphisms " << automorphism_group(map).size() << "\n"
              << "k " << type.vertex_count() << "\n"
              << "type " << type_label(type.graph) << "\n"
              << "key " << canonical_key(map).hex() << "\n";
  });

  // type
  auto* type_cmd = app.add_subcommand("type", "symmetry type graph of a map");
  add_input(type_cmd);
  add_out(type_cmd);
  type_cmd->callback([&] {
    const auto type = symmetry_type_graph(load_map(input));
    std::cout << "# " << type_label(type.graph) << "\n";
    emit(out, serialize_cis(type.graph, Strictness::relaxed));
  });

  // orbits
  auto* orbits_cmd = app.add_subcommand(
      "orbits", "flag orbits under automorphisms, or orbits of a colour subgroup");
  add_input(orbits_cmd);
  std::string colours;
  orbits_cmd->add_option("-c,--colours", colours, "colour digits, e.g. 12 for vertices");
  orbits_cmd->callback([&] {
    if (!colours.empty()) {
      std::cout << orbit_lines(orbits(load_system(input), parse_colours(colours)));
    } else {
      std::cout << orbit_lines(flag_orbit_partition(load_map(input)));
    }
  });

  // op
  auto* op_cmd = app.add_subcommand("op", "apply dual, truncate, leapfrog or subdivide");
  std::string op_name;
  op_cmd->add_option("operation", op_name, "dual|truncate|leapfrog|subdivide")
      ->required()
      ->check(CLI::IsMember({"dual", "truncate", "leapfrog", "subdivide"}));
  add_input(op_cmd);
  add_out(op_cmd);
  op_cmd->callback([&] {
    const auto map = load_map(input);
    FlagMap result = map;
    if (op_name == "dual")
      result = dual(map);
    else if (op_name == "truncate")
      result = truncate(map).map;
    else if (op_name == "leapfrog")
      result = leapfrog(map);
    else
      result = subdivide2d(map);
    emit(out, serialize_cis(result, Strictness::strict));
  });

  // recognize-truncation
  auto* recognize_cmd =
      app.add_subcommand("recognize-truncation", "recover M from a map isomorphic to Tr(M)");
  add_input(recognize_cmd);
  add_out(recognize_cmd);
  recognize_cmd->callback([&] {
    auto found = recognize_truncation(load_map(input));
    if (!found) {
      std::cout << "not a truncation\n";
      status = kFailure;
      return;
    }
    emit(out, serialize_cis(found->source, Strictness::strict));
  });

  // expand-type
  auto* expand_cmd = app.add_subcommand("expand-type", "type graph of Tr(M) or Le(M) from T(M)");
  add_input(expand_cmd);
  add_out(expand_cmd);
  std::string scheme = "tr";
  expand_cmd->add_option("--op", scheme, "tr or le")->check(CLI::IsMember({"tr", "le"}));
  expand_cmd->callback([&] {
    const auto g = load_system(input);
    auto report = validate(g, Strictness::relaxed);
    if (!report.empty()) throw InvalidSystemError(report);
    const auto expanded = expand(g, scheme_named(scheme));
    std::cout << "# " << type_label(expanded) << "\n";
    emit(out, serialize_cis(expanded, Strictness::relaxed));
  });

  // assemble-type
  auto* assemble_cmd =
      app.add_subcommand("assemble-type", "candidate types of M whose image has type T");
  add_input(assemble_cmd);
  assemble_cmd->add_option("--op", scheme, "tr or le")->check(CLI::IsMember({"tr", "le"}));
  bool show_cis = false;
  assemble_cmd->add_flag("--cis", show_cis, "print each candidate as cis");
  assemble_cmd->callback([&] {
    const auto g = load_system(input);
    auto report = validate(g, Strictness::relaxed);
    if (!report.empty()) throw InvalidSystemError(report);
    const auto candidates = assemble_source_type(g, scheme_named(scheme));
    for (const auto& c : candidates) {
      std::cout << "fold " << c.fold << "  k=" << c.source.size() << "  "
                << type_label(c.source) << "  " << canonical_key(c.source).hex() << "\n";
      if (show_cis) std::cout << serialize_cis(c.source, Strictness::relaxed);
    }
    if (candidates.empty()) status = kFailure;
  });

  // enum-types
  auto* enum_types_cmd = app.add_subcommand("enum-types", "type graphs with k vertices");
  std::size_t k = 0;
  bool admissible = false;
  enum_types_cmd->add_option("-k,--k", k, "vertex count")->required();
  enum_types_cmd->add_flag("--admissible", admissible, "truncation-admissible only");
  enum_types_cmd->add_flag("--cis", show_cis, "print each graph as cis");
  enum_types_cmd->callback([&] {
    const auto graphs = admissible ? enumerate_admissible(k) : enumerate_type_graphs(k);
    std::cout << graphs.size() << " type graphs with " << k << " vertices"
              << (admissible ? " (admissible)" : "") << "\n";
    for (const auto& g : graphs) {
      std::cout << canonical_key(g).hex() << "  " << type_label(g) << "\n";
      if (show_cis) std::cout << serialize_cis(g, Strictness::relaxed);
    }
  });

  // enum-maps
  auto* enum_maps_cmd = app.add_subcommand("enum-maps", "maps with a given number of flags");
  std::size_t flags = 0;
  enum_maps_cmd->add_option("-n,--flags", flags, "flag count, a multiple of 4")->required();
  enum_maps_cmd->add_flag("--cis", show_cis, "print each map as cis");
  enum_maps_cmd->callback([&] {
    const auto maps = enumerate_maps(flags);
    std::cout << maps.size() << " maps with " << flags << " flags\n";
    for (const auto& m : maps) {
      std::cout << canonical_key(m).hex() << "\n";
      if (show_cis) std::cout << serialize_cis(m, Strictness::strict);
    }
  });

  // census
  auto* census_cmd = app.add_subcommand("census", "all maps up to a flag count, as CSV");
  std::size_t max_flags = 12;
  bool no_builders = false;
  census_cmd->add_option("-m,--max-flags", max_flags, "largest flag count");
  census_cmd->add_flag("--no-builders", no_builders, "leave out the builder maps");
  add_out(census_cmd);
  census_cmd->callback([&] { emit(out, census_csv(census(max_flags, !no_builders))); });

  // verify-tables
  auto* verify_cmd =
      app.add_subcommand("verify-tables", "derive the classification tables and check a census");
  std::size_t verify_flags = 16;
  std::string format = "text";
  verify_cmd->add_option("-m,--max-flags", verify_flags, "census size, 0 for no census");
  verify_cmd->add_option("-f,--format", format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  add_out(verify_cmd);
  verify_cmd->callback([&] {
    std::vector<CensusRecord> records;
    if (verify_flags > 0) records = census(verify_flags);
    const auto run = run_verification(verify_flags > 0 ? &records : nullptr);
    emit(out, format == "csv" ? report_delimited(run) : report_text(run));
    if (!run.ok()) status = kFailure;
  });

  // build
  auto* build_cmd = app.add_subcommand("build", "builder map as cis");
  std::string builder;
  build_cmd->add_option("name", builder, "e.g. cube, prism(5), torus44(2,1)")->required();
  add_out(build_cmd);
  build_cmd->callback([&] { emit(out, serialize_cis(build_named(builder), Strictness::strict)); });

  // export-dot
  auto* dot_cmd = app.add_subcommand("export-dot", "DOT drawing of a system");
  add_input(dot_cmd);
  add_out(dot_cmd);
  dot_cmd->callback([&] { emit(out, export_dot(load_system(input))); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const InvalidSystemError& e) {
    std::cerr << "mapkit: " << e.what() << "\n";
    return kFailure;
  } catch (const InadmissibleTypeGraphError& e) {
    std::cerr << "mapkit: " << e.what() << "\n";
    return kFailure;
  } catch (const VerificationError& e) {
    std::cerr << "mapkit: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "mapkit: " << e.what() << "\n";
    return kInputError;
  }
  return status;
}
