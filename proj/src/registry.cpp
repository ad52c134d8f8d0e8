#include <algorithm>
#include <stdexcept>

#include "mapkit/builders.hpp"
#include "mapkit/enumeration.hpp"
#include "mapkit/operations.hpp"
#include "mapkit/symmetry.hpp"

namespace mapkit {

namespace {

// 2_I: I lists the colours that are semi-edges at both vertices.
std::string two_vertex_name(const InvolutionSystem& g) {
  std::string name = "2";
  std::string sub;
  for (Colour c = 0; c < kColours; ++c)
    if (g.is_semi_edge(c, 0)) sub += static_cast<char>('0' + c);
  return sub.empty() ? name : name + "_" + sub;
}

std::vector<InvolutionSystem> sources(const InvolutionSystem& image, std::size_t fold) {
  std::vector<InvolutionSystem> out;
  for (const auto& cand : assemble_source_type(image))
    if (cand.fold == fold) out.push_back(cand.source);
  return out;
}

InvolutionSystem only(std::vector<InvolutionSystem> v, const char* what) {
  if (v.size() != 1) throw std::logic_error(std::string("expected exactly one ") + what);
  return std::move(v.front());
}

std::size_t orbit_of_size(const InvolutionSystem& g, ColourSet colours, std::size_t size) {
  std::size_t count = 0;
  const auto parts = orbits(g, colours);
  for (const auto& cls : parts.classes())
    if (cls.size() == size) ++count;
  return count;
}

InvolutionSystem named_graph(const TypeRegistry& reg, const std::string& name) {
  return system_from_key(*reg.key_of(name));
}

}  // namespace

TypeRegistry build_standard_registry() {
  TypeRegistry reg;
  reg.pin("1", canonical_key(InvolutionSystem::identity(1)));
  for (const auto& g : enumerate_type_graphs(2)) reg.pin(two_vertex_name(g), canonical_key(g));

  // 3^0 is what the truncation tripartition of a regular map collapses to.
  auto tr = truncate(cube());
  const auto g30 = canonical_form(quotient(tr.map, tr.tripartition)).system;
  const auto g32 = canonical_form(dual(g30)).system;
  reg.pin("3^0", canonical_key(g30));
  reg.pin("3^2", canonical_key(g32));
  std::vector<InvolutionSystem> rest;
  for (const auto& g : enumerate_type_graphs(3)) {
    auto key = canonical_key(g);
    if (key != canonical_key(g30) && key != canonical_key(g32)) rest.push_back(g);
  }
  if (rest.size() != 1) throw std::logic_error("expected one more 3-vertex type graph");
  const auto g302 = rest.front();
  reg.pin("3^02", canonical_key(g302));

  // Admissible 4-vertex graphs: two face orbits picks 4_Dp; a <t1,t2>-orbit
  // of size 2 (Ψ and Ψ^{2,1} in one orbit) picks 4_Gd over 4_D.
  for (const auto& g : enumerate_admissible(4)) {
    auto key = canonical_key(g);
    if (two_factor_components(g, 0, 1) == 2)
      reg.pin("4_Dp", key);
    else if (orbit_of_size(g, {1, 2}, 2) > 0)
      reg.pin("4_Gd", key);
    else
      reg.pin("4_D", key);
  }

  auto five = enumerate_admissible(5);
  if (five.size() != 1) throw std::logic_error("expected one admissible 5-vertex type graph");
  reg.pin("5_Bd", canonical_key(five.front()));
  for (const auto& cand : assemble_source_type(five.front()))
    if (cand.fold == 3) reg.pin("5_Bp", canonical_key(cand.source));

  const auto k = [](const InvolutionSystem& g) { return canonical_key(g); };
  const auto g9a = expand_type_graph_truncation(g30);
  const auto g9b = expand_type_graph_truncation(g32);
  const auto g9c = expand_type_graph_truncation(g302);
  reg.pin("9_A", k(g9a));
  reg.pin("9_B", k(g9b));
  reg.pin("9_Cd", k(g9c));

  // Expansions of the 2-vertex types.
  const std::pair<const char*, const char*> expanded[] = {
      {"2", "6_Nd"},  {"2_0", "6_G"},   {"2_2", "6_Md"}, {"2_1", "6_Od"},
      {"2_01", "6_B"}, {"2_12", "6_Pd"}, {"2_02", "6_H"}};
  for (const auto& [from, to] : expanded)
    reg.pin(to, k(expand_type_graph_truncation(named_graph(reg, from))));

  // 4-vertex sources.
  reg.pin("4_E", k(only(sources(named_graph(reg, "4_D"), 3), "source of 4_D")));
  reg.pin("4_G", k(only(sources(named_graph(reg, "4_Gd"), 3), "source of 4_Gd")));
  reg.pin("4_G", k(only(sources(named_graph(reg, "6_Nd"), 2), "source of 6_Nd")));
  reg.pin("4_G", k(only(sources(named_graph(reg, "6_Md"), 2), "source of 6_Md")));
  reg.pin("4_H", k(only(sources(named_graph(reg, "6_G"), 2), "source of 6_G")));
  reg.pin("4_H", k(only(sources(named_graph(reg, "6_H"), 2), "source of 6_H")));
  for (const char* image : {"6_Pd", "6_Od"})
    reg.alias({"4_B", "4_C"}, k(only(sources(named_graph(reg, image), 2), "source")));

  // 6-vertex sources of 9-vertex images.
  reg.pin("6_D", k(only(sources(g9a, 2), "source of 9_A")));
  reg.pin("6_F", k(only(sources(g9b, 2), "source of 9_B")));
  const auto m_opp = only(sources(g9c, 2), "source of 9_Cd");
  reg.pin("6_Mopp", k(m_opp));

  // The nine admissible 6-vertex graphs that are not expansions, with the
  // face orbit structure listed for each.
  struct Image {
    InvolutionSystem graph;
    InvolutionSystem source;
    std::size_t vertex_orbits;
    std::vector<std::size_t> face_orbits;
  };
  std::vector<Image> images;
  for (const auto& g : enumerate_admissible(6)) {
    if (reg.find(k(g))) continue;
    auto faces = orbits(g, {0, 1});
    std::vector<std::size_t> sizes;
    for (const auto& cls : faces.classes()) sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    images.push_back({g, only(sources(g, 3), "source of a 6-vertex image"),
                      two_factor_components(g, 1, 2), std::move(sizes)});
  }
  if (images.size() != 9) throw std::logic_error("expected nine 6-vertex images");

  for (const auto& im : images) {
    const bool self = k(im.source) == k(im.graph);
    if (im.vertex_orbits == 3) {
      reg.pin("6_Fd", k(im.graph));
      reg.pin("6_Nopp", k(im.source));
    } else if (k(im.source) == k(m_opp)) {
      reg.pin("6_Ndp", k(im.graph));
    } else if (self && im.vertex_orbits == 2) {
      reg.pin("6_Hp", k(im.graph));
    } else if (self) {
      reg.alias({"6_Bp", "6_Gp"}, k(im.graph));
    }
  }
  for (const auto& im : images) {
    if (reg.find(k(im.graph))) continue;
    if (k(im.source) == *reg.key_of("6_Nopp")) {
      reg.pin("6_Mdp", k(im.graph));
    } else if (im.vertex_orbits == 1) {
      reg.pin("6_Odp", k(im.graph));
      reg.pin("6_Popp", k(im.source));
    } else if (im.face_orbits == std::vector<std::size_t>{1, 5}) {
      reg.pin("6_Jd", k(im.graph));
      reg.pin("6_Jp", k(im.source));
    } else if (im.face_orbits.size() == 1) {
      reg.pin("6_Pdp", k(im.graph));
      reg.pin("6_Oopp", k(im.source));
    }
  }
  for (const auto& im : images)
    if (!reg.find(k(im.graph))) throw std::logic_error("unnamed 6-vertex image");

  const std::vector<std::string> seven_images{"7_J", "7_Jp"}, seven_sources{"7_K", "7_L"};
  for (const auto& g : enumerate_admissible(7)) {
    reg.alias(seven_images, k(g));
    reg.alias(seven_sources, k(only(sources(g, 3), "source of a 7-vertex image")));
  }
  const std::vector<std::string> nine_images{"9_Ap", "9_Bp", "9_Dd", "9_E", "9_Ep", "9_F", "9_Fp"};
  const std::vector<std::string> nine_sources{"9_C",  "9_Gp", "9_Hp", "9_I",
                                              "9_J",  "9_K",  "9_L"};
  for (const auto& g : enumerate_admissible(9)) {
    if (reg.find(k(g))) continue;
    reg.alias(nine_images, k(g));
    for (const auto& s : sources(g, 3)) reg.alias(nine_sources, k(s));
  }
  return reg;
}

}  // namespace mapkit
