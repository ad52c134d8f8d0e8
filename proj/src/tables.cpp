#include "mapkit/tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "mapkit/errors.hpp"
#include "mapkit/operations.hpp"
#include "mapkit/parallel.hpp"
#include "mapkit/symmetry.hpp"

namespace mapkit {

std::string to_string(OrbitRelation relation) {
  switch (relation) {
    case OrbitRelation::equal:
      return "k";
    case OrbitRelation::three_halves:
      return "3k/2";
    case OrbitRelation::triple:
      return "3k";
  }
  return "";
}

std::string to_string(TableOperation op) {
  return op == TableOperation::truncation ? "truncation" : "leapfrog";
}

bool RuleSet::covers(std::size_t k) const {
  return std::find(k_values.begin(), k_values.end(), k) != k_values.end();
}

std::optional<std::size_t> RuleSet::find(const CanonicalKey& source, const CanonicalKey& image,
                                         OrbitRelation relation) const {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const auto& r = rules[i];
    if (r.orbit_relation == relation && r.source_key == source && r.image_key == image) return i;
  }
  return std::nullopt;
}

bool RuleSet::checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

namespace {

const ExpansionScheme& scheme_of(TableOperation op) {
  return op == TableOperation::truncation ? kTruncation : kLeapfrog;
}

std::size_t fold_of(OrbitRelation relation) {
  switch (relation) {
    case OrbitRelation::equal:
      return 3;
    case OrbitRelation::three_halves:
      return 2;
    case OrbitRelation::triple:
      return 1;
  }
  return 0;
}

std::optional<OrbitRelation> relation_of(std::size_t k, std::size_t image_k) {
  if (image_k == k) return OrbitRelation::equal;
  if (2 * image_k == 3 * k) return OrbitRelation::three_halves;
  if (image_k == 3 * k) return OrbitRelation::triple;
  return std::nullopt;
}

enum class Quantity { pairs, sources, images };

struct Stated {
  std::size_t k;
  OrbitRelation relation;
  Quantity quantity;
  std::size_t expected;
};

// Cardinalities of the classification, per source size and orbit relation.
constexpr Stated kStated[] = {
    {1, OrbitRelation::equal, Quantity::pairs, 1},
    {2, OrbitRelation::equal, Quantity::pairs, 3},
    {2, OrbitRelation::three_halves, Quantity::pairs, 1},
    {3, OrbitRelation::equal, Quantity::pairs, 1},
    {4, OrbitRelation::equal, Quantity::pairs, 3},
    {4, OrbitRelation::three_halves, Quantity::sources, 4},
    {4, OrbitRelation::three_halves, Quantity::images, 6},
    {5, OrbitRelation::equal, Quantity::pairs, 1},
    {6, OrbitRelation::equal, Quantity::sources, 8},
    {6, OrbitRelation::equal, Quantity::images, 9},
    {6, OrbitRelation::three_halves, Quantity::pairs, 3},
    {7, OrbitRelation::equal, Quantity::pairs, 2},
    {9, OrbitRelation::equal, Quantity::pairs, 7},
};

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::pairs:
      return "pairs";
    case Quantity::sources:
      return "source types";
    case Quantity::images:
      return "image types";
  }
  return "";
}

std::string statement(TableOperation op, std::size_t k, OrbitRelation relation) {
  std::size_t image_k = relation == OrbitRelation::equal ? k
                        : relation == OrbitRelation::three_halves ? 3 * k / 2
                                                                  : 3 * k;
  return to_string(op) + " of " + std::to_string(k) + "-orbit maps with " +
         std::to_string(image_k) + " orbits";
}

PairRule make_rule(const InvolutionSystem& source, const InvolutionSystem& image,
                   OrbitRelation relation, TableOperation op) {
  PairRule r;
  r.source_key = canonical_key(source);
  r.image_key = canonical_key(image);
  r.source_k = source.size();
  r.image_k = image.size();
  r.orbit_relation = relation;
  r.provenance = statement(op, r.source_k, relation);
  r.name_aliases = {type_label(r.source_key), type_label(r.image_key)};
  return r;
}

}  // namespace

RuleSet derive_rules(const std::vector<std::size_t>& k_values, TableOperation op,
                     CheckPolicy policy) {
  RuleSet set;
  set.operation = op;
  set.k_values = k_values;
  std::sort(set.k_values.begin(), set.k_values.end());
  set.k_values.erase(std::unique(set.k_values.begin(), set.k_values.end()), set.k_values.end());
  const auto& scheme = scheme_of(op);

  for (std::size_t k : set.k_values) {
    for (const auto& g : enumerate_admissible(k))
      for (const auto& cand : assemble_source_type(g, scheme))
        if (cand.fold == 3) set.rules.push_back(make_rule(cand.source, g, OrbitRelation::equal, op));
    if (k % 2 == 0)
      for (const auto& g : enumerate_admissible(3 * k / 2))
        for (const auto& cand : assemble_source_type(g, scheme))
          if (cand.fold == 2)
            set.rules.push_back(make_rule(cand.source, g, OrbitRelation::three_halves, op));
    for (const auto& g : enumerate_type_graphs(k))
      set.rules.push_back(make_rule(g, canonical_form(expand(g, scheme)).system,
                                    OrbitRelation::triple, op));
  }
  std::sort(set.rules.begin(), set.rules.end(), [](const PairRule& a, const PairRule& b) {
    return std::tie(a.source_k, a.orbit_relation, a.source_key, a.image_key) <
           std::tie(b.source_k, b.orbit_relation, b.source_key, b.image_key);
  });

  for (const auto& s : kStated) {
    if (!set.covers(s.k)) continue;
    std::set<CanonicalKey> sources, images;
    std::size_t pairs = 0;
    for (const auto& r : set.rules) {
      if (r.source_k != s.k || r.orbit_relation != s.relation) continue;
      ++pairs;
      sources.insert(r.source_key);
      images.insert(r.image_key);
    }
    std::size_t actual = s.quantity == Quantity::pairs     ? pairs
                         : s.quantity == Quantity::sources ? sources.size()
                                                           : images.size();
    set.checks.push_back(
        {statement(op, s.k, s.relation), quantity_name(s.quantity), s.expected, actual});
  }

  if (policy == CheckPolicy::enforce)
    for (const auto& c : set.checks)
      if (!c.passed())
        throw VerificationError(c.statement + ": expected " + std::to_string(c.expected) + " " +
                                c.quantity + ", derived " + std::to_string(c.actual));
  return set;
}

std::vector<std::string> dual_rule_mismatches(const RuleSet& truncation, const RuleSet& leapfrog) {
  using Entry = std::tuple<CanonicalKey, CanonicalKey, OrbitRelation>;
  std::set<Entry> from_truncation, from_leapfrog;
  for (const auto& r : truncation.rules)
    from_truncation.emplace(canonical_key(dual(system_from_key(r.source_key))), r.image_key,
                            r.orbit_relation);
  for (const auto& r : leapfrog.rules)
    from_leapfrog.emplace(r.source_key, r.image_key, r.orbit_relation);

  std::vector<std::string> out;
  auto describe = [](const Entry& e) {
    return type_label(std::get<0>(e)) + " -> " + type_label(std::get<1>(e)) + " (" +
           to_string(std::get<2>(e)) + ")";
  };
  for (const auto& e : from_leapfrog)
    if (!from_truncation.count(e)) out.push_back("leapfrog only: " + describe(e));
  for (const auto& e : from_truncation)
    if (!from_leapfrog.count(e)) out.push_back("truncation only: " + describe(e));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct RecordOutcome {
  std::optional<std::size_t> truncation_rule;
  std::optional<std::size_t> leapfrog_rule;
  bool beyond = false;
  std::vector<std::string> violations;
};

std::string record_name(const CensusRecord& r) {
  std::string name = std::to_string(r.n_flags) + " flags #" + r.key.hex().substr(0, 12);
  if (!r.labels.empty()) name += " (" + r.labels.front() + ")";
  return name;
}

// Whether (source, image) is a rule of the operation, by direct assembly.
bool rule_holds(const CanonicalKey& source, const CanonicalKey& image, OrbitRelation relation,
                TableOperation op) {
  const auto& scheme = scheme_of(op);
  if (relation == OrbitRelation::triple)
    return canonical_key(expand(system_from_key(source), scheme)) == image;
  const auto graph = system_from_key(image);
  if (!is_truncation_admissible(graph)) return false;
  for (const auto& cand : assemble_source_type(graph, scheme))
    if (cand.fold == fold_of(relation) && canonical_key(cand.source) == source) return true;
  return false;
}

void check_image(const CensusRecord& r, std::size_t image_k, const CanonicalKey& image,
                 const RuleSet& rules, std::optional<std::size_t>& matched, RecordOutcome& out) {
  const std::string what = to_string(rules.operation);
  auto relation = relation_of(r.k, image_k);
  if (!relation) {
    out.violations.push_back(record_name(r) + ": " + what + " has " + std::to_string(image_k) +
                             " orbits for k=" + std::to_string(r.k));
    return;
  }
  if (rules.covers(r.k)) {
    matched = rules.find(r.type_key, image, *relation);
    if (!matched)
      out.violations.push_back(record_name(r) + ": no " + what + " rule " +
                               type_label(r.type_key) + " -> " + type_label(image));
    return;
  }
  out.beyond = true;
  if (!rule_holds(r.type_key, image, *relation, rules.operation))
    out.violations.push_back(record_name(r) + ": " + what + " type " + type_label(image) +
                             " does not assemble to " + type_label(r.type_key));
}

}  // namespace

CensusReport verify_census(const std::vector<CensusRecord>& records, const RuleSet& truncation,
                           const RuleSet& leapfrog) {
  CensusReport report;
  report.records = records.size();
  report.truncation_matches.assign(truncation.rules.size(), 0);
  report.leapfrog_matches.assign(leapfrog.rules.size(), 0);

  std::map<std::pair<std::size_t, CanonicalKey>, std::size_t> index;
  for (std::size_t i = 0; i < records.size(); ++i) index[{records[i].n_flags, records[i].key}] = i;

  std::vector<RecordOutcome> outcomes(records.size());
  parallel_for(records.size(), [&](std::size_t i) {
    const auto& r = records[i];
    auto& out = outcomes[i];
    check_image(r, r.tr_k, r.tr_type_key, truncation, out.truncation_rule, out);
    check_image(r, r.le_k, r.le_type_key, leapfrog, out.leapfrog_rule, out);

    const FlagMap dual_map(dual(system_from_key(r.key)));
    const auto dual_key = canonical_key(dual_map);
    CanonicalKey expected;
    if (auto it = index.find({r.n_flags, dual_key}); it != index.end())
      expected = records[it->second].tr_type_key;
    else
      expected = canonical_key(symmetry_type_graph(truncate(dual_map).map).graph);
    if (expected != r.le_type_key)
      out.violations.push_back(record_name(r) +
                               ": leapfrog type differs from the truncation type of the dual");
  });

  for (const auto& out : outcomes) {
    if (out.truncation_rule) ++report.truncation_matches[*out.truncation_rule];
    if (out.leapfrog_rule) ++report.leapfrog_matches[*out.leapfrog_rule];
    if (out.beyond) ++report.beyond_tables;
    report.violations.insert(report.violations.end(), out.violations.begin(),
                             out.violations.end());
  }
  return report;
}

std::vector<CardinalityCheck> count_checklist() {
  std::vector<CardinalityCheck> out;
  auto all = [](std::size_t k) { return enumerate_type_graphs(k).size(); };
  auto admissible = [](std::size_t k) { return enumerate_admissible(k).size(); };
  out.push_back({"type graphs with 2 vertices", "graphs", 7, all(2)});
  out.push_back({"type graphs with 4 vertices", "graphs", 22, all(4)});
  out.push_back({"type graphs with 5 vertices", "graphs", 13, all(5)});
  out.push_back({"admissible type graphs with 4 vertices", "graphs", 3, admissible(4)});
  out.push_back({"admissible type graphs with 5 vertices", "graphs", 1, admissible(5)});
  out.push_back({"admissible type graphs with 6 vertices", "graphs", 16, admissible(6)});
  out.push_back({"admissible type graphs with 7 vertices", "graphs", 2, admissible(7)});
  out.push_back({"admissible type graphs with 9 vertices", "graphs", 10, admissible(9)});
  out.push_back({"admissible type graphs with at most 3 vertices", "graphs", 6,
                 admissible(1) + admissible(2) + admissible(3)});
  return out;
}

bool VerificationRun::ok() const {
  auto pass = [](const std::vector<CardinalityCheck>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.passed(); });
  };
  return truncation.checks_pass() && leapfrog.checks_pass() && dual_mismatches.empty() &&
         pass(counts) && (!census || census->ok());
}

VerificationRun run_verification(const std::vector<CensusRecord>* records,
                                 const std::vector<std::size_t>& k_values) {
  VerificationRun run;
  run.truncation = derive_rules(k_values, TableOperation::truncation, CheckPolicy::record);
  run.leapfrog = derive_rules(k_values, TableOperation::leapfrog, CheckPolicy::record);
  run.dual_mismatches = dual_rule_mismatches(run.truncation, run.leapfrog);
  run.counts = count_checklist();
  run.six_vertex_total = enumerate_type_graphs(6).size();
  if (records) run.census = verify_census(*records, run.truncation, run.leapfrog);
  return run;
}

// ---------------------------------------------------------------------------

namespace {

const char* status(bool ok) { return ok ? "PASS" : "FAIL"; }

void write_rules(std::ostringstream& os, const RuleSet& set,
                 const std::vector<std::size_t>* matches) {
  os << "\n== " << to_string(set.operation) << " rules (k, 3k/2) ==\n";
  for (std::size_t i = 0; i < set.rules.size(); ++i) {
    const auto& r = set.rules[i];
    if (r.orbit_relation == OrbitRelation::triple) continue;
    os << "  " << r.source_k << " -> " << r.image_k << "  " << r.name_aliases[0] << " -> "
       << r.name_aliases[1];
    if (matches) os << "  census " << (*matches)[i];
    os << "\n";
  }
  std::size_t triples = 0;
  for (const auto& r : set.rules) triples += r.orbit_relation == OrbitRelation::triple;
  os << "  " << triples << " expansion rules (3k)\n";
}

}  // namespace

std::string report_text(const VerificationRun& run) {
  std::ostringstream os;
  os << "mapkit table verification\n";
  os << "\n== counts ==\n";
  for (const auto& c : run.counts)
    os << "  [" << status(c.passed()) << "] " << c.statement << ": expected " << c.expected
       << ", derived " << c.actual << "\n";
  os << "  [INFO] type graphs with 6 vertices: " << run.six_vertex_total << "\n";

  for (const auto* set : {&run.truncation, &run.leapfrog}) {
    os << "\n== " << to_string(set->operation) << " cardinalities ==\n";
    for (const auto& c : set->checks)
      os << "  [" << status(c.passed()) << "] " << c.statement << ": expected " << c.expected
         << " " << c.quantity << ", derived " << c.actual << "\n";
  }
  os << "\n== leapfrog against dual truncation ==\n";
  os << "  [" << status(run.dual_mismatches.empty()) << "] " << run.dual_mismatches.size()
     << " mismatches\n";
  for (const auto& m : run.dual_mismatches) os << "  " << m << "\n";

  const CensusReport* census = run.census ? &*run.census : nullptr;
  write_rules(os, run.truncation, census ? &census->truncation_matches : nullptr);
  write_rules(os, run.leapfrog, census ? &census->leapfrog_matches : nullptr);

  if (census) {
    std::size_t unexercised = 0;
    for (std::size_t i = 0; i < run.truncation.rules.size(); ++i)
      unexercised += census->truncation_matches[i] == 0;
    os << "\n== census ==\n";
    os << "  records: " << census->records << "\n";
    os << "  records beyond the tables: " << census->beyond_tables << "\n";
    os << "  unexercised truncation rules: " << unexercised << "\n";
    os << "  [" << status(census->ok()) << "] violations: " << census->violations.size() << "\n";
    for (const auto& v : census->violations) os << "  " << v << "\n";
  }
  os << "\nresult: " << status(run.ok()) << "\n";
  return os.str();
}

std::string report_delimited(const VerificationRun& run) {
  std::ostringstream os;
  os << "section,item,expected,actual,status\n";
  for (const auto& c : run.counts)
    os << "count," << c.statement << "," << c.expected << "," << c.actual << ","
       << status(c.passed()) << "\n";
  os << "count,type graphs with 6 vertices,," << run.six_vertex_total << ",INFO\n";
  for (const auto* set : {&run.truncation, &run.leapfrog})
    for (const auto& c : set->checks)
      os << "cardinality," << c.statement << " (" << c.quantity << ")," << c.expected << ","
         << c.actual << "," << status(c.passed()) << "\n";
  os << "dual,leapfrog against dual truncation,0," << run.dual_mismatches.size() << ","
     << status(run.dual_mismatches.empty()) << "\n";
  for (const auto* set : {&run.truncation, &run.leapfrog}) {
    const std::vector<std::size_t>* matches = nullptr;
    if (run.census)
      matches = set == &run.truncation ? &run.census->truncation_matches
                                       : &run.census->leapfrog_matches;
    for (std::size_t i = 0; i < set->rules.size(); ++i) {
      const auto& r = set->rules[i];
      if (r.orbit_relation == OrbitRelation::triple) continue;
      os << "rule," << to_string(set->operation) << " " << r.name_aliases[0] << " -> "
         << r.name_aliases[1] << ",," << (matches ? std::to_string((*matches)[i]) : "")
         << ",INFO\n";
    }
  }
  if (run.census) {
    os << "census,records,," << run.census->records << ",INFO\n";
    os << "census,violations,0," << run.census->violations.size() << ","
       << status(run.census->ok()) << "\n";
  }
  return os.str();
}

}  // namespace mapkit
