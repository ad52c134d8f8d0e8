#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mapkit/enumeration.hpp"
#include "mapkit/involution_system.hpp"

namespace mapkit {

enum class OrbitRelation { equal, three_halves, triple };
enum class TableOperation { truncation, leapfrog };

std::string to_string(OrbitRelation relation);
std::string to_string(TableOperation op);

/// A map of type `source_key` whose image has type `image_key`.
struct PairRule {
  CanonicalKey source_key;
  CanonicalKey image_key;
  std::size_t source_k = 0;
  std::size_t image_k = 0;
  OrbitRelation orbit_relation = OrbitRelation::equal;
  std::string provenance;
  std::vector<std::string> name_aliases;  // labels of source and image
};

/// One stated cardinality against the derived one.
struct CardinalityCheck {
  std::string statement;
  std::string quantity;
  std::size_t expected = 0;
  std::size_t actual = 0;
  bool passed() const { return expected == actual; }
};

struct RuleSet {
  TableOperation operation = TableOperation::truncation;
  std::vector<std::size_t> k_values;
  std::vector<PairRule> rules;  // sorted by (source_k, relation, source, image)
  std::vector<CardinalityCheck> checks;

  bool covers(std::size_t k) const;
  /// Index of the rule, if present.
  std::optional<std::size_t> find(const CanonicalKey& source, const CanonicalKey& image,
                                  OrbitRelation relation) const;
  bool checks_pass() const;
};

enum class CheckPolicy { enforce, record };

/// Rules for sources with k vertices, k in k_values: k->k and k->3k/2 rules
/// from assembling the admissible graphs with k and 3k/2 vertices, k->3k
/// rules from expanding every k-vertex graph. Stated cardinalities for
/// k in {1,...,7,9} become checks; with CheckPolicy::enforce a failed check
/// throws VerificationError naming the statement.
RuleSet derive_rules(const std::vector<std::size_t>& k_values,
                     TableOperation op = TableOperation::truncation,
                     CheckPolicy policy = CheckPolicy::enforce);

/// Rules of `leapfrog` that are not the rules of `truncation` with the source
/// replaced by its dual, and the other way round, as readable lines.
std::vector<std::string> dual_rule_mismatches(const RuleSet& truncation, const RuleSet& leapfrog);

struct CensusReport {
  std::size_t records = 0;
  std::vector<std::size_t> truncation_matches;  // per truncation rule
  std::vector<std::size_t> leapfrog_matches;    // per leapfrog rule
  std::size_t beyond_tables = 0;  // records with k outside the rule sets, checked by assembly
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every record: truncation orbit ratio in {1, 3/2, 3}, truncation
/// and leapfrog types matching a rule, and le_type_key equal to the
/// truncation type of the dual map.
CensusReport verify_census(const std::vector<CensusRecord>& records, const RuleSet& truncation,
                           const RuleSet& leapfrog);

/// Enumeration counts against the stated ones, in the order
/// 7, 22, 13, 3, 1, 16, 2, 10, 6.
std::vector<CardinalityCheck> count_checklist();

struct VerificationRun {
  RuleSet truncation;
  RuleSet leapfrog;
  std::vector<std::string> dual_mismatches;
  std::vector<CardinalityCheck> counts;
  std::size_t six_vertex_total = 0;
  std::optional<CensusReport> census;

  bool ok() const;
};

/// Default k_values: 1 to 7 and 9.
VerificationRun run_verification(const std::vector<CensusRecord>* records,
                                 const std::vector<std::size_t>& k_values = {1, 2, 3, 4, 5, 6, 7, 9});

std::string report_text(const VerificationRun& run);
/// Comma separated rows: section,item,expected,actual,status.
std::string report_delimited(const VerificationRun& run);

}  // namespace mapkit
