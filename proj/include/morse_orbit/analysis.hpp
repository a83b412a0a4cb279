#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morse_orbit/fusion.hpp"
#include "morse_orbit/homology.hpp"
#include "morse_orbit/matching.hpp"

namespace morse_orbit {

enum class Verdict { Pass, Fail, NotRun };

std::string_view to_string(Verdict v);

/// "all" | "above:<perms>[|<perms>...]" | "classes:<perms>[|<perms>...]",
/// where each <perms> is a ';'-separated generator list of one subgroup.
struct CollectionSpec {
  enum class Kind { All, Above, Classes };
  Kind kind = Kind::All;
  std::vector<std::vector<Permutation>> seeds;
};

CollectionSpec parse_collection_spec(std::string_view text, std::size_t degree);

/// Seeds of a spec as subgroups of the group.
std::vector<Subgroup> seed_subgroups(const FiniteGroup& group, const CollectionSpec& spec);

/// The G-collection a spec names. Throws NotClosed for a class list that is
/// not closed under p-overgroups.
Collection build_collection(std::shared_ptr<const FiniteGroup> group, unsigned prime, const CollectionSpec& spec);

/// The closed F-collection inside S a spec names.
std::vector<Subgroup> build_fusion_collection(const FusionSystem& fusion, const CollectionSpec& spec);

struct AnalysisOptions {
  std::string group_spec;
  unsigned prime = 0;
  std::string collection_spec = "all";
  bool fusion = false;
  bool timings = false;
  unsigned threads = 0;  // 0: all available
  std::size_t max_order = kDefaultMaxOrder;
};

struct AnalysisReport {
  std::string group_spec;
  std::size_t group_order = 0;
  std::size_t group_degree = 0;
  unsigned prime = 0;
  std::string collection_spec;
  std::size_t collection_members = 0;
  std::size_t collection_classes = 0;

  std::vector<std::size_t> cells_per_dim;
  std::vector<std::size_t> critical_per_dim;
  std::vector<std::size_t> redundant_per_dim;
  std::vector<std::size_t> collapsible_per_dim;
  std::optional<std::string> critical_cell;
  std::size_t digraph_vertices = 0;
  std::size_t digraph_edges = 0;

  Verdict matching = Verdict::NotRun;
  Verdict acyclic = Verdict::NotRun;
  Verdict height_monotone = Verdict::NotRun;
  Verdict height_ranking = Verdict::NotRun;
  Verdict single_critical = Verdict::NotRun;
  Verdict boundary_squared_zero = Verdict::NotRun;
  Verdict homology_trivial = Verdict::NotRun;
  Verdict euler = Verdict::NotRun;
  Verdict fusion = Verdict::NotRun;

  std::vector<HomologyGroup> homology;
  long long euler_characteristic = 0;
  std::optional<FusionComparison> fusion_comparison;
  std::vector<std::string> messages;
  std::vector<std::pair<std::string, double>> timings_ms;  // only when requested

  std::vector<std::pair<std::string, Verdict>> verdicts() const;
  /// No verdict is Fail.
  bool all_pass() const;
  std::string to_json(int indent = 2) const;
  std::string to_table() const;
  /// Homology block alone, as JSON or text.
  std::string homology_json(int indent = 2) const;
  std::string homology_table() const;
};

/// Everything computed for one (group, prime, collection) run.
struct Analysis {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const Collection> collection;
  std::shared_ptr<const OrbitComplex> complex;
  std::optional<MorseMatching> matching;
  std::optional<MatchingDigraph> digraph;
  AnalysisReport report;
};

/// Cells, matching, digraph, every verifier, homology and (optionally) the
/// fusion comparison. Parse and group-construction errors propagate; a
/// failed matching is recorded in the report.
Analysis run_analysis(const AnalysisOptions& options);

/// The fusion comparison alone.
AnalysisReport run_fusion_comparison(const AnalysisOptions& options);

}  // namespace morse_orbit
