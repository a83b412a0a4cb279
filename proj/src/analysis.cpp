#include "morse_orbit/analysis.hpp"

#include <chrono>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "morse_orbit/group_spec.hpp"

namespace morse_orbit {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotRun: return "not-run";
  }
  return "?";
}

CollectionSpec parse_collection_spec(std::string_view text, std::size_t degree) {
  CollectionSpec spec;
  if (text == "all") return spec;
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "expected 'all', 'above:...' or 'classes:...'");
  auto head = text.substr(0, colon);
  if (head == "above") spec.kind = CollectionSpec::Kind::Above;
  else if (head == "classes") spec.kind = CollectionSpec::Kind::Classes;
  else throw ParseError(0, "unknown collection kind '" + std::string(head) + "'");

  std::size_t start = colon + 1;
  while (true) {
    std::size_t bar = text.find('|', start);
    auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    try {
      spec.seeds.push_back(parse_permutation_list(piece, degree));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "bad generator list '" + std::string(piece) + "'");
    }
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return spec;
}

std::vector<Subgroup> seed_subgroups(const FiniteGroup& group, const CollectionSpec& spec) {
  std::vector<Subgroup> out;
  for (const auto& perms : spec.seeds) {
    std::vector<Element> gens;
    for (const auto& p : perms) gens.push_back(group.index_of(p));
    out.push_back(subgroup_closure(group, gens));
  }
  return out;
}

Collection build_collection(std::shared_ptr<const FiniteGroup> group, unsigned prime, const CollectionSpec& spec) {
  switch (spec.kind) {
    case CollectionSpec::Kind::All:
      return all_p_subgroups(std::move(group), prime);
    case CollectionSpec::Kind::Above:
      return close_upward(group, prime, seed_subgroups(*group, spec));
    case CollectionSpec::Kind::Classes: {
      auto seeds = seed_subgroups(*group, spec);
      std::set<Subgroup> members;
      for (const auto& s : seeds)
        for (Element g = 0; g < group->order(); ++g) members.insert(conjugate_subgroup(*group, s, g));
      Collection c(group, prime, std::vector<Subgroup>(members.begin(), members.end()));
      auto violations = c.closure_violations();
      if (!violations.empty()) throw Error(ErrorCode::NotClosed, violations.front());
      return c;
    }
  }
  throw Error(ErrorCode::InternalError, "unknown collection kind");
}

std::vector<Subgroup> build_fusion_collection(const FusionSystem& fusion, const CollectionSpec& spec) {
  switch (spec.kind) {
    case CollectionSpec::Kind::All:
      return fusion.subgroups();
    case CollectionSpec::Kind::Above:
      return closed_f_collection_above(fusion, seed_subgroups(fusion.group(), spec));
    case CollectionSpec::Kind::Classes: {
      const auto& g = fusion.group();
      std::vector<Subgroup> out;
      auto seeds = seed_subgroups(g, spec);
      for (const auto& q : fusion.subgroups())
        for (const auto& s : seeds) {
          bool conjugate = false;
          for (Element x = 0; x < g.order() && !conjugate; ++x) conjugate = conjugate_subgroup(g, s, x) == q;
          if (conjugate) {
            out.push_back(q);
            break;
          }
        }
      return out;
    }
  }
  throw Error(ErrorCode::InternalError, "unknown collection kind");
}

// ---------------------------------------------------------------------------
// Report

std::vector<std::pair<std::string, Verdict>> AnalysisReport::verdicts() const {
  return {{"matching", matching},
          {"acyclic", acyclic},
          {"height_monotone", height_monotone},
          {"height_ranking", height_ranking},
          {"single_critical", single_critical},
          {"boundary_squared_zero", boundary_squared_zero},
          {"homology_trivial", homology_trivial},
          {"euler", euler},
          {"fusion", fusion}};
}

bool AnalysisReport::all_pass() const {
  for (const auto& [name, v] : verdicts())
    if (v == Verdict::Fail) return false;
  return true;
}

namespace {

ordered_json factor_json(const BigInt& f) {
  if (f <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(f);
  return f.str();
}

ordered_json homology_block(const std::vector<HomologyGroup>& homology) {
  ordered_json out = ordered_json::array();
  for (const auto& h : homology) {
    ordered_json torsion = ordered_json::array();
    for (const auto& t : h.torsion) torsion.push_back(factor_json(t));
    out.push_back({{"dim", h.dim}, {"betti", h.betti}, {"torsion", torsion}});
  }
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::string AnalysisReport::to_json(int indent) const {
  ordered_json j;
  j["group"] = {{"spec", group_spec}, {"order", group_order}, {"degree", group_degree}};
  j["prime"] = prime;
  j["collection"] = {{"spec", collection_spec}, {"members", collection_members}, {"classes", collection_classes}};
  j["cells_per_dimension"] = cells_per_dim;
  j["classes_per_dimension"] = {
      {"critical", critical_per_dim}, {"redundant", redundant_per_dim}, {"collapsible", collapsible_per_dim}};
  j["critical_cell"] = critical_cell ? ordered_json(*critical_cell) : ordered_json(nullptr);
  j["digraph"] = {{"vertices", digraph_vertices}, {"edges", digraph_edges}};
  ordered_json v;
  for (const auto& [name, verdict] : verdicts()) v[name] = std::string(to_string(verdict));
  j["verdicts"] = v;
  j["homology"] = homology_block(homology);
  j["euler_characteristic"] = euler_characteristic;
  if (fusion_comparison) {
    j["fusion"] = {{"fusion_cells_per_dimension", fusion_comparison->fusion_counts},
                   {"orbit_cells_per_dimension", fusion_comparison->orbit_counts},
                   {"well_defined", fusion_comparison->well_defined},
                   {"bijective", fusion_comparison->bijective},
                   {"faces_commute", fusion_comparison->faces_commute}};
  } else {
    j["fusion"] = nullptr;
  }
  j["messages"] = messages;
  if (!timings_ms.empty()) {
    ordered_json t;
    for (const auto& [name, ms] : timings_ms) t[name] = ms;
    j["timings_ms"] = t;
  }
  j["status"] = all_pass() ? "pass" : "fail";
  return j.dump(indent);
}

std::string AnalysisReport::homology_json(int indent) const {
  ordered_json j;
  j["group"] = group_spec;
  j["prime"] = prime;
  j["collection"] = collection_spec;
  j["homology"] = homology_block(homology);
  j["euler_characteristic"] = euler_characteristic;
  return j.dump(indent);
}

std::string AnalysisReport::homology_table() const {
  std::ostringstream out;
  out << "dim  reduced homology\n";
  for (const auto& h : homology) out << h.dim << "    " << to_string(h) << "\n";
  out << "euler characteristic: " << euler_characteristic << "\n";
  return out.str();
}

std::string AnalysisReport::to_table() const {
  std::ostringstream out;
  out << "group        " << group_spec << " (order " << group_order << ", degree " << group_degree << ")\n";
  out << "prime        " << prime << "\n";
  out << "collection   " << collection_spec << " (" << collection_members << " subgroups, " << collection_classes
      << " classes)\n";
  out << "cells        " << join(cells_per_dim) << "\n";
  out << "  critical   " << join(critical_per_dim) << "\n";
  out << "  redundant  " << join(redundant_per_dim) << "\n";
  out << "  collapsible " << join(collapsible_per_dim) << "\n";
  out << "critical     " << (critical_cell ? *critical_cell : "-") << "\n";
  out << "digraph      " << digraph_vertices << " vertices, " << digraph_edges << " edges\n";
  out << "euler        " << euler_characteristic << "\n";
  out << "homology    ";
  for (const auto& h : homology) out << " H~" << h.dim << "=" << to_string(h);
  out << "\n";
  if (fusion_comparison) {
    out << "fusion       N(C)/F " << join(fusion_comparison->fusion_counts) << " | N(C^)/G "
        << join(fusion_comparison->orbit_counts) << "\n";
  }
  for (const auto& [name, v] : verdicts()) out << "  [" << to_string(v) << "] " << name << "\n";
  for (const auto& m : messages) out << "  note: " << m << "\n";
  for (const auto& [name, ms] : timings_ms) out << "  time " << name << ": " << ms << " ms\n";
  out << (all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Orchestration

namespace {

class Stopwatch {
 public:
  Stopwatch(AnalysisReport& report, bool enabled) : report_(report), enabled_(enabled) {}
  void lap(const std::string& name) {
    auto now = std::chrono::steady_clock::now();
    if (enabled_) report_.timings_ms.emplace_back(name, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  AnalysisReport& report_;
  bool enabled_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

Verdict verdict(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

void fill_fusion(AnalysisReport& report, std::shared_ptr<const FiniteGroup> group, const AnalysisOptions& options) {
  auto fusion = FusionSystem::of_group(std::move(group), options.prime);
  auto spec = parse_collection_spec(options.collection_spec, fusion.group().degree());
  auto members = build_fusion_collection(fusion, spec);
  report.fusion_comparison = compare_quotients(fusion, members, options.threads);
  report.fusion = verdict(report.fusion_comparison->ok());
  if (!report.fusion_comparison->ok()) report.messages.push_back("N(C)/F and N(C^)/G are not isomorphic");
}

}  // namespace

Analysis run_analysis(const AnalysisOptions& options) {
  Analysis a;
  auto& r = a.report;
  Stopwatch clock(r, options.timings);

  a.group = std::make_shared<const FiniteGroup>(parse_group_spec(options.group_spec, options.max_order));
  r.group_spec = options.group_spec;
  r.group_order = a.group->order();
  r.group_degree = a.group->degree();
  r.prime = options.prime;
  r.collection_spec = options.collection_spec;

  auto spec = parse_collection_spec(options.collection_spec, a.group->degree());
  a.collection = std::make_shared<const Collection>(build_collection(a.group, options.prime, spec));
  r.collection_members = a.collection->size();
  r.collection_classes = a.collection->classes().size();
  clock.lap("collection");

  a.complex = std::make_shared<const OrbitComplex>(a.collection, options.threads);
  r.cells_per_dim = a.complex->counts_by_dimension();
  clock.lap("cells");

  try {
    a.matching = build_matching(a.complex, options.threads);
    r.matching = Verdict::Pass;
  } catch (const MatchingInvalid& e) {
    r.matching = Verdict::Fail;
    r.messages.push_back(e.what());
  }
  clock.lap("matching");

  if (a.matching) {
    const auto& m = *a.matching;
    r.critical_per_dim = m.class_counts(CellClass::Critical);
    r.redundant_per_dim = m.class_counts(CellClass::Redundant);
    r.collapsible_per_dim = m.class_counts(CellClass::Collapsible);

    auto critical = verify_single_critical(m);
    r.single_critical = verdict(critical.ok);
    if (critical.critical) {
      const auto& rep = a.complex->cell(*critical.critical).representative;
      std::string text = "[";
      for (std::size_t i = 0; i < rep.size(); ++i) {
        if (i) text += " < ";
        text += describe_subgroup(*a.group, a.collection->member(rep[i]));
      }
      r.critical_cell = text + "]";
    }
    if (!critical.ok) r.messages.push_back(critical.message);

    a.digraph = build_digraph(m);
    r.digraph_vertices = a.digraph->vertices.size();
    r.digraph_edges = a.digraph->edges.size();
    auto acyclic = verify_acyclic(*a.digraph);
    r.acyclic = verdict(acyclic.acyclic);
    if (!acyclic.acyclic) r.messages.push_back("digraph has a cycle of length " + std::to_string(acyclic.cycle.size()));
    auto heights = verify_height_monotone(*a.digraph);
    r.height_monotone = verdict(heights.ok());
    if (!heights.ok())
      r.messages.push_back(std::to_string(heights.violations.size()) +
                           " edges change the height where the strict rule expects equality");
    r.height_ranking = verdict(heights.ranking_ok());
    if (!heights.ranking_ok())
      r.messages.push_back(std::to_string(heights.rank_violations.size()) + " edges lower the height");
    clock.lap("digraph");
  }

  auto chain_complex = boundary_matrices(*a.complex);
  r.boundary_squared_zero = verdict(boundary_squares_to_zero(chain_complex));
  r.homology = reduced_homology(chain_complex);
  bool trivial = true;
  for (const auto& h : r.homology) trivial = trivial && h.trivial();
  r.homology_trivial = verdict(trivial);
  for (std::size_t n = 0; n < r.cells_per_dim.size(); ++n)
    r.euler_characteristic += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(r.cells_per_dim[n]);
  if (a.matching) {
    auto euler = euler_and_morse_consistency(*a.matching, r.homology);
    r.euler = verdict(euler.ok());
    if (!euler.ok()) r.messages.push_back("euler characteristic or Morse counts inconsistent");
  } else {
    r.euler = verdict(r.euler_characteristic == 1);
  }
  clock.lap("homology");

  if (options.fusion) {
    fill_fusion(r, a.group, options);
    clock.lap("fusion");
  }
  return a;
}

AnalysisReport run_fusion_comparison(const AnalysisOptions& options) {
  AnalysisReport r;
  Stopwatch clock(r, options.timings);
  auto group = std::make_shared<const FiniteGroup>(parse_group_spec(options.group_spec, options.max_order));
  r.group_spec = options.group_spec;
  r.group_order = group->order();
  r.group_degree = group->degree();
  r.prime = options.prime;
  r.collection_spec = options.collection_spec;
  fill_fusion(r, group, options);
  clock.lap("fusion");
  return r;
}

}  // namespace morse_orbit
