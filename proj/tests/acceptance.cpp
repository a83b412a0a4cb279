// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exits 1 when any criterion fails.

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "morse_orbit/analysis.hpp"
#include "morse_orbit/collections.hpp"
#include "morse_orbit/group_spec.hpp"

using namespace morse_orbit;

namespace {

constexpr double kCaseSeconds = 10.0;

struct Case {
  std::string group;
  unsigned prime;
  std::string collection = "all";
  std::string name() const {
    return group + " p=" + std::to_string(prime) + (collection == "all" ? "" : " " + collection);
  }
};

const std::vector<Case> kSuite{
    {"Sym(3)", 2}, {"Sym(3)", 3}, {"Sym(4)", 2},  {"Sym(4)", 3},  {"Sym(5)", 2},
    {"Sym(5)", 5}, {"Alt(5)", 2}, {"Alt(5)", 3},  {"Alt(5)", 5},  {"Dih(8)", 2},
    {"Q8", 2},     {"SL(2,3)", 2}, {"SL(2,3)", 3}, {"Cyc(2)xCyc(2)", 2},
};

struct Built {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const Collection> collection;
  std::shared_ptr<const OrbitComplex> complex;
  std::optional<MorseMatching> matching;
  std::string error;
  double seconds = 0;
};

Built build(const Case& c) {
  auto start = std::chrono::steady_clock::now();
  Built b;
  b.group = std::make_shared<const FiniteGroup>(parse_group_spec(c.group));
  auto spec = parse_collection_spec(c.collection, b.group->degree());
  b.collection = std::make_shared<const Collection>(build_collection(b.group, c.prime, spec));
  b.complex = std::make_shared<const OrbitComplex>(b.collection);
  try {
    b.matching = build_matching(b.complex);
  } catch (const MatchingInvalid& e) {
    b.error = e.what();
  }
  b.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return b;
}

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}
  void fail(const std::string& detail) {
    ok_ = false;
    details_.push_back(detail);
  }
  void note(const std::string& detail) { details_.push_back(detail); }
  bool report(int number) const {
    std::cout << (ok_ ? "PASS" : "FAIL") << "  criterion " << number << ": " << title_ << "\n";
    for (const auto& d : details_) std::cout << "      " << d << "\n";
    return ok_;
  }

 private:
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> details_;
};

// Pairing axioms, acyclicity and the single critical Sylow cell.
void check_matching(const Case& c, const Built& b, Criterion& out) {
  if (!b.matching) {
    out.fail(c.name() + ": matching invalid: " + b.error);
    return;
  }
  const auto& m = *b.matching;
  const auto& complex = *b.complex;
  std::size_t classified = 0;
  for (auto cls : {CellClass::Critical, CellClass::Redundant, CellClass::Collapsible})
    classified += m.cells_of(cls).size();
  if (classified != complex.total_cells()) out.fail(c.name() + ": classes do not partition the cells");

  std::set<CellId> images;
  for (auto tau : m.cells_of(CellClass::Redundant)) {
    const auto& rec = m.record(tau);
    if (!rec.partner) {
      out.fail(c.name() + ": redundant cell without partner");
      continue;
    }
    auto sigma = *rec.partner;
    if (sigma.dim != tau.dim + 1) out.fail(c.name() + ": dimension shift broken");
    if (m.record(sigma).cls != CellClass::Collapsible) out.fail(c.name() + ": c(tau) not collapsible");
    if (complex.face_of(sigma, rec.iota) != tau) out.fail(c.name() + ": tau != d_iota(c(tau))");
    if (!images.insert(sigma).second) out.fail(c.name() + ": c not injective");
  }
  if (images.size() != m.cells_of(CellClass::Collapsible).size()) out.fail(c.name() + ": c not surjective");

  auto acyclic = verify_acyclic(build_digraph(m));
  if (!acyclic.acyclic)
    out.fail(c.name() + ": digraph has a cycle of length " + std::to_string(acyclic.cycle.size()));
  auto critical = verify_single_critical(m);
  if (!critical.ok) out.fail(c.name() + ": " + critical.message);
  if (b.seconds > kCaseSeconds) out.fail(c.name() + ": took " + std::to_string(b.seconds) + " s");
}

void check_homology(const Case& c, const Built& b, Criterion& out) {
  auto cx = boundary_matrices(*b.complex);
  if (!boundary_squares_to_zero(cx)) out.fail(c.name() + ": boundary does not square to zero");
  for (const auto& h : reduced_homology(cx))
    if (!h.trivial()) out.fail(c.name() + ": reduced H_" + std::to_string(h.dim) + " = " + to_string(h));
  long long chi = 0;
  auto counts = b.complex->counts_by_dimension();
  for (std::size_t n = 0; n < counts.size(); ++n) chi += (n % 2 ? -1 : 1) * static_cast<long long>(counts[n]);
  if (chi != 1) out.fail(c.name() + ": chi = " + std::to_string(chi));
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

}  // namespace

int main() {
  std::vector<Built> suite;
  for (const auto& c : kSuite) suite.push_back(build(c));

  Criterion c1("matching validity, acyclicity and a single critical Sylow cell on the suite");
  Criterion c2("reduced integral homology vanishes and chi = 1 on the suite");
  for (std::size_t i = 0; i < kSuite.size(); ++i) {
    check_matching(kSuite[i], suite[i], c1);
    check_homology(kSuite[i], suite[i], c2);
  }
  double slowest = 0;
  for (const auto& b : suite) slowest = std::max(slowest, b.seconds);
  c1.note(std::to_string(kSuite.size()) + " cases, slowest " + std::to_string(slowest) + " s");

  Criterion c3("criteria 1 and 2 on Sym(4) p=2 with C = above:C4 and above:non-normal V4");
  for (const Case& c : {Case{"Sym(4)", 2, "above:(0 1 2 3)"}, Case{"Sym(4)", 2, "above:(0 1);(2 3)"}}) {
    auto b = build(c);
    check_matching(c, b, c3);
    check_homology(c, b, c3);
    c3.note(c.name() + ": cells " + join(b.complex->counts_by_dimension()));
  }

  Criterion c4("Sym(4) p=2 worked cells");
  {
    const auto& b = suite[2];
    const auto& coll = *b.collection;
    const auto& g = *b.group;
    auto gen = [&](std::vector<std::vector<std::vector<std::uint32_t>>> cycles) {
      std::vector<Element> ids;
      for (const auto& cs : cycles) ids.push_back(g.index_of(Permutation::from_cycles(4, cs)));
      return *coll.find(subgroup_closure(g, ids));
    };
    auto t = gen({{{0, 1}}});
    auto v4 = gen({{{0, 1}}, {{2, 3}}});
    auto counts = b.complex->counts_by_dimension();
    if (counts.empty() || counts[0] != 6) c4.fail("dimension-0 cells: " + join(counts));
    auto cell_t = canonicalize(coll, {t});
    if (classify(coll, cell_t) != CellClass::Redundant) c4.fail("[<(0 1)>] is not redundant");
    else {
      if (iota(coll, cell_t) != 1) c4.fail("iota([<(0 1)>]) = " + std::to_string(iota(coll, cell_t)));
      if (match_c(coll, cell_t) != canonicalize(coll, {t, v4})) c4.fail("c([<(0 1)>]) is not [<(0 1)>, V4]");
    }
    auto h_from = height(coll, canonicalize(coll, {t, v4}));
    auto h_to = height(coll, canonicalize(coll, {v4}));
    if (h_from != 2 || h_to != 3)
      c4.fail("heights along [<(0 1)>, V4] -> [V4]: " + std::to_string(h_from) + " -> " + std::to_string(h_to));
    c4.note("heights along [<(0 1)>, V4] -> [V4]: " + std::to_string(h_from) + " -> " + std::to_string(h_to));
    auto digraph = build_digraph(*b.matching);
    auto from = b.complex->find(canonicalize(coll, {t, v4}));
    auto to = b.complex->find(canonicalize(coll, {v4}));
    bool edge = false;
    for (const auto& e : digraph.edges)
      edge = edge || (digraph.vertices[e.from].cell == from && digraph.vertices[e.to].cell == to &&
                      digraph.vertices[e.from].cls == CellClass::Collapsible &&
                      digraph.vertices[e.to].cls == CellClass::Redundant);
    if (!edge) c4.fail("no collapsible -> redundant edge [<(0 1)>, V4] -> [V4] in the digraph");
  }

  Criterion c5("height monotonicity: zero violations over all edges of every suite case");
  for (std::size_t i = 0; i < kSuite.size(); ++i) {
    if (!suite[i].matching) continue;
    auto digraph = build_digraph(*suite[i].matching);
    auto report = verify_height_monotone(digraph);
    for (auto k : report.violations) {
      const auto& e = digraph.edges[k];
      const auto& from = digraph.vertices[e.from];
      const auto& to = digraph.vertices[e.to];
      c5.fail(kSuite[i].name() + ": " + std::string(to_string(e.kind)) + " edge " +
              std::string(to_string(from.cls)) + " h=" + std::to_string(from.height) + " -> " +
              std::string(to_string(to.cls)) + " h=" + std::to_string(to.height));
    }
    if (!report.ranking_ok())
      c5.note(kSuite[i].name() + ": " + std::to_string(report.rank_violations.size()) + " edges lower the height");
    else if (!report.ok())
      c5.note(kSuite[i].name() + ": heights never decrease and rise on every collapsible -> redundant edge");
  }

  Criterion c6("Sylow choice does not change iota or c (randomized, fixed seed)");
  {
    std::mt19937_64 rng(0x5eed);
    std::size_t trials = 0, mismatches = 0;
    for (const auto& b : suite) {
      if (!b.matching || b.matching->cells_of(CellClass::Redundant).empty()) continue;
      auto r = check_sylow_independence(*b.matching, 25, rng);
      trials += r.trials;
      mismatches += r.mismatches;
    }
    if (trials < 100) c6.fail("only " + std::to_string(trials) + " trials");
    if (mismatches) c6.fail(std::to_string(mismatches) + " mismatches");
    c6.note(std::to_string(trials) + " trials, " + std::to_string(mismatches) + " mismatches");
  }

  Criterion c7("N(C)/F and N(C^)/G agree for Sym(4), Sym(5), Alt(5) at p=2");
  for (const char* group : {"Sym(4)", "Sym(5)", "Alt(5)"}) {
    auto fusion = FusionSystem::of_group(std::make_shared<const FiniteGroup>(parse_group_spec(group)), 2);
    auto r = compare_quotients(fusion, fusion.subgroups());
    std::string name = std::string(group) + " p=2";
    if (!r.well_defined) c7.fail(name + ": map not well defined");
    if (!r.bijective) c7.fail(name + ": map not bijective");
    if (!r.faces_commute) c7.fail(name + ": faces do not commute");
    if (r.fusion_counts != r.orbit_counts)
      c7.fail(name + ": counts " + join(r.fusion_counts) + " vs " + join(r.orbit_counts));
    c7.note(name + ": cells " + join(r.fusion_counts) + " | " + join(r.orbit_counts));
  }

  Criterion c8("negative controls: triangle boundary and reversed match edge");
  {
    std::vector<std::array<std::size_t, 2>> edges{{0, 1}, {0, 2}, {1, 2}};
    auto cx = boundary_matrices({3, 3}, [&](int, std::size_t index, std::size_t j) { return edges[index][1 - j]; });
    auto h = reduced_homology(cx);
    if (h.size() != 2 || h[1].betti != 1 || !h[1].torsion.empty() || !h[0].trivial())
      c8.fail("triangle boundary: reduced H_1 is not Z");

    auto digraph = build_digraph(*suite[2].matching);
    bool flagged = false;
    for (const auto& e : digraph.edges)
      if (e.kind == EdgeKind::Match) {
        digraph.edges.push_back({e.to, e.from, EdgeKind::Face, 0});
        flagged = !verify_acyclic(digraph).acyclic;
        break;
      }
    if (!flagged) c8.fail("reversed match edge not flagged as a cycle");
  }

  int failed = 0;
  int n = 1;
  for (const auto* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8}) failed += c->report(n++) ? 0 : 1;
  std::cout << (8 - failed) << "/8 criteria pass\n";
  return failed ? 1 : 0;
}
