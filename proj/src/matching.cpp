#include "morse_orbit/matching.hpp"

#include <algorithm>
#include <sstream>

#include "morse_orbit/parallel.hpp"

namespace morse_orbit {

std::string_view to_string(CellClass cls) {
  switch (cls) {
    case CellClass::Critical: return "critical";
    case CellClass::Redundant: return "redundant";
    case CellClass::Collapsible: return "collapsible";
  }
  return "?";
}

std::string_view to_string(EdgeKind kind) { return kind == EdgeKind::Match ? "match" : "face"; }

namespace {

// Q P_{i-1}, with P_{-1} the trivial subgroup.
Subgroup product_below(const Collection& collection, const Chain& chain, const Subgroup& q, std::size_t i) {
  if (i == 0) return q;
  return product_subgroup(collection.group(), q, collection.member(chain[i - 1]));
}

std::string cell_text(const Collection& c, const Chain& chain) {
  std::string out = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " < ";
    out += describe_subgroup(c.group(), c.member(chain[i]));
  }
  return out + "]";
}

}  // namespace

Subgroup chain_normalizer(const Collection& collection, const Chain& chain) {
  auto subgroups = chain_subgroups(collection, chain);
  return normalizer_of_chain(collection.group(), subgroups);
}

Subgroup chain_sylow(const Collection& collection, const Chain& chain, std::mt19937_64* rng) {
  return sylow_subgroup(collection.group(), chain_normalizer(collection, chain), collection.prime(), rng);
}

CellClass classify_with(const Collection& collection, const Chain& chain, const Subgroup& q) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (product_below(collection, chain, q, i) == collection.member(chain[i]))
      return chain.size() >= 2 ? CellClass::Collapsible : CellClass::Critical;
  }
  return CellClass::Redundant;
}

std::size_t iota_with(const Collection& collection, const Chain& chain, const Subgroup& q) {
  if (classify_with(collection, chain, q) != CellClass::Redundant)
    throw Error(ErrorCode::NotRedundant, cell_text(collection, chain) + " is not redundant");
  for (std::size_t i = chain.size(); i-- > 0;)
    if (!q.is_subset_of(collection.member(chain[i]))) return i + 1;
  throw Error(ErrorCode::InternalError, "Sylow subgroup lies inside P_0 of a redundant chain");
}

Chain matched_chain(const Collection& collection, const Chain& chain, const Subgroup& q) {
  const std::size_t idx = iota_with(collection, chain, q);
  auto inserted = product_subgroup(collection.group(), q, collection.member(chain[idx - 1]));
  auto id = collection.find(inserted);
  if (!id)
    throw Error(ErrorCode::InternalError,
                "QP " + describe_subgroup(collection.group(), inserted) + " is not in the collection");
  Chain out = chain;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(idx), *id);
  if (!is_strict(collection, out))
    throw Error(ErrorCode::InternalError, "c produced a non-strict chain " + cell_text(collection, out));
  return out;
}

CellClass classify(const Collection& collection, const OrbitCell& cell) {
  return classify_with(collection, cell.representative, chain_sylow(collection, cell.representative));
}

std::size_t iota(const Collection& collection, const OrbitCell& cell) {
  return iota_with(collection, cell.representative, chain_sylow(collection, cell.representative));
}

OrbitCell match_c(const Collection& collection, const OrbitCell& cell) {
  return canonicalize(collection,
                      matched_chain(collection, cell.representative, chain_sylow(collection, cell.representative)));
}

unsigned height(const Collection& collection, const OrbitCell& cell) {
  return log_p(chain_sylow(collection, cell.representative).order(), collection.prime());
}

std::vector<CellId> MorseMatching::cells_of(CellClass cls) const {
  std::vector<CellId> out;
  for (std::size_t d = 0; d < records_.size(); ++d)
    for (std::size_t i = 0; i < records_[d].size(); ++i)
      if (records_[d][i].cls == cls) out.push_back(CellId{static_cast<int>(d), static_cast<std::uint32_t>(i)});
  return out;
}

std::vector<std::size_t> MorseMatching::class_counts(CellClass cls) const {
  std::vector<std::size_t> out(records_.size(), 0);
  for (std::size_t d = 0; d < records_.size(); ++d)
    for (const auto& r : records_[d])
      if (r.cls == cls) ++out[d];
  return out;
}

MorseMatching build_matching(std::shared_ptr<const OrbitComplex> complex, unsigned threads) {
  MorseMatching m;
  m.complex_ = std::move(complex);
  const auto& cx = *m.complex_;
  const auto& c = cx.collection();

  m.records_.resize(cx.top_dimension() + 1);
  for (int d = 0; d <= cx.top_dimension(); ++d) {
    const auto& cells = cx.cells(d);
    auto& recs = m.records_[d];
    recs.resize(cells.size());
    parallel_for(cells.size(), threads, [&](std::size_t i) {
      const auto& rep = cells[i].representative;
      auto q = chain_sylow(c, rep);
      recs[i].cls = classify_with(c, rep, q);
      recs[i].height = log_p(q.order(), c.prime());
      recs[i].sylow = std::move(q);
    });
  }

  // c on redundant cells, checking dimension shift, face recovery and injectivity.
  for (int d = 0; d <= cx.top_dimension(); ++d) {
    for (std::uint32_t i = 0; i < m.records_[d].size(); ++i) {
      auto& rec = m.records_[d][i];
      if (rec.cls != CellClass::Redundant) continue;
      CellId tau{d, i};
      const auto& rep = cx.cell(tau).representative;
      const std::size_t idx = iota_with(c, rep, rec.sylow);
      if (idx < 1 || idx > rep.size()) throw MatchingInvalid("iota out of range [1, n+1]", {tau});
      auto target = cx.find(canonicalize(c, matched_chain(c, rep, rec.sylow)));
      if (!target) throw MatchingInvalid("c(tau) is not a cell of the complex", {tau});
      if (target->dim != d + 1) throw MatchingInvalid("c(tau) does not raise dimension by one", {tau, *target});
      auto& trec = m.records_[target->dim][target->index];
      if (trec.cls != CellClass::Collapsible) throw MatchingInvalid("c(tau) is not collapsible", {tau, *target});
      if (cx.face_of(*target, idx) != tau) throw MatchingInvalid("d_iota(c(tau)) != tau", {tau, *target});
      if (trec.partner) throw MatchingInvalid("c is not injective", {*trec.partner, tau, *target});
      rec.partner = *target;
      rec.iota = idx;
      trec.partner = tau;
      trec.iota = idx;
    }
  }

  // Surjectivity: every collapsible sigma is c(d_i(sigma)) for the unique i
  // with Q R_{i-1} = R_i.
  for (int d = 1; d <= cx.top_dimension(); ++d) {
    for (std::uint32_t i = 0; i < m.records_[d].size(); ++i) {
      const auto& rec = m.records_[d][i];
      if (rec.cls != CellClass::Collapsible) continue;
      CellId sigma{d, i};
      const auto& rep = cx.cell(sigma).representative;
      std::optional<std::size_t> hit;
      for (std::size_t k = 1; k < rep.size(); ++k)
        if (product_below(c, rep, rec.sylow, k) == c.member(rep[k])) {
          hit = k;
          break;
        }
      if (!hit) throw MatchingInvalid("collapsible cell has no index with Q R_{i-1} = R_i", {sigma});
      auto tau = cx.face_of(sigma, *hit);
      if (!tau || m.record(*tau).cls != CellClass::Redundant)
        throw MatchingInvalid("d_i(sigma) is not redundant", {sigma});
      if (!rec.partner || *rec.partner != *tau || rec.iota != *hit)
        throw MatchingInvalid("c is not surjective onto sigma", {sigma, *tau});
    }
  }
  return m;
}

std::vector<std::vector<std::size_t>> MatchingDigraph::successors() const {
  std::vector<std::vector<std::size_t>> out(vertices.size());
  for (const auto& e : edges) out[e.from].push_back(e.to);
  return out;
}

MatchingDigraph build_digraph(const MorseMatching& matching) {
  MatchingDigraph g;
  const auto& cx = matching.complex();
  std::map<CellId, std::size_t> vertex_of;
  for (int d = 0; d <= cx.top_dimension(); ++d)
    for (std::uint32_t i = 0; i < cx.count(d); ++i) {
      CellId id{d, i};
      const auto& rec = matching.record(id);
      if (rec.cls == CellClass::Critical) continue;
      vertex_of[id] = g.vertices.size();
      g.vertices.push_back(DigraphVertex{id, rec.cls, rec.height});
    }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto id = g.vertices[v].cell;
    const auto& rec = matching.record(id);
    if (rec.cls == CellClass::Redundant) {
      g.edges.push_back(DigraphEdge{v, vertex_of.at(*rec.partner), EdgeKind::Match, rec.iota});
      continue;
    }
    for (std::size_t j = 0; j <= static_cast<std::size_t>(id.dim); ++j) {
      if (j == rec.iota) continue;
      auto target = cx.face_of(id, j);
      if (!target || matching.record(*target).cls == CellClass::Critical) continue;
      g.edges.push_back(DigraphEdge{v, vertex_of.at(*target), EdgeKind::Face, j});
    }
  }
  return g;
}

AcyclicityReport verify_acyclic(const MatchingDigraph& digraph) {
  const std::size_t n = digraph.vertices.size();
  auto succ = digraph.successors();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : digraph.edges) ++indegree[e.to];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) stack.push_back(v);
  std::size_t removed = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    ++removed;
    for (auto w : succ[v])
      if (--indegree[w] == 0) stack.push_back(w);
  }
  AcyclicityReport report;
  if (removed == n) return report;
  report.acyclic = false;

  // Every surviving vertex has a surviving predecessor; walk backwards until
  // a vertex repeats.
  std::vector<std::vector<std::size_t>> pred(n);
  for (const auto& e : digraph.edges)
    if (indegree[e.from] > 0 && indegree[e.to] > 0) pred[e.to].push_back(e.from);
  std::size_t start = 0;
  while (indegree[start] == 0) ++start;
  std::vector<std::size_t> position(n, n);
  std::vector<std::size_t> walk;
  std::size_t v = start;
  while (position[v] == n) {
    position[v] = walk.size();
    walk.push_back(v);
    v = pred[v].front();
  }
  std::vector<std::size_t> cycle(walk.begin() + static_cast<std::ptrdiff_t>(position[v]), walk.end());
  std::reverse(cycle.begin(), cycle.end());
  report.cycle = std::move(cycle);
  return report;
}

HeightReport verify_height_monotone(const MatchingDigraph& digraph) {
  HeightReport report;
  for (std::size_t k = 0; k < digraph.edges.size(); ++k) {
    const auto& e = digraph.edges[k];
    const auto& from = digraph.vertices[e.from];
    const auto& to = digraph.vertices[e.to];
    ++report.edges_checked;
    bool raises = from.cls == CellClass::Collapsible && to.cls == CellClass::Redundant;
    bool ok = raises ? to.height > from.height : to.height == from.height;
    if (!ok) report.violations.push_back(k);
    bool weak = e.kind == EdgeKind::Match ? to.height == from.height
                : raises                  ? to.height > from.height
                                          : to.height >= from.height;
    if (!weak) report.rank_violations.push_back(k);
  }
  return report;
}

CriticalReport verify_single_critical(const MorseMatching& matching) {
  CriticalReport report;
  auto critical = matching.cells_of(CellClass::Critical);
  report.critical_count = critical.size();
  if (critical.size() != 1) {
    report.message = "expected exactly one critical cell, found " + std::to_string(critical.size());
    return report;
  }
  report.critical = critical.front();
  if (critical.front().dim != 0) {
    report.message = "critical cell has dimension " + std::to_string(critical.front().dim);
    return report;
  }
  const auto& c = matching.collection();
  const auto& g = c.group();
  const auto& p = c.member(matching.complex().cell(critical.front()).representative.front());
  if (!is_sylow_in(p, Subgroup::whole(g), c.prime())) {
    report.message = "critical cell is not a Sylow subgroup";
    return report;
  }
  report.ok = true;
  report.message = "critical cell " + describe_subgroup(g, p) + " is Sylow";
  return report;
}

SylowIndependenceReport check_sylow_independence(const MorseMatching& matching, std::size_t trials,
                                                 std::mt19937_64& rng) {
  SylowIndependenceReport report;
  auto redundant = matching.cells_of(CellClass::Redundant);
  if (redundant.empty()) return report;
  const auto& c = matching.collection();
  std::uniform_int_distribution<std::size_t> pick(0, redundant.size() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& rep = matching.complex().cell(redundant[pick(rng)]).representative;
    auto q = chain_sylow(c, rep, &rng);
    auto r = chain_sylow(c, rep, &rng);
    ++report.trials;
    bool same = classify_with(c, rep, q) == CellClass::Redundant &&
                classify_with(c, rep, r) == CellClass::Redundant &&
                iota_with(c, rep, q) == iota_with(c, rep, r) &&
                canonicalize(c, matched_chain(c, rep, q)) == canonicalize(c, matched_chain(c, rep, r));
    if (!same) ++report.mismatches;
  }
  return report;
}

std::string to_dot(const MatchingDigraph& digraph) {
  std::ostringstream out;
  out << "digraph morse_matching {\n";
  for (std::size_t v = 0; v < digraph.vertices.size(); ++v) {
    const auto& x = digraph.vertices[v];
    out << "  n" << v << " [label=\"" << x.cell.dim << '/' << to_string(x.cls) << '/' << x.height
        << "\", class=\"" << to_string(x.cls) << "\", height=" << x.height << ", dim=" << x.cell.dim
        << ", cell=" << x.cell.index << "];\n";
  }
  for (const auto& e : digraph.edges) {
    out << "  n" << e.from << " -> n" << e.to << " [kind=\"" << to_string(e.kind) << "\", index=" << e.face_index
        << ", style=" << (e.kind == EdgeKind::Match ? "bold" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace morse_orbit
