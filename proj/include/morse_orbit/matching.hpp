#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "morse_orbit/orbit_nerve.hpp"

namespace morse_orbit {

enum class CellClass { Critical, Redundant, Collapsible };

std::string_view to_string(CellClass cls);

// Chain-level primitives. `q` must be a Sylow p-subgroup of the chain's
// normalizer; the cell-level functions below pick it deterministically.

Subgroup chain_normalizer(const Collection& collection, const Chain& chain);
Subgroup chain_sylow(const Collection& collection, const Chain& chain, std::mt19937_64* rng = nullptr);

/// Redundant iff P_i != Q P_{i-1} for every i (P_{-1} = 1); otherwise
/// collapsible in positive dimension and critical in dimension 0.
CellClass classify_with(const Collection& collection, const Chain& chain, const Subgroup& q);

/// i + 1 for the largest i with Q not inside P_i. Throws NotRedundant.
std::size_t iota_with(const Collection& collection, const Chain& chain, const Subgroup& q);

/// The chain with Q P_{iota-1} inserted at position iota (not canonicalized).
/// Throws NotRedundant, or InternalError if the result is not strict.
Chain matched_chain(const Collection& collection, const Chain& chain, const Subgroup& q);

CellClass classify(const Collection& collection, const OrbitCell& cell);
std::size_t iota(const Collection& collection, const OrbitCell& cell);
OrbitCell match_c(const Collection& collection, const OrbitCell& cell);
/// log_p of the Sylow order of the chain normalizer.
unsigned height(const Collection& collection, const OrbitCell& cell);

struct CellRecord {
  CellClass cls = CellClass::Critical;
  Subgroup sylow;  // the witness Q used for classification, iota and c
  unsigned height = 0;
  // Redundant: c(tau). Collapsible: c^-1(sigma). Critical: none.
  std::optional<CellId> partner;
  // Face index linking the pair, stored on both cells; 0 for critical.
  std::size_t iota = 0;
};

/// A matching whose cells could not be paired as required.
class MatchingInvalid : public Error {
 public:
  MatchingInvalid(const std::string& what, std::vector<CellId> cells)
      : Error(ErrorCode::MatchingInvalid, what), cells_(std::move(cells)) {}
  const std::vector<CellId>& cells() const { return cells_; }

 private:
  std::vector<CellId> cells_;
};

class MorseMatching {
 public:
  const OrbitComplex& complex() const { return *complex_; }
  const Collection& collection() const { return complex_->collection(); }
  const CellRecord& record(CellId id) const { return records_.at(id.dim).at(id.index); }

  std::vector<CellId> cells_of(CellClass cls) const;
  /// counts[dim] for the given class.
  std::vector<std::size_t> class_counts(CellClass cls) const;

 private:
  friend MorseMatching build_matching(std::shared_ptr<const OrbitComplex>, unsigned);

  std::shared_ptr<const OrbitComplex> complex_;
  std::vector<std::vector<CellRecord>> records_;
};

/// Classifies every cell, pairs redundant cells with collapsible ones and
/// checks the pairing is a bijection with tau = d_iota(c(tau)). Throws
/// MatchingInvalid naming the offending cells.
MorseMatching build_matching(std::shared_ptr<const OrbitComplex> complex, unsigned threads = 1);

enum class EdgeKind { Match, Face };

std::string_view to_string(EdgeKind kind);

struct DigraphVertex {
  CellId cell;
  CellClass cls = CellClass::Redundant;
  unsigned height = 0;
};

struct DigraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeKind kind = EdgeKind::Match;
  std::size_t face_index = 0;
};

struct MatchingDigraph {
  std::vector<DigraphVertex> vertices;
  std::vector<DigraphEdge> edges;

  std::vector<std::vector<std::size_t>> successors() const;
};

/// Vertices are redundant and collapsible cells; edges tau -> c(tau) and
/// sigma -> d_j(sigma) for j != iota(c^-1(sigma)), skipping critical targets.
MatchingDigraph build_digraph(const MorseMatching& matching);

struct AcyclicityReport {
  bool acyclic = true;
  std::vector<std::size_t> cycle;  // vertex indices, first repeated implicitly
};

AcyclicityReport verify_acyclic(const MatchingDigraph& digraph);

struct HeightReport {
  std::size_t edges_checked = 0;
  std::vector<std::size_t> violations;       // edge indices, strict rule
  std::vector<std::size_t> rank_violations;  // edge indices, weak rule
  bool ok() const { return violations.empty(); }
  bool ranking_ok() const { return rank_violations.empty(); }
};

/// Strict rule: collapsible -> redundant edges must raise the height, all
/// others keep it. Weak rule: no edge lowers the height, collapsible ->
/// redundant edges raise it and match edges keep it. The weak rule is what
/// makes (height, dimension) a ranking that forbids cycles; collapsible ->
/// collapsible face edges can raise the height (Sym(4), p = 2).
HeightReport verify_height_monotone(const MatchingDigraph& digraph);

struct CriticalReport {
  bool ok = false;
  std::size_t critical_count = 0;
  std::optional<CellId> critical;
  std::string message;
};

/// Exactly one critical cell, of dimension 0, whose subgroup is Sylow in G.
CriticalReport verify_single_critical(const MorseMatching& matching);

struct SylowIndependenceReport {
  std::size_t trials = 0;
  std::size_t mismatches = 0;
  bool ok() const { return trials > 0 && mismatches == 0; }
};

/// Draws redundant cells and two random Sylow subgroups Q, R of their
/// normalizer; compares classification, iota and the canonical c-image.
SylowIndependenceReport check_sylow_independence(const MorseMatching& matching, std::size_t trials,
                                                 std::mt19937_64& rng);

/// Graphviz text. Node attributes `class` and `height`, label
/// "dim/class/height"; edge attribute `kind` in {match, face}.
std::string to_dot(const MatchingDigraph& digraph);

}  // namespace morse_orbit
