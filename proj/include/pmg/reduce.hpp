#pragma once

// Rewrites a pm-graph into an adequate presentation (no self-loops, no
// parallel edges) and records what was removed so the invariants of the
// original graph can be recovered.

#include "pmg/graph.hpp"

#include <map>
#include <string>
#include <utility>

namespace pmg {

enum class LoopStrategy {
  /// Remove loops and fold their length back in analytically.
  analytic,
  /// Replace every loop by a triangle through two new q = 0 vertices.
  subdivide,
};

std::string_view to_string(LoopStrategy strategy);
LoopStrategy parse_loop_strategy(std::string_view text);

struct CorrectionLedger {
  /// Sum of the lengths of every removed self-loop.
  Rational loop_length_total = 0;
  /// +1 at the anchor for each removed loop.
  std::map<std::string, long> q_increments;
  /// Stripping left a single vertex: the original graph was a bouquet.
  bool bouquet_flag = false;
  /// Polarized genus of the graph the ledger was taken from.
  long gbar = 0;

  long loops_removed() const;
  bool empty() const { return loops_removed() == 0; }
};

struct ReducedGraph {
  PMGraph graph;
  CorrectionLedger ledger;
};

/// Merges q = 0, valence-2 vertices whose two edge-ends belong to distinct
/// edges, while at least two vertices remain.
PMGraph eliminate_valence2(const PMGraph& graph);

/// Splits all but the first edge of each parallel class with a new q = 0
/// vertex at `split` (a fraction in (0, 1)) of its length. Input must be
/// loop-free.
PMGraph subdivide_parallel_edges(const PMGraph& graph, const Rational& split = Rational(1, 2));

/// Deletes every self-loop, adding its length to the ledger and raising q at
/// its anchor by one. Sets bouquet_flag when a single vertex remains.
std::pair<PMGraph, CorrectionLedger> strip_self_loops(const PMGraph& graph);

/// Replaces each self-loop of length L by three edges of length L/3 through
/// two new q = 0 vertices. The ledger only carries gbar.
std::pair<PMGraph, CorrectionLedger> subdivide_self_loops(const PMGraph& graph);

/// eliminate_valence2, then loop handling per `strategy`, then
/// subdivide_parallel_edges. With the analytic strategy a bouquet reduces to
/// its single vertex with no edges and bouquet_flag set.
ReducedGraph reduce_to_adequate(const PMGraph& graph, LoopStrategy strategy = LoopStrategy::analytic,
                                const Rational& split = Rational(1, 2));

}  // namespace pmg
