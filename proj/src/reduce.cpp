#include "pmg/reduce.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

namespace pmg {

std::string_view to_string(LoopStrategy strategy) {
  return strategy == LoopStrategy::analytic ? "analytic" : "subdivide";
}

LoopStrategy parse_loop_strategy(std::string_view text) {
  if (text == "analytic") return LoopStrategy::analytic;
  if (text == "subdivide") return LoopStrategy::subdivide;
  throw Error(ErrorCode::BadParameter, "unknown loop strategy '" + std::string(text) + "'");
}

long CorrectionLedger::loops_removed() const {
  long n = 0;
  for (const auto& [id, k] : q_increments) n += k;
  return n;
}

namespace {

struct WorkEdge {
  std::size_t u, v;
  Rational length;
  bool alive = true;
};

// Copies the surviving vertices and edges into a fresh graph, keeping order.
PMGraph rebuild(const PMGraph& source, const std::vector<bool>& vertex_alive, const std::vector<WorkEdge>& edges) {
  PMGraph out;
  std::vector<std::size_t> remap(source.vertex_count(), 0);
  for (std::size_t i = 0; i < source.vertex_count(); ++i) {
    if (vertex_alive[i]) remap[i] = out.add_vertex(source.vertex(i).id, source.vertex(i).q);
  }
  for (const WorkEdge& e : edges) {
    if (e.alive) out.add_edge(remap[e.u], remap[e.v], e.length);
  }
  return out;
}

}  // namespace

PMGraph eliminate_valence2(const PMGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<WorkEdge> edges;
  edges.reserve(graph.edge_count());
  std::vector<std::vector<std::size_t>> incident(n);
  for (const Edge& e : graph.edges()) {
    incident[e.u].push_back(edges.size());
    incident[e.v].push_back(edges.size());
    edges.push_back({e.u, e.v, e.length});
  }
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;

  auto detach = [&](std::size_t vertex, std::size_t edge) {
    auto& list = incident[vertex];
    list.erase(std::find(list.begin(), list.end(), edge));
  };

  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < n; ++i) work.push_back(i);
  while (!work.empty() && remaining >= 2) {
    std::size_t s = work.front();
    work.pop_front();
    if (!alive[s] || graph.vertex(s).q != 0 || incident[s].size() != 2) continue;
    std::size_t e1 = incident[s][0];
    std::size_t e2 = incident[s][1];
    if (e1 == e2) continue;  // a self-loop is the only thing at s
    std::size_t a = edges[e1].u == s ? edges[e1].v : edges[e1].u;
    std::size_t b = edges[e2].u == s ? edges[e2].v : edges[e2].u;
    std::size_t keep = std::min(e1, e2);
    std::size_t drop = std::max(e1, e2);
    if (keep != e1) std::swap(a, b);  // merged edge runs from keep's far end
    detach(a, e1 == keep ? e1 : e2);
    detach(b, e1 == keep ? e2 : e1);
    edges[keep] = {a, b, edges[e1].length + edges[e2].length};
    edges[drop].alive = false;
    incident[a].push_back(keep);
    incident[b].push_back(keep);
    incident[s].clear();
    alive[s] = false;
    --remaining;
    work.push_back(a);
    work.push_back(b);
  }
  return rebuild(graph, alive, edges);
}

PMGraph subdivide_parallel_edges(const PMGraph& graph, const Rational& split) {
  if (graph.has_self_loops()) {
    throw Error(ErrorCode::NotAdequate, "subdivide_parallel_edges needs a loop-free graph");
  }
  if (split <= 0 || split >= 1) {
    throw Error(ErrorCode::BadParameter, "split point must lie strictly between 0 and 1");
  }
  PMGraph out;
  for (const Vertex& v : graph.vertices()) out.add_vertex(v.id, v.q);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : graph.edges()) {
    if (seen.insert(std::minmax(e.u, e.v)).second) {
      out.add_edge(e.u, e.v, e.length);
      continue;
    }
    std::size_t mid = out.add_vertex(out.fresh_id("_m"), 0);
    out.add_edge(e.u, mid, e.length * split);
    out.add_edge(mid, e.v, e.length * (1 - split));
  }
  return out;
}

std::pair<PMGraph, CorrectionLedger> strip_self_loops(const PMGraph& graph) {
  CorrectionLedger ledger;
  ledger.gbar = genus(graph).gbar;
  std::vector<long> extra(graph.vertex_count(), 0);
  for (const Edge& e : graph.edges()) {
    if (!e.is_loop()) continue;
    ledger.loop_length_total += e.length;
    ++extra[e.u];
    ++ledger.q_increments[graph.vertex(e.u).id];
  }
  PMGraph out;
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    out.add_vertex(graph.vertex(i).id, graph.vertex(i).q + extra[i]);
  }
  for (const Edge& e : graph.edges()) {
    if (!e.is_loop()) out.add_edge(e.u, e.v, e.length);
  }
  ledger.bouquet_flag = out.vertex_count() == 1 && !ledger.empty();
  return {std::move(out), std::move(ledger)};
}

std::pair<PMGraph, CorrectionLedger> subdivide_self_loops(const PMGraph& graph) {
  CorrectionLedger ledger;
  ledger.gbar = genus(graph).gbar;
  PMGraph out;
  for (const Vertex& v : graph.vertices()) out.add_vertex(v.id, v.q);
  for (const Edge& e : graph.edges()) {
    if (!e.is_loop()) {
      out.add_edge(e.u, e.v, e.length);
      continue;
    }
    Rational third = e.length / 3;
    std::size_t m1 = out.add_vertex(out.fresh_id("_l"), 0);
    std::size_t m2 = out.add_vertex(out.fresh_id("_l"), 0);
    out.add_edge(e.u, m1, third);
    out.add_edge(m1, m2, third);
    out.add_edge(m2, e.u, third);
  }
  return {std::move(out), std::move(ledger)};
}

ReducedGraph reduce_to_adequate(const PMGraph& graph, LoopStrategy strategy, const Rational& split) {
  PMGraph merged = eliminate_valence2(graph);
  auto [loop_free, ledger] =
      strategy == LoopStrategy::analytic ? strip_self_loops(merged) : subdivide_self_loops(merged);
  ledger.gbar = genus(graph).gbar;
  return {subdivide_parallel_edges(loop_free, split), std::move(ledger)};
}

}  // namespace pmg
