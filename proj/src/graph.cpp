#include "pmg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace pmg {

std::size_t PMGraph::add_vertex(std::string id, long q) {
  if (find(id)) {
    throw ValidationError(ErrorCode::DuplicateVertexId, id, "vertex id '" + id + "' is used twice");
  }
  vertices_.push_back({std::move(id), q});
  return vertices_.size() - 1;
}

std::size_t PMGraph::add_edge(std::size_t u, std::size_t v, Rational length) {
  if (u >= vertices_.size() || v >= vertices_.size()) {
    throw ValidationError(ErrorCode::UnknownVertex, "edge " + std::to_string(edges_.size()),
                          "edge endpoint index out of range");
  }
  edges_.push_back({u, v, std::move(length)});
  return edges_.size() - 1;
}

std::size_t PMGraph::add_edge(std::string_view u, std::string_view v, Rational length) {
  return add_edge(index_of(u), index_of(v), std::move(length));
}

std::optional<std::size_t> PMGraph::find(std::string_view id) const {
  auto it = std::find_if(vertices_.begin(), vertices_.end(), [&](const Vertex& x) { return x.id == id; });
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t PMGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw ValidationError(ErrorCode::UnknownVertex, std::string(id),
                        "no vertex with id '" + std::string(id) + "'");
}

long PMGraph::valence(std::size_t i) const {
  long val = 0;
  for (const Edge& e : edges_) {
    if (e.u == i) ++val;
    if (e.v == i) ++val;
  }
  return val;
}

std::vector<long> PMGraph::valences() const {
  std::vector<long> val(vertices_.size(), 0);
  for (const Edge& e : edges_) {
    ++val[e.u];
    ++val[e.v];
  }
  return val;
}

bool PMGraph::has_self_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool PMGraph::has_parallel_edges() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : edges_) {
    if (e.is_loop()) continue;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return true;
  }
  return false;
}

std::string PMGraph::fresh_id(std::string_view stem) const {
  for (std::size_t k = vertices_.size();; ++k) {
    std::string candidate = std::string(stem) + std::to_string(k);
    if (!find(candidate)) return candidate;
  }
}

bool operator==(const PMGraph& a, const PMGraph& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    if (a.vertices_[i].id != b.vertices_[i].id || a.vertices_[i].q != b.vertices_[i].q) return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.length != y.length) return false;
  }
  return true;
}

bool is_connected(const PMGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : graph.edges()) {
    auto a = root(e.u);
    auto b = root(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

ValidationOutcome validate(const PMGraph& graph, bool require_effective) {
  ValidationOutcome out;
  auto& v = out.violations;
  if (graph.vertex_count() == 0 || graph.edge_count() == 0) {
    v.push_back({ErrorCode::EmptyGraph, "graph", "a metrized graph needs at least one edge"});
    return out;
  }
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edge(i);
    if (e.length <= 0) {
      v.push_back({ErrorCode::NonpositiveEdgeLength,
                   "edge " + std::to_string(i) + ": " + graph.vertex(e.u).id + "-" + graph.vertex(e.v).id,
                   "edge length " + to_string(e.length) + " is not positive"});
    }
  }
  for (const Vertex& x : graph.vertices()) {
    if (x.q < 0) {
      v.push_back({ErrorCode::NegativePolarization, x.id, "q(" + x.id + ") = " + std::to_string(x.q) + " < 0"});
    }
  }
  if (!is_connected(graph)) {
    v.push_back({ErrorCode::DisconnectedGraph, "graph", "graph is not connected"});
  }
  if (require_effective) {
    auto weights = canonical_weights(graph);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] < 0) {
        const auto& id = graph.vertex(i).id;
        v.push_back({ErrorCode::NonEffectiveCanonicalDivisor, id,
                     "canonical weight at " + id + " is " + std::to_string(weights[i])});
      }
    }
  }
  return out;
}

void require_valid(const PMGraph& graph, bool require_effective) {
  auto outcome = validate(graph, require_effective);
  if (!outcome.ok()) throw ValidationError(std::move(outcome.violations));
}

GenusData genus(const PMGraph& graph) {
  GenusData out;
  out.g = static_cast<long>(graph.edge_count()) - static_cast<long>(graph.vertex_count()) + 1;
  long q_total = 0;
  for (const Vertex& x : graph.vertices()) q_total += x.q;
  out.gbar = out.g + q_total;
  out.deg_k = 2 * out.gbar - 2;
  return out;
}

Rational total_length(const PMGraph& graph) {
  Rational sum = 0;
  for (const Edge& e : graph.edges()) sum += e.length;
  return sum;
}

long canonical_weight(const PMGraph& graph, std::size_t p) {
  if (p >= graph.vertex_count()) {
    throw ValidationError(ErrorCode::UnknownVertex, std::to_string(p), "vertex index out of range");
  }
  return graph.valence(p) - 2 + 2 * graph.vertex(p).q;
}

long canonical_weight(const PMGraph& graph, std::string_view id) {
  return canonical_weight(graph, graph.index_of(id));
}

std::vector<long> canonical_weights(const PMGraph& graph) {
  auto val = graph.valences();
  std::vector<long> w(val.size());
  for (std::size_t i = 0; i < val.size(); ++i) w[i] = val[i] - 2 + 2 * graph.vertex(i).q;
  return w;
}

}  // namespace pmg
