#pragma once

#include "pmg/errors.hpp"
#include "pmg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pmg {

struct Vertex {
  std::string id;
  long q = 0;
};

/// u == v encodes a self-loop; repeated endpoint pairs encode parallel edges.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational length;

  bool is_loop() const noexcept { return u == v; }
  std::size_t other(std::size_t end) const noexcept { return end == u ? v : u; }
};

/// A polarized metrized graph: vertices carrying q, edges carrying exact
/// lengths. Vertex order is the insertion order and fixes matrix layout.
///
/// Construction rejects duplicate ids and dangling endpoints immediately;
/// lengths, connectivity and polarization are checked by validate().
class PMGraph {
 public:
  std::size_t add_vertex(std::string id, long q = 0);
  std::size_t add_edge(std::size_t u, std::size_t v, Rational length);
  std::size_t add_edge(std::string_view u, std::string_view v, Rational length);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws ValidationError(UnknownVertex).
  std::size_t index_of(std::string_view id) const;

  /// Number of directions at the vertex; a self-loop contributes 2.
  long valence(std::size_t i) const;
  std::vector<long> valences() const;

  bool has_self_loops() const;
  bool has_parallel_edges() const;
  bool is_adequate() const { return !has_self_loops() && !has_parallel_edges(); }

  /// An id of the form "<stem><k>" not yet used in this graph.
  std::string fresh_id(std::string_view stem) const;

  friend bool operator==(const PMGraph& a, const PMGraph& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

struct GenusData {
  long g = 0;
  long gbar = 0;
  long deg_k = 0;
};

struct ValidationOutcome {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks lengths, connectivity, q >= 0 and, when `require_effective` is set,
/// that every canonical weight val(p) - 2 + 2 q(p) is nonnegative.
ValidationOutcome validate(const PMGraph& graph, bool require_effective);

/// validate() that throws ValidationError on any violation.
void require_valid(const PMGraph& graph, bool require_effective);

bool is_connected(const PMGraph& graph);

GenusData genus(const PMGraph& graph);

Rational total_length(const PMGraph& graph);

/// val(p) - 2 + 2 q(p).
long canonical_weight(const PMGraph& graph, std::size_t p);
long canonical_weight(const PMGraph& graph, std::string_view id);
std::vector<long> canonical_weights(const PMGraph& graph);

}  // namespace pmg
