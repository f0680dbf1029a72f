#pragma once

// Deterministic generators for the graph families used as reference cases.
// Vertices are named v0, v1, ... in construction order.

#include "pmg/graph.hpp"

#include <vector>

namespace pmg::families {

/// K_n with `lengths` given in lexicographic vertex-pair order (0,1), (0,2),
/// ..., (n-2,n-1). `q` is empty (all zero) or one value per vertex.
PMGraph complete_graph(long n, const std::vector<Rational>& lengths, const std::vector<long>& q = {});

/// K_n with the same length on every edge and the same q at every vertex.
PMGraph complete_graph_uniform(long n, const Rational& length, long q = 0);

/// Ladder with n rungs of length b: top rail v0..v(n-1), bottom rail
/// vn..v(2n-1), rung v(i)-v(n+i), rails of length a. q = 0 everywhere.
PMGraph ladder(long n, const Rational& a, const Rational& b);

/// One vertex with a self-loop per entry of `loop_lengths`.
PMGraph bouquet(const std::vector<Rational>& loop_lengths, long q = 0);

/// A single self-loop of length L at one q = 0 vertex.
PMGraph circle(const Rational& length);

/// Five-vertex graph with a loop of length 3a at v0, an edge b parallel to a
/// path c + c through the q = 0 vertex v2, and pendant edges d (at v0) and
/// e (at v1). q = (1, 3, 0, 3, 3); g = 2, gbar = 12.
PMGraph example3(const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& e);

}  // namespace pmg::families
