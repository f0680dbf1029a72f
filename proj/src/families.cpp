#include "pmg/families.hpp"

namespace pmg::families {

namespace {

std::string name(long i) { return "v" + std::to_string(i); }

void require_positive(const Rational& x, const char* what) {
  if (x <= 0) throw Error(ErrorCode::BadParameter, std::string(what) + " must be positive");
}

}  // namespace

PMGraph complete_graph(long n, const std::vector<Rational>& lengths, const std::vector<long>& q) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "complete graph needs n >= 2");
  const auto pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  if (lengths.size() != pairs) {
    throw Error(ErrorCode::BadParameterCount,
                "K_" + std::to_string(n) + " needs " + std::to_string(pairs) + " edge lengths");
  }
  if (!q.empty() && q.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::BadParameterCount, "q needs one value per vertex");
  }
  PMGraph graph;
  for (long i = 0; i < n; ++i) graph.add_vertex(name(i), q.empty() ? 0 : q[static_cast<std::size_t>(i)]);
  std::size_t k = 0;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      require_positive(lengths[k], "edge length");
      graph.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j), lengths[k++]);
    }
  }
  return graph;
}

PMGraph complete_graph_uniform(long n, const Rational& length, long q) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "complete graph needs n >= 2");
  return complete_graph(n, std::vector<Rational>(static_cast<std::size_t>(n * (n - 1) / 2), length),
                        std::vector<long>(static_cast<std::size_t>(n), q));
}

PMGraph ladder(long n, const Rational& a, const Rational& b) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "ladder needs n >= 2");
  require_positive(a, "rail length a");
  require_positive(b, "rung length b");
  PMGraph graph;
  for (long i = 0; i < 2 * n; ++i) graph.add_vertex(name(i));
  auto top = [](long i) { return static_cast<std::size_t>(i); };
  auto bottom = [n](long i) { return static_cast<std::size_t>(n + i); };
  for (long i = 0; i < n; ++i) graph.add_edge(top(i), bottom(i), b);
  for (long i = 0; i + 1 < n; ++i) {
    graph.add_edge(top(i), top(i + 1), a);
    graph.add_edge(bottom(i), bottom(i + 1), a);
  }
  return graph;
}

PMGraph bouquet(const std::vector<Rational>& loop_lengths, long q) {
  if (loop_lengths.empty()) throw Error(ErrorCode::BadParameterCount, "bouquet needs at least one loop");
  if (q < 0) throw Error(ErrorCode::BadParameter, "q must be nonnegative");
  PMGraph graph;
  graph.add_vertex(name(0), q);
  for (const Rational& len : loop_lengths) {
    require_positive(len, "loop length");
    graph.add_edge(0, 0, len);
  }
  return graph;
}

PMGraph circle(const Rational& length) { return bouquet({length}, 0); }

PMGraph example3(const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& e) {
  for (const Rational* x : {&a, &b, &c, &d, &e}) require_positive(*x, "edge length");
  PMGraph graph;
  graph.add_vertex(name(0), 1);
  graph.add_vertex(name(1), 3);
  graph.add_vertex(name(2), 0);
  graph.add_vertex(name(3), 3);
  graph.add_vertex(name(4), 3);
  graph.add_edge(0, 0, 3 * a);
  graph.add_edge(0, 1, b);
  graph.add_edge(0, 2, c);
  graph.add_edge(2, 1, c);
  graph.add_edge(0, 3, d);
  graph.add_edge(1, 4, e);
  return graph;
}

}  // namespace pmg::families
