#include <doctest.h>

#include "pmg/families.hpp"
#include "pmg/invariants.hpp"
#include "pmg/reduce.hpp"

using pmg::PMGraph;
using pmg::Rational;

namespace {

PMGraph path3(long q_mid) {
  PMGraph g;
  g.add_vertex("p", 1);
  g.add_vertex("s", q_mid);
  g.add_vertex("t", 1);
  g.add_edge("p", "s", Rational(2));
  g.add_edge("s", "t", Rational(3));
  return g;
}

PMGraph banana(int k) {
  PMGraph g;
  g.add_vertex("p");
  g.add_vertex("q");
  for (int i = 0; i < k; ++i) g.add_edge("p", "q", Rational(1));
  return g;
}

}  // namespace

TEST_CASE("series merge of a q = 0 valence-2 vertex") {
  PMGraph out = pmg::eliminate_valence2(path3(0));
  REQUIRE(out.vertex_count() == 2);
  REQUIRE(out.edge_count() == 1);
  CHECK(out.vertex(0).id == "p");
  CHECK(out.vertex(1).id == "t");
  CHECK(out.edge(0).length == 5);
}

TEST_CASE("a polarized valence-2 vertex is kept") {
  CHECK(pmg::eliminate_valence2(path3(1)) == path3(1));
}

TEST_CASE("K4 is already reduced") {
  auto k4 = pmg::families::complete_graph_uniform(4, Rational(1, 6));
  CHECK(pmg::eliminate_valence2(k4) == k4);
  auto reduced = pmg::reduce_to_adequate(k4);
  CHECK(reduced.graph == k4);
  CHECK(reduced.ledger.empty());
}

TEST_CASE("ladder end squares fold into split parallel pairs") {
  auto ladder = pmg::families::ladder(4, 1, 2);
  auto reduced = pmg::reduce_to_adequate(ladder);
  CHECK(reduced.graph.vertex_count() == 6);
  CHECK(reduced.graph.edge_count() == 8);
  CHECK(reduced.graph.is_adequate());
  CHECK(pmg::total_length(reduced.graph) == pmg::total_length(ladder));
  CHECK(pmg::genus(reduced.graph).g == 3);
  CHECK(reduced.ledger.empty());
}

TEST_CASE("a polygon collapses to a one-vertex circle") {
  PMGraph g;
  for (const char* id : {"a", "b", "c", "d"}) g.add_vertex(id);
  g.add_edge("a", "b", Rational(1));
  g.add_edge("b", "c", Rational(2));
  g.add_edge("c", "d", Rational(3));
  g.add_edge("d", "a", Rational(4));
  PMGraph out = pmg::eliminate_valence2(g);
  REQUIRE(out.vertex_count() == 1);
  REQUIRE(out.edge_count() == 1);
  CHECK(out.edge(0).is_loop());
  CHECK(out.edge(0).length == 10);
}

TEST_CASE("loop/parallel/pendant fixture: the q = 0 vertex on the parallel path is merged") {
  auto g = pmg::families::example3(1, 2, 3, 4, 5);
  PMGraph out = pmg::eliminate_valence2(g);
  CHECK(out.vertex_count() == 4);
  CHECK_FALSE(out.find("v2").has_value());
  CHECK(out.has_parallel_edges());
  CHECK(pmg::total_length(out) == pmg::total_length(g));
}

TEST_CASE("parallel edges are split") {
  SUBCASE("two edges") {
    PMGraph g;
    g.add_vertex("p");
    g.add_vertex("q");
    g.add_edge("p", "q", Rational(2));
    g.add_edge("p", "q", Rational(3));
    PMGraph out = pmg::subdivide_parallel_edges(g);
    REQUIRE(out.vertex_count() == 3);
    REQUIRE(out.edge_count() == 3);
    CHECK(out.edge(0).length == 2);
    CHECK(out.edge(1).length == Rational(3, 2));
    CHECK(out.edge(2).length == Rational(3, 2));
    CHECK(out.vertex(2).q == 0);
    CHECK(out.is_adequate());
  }
  SUBCASE("banana with three edges") {
    PMGraph out = pmg::subdivide_parallel_edges(banana(3));
    CHECK(out.vertex_count() == 4);
    CHECK(out.edge_count() == 5);
    CHECK(pmg::total_length(out) == 3);
    CHECK(out.is_adequate());
  }
  SUBCASE("off-midpoint split") {
    PMGraph out = pmg::subdivide_parallel_edges(banana(2), Rational(1, 4));
    CHECK(out.edge(1).length == Rational(1, 4));
    CHECK(out.edge(2).length == Rational(3, 4));
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(pmg::subdivide_parallel_edges(banana(2), Rational(1)), pmg::Error);
    CHECK_THROWS_AS(pmg::subdivide_parallel_edges(pmg::families::circle(1)), pmg::Error);
  }
  SUBCASE("K4 unchanged") {
    auto k4 = pmg::families::complete_graph_uniform(4, 1);
    CHECK(pmg::subdivide_parallel_edges(k4) == k4);
  }
}

TEST_CASE("stripping self-loops") {
  SUBCASE("loop/parallel/pendant fixture") {
    auto [out, ledger] = pmg::strip_self_loops(pmg::families::example3(2, 1, 1, 1, 1));
    CHECK(ledger.loop_length_total == 6);
    CHECK(ledger.loops_removed() == 1);
    CHECK(ledger.q_increments.at("v0") == 1);
    CHECK_FALSE(ledger.bouquet_flag);
    CHECK(ledger.gbar == 12);
    CHECK(out.vertex(0).q == 2);
    CHECK_FALSE(out.has_self_loops());
    CHECK(pmg::genus(out).gbar == 12);
  }
  SUBCASE("K4: identity") {
    auto k4 = pmg::families::complete_graph_uniform(4, 1);
    auto [out, ledger] = pmg::strip_self_loops(k4);
    CHECK(out == k4);
    CHECK(ledger.empty());
    CHECK(ledger.loop_length_total == 0);
  }
  SUBCASE("bouquet") {
    auto [out, ledger] = pmg::strip_self_loops(pmg::families::bouquet({Rational(1), Rational(5, 2)}));
    CHECK(ledger.bouquet_flag);
    CHECK(ledger.loops_removed() == 2);
    CHECK(ledger.loop_length_total == Rational(7, 2));
    CHECK(out.edge_count() == 0);
    CHECK(out.vertex(0).q == 2);
  }
}

TEST_CASE("subdividing self-loops keeps length and genus") {
  auto g = pmg::families::example3(1, 2, 3, 4, 5);
  auto [out, ledger] = pmg::subdivide_self_loops(g);
  CHECK(ledger.empty());
  CHECK_FALSE(out.has_self_loops());
  CHECK(out.vertex_count() == g.vertex_count() + 2);
  CHECK(pmg::total_length(out) == pmg::total_length(g));
  CHECK(pmg::genus(out).gbar == pmg::genus(g).gbar);
}

TEST_CASE("reduce_to_adequate") {
  SUBCASE("loop/parallel/pendant fixture, both strategies") {
    auto g = pmg::families::example3(1, 2, 3, 4, 5);
    for (auto strategy : {pmg::LoopStrategy::analytic, pmg::LoopStrategy::subdivide}) {
      auto r = pmg::reduce_to_adequate(g, strategy);
      CHECK(r.graph.is_adequate());
      CHECK(pmg::is_connected(r.graph));
      CHECK(r.ledger.gbar == 12);
      CHECK(pmg::total_length(r.graph) + r.ledger.loop_length_total == pmg::total_length(g));
      CHECK(pmg::genus(r.graph).gbar == 12);
    }
  }
  SUBCASE("circle with q = 0 goes the bouquet route") {
    auto r = pmg::reduce_to_adequate(pmg::families::circle(3));
    CHECK(r.ledger.bouquet_flag);
    CHECK(r.ledger.gbar == 1);
  }
  SUBCASE("a polygon through one polarized vertex") {
    PMGraph g;
    g.add_vertex("a", 1);
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge("a", "b", Rational(1));
    g.add_edge("b", "c", Rational(1));
    g.add_edge("c", "a", Rational(1));
    auto r = pmg::reduce_to_adequate(g);
    CHECK(r.ledger.bouquet_flag);
    CHECK(r.ledger.loop_length_total == 3);
    CHECK(r.ledger.gbar == 2);
  }
}

TEST_CASE("loop strategy names") {
  CHECK(pmg::parse_loop_strategy("analytic") == pmg::LoopStrategy::analytic);
  CHECK(pmg::parse_loop_strategy("subdivide") == pmg::LoopStrategy::subdivide);
  CHECK_THROWS_AS(pmg::parse_loop_strategy("none"), pmg::Error);
}

TEST_CASE("bouquet closed forms") {
  SUBCASE("one loop of length L, gbar = 1") {
    auto inv = pmg::bouquet_invariants<Rational>(Rational(7), 1, 1);
    CHECK(inv.tau == Rational(7, 12));
    CHECK(inv.theta == 0);
    CHECK(inv.phi == 0);
    CHECK(inv.epsilon == 0);
    CHECK(inv.lambda == Rational(7, 12));
    CHECK(inv.z == Rational(7, 12));
  }
  SUBCASE("two unit loops, gbar = 2") {
    auto inv = pmg::bouquet_invariants<Rational>(Rational(2), 2, 2);
    CHECK(inv.phi == Rational(1, 6));
    CHECK(inv.epsilon == Rational(1, 3));
    CHECK(inv.lambda == Rational(1, 5));
    CHECK(inv.z == Rational(1, 8));
  }
  SUBCASE("length 3, gbar = 3") {
    auto inv = pmg::bouquet_invariants<Rational>(Rational(3), 3, 3);
    CHECK(inv.phi == Rational(1, 3));
    // (2 gbar - 1) length / (12 gbar^2) = 15 / 108
    CHECK(inv.z == Rational(5, 36));
  }
  SUBCASE("agrees with the general formulas applied to tau = L/12, theta = 0") {
    for (long gbar = 1; gbar < 6; ++gbar) {
      Rational L(5, 3);
      auto inv = pmg::bouquet_invariants<Rational>(L, gbar, gbar);
      auto d = pmg::derived<Rational>(L / 12, Rational(0), L, gbar);
      CHECK(inv.phi == d.phi);
      CHECK(inv.lambda == d.lambda);
      CHECK(inv.epsilon == d.epsilon);
      CHECK(inv.z == d.z);
    }
  }
  CHECK_THROWS_AS(pmg::bouquet_invariants<Rational>(Rational(1), 0, 0), pmg::Error);
}

TEST_CASE("apply_corrections") {
  auto core = pmg::compute_all<Rational>(pmg::families::complete_graph_uniform(4, Rational(1, 6), 1)).invariants;
  SUBCASE("empty ledger is the identity") {
    pmg::CorrectionLedger ledger;
    ledger.gbar = core.gbar;
    CHECK(pmg::apply_corrections(core, ledger) == core);
  }
  SUBCASE("genus mismatch") {
    pmg::CorrectionLedger ledger;
    ledger.gbar = core.gbar + 1;
    ledger.loop_length_total = 1;
    ledger.q_increments["v0"] = 1;
    CHECK_THROWS_AS(pmg::apply_corrections(core, ledger), pmg::Error);
  }
  SUBCASE("loop of length L") {
    pmg::CorrectionLedger ledger;
    ledger.gbar = core.gbar;
    ledger.loop_length_total = 2;
    ledger.q_increments["v0"] = 1;
    auto out = pmg::apply_corrections(core, ledger);
    const Rational gb(core.gbar);
    CHECK(out.length == core.length + 2);
    CHECK(out.tau == core.tau + Rational(2, 12));
    CHECK(out.theta == core.theta);
    CHECK(out.phi == core.phi + (gb - 1) * 2 / (6 * gb));
    CHECK(out.z == core.z + (2 * gb - 1) * 2 / (12 * gb * gb));
    CHECK(out.lambda == core.lambda + gb * 2 / (8 * gb + 4));
    CHECK(out.epsilon == core.epsilon + (gb - 1) * 2 / (3 * gb));
    CHECK(out.g == core.g + 1);
    CHECK(out.gbar == core.gbar);
  }
}
