#include <doctest.h>

#include "oracles.hpp"

#include "pmg/families.hpp"

using oracle::rat;
using pmg::Rational;

TEST_CASE("expression evaluator") {
  CHECK(oracle::evaluate("1 + 2*3", {}) == 7);
  CHECK(oracle::evaluate("(1 + 2)3", {}) == 9);
  CHECK(oracle::evaluate("2^10 - 1", {}) == 1023);
  CHECK(oracle::evaluate("-3 + 5", {}) == 2);
  CHECK(oracle::evaluate("5/96", {}) == Rational(5, 96));
  CHECK(oracle::evaluate("ab + 2c", {{"a", 2}, {"b", 3}, {"c", Rational(1, 2)}}) == 7);
  CHECK(oracle::evaluate("(1 + 2k)^2", {{"k", 3}}) == 49);
  CHECK(oracle::evaluate("3L/28 + A/(28C)", {{"L", 1}, {"A", 2}, {"C", 4}}) == Rational(1, 8));
  CHECK_THROWS(oracle::evaluate("x + 1", {}));
  CHECK_THROWS(oracle::evaluate("(1 + 2", {}));
  CHECK_THROWS(oracle::evaluate("1/0", {}));
}

TEST_CASE("rational literals") {
  CHECK(rat("-7/21") == Rational(-1, 3));
  CHECK(rat("12") == 12);
}

TEST_CASE("linear solve and inverse") {
  std::vector<std::vector<Rational>> a{{2, 1}, {1, 3}};
  auto x = oracle::solve(a, {3, 5});
  CHECK(x[0] == Rational(4, 5));
  CHECK(x[1] == Rational(7, 5));
  auto inv = oracle::gauss_jordan_inverse(a);
  CHECK(inv[0][0] == Rational(3, 5));
  CHECK(inv[0][1] == Rational(-1, 5));
  CHECK(inv[1][1] == Rational(2, 5));
}

TEST_CASE("grounded resistances") {
  auto k4 = pmg::families::complete_graph_uniform(4, Rational(1, 6));
  auto r = oracle::resistance_matrix(k4);
  CHECK(r[0][1] == Rational(1, 12));
  CHECK(r[2][2] == 0);
  auto ladder = pmg::families::ladder(2, 1, 1);
  CHECK(oracle::grounded_resistance(ladder, 0, 1) == Rational(3, 4));
  auto cl = oracle::conductance_laplacian(pmg::families::complete_graph(2, {Rational(2)}));
  CHECK(cl[0][0] == Rational(1, 2));
  CHECK(cl[0][1] == Rational(-1, 2));
}

TEST_CASE("theta by definition") {
  CHECK(oracle::theta_by_definition(pmg::families::complete_graph_uniform(4, Rational(1, 6))) == 1);
  CHECK(oracle::theta_by_definition(pmg::families::complete_graph_uniform(4, Rational(1, 6), 2)) == 25);
}

TEST_CASE("random graphs") {
  std::mt19937_64 rng(7);
  oracle::RandomGraphOptions options;
  for (int i = 0; i < 50; ++i) {
    auto g = oracle::random_graph(rng, options);
    CHECK(g.vertex_count() >= options.min_vertices);
    CHECK(g.vertex_count() <= options.max_vertices);
    CHECK(g.is_adequate());
    CHECK(pmg::validate(g, true).ok());
  }
  for (int i = 0; i < 50; ++i) {
    Rational len = oracle::random_length(rng, 7, 5);
    CHECK(len > 0);
    CHECK(len <= 7);
  }
}
