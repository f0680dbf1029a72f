// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Run with a criterion id (e.g. "AC3") to run only that one.

#include "oracles.hpp"
#include "properties.hpp"
#include "reference.hpp"

#include "pmg/families.hpp"
#include "pmg/invariants.hpp"
#include "pmg/linalg.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using pmg::Rational;
using Vars = std::map<std::string, Rational>;

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes.push_back(what);
    }
  }
};

template <class S>
std::array<S, 6> six(const pmg::InvariantSet<S>& inv) {
  return {inv.tau, inv.theta, inv.phi, inv.lambda, inv.epsilon, inv.z};
}

std::string str(const Rational& r) { return pmg::to_string(r); }

void expect_equal(Check& c, const std::string& where, std::string_view name, const Rational& got,
                  const Rational& want) {
  c.expect(got == want, where + " " + std::string(name) + ": got " + str(got) + ", want " + str(want));
}

Check ac1() {
  Check c;
  for (long k = 0; k <= 3; ++k) {
    auto inv = pmg::compute_all<Rational>(pmg::families::complete_graph_uniform(4, Rational(1, 6), k)).invariants;
    const std::string where = "k=" + std::to_string(k);
    c.expect(inv.length == 1 && inv.g == 3 && inv.gbar == 3 + 4 * k, where + ": length/genus");
    auto got = six(inv);
    for (std::size_t i = 0; i < 6; ++i) {
      expect_equal(c, where, reference::kNames[i], got[i], oracle::evaluate(reference::kK4Uniform[i], {{"k", k}}));
      if (k == 0) expect_equal(c, where, reference::kNames[i], got[i], oracle::rat(reference::kK4UniformAtZero[i]));
    }
  }
  return c;
}

Check ac2() {
  Check c;
  auto g = pmg::families::complete_graph_uniform(4, Rational(1, 6), 0);
  auto sys = pmg::build_laplacian<Rational>(g);
  auto pinv = pmg::pseudo_inverse(sys.laplacian);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      Rational want_l = i == j ? Rational(18) : Rational(-6);
      Rational want_p = i == j ? Rational(1, 32) : Rational(-1, 96);
      expect_equal(c, "L" + at, "", sys.laplacian(i, j), want_l);
      expect_equal(c, "L+" + at, "", pinv(i, j), want_p);
    }
  }
  return c;
}

Check ac3() {
  Check c;
  for (const auto& row : reference::kLadderExact) {
    auto inv = pmg::compute_all<Rational>(pmg::families::ladder(row.n, 1, 1)).invariants;
    auto got = six(inv);
    for (std::size_t i = 0; i < 6; ++i) {
      expect_equal(c, "n=" + std::to_string(row.n), reference::kNames[i], got[i] / inv.length,
                   oracle::rat(row.ratios[i]));
    }
  }
  return c;
}

Check ac4() {
  Check c;
  const std::pair<Rational, Rational> params[] = {{1, 1}, {2, 3}, {Rational(1, 2), Rational(1, 3)}};
  for (long n = 2; n <= 5; ++n) {
    for (const auto& [a, b] : params) {
      Vars vars{{"a", a}, {"b", b}};
      auto inv = pmg::compute_all<Rational>(pmg::families::ladder(n, a, b)).invariants;
      const std::string where = "n=" + std::to_string(n) + " a=" + str(a) + " b=" + str(b);
      c.expect(inv.length == 2 * (n - 1) * a + n * b && inv.g == n - 1, where + ": length/genus");
      auto got = six(inv);
      for (std::size_t i = 0; i < 6; ++i) {
        expect_equal(c, where, reference::kNames[i], got[i] / inv.length,
                     oracle::evaluate(reference::kLadderRatios[static_cast<std::size_t>(n - 2)][i], vars));
      }
    }
  }
  return c;
}

Check ac5() {
  Check c;
  Vars vars;
  std::vector<Rational> lengths;
  const char* names[] = {"a", "b", "c", "d", "e", "f"};
  for (int i = 0; i < 6; ++i) {
    vars[names[i]] = i + 1;
    lengths.push_back(Rational(1, i + 1));
  }
  vars["A"] = oracle::evaluate(reference::kK4GeneralA, vars);
  vars["B"] = oracle::evaluate(reference::kK4GeneralB, vars);
  vars["C"] = oracle::evaluate(reference::kK4GeneralC, vars);
  vars["L"] = oracle::evaluate(reference::kK4GeneralLength, vars);
  auto inv = pmg::compute_all<Rational>(pmg::families::complete_graph(4, lengths)).invariants;
  expect_equal(c, "", "length", inv.length, vars["L"]);
  auto got = six(inv);
  for (std::size_t i = 0; i < 6; ++i) {
    expect_equal(c, "", reference::kNames[i], got[i], oracle::evaluate(reference::kK4General[i], vars));
  }
  return c;
}

Check ac6() {
  Check c;
  auto graph = pmg::families::example3(1, 1, 1, 1, 1);
  pmg::ComputeOptions subdivide;
  subdivide.loop_strategy = pmg::LoopStrategy::subdivide;
  auto analytic = pmg::compute_all<Rational>(graph).invariants;
  auto sub = pmg::compute_all<Rational>(graph, subdivide).invariants;
  c.expect(analytic.length == 8 && analytic.g == 2 && analytic.gbar == 12, "length/genus");
  c.expect(analytic == sub, "analytic and subdivide strategies differ");
  auto got = six(analytic);
  Vars unit{{"a", 1}, {"b", 1}, {"c", 1}, {"A", 2}};
  for (std::size_t i = 0; i < 6; ++i) {
    expect_equal(c, "unit", reference::kNames[i], got[i], oracle::rat(reference::kExample3Unit[i]));
    expect_equal(c, "unit closed form", reference::kNames[i], oracle::evaluate(reference::kExample3[i], unit),
                 oracle::rat(reference::kExample3Unit[i]));
  }
  return c;
}

Check ac7() {
  Check c;
  for (const auto& row : reference::kLadderMachine) {
    auto inv = pmg::compute_all<double>(pmg::families::ladder(row.n, 1, 1)).invariants;
    auto got = six(inv);
    for (std::size_t i = 0; i < 6; ++i) {
      const double ratio = got[i] / inv.length;
      const double want = row.ratios[i];
      const bool ok = i == 0 ? std::abs(ratio - want) <= 1e-7 : std::abs(ratio - want) <= 1e-5 * std::abs(want);
      std::ostringstream msg;
      msg << std::setprecision(12) << "n=" << row.n << " " << reference::kNames[i] << "/length: got " << ratio
          << ", want " << want;
      c.expect(ok, msg.str());
    }
  }
  return c;
}

Check ac8() {
  Check c;
  const std::pair<const char*, std::function<properties::Outcome()>> suites[] = {
      {"penrose", [] { return properties::penrose(1001, 200, 12); }},
      {"resistance", [] { return properties::resistance_oracle(1002, 60, 8); }},
      {"theta-definition", [] { return properties::theta_definition(1003, 60, 8); }},
      {"theta-specializations", [] { return properties::theta_specializations(1004, 40); }},
      {"measures", [] { return properties::measures(1005, 60, 9); }},
      {"presentation-invariance", [] { return properties::presentation_invariance(1006, 40, 7); }},
      {"tau-additivity", [] { return properties::tau_additivity(1007, 30); }},
      {"machine-vs-exact", [] { return properties::machine_vs_exact(1008, 24, 100, 1e-9); }},
  };
  for (const auto& [name, run] : suites) {
    properties::Outcome o = run();
    std::cout << "     " << std::left << std::setw(24) << name << (o.ok() ? "ok   " : "FAIL ") << o.summary() << "\n";
    c.expect(o.ok(), std::string(name) + ": " + o.summary());
  }
  return c;
}

struct Criterion {
  const char* id;
  const char* title;
  double max_seconds;
  Check (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion criteria[] = {
      {"AC1", "complete graph K4, all edges 1/6, q = k for k = 0..3", 1.0, ac1},
      {"AC2", "Laplacian and pseudo-inverse of K4 entry-for-entry", 0.0, ac2},
      {"AC3", "ladder L_n(1,1) exact ratios, n = 5, 10, 15, 20", 10.0, ac3},
      {"AC4", "ladder closed forms, n = 2..5, three (a, b) points", 0.0, ac4},
      {"AC5", "K4 with lengths 1/1..1/6 against the A, B, C closed forms", 0.0, ac5},
      {"AC6", "loop/parallel/pendant fixture at unit lengths, both loop strategies", 0.0, ac6},
      {"AC7", "machine arithmetic, L_500 and L_1000", 120.0, ac7},
      {"AC8", "property suites", 0.0, ac8},
  };
  const std::string only = argc > 1 ? argv[1] : "";
  int failures = 0;
  for (const auto& crit : criteria) {
    if (!only.empty() && only != crit.id) continue;
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = crit.run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("threw: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.max_seconds > 0 && seconds > crit.max_seconds) {
      std::ostringstream msg;
      msg << "took " << seconds << " s, limit " << crit.max_seconds << " s";
      c.expect(false, msg.str());
    }
    std::cout << crit.id << " " << (c.ok ? "PASS" : "FAIL") << "  " << crit.title << "  (" << std::fixed
              << std::setprecision(2) << seconds << " s)\n"
              << std::defaultfloat;
    for (std::size_t i = 0; i < c.notes.size() && i < 12; ++i) std::cout << "     " << c.notes[i] << "\n";
    if (c.notes.size() > 12) std::cout << "     ... " << c.notes.size() - 12 << " more\n";
    if (!c.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
