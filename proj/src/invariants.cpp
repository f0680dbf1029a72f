#include "pmg/invariants.hpp"

#include <numeric>

namespace pmg {

std::string_view to_string(MeasureKind kind) {
  return kind == MeasureKind::canonical ? "canonical" : "admissible";
}

namespace {

template <class S>
S coefficient(long num, long den) {
  return from_rational<S>(Rational(num, den));
}

void require_genus(long gbar) {
  if (gbar < 1) throw Error(ErrorCode::InvalidGenus, "polarized genus must be at least 1, got " + std::to_string(gbar));
}

template <class S>
void require_same_layout(const LaplacianSystem<S>& sys, const PMGraph& graph) {
  if (sys.size() != graph.vertex_count() || sys.pseudo_inverse.rows() != sys.size()) {
    throw Error(ErrorCode::BadParameter, "Laplacian system does not match the graph");
  }
}

// sum_{p,q} u_p u_q l+_pq
template <class S>
S quadratic_form(const DenseMatrix<S>& pinv, const std::vector<long>& u) {
  S total(0);
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p] == 0) continue;
    S row(0);
    auto r = pinv.row(p);
    for (std::size_t q = 0; q < u.size(); ++q) {
      if (u[q] != 0) row += S(u[q]) * r[q];
    }
    total += S(u[p]) * row;
  }
  return total;
}

template <class S>
S edge_density(const LaplacianSystem<S>& sys, const Edge& e) {
  // -(l_pq + l_pq^2 r(p, q)), i.e. 1 / (L + R) for the edge.
  const S& l = sys.laplacian(e.u, e.v);
  return -(l + l * l * sys.resistance(e.u, e.v));
}

}  // namespace

template <class S>
S MeasureReport<S>::total_mass() const {
  S total(0);
  for (const auto& pm : point_masses) total += pm.mass;
  for (const auto& ed : edge_densities) total += ed.density * from_rational<S>(ed.length);
  return total;
}

template <class S>
S tau_constant(const LaplacianSystem<S>& sys, const PMGraph& graph) {
  require_same_layout(sys, graph);
  const auto& P = sys.pseudo_inverse;
  S first(0);
  S middle(0);
  for (const Edge& e : graph.edges()) {
    const S& l = sys.laplacian(e.u, e.v);
    const S t = S(1) / l + sys.resistance(e.u, e.v);
    first += l * t * t;
    const S d = P(e.u, e.u) - P(e.v, e.v);
    middle -= l * d * d;
  }
  const S v = S(static_cast<long>(sys.size()));
  return -first / 12 + middle / 4 + P.trace() / v;
}

template <class S>
S theta(const LaplacianSystem<S>& sys, const std::vector<long>& weights, long gbar) {
  if (weights.size() != sys.size()) throw Error(ErrorCode::BadParameterCount, "one canonical weight per vertex");
  std::vector<Violation> negative;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      negative.push_back({ErrorCode::NonEffectiveCanonicalDivisor, sys.ordering[i],
                          "canonical weight at " + sys.ordering[i] + " is " + std::to_string(weights[i])});
    }
  }
  if (!negative.empty()) throw ValidationError(std::move(negative));
  const long deg = std::accumulate(weights.begin(), weights.end(), 0L);
  if (deg != 2 * gbar - 2) {
    throw Error(ErrorCode::InvalidGenus, "canonical weights sum to " + std::to_string(deg) + ", expected 2*" +
                                             std::to_string(gbar) + "-2");
  }
  const auto& P = sys.pseudo_inverse;
  S diagonal(0);
  std::vector<long> u(weights.size());
  for (std::size_t p = 0; p < weights.size(); ++p) {
    if (weights[p] != 0) diagonal += S(weights[p]) * P(p, p);
    u[p] = weights[p] + 2;
  }
  return S(2 * (2 * gbar - 2)) * diagonal - 2 * quadratic_form(P, u);
}

template <class S>
S theta_simple(const LaplacianSystem<S>& sys, const PMGraph& graph) {
  require_same_layout(sys, graph);
  for (const Vertex& x : graph.vertices()) {
    if (x.q != 0) throw Error(ErrorCode::NonzeroPolarization, "q(" + x.id + ") is not zero");
  }
  const auto valences = graph.valences();
  const long g = genus(graph).g;
  const auto& P = sys.pseudo_inverse;
  S diagonal(0);
  for (std::size_t p = 0; p < valences.size(); ++p) diagonal += S(valences[p] - 2) * P(p, p);
  return S(2 * (2 * g - 2)) * diagonal - 2 * quadratic_form(P, valences);
}

template <class S>
S theta_regular(const LaplacianSystem<S>& sys, const PMGraph& graph) {
  require_same_layout(sys, graph);
  for (const Vertex& x : graph.vertices()) {
    if (x.q != 0) throw Error(ErrorCode::NonzeroPolarization, "q(" + x.id + ") is not zero");
  }
  const auto valences = graph.valences();
  const long r = valences.front();
  for (long val : valences) {
    if (val != r) throw Error(ErrorCode::NotRegular, "graph is not regular");
  }
  const long v = static_cast<long>(sys.size());
  return S(2 * v * (r - 2) * (r - 2)) * sys.pseudo_inverse.trace();
}

template <class S>
DerivedInvariants<S> derived(const S& tau, const S& theta, const S& length, long gbar) {
  require_genus(gbar);
  const long g = gbar;
  DerivedInvariants<S> out;
  out.phi = coefficient<S>(5 * g - 2, g) * tau + coefficient<S>(1, 4 * g) * theta - length / 4;
  out.z = coefficient<S>(2 * g - 1, g * g) * tau + coefficient<S>(1, 8 * g * g) * theta;
  out.lambda = coefficient<S>(3 * g - 3, 4 * g + 2) * tau + coefficient<S>(1, 16 * g + 8) * theta +
               coefficient<S>(g + 1, 16 * g + 8) * length;
  out.epsilon = coefficient<S>(4 * g - 4, g) * tau + coefficient<S>(1, 2 * g) * theta;
  return out;
}

template <class S>
MeasureReport<S> canonical_measure(const LaplacianSystem<S>& sys, const PMGraph& graph) {
  require_same_layout(sys, graph);
  MeasureReport<S> out;
  out.kind = MeasureKind::canonical;
  const auto valences = graph.valences();
  for (std::size_t p = 0; p < graph.vertex_count(); ++p) {
    out.point_masses.push_back({graph.vertex(p).id, from_rational<S>(Rational(2 - valences[p], 2))});
  }
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edge(i);
    out.edge_densities.push_back(
        {i, graph.vertex(e.u).id, graph.vertex(e.v).id, e.length, edge_density(sys, e)});
  }
  return out;
}

template <class S>
MeasureReport<S> admissible_measure(const LaplacianSystem<S>& sys, const PMGraph& graph, long gbar) {
  require_same_layout(sys, graph);
  require_genus(gbar);
  MeasureReport<S> out;
  out.kind = MeasureKind::admissible;
  const S inv_gbar = coefficient<S>(1, gbar);
  for (const Vertex& x : graph.vertices()) {
    out.point_masses.push_back({x.id, coefficient<S>(x.q, gbar)});
  }
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edge(i);
    out.edge_densities.push_back(
        {i, graph.vertex(e.u).id, graph.vertex(e.v).id, e.length, inv_gbar * edge_density(sys, e)});
  }
  return out;
}

template <class S>
InvariantSet<S> bouquet_invariants(const S& length, long gbar, long g) {
  require_genus(gbar);
  if (!(S(0) < length)) throw Error(ErrorCode::BadParameter, "bouquet length must be positive");
  InvariantSet<S> out;
  out.length = length;
  out.g = g;
  out.gbar = gbar;
  out.tau = length / 12;
  out.theta = S(0);
  out.phi = coefficient<S>(gbar - 1, 6 * gbar) * length;
  out.z = coefficient<S>(2 * gbar - 1, 12 * gbar * gbar) * length;
  out.lambda = coefficient<S>(gbar, 8 * gbar + 4) * length;
  out.epsilon = coefficient<S>(gbar - 1, 3 * gbar) * length;
  return out;
}

template <class S>
InvariantSet<S> apply_corrections(const InvariantSet<S>& core, const CorrectionLedger& ledger) {
  if (ledger.empty()) return core;
  if (ledger.gbar != core.gbar) {
    throw Error(ErrorCode::GenusMismatch, "ledger gbar " + std::to_string(ledger.gbar) + " differs from core gbar " +
                                              std::to_string(core.gbar));
  }
  require_genus(core.gbar);
  const long g = core.gbar;
  const Rational& loops = ledger.loop_length_total;
  InvariantSet<S> out = core;
  out.length += from_rational<S>(loops);
  out.g += ledger.loops_removed();
  out.tau += from_rational<S>(loops / 12);
  out.phi += from_rational<S>(Rational(g - 1, 6 * g) * loops);
  out.z += from_rational<S>(Rational(2 * g - 1, 12 * g * g) * loops);
  out.lambda += from_rational<S>(Rational(g, 8 * g + 4) * loops);
  out.epsilon += from_rational<S>(Rational(g - 1, 3 * g) * loops);
  return out;
}

namespace {

template <class S>
double effective_tolerance(const ComputeOptions& options) {
  return options.tolerance >= 0 ? options.tolerance : ScalarTraits<S>::default_tolerance();
}

// The single vertex left after stripping a bouquet carries all the mass.
template <class S>
MeasureReport<S> point_measure(const PMGraph& core, MeasureKind kind) {
  MeasureReport<S> out;
  out.kind = kind;
  out.point_masses.push_back({core.vertex(0).id, S(1)});
  return out;
}

template <class S>
void check_residual(const LaplacianSystem<S>& sys, const ComputeOptions& options, std::vector<std::string>& warnings) {
  if constexpr (!ScalarTraits<S>::exact) {
    const double tol = effective_tolerance<S>(options);
    const S residual = centering_residual(sys.pseudo_inverse);
    if (S(tol) < residual) {
      std::string message = "PrecisionLoss: pseudo-inverse row sums reach " + format_scalar(residual, 3) +
                            " relative to its entries (tolerance " + format_scalar(S(tol), 3) + ")";
      if (options.strict) throw NumericError(ErrorCode::PrecisionLoss, message);
      warnings.push_back(std::move(message));
    }
  }
}

}  // namespace

template <class S>
ComputeResult<S> compute_all(const PMGraph& graph, const ComputeOptions& options) {
  require_valid(graph, true);
  const GenusData gd = genus(graph);
  ComputeResult<S> result;
  result.reduced = reduce_to_adequate(graph, options.loop_strategy, options.split);
  const PMGraph& core = result.reduced.graph;
  const CorrectionLedger& ledger = result.reduced.ledger;

  if (ledger.bouquet_flag) {
    result.invariants = bouquet_invariants<S>(from_rational<S>(ledger.loop_length_total), gd.gbar, gd.g);
    if (options.measures) {
      result.canonical = point_measure<S>(core, MeasureKind::canonical);
      result.admissible = point_measure<S>(core, MeasureKind::admissible);
    }
    return result;
  }

  const auto sys = make_laplacian_system<S>(core, options.inverse);
  check_residual(sys, options, result.warnings);

  const GenusData core_genus = genus(core);
  InvariantSet<S> base;
  base.length = from_rational<S>(total_length(core));
  base.g = core_genus.g;
  base.gbar = core_genus.gbar;
  base.tau = tau_constant(sys, core);
  base.theta = theta(sys, canonical_weights(core), core_genus.gbar);
  const auto d = derived(base.tau, base.theta, base.length, base.gbar);
  base.phi = d.phi;
  base.lambda = d.lambda;
  base.epsilon = d.epsilon;
  base.z = d.z;

  result.invariants = apply_corrections(base, ledger);
  if (options.measures) {
    result.canonical = canonical_measure(sys, core);
    result.admissible = admissible_measure(sys, core, core_genus.gbar);
  }
  return result;
}

template <class S>
S compute_tau(const PMGraph& graph, const ComputeOptions& options) {
  require_valid(graph, false);
  ReducedGraph reduced = reduce_to_adequate(graph, options.loop_strategy, options.split);
  const S loops = from_rational<S>(reduced.ledger.loop_length_total / 12);
  if (reduced.ledger.bouquet_flag) return loops;
  const auto sys = make_laplacian_system<S>(reduced.graph, options.inverse);
  return tau_constant(sys, reduced.graph) + loops;
}

#define PMG_INSTANTIATE_INVARIANTS(S)                                                               \
  template struct MeasureReport<S>;                                                                 \
  template S tau_constant<S>(const LaplacianSystem<S>&, const PMGraph&);                            \
  template S theta<S>(const LaplacianSystem<S>&, const std::vector<long>&, long);                  \
  template S theta_simple<S>(const LaplacianSystem<S>&, const PMGraph&);                            \
  template S theta_regular<S>(const LaplacianSystem<S>&, const PMGraph&);                           \
  template DerivedInvariants<S> derived<S>(const S&, const S&, const S&, long);                     \
  template MeasureReport<S> canonical_measure<S>(const LaplacianSystem<S>&, const PMGraph&);        \
  template MeasureReport<S> admissible_measure<S>(const LaplacianSystem<S>&, const PMGraph&, long); \
  template InvariantSet<S> bouquet_invariants<S>(const S&, long, long);                             \
  template InvariantSet<S> apply_corrections<S>(const InvariantSet<S>&, const CorrectionLedger&);   \
  template ComputeResult<S> compute_all<S>(const PMGraph&, const ComputeOptions&);                  \
  template S compute_tau<S>(const PMGraph&, const ComputeOptions&);

PMG_INSTANTIATE_INVARIANTS(Rational)
PMG_INSTANTIATE_INVARIANTS(BigFloat)
PMG_INSTANTIATE_INVARIANTS(double)

}  // namespace pmg
