#pragma once

// tau, theta and the derived invariants (epsilon, phi, lambda, Z) of a
// pm-graph, computed from its discrete Laplacian pseudo-inverse.

#include "pmg/graph.hpp"
#include "pmg/invariant_set.hpp"
#include "pmg/linalg.hpp"
#include "pmg/reduce.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pmg {

enum class MeasureKind { canonical, admissible };

std::string_view to_string(MeasureKind kind);

template <class S>
struct PointMass {
  std::string vertex;
  S mass;
};

/// Constant density coefficient of dx on one edge of the adequate graph.
template <class S>
struct EdgeDensity {
  std::size_t edge = 0;
  std::string u;
  std::string v;
  Rational length;
  S density;
};

template <class S>
struct MeasureReport {
  MeasureKind kind = MeasureKind::canonical;
  std::vector<PointMass<S>> point_masses;
  std::vector<EdgeDensity<S>> edge_densities;

  /// Sum of point masses plus density times length over all edges.
  S total_mass() const;
};

template <class S>
struct DerivedInvariants {
  S phi;
  S lambda;
  S epsilon;
  S z;
};

/// tau from L+ and the edge list of the adequate graph the system was built on.
template <class S>
S tau_constant(const LaplacianSystem<S>& sys, const PMGraph& graph);

/// theta from canonical weights w(p) = val(p) - 2 + 2 q(p) (in system order)
/// using the quadratic form in val(p) + 2 q(p). Throws ValidationError
/// (NonEffectiveCanonicalDivisor) for negative weights and Error(InvalidGenus)
/// when the weights do not sum to 2 gbar - 2.
template <class S>
S theta(const LaplacianSystem<S>& sys, const std::vector<long>& weights, long gbar);

/// theta of a graph with q = 0 everywhere, from its valences and genus.
/// Throws Error(NonzeroPolarization) otherwise.
template <class S>
S theta_simple(const LaplacianSystem<S>& sys, const PMGraph& graph);

/// theta = 2 v (r - 2)^2 tr(L+) for a simple r-regular graph. Throws
/// Error(NotRegular) or Error(NonzeroPolarization) outside that domain.
template <class S>
S theta_regular(const LaplacianSystem<S>& sys, const PMGraph& graph);

/// phi, lambda, epsilon, Z from tau, theta, total length and gbar.
template <class S>
DerivedInvariants<S> derived(const S& tau, const S& theta, const S& length, long gbar);

template <class S>
MeasureReport<S> canonical_measure(const LaplacianSystem<S>& sys, const PMGraph& graph);

template <class S>
MeasureReport<S> admissible_measure(const LaplacianSystem<S>& sys, const PMGraph& graph, long gbar);

/// Closed forms for a single vertex carrying self-loops of total length
/// `length`. Throws Error(InvalidGenus) if gbar < 1.
template <class S>
InvariantSet<S> bouquet_invariants(const S& length, long gbar, long g);

/// Folds removed self-loops back into invariants of the stripped graph.
/// Throws Error(GenusMismatch) when the ledger's gbar disagrees with core's.
template <class S>
InvariantSet<S> apply_corrections(const InvariantSet<S>& core, const CorrectionLedger& ledger);

struct ComputeOptions {
  LoopStrategy loop_strategy = LoopStrategy::analytic;
  InverseVariant inverse = InverseVariant::minus_j;
  /// Split point for parallel-edge subdivision.
  Rational split = Rational(1, 2);
  /// Relative tolerance for float residual checks; negative selects the
  /// mode default.
  double tolerance = -1.0;
  bool measures = false;
  /// Raise NumericError(PrecisionLoss) instead of recording a warning.
  bool strict = false;
};

template <class S>
struct ComputeResult {
  InvariantSet<S> invariants;
  ReducedGraph reduced;
  std::optional<MeasureReport<S>> canonical;
  std::optional<MeasureReport<S>> admissible;
  std::vector<std::string> warnings;
};

/// The whole pipeline: validate, reduce, build L and L+, tau, theta,
/// derived invariants, corrections. Measures refer to the adequate graph.
template <class S>
ComputeResult<S> compute_all(const PMGraph& graph, const ComputeOptions& options = {});

/// tau of any metrized graph (no polarization requirement).
template <class S>
S compute_tau(const PMGraph& graph, const ComputeOptions& options = {});

}  // namespace pmg
