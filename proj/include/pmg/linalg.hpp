#pragma once

// Discrete Laplacian assembly and its Moore-Penrose pseudo-inverse,
//   L+ = (L - J/v)^-1 + J/v,
// together with effective resistance r(p, q) = l+_pp - 2 l+_pq + l+_qq.

#include "pmg/graph.hpp"
#include "pmg/matrix.hpp"
#include "pmg/scalar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pmg {

enum class InverseVariant {
  /// (L - J/v)^-1 + J/v. LU with partial pivoting in float modes.
  minus_j,
  /// (L + J/v)^-1 - J/v. Cholesky in float modes.
  plus_j,
};

std::string_view to_string(InverseVariant variant);
InverseVariant parse_inverse_variant(std::string_view text);

template <class S>
struct LaplacianSystem {
  std::vector<std::string> ordering;
  DenseMatrix<S> laplacian;
  DenseMatrix<S> pseudo_inverse;

  std::size_t size() const noexcept { return ordering.size(); }
  std::size_t index_of(std::string_view id) const;

  S resistance(std::size_t p, std::size_t q) const;
  S resistance(std::string_view p, std::string_view q) const;
};

/// L of an adequate graph with v >= 2. Leaves pseudo_inverse empty.
/// Throws Error(NotAdequate) for self-loops, parallel edges or v < 2.
template <class S>
LaplacianSystem<S> build_laplacian(const PMGraph& graph);

/// Throws NumericError(SingularMatrix) when the shifted matrix cannot be
/// inverted, which means a disconnected graph slipped through.
template <class S>
DenseMatrix<S> pseudo_inverse(const DenseMatrix<S>& laplacian, InverseVariant variant = InverseVariant::minus_j);

/// build_laplacian followed by pseudo_inverse.
template <class S>
LaplacianSystem<S> make_laplacian_system(const PMGraph& graph, InverseVariant variant = InverseVariant::minus_j);

/// Resistance between the ends of edge (p, q, length) once the edge's interior
/// is deleted: R = L r / (L - r). Empty when the edge is a bridge. Throws
/// Error(UnknownEdge) when sys has no such edge.
template <class S>
std::optional<S> resistance_complement(const LaplacianSystem<S>& sys, std::string_view p, std::string_view q,
                                       const S& length, double tolerance = 0.0);

/// Inverse of a nonsingular rational matrix by fraction-free Gauss-Jordan
/// elimination on the integer matrix obtained by clearing denominators.
DenseMatrix<Rational> invert_bareiss(const DenseMatrix<Rational>& a);

/// Inverse by LU with partial pivoting.
template <class S>
DenseMatrix<S> invert_lu(DenseMatrix<S> a);

/// Inverse of a symmetric positive-definite matrix by Cholesky.
template <class S>
DenseMatrix<S> invert_cholesky(const DenseMatrix<S>& a);

template <class S>
struct PenroseResiduals {
  S lpl;      // |L L+ L - L|
  S plp;      // |L+ L L+ - L+|
  S lp_sym;   // |(L L+)^T - L L+|
  S pl_sym;   // |(L+ L)^T - L+ L|
  S centering;  // largest row sum of L+

  S max() const;
};

/// Max-norm residuals of the four Penrose identities and of double centering.
template <class S>
PenroseResiduals<S> penrose_residuals(const DenseMatrix<S>& laplacian, const DenseMatrix<S>& pinv);

/// Largest |row sum| of L+ relative to its largest entry. O(v^2).
template <class S>
S centering_residual(const DenseMatrix<S>& pinv);

}  // namespace pmg
