#include "pmg/linalg.hpp"

#include <gmp.h>

#include <cmath>
#include <limits>
#include <map>

namespace pmg {

std::string_view to_string(InverseVariant variant) {
  return variant == InverseVariant::minus_j ? "minus-j" : "plus-j";
}

InverseVariant parse_inverse_variant(std::string_view text) {
  if (text == "minus-j") return InverseVariant::minus_j;
  if (text == "plus-j") return InverseVariant::plus_j;
  throw Error(ErrorCode::BadParameter, "unknown inverse variant '" + std::string(text) + "'");
}

namespace {

template <class S>
S unit_roundoff() {
  if constexpr (std::is_same_v<S, double>) {
    return std::numeric_limits<double>::epsilon();
  } else {
    return pow(BigFloat(10), -static_cast<int>(BigFloat::default_precision()));
  }
}

template <class S>
bool near_zero(const S& x, const S& scale, double tolerance) {
  if constexpr (ScalarTraits<S>::exact) {
    return x == 0;
  } else {
    return abs_value(x) <= S(tolerance) * scale;
  }
}

}  // namespace

template <class S>
std::size_t LaplacianSystem<S>::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    if (ordering[i] == id) return i;
  }
  throw ValidationError(ErrorCode::UnknownVertex, std::string(id), "vertex '" + std::string(id) + "' not in system");
}

template <class S>
S LaplacianSystem<S>::resistance(std::size_t p, std::size_t q) const {
  if (p >= size() || q >= size()) {
    throw ValidationError(ErrorCode::UnknownVertex, "index", "vertex index out of range");
  }
  if (p == q) return S(0);
  const auto& P = pseudo_inverse;
  return P(p, p) - 2 * P(p, q) + P(q, q);
}

template <class S>
S LaplacianSystem<S>::resistance(std::string_view p, std::string_view q) const {
  return resistance(index_of(p), index_of(q));
}

template <class S>
LaplacianSystem<S> build_laplacian(const PMGraph& graph) {
  if (graph.vertex_count() < 2) {
    throw Error(ErrorCode::NotAdequate, "the discrete Laplacian needs at least two vertices");
  }
  if (graph.has_self_loops()) throw Error(ErrorCode::NotAdequate, "graph has a self-loop");
  if (graph.has_parallel_edges()) throw Error(ErrorCode::NotAdequate, "graph has parallel edges");

  const std::size_t n = graph.vertex_count();
  LaplacianSystem<S> sys;
  sys.ordering.reserve(n);
  for (const Vertex& v : graph.vertices()) sys.ordering.push_back(v.id);

  // Conductances are summed exactly and converted once per entry.
  std::vector<Rational> diagonal(n, Rational(0));
  sys.laplacian = DenseMatrix<S>(n, n);
  for (const Edge& e : graph.edges()) {
    Rational conductance = 1 / e.length;
    S off = from_rational<S>(Rational(-conductance));
    sys.laplacian(e.u, e.v) = off;
    sys.laplacian(e.v, e.u) = off;
    diagonal[e.u] += conductance;
    diagonal[e.v] += conductance;
  }
  for (std::size_t i = 0; i < n; ++i) sys.laplacian(i, i) = from_rational<S>(diagonal[i]);
  return sys;
}

DenseMatrix<Rational> invert_bareiss(const DenseMatrix<Rational>& a) {
  const std::size_t n = a.rows();
  if (!a.square()) throw Error(ErrorCode::BadParameter, "inverse of a non-square matrix");

  Integer scale = 1;
  for (const Rational& x : a.data()) {
    mpz_lcm(scale.backend().data(), scale.backend().data(), mp::denominator(x).backend().data());
  }

  // Augmented integer matrix [scale * A | I].
  const std::size_t width = 2 * n;
  std::vector<Integer> m(n * width, Integer(0));
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * width + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a(i, j);
      at(i, j) = mp::numerator(x) * (scale / mp::denominator(x));
    }
    at(i, n + i) = 1;
  }

  Integer previous = 1;
  Integer t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && at(pivot, k) == 0) ++pivot;
    if (pivot == n) throw NumericError(ErrorCode::SingularMatrix, "matrix is singular");
    if (pivot != k) {
      for (std::size_t j = 0; j < width; ++j) std::swap(at(pivot, j), at(k, j));
    }
    mpz_srcptr pk = at(k, k).backend().data();
    mpz_srcptr prev = previous.backend().data();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      mpz_srcptr ik = at(i, k).backend().data();
      // Left block columns before k are zero except the diagonal.
      auto update = [&](std::size_t j) {
        mpz_ptr ij = at(i, j).backend().data();
        mpz_mul(t.backend().data(), pk, ij);
        mpz_submul(t.backend().data(), ik, at(k, j).backend().data());
        mpz_divexact(ij, t.backend().data(), prev);
      };
      if (i < k) update(i);
      for (std::size_t j = k + 1; j < width; ++j) update(j);
      at(i, k) = 0;
    }
    previous = at(k, k);
  }

  // [d I | d A'^-1] with A' = scale * A, so A^-1 = scale * X / d.
  DenseMatrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = Rational(at(i, n + j) * scale, previous);
  }
  return inv;
}

template <class S>
DenseMatrix<S> invert_lu(DenseMatrix<S> a) {
  const std::size_t n = a.rows();
  if (!a.square()) throw Error(ErrorCode::BadParameter, "inverse of a non-square matrix");
  const S threshold = unit_roundoff<S>() * S(static_cast<double>(n)) * max_abs(a);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    S best = abs_value(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      S candidate = abs_value(a(i, k));
      if (best < candidate) {
        best = candidate;
        pivot = i;
      }
    }
    if (!(threshold < best)) throw NumericError(ErrorCode::SingularMatrix, "matrix is numerically singular");
    a.swap_rows(pivot, k);
    std::swap(perm[pivot], perm[k]);
    const S inv_pivot = S(1) / a(k, k);
    auto pivot_row = a.row(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      auto r = a.row(i);
      const S f = r[k] * inv_pivot;
      r[k] = f;
      if (f == S(0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) r[j] -= f * pivot_row[j];
    }
  }

  // Solve L U X = P.
  DenseMatrix<S> x(n, n);
  for (std::size_t i = 0; i < n; ++i) x(i, perm[i]) = S(1);
  for (std::size_t i = 1; i < n; ++i) {
    auto xi = x.row(i);
    for (std::size_t k = 0; k < i; ++k) {
      const S f = a(i, k);
      if (f == S(0)) continue;
      auto xk = x.row(k);
      for (std::size_t j = 0; j < n; ++j) xi[j] -= f * xk[j];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    auto xi = x.row(i);
    for (std::size_t k = i + 1; k < n; ++k) {
      const S f = a(i, k);
      if (f == S(0)) continue;
      auto xk = x.row(k);
      for (std::size_t j = 0; j < n; ++j) xi[j] -= f * xk[j];
    }
    const S inv_diag = S(1) / a(i, i);
    for (std::size_t j = 0; j < n; ++j) xi[j] *= inv_diag;
  }
  return x;
}

template <class S>
DenseMatrix<S> invert_cholesky(const DenseMatrix<S>& a) {
  const std::size_t n = a.rows();
  if (!a.square()) throw Error(ErrorCode::BadParameter, "inverse of a non-square matrix");
  const S threshold = unit_roundoff<S>() * S(static_cast<double>(n)) * max_abs(a);

  // Lower factor R with A = R R^T, stored in the lower triangle.
  DenseMatrix<S> r(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    S d = a(j, j);
    auto rj = r.row(j);
    for (std::size_t k = 0; k < j; ++k) d -= rj[k] * rj[k];
    if (!(threshold < d)) throw NumericError(ErrorCode::SingularMatrix, "matrix is not positive definite");
    using std::sqrt;
    const S root = sqrt(d);
    rj[j] = root;
    const S inv_root = S(1) / root;
    for (std::size_t i = j + 1; i < n; ++i) {
      auto ri = r.row(i);
      S s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= ri[k] * rj[k];
      ri[j] = s * inv_root;
    }
  }

  // W = R^-1 (lower triangular), then A^-1 = W^T W.
  DenseMatrix<S> w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto wi = w.row(i);
    wi[i] = S(1);
    for (std::size_t k = 0; k < i; ++k) {
      const S f = r(i, k);
      if (f == S(0)) continue;
      auto wk = w.row(k);
      for (std::size_t j = 0; j <= k; ++j) wi[j] -= f * wk[j];
    }
    const S inv_diag = S(1) / r(i, i);
    for (std::size_t j = 0; j <= i; ++j) wi[j] *= inv_diag;
  }
  DenseMatrix<S> inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto wk = w.row(k);
    for (std::size_t i = 0; i <= k; ++i) {
      const S f = wk[i];
      if (f == S(0)) continue;
      auto out = inv.row(i);
      for (std::size_t j = 0; j <= k; ++j) out[j] += f * wk[j];
    }
  }
  return inv;
}

namespace {

DenseMatrix<Rational> invert_any(const DenseMatrix<Rational>& a, InverseVariant) { return invert_bareiss(a); }

template <class S>
DenseMatrix<S> invert_any(const DenseMatrix<S>& a, InverseVariant variant) {
  return variant == InverseVariant::minus_j ? invert_lu(a) : invert_cholesky(a);
}

}  // namespace

template <class S>
DenseMatrix<S> pseudo_inverse(const DenseMatrix<S>& laplacian, InverseVariant variant) {
  const std::size_t n = laplacian.rows();
  if (n == 0 || !laplacian.square()) throw Error(ErrorCode::BadParameter, "Laplacian must be square and nonempty");
  const S shift = from_rational<S>(Rational(1, static_cast<long>(n)));
  const S sign = variant == InverseVariant::minus_j ? S(1) : S(-1);

  DenseMatrix<S> shifted = laplacian;
  shifted.add_constant(S(-sign * shift));
  DenseMatrix<S> result = invert_any(shifted, variant);
  result.add_constant(S(sign * shift));

  if constexpr (!ScalarTraits<S>::exact) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        S mean = (result(i, j) + result(j, i)) / 2;
        result(i, j) = mean;
        result(j, i) = mean;
      }
    }
  }
  return result;
}

template <class S>
LaplacianSystem<S> make_laplacian_system(const PMGraph& graph, InverseVariant variant) {
  LaplacianSystem<S> sys = build_laplacian<S>(graph);
  sys.pseudo_inverse = pseudo_inverse(sys.laplacian, variant);
  return sys;
}

template <class S>
std::optional<S> resistance_complement(const LaplacianSystem<S>& sys, std::string_view p, std::string_view q,
                                       const S& length, double tolerance) {
  const std::size_t i = sys.index_of(p);
  const std::size_t j = sys.index_of(q);
  const S expected = S(-1) / length;
  if (i == j || !near_zero(S(sys.laplacian(i, j) - expected), abs_value(expected), tolerance)) {
    throw Error(ErrorCode::UnknownEdge, "no edge " + std::string(p) + "-" + std::string(q) + " of that length");
  }
  const S r = sys.resistance(i, j);
  const S gap = length - r;
  if (near_zero(gap, length, tolerance) || gap < S(0)) return std::nullopt;
  return length * r / gap;
}

template <class S>
S PenroseResiduals<S>::max() const {
  S m = lpl;
  for (const S* x : {&plp, &lp_sym, &pl_sym, &centering}) {
    if (m < *x) m = *x;
  }
  return m;
}

template <class S>
PenroseResiduals<S> penrose_residuals(const DenseMatrix<S>& laplacian, const DenseMatrix<S>& pinv) {
  const DenseMatrix<S> lp = laplacian * pinv;
  const DenseMatrix<S> pl = pinv * laplacian;
  PenroseResiduals<S> res;
  res.lpl = max_abs(DenseMatrix<S>(lp * laplacian - laplacian));
  res.plp = max_abs(DenseMatrix<S>(pl * pinv - pinv));
  res.lp_sym = max_abs(DenseMatrix<S>(lp.transpose() - lp));
  res.pl_sym = max_abs(DenseMatrix<S>(pl.transpose() - pl));
  res.centering = S(0);
  for (std::size_t i = 0; i < pinv.rows(); ++i) {
    S sum(0);
    for (const S& x : pinv.row(i)) sum += x;
    if (res.centering < abs_value(sum)) res.centering = abs_value(sum);
  }
  return res;
}

template <class S>
S centering_residual(const DenseMatrix<S>& pinv) {
  S worst(0);
  for (std::size_t i = 0; i < pinv.rows(); ++i) {
    S sum(0);
    for (const S& x : pinv.row(i)) sum += x;
    if (worst < abs_value(sum)) worst = abs_value(sum);
  }
  const S scale = max_abs(pinv);
  return scale == S(0) ? worst : S(worst / scale);
}

#define PMG_INSTANTIATE_LINALG(S)                                                                          \
  template struct LaplacianSystem<S>;                                                                      \
  template struct PenroseResiduals<S>;                                                                     \
  template LaplacianSystem<S> build_laplacian<S>(const PMGraph&);                                          \
  template DenseMatrix<S> pseudo_inverse<S>(const DenseMatrix<S>&, InverseVariant);                        \
  template LaplacianSystem<S> make_laplacian_system<S>(const PMGraph&, InverseVariant);                    \
  template std::optional<S> resistance_complement<S>(const LaplacianSystem<S>&, std::string_view,          \
                                                     std::string_view, const S&, double);                  \
  template PenroseResiduals<S> penrose_residuals<S>(const DenseMatrix<S>&, const DenseMatrix<S>&);        \
  template S centering_residual<S>(const DenseMatrix<S>&);

PMG_INSTANTIATE_LINALG(Rational)
PMG_INSTANTIATE_LINALG(BigFloat)
PMG_INSTANTIATE_LINALG(double)

template DenseMatrix<BigFloat> invert_lu<BigFloat>(DenseMatrix<BigFloat>);
template DenseMatrix<double> invert_lu<double>(DenseMatrix<double>);
template DenseMatrix<BigFloat> invert_cholesky<BigFloat>(const DenseMatrix<BigFloat>&);
template DenseMatrix<double> invert_cholesky<double>(const DenseMatrix<double>&);

}  // namespace pmg
