#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <vector>

#include "sojred/exact.hpp"

namespace sojred {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RealMatrix = Mat<Real>;
using RealVector = Vec<Real>;
using ComplexMatrix = Mat<Cplx>;

template <class R>
Mat<R> to_real_matrix(const IntMatrix& M) {
  Mat<R> A(M.dim(), M.dim());
  for (int i = 0; i < M.dim(); ++i)
    for (int j = 0; j < M.dim(); ++j) A(i, j) = ScalarTraits<R>::from_bigint(M(i, j));
  return A;
}

template <class R>
Mat<ComplexOf<R>> to_complex_matrix(const IntMatrix& M) {
  Mat<ComplexOf<R>> A(M.dim(), M.dim());
  for (int i = 0; i < M.dim(); ++i)
    for (int j = 0; j < M.dim(); ++j)
      A(i, j) = ComplexOf<R>(ScalarTraits<R>::from_bigint(M(i, j)));
  return A;
}

namespace detail {

template <class C>
auto cabs(const C& z) {
  using std::abs;
  return abs(z);
}

template <class C>
C cconj(const C& z) {
  using std::conj;
  return conj(z);
}

/// Backward error |f(z)| / sum_k |a_k| |z|^k of a candidate root.
template <class R>
R poly_backward_error(const std::vector<BigInt>& a, const ComplexOf<R>& z) {
  using C = ComplexOf<R>;
  C val(R(0));
  R scale(0);
  const R az = cabs(z);
  for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
    val = val * z + C(ScalarTraits<R>::from_bigint(a[static_cast<size_t>(k)]));
    scale = scale * az + R(abs(a[static_cast<size_t>(k)]).template convert_to<double>());
  }
  const R v = cabs(val);
  if (v == R(0)) return R(0);
  return v / scale;
}

/// Simultaneous (Aberth-Ehrlich) iteration on a monic integer polynomial.
/// No deflation: all roots are refined together, which keeps conjugate
/// symmetry and uniform accuracy. Throws NonConvergence at the sweep cap.
template <class R>
std::vector<ComplexOf<R>> aberth_roots(const std::vector<BigInt>& a, R tol, int max_sweeps) {
  using C = ComplexOf<R>;
  using std::cos;
  using std::sin;
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1) return {};

  R radius(1);
  for (int k = 0; k < n; ++k) {
    R m = R(abs(a[static_cast<size_t>(k)]).template convert_to<double>());
    if (m + R(1) > radius) radius = m + R(1);
  }
  const R pi = R(3.14159265358979323846264338328L);
  const C centroid = C(ScalarTraits<R>::from_bigint(-a[static_cast<size_t>(n - 1)])) / C(R(n));

  std::vector<C> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    // Slight angular offset so the start is not a root-of-unity pattern.
    R theta = R(2) * pi * R(k) / R(n) + R(0.43L);
    z[static_cast<size_t>(k)] =
        centroid + ScalarTraits<R>::make_complex(radius * cos(theta), radius * sin(theta));
  }

  std::vector<C> coeff(a.size());
  for (size_t k = 0; k < a.size(); ++k) coeff[k] = C(ScalarTraits<R>::from_bigint(a[k]));

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool all_ok = true;
    for (int k = 0; k < n; ++k) {
      C& zk = z[static_cast<size_t>(k)];
      C p(R(0)), dp(R(0));
      for (int j = n; j >= 0; --j) {
        dp = dp * zk + p;
        p = p * zk + coeff[static_cast<size_t>(j)];
      }
      if (poly_backward_error<R>(a, zk) <= tol) continue;
      all_ok = false;
      if (cabs(dp) == R(0)) {
        zk += C(scalar_eps<R>() + R(1e-3L));
        continue;
      }
      C w = p / dp;
      C rep(R(0));
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        C d = zk - z[static_cast<size_t>(j)];
        if (cabs(d) == R(0)) d = C(scalar_eps<R>());
        rep += C(R(1)) / d;
      }
      C denom = C(R(1)) - w * rep;
      zk -= (cabs(denom) == R(0)) ? w : w / denom;
    }
    if (all_ok) return z;
  }
  for (int k = 0; k < n; ++k)
    if (poly_backward_error<R>(a, z[static_cast<size_t>(k)]) > tol)
      throw NonConvergence("poly_roots: Aberth iteration hit the sweep cap");
  return z;
}

/// Close the root set under conjugation: definite conjugate partners are
/// averaged into exact pairs, and roots whose imaginary part is pure noise
/// (projecting it away keeps the backward error within tol) are made real.
template <class R>
void enforce_conjugate_closure(const std::vector<BigInt>& a, std::vector<ComplexOf<R>>& z,
                               R tol) {
  using C = ComplexOf<R>;
  const int n = static_cast<int>(z.size());
  std::vector<bool> done(static_cast<size_t>(n), false);

  std::vector<int> order(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) order[static_cast<size_t>(k)] = k;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return cabs(z[static_cast<size_t>(i)].imag()) > cabs(z[static_cast<size_t>(j)].imag());
  });

  for (int k : order) {
    if (done[static_cast<size_t>(k)]) continue;
    C zk = z[static_cast<size_t>(k)];
    C zk_real(zk.real());
    if (poly_backward_error<R>(a, zk_real) <= tol) {
      z[static_cast<size_t>(k)] = zk_real;
      done[static_cast<size_t>(k)] = true;
      continue;
    }
    int best = -1;
    R best_d(0);
    for (int j = 0; j < n; ++j) {
      if (j == k || done[static_cast<size_t>(j)]) continue;
      R d = cabs(cconj(zk) - z[static_cast<size_t>(j)]);
      if (best < 0 || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best >= 0 && best_d <= R(1e-3L) * (R(1) + cabs(zk))) {
      C avg = (zk + cconj(z[static_cast<size_t>(best)])) / C(R(2));
      z[static_cast<size_t>(k)] = avg;
      z[static_cast<size_t>(best)] = cconj(avg);
      done[static_cast<size_t>(k)] = done[static_cast<size_t>(best)] = true;
    } else {
      done[static_cast<size_t>(k)] = true;
    }
  }

  std::sort(z.begin(), z.end(), [](const C& x, const C& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
}

template <class R>
std::vector<ComplexOf<R>> poly_roots_impl(const IntPolynomial& f, R tol, int max_sweeps) {
  if (discriminant(f) == 0)
    throw RepeatedRoots("poly_roots: polynomial has repeated roots");
  auto z = aberth_roots<R>(f.coeffs(), tol, max_sweeps);
  enforce_conjugate_closure<R>(f.coeffs(), z, tol);
  for (const auto& r : z)
    if (poly_backward_error<R>(f.coeffs(), r) > tol)
      throw NonConvergence("poly_roots: backward error above tolerance");
  return z;
}

/// Kernel vector of (T - lambda I), unit Euclidean norm. The rank decision
/// threshold is widened until exactly the smallest pivot drops out.
template <class R>
Vec<ComplexOf<R>> eigenvector_for(const Mat<ComplexOf<R>>& Tc, const ComplexOf<R>& lambda) {
  using C = ComplexOf<R>;
  const int n = static_cast<int>(Tc.rows());
  Mat<C> M = Tc;
  for (int i = 0; i < n; ++i) M(i, i) -= lambda;

  Eigen::FullPivLU<Mat<C>> lu(M);
  if (lu.rank() == n) {
    R minp(0), maxp(0);
    for (int i = 0; i < n; ++i) {
      R p = cabs(C(lu.matrixLU()(i, i)));
      if (i == 0 || p < minp) minp = p;
      if (p > maxp) maxp = p;
    }
    R thr = (maxp > R(0)) ? (minp / maxp) * R(2) : R(1);
    for (int tries = 0; tries < 8 && lu.rank() == n; ++tries) {
      lu.setThreshold(thr);
      thr *= R(16);
    }
  }
  Mat<C> ker = lu.kernel();
  Vec<C> v = ker.col(0);
  R norm2(0);
  for (int i = 0; i < n; ++i) norm2 += v(i).real() * v(i).real() + v(i).imag() * v(i).imag();
  using std::sqrt;
  R norm = sqrt(norm2);
  if (norm == R(0)) throw NonConvergence("eig_pairs: zero kernel vector");
  for (int i = 0; i < n; ++i) v(i) /= C(norm);
  return v;
}

template <class R>
struct EigResult {
  std::vector<ComplexOf<R>> values;
  Mat<ComplexOf<R>> vectors;
};

template <class R>
EigResult<R> eig_pairs_impl(const IntMatrix& T, R root_tol, R residual_tol, int max_sweeps) {
  using C = ComplexOf<R>;
  const int n = T.dim();
  IntPolynomial f = char_poly(T);
  if (discriminant(f) == 0) throw RepeatedRoots("eig_pairs: repeated eigenvalues");

  EigResult<R> out;
  out.values = poly_roots_impl<R>(f, root_tol, max_sweeps);
  Mat<C> Tc = to_complex_matrix<R>(T);
  out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k)
    out.vectors.col(k) = eigenvector_for<R>(Tc, out.values[static_cast<size_t>(k)]);

  Mat<C> resid = Tc * out.vectors;
  for (int k = 0; k < n; ++k) resid.col(k) -= out.vectors.col(k) * out.values[static_cast<size_t>(k)];
  R rmax(0), tmax(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rmax = std::max(rmax, cabs(C(resid(i, j))));
      tmax = std::max(tmax, cabs(C(Tc(i, j))));
    }
  if (rmax > residual_tol * tmax)
    throw NonConvergence("eig_pairs: eigenpair residual above tolerance");
  return out;
}

}  // namespace detail

/// All complex roots of a squarefree monic integer polynomial, closed under
/// conjugation and sorted by (Re, Im). Backward error of each root <= tol.
std::vector<Cplx> poly_roots(const IntPolynomial& f, Real tol = 1e-12L, int max_sweeps = 600);

struct EigenPairs {
  std::vector<Cplx> values;
  ComplexMatrix vectors;  // unit-norm columns, ordered like values
};

/// Eigenvalues (via the exact characteristic polynomial) and eigenvectors of
/// an integer matrix with squarefree characteristic polynomial.
EigenPairs eig_pairs(const IntMatrix& T, Real tol = 1e-12L);

/// Gram determinant det[(v_j, v_k)_H] of the column vectors. Strictly
/// positive for independent vectors and positive definite H.
Real wedge_gram_norm(const RealMatrix& H, const RealMatrix& vectors);

/// Same, over the first ncols columns of an integer matrix.
Real wedge_gram_norm(const RealMatrix& H, const IntMatrix& vectors, int ncols);

}  // namespace sojred
