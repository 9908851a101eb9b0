#include "sojred/exact.hpp"

#include <sstream>

namespace sojred {

std::string IntPolynomial::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& a = c_[static_cast<size_t>(k)];
    if (a == 0) continue;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    BigInt m = abs(a);
    if (m != 1 || k == 0) os << m.str();
    if (k > 0) {
      if (m != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

IntPolynomial char_poly(const IntMatrix& M) {
  const int n = M.dim();
  // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M M_{k-1} + c_{k-1} I)/k... written
  // as the usual recursion on N_k = M*(N_{k-1} + c_{k-1} I).
  std::vector<BigInt> c(static_cast<size_t>(n) + 1);
  c[static_cast<size_t>(n)] = 1;
  IntMatrix N = M;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      IntMatrix shifted = N;
      for (int i = 0; i < n; ++i) shifted(i, i) += c[static_cast<size_t>(n - k + 1)];
      N = M * shifted;
    }
    BigInt t = N.trace();
    assert(t % k == 0);
    c[static_cast<size_t>(n - k)] = -t / k;
  }
  return IntPolynomial(std::move(c));
}

BigInt exact_determinant(const IntMatrix& M) {
  const int n = M.dim();
  IntMatrix w = M;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        assert(num % prev == 0);
        w(i, j) = num / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

namespace {

int poly_degree(const std::vector<BigInt>& f) {
  for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k)
    if (f[static_cast<size_t>(k)] != 0) return k;
  return -1;
}

}  // namespace

BigInt resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
  const int m = poly_degree(f);
  const int n = poly_degree(g);
  if (m < 0 || n < 0) return 0;
  if (m == 0) {
    BigInt r = 1;
    for (int k = 0; k < n; ++k) r *= f[0];
    return r;
  }
  if (n == 0) {
    BigInt r = 1;
    for (int k = 0; k < m; ++k) r *= g[0];
    return r;
  }
  IntMatrix s(m + n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = f[static_cast<size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = g[static_cast<size_t>(n - k)];
  return exact_determinant(s);
}

BigInt discriminant(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw BadParams("discriminant: degree must be >= 1");
  if (n == 1) return 1;
  std::vector<BigInt> df(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) df[static_cast<size_t>(k - 1)] = f.coeff(k) * k;
  BigInt res = resultant(f.coeffs(), df);
  // Monic f: disc = (-1)^{n(n-1)/2} Res(f, f').
  return (n * (n - 1) / 2) % 2 == 0 ? res : -res;
}

}  // namespace sojred
