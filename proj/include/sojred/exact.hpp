#pragma once

#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

#include "sojred/errors.hpp"
#include "sojred/scalars.hpp"

namespace sojred {

/// Dense square matrix over arbitrary-precision integers. All arithmetic is
/// exact; there is no floating intermediate anywhere in this class.
///
/// (Not an Eigen::Matrix<cpp_int>: boost 1.74's byte-container trait breaks
/// overload resolution for Eigen expressions, so the exact layer is its own
/// minimal type. The floating layers are Eigen throughout.)
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
    if (dim < 1) throw DimensionMismatch("IntMatrix: dim must be >= 1");
  }
  IntMatrix(int dim, std::initializer_list<long long> row_major) : IntMatrix(dim) {
    assert(static_cast<int>(row_major.size()) == dim * dim);
    size_t k = 0;
    for (long long v : row_major) a_[k++] = v;
  }

  static IntMatrix identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  int dim() const { return dim_; }
  BigInt& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  const BigInt& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * dim_ + j];
  }

  IntMatrix transpose() const {
    IntMatrix t(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  BigInt trace() const {
    BigInt s = 0;
    for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
  }

  BigInt max_abs() const {
    BigInt m = 0;
    for (const BigInt& v : a_)
      if (abs(v) > m) m = abs(v);
    return m;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim_ != y.dim_) throw DimensionMismatch("IntMatrix product: dim mismatch");
    IntMatrix z(x.dim_);
    for (int i = 0; i < x.dim_; ++i)
      for (int k = 0; k < x.dim_; ++k) {
        const BigInt& xik = x(i, k);
        if (xik == 0) continue;
        for (int j = 0; j < x.dim_; ++j) z(i, j) += xik * y(k, j);
      }
    return z;
  }

  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim_ != y.dim_) throw DimensionMismatch("IntMatrix sum: dim mismatch");
    IntMatrix z(x.dim_);
    for (size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] + y.a_[k];
    return z;
  }

  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim_ != y.dim_) throw DimensionMismatch("IntMatrix difference: dim mismatch");
    IntMatrix z(x.dim_);
    for (size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] - y.a_[k];
    return z;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.dim_ == y.dim_ && x.a_ == y.a_;
  }

 private:
  int dim_ = 0;
  std::vector<BigInt> a_;
};

/// Monic polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) {
    if (c_.empty() || c_.back() != 1)
      throw BadParams("IntPolynomial: leading coefficient must be 1");
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt eval(const BigInt& x) const {
    BigInt v = 0;
    for (int k = degree(); k >= 0; --k) v = v * x + c_[static_cast<size_t>(k)];
    return v;
  }

  friend bool operator==(const IntPolynomial& f, const IntPolynomial& g) {
    return f.c_ == g.c_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<BigInt> c_;
};

/// Exact characteristic polynomial det(xI - M) by Faddeev-LeVerrier.
/// Every division in the recursion is exact over Z.
IntPolynomial char_poly(const IntMatrix& M);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt exact_determinant(const IntMatrix& M);

/// Resultant of two integer polynomials via the Sylvester matrix.
BigInt resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g);

/// Exact discriminant of a monic polynomial: (-1)^{n(n-1)/2} Res(f, f').
BigInt discriminant(const IntPolynomial& f);

}  // namespace sojred
