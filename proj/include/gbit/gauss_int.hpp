// Copyright 2026 gbit-toolbox authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>

namespace gbit {

/// Gaussian integer a + b i. Pauli-string matrices have entries in
/// {0, +-1, +-i}, so their products and commutators are decided in exact
/// integer arithmetic with this scalar.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  GaussInt() = default;
  constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  /// i^k for k mod 4.
  static constexpr GaussInt unit_power(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return GaussInt(1, 0);
      case 1: return GaussInt(0, 1);
      case 2: return GaussInt(-1, 0);
      default: return GaussInt(0, -1);
    }
  }

  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  constexpr GaussInt operator-() const { return {-re, -im}; }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt& operator+=(GaussInt o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(GaussInt o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussInt& operator*=(GaussInt o) {
    *this = *this * o;
    return *this;
  }
  friend constexpr bool operator==(GaussInt a, GaussInt b) {
    return a.re == b.re && a.im == b.im;
  }
  friend constexpr bool operator!=(GaussInt a, GaussInt b) { return !(a == b); }

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr bool is_real() const { return im == 0; }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

}  // namespace gbit

// The NumTraits specialization must precede every instantiation of an Eigen
// expression over GaussInt.
namespace Eigen {

template <>
struct NumTraits<gbit::GaussInt> {
  typedef gbit::GaussInt Real;
  typedef gbit::GaussInt NonInteger;
  typedef gbit::GaussInt Literal;
  typedef gbit::GaussInt Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 6
  };
  static inline gbit::GaussInt epsilon() { return gbit::GaussInt(0); }
  static inline gbit::GaussInt dummy_precision() { return gbit::GaussInt(0); }
  static inline int digits10() { return 18; }
};

}  // namespace Eigen

namespace gbit {

using GaussMat = Eigen::Matrix<GaussInt, Eigen::Dynamic, Eigen::Dynamic>;

/// Entrywise conversion to a complex double matrix.
inline Eigen::MatrixXcd to_complex(const GaussMat& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  }
  return out;
}

/// Kronecker product; the left factor owns the most significant site.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace gbit
