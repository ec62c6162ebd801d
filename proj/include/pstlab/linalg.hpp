// Copyright 2026 The pstlab Authors
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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace pstlab {

/// Complex scalar kept as an explicit (re, im) pair.
struct Complex {
  double re = 0.0;
  double im = 0.0;

  friend Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(Complex a, Complex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(double s, Complex a) { return {s * a.re, s * a.im}; }
  Complex& operator+=(Complex b) {
    re += b.re;
    im += b.im;
    return *this;
  }

  [[nodiscard]] Complex conj() const { return {re, -im}; }
  [[nodiscard]] double abs() const { return std::hypot(re, im); }

  /// e^{-i·theta}
  static Complex expNegI(double theta) { return {std::cos(theta), -std::sin(theta)}; }
};

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<const double> data() const { return data_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] double maxAbs() const;
  [[nodiscard]] double frobenius() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Kronecker product a ⊗ b (row index of a is major).
Matrix kron(const Matrix& a, const Matrix& b);

/// max_ij |a_ij - b_ij|; shapes must agree.
double maxAbsDiff(const Matrix& a, const Matrix& b);

/// Dense complex matrix stored as separate real and imaginary parts.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : re_(rows, cols), im_(rows, cols) {}
  ComplexMatrix(Matrix re, Matrix im) : re_(std::move(re)), im_(std::move(im)) {}

  [[nodiscard]] std::size_t rows() const { return re_.rows(); }
  [[nodiscard]] std::size_t cols() const { return re_.cols(); }

  [[nodiscard]] Complex at(std::size_t r, std::size_t c) const { return {re_(r, c), im_(r, c)}; }
  void set(std::size_t r, std::size_t c, Complex z) {
    re_(r, c) = z.re;
    im_(r, c) = z.im;
  }

  [[nodiscard]] const Matrix& real() const { return re_; }
  [[nodiscard]] const Matrix& imag() const { return im_; }

  /// Conjugate transpose.
  [[nodiscard]] ComplexMatrix adjoint() const;

 private:
  Matrix re_;
  Matrix im_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij| over complex entries.
double maxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real matrix lifted to ComplexMatrix with zero imaginary part.
ComplexMatrix toComplex(const Matrix& m);

}  // namespace pstlab
