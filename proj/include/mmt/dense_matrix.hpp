#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mmt/matrix.hpp"

namespace mmt {

using Scalar = std::complex<double>;

enum class Field { real, complex };

const char* to_string(Field f);

/// Field-tagged dense matrix, the operand of every norm and quotient.
///
/// Entries are stored as complex doubles; a matrix tagged real has all
/// imaginary parts zero. Every entry is finite and both dimensions are >= 1.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  /// Zero matrix.
  DenseMatrix(std::size_t rows, std::size_t cols, Field field = Field::real);

  static DenseMatrix real(std::size_t rows, std::size_t cols, std::span<const double> entries);
  static DenseMatrix complex(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix identity(std::size_t n);

  template <typename T>
  static DenseMatrix from_integers(const Matrix<T>& m) {
    DenseMatrix d(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) d.values_(i, j) = Scalar(static_cast<double>(m(i, j)), 0.0);
    return d;
  }

  Field field() const noexcept { return field_; }
  bool is_real() const noexcept { return field_ == Field::real; }
  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t cols() const noexcept { return values_.cols(); }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  /// Writes keep the field tag consistent: a nonzero imaginary part promotes to complex.
  void set(std::size_t i, std::size_t j, Scalar v);
  double real_at(std::size_t i, std::size_t j) const { return values_(i, j).real(); }

  std::span<const Scalar> entries() const noexcept { return values_.data(); }
  std::span<const Scalar> row(std::size_t i) const { return values_.row(i); }
  std::vector<Scalar> column(std::size_t j) const;
  /// Real parts, row-major.
  std::vector<double> real_entries() const;

  bool is_zero() const;
  DenseMatrix transpose() const;
  DenseMatrix conjugate_transpose() const;
  DenseMatrix scaled(Scalar c) const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  Field field_ = Field::real;
  Matrix<Scalar> values_;
};

/// tr(XMY) = sum_{i,j,k} X_ij M_jk Y_ki without forming the product.
Scalar trace_product(const DenseMatrix& x, const DenseMatrix& m, const DenseMatrix& y);

}  // namespace mmt
