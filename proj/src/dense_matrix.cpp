#include "mmt/dense_matrix.hpp"

#include <cmath>

#include "mmt/errors.hpp"

namespace mmt {

const char* to_string(Field f) { return f == Field::real ? "real" : "complex"; }

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be >= 1");
}

void check_finite(Scalar v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError("matrix entries must be finite");
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, Field field)
    : field_(field), values_((check_dims(rows, cols), rows), cols) {}

DenseMatrix DenseMatrix::real(std::size_t rows, std::size_t cols, std::span<const double> entries) {
  check_dims(rows, cols);
  if (entries.size() != rows * cols) throw DimensionError("entry count does not match rows*cols");
  DenseMatrix d(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    check_finite(entries[k]);
    d.values_(k / cols, k % cols) = entries[k];
  }
  return d;
}

DenseMatrix DenseMatrix::complex(std::size_t rows, std::size_t cols, std::vector<Scalar> entries) {
  check_dims(rows, cols);
  for (const auto& v : entries) check_finite(v);
  DenseMatrix d;
  d.field_ = Field::complex;
  d.values_ = Matrix<Scalar>(rows, cols, std::move(entries));
  return d;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> flat;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged row list");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return real(r, c, flat);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d.values_(i, i) = 1.0;
  return d;
}

void DenseMatrix::set(std::size_t i, std::size_t j, Scalar v) {
  check_finite(v);
  if (v.imag() != 0.0) field_ = Field::complex;
  values_(i, j) = v;
}

std::vector<Scalar> DenseMatrix::column(std::size_t j) const {
  std::vector<Scalar> c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c[i] = values_(i, j);
  return c;
}

std::vector<double> DenseMatrix::real_entries() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& v : values_.data()) out.push_back(v.real());
  return out;
}

bool DenseMatrix::is_zero() const {
  for (const auto& v : values_.data())
    if (v != Scalar{}) return false;
  return true;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t;
  t.field_ = field_;
  t.values_ = values_.transpose();
  return t;
}

DenseMatrix DenseMatrix::conjugate_transpose() const {
  DenseMatrix t = transpose();
  if (field_ == Field::complex)
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j) t.values_(i, j) = std::conj(t.values_(i, j));
  return t;
}

DenseMatrix DenseMatrix::scaled(Scalar c) const {
  check_finite(c);
  DenseMatrix s = *this;
  if (c.imag() != 0.0) s.field_ = Field::complex;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) s.values_(i, j) *= c;
  return s;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c;
  c.field_ = (a.is_real() && b.is_real()) ? Field::real : Field::complex;
  c.values_ = naive_multiply(a.values_, b.values_);
  return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c;
  c.field_ = (a.is_real() && b.is_real()) ? Field::real : Field::complex;
  c.values_ = a.values_ + b.values_;
  return c;
}

Scalar trace_product(const DenseMatrix& x, const DenseMatrix& m, const DenseMatrix& y) {
  if (x.cols() != m.rows() || m.cols() != y.rows() || y.cols() != x.rows()) {
    throw DimensionError("trace_product: dimension chain l x m, m x n, n x l does not close");
  }
  Scalar t{};
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Scalar xij = x(i, j);
      if (xij == Scalar{}) continue;
      Scalar acc{};
      for (std::size_t k = 0; k < m.cols(); ++k) acc += m(j, k) * y(k, i);
      t += xij * acc;
    }
  return t;
}

}  // namespace mmt
