#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mmt/dense_matrix.hpp"
#include "mmt/errors.hpp"
#include "mmt/matrix.hpp"

namespace mmt {

struct HyperEntry {
  std::size_t a = 0, b = 0, c = 0;
  double value = 0.0;
};

/// Sparse 3-way array of shape da × db × dc.
struct Hypermatrix {
  std::size_t da = 0, db = 0, dc = 0;
  std::vector<HyperEntry> entries;
};

/// μ_{l,m,n}: a one at (vec(i,j), vec(j,k), vec(k,i)) for every i < l, j < m, k < n,
/// where vec(i,j) = i·cols + j is the row-major position in the l×m, m×n and n×l
/// matrices respectively.
Hypermatrix mu_hypermatrix(std::size_t l, std::size_t m, std::size_t n);

/// sum h_abc · X_a · M_b · Y_c over row-major flattenings.
Scalar contract(const Hypermatrix& h, const DenseMatrix& x, const DenseMatrix& m, const DenseMatrix& y);

template <typename T>
struct ProductResult {
  Matrix<T> c;
  std::uint64_t mult_count = 0;
};

/// One level of the seven-product scheme on 2×2 blocks {00, 01, 10, 11}.
/// `mul` is called exactly seven times.
template <typename Block, typename Mul>
std::array<Block, 4> strassen_step(const std::array<Block, 4>& A, const std::array<Block, 4>& B, Mul&& mul) {
  const Block &a1 = A[0], &a2 = A[1], &a3 = A[2], &a4 = A[3];
  // b2 and b3 are B10 and B01.
  const Block &b1 = B[0], &b2 = B[2], &b3 = B[1], &b4 = B[3];
  const Block m1 = mul(a1, b1);
  const Block m2 = mul(a2, b2);
  const Block alpha = mul(a3 - a1, b3 - b4);
  const Block beta = mul(a3 + a4, b3 - b1);
  const Block m5 = mul(a3 + a4 - a1, b1 + b4 - b3);
  const Block gamma = m1 + m5;
  const Block m6 = mul(a1 + a2 - a3 - a4, b4);
  const Block m7 = mul(a4, b2 + b3 - b1 - b4);
  return {m1 + m2, beta + gamma + m6, alpha + gamma + m7, alpha + beta + gamma};
}

/// 2×2 product with seven scalar multiplications.
template <typename T>
ProductResult<T> strassen_2x2(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw DimensionError("strassen_2x2 needs two 2x2 matrices");
  }
  ProductResult<T> r;
  auto mul = [&r](const T& x, const T& y) {
    ++r.mult_count;
    return x * y;
  };
  const auto c = strassen_step<T>({a(0, 0), a(0, 1), a(1, 0), a(1, 1)}, {b(0, 0), b(0, 1), b(1, 0), b(1, 1)}, mul);
  r.c = Matrix<T>(2, 2, std::vector<T>(c.begin(), c.end()));
  return r;
}

namespace detail {

template <typename T>
Matrix<T> strassen_rec(const Matrix<T>& a, const Matrix<T>& b, std::size_t cutoff, std::uint64_t& count) {
  const std::size_t n = a.rows();
  if (n <= cutoff) {
    count += static_cast<std::uint64_t>(n) * n * n;
    return naive_multiply(a, b);
  }
  const std::size_t h = n / 2;
  auto split = [h](const Matrix<T>& x) {
    return std::array<Matrix<T>, 4>{x.block(0, 0, h, h), x.block(0, h, h, h), x.block(h, 0, h, h),
                                    x.block(h, h, h, h)};
  };
  auto mul = [&](const Matrix<T>& x, const Matrix<T>& y) { return strassen_rec(x, y, cutoff, count); };
  const auto c = strassen_step<Matrix<T>>(split(a), split(b), mul);
  Matrix<T> out(n, n);
  for (std::size_t q = 0; q < 4; ++q) {
    const std::size_t r0 = (q / 2) * h, c0 = (q % 2) * h;
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) out(r0 + i, c0 + j) = c[q](i, j);
  }
  return out;
}

}  // namespace detail

/// Recursive seven-product multiplication of square matrices, zero-padded to a
/// power of two and recursing until the block size is <= cutoff, where the
/// schoolbook product (size^3 multiplications) takes over.
template <typename T>
ProductResult<T> strassen_recursive(const Matrix<T>& a, const Matrix<T>& b, std::size_t cutoff = 1) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionError("strassen_recursive needs square matrices of equal size");
  }
  if (a.rows() == 0) throw DimensionError("strassen_recursive needs size >= 1");
  if (cutoff == 0) throw DomainError("cutoff must be >= 1");
  const std::size_t n = a.rows();
  std::size_t padded = 1;
  while (padded < n) padded *= 2;
  ProductResult<T> r;
  const Matrix<T> c = detail::strassen_rec(a.block(0, 0, padded, padded), b.block(0, 0, padded, padded), cutoff,
                                           r.mult_count);
  r.c = c.block(0, 0, n, n);
  return r;
}

struct RankTerm {
  double weight = 1.0;
  std::vector<double> u, v, w;
};

/// sum_t weight_t · u_t ⊗ v_t ⊗ w_t with u on the l×m, v on the m×n and w on the n×l flattening.
struct RankDecomposition {
  std::vector<RankTerm> terms;
};

struct RankCheck {
  bool valid = false;
  double max_error = 0.0;
};

/// Entrywise comparison with μ_{l,m,n}; valid iff max_error <= tol.
RankCheck verify_rank_decomposition(const RankDecomposition& d, std::size_t l, std::size_t m, std::size_t n,
                                    double tol = 1e-10);

/// The seven rank-one terms of the 2×2 scheme above.
RankDecomposition strassen_decomposition();
/// One term per entry of μ_{l,m,n}.
RankDecomposition trivial_decomposition(std::size_t l, std::size_t m, std::size_t n);

/// log r / log n: the exponent bound implied by rank(μ_{n,n,n}) <= r.
double omega_upper(std::size_t n, std::uint64_t r);

}  // namespace mmt
