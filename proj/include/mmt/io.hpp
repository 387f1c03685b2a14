#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmt/bounds.hpp"
#include "mmt/dense_matrix.hpp"
#include "mmt/matnorm.hpp"
#include "mmt/strassen.hpp"
#include "mmt/tensornorm.hpp"
#include "mmt/witness.hpp"

namespace mmt {

using Json = nlohmann::ordered_json;

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// One row per line, comma-separated reals; blank lines and '#' comments skipped.
/// ParseError carries the 1-based line number.
DenseMatrix read_matrix_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const DenseMatrix& m);
template <typename T>
void write_matrix_csv(std::ostream& out, const Matrix<T>& m);

/// {field, rows, cols, entries:[row-major real parts], entries_im:[imag parts, complex only]}.
Json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const Json& j);

/// .json by extension, CSV otherwise.
DenseMatrix read_matrix_file(const std::string& path);

Json exponent_to_json(const Exponent& e);
Json triple_to_json(const ExponentTriple& e);
Json dims_to_json(const Dims& d);

/// {value, kind, p, q, certificate?}.
Json to_json(const NormResult& r);
/// {dims, triple, value, certificate{X,M,Y}, seed, restarts, iterations, ...}.
Json to_json(const TensorNormEstimate& e);
Json to_json(const FeasibleTriple& t);
/// {dims, triple, lhs, rhs, relerr, ...}.
Json to_json(const SharpnessReport& r);
Json to_json(const SandwichReport& r);
Json to_json(const DivergencePoint& p);
Json to_json(const UniquenessVerdict& v);
Json to_json(const RankDecomposition& d);
RankDecomposition decomposition_from_json(const Json& j);

}  // namespace mmt

#include <ostream>

template <typename T>
void mmt::write_matrix_csv(std::ostream& out, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
}
