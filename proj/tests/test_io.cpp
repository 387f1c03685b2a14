#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mmt/errors.hpp"
#include "mmt/io.hpp"
#include "oracles.hpp"

using mmt::DenseMatrix;

TEST(Csv, ReadsCommentsAndBlankLines) {
  std::istringstream in("# header\n1, 2,3\n\n  -4,5.5,+6\n");
  const DenseMatrix m = mmt::read_matrix_csv(in);
  EXPECT_EQ(m, DenseMatrix::from_rows({{1, 2, 3}, {-4, 5.5, 6}}));
}

TEST(Csv, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    std::istringstream in(text);
    try {
      mmt::read_matrix_csv(in);
    } catch (const mmt::ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  EXPECT_EQ(line_of("1,2\n3,x\n"), 2u);
  EXPECT_EQ(line_of("1,2\n# c\n3\n"), 3u);
  EXPECT_EQ(line_of("1,,2\n"), 1u);
  EXPECT_EQ(line_of("1,inf\n"), 1u);
  std::istringstream empty("# only a comment\n");
  EXPECT_THROW(mmt::read_matrix_csv(empty), mmt::ParseError);
}

TEST(Csv, RoundTripIsExact) {
  std::mt19937_64 rng(1);
  const DenseMatrix m = oracle::random_real(4, 3, rng);
  std::stringstream s;
  mmt::write_matrix_csv(s, m);
  EXPECT_EQ(mmt::read_matrix_csv(s), m);
}

TEST(Json, MatrixRoundTrip) {
  std::mt19937_64 rng(2);
  const DenseMatrix m = oracle::random_real(2, 5, rng);
  EXPECT_EQ(mmt::matrix_from_json(mmt::Json::parse(mmt::matrix_to_json(m).dump())), m);
  DenseMatrix z(2, 2);
  z.set(0, 1, {0.5, -1.25});
  z.set(1, 0, {2, 0});
  const DenseMatrix back = mmt::matrix_from_json(mmt::Json::parse(mmt::matrix_to_json(z).dump()));
  EXPECT_EQ(back, z);
  EXPECT_FALSE(back.is_real());
  EXPECT_THROW(mmt::matrix_from_json(mmt::Json{{"rows", 2}, {"cols", 2}, {"entries", {1, 2, 3}}}), mmt::ParseError);
}

TEST(Json, DecompositionRoundTrip) {
  const auto d = mmt::strassen_decomposition();
  const auto back = mmt::decomposition_from_json(mmt::Json::parse(mmt::to_json(d).dump()));
  ASSERT_EQ(back.terms.size(), d.terms.size());
  for (std::size_t k = 0; k < d.terms.size(); ++k) {
    EXPECT_EQ(back.terms[k].u, d.terms[k].u);
    EXPECT_EQ(back.terms[k].v, d.terms[k].v);
    EXPECT_EQ(back.terms[k].w, d.terms[k].w);
    EXPECT_EQ(back.terms[k].weight, d.terms[k].weight);
  }
  EXPECT_THROW(mmt::decomposition_from_json(mmt::Json::object()), mmt::ParseError);
}

TEST(Json, ExponentsAreStrings) {
  const auto j = mmt::triple_to_json(mmt::ExponentTriple::parse("1,3/2,inf"));
  EXPECT_EQ(j.dump(), R"(["1","3/2","inf"])");
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(mmt::format_double(0.1), "0.1");
  EXPECT_EQ(mmt::format_double(2.0), "2");
  const double x = 1.4142135623730951;
  EXPECT_EQ(std::stod(mmt::format_double(x)), x);
}
