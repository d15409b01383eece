#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

#include "fjhawkes/errors.hpp"
#include "fjhawkes/matrix.hpp"
#include "test_support.hpp"

using namespace fjhawkes;

TEST_SUITE("matrix") {

TEST_CASE("construction and element access") {
  Matrix m(2, 3);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(!m.square());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m(i, j) == 0.0);

  m(1, 2) = 4.5;
  CHECK(m(1, 2) == 4.5);

  Matrix packed(2, 2, {1.0, 2.0, 3.0, 4.0});
  CHECK(packed(0, 0) == 1.0);
  CHECK(packed(0, 1) == 2.0);
  CHECK(packed(1, 0) == 3.0);
  CHECK(packed(1, 1) == 4.0);
}

TEST_CASE("identity and diagonal") {
  const Matrix i3 = Matrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(i3(i, j) == (i == j ? 1.0 : 0.0));

  const Matrix d = Matrix::diagonal({2.0, 0.5});
  CHECK(d(0, 0) == 2.0);
  CHECK(d(1, 1) == 0.5);
  CHECK(d(0, 1) == 0.0);
  CHECK(d(1, 0) == 0.0);
}

TEST_CASE("from_rows round-trips through to_rows") {
  const std::vector<std::vector<double>> rows{{1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}};
  const Matrix m = Matrix::from_rows(rows);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(m.to_rows() == rows);
}

TEST_CASE("ragged rows are rejected") {
  CHECK_THROWS_AS(Matrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionMismatch);
}

TEST_CASE("non-finite entries are rejected at construction") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, nan, 4.0}), DimensionMismatch);
  CHECK_THROWS_AS(Matrix::from_rows({{1.0, inf}}), DimensionMismatch);
  CHECK_THROWS_AS(Matrix::diagonal({1.0, -inf}), DimensionMismatch);
}

TEST_CASE("entry count must match the shape") {
  CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), DimensionMismatch);
}

TEST_CASE("addition and subtraction") {
  const Matrix a = Matrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
  const Matrix b = Matrix::from_rows({{0.5, -1.0}, {2.0, 1.0}});
  CHECK((a + b) == Matrix::from_rows({{1.5, 1.0}, {5.0, 5.0}}));
  CHECK((a - b) == Matrix::from_rows({{0.5, 3.0}, {1.0, 3.0}}));
  CHECK_THROWS_AS(a + Matrix::identity(3), DimensionMismatch);
  CHECK_THROWS_AS(a - Matrix(2, 3), DimensionMismatch);
}

TEST_CASE("matrix product") {
  const Matrix a = Matrix::from_rows({{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}});
  const Matrix b = Matrix::from_rows({{7.0, 8.0}, {9.0, 10.0}, {11.0, 12.0}});
  const Matrix ab = a * b;
  CHECK(ab == Matrix::from_rows({{58.0, 64.0}, {139.0, 154.0}}));
  CHECK_THROWS_AS(b * Matrix::identity(3), DimensionMismatch);

  // Identity is neutral on both sides.
  CHECK(Matrix::identity(2) * ab == ab);
  CHECK(ab * Matrix::identity(2) == ab);
}

TEST_CASE("scalar and vector products") {
  const Matrix a = Matrix::from_rows({{1.0, -2.0}, {0.0, 3.0}});
  CHECK((2.0 * a) == Matrix::from_rows({{2.0, -4.0}, {0.0, 6.0}}));
  CHECK((-1.0 * a) == Matrix::from_rows({{-1.0, 2.0}, {0.0, -3.0}}));

  const std::vector<double> x{1.0, 2.0};
  const std::vector<double> ax = a * x;
  CHECK(ax == std::vector<double>{-3.0, 6.0});
  CHECK_THROWS_AS((a * std::vector<double>{1.0, 2.0, 3.0}), DimensionMismatch);
}

TEST_CASE("transpose") {
  const Matrix a = Matrix::from_rows({{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}});
  const Matrix at = a.transpose();
  CHECK(at.rows() == 3);
  CHECK(at.cols() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(at(j, i) == a(i, j));
  CHECK(at.transpose() == a);
}

TEST_CASE("norms") {
  const Matrix a = Matrix::from_rows({{1.0, -2.0}, {-3.0, 4.0}});
  CHECK(a.max_abs() == 4.0);
  CHECK(a.norm1() == 6.0);     // columns: |1|+|3| = 4, |2|+|4| = 6
  CHECK(a.norm_inf() == 7.0);  // rows: 3, 7
}

TEST_CASE("equality is exact") {
  const Matrix a = Matrix::from_rows({{1.0, 2.0}});
  Matrix b = a;
  CHECK(a == b);
  b(0, 1) = 2.0 + 1e-16;
  CHECK(a == b);  // 2 + 1e-16 rounds to 2 in double precision
  b(0, 1) = 2.5;
  CHECK(a != b);
}

TEST_CASE("vector helpers") {
  const std::vector<double> a{1.0, -4.0, 2.0};
  const std::vector<double> b{0.5, 1.0, -1.0};
  CHECK(inf_norm(a) == 4.0);
  CHECK(inf_diff(a, b) == 5.0);
  CHECK(vec_add(a, b) == std::vector<double>{1.5, -3.0, 1.0});
  CHECK(vec_sub(a, b) == std::vector<double>{0.5, -5.0, 3.0});
  CHECK(vec_scale(2.0, b) == std::vector<double>{1.0, 2.0, -2.0});
  CHECK(mean(a) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(vec_add(a, std::vector<double>{1.0}), DimensionMismatch);
  CHECK_THROWS_AS(inf_diff(a, std::vector<double>{1.0}), DimensionMismatch);
}

}  // TEST_SUITE
