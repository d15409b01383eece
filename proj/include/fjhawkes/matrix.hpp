#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fjhawkes {

using Complex = std::complex<double>;

// Dense row-major matrix of doubles. Construction rejects NaN/Inf entries;
// every downstream routine may assume finite input.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<double>& entries);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const noexcept { return data_; }
  std::vector<double>& data() noexcept { return data_; }

  std::vector<std::vector<double>> to_rows() const;
  Matrix transpose() const;

  double max_abs() const;
  double norm1() const;      // max absolute column sum
  double norm_inf() const;   // max absolute row sum

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);

// Small vector helpers used throughout the model code.
double inf_norm(const std::vector<double>& v);
double inf_diff(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> vec_add(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> vec_sub(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> vec_scale(double s, const std::vector<double>& a);
double mean(const std::vector<double>& v);

void require_finite(const std::vector<double>& v, const char* what);
void require_square(const Matrix& m, const char* what);

}  // namespace fjhawkes
