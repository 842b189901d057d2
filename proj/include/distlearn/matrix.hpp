#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "distlearn/error.hpp"

namespace distlearn {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }
  double* data() noexcept { return data_.data(); }
  const double* data() const noexcept { return data_.data(); }

  void fill(double v);
  bool all_finite() const noexcept;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Every entry of the result is accumulated strictly left-to-right over the
// shared dimension, so results are bit-reproducible regardless of `threads`.
Matrix matmul(const Matrix& a, const Matrix& b, unsigned threads = 1);

Matrix transpose(const Matrix& a);

// a += b, elementwise.
void add_inplace(Matrix& a, const Matrix& b);
// a -= scale * b, elementwise.
void axpy_inplace(Matrix& a, double scale, const Matrix& b);

// Adds `bias` (1×cols) to every row of `m`.
void add_row_vector(Matrix& m, const Matrix& bias);
// 1×cols column sums, accumulated top to bottom.
Matrix column_sums(const Matrix& m);

double max_abs(const Matrix& m) noexcept;

}  // namespace distlearn
