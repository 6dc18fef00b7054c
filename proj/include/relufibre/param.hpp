#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "relufibre/rational.hpp"

namespace relufibre {

/// Input dimension m, hidden width n, output dimension k.
struct Architecture {
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t k = 1;

  friend bool operator==(const Architecture&, const Architecture&) = default;
};

std::string to_string(const Architecture& arch);

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; all rows must share one length.
  static Matrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Rat> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  RatVec col(std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RatVec data_;
};

/// A shallow ReLU network parameter theta = (M, A, b, c) realizing
/// x -> M relu(A x + b) + c. Column i of M together with row i of (A | b) is
/// the neuron i.
class Parameter {
 public:
  /// Checks all dimensions; throws Error(DimensionMismatch) or
  /// Error(InvalidArchitecture).
  Parameter(Matrix M, Matrix A, RatVec b, RatVec c);

  /// The k = 1 form (v, A, b, C).
  static Parameter single(const RatVec& v, const std::vector<RatVec>& A,
                          const RatVec& b, const Rat& C);

  const Architecture& arch() const { return arch_; }
  std::size_t m() const { return arch_.m; }
  std::size_t n() const { return arch_.n; }
  std::size_t k() const { return arch_.k; }

  const Matrix& M() const { return M_; }
  const Matrix& A() const { return A_; }
  const RatVec& b() const { return b_; }
  const RatVec& c() const { return c_; }

  /// Outgoing weights of neuron i (column i of M).
  RatVec out(std::size_t i) const { return M_.col(i); }
  /// Incoming row (a_i | b_i) of neuron i.
  AffRow row(std::size_t i) const;
  bool neuron_is_zero(std::size_t i) const;

  void set_out(std::size_t i, std::span<const Rat> out);
  void set_row(std::size_t i, const AffRow& row);
  void set_c(std::span<const Rat> c);

  friend bool operator==(const Parameter&, const Parameter&) = default;

 private:
  Architecture arch_;
  Matrix M_;
  Matrix A_;
  RatVec b_;
  RatVec c_;
};

/// pi_t: the single-output parameter (row t of M, A, b, c_t). Zero-based t.
Parameter project(const Parameter& theta, std::size_t t);

/// theta1 (-) theta2: realizes the difference of two single-output functions.
Parameter ominus(const Parameter& theta1, const Parameter& theta2);

/// Stacks k single-output parameters sharing (A, b) into one parameter.
Parameter stack_outputs(const std::vector<Parameter>& outputs);

}  // namespace relufibre
