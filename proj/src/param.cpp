#include "relufibre/param.hpp"

#include "relufibre/error.hpp"

namespace relufibre {

namespace {

[[noreturn]] void dim_error(const std::string& what) {
  throw Error(ErrorCode::DimensionMismatch, what);
}

void check_index(std::size_t i, std::size_t n, const char* what) {
  if (i >= n)
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(what) + " index " + std::to_string(i + 1) +
                    " outside 1.." + std::to_string(n));
}

}  // namespace

std::string to_string(const Architecture& arch) {
  return "(" + std::to_string(arch.m) + "," + std::to_string(arch.n) + "," +
         std::to_string(arch.k) + ")";
}

Matrix Matrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  Matrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      dim_error("matrix row " + std::to_string(r + 1) + " has length " +
                std::to_string(rows[r].size()) + ", expected " +
                std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

RatVec Matrix::col(std::size_t c) const {
  RatVec out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Parameter::Parameter(Matrix M, Matrix A, RatVec b, RatVec c)
    : M_(std::move(M)), A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {
  arch_ = {A_.cols(), A_.rows(), M_.rows()};
  if (arch_.m < 1 || arch_.n < 1 || arch_.k < 1)
    throw Error(ErrorCode::InvalidArchitecture,
                "architecture " + to_string(arch_) + " needs m, n, k >= 1");
  if (M_.cols() != arch_.n)
    dim_error("M has " + std::to_string(M_.cols()) + " columns, expected n = " +
              std::to_string(arch_.n));
  if (b_.size() != arch_.n)
    dim_error("b has length " + std::to_string(b_.size()) + ", expected n = " +
              std::to_string(arch_.n));
  if (c_.size() != arch_.k)
    dim_error("c has length " + std::to_string(c_.size()) + ", expected k = " +
              std::to_string(arch_.k));
}

Parameter Parameter::single(const RatVec& v, const std::vector<RatVec>& A,
                            const RatVec& b, const Rat& C) {
  std::size_t m = A.empty() ? 0 : A.front().size();
  return Parameter(Matrix::from_rows({v}, v.size()), Matrix::from_rows(A, m), b,
                   {C});
}

AffRow Parameter::row(std::size_t i) const {
  auto a = A_.row(i);
  return {RatVec(a.begin(), a.end()), b_[i]};
}

bool Parameter::neuron_is_zero(std::size_t i) const {
  if (!b_[i].is_zero() || !is_zero(A_.row(i))) return false;
  for (std::size_t t = 0; t < arch_.k; ++t)
    if (!M_(t, i).is_zero()) return false;
  return true;
}

void Parameter::set_out(std::size_t i, std::span<const Rat> out) {
  check_index(i, arch_.n, "neuron");
  if (out.size() != arch_.k) dim_error("out-vector length must equal k");
  for (std::size_t t = 0; t < arch_.k; ++t) M_(t, i) = out[t];
}

void Parameter::set_row(std::size_t i, const AffRow& row) {
  check_index(i, arch_.n, "neuron");
  if (row.dim() != arch_.m) dim_error("row length must equal m");
  for (std::size_t j = 0; j < arch_.m; ++j) A_(i, j) = row.a[j];
  b_[i] = row.b;
}

void Parameter::set_c(std::span<const Rat> c) {
  if (c.size() != arch_.k) dim_error("c length must equal k");
  c_.assign(c.begin(), c.end());
}

Parameter project(const Parameter& theta, std::size_t t) {
  check_index(t, theta.k(), "output");
  auto mrow = theta.M().row(t);
  return Parameter(Matrix::from_rows({RatVec(mrow.begin(), mrow.end())}, theta.n()),
                   theta.A(), theta.b(), {theta.c()[t]});
}

Parameter ominus(const Parameter& theta1, const Parameter& theta2) {
  if (theta1.k() != 1 || theta2.k() != 1)
    throw Error(ErrorCode::Precondition, "ominus needs single-output parameters");
  if (theta1.m() != theta2.m())
    dim_error("ominus input dimensions differ: " + std::to_string(theta1.m()) +
              " vs " + std::to_string(theta2.m()));
  const std::size_t n1 = theta1.n(), n2 = theta2.n(), m = theta1.m();
  Matrix M(1, n1 + n2), A(n1 + n2, m);
  RatVec b;
  b.reserve(n1 + n2);
  for (std::size_t i = 0; i < n1; ++i) {
    M(0, i) = theta1.M()(0, i);
    for (std::size_t j = 0; j < m; ++j) A(i, j) = theta1.A()(i, j);
    b.push_back(theta1.b()[i]);
  }
  for (std::size_t i = 0; i < n2; ++i) {
    M(0, n1 + i) = -theta2.M()(0, i);
    for (std::size_t j = 0; j < m; ++j) A(n1 + i, j) = theta2.A()(i, j);
    b.push_back(theta2.b()[i]);
  }
  return Parameter(std::move(M), std::move(A), std::move(b),
                   {theta1.c()[0] - theta2.c()[0]});
}

Parameter stack_outputs(const std::vector<Parameter>& outputs) {
  if (outputs.empty())
    throw Error(ErrorCode::InvalidArchitecture, "no outputs to stack");
  const auto& first = outputs.front();
  Matrix M(outputs.size(), first.n());
  RatVec c;
  for (std::size_t t = 0; t < outputs.size(); ++t) {
    const auto& p = outputs[t];
    if (p.k() != 1 || p.A() != first.A() || p.b() != first.b())
      dim_error("stacked outputs must be single-output and share (A, b)");
    for (std::size_t i = 0; i < p.n(); ++i) M(t, i) = p.M()(0, i);
    c.push_back(p.c()[0]);
  }
  return Parameter(std::move(M), first.A(), first.b(), std::move(c));
}

}  // namespace relufibre
