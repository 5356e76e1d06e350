#pragma once

#include <cstddef>
#include <vector>

#include "qtoda/rational.hpp"

namespace qtoda {

// Dense matrix over Rational.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator*(const Rational& c) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  RatMat transpose() const;
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  bool is_zero() const;

  Rational det() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct LinearSolution {
  enum class Status { unique, affine, inconsistent };
  Status status = Status::inconsistent;
  std::vector<Rational> particular;            // valid unless inconsistent
  std::vector<std::vector<Rational>> kernel;   // basis of the homogeneous space
  std::size_t kernel_dim() const { return kernel.size(); }
};

// Exact Gaussian elimination. Pivot in each column is the nonzero entry of
// smallest magnitude, which limits coefficient growth.
LinearSolution solve_linear(const RatMat& A, const std::vector<Rational>& b);

std::size_t rank(const RatMat& A);

// Throws std::domain_error if singular.
RatMat inverse(const RatMat& A);

}  // namespace qtoda
