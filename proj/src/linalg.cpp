#include "qtoda/linalg.hpp"

#include <stdexcept>

namespace qtoda {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (qtoda::is_zero(aik)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMat RatMat::operator*(const Rational& c) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

std::vector<Rational> RatMat::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<Rational> r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!qtoda::is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool RatMat::is_zero() const {
  for (const auto& x : a_)
    if (!qtoda::is_zero(x)) return false;
  return true;
}

Rational RatMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  RatMat m(*this);
  Rational d(1);
  std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && qtoda::is_zero(m(piv, col))) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    Rational inv = Rational(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (qtoda::is_zero(m(i, col))) continue;
      Rational f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

namespace {

struct Echelon {
  RatMat m;                       // reduced rows (augmented or not)
  std::vector<std::size_t> pivot_col;  // per pivot row
};

// Row-reduces [A | b] (b optional) in place with min-|entry| pivoting.
Echelon reduce(RatMat m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    // Pick nonzero entry with smallest magnitude in this column.
    std::size_t best = rows;
    for (std::size_t i = row; i < rows; ++i) {
      if (qtoda::is_zero(m(i, col))) continue;
      if (best == rows || abs_rat(m(i, col)) < abs_rat(m(best, col))) best = i;
    }
    if (best == rows) continue;
    if (best != row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(best, j), m(row, j));
    Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < cols; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || qtoda::is_zero(m(i, col))) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

LinearSolution solve_linear(const RatMat& A, const std::vector<Rational>& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
  const std::size_t n = A.cols();
  RatMat aug(A.rows(), n + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n) = b[i];
  }
  // Restrict pivoting to the coefficient columns; then check consistency.
  const std::size_t rows = aug.rows();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rows; ++col) {
    std::size_t best = rows;
    for (std::size_t i = row; i < rows; ++i) {
      if (qtoda::is_zero(aug(i, col))) continue;
      if (best == rows || abs_rat(aug(i, col)) < abs_rat(aug(best, col))) best = i;
    }
    if (best == rows) continue;
    if (best != row)
      for (std::size_t j = 0; j <= n; ++j) std::swap(aug(best, j), aug(row, j));
    Rational inv = Rational(1) / aug(row, col);
    for (std::size_t j = col; j <= n; ++j) aug(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || qtoda::is_zero(aug(i, col))) continue;
      Rational f = aug(i, col);
      for (std::size_t j = col; j <= n; ++j) aug(i, j) -= f * aug(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  LinearSolution sol;
  // Inconsistent iff a zero coefficient row has nonzero rhs.
  for (std::size_t i = row; i < rows; ++i)
    if (!qtoda::is_zero(aug(i, n))) {
      sol.status = LinearSolution::Status::inconsistent;
      return sol;
    }
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    sol.particular[pivots[r]] = aug(r, n);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> k(n, Rational(0));
    k[j] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -aug(r, j);
    sol.kernel.push_back(std::move(k));
  }
  sol.status = sol.kernel.empty() ? LinearSolution::Status::unique
                                  : LinearSolution::Status::affine;
  return sol;
}

std::size_t rank(const RatMat& A) { return reduce(A).pivot_col.size(); }

RatMat inverse(const RatMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = A.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = reduce(std::move(aug));
  if (e.pivot_col.size() != n || e.pivot_col.back() != n - 1)
    throw std::domain_error("matrix is singular");
  // Pivot columns must be exactly 0..n-1.
  for (std::size_t i = 0; i < n; ++i)
    if (e.pivot_col[i] != i) throw std::domain_error("matrix is singular");
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

}  // namespace qtoda
