#pragma once

#include <map>

#include "qtoda/multi_index.hpp"
#include "qtoda/rational.hpp"
#include "qtoda/root_system.hpp"
#include "qtoda/sparse_poly.hpp"

namespace qtoda {

// Normal-ordered monomial X^I lambda^J.
struct XLKey {
  MultiIndex x;   // X exponents
  MultiIndex l;   // lambda exponents

  int filtration() const { return x.total() + l.total(); }

  bool operator==(const XLKey& o) const = default;
  bool operator<(const XLKey& o) const {
    int fa = x.total() + l.total();
    int fb = o.x.total() + o.l.total();
    if (fa != fb) return fa < fb;
    if (x != o.x) return x < o.x;
    return l < o.l;
  }
};

// Element of U(b) in normal order: all X factors left of all lambda
// factors. Multiplication uses the commutation relation
// [lambda_i, X_j] = delta_ij X_j in closed form.
class NOElement {
 public:
  explicit NOElement(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  const std::map<XLKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Max |I| + |J| over stored terms; -1 if zero.
  int filtration_degree() const;

  Rational coeff(const XLKey& k) const;
  void add_term(const XLKey& k, const Rational& c);

  static NOElement lambda_gen(int rank, int i, int power = 1);
  static NOElement x_gen(int rank, int i, int power = 1);
  static NOElement monomial(int rank, const MultiIndex& x, const MultiIndex& l,
                            const Rational& c);

  NOElement operator+(const NOElement& o) const;
  NOElement operator-(const NOElement& o) const;
  NOElement operator*(const Rational& c) const;
  NOElement& operator+=(const NOElement& o);
  bool operator==(const NOElement& o) const = default;

  // True iff every stored X exponent vector is componentwise even.
  bool even_in_x() const;

 private:
  int rank_;
  std::map<XLKey, Rational> terms_;
};

// Normal-ordered product: X^I1 L^J1 . X^I2 L^J2 =
//   X^{I1+I2} prod_i (lambda_i + I2_i)^{J1_i} lambda^{J2}.
NOElement no_mul(const NOElement& a, const NOElement& b);

NOElement commutator_uenv(const NOElement& a, const NOElement& b);

// Drop every term with |I| > 0; the rest becomes a polynomial in l1..ll.
SparsePoly mu_projection(const NOElement& a);

// Omega = sum_ij G_ij lambda_i lambda_j + sum_i X_i^2.
NOElement build_Omega(const RootSystem& rs);

}  // namespace qtoda
