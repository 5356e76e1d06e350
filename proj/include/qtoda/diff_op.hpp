#pragma once

#include <map>

#include "qtoda/multi_index.hpp"
#include "qtoda/no_element.hpp"
#include "qtoda/rational.hpp"
#include "qtoda/root_system.hpp"
#include "qtoda/sparse_poly.hpp"

namespace qtoda {

// Normal-ordered operator monomial e^{tD} (h d/dt)^J h^m.
struct DOKey {
  MultiIndex et;  // exponents of e^{t_i}
  MultiIndex hd;  // exponents of (h d/dt_i)
  int hpow = 0;

  // Grading with deg e^{t_i} = 2, deg (h d/dt_i) = 1, deg h = 1.
  int graded_degree() const { return 2 * et.total() + hd.total() + hpow; }

  bool operator==(const DOKey& o) const = default;
  bool operator<(const DOKey& o) const {
    if (et != o.et) return et < o.et;
    if (hd != o.hd) return hd < o.hd;
    return hpow < o.hpow;
  }
};

// Element of the quantized operator algebra generated by e^{t_i},
// h d/dt_i and h, kept in normal order (function part left).
class DiffOp {
 public:
  explicit DiffOp(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  const std::map<DOKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const DOKey& k, const Rational& c);
  Rational coeff(const DOKey& k) const;

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator*(const Rational& c) const;
  bool operator==(const DiffOp& o) const = default;

  // True iff homogeneous of the given graded degree.
  bool homogeneous_of_degree(int d) const;

  // Max |D| over terms (e^t truncation bookkeeping).
  int et_degree() const;

 private:
  int rank_;
  std::map<DOKey, Rational> terms_;
};

// Normal ordering via (h d/dt)^J e^{tD} = e^{tD} prod_i ((h d/dt)_i + h D_i)^{J_i}.
DiffOp diffop_mul(const DiffOp& a, const DiffOp& b);

DiffOp commutator_diffop(const DiffOp& a, const DiffOp& b);

// D_k = h^{deg Omega_k} rho(Omega_k) with rho(lambda_i) = 2 d/dt_i and
// X_i^2 |-> -4 G_ii e^{t_i} / h^2. Requires Omega_k even in X; the final
// h-exponents are all >= 0.
DiffOp rho_Dk(const NOElement& omega_k, const RootSystem& rs);

// H = D_1 / 4 = sum G_ij (hd)_i (hd)_j - sum G_jj e^{t_j}.
DiffOp build_H(const RootSystem& rs);

// e^t -> 0 part as a polynomial in L1..Ll with (hd)_i -> L_i; throws if any
// h power survives there.
SparsePoly et_zero_part(const DiffOp& d);

// h -> 0 symbol: e^{t_i} -> Q_i, (hd)_i -> L_i, over ql_vars.
SparsePoly h_zero_symbol(const DiffOp& d);

}  // namespace qtoda
