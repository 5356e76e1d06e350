#include "qtoda/qcoh.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtoda {

std::shared_ptr<const VarSet> q_vars(int rank) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 1; i <= rank; ++i) {
    names.push_back("q" + std::to_string(i));
    weights.push_back(4);
  }
  return VarSet::make(std::move(names), std::move(weights));
}

SchubertBasis SchubertBasis::build(const WeylGroup& W) {
  SchubertBasis b;
  b.order.resize(W.size());
  std::iota(b.order.begin(), b.order.end(), 0);
  std::sort(b.order.begin(), b.order.end(), [&](int a, int c) {
    if (W[static_cast<std::size_t>(a)].length != W[static_cast<std::size_t>(c)].length)
      return W[static_cast<std::size_t>(a)].length > W[static_cast<std::size_t>(c)].length;
    return a < c;
  });
  b.position.resize(W.size());
  for (std::size_t p = 0; p < b.order.size(); ++p) {
    b.position[static_cast<std::size_t>(b.order[p])] = static_cast<int>(p);
    if (b.order[p] == 0) b.identity_pos = static_cast<int>(p);
    if (b.order[p] == W.longest()) b.longest_pos = static_cast<int>(p);
  }
  return b;
}

QMatrix::QMatrix(std::size_t n, std::shared_ptr<const VarSet> vars)
    : n_(n), vars_(std::move(vars)), e_(n * n, SparsePoly::zero(vars_)) {}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("QMatrix shape mismatch");
  QMatrix r(n_, vars_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const SparsePoly& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (o(k, j).is_zero()) continue;
        r(i, j) += aik * o(k, j);
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix r(*this);
  for (std::size_t i = 0; i < n_ * n_; ++i) r.e_[i] += o.e_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  QMatrix r(*this);
  for (std::size_t i = 0; i < n_ * n_; ++i) r.e_[i] -= o.e_[i];
  return r;
}

QMatrix QMatrix::operator*(const SparsePoly& p) const {
  QMatrix r(n_, vars_);
  for (std::size_t i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] * p;
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(n_, vars_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
  if (n_ != o.n_) return false;
  for (std::size_t i = 0; i < n_ * n_; ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

bool QMatrix::is_zero_matrix() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

QMatrix QMatrix::at_q_zero() const {
  QMatrix r(n_, vars_);
  const MultiIndex zero(vars_->size());
  for (std::size_t i = 0; i < n_ * n_; ++i) {
    Rational c = e_[i].coeff(zero);
    if (!qtoda::is_zero(c)) r.e_[i].add_term(zero, c);
  }
  return r;
}

QMatrix QMatrix::identity(std::size_t n, std::shared_ptr<const VarSet> vars) {
  QMatrix r(n, vars);
  for (std::size_t i = 0; i < n; ++i)
    r(i, i) = SparsePoly::constant(vars, Rational(1));
  return r;
}

std::vector<SparsePoly> QMatrix::column(std::size_t j) const {
  std::vector<SparsePoly> c;
  c.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) c.push_back((*this)(i, j));
  return c;
}

namespace {

// Exponent vector of q^{alpha^vee}; coroot coordinates are integral.
MultiIndex coroot_exponents(const PosRoot& alpha) {
  MultiIndex m(alpha.coroot_coords.size());
  for (std::size_t j = 0; j < alpha.coroot_coords.size(); ++j) {
    const Rational& c = alpha.coroot_coords[j];
    if (c.get_den() != 1)
      throw std::logic_error("non-integral coroot coordinate");
    m[j] = static_cast<int>(c.get_num().get_si());
  }
  return m;
}

struct ChevalleyContext {
  std::vector<int> reflection_index;  // per positive root
};

ChevalleyContext make_context(const RootSystem& rs, const WeylGroup& W) {
  ChevalleyContext ctx;
  for (const auto& alpha : rs.positive_roots()) {
    int idx = W.index_of(rs.reflection(alpha));
    if (idx < 0) throw std::logic_error("root reflection not found in Weyl group");
    ctx.reflection_index.push_back(idx);
  }
  return ctx;
}

QMatrix chevalley_matrix(const RootSystem& rs, const WeylGroup& W,
                         const SchubertBasis& basis, int i, bool quantum) {
  const std::size_t n = W.size();
  auto qv = q_vars(rs.rank());
  QMatrix B(n, qv);
  ChevalleyContext ctx = make_context(rs, W);
  const auto& roots = rs.positive_roots();
  for (std::size_t pw = 0; pw < n; ++pw) {
    const int w = basis.order[pw];
    for (std::size_t a = 0; a < roots.size(); ++a) {
      const Rational coeff = roots[a].coroot_coords[static_cast<std::size_t>(i)];
      if (qtoda::is_zero(coeff)) continue;
      const int ws = W.mul(w, ctx.reflection_index[a]);
      const int lw = W[static_cast<std::size_t>(w)].length;
      const int lws = W[static_cast<std::size_t>(ws)].length;
      const std::size_t pv = static_cast<std::size_t>(basis.position[static_cast<std::size_t>(ws)]);
      if (lws == lw + 1) {
        B(pv, pw).add_term(MultiIndex(qv->size()), coeff);
      } else if (quantum && lws == lw + 1 - 2 * static_cast<int>(roots[a].coroot_height)) {
        B(pv, pw).add_term(coroot_exponents(roots[a]), coeff);
      }
    }
  }
  return B;
}

std::string entry_name(const SchubertBasis&, std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "entry (" << i << "," << j << ")";
  return os.str();
}

}  // namespace

QMatrix classical_chevalley(const RootSystem& rs, const WeylGroup& W,
                            const SchubertBasis& basis, int i) {
  return chevalley_matrix(rs, W, basis, i, false);
}

QMatrix quantum_chevalley(const RootSystem& rs, const WeylGroup& W,
                          const SchubertBasis& basis, int i) {
  QMatrix B = chevalley_matrix(rs, W, basis, i, true);
  // Divisor-column consistency: [l_i] o sigma_{s_j} must equal the
  // classical product plus delta_ij q_j sigma_e.
  QMatrix C = classical_chevalley(rs, W, basis, i);
  auto qv = B.vars();
  for (int j = 0; j < rs.rank(); ++j) {
    const int sj = W.index_of(rs.simple_reflection(static_cast<std::size_t>(j)));
    const std::size_t col = static_cast<std::size_t>(basis.position[static_cast<std::size_t>(sj)]);
    for (std::size_t row = 0; row < B.size(); ++row) {
      SparsePoly expected = C(row, col);
      if (j == i && row == static_cast<std::size_t>(basis.identity_pos))
        expected += SparsePoly::variable(qv, static_cast<std::size_t>(j));
      if (!(B(row, col) == expected))
        throw std::logic_error("quantum Chevalley violates the divisor product identity");
    }
  }
  return B;
}

PairingData pairing_data(const WeylGroup& W, const SchubertBasis& basis,
                         const std::vector<QMatrix>& B) {
  const std::size_t n = W.size();
  PairingData pd;
  pd.pairing = RatMat(n, n);
  for (std::size_t pv = 0; pv < n; ++pv) {
    const int target = W.mul(W.longest(), basis.order[pv]);
    pd.pairing(static_cast<std::size_t>(basis.position[static_cast<std::size_t>(target)]), pv) = 1;
  }
  for (std::size_t i = 0; i < B.size(); ++i) {
    QMatrix A = B[i].transpose();
    QMatrix lower = A.at_q_zero();
    QMatrix upper = A - lower;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (!lower(r, c).is_zero() && r <= c)
          throw std::logic_error("A'_" + std::to_string(i + 1) +
                                 " is not strictly lower triangular at " + entry_name(basis, r, c));
        if (!upper(r, c).is_zero()) {
          if (r >= c)
            throw std::logic_error("A''_" + std::to_string(i + 1) +
                                   " is not strictly upper triangular at " + entry_name(basis, r, c));
          for (const auto& [m, coef] : upper(r, c).terms())
            if (m[i] == 0)
              throw std::logic_error("A''_" + std::to_string(i + 1) +
                                     " has a term without q_" + std::to_string(i + 1));
        }
      }
    pd.A.push_back(A);
    pd.A_lower.push_back(std::move(lower));
    pd.A_upper.push_back(std::move(upper));
  }
  return pd;
}

std::vector<CheckResult> verify_hypotheses(const RootSystem& rs, const WeylGroup& W,
                                           const SchubertBasis& basis,
                                           const std::vector<QMatrix>& B) {
  std::vector<CheckResult> report;
  const std::size_t n = W.size();
  const int l = rs.rank();
  auto qv = B.empty() ? q_vars(l) : B[0].vars();

  // (i) grading: 2 len(v) + 4|d| = 2 len(w) + 2 on every monomial.
  {
    CheckResult r{"i-grading", true, ""};
    for (int i = 0; i < l && r.pass; ++i)
      for (std::size_t pv = 0; pv < n && r.pass; ++pv)
        for (std::size_t pw = 0; pw < n && r.pass; ++pw)
          for (const auto& [m, c] : B[static_cast<std::size_t>(i)](pv, pw).terms()) {
            const int lv = W[static_cast<std::size_t>(basis.order[pv])].length;
            const int lw = W[static_cast<std::size_t>(basis.order[pw])].length;
            if (2 * lv + 4 * m.total() != 2 * lw + 2) {
              r.pass = false;
              r.detail = "B_" + std::to_string(i + 1) + " " + entry_name(basis, pv, pw);
              break;
            }
          }
    report.push_back(std::move(r));
  }

  // (ii) classical limit.
  {
    CheckResult r{"ii-classical-limit", true, ""};
    for (int i = 0; i < l; ++i) {
      QMatrix C = classical_chevalley(rs, W, basis, i);
      if (!(B[static_cast<std::size_t>(i)].at_q_zero() == C)) {
        r.pass = false;
        r.detail = "B_" + std::to_string(i + 1) + " at q=0 differs from the classical matrix";
        break;
      }
    }
    report.push_back(std::move(r));
  }

  // (iii)+(iv) at operator level: pairwise commutation.
  {
    CheckResult r{"iii-iv-commutation", true, ""};
    for (int i = 0; i < l && r.pass; ++i)
      for (int j = i + 1; j < l && r.pass; ++j) {
        QMatrix lhs = B[static_cast<std::size_t>(i)] * B[static_cast<std::size_t>(j)];
        QMatrix rhs = B[static_cast<std::size_t>(j)] * B[static_cast<std::size_t>(i)];
        if (!(lhs == rhs)) {
          r.pass = false;
          r.detail = "[B_" + std::to_string(i + 1) + ", B_" + std::to_string(j + 1) + "] != 0";
        }
      }
    report.push_back(std::move(r));
  }

  // (v) sum G_ij B_i B_j e1 = sum G_ii q_i e1.
  {
    CheckResult r{"v-energy-identity", true, ""};
    const RatMat& G = rs.coroot_gram();
    QMatrix acc(n, qv);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        if (qtoda::is_zero(G(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))) continue;
        acc = acc + (B[static_cast<std::size_t>(i)] * B[static_cast<std::size_t>(j)]) *
                        SparsePoly::constant(qv, G(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      }
    SparsePoly rhs(qv);
    for (int i = 0; i < l; ++i) {
      MultiIndex m(qv->size());
      m[static_cast<std::size_t>(i)] = 1;
      rhs.add_term(m, G(static_cast<std::size_t>(i), static_cast<std::size_t>(i)));
    }
    const std::size_t e1 = static_cast<std::size_t>(basis.identity_pos);
    for (std::size_t row = 0; row < n; ++row) {
      SparsePoly expected = (row == e1) ? rhs : SparsePoly::zero(qv);
      if (!(acc(row, e1) == expected)) {
        r.pass = false;
        r.detail = "mismatch at row " + std::to_string(row);
        break;
      }
    }
    report.push_back(std::move(r));
  }

  // (vi) q_i dB_j/dq_i = q_j dB_i/dq_j.
  {
    CheckResult r{"vi-potential-symmetry", true, ""};
    for (int i = 0; i < l && r.pass; ++i)
      for (int j = i + 1; j < l && r.pass; ++j)
        for (std::size_t pv = 0; pv < n && r.pass; ++pv)
          for (std::size_t pw = 0; pw < n; ++pw) {
            SparsePoly qi = SparsePoly::variable(qv, static_cast<std::size_t>(i));
            SparsePoly qj = SparsePoly::variable(qv, static_cast<std::size_t>(j));
            SparsePoly lhs = qi * B[static_cast<std::size_t>(j)](pv, pw).derivative(static_cast<std::size_t>(i));
            SparsePoly rhs = qj * B[static_cast<std::size_t>(i)](pv, pw).derivative(static_cast<std::size_t>(j));
            if (!(lhs == rhs)) {
              r.pass = false;
              r.detail = "(i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") " + entry_name(basis, pv, pw);
              break;
            }
          }
    report.push_back(std::move(r));
  }

  // Divisor structure (every quantum term of B_i is a multiple of q_i).
  {
    CheckResult r{"divisor-structure", true, ""};
    for (int i = 0; i < l && r.pass; ++i)
      for (std::size_t pv = 0; pv < n && r.pass; ++pv)
        for (std::size_t pw = 0; pw < n && r.pass; ++pw)
          for (const auto& [m, c] : B[static_cast<std::size_t>(i)](pv, pw).terms())
            if (!m.is_zero() && m[static_cast<std::size_t>(i)] == 0) {
              r.pass = false;
              r.detail = "B_" + std::to_string(i + 1) + " " + entry_name(basis, pv, pw);
              break;
            }
    report.push_back(std::move(r));
  }

  // Triangular split of the transposed operators.
  {
    CheckResult r{"triangular-split", true, ""};
    try {
      pairing_data(W, basis, B);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    report.push_back(std::move(r));
  }

  return report;
}

QMatrix eval_poly_at_matrices(const SparsePoly& p, const std::vector<QMatrix>& M,
                              std::shared_ptr<const VarSet> qv) {
  if (M.empty()) throw std::invalid_argument("no matrices supplied");
  const std::size_t n = M[0].size();
  // Cached powers per variable.
  std::vector<std::vector<QMatrix>> powers(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) powers[i].push_back(QMatrix::identity(n, qv));
  auto power = [&](std::size_t i, int e) -> const QMatrix& {
    while (static_cast<int>(powers[i].size()) <= e)
      powers[i].push_back(powers[i].back() * M[i]);
    return powers[i][static_cast<std::size_t>(e)];
  };
  QMatrix acc(n, qv);
  for (const auto& [m, c] : p.terms()) {
    QMatrix term = QMatrix::identity(n, qv) * SparsePoly::constant(qv, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * power(i, m[i]);
    acc = acc + term;
  }
  return acc;
}

std::vector<CheckResult> verify_relations(const std::vector<SparsePoly>& F,
                                          const std::vector<QMatrix>& B,
                                          const RootSystem& rs,
                                          const SchubertBasis& basis) {
  std::vector<CheckResult> report;
  const int l = rs.rank();
  const std::size_t ls = static_cast<std::size_t>(l);
  const std::size_t n = B[0].size();
  auto qv = B[0].vars();
  const RatMat& G = rs.coroot_gram();

  // Cached powers of B_i.
  std::vector<std::vector<QMatrix>> powers(ls);
  for (std::size_t i = 0; i < ls; ++i) powers[i].push_back(QMatrix::identity(n, qv));
  auto power = [&](std::size_t i, int e) -> const QMatrix& {
    while (static_cast<int>(powers[i].size()) <= e)
      powers[i].push_back(powers[i].back() * B[i]);
    return powers[i][static_cast<std::size_t>(e)];
  };

  for (std::size_t k = 0; k < F.size(); ++k) {
    CheckResult r{"relation-F" + std::to_string(k + 1), true, ""};
    QMatrix acc(n, qv);
    for (const auto& [m, c] : F[k].terms()) {
      // Scalar part: prod (-G_ii q_i)^{I_i}.
      SparsePoly scalar = SparsePoly::constant(qv, c);
      for (std::size_t i = 0; i < ls; ++i) {
        for (int t = 0; t < m[i]; ++t) {
          SparsePoly qi = SparsePoly::variable(qv, i);
          scalar = scalar * qi * (-G(i, i));
        }
      }
      QMatrix term = QMatrix::identity(n, qv) * scalar;
      for (std::size_t i = 0; i < ls; ++i)
        if (m[ls + i] > 0) term = term * power(i, m[ls + i]);
      acc = acc + term;
    }
    if (!acc.is_zero_matrix()) {
      r.pass = false;
      std::size_t count = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!acc(i, j).is_zero()) ++count;
      r.detail = std::to_string(count) + " nonzero residual entries";
    } else {
      // Identity-class column vanishes a fortiori; recorded explicitly.
      const std::size_t e1 = static_cast<std::size_t>(basis.identity_pos);
      for (std::size_t row = 0; row < n; ++row)
        if (!acc(row, e1).is_zero()) {
          r.pass = false;
          r.detail = "identity-class residual at row " + std::to_string(row);
        }
    }
    report.push_back(std::move(r));
  }
  return report;
}

}  // namespace qtoda
