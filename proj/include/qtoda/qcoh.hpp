#pragma once

#include <string>
#include <vector>

#include "qtoda/invariants.hpp"
#include "qtoda/root_system.hpp"
#include "qtoda/sparse_poly.hpp"
#include "qtoda/weyl.hpp"

namespace qtoda {

// Variable set q1..ql, each of degree 4.
std::shared_ptr<const VarSet> q_vars(int rank);

// Schubert basis ordered by decreasing length, ties broken by the
// deterministic Weyl element index.
struct SchubertBasis {
  std::vector<int> order;        // position -> Weyl element index
  std::vector<int> position;     // Weyl element index -> position
  int identity_pos = 0;          // position of sigma_e (last)
  int longest_pos = 0;           // position of sigma_{w0} (first)

  static SchubertBasis build(const WeylGroup& W);
};

// Square matrix over Q[q_1..q_l].
class QMatrix {
 public:
  QMatrix(std::size_t n, std::shared_ptr<const VarSet> vars);

  std::size_t size() const { return n_; }
  const std::shared_ptr<const VarSet>& vars() const { return vars_; }

  const SparsePoly& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  SparsePoly& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const SparsePoly& p) const;
  QMatrix transpose() const;
  bool operator==(const QMatrix& o) const;
  bool is_zero_matrix() const;

  // Entrywise q = 0 specialization.
  QMatrix at_q_zero() const;

  static QMatrix identity(std::size_t n, std::shared_ptr<const VarSet> vars);

  // Column applied to a 0/1 basis vector: returns column j.
  std::vector<SparsePoly> column(std::size_t j) const;

 private:
  std::size_t n_;
  std::shared_ptr<const VarSet> vars_;
  std::vector<SparsePoly> e_;
};

// Matrix of classical multiplication by [lambda_i] = sigma_{s_i} in the
// Schubert basis (Chevalley/Monk rule); q-free.
QMatrix classical_chevalley(const RootSystem& rs, const WeylGroup& W,
                            const SchubertBasis& basis, int i);

// Quantum Chevalley matrix B_i; the divisor columns are cross-checked
// against [lambda_i] * [lambda_j] = classical + delta_ij q_j and a
// violation throws.
QMatrix quantum_chevalley(const RootSystem& rs, const WeylGroup& W,
                          const SchubertBasis& basis, int i);

struct PairingData {
  RatMat pairing;                 // (sigma_v, sigma_w) = delta_{w, w0 v}
  std::vector<QMatrix> A;         // A_i = B_i^T (dual-basis operators)
  std::vector<QMatrix> A_lower;   // q = 0 parts, strictly lower triangular
  std::vector<QMatrix> A_upper;   // quantum parts, strictly upper triangular
};

// Builds the Poincare pairing matrix and the triangular split of the
// transposed operators; throws if the split violates triangularity.
PairingData pairing_data(const WeylGroup& W, const SchubertBasis& basis,
                         const std::vector<QMatrix>& B);

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

// Theorem hypotheses (i)-(vi) plus the divisor structure and the
// triangular split; each failure becomes a report entry with the
// offending indices.
std::vector<CheckResult> verify_hypotheses(const RootSystem& rs, const WeylGroup& W,
                                           const SchubertBasis& basis,
                                           const std::vector<QMatrix>& B);

// F_k({-G_ii q_i}, {B_i}) evaluated over Q[q]; reports whether the full
// matrix vanishes and whether it kills the identity-class vector.
std::vector<CheckResult> verify_relations(const std::vector<SparsePoly>& F,
                                          const std::vector<QMatrix>& B,
                                          const RootSystem& rs,
                                          const SchubertBasis& basis);

// u_k evaluated on commuting q-free matrices (Borel-limit check helper).
QMatrix eval_poly_at_matrices(const SparsePoly& p, const std::vector<QMatrix>& M,
                              std::shared_ptr<const VarSet> qv);

}  // namespace qtoda
