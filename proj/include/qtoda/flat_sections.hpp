#pragma once

#include <optional>

#include "qtoda/diff_op.hpp"
#include "qtoda/qcoh.hpp"
#include "qtoda/series.hpp"

namespace qtoda {

// Constant-matrix decomposition of a polynomial matrix in the q variables:
// A = sum_d A[d] q^d.
std::map<MultiIndex, RatMat> qmatrix_coefficients(const QMatrix& m);

// Vector-valued polynomial in one variable t: coeffs[j] is the coefficient
// of t^j.
using PolyVec = std::vector<std::vector<Rational>>;

// Polynomial solution of df/dt = A f + g. Invertible A: unique solution;
// nilpotent A: unique solution with prescribed constant term f0 (required
// in that case). Throws if A is neither invertible nor nilpotent.
PolyVec solve_poly_ode(const RatMat& A, const PolyVec& g,
                       const std::optional<std::vector<Rational>>& f0);

// Formal flat section of h ds/dt_i = A_i s with prescribed constant term a,
// truncated at e^t-degree N. The A_i must pairwise commute, satisfy the
// potential symmetry q_i dA_j/dq_i = q_j dA_i/dq_j, and split into a
// strictly lower triangular constant part plus quantum terms carrying q_i.
FormalSection solve_flat_section(const std::vector<QMatrix>& A,
                                 const std::vector<Rational>& a, int N);

// Coordinate of s dual to the identity class.
ScalarSeries pair_with_one(const FormalSection& s, const SchubertBasis& basis);

// Residual h d_i s - A_i s, truncated at the section's order.
FormalSection flat_residual(const std::vector<QMatrix>& A, const FormalSection& s,
                            std::size_t i);

// op applied to a scalar series; the result is truncated at the input
// order minus the operator's e^t-degree.
ScalarSeries apply_diffop(const DiffOp& op, const ScalarSeries& g);

// op applied to (s, 1); expected identically zero. The returned residual
// is truncated at N - et_degree(op).
ScalarSeries annihilation_check(const DiffOp& op, const FormalSection& s,
                                const SchubertBasis& basis);

struct KimCertificate {
  std::vector<Rational> minors;  // leading principal minors of G
  bool positive_definite = false;
};

// Positive definiteness of the coroot Gram matrix: the inequality that
// makes a zero-constant-term series annihilated by H vanish entirely.
KimCertificate kim_lemma_certificate(const RootSystem& rs);

}  // namespace qtoda
