#pragma once

#include <memory>
#include <vector>

#include "qtoda/root_system.hpp"
#include "qtoda/sparse_poly.hpp"
#include "qtoda/weyl.hpp"

namespace qtoda {

// Chevalley generators u_1..u_l of the W-invariant polynomial ring in the
// weight variables l1..ll. u_1 is pinned to sum_{ij} G_ij l_i l_j; the
// higher generators come from a deterministic Reynolds construction.
struct InvariantSet {
  std::shared_ptr<const VarSet> vars;  // l1..ll, weight 1
  std::vector<SparsePoly> u;
  std::vector<int> degrees;
};

// Variable set l1..ll used for all weight-space polynomials.
std::shared_ptr<const VarSet> weight_vars(int rank);

// p with every variable replaced by its image under w (matrix on weight
// coordinates); a left action on polynomials.
SparsePoly apply_weyl(const SparsePoly& p, const RatMat& w);

// (1/|W|) sum_w w.p  — idempotent projector onto invariants.
SparsePoly reynolds(const SparsePoly& p, const WeylGroup& W);

// Degrees d_1 <= ... <= d_l found by comparing invariant-slice dimensions
// (rank of the Reynolds operator per degree) against the slice generated by
// lower-degree generators; checked against prod d_k = |W|.
std::vector<int> fundamental_degrees(const RootSystem& rs, const WeylGroup& W);

InvariantSet chevalley_generators(const RootSystem& rs, const WeylGroup& W);

// det(du_k / dl_j); nonzero of degree |Phi+| certifies independence.
SparsePoly jacobian_det(const InvariantSet& inv);

}  // namespace qtoda
