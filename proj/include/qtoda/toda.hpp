#pragma once

#include "qtoda/no_element.hpp"
#include "qtoda/sparse_poly.hpp"

namespace qtoda {

// Variables Q1..Ql (weight 2), L1..Ll (weight 1) used for the commutative
// presentations F_k, f_k of the conserved quantities.
std::shared_ptr<const VarSet> ql_vars(int rank);

// The unique lift of u_k: [Omega_k, Omega] = 0, mu(Omega_k) = u_k with
// matching filtration degree. The ansatz runs over all monomials
// X^{2I} lambda^J with 2|I| + |J| <= deg u_k and the constraints are solved
// exactly; a non-unique or inconsistent system throws.
NOElement solve_Omega_k(const RootSystem& rs, const SparsePoly& u_k);

struct FkSplit {
  SparsePoly F;  // top weighted-degree part, in Q/L variables
  SparsePoly f;  // lower-order remainder; every term carries some Q_i
};

// Rewrite X^{2I} lambda^J -> Q^I L^J and split by weighted degree
// (Q at 2, L at 1). Throws if the remainder has a pure-L term.
FkSplit split_F_f(const NOElement& omega_k);

// Poisson bracket with {l_i, Q_j} = 2 delta_ij Q_j (Q reinterpreted as the
// classical X^2), extended by Leibniz; true iff {F_k, F_1} = 0.
bool poisson_check(const SparsePoly& F_k, const SparsePoly& F_1);

}  // namespace qtoda
