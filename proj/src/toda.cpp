#include "qtoda/toda.hpp"

#include <stdexcept>

#include "qtoda/invariants.hpp"
#include "qtoda/linalg.hpp"

namespace qtoda {

std::shared_ptr<const VarSet> ql_vars(int rank) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 1; i <= rank; ++i) {
    names.push_back("Q" + std::to_string(i));
    weights.push_back(2);
  }
  for (int i = 1; i <= rank; ++i) {
    names.push_back("L" + std::to_string(i));
    weights.push_back(1);
  }
  return VarSet::make(std::move(names), std::move(weights));
}

NOElement solve_Omega_k(const RootSystem& rs, const SparsePoly& u_k) {
  const int l = rs.rank();
  const std::size_t ls = static_cast<std::size_t>(l);
  if (!u_k.is_homogeneous())
    throw std::invalid_argument("solve_Omega_k: u_k must be homogeneous");
  const int d = static_cast<int>(u_k.degree());

  // Ansatz basis: all X^{2I} lambda^J with 2|I| + |J| <= d.
  struct AnsatzTerm {
    MultiIndex x2;  // actual X exponents (even)
    MultiIndex j;
  };
  std::vector<AnsatzTerm> basis;
  for (int xi = 0; 2 * xi <= d; ++xi)
    for (const auto& I : all_of_degree(ls, xi))
      for (const auto& J : all_up_to_degree(ls, d - 2 * xi)) {
        MultiIndex x2(I);
        for (auto& e : x2.e) e *= 2;
        basis.push_back({x2, J});
      }

  const NOElement omega = build_Omega(rs);

  // Commutator of each basis monomial with Omega; collect the linear
  // constraints coefficientwise in the normal-ordered basis.
  std::map<XLKey, std::size_t> row_of;
  std::vector<std::map<std::size_t, Rational>> cols(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    NOElement mono = NOElement::monomial(l, basis[t].x2, basis[t].j, Rational(1));
    NOElement comm = commutator_uenv(mono, omega);
    for (const auto& [key, c] : comm.terms()) {
      auto [it, ignored] = row_of.emplace(key, row_of.size());
      cols[t][it->second] = c;
    }
  }
  const std::size_t comm_rows = row_of.size();

  // mu constraint: for each pure-lambda ansatz monomial (|I| = 0) the
  // coefficient must match u_k; for all other lambda monomials of degree
  // <= d the match is against zero (they never appear: u_k homogeneous).
  std::vector<std::pair<std::size_t, Rational>> mu_rows;  // (basis idx, rhs)
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (basis[t].x2.total() != 0) continue;
    mu_rows.emplace_back(t, u_k.coeff(basis[t].j));
  }

  RatMat A(comm_rows + mu_rows.size(), basis.size());
  std::vector<Rational> b(A.rows(), Rational(0));
  for (std::size_t t = 0; t < basis.size(); ++t)
    for (const auto& [r, c] : cols[t]) A(r, t) = c;
  for (std::size_t m = 0; m < mu_rows.size(); ++m) {
    A(comm_rows + m, mu_rows[m].first) = 1;
    b[comm_rows + m] = mu_rows[m].second;
  }

  LinearSolution sol = solve_linear(A, b);
  if (sol.status == LinearSolution::Status::inconsistent)
    throw std::logic_error("Omega_k system inconsistent; lift should exist");
  if (sol.status != LinearSolution::Status::unique)
    throw std::logic_error("Omega_k system under-determined; lift should be unique");

  NOElement result(l);
  for (std::size_t t = 0; t < basis.size(); ++t)
    result.add_term(XLKey{basis[t].x2, basis[t].j}, sol.particular[t]);
  return result;
}

FkSplit split_F_f(const NOElement& omega_k) {
  if (!omega_k.even_in_x())
    throw std::invalid_argument("split_F_f: element is not even in X");
  const int l = omega_k.rank();
  const std::size_t ls = static_cast<std::size_t>(l);
  auto vars = ql_vars(l);

  SparsePoly full(vars);
  for (const auto& [key, c] : omega_k.terms()) {
    MultiIndex m(2 * ls);
    for (std::size_t i = 0; i < ls; ++i) {
      m[i] = key.x[i] / 2;        // Q exponent
      m[ls + i] = key.l[i];       // L exponent
    }
    full.add_term(m, c);
  }
  const long d = full.degree();

  FkSplit out{full.graded_part(d), SparsePoly::zero(vars)};
  out.f = full - out.F;
  for (const auto& [m, c] : out.f.terms()) {
    int qtot = 0;
    for (std::size_t i = 0; i < ls; ++i) qtot += m[i];
    if (qtot == 0)
      throw std::logic_error("split_F_f: remainder has a pure-L term");
  }
  return out;
}

bool poisson_check(const SparsePoly& F_k, const SparsePoly& F_1) {
  const auto& vars = F_k.vars();
  const std::size_t l = vars->size() / 2;
  // {F, G} = sum_i 2 Q_i (dF/dL_i dG/dQ_i - dF/dQ_i dG/dL_i).
  SparsePoly bracket = SparsePoly::zero(vars);
  for (std::size_t i = 0; i < l; ++i) {
    SparsePoly qi = SparsePoly::variable(vars, i);
    bracket += qi * (F_k.derivative(l + i) * F_1.derivative(i) -
                     F_k.derivative(i) * F_1.derivative(l + i)) *
               Rational(2);
  }
  return bracket.is_zero();
}

}  // namespace qtoda
