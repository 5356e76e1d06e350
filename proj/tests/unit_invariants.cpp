#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtoda/invariants.hpp"
#include "qtoda/linalg.hpp"

using namespace qtoda;

namespace {

bool is_invariant(const SparsePoly& p, const WeylGroup& W) {
  for (std::size_t w = 0; w < W.size(); ++w)
    if (apply_weyl(p, W[w].mat) != p) return false;
  return true;
}

// Independent oracle for the invariant dimension in a given degree: rank of
// the Reynolds projector on the monomial basis.
std::size_t invariant_dim(const RootSystem& rs, const WeylGroup& W, int d) {
  auto vars = weight_vars(rs.rank());
  auto monos = all_of_degree(static_cast<std::size_t>(rs.rank()), d);
  RatMat M(monos.size(), monos.size());
  for (std::size_t j = 0; j < monos.size(); ++j) {
    SparsePoly avg = reynolds(SparsePoly::monomial(vars, monos[j], Rational(1)), W);
    for (std::size_t i = 0; i < monos.size(); ++i) M(i, j) = avg.coeff(monos[i]);
  }
  return rank(M);
}

}  // namespace

TEST_CASE("fundamental degrees per type") {
  auto degrees = [](char t, int r) {
    RootSystem rs(t, r);
    return fundamental_degrees(rs, WeylGroup::generate(rs));
  };
  CHECK(degrees('A', 1) == std::vector<int>{2});
  CHECK(degrees('A', 2) == std::vector<int>{2, 3});
  CHECK(degrees('A', 3) == std::vector<int>{2, 3, 4});
  CHECK(degrees('A', 4) == std::vector<int>{2, 3, 4, 5});
  CHECK(degrees('B', 2) == std::vector<int>{2, 4});
  CHECK(degrees('B', 3) == std::vector<int>{2, 4, 6});
  CHECK(degrees('C', 2) == std::vector<int>{2, 4});
  CHECK(degrees('C', 3) == std::vector<int>{2, 4, 6});
  CHECK(degrees('D', 4) == std::vector<int>{2, 4, 4, 6});
  CHECK(degrees('G', 2) == std::vector<int>{2, 6});
}

TEST_CASE("reynolds is an idempotent projector onto invariants") {
  RootSystem rs('A', 2);
  WeylGroup W = WeylGroup::generate(rs);
  auto vars = weight_vars(2);
  SparsePoly p = SparsePoly::variable(vars, 0, 3) +
                 SparsePoly::variable(vars, 1) * SparsePoly::variable(vars, 0);
  SparsePoly r = reynolds(p, W);
  CHECK(is_invariant(r, W));
  CHECK(reynolds(r, W) == r);
}

TEST_CASE("A1: reynolds annihilates the odd generator") {
  RootSystem rs('A', 1);
  WeylGroup W = WeylGroup::generate(rs);
  SparsePoly lam = SparsePoly::variable(weight_vars(1), 0);
  CHECK(reynolds(lam, W).is_zero());
}

TEST_CASE("reynolds-rank oracle confirms the degree sequence for B2") {
  RootSystem rs('B', 2);
  WeylGroup W = WeylGroup::generate(rs);
  // Invariant dimensions 1, 0, 1, 0, 2 for degrees 0..4: generators in
  // degrees 2 and 4 only.
  CHECK(invariant_dim(rs, W, 1) == 0);
  CHECK(invariant_dim(rs, W, 2) == 1);
  CHECK(invariant_dim(rs, W, 3) == 0);
  CHECK(invariant_dim(rs, W, 4) == 2);  // u_1^2 and the new generator
}

TEST_CASE("chevalley generators: invariance, degrees, pinned u_1") {
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
    CAPTURE(t);
    CAPTURE(r);
    RootSystem rs(t, r);
    WeylGroup W = WeylGroup::generate(rs);
    InvariantSet inv = chevalley_generators(rs, W);
    REQUIRE(inv.u.size() == static_cast<std::size_t>(r));
    // u_1 is the coroot quadratic form in the fundamental-weight variables.
    SparsePoly u1 = SparsePoly::zero(inv.vars);
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j)
        u1 += SparsePoly::variable(inv.vars, i) * SparsePoly::variable(inv.vars, j) *
              rs.coroot_gram()(i, j);
    CHECK(inv.u[0] == u1);
    for (std::size_t k = 0; k < inv.u.size(); ++k) {
      CHECK(inv.u[k].is_homogeneous());
      CHECK(inv.u[k].degree() == inv.degrees[k]);
      CHECK(is_invariant(inv.u[k], W));
    }
  }
}

TEST_CASE("jacobian determinant is nonzero of degree |Phi+|") {
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'C', 2}, {'G', 2}}) {
    RootSystem rs(t, r);
    WeylGroup W = WeylGroup::generate(rs);
    InvariantSet inv = chevalley_generators(rs, W);
    SparsePoly jac = jacobian_det(inv);
    CHECK(!jac.is_zero());
    CHECK(jac.degree() == static_cast<long>(rs.positive_roots().size()));
  }
}
