#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtoda/linalg.hpp"
#include "qtoda/multi_index.hpp"
#include "qtoda/sparse_poly.hpp"

using namespace qtoda;

TEST_CASE("rational parsing and printing") {
  CHECK(rat_to_string(rat(3, 2)) == "3/2");
  CHECK(rat_to_string(rat(-4, 2)) == "-2");
  CHECK(rat_from_string("-7/3") == rat(-7, 3));
  CHECK(rat_from_string("4/6") == rat(2, 3));
  CHECK(rat_from_string("0") == Rational(0));
  CHECK(rat_from_string(rat_to_string(rat(22, 7))) == rat(22, 7));
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("multi-index enumeration") {
  // Degree-d slices in n variables have C(n+d-1, d) elements.
  CHECK(all_of_degree(3, 0).size() == 1);
  CHECK(all_of_degree(3, 2).size() == 6);
  CHECK(all_of_degree(2, 5).size() == 6);
  CHECK(all_up_to_degree(2, 3).size() == 10);
  for (const auto& m : all_of_degree(3, 4)) CHECK(m.total() == 4);
  // No duplicates across the enumeration.
  auto v = all_up_to_degree(3, 3);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) CHECK(v[i] != v[j]);
}

TEST_CASE("sparse polynomial arithmetic") {
  auto vars = VarSet::make_unit({"x", "y"});
  SparsePoly x = SparsePoly::variable(vars, 0);
  SparsePoly y = SparsePoly::variable(vars, 1);
  SparsePoly p = (x + y).pow(2);
  CHECK(p == x * x + x * y * Rational(2) + y * y);
  CHECK(p.term_count() == 3);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK((p - p).is_zero());
  CHECK(p.derivative(0) == x * Rational(2) + y * Rational(2));
  CHECK(p.eval({rat(1, 2), rat(3, 2)}) == Rational(4));

  SparsePoly q = p + SparsePoly::constant(vars, rat(5, 3));
  CHECK(!q.is_homogeneous());
  CHECK(q.graded_part(2) == p);
  CHECK(q.graded_part(0) == SparsePoly::constant(vars, rat(5, 3)));
  CHECK(q.graded_part(1).is_zero());
}

TEST_CASE("weighted grading and term order") {
  auto vars = VarSet::make({"Q", "L"}, {2, 1});
  SparsePoly Q = SparsePoly::variable(vars, 0);
  SparsePoly L = SparsePoly::variable(vars, 1);
  SparsePoly p = Q + L * L;
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK((Q * L).degree() == 3);
}

TEST_CASE("substitution is a ring homomorphism") {
  auto vars = VarSet::make_unit({"x", "y"});
  auto tgt = VarSet::make_unit({"s", "t"});
  SparsePoly x = SparsePoly::variable(vars, 0);
  SparsePoly y = SparsePoly::variable(vars, 1);
  std::vector<SparsePoly> im = {SparsePoly::variable(tgt, 0) + SparsePoly::variable(tgt, 1),
                                SparsePoly::variable(tgt, 0) * SparsePoly::variable(tgt, 1)};
  SparsePoly a = x * x + y;
  SparsePoly b = x * y - y;
  CHECK((a * b).substitute(im) == a.substitute(im) * b.substitute(im));
  CHECK((a + b).substitute(im) == a.substitute(im) + b.substitute(im));
}

TEST_CASE("linear solve: unique, affine, inconsistent") {
  RatMat A(2, 2);
  A(0, 0) = 2; A(0, 1) = 1; A(1, 0) = 1; A(1, 1) = -1;
  LinearSolution s = solve_linear(A, {Rational(1), Rational(5)});
  REQUIRE(s.status == LinearSolution::Status::unique);
  CHECK(s.particular[0] == Rational(2));
  CHECK(s.particular[1] == Rational(-3));

  RatMat B(2, 3);
  B(0, 0) = 1; B(0, 1) = 1; B(0, 2) = 1;
  B(1, 0) = 0; B(1, 1) = 1; B(1, 2) = 2;
  LinearSolution t = solve_linear(B, {Rational(6), Rational(3)});
  REQUIRE(t.status == LinearSolution::Status::affine);
  CHECK(t.kernel_dim() == 1);
  // Residual of the particular solution is exactly zero.
  std::vector<Rational> r = B * t.particular;
  CHECK(r[0] == Rational(6));
  CHECK(r[1] == Rational(3));
  // Kernel vectors are annihilated exactly.
  std::vector<Rational> k = B * t.kernel[0];
  CHECK(qtoda::is_zero(k[0]));
  CHECK(qtoda::is_zero(k[1]));

  RatMat C(2, 1);
  C(0, 0) = 1; C(1, 0) = 1;
  LinearSolution u = solve_linear(C, {Rational(0), Rational(1)});
  CHECK(u.status == LinearSolution::Status::inconsistent);
}

TEST_CASE("matrix inverse, determinant and rank") {
  RatMat A(3, 3);
  A(0, 0) = rat(1, 2); A(0, 1) = 1; A(0, 2) = 0;
  A(1, 0) = 0; A(1, 1) = 1; A(1, 2) = rat(2, 3);
  A(2, 0) = 1; A(2, 1) = 0; A(2, 2) = 1;
  RatMat inv = inverse(A);
  CHECK((A * inv) == RatMat::identity(3));
  CHECK((inv * A) == RatMat::identity(3));
  CHECK(A.det() == rat(1, 2) + rat(2, 3));
  CHECK(rank(A) == 3);

  RatMat S(2, 2);
  S(0, 0) = 1; S(0, 1) = 2; S(1, 0) = 2; S(1, 1) = 4;
  CHECK(rank(S) == 1);
  CHECK(qtoda::is_zero(S.det()));
  CHECK_THROWS_AS(inverse(S), std::domain_error);
}
