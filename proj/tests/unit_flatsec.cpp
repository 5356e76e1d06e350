#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtoda/flat_sections.hpp"
#include "qtoda/toda.hpp"

using namespace qtoda;

namespace {

struct Setup {
  RootSystem rs;
  WeylGroup W;
  SchubertBasis basis;
  std::vector<QMatrix> B;
  PairingData pd;

  Setup(char t, int r)
      : rs(t, r),
        W(WeylGroup::generate(rs)),
        basis(SchubertBasis::build(W)),
        B(),
        pd([&] {
          for (int i = 0; i < r; ++i) B.push_back(quantum_chevalley(rs, W, basis, i));
          return pairing_data(W, basis, B);
        }()) {}
};

PolyVec derivative_minus(const RatMat& A, const PolyVec& f) {
  // g = f' - A f, so that f solves f' = A f + g.
  const std::size_t n = A.rows();
  PolyVec g(f.size(), std::vector<Rational>(n, Rational(0)));
  for (std::size_t j = 0; j + 1 < f.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      g[j][i] = Rational(static_cast<long>(j + 1)) * f[j + 1][i];
  for (std::size_t j = 0; j < f.size(); ++j) {
    std::vector<Rational> af = A * f[j];
    for (std::size_t i = 0; i < n; ++i) g[j][i] -= af[i];
  }
  return g;
}

}  // namespace

TEST_CASE("polynomial ODE: invertible coefficient matrix") {
  RatMat A(2, 2);
  A(0, 0) = 1; A(0, 1) = 2; A(1, 0) = 0; A(1, 1) = rat(-1, 3);
  PolyVec f = {{rat(1, 2), Rational(3)}, {Rational(0), rat(2, 5)}, {Rational(1), Rational(-1)}};
  PolyVec g = derivative_minus(A, f);
  PolyVec got = solve_poly_ode(A, g, std::nullopt);
  REQUIRE(got.size() >= f.size());
  for (std::size_t j = 0; j < got.size(); ++j)
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(got[j][i] == (j < f.size() ? f[j][i] : Rational(0)));
}

TEST_CASE("polynomial ODE: nilpotent coefficient matrix with pinned value") {
  RatMat N(2, 2);
  N(1, 0) = rat(5, 7);
  PolyVec f = {{Rational(2), Rational(-1)}, {rat(1, 3), Rational(0)}, {Rational(0), Rational(4)}};
  PolyVec g = derivative_minus(N, f);
  PolyVec got = solve_poly_ode(N, g, f[0]);
  REQUIRE(got.size() >= f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    for (std::size_t i = 0; i < 2; ++i) CHECK(got[j][i] == f[j][i]);
}

TEST_CASE("polynomial ODE rejects matrices that are neither") {
  RatMat A(2, 2);
  A(0, 0) = 1;  // singular but not nilpotent
  PolyVec g = {{Rational(1), Rational(1)}};
  CHECK_THROWS(solve_poly_ode(A, g, std::nullopt));
}

TEST_CASE("A1 flat sections: residuals vanish symbolically") {
  Setup s('A', 1);
  for (std::size_t a = 0; a < 2; ++a) {
    std::vector<Rational> e(2, Rational(0));
    e[a] = 1;
    FormalSection sec = solve_flat_section(s.pd.A, e, 4);
    CHECK(flat_residual(s.pd.A, sec, 0).is_zero());
    // At e^t-degree 0 and t = 0 the section is the prescribed vector.
    auto it = sec.terms.find(MultiIndex(1));
    REQUIRE(it != sec.terms.end());
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(it->second[i].coefficient_of(0, 0) == TPoly::constant(1, LaurentH(e[i])));
  }
}

TEST_CASE("A2 flat sections: H and D_k annihilate (s, 1)") {
  Setup s('A', 2);
  InvariantSet inv = chevalley_generators(s.rs, s.W);
  std::vector<DiffOp> D;
  for (const auto& u : inv.u) D.push_back(rho_Dk(solve_Omega_k(s.rs, u), s.rs));
  const DiffOp H = build_H(s.rs);
  // One representative dual class plus the identity class.
  for (std::size_t a : {std::size_t(0), std::size_t(s.W.size() - 1)}) {
    std::vector<Rational> e(s.W.size(), Rational(0));
    e[a] = 1;
    FormalSection sec = solve_flat_section(s.pd.A, e, 3);
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(flat_residual(s.pd.A, sec, i).is_zero());
    CHECK(annihilation_check(H, sec, s.basis).is_zero());
    for (const auto& d : D) CHECK(annihilation_check(d, sec, s.basis).is_zero());
  }
}

TEST_CASE("rational h evaluation agrees with the symbolic result") {
  Setup s('A', 1);
  std::vector<Rational> e = {Rational(1), Rational(0)};
  FormalSection sec = solve_flat_section(s.pd.A, e, 3);
  FormalSection res = flat_residual(s.pd.A, sec, 0);
  CHECK(res.is_zero());
  CHECK(res.is_zero_at_h(rat(3, 7)));
  CHECK(annihilation_check(build_H(s.rs), sec, s.basis).is_zero_at_h(rat(-2, 5)));
}

TEST_CASE("gram positivity certificate for every supported type") {
  for (auto [t, r] : {std::pair{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2},
                      {'B', 3}, {'C', 2}, {'C', 3}, {'D', 4}, {'G', 2}}) {
    CAPTURE(t);
    CAPTURE(r);
    KimCertificate cert = kim_lemma_certificate(RootSystem(t, r));
    CHECK(cert.positive_definite);
    REQUIRE(cert.minors.size() == static_cast<std::size_t>(r));
    for (const auto& m : cert.minors) CHECK(m > 0);
  }
}
