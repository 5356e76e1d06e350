#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtoda/root_system.hpp"
#include "qtoda/weyl.hpp"

using namespace qtoda;

namespace {

struct Expect {
  char type;
  int rank;
  std::size_t pos_roots;
  std::size_t weyl_order;
};

const Expect kTable[] = {
    {'A', 1, 1, 2},   {'A', 2, 3, 6},    {'A', 3, 6, 24},  {'A', 4, 10, 120},
    {'B', 2, 4, 8},   {'B', 3, 9, 48},   {'C', 2, 4, 8},   {'C', 3, 9, 48},
    {'D', 4, 12, 192}, {'G', 2, 6, 12},
};

}  // namespace

TEST_CASE("supported types, root counts and Weyl orders") {
  for (const auto& e : kTable) {
    CAPTURE(e.type);
    CAPTURE(e.rank);
    REQUIRE(RootSystem::supported(e.type, e.rank));
    RootSystem rs(e.type, e.rank);
    CHECK(rs.positive_roots().size() == e.pos_roots);
    WeylGroup W = WeylGroup::generate(rs);
    CHECK(W.size() == e.weyl_order);
    // Longest element length = number of positive roots.
    CHECK(W[static_cast<std::size_t>(W.longest())].length ==
          static_cast<int>(e.pos_roots));
  }
  CHECK(!RootSystem::supported('A', 5));
  CHECK(!RootSystem::supported('B', 4));
  CHECK(!RootSystem::supported('E', 6));
  CHECK_THROWS_AS(RootSystem('F', 4), UnsupportedType);
  CHECK_THROWS_AS(RootSystem('A', 0), UnsupportedType);
}

TEST_CASE("pairing against the Cartan matrix") {
  // alpha_j(alpha_i^vee) = C(i, j) for every supported system.
  for (const auto& e : kTable) {
    RootSystem rs(e.type, e.rank);
    const std::size_t l = static_cast<std::size_t>(e.rank);
    for (std::size_t j = 0; j < l; ++j) {
      std::vector<Rational> aj = rs.simple_root(j);
      for (std::size_t i = 0; i < l; ++i) {
        std::vector<Rational> ei(l, Rational(0));
        ei[i] = 1;
        CHECK(rs.pairing(aj, ei) == rs.cartan()(i, j));
      }
    }
  }
}

TEST_CASE("normalization: long roots have squared length two") {
  for (const auto& e : kTable) {
    RootSystem rs(e.type, e.rank);
    Rational maxn(0);
    for (const auto& r : rs.positive_roots())
      if (r.norm2 > maxn) maxn = r.norm2;
    CHECK(maxn == Rational(2));
  }
}

TEST_CASE("coroot Gram matrices, hand-checked cases") {
  RootSystem b2('B', 2);
  CHECK(b2.coroot_gram()(0, 0) == Rational(2));
  CHECK(b2.coroot_gram()(0, 1) == Rational(-2));
  CHECK(b2.coroot_gram()(1, 1) == Rational(4));

  RootSystem g2('G', 2);
  CHECK(g2.coroot_gram()(0, 0) == Rational(6));
  CHECK(g2.coroot_gram()(0, 1) == Rational(-3));
  CHECK(g2.coroot_gram()(1, 1) == Rational(2));

  // Simply-laced: the coroot Gram matrix is the Cartan matrix.
  for (const Expect& e : kTable) {
    if (e.type != 'A' && e.type != 'D') continue;
    RootSystem rs(e.type, e.rank);
    CHECK(rs.coroot_gram() == rs.cartan());
  }
}

TEST_CASE("gram matrix is symmetric and matches the inner product") {
  for (const auto& e : kTable) {
    RootSystem rs(e.type, e.rank);
    const std::size_t l = static_cast<std::size_t>(e.rank);
    CHECK(rs.coroot_gram() == rs.coroot_gram().transpose());
    CHECK(rs.weight_gram() == rs.weight_gram().transpose());
    // <lambda_i, alpha_j> = delta_ij d_j.
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        std::vector<Rational> li(l, Rational(0));
        li[i] = 1;
        Rational got = rs.inner(li, rs.simple_root(j));
        CHECK(got == (i == j ? rs.symmetrizer()[j] : Rational(0)));
      }
  }
}

TEST_CASE("reflections are involutions preserving the inner product") {
  for (const auto& e : kTable) {
    RootSystem rs(e.type, e.rank);
    const std::size_t l = static_cast<std::size_t>(e.rank);
    for (std::size_t i = 0; i < l; ++i) {
      RatMat s = rs.simple_reflection(i);
      CHECK(s * s == RatMat::identity(l));
    }
    for (const auto& beta : rs.positive_roots()) {
      RatMat s = rs.reflection(beta);
      CHECK(s * s == RatMat::identity(l));
      // s fixes the orthogonal complement and negates beta.
      std::vector<Rational> img = s * beta.weight_coords;
      for (std::size_t k = 0; k < l; ++k)
        CHECK(img[k] == -beta.weight_coords[k]);
    }
  }
}

TEST_CASE("A2: s_1 sends lambda_1 to -lambda_1 + lambda_2 and fixes lambda_2") {
  RootSystem rs('A', 2);
  RatMat s = rs.simple_reflection(0);
  CHECK(s(0, 0) == Rational(-1));
  CHECK(s(1, 0) == Rational(1));
  CHECK(s(0, 1) == Rational(0));
  CHECK(s(1, 1) == Rational(1));
}

TEST_CASE("BFS lengths equal inversion counts") {
  for (const auto& e : kTable) {
    if (e.weyl_order > 48) continue;  // covered in the pipeline for big groups
    RootSystem rs(e.type, e.rank);
    WeylGroup W = WeylGroup::generate(rs);
    for (std::size_t w = 0; w < W.size(); ++w)
      CHECK(W[w].length == W.inversion_count(rs, w));
  }
}

TEST_CASE("group structure sanity") {
  RootSystem rs('A', 2);
  WeylGroup W = WeylGroup::generate(rs);
  // Identity is element 0.
  CHECK(W[0].mat == RatMat::identity(2));
  // w0 is the unique element of maximal length and w0^2 = e.
  int w0 = W.longest();
  CHECK(W.mul(w0, w0) == 0);
  // Closure: every product lands in the group.
  for (std::size_t a = 0; a < W.size(); ++a)
    for (std::size_t b = 0; b < W.size(); ++b)
      CHECK(W.mul(static_cast<int>(a), static_cast<int>(b)) >= 0);
}
