#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qtoda/linalg.hpp"
#include "qtoda/rational.hpp"

namespace qtoda {

struct UnsupportedType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A positive root with its coordinates in the three bases the pipeline
// needs: fundamental weights, simple roots, and simple coroots.
struct PosRoot {
  std::vector<Rational> weight_coords;   // mu_k = root(alpha_k^vee)
  std::vector<Rational> root_coords;     // expansion in simple roots
  std::vector<Rational> coroot_coords;   // coroot in simple coroots (integers)
  Rational norm2;                        // <root, root>
  long coroot_height = 0;                // sum of coroot_coords
};

// Root system of a simple Lie type at small rank, with the W-invariant
// inner product normalized so long roots have squared length 2.
//
// Supported: A1..A4, B2..B3, C2..C3, D4, G2.
class RootSystem {
 public:
  RootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }

  // C(i,j) = alpha_j(alpha_i^vee).
  const RatMat& cartan() const { return cartan_; }
  // G(i,j) = <alpha_i^vee, alpha_j^vee>.
  const RatMat& coroot_gram() const { return gram_; }
  // <lambda_i, lambda_j>.
  const RatMat& weight_gram() const { return weight_gram_; }
  // d_i = <alpha_i, alpha_i> / 2.
  const std::vector<Rational>& symmetrizer() const { return sym_; }

  const std::vector<PosRoot>& positive_roots() const { return positive_; }

  // Simple root alpha_i in fundamental-weight coordinates.
  std::vector<Rational> simple_root(std::size_t i) const;

  // mu(beta^vee) for mu in weight coordinates and beta^vee in simple-coroot
  // coordinates; bilinear.
  Rational pairing(const std::vector<Rational>& weight,
                   const std::vector<Rational>& coroot) const;

  // Inner product of two weights given in fundamental-weight coordinates.
  Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

  // Matrix of the simple reflection s_i on fundamental-weight coordinates.
  RatMat simple_reflection(std::size_t i) const;

  // Reflection s_beta for a positive root, as a matrix on weight coordinates.
  RatMat reflection(const PosRoot& beta) const;

  static bool supported(char type, int rank);

 private:
  void build_positive_roots();

  char type_;
  int rank_;
  RatMat cartan_;       // C(i,j) = alpha_j(alpha_i^vee)
  RatMat gram_;         // coroot Gram
  RatMat weight_gram_;  // <lambda_i, lambda_j>
  std::vector<Rational> sym_;
  std::vector<PosRoot> positive_;
};

}  // namespace qtoda
