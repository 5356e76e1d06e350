#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qtoda/multi_index.hpp"
#include "qtoda/rational.hpp"

namespace qtoda {

// Named variables with integer degree weights. Shared between all
// polynomials over the same ring; compared by content.
class VarSet {
 public:
  VarSet(std::vector<std::string> names, std::vector<int> weights);

  static std::shared_ptr<const VarSet> make(std::vector<std::string> names,
                                            std::vector<int> weights);
  // All weights 1.
  static std::shared_ptr<const VarSet> make_unit(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }

  long weighted_degree(const MultiIndex& m) const;

  bool operator==(const VarSet& o) const {
    return names_ == o.names_ && weights_ == o.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

// Graded-lexicographic term order: weighted degree first, then lex.
struct GradedLexLess {
  std::shared_ptr<const VarSet> vars;
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    long da = vars->weighted_degree(a);
    long db = vars->weighted_degree(b);
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

// Sparse multivariate polynomial over Rational. Zero coefficients are
// never stored; equality is term-map equality.
class SparsePoly {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

  explicit SparsePoly(std::shared_ptr<const VarSet> vars);

  static SparsePoly zero(std::shared_ptr<const VarSet> vars);
  static SparsePoly constant(std::shared_ptr<const VarSet> vars, const Rational& c);
  static SparsePoly variable(std::shared_ptr<const VarSet> vars, std::size_t i,
                             int power = 1);
  static SparsePoly monomial(std::shared_ptr<const VarSet> vars,
                             const MultiIndex& m, const Rational& c);

  const std::shared_ptr<const VarSet>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const MultiIndex& m) const;
  void add_term(const MultiIndex& m, const Rational& c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const Rational& c) const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  bool operator==(const SparsePoly& o) const;

  SparsePoly pow(int n) const;
  SparsePoly derivative(std::size_t var) const;

  // Ring homomorphism: variable i is replaced by images[i] (all over one
  // common target variable set).
  SparsePoly substitute(const std::vector<SparsePoly>& images) const;

  Rational eval(const std::vector<Rational>& point) const;

  // Max weighted degree of a stored term; -1 for the zero polynomial.
  long degree() const;
  bool is_homogeneous() const;
  // Sum of terms of weighted degree exactly d.
  SparsePoly graded_part(long d) const;

  std::string to_string() const;

 private:
  void check_same_vars(const SparsePoly& o) const;

  std::shared_ptr<const VarSet> vars_;
  TermMap terms_;
};

inline SparsePoly operator*(const Rational& c, const SparsePoly& p) { return p * c; }

}  // namespace qtoda
