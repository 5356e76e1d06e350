#pragma once

#include <map>
#include <vector>

#include "qtoda/linalg.hpp"
#include "qtoda/multi_index.hpp"
#include "qtoda/rational.hpp"

namespace qtoda {

// Laurent polynomial in the formal parameter h.
class LaurentH {
 public:
  LaurentH() = default;
  explicit LaurentH(const Rational& c, int hpow = 0) {
    if (!qtoda::is_zero(c)) c_.emplace(hpow, c);
  }

  const std::map<int, Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  void add(int hpow, const Rational& v) {
    if (qtoda::is_zero(v)) return;
    auto [it, inserted] = c_.emplace(hpow, v);
    if (!inserted) {
      it->second += v;
      if (qtoda::is_zero(it->second)) c_.erase(it);
    }
  }

  LaurentH operator+(const LaurentH& o) const {
    LaurentH r(*this);
    for (const auto& [p, v] : o.c_) r.add(p, v);
    return r;
  }
  LaurentH operator-(const LaurentH& o) const {
    LaurentH r(*this);
    for (const auto& [p, v] : o.c_) r.add(p, -v);
    return r;
  }
  LaurentH operator*(const LaurentH& o) const {
    LaurentH r;
    for (const auto& [p, v] : c_)
      for (const auto& [q, w] : o.c_) r.add(p + q, v * w);
    return r;
  }
  LaurentH operator*(const Rational& s) const {
    LaurentH r;
    for (const auto& [p, v] : c_) r.add(p, v * s);
    return r;
  }
  // Multiplication by h^k (k may be negative).
  LaurentH shifted(int k) const {
    LaurentH r;
    for (const auto& [p, v] : c_) r.add(p + k, v);
    return r;
  }
  bool operator==(const LaurentH& o) const = default;

  Rational eval(const Rational& h) const {
    Rational acc(0);
    for (const auto& [p, v] : c_) {
      Rational t = v;
      for (int k = 0; k < p; ++k) t *= h;
      for (int k = 0; k > p; --k) t /= h;
      acc += t;
    }
    return acc;
  }

 private:
  std::map<int, Rational> c_;
};

// Polynomial in t_1..t_l with Laurent-in-h coefficients.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const std::map<MultiIndex, LaurentH>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  static TPoly constant(std::size_t nvars, const LaurentH& c) {
    TPoly p(nvars);
    p.add(MultiIndex(nvars), c);
    return p;
  }

  void add(const MultiIndex& m, const LaurentH& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  TPoly operator+(const TPoly& o) const {
    TPoly r(*this);
    for (const auto& [m, c] : o.t_) r.add(m, c);
    return r;
  }
  TPoly operator-(const TPoly& o) const {
    TPoly r(*this);
    for (const auto& [m, c] : o.t_) r.add(m, c * Rational(-1));
    return r;
  }
  TPoly operator*(const Rational& s) const {
    TPoly r(nvars_);
    for (const auto& [m, c] : t_) r.add(m, c * s);
    return r;
  }
  TPoly operator*(const LaurentH& s) const {
    TPoly r(nvars_);
    for (const auto& [m, c] : t_) r.add(m, c * s);
    return r;
  }
  TPoly shifted_h(int k) const {
    TPoly r(nvars_);
    for (const auto& [m, c] : t_) r.add(m, c.shifted(k));
    return r;
  }
  // Multiply by the monomial t^e.
  TPoly times_t(std::size_t var, int e) const {
    TPoly r(nvars_);
    for (const auto& [m, c] : t_) {
      MultiIndex mm(m);
      mm[var] += e;
      r.add(mm, c);
    }
    return r;
  }
  TPoly derivative(std::size_t var) const {
    TPoly r(nvars_);
    for (const auto& [m, c] : t_) {
      if (m[var] == 0) continue;
      MultiIndex mm(m);
      mm[var] -= 1;
      r.add(mm, c * Rational(m[var]));
    }
    return r;
  }
  // Coefficient of t_var^j (a polynomial with exponent 0 in position var).
  TPoly coefficient_of(std::size_t var, int j) const {
    TPoly r(nvars_);
    for (const auto& [m, c] : t_) {
      if (m[var] != j) continue;
      MultiIndex mm(m);
      mm[var] = 0;
      r.add(mm, c);
    }
    return r;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m[var]);
    return d;
  }
  bool operator==(const TPoly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }

  bool is_zero_at_h(const Rational& h) const {
    for (const auto& [m, c] : t_)
      if (!qtoda::is_zero(c.eval(h))) return false;
    return true;
  }

 private:
  std::size_t nvars_ = 0;
  std::map<MultiIndex, LaurentH> t_;
};

// (h d/dt_i)(f e^{td}) = h (df/dt_i + d_i f) e^{td}; this is the action
// on the coefficient f at e^t-degree d.
inline TPoly h_partial(const TPoly& f, std::size_t var, int d_i) {
  return (f.derivative(var) + f * Rational(d_i)).shifted_h(1);
}

// Truncated element of R[t][[e^t]] with Laurent-in-h coefficients.
struct ScalarSeries {
  std::size_t nvars = 0;
  int truncation = 0;
  std::map<MultiIndex, TPoly> terms;  // e^t-multi-index -> coefficient

  bool is_zero() const {
    for (const auto& [d, f] : terms)
      if (!f.is_zero()) return false;
    return true;
  }
  bool is_zero_at_h(const Rational& h) const {
    for (const auto& [d, f] : terms)
      if (!f.is_zero_at_h(h)) return false;
    return true;
  }
  void add(const MultiIndex& d, const TPoly& f) {
    if (f.is_zero() || d.total() > truncation) return;
    auto [it, inserted] = terms.emplace(d, f);
    if (!inserted) {
      it->second = it->second + f;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  bool operator==(const ScalarSeries& o) const {
    return nvars == o.nvars && truncation == o.truncation && terms == o.terms;
  }
};

// Truncated H-valued series in the dual Schubert coordinates.
struct FormalSection {
  std::size_t nvars = 0;   // rank l
  std::size_t dim = 0;     // |W|
  int truncation = 0;
  std::map<MultiIndex, std::vector<TPoly>> terms;

  bool is_zero() const {
    for (const auto& [d, v] : terms)
      for (const auto& f : v)
        if (!f.is_zero()) return false;
    return true;
  }
  bool is_zero_at_h(const Rational& h) const {
    for (const auto& [d, v] : terms)
      for (const auto& f : v)
        if (!f.is_zero_at_h(h)) return false;
    return true;
  }
  bool operator==(const FormalSection& o) const {
    return nvars == o.nvars && dim == o.dim && truncation == o.truncation && terms == o.terms;
  }
};

// v -> M v on coefficient vectors of TPoly.
inline std::vector<TPoly> mat_apply(const RatMat& M, const std::vector<TPoly>& v,
                                    std::size_t nvars) {
  std::vector<TPoly> r(M.rows(), TPoly(nvars));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!is_zero(M(i, j))) r[i] = r[i] + v[j] * M(i, j);
  return r;
}

}  // namespace qtoda
