#include "qtoda/no_element.hpp"

#include <stdexcept>

#include "qtoda/invariants.hpp"

namespace qtoda {

int NOElement::filtration_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.filtration());
  return d;
}

Rational NOElement::coeff(const XLKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NOElement::add_term(const XLKey& k, const Rational& c) {
  if (static_cast<int>(k.x.size()) != rank_ || static_cast<int>(k.l.size()) != rank_)
    throw std::invalid_argument("NOElement term rank mismatch");
  if (qtoda::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (qtoda::is_zero(it->second)) terms_.erase(it);
  }
}

NOElement NOElement::lambda_gen(int rank, int i, int power) {
  NOElement e(rank);
  XLKey k{MultiIndex(static_cast<std::size_t>(rank)), MultiIndex(static_cast<std::size_t>(rank))};
  k.l[static_cast<std::size_t>(i)] = power;
  e.add_term(k, Rational(1));
  return e;
}

NOElement NOElement::x_gen(int rank, int i, int power) {
  NOElement e(rank);
  XLKey k{MultiIndex(static_cast<std::size_t>(rank)), MultiIndex(static_cast<std::size_t>(rank))};
  k.x[static_cast<std::size_t>(i)] = power;
  e.add_term(k, Rational(1));
  return e;
}

NOElement NOElement::monomial(int rank, const MultiIndex& x, const MultiIndex& l,
                              const Rational& c) {
  NOElement e(rank);
  e.add_term(XLKey{x, l}, c);
  return e;
}

NOElement NOElement::operator+(const NOElement& o) const {
  NOElement r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

NOElement NOElement::operator-(const NOElement& o) const {
  NOElement r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

NOElement NOElement::operator*(const Rational& c) const {
  NOElement r(rank_);
  if (qtoda::is_zero(c)) return r;
  for (const auto& [k, cc] : terms_) r.terms_.emplace(k, cc * c);
  return r;
}

NOElement& NOElement::operator+=(const NOElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

bool NOElement::even_in_x() const {
  for (const auto& [k, c] : terms_)
    for (int e : k.x.e)
      if (e % 2 != 0) return false;
  return true;
}

NOElement no_mul(const NOElement& a, const NOElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("no_mul: rank mismatch");
  const std::size_t l = static_cast<std::size_t>(a.rank());
  NOElement r(a.rank());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // lambda^{J1} X^{I2} = X^{I2} prod_i (lambda_i + I2_i)^{J1_i}.
      // Expand the shifted powers into a polynomial in lambda.
      std::map<MultiIndex, Rational> lpoly;
      lpoly.emplace(MultiIndex(l), ca * cb);
      for (std::size_t i = 0; i < l; ++i) {
        const int j1 = ka.l[i];
        if (j1 == 0) continue;
        const long shift = kb.x[i];
        // (lambda_i + shift)^{j1} = sum_s C(j1,s) shift^{j1-s} lambda_i^s.
        std::vector<Rational> coeffs(static_cast<std::size_t>(j1) + 1);
        Rational binom(1);
        for (int s = j1; s >= 0; --s) {
          // binom = C(j1, s), accumulated from s = j1 downward.
          Rational power(1);
          for (int t = 0; t < j1 - s; ++t) power *= shift;
          coeffs[static_cast<std::size_t>(s)] = binom * power;
          if (s > 0) binom = binom * s / (j1 - s + 1);
        }
        std::map<MultiIndex, Rational> next;
        for (const auto& [m, c] : lpoly)
          for (int s = 0; s <= j1; ++s) {
            if (qtoda::is_zero(coeffs[static_cast<std::size_t>(s)])) continue;
            MultiIndex mm(m);
            mm[i] += s;
            auto [it, inserted] = next.emplace(mm, c * coeffs[static_cast<std::size_t>(s)]);
            if (!inserted) it->second += c * coeffs[static_cast<std::size_t>(s)];
          }
        lpoly = std::move(next);
      }
      const MultiIndex xsum = ka.x + kb.x;
      for (const auto& [m, c] : lpoly) r.add_term(XLKey{xsum, m + kb.l}, c);
    }
  }
  return r;
}

NOElement commutator_uenv(const NOElement& a, const NOElement& b) {
  return no_mul(a, b) - no_mul(b, a);
}

SparsePoly mu_projection(const NOElement& a) {
  auto vars = weight_vars(a.rank());
  SparsePoly p(vars);
  for (const auto& [k, c] : a.terms())
    if (k.x.total() == 0) p.add_term(k.l, c);
  return p;
}

NOElement build_Omega(const RootSystem& rs) {
  const int l = rs.rank();
  NOElement omega(l);
  const RatMat& G = rs.coroot_gram();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (qtoda::is_zero(G(i, j))) continue;
      XLKey k{MultiIndex(static_cast<std::size_t>(l)), MultiIndex(static_cast<std::size_t>(l))};
      k.l[static_cast<std::size_t>(i)] += 1;
      k.l[static_cast<std::size_t>(j)] += 1;
      omega.add_term(k, G(i, j));
    }
  for (int i = 0; i < l; ++i) {
    XLKey k{MultiIndex(static_cast<std::size_t>(l)), MultiIndex(static_cast<std::size_t>(l))};
    k.x[static_cast<std::size_t>(i)] = 2;
    omega.add_term(k, Rational(1));
  }
  return omega;
}

}  // namespace qtoda
