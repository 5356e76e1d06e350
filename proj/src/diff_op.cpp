#include "qtoda/diff_op.hpp"

#include <stdexcept>

#include "qtoda/toda.hpp"

namespace qtoda {

void DiffOp::add_term(const DOKey& k, const Rational& c) {
  if (static_cast<int>(k.et.size()) != rank_ || static_cast<int>(k.hd.size()) != rank_)
    throw std::invalid_argument("DiffOp term rank mismatch");
  if (qtoda::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (qtoda::is_zero(it->second)) terms_.erase(it);
  }
}

Rational DiffOp::coeff(const DOKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  DiffOp r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
  DiffOp r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

DiffOp DiffOp::operator*(const Rational& c) const {
  DiffOp r(rank_);
  if (qtoda::is_zero(c)) return r;
  for (const auto& [k, cc] : terms_) r.terms_.emplace(k, cc * c);
  return r;
}

bool DiffOp::homogeneous_of_degree(int d) const {
  for (const auto& [k, c] : terms_)
    if (k.graded_degree() != d) return false;
  return true;
}

int DiffOp::et_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.et.total());
  return d;
}

DiffOp diffop_mul(const DiffOp& a, const DiffOp& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("diffop_mul: rank mismatch");
  const std::size_t l = static_cast<std::size_t>(a.rank());
  DiffOp r(a.rank());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // (hd)^{J1} e^{tD2} = e^{tD2} prod_i ((hd)_i + h D2_i)^{J1_i}.
      // Expand into (hd)-exponent / extra-h-power pairs.
      std::map<std::pair<MultiIndex, int>, Rational> expanded;
      expanded.emplace(std::make_pair(MultiIndex(l), 0), ca * cb);
      for (std::size_t i = 0; i < l; ++i) {
        const int j1 = ka.hd[i];
        if (j1 == 0) continue;
        const long d2 = kb.et[i];
        // ((hd)_i + h d2)^{j1} = sum_s C(j1,s) d2^{j1-s} h^{j1-s} (hd)_i^s.
        std::vector<Rational> coeffs(static_cast<std::size_t>(j1) + 1);
        Rational binom(1);
        for (int s = j1; s >= 0; --s) {
          Rational power(1);
          for (int t = 0; t < j1 - s; ++t) power *= d2;
          coeffs[static_cast<std::size_t>(s)] = binom * power;
          if (s > 0) binom = binom * s / (j1 - s + 1);
        }
        std::map<std::pair<MultiIndex, int>, Rational> next;
        for (const auto& [mk, c] : expanded)
          for (int s = 0; s <= j1; ++s) {
            if (qtoda::is_zero(coeffs[static_cast<std::size_t>(s)])) continue;
            auto key = mk;
            key.first[i] += s;
            key.second += j1 - s;
            auto [it, inserted] = next.emplace(key, c * coeffs[static_cast<std::size_t>(s)]);
            if (!inserted) it->second += c * coeffs[static_cast<std::size_t>(s)];
          }
        expanded = std::move(next);
      }
      const MultiIndex etsum = ka.et + kb.et;
      for (const auto& [mk, c] : expanded)
        r.add_term(DOKey{etsum, mk.first + kb.hd, ka.hpow + kb.hpow + mk.second}, c);
    }
  }
  return r;
}

DiffOp commutator_diffop(const DiffOp& a, const DiffOp& b) {
  return diffop_mul(a, b) - diffop_mul(b, a);
}

DiffOp rho_Dk(const NOElement& omega_k, const RootSystem& rs) {
  if (!omega_k.even_in_x())
    throw std::invalid_argument("rho_Dk: element has an odd X exponent");
  const int l = omega_k.rank();
  const std::size_t ls = static_cast<std::size_t>(l);
  const int d = omega_k.filtration_degree();
  const RatMat& G = rs.coroot_gram();
  DiffOp r(l);
  for (const auto& [key, c] : omega_k.terms()) {
    // X^{2I} lambda^J |-> prod (-4 G_ii)^{I_i} e^{tI} 2^{|J|} (hd)^J h^{d-2|I|-|J|}.
    MultiIndex et(ls);
    Rational coeff = c;
    for (std::size_t i = 0; i < ls; ++i) {
      et[i] = key.x[i] / 2;
      for (int t = 0; t < et[i]; ++t) coeff *= Rational(-4) * G(i, i);
    }
    for (int t = 0; t < key.l.total(); ++t) coeff *= 2;
    const int hpow = d - 2 * et.total() - key.l.total();
    if (hpow < 0)
      throw std::logic_error("rho_Dk: negative h power; filtration bound violated");
    r.add_term(DOKey{et, key.l, hpow}, coeff);
  }
  return r;
}

DiffOp build_H(const RootSystem& rs) {
  const int l = rs.rank();
  const std::size_t ls = static_cast<std::size_t>(l);
  const RatMat& G = rs.coroot_gram();
  DiffOp h(l);
  for (std::size_t i = 0; i < ls; ++i)
    for (std::size_t j = 0; j < ls; ++j) {
      if (qtoda::is_zero(G(i, j))) continue;
      DOKey k{MultiIndex(ls), MultiIndex(ls), 0};
      k.hd[i] += 1;
      k.hd[j] += 1;
      h.add_term(k, G(i, j));
    }
  for (std::size_t j = 0; j < ls; ++j) {
    DOKey k{MultiIndex(ls), MultiIndex(ls), 0};
    k.et[j] = 1;
    h.add_term(k, -G(j, j));
  }
  return h;
}

SparsePoly et_zero_part(const DiffOp& d) {
  const int l = d.rank();
  const std::size_t ls = static_cast<std::size_t>(l);
  auto vars = ql_vars(l);
  SparsePoly p(vars);
  for (const auto& [k, c] : d.terms()) {
    if (k.et.total() != 0) continue;
    if (k.hpow != 0)
      throw std::logic_error("et_zero_part: residual h power at e^t = 0");
    MultiIndex m(2 * ls);
    for (std::size_t i = 0; i < ls; ++i) m[ls + i] = k.hd[i];
    p.add_term(m, c);
  }
  return p;
}

SparsePoly h_zero_symbol(const DiffOp& d) {
  const int l = d.rank();
  const std::size_t ls = static_cast<std::size_t>(l);
  auto vars = ql_vars(l);
  SparsePoly p(vars);
  for (const auto& [k, c] : d.terms()) {
    if (k.hpow != 0) continue;
    MultiIndex m(2 * ls);
    for (std::size_t i = 0; i < ls; ++i) {
      m[i] = k.et[i];
      m[ls + i] = k.hd[i];
    }
    p.add_term(m, c);
  }
  return p;
}

}  // namespace qtoda
