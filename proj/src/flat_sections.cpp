#include "qtoda/flat_sections.hpp"

#include <stdexcept>

namespace qtoda {

std::map<MultiIndex, RatMat> qmatrix_coefficients(const QMatrix& m) {
  const std::size_t n = m.size();
  std::map<MultiIndex, RatMat> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [d, c] : m(i, j).terms()) {
        auto [it, inserted] = out.emplace(d, RatMat(n, n));
        it->second(i, j) = c;
      }
  return out;
}

namespace {

bool is_nilpotent(const RatMat& A) {
  RatMat p = A;
  for (std::size_t k = 1; k <= A.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * A;
  }
  return p.is_zero();
}

std::vector<Rational> vec_sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool vec_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!qtoda::is_zero(x)) return false;
  return true;
}

}  // namespace

PolyVec solve_poly_ode(const RatMat& A, const PolyVec& g,
                       const std::optional<std::vector<Rational>>& f0) {
  const std::size_t n = A.rows();
  auto coeff = [&](const PolyVec& p, std::size_t j) {
    return j < p.size() ? p[j] : std::vector<Rational>(n, Rational(0));
  };
  bool invertible = true;
  RatMat Ainv;
  try {
    Ainv = inverse(A);
  } catch (const std::domain_error&) {
    invertible = false;
  }
  if (invertible) {
    const std::size_t p = g.empty() ? 0 : g.size() - 1;
    PolyVec f(p + 1, std::vector<Rational>(n, Rational(0)));
    for (std::size_t jj = p + 1; jj-- > 0;) {
      // f_j = A^{-1}((j+1) f_{j+1} - g_j).
      std::vector<Rational> next = (jj + 1 <= p) ? f[jj + 1] : std::vector<Rational>(n, Rational(0));
      for (auto& x : next) x *= static_cast<long>(jj + 1);
      f[jj] = Ainv * vec_sub(next, coeff(g, jj));
    }
    while (f.size() > 1 && vec_zero(f.back())) f.pop_back();
    return f;
  }
  if (!is_nilpotent(A))
    throw std::invalid_argument("solve_poly_ode: matrix neither invertible nor nilpotent");
  if (!f0)
    throw std::invalid_argument("solve_poly_ode: nilpotent case needs a prescribed constant term");
  // Upward recursion f_{j+1} = (A f_j + g_j)/(j+1); terminates by
  // nilpotency within deg g + n extra steps.
  PolyVec f{*f0};
  const std::size_t jmax = g.size() + n + 1;
  for (std::size_t j = 0; j < jmax; ++j) {
    std::vector<Rational> next = A * f[j];
    const auto gj = coeff(g, j);
    for (std::size_t i = 0; i < n; ++i) next[i] = (next[i] + gj[i]) / static_cast<long>(j + 1);
    if (vec_zero(next) && j + 1 > g.size()) break;
    f.push_back(std::move(next));
  }
  while (f.size() > 1 && vec_zero(f.back())) f.pop_back();
  return f;
}

namespace {

void check_flat_preconditions(const std::vector<QMatrix>& A) {
  const std::size_t l = A.size();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (!(A[i] * A[j] == A[j] * A[i]))
        throw std::invalid_argument("flat solver: connection matrices do not commute");
  auto qv = A[0].vars();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      for (std::size_t r = 0; r < A[i].size(); ++r)
        for (std::size_t c = 0; c < A[i].size(); ++c) {
          SparsePoly qi = SparsePoly::variable(qv, i);
          SparsePoly qj = SparsePoly::variable(qv, j);
          if (!(qi * A[j](r, c).derivative(i) == qj * A[i](r, c).derivative(j)))
            throw std::invalid_argument("flat solver: potential symmetry fails");
        }
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t r = 0; r < A[i].size(); ++r)
      for (std::size_t c = 0; c < A[i].size(); ++c)
        for (const auto& [m, coef] : A[i](r, c).terms()) {
          if (m.is_zero()) {
            if (r <= c)
              throw std::invalid_argument("flat solver: constant part not strictly lower triangular");
          } else if (m[i] == 0) {
            throw std::invalid_argument("flat solver: quantum term missing q_i");
          }
        }
}

std::vector<TPoly> scale_vec(const std::vector<TPoly>& v, const Rational& c, int hshift) {
  std::vector<TPoly> r;
  r.reserve(v.size());
  for (const auto& f : v) r.push_back((f * c).shifted_h(hshift));
  return r;
}

std::vector<TPoly> add_vec(const std::vector<TPoly>& a, const std::vector<TPoly>& b) {
  std::vector<TPoly> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool vec_is_zero(const std::vector<TPoly>& v) {
  for (const auto& f : v)
    if (!f.is_zero()) return false;
  return true;
}

}  // namespace

FormalSection solve_flat_section(const std::vector<QMatrix>& A,
                                 const std::vector<Rational>& a, int N) {
  check_flat_preconditions(A);
  const std::size_t n = A[0].size();
  const std::size_t l = A[0].vars()->size();
  if (a.size() != n) throw std::invalid_argument("flat solver: wrong start vector size");

  std::vector<std::map<MultiIndex, RatMat>> coeffs;
  coeffs.reserve(A.size());
  for (const auto& m : A) coeffs.push_back(qmatrix_coefficients(m));
  std::vector<RatMat> lower(l, RatMat(n, n));
  for (std::size_t i = 0; i < l; ++i) {
    auto it = coeffs[i].find(MultiIndex(l));
    if (it != coeffs[i].end()) lower[i] = it->second;
  }

  FormalSection s;
  s.nvars = l;
  s.dim = n;
  s.truncation = N;

  // Degree 0: s_0 = exp((sum t_i A'_i)/h) a, a polynomial by nilpotency.
  {
    std::vector<TPoly> cur(n, TPoly(l));
    for (std::size_t r = 0; r < n; ++r) cur[r] = TPoly::constant(l, LaurentH(a[r]));
    std::vector<TPoly> total = cur;
    for (long j = 1; j <= static_cast<long>(n) + 1; ++j) {
      std::vector<TPoly> next(n, TPoly(l));
      for (std::size_t i = 0; i < l; ++i) {
        auto applied = mat_apply(lower[i], cur, l);
        for (std::size_t r = 0; r < n; ++r) next[r] = next[r] + applied[r].times_t(i, 1);
      }
      cur = scale_vec(next, Rational(1, j), -1);
      if (vec_is_zero(cur)) break;
      total = add_vec(total, cur);
    }
    if (!vec_is_zero(total)) s.terms.emplace(MultiIndex(l), std::move(total));
  }

  // Degree-by-degree recursion; within a fixed |d| terms only feed on
  // strictly lower degrees, so lexicographic order inside a degree is fine.
  for (int deg = 1; deg <= N; ++deg) {
    for (const auto& d : all_of_degree(l, deg)) {
      // The equation in direction istar, the index with maximal d_i.
      std::size_t istar = 0;
      for (std::size_t i = 1; i < l; ++i)
        if (d[i] > d[istar]) istar = i;
      const int dstar = d[istar];

      // rhs = (1/h) sum_{0 < d1 <= d} A_istar[d1] s_{d-d1}.
      std::vector<TPoly> rhs(n, TPoly(l));
      for (const auto& [d1, mat] : coeffs[istar]) {
        if (d1.is_zero() || !d.dominates(d1)) continue;
        auto it = s.terms.find(d - d1);
        if (it == s.terms.end()) continue;
        rhs = add_vec(rhs, mat_apply(mat, it->second, l));
      }
      bool rhs_zero = vec_is_zero(rhs);
      if (rhs_zero) continue;  // uniqueness forces s_d = 0
      for (auto& f : rhs) f = f.shifted_h(-1);

      // M = A'_istar / h - dstar I is invertible with inverse
      // -sum_k N^k / (dstar^{k+1} h^k), N = A'_istar nilpotent.
      std::vector<RatMat> npow{RatMat::identity(n)};
      while (!npow.back().is_zero()) npow.push_back(npow.back() * lower[istar]);
      auto apply_minv = [&](const std::vector<TPoly>& v) {
        std::vector<TPoly> acc(n, TPoly(l));
        Rational dk(dstar);
        for (std::size_t k = 0; k < npow.size(); ++k) {
          if (npow[k].is_zero()) break;
          auto term = scale_vec(mat_apply(npow[k], v, l), Rational(-1) / dk,
                                -static_cast<int>(k));
          acc = add_vec(acc, term);
          dk *= dstar;
        }
        return acc;
      };

      int p = -1;
      for (const auto& f : rhs) p = std::max(p, f.degree_in(istar));
      std::vector<TPoly> sd(n, TPoly(l));
      std::vector<TPoly> fnext(n, TPoly(l));  // f_{j+1}
      for (int j = p; j >= 0; --j) {
        std::vector<TPoly> gj(n, TPoly(l));
        for (std::size_t r = 0; r < n; ++r) gj[r] = rhs[r].coefficient_of(istar, j);
        std::vector<TPoly> arg(n, TPoly(l));
        for (std::size_t r = 0; r < n; ++r) arg[r] = fnext[r] * Rational(j + 1) - gj[r];
        std::vector<TPoly> fj = apply_minv(arg);
        for (std::size_t r = 0; r < n; ++r) sd[r] = sd[r] + fj[r].times_t(istar, j);
        fnext = std::move(fj);
      }
      if (!vec_is_zero(sd)) s.terms.emplace(d, std::move(sd));
    }
  }
  return s;
}

ScalarSeries pair_with_one(const FormalSection& s, const SchubertBasis& basis) {
  ScalarSeries out;
  out.nvars = s.nvars;
  out.truncation = s.truncation;
  const std::size_t e1 = static_cast<std::size_t>(basis.identity_pos);
  for (const auto& [d, v] : s.terms) out.add(d, v[e1]);
  return out;
}

FormalSection flat_residual(const std::vector<QMatrix>& A, const FormalSection& s,
                            std::size_t i) {
  const std::size_t n = s.dim;
  const std::size_t l = s.nvars;
  auto coeffs = qmatrix_coefficients(A[i]);
  FormalSection r;
  r.nvars = l;
  r.dim = n;
  r.truncation = s.truncation;
  auto add_to = [&](const MultiIndex& d, const std::vector<TPoly>& v, const Rational& sign) {
    if (d.total() > r.truncation) return;
    auto [it, inserted] = r.terms.emplace(d, std::vector<TPoly>(n, TPoly(l)));
    for (std::size_t c = 0; c < n; ++c) it->second[c] = it->second[c] + v[c] * sign;
  };
  for (const auto& [d, v] : s.terms) {
    std::vector<TPoly> hd(n, TPoly(l));
    for (std::size_t c = 0; c < n; ++c) hd[c] = h_partial(v[c], i, d[i]);
    add_to(d, hd, Rational(1));
    for (const auto& [d1, mat] : coeffs)
      add_to(d + d1, mat_apply(mat, v, l), Rational(-1));
  }
  // Drop cancelled entries.
  for (auto it = r.terms.begin(); it != r.terms.end();) {
    bool zero = true;
    for (const auto& f : it->second)
      if (!f.is_zero()) zero = false;
    it = zero ? r.terms.erase(it) : std::next(it);
  }
  return r;
}

ScalarSeries apply_diffop(const DiffOp& op, const ScalarSeries& g) {
  ScalarSeries out;
  out.nvars = g.nvars;
  out.truncation = g.truncation - op.et_degree();
  for (const auto& [key, c] : op.terms()) {
    for (const auto& [d, f] : g.terms) {
      TPoly cur = f;
      for (std::size_t i = 0; i < g.nvars; ++i)
        for (int t = 0; t < key.hd[i]; ++t) cur = h_partial(cur, i, d[i]);
      cur = (cur * c).shifted_h(key.hpow);
      out.add(d + key.et, cur);
    }
  }
  return out;
}

ScalarSeries annihilation_check(const DiffOp& op, const FormalSection& s,
                                const SchubertBasis& basis) {
  return apply_diffop(op, pair_with_one(s, basis));
}

KimCertificate kim_lemma_certificate(const RootSystem& rs) {
  const RatMat& G = rs.coroot_gram();
  KimCertificate cert;
  cert.positive_definite = true;
  for (std::size_t k = 1; k <= G.rows(); ++k) {
    RatMat minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = G(i, j);
    Rational d = minor.det();
    if (sgn(d) <= 0) cert.positive_definite = false;
    cert.minors.push_back(std::move(d));
  }
  return cert;
}

}  // namespace qtoda
