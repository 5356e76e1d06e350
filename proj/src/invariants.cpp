#include "qtoda/invariants.hpp"

#include <stdexcept>

namespace qtoda {

std::shared_ptr<const VarSet> weight_vars(int rank) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back("l" + std::to_string(i));
  return VarSet::make_unit(std::move(names));
}

SparsePoly apply_weyl(const SparsePoly& p, const RatMat& w) {
  const auto& vars = p.vars();
  const std::size_t l = vars->size();
  std::vector<SparsePoly> images;
  images.reserve(l);
  for (std::size_t i = 0; i < l; ++i) {
    SparsePoly img(vars);
    for (std::size_t k = 0; k < l; ++k) {
      if (qtoda::is_zero(w(k, i))) continue;
      MultiIndex m(l);
      m[k] = 1;
      img.add_term(m, w(k, i));
    }
    images.push_back(std::move(img));
  }
  return p.substitute(images);
}

SparsePoly reynolds(const SparsePoly& p, const WeylGroup& W) {
  SparsePoly acc = SparsePoly::zero(p.vars());
  for (std::size_t w = 0; w < W.size(); ++w) acc += apply_weyl(p, W[w].mat);
  return acc * rat(1, static_cast<long>(W.size()));
}

namespace {

// Linear form with the given weight coordinates.
SparsePoly linear_form(const std::shared_ptr<const VarSet>& vars,
                       const std::vector<Rational>& coords) {
  SparsePoly p(vars);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (qtoda::is_zero(coords[k])) continue;
    MultiIndex m(vars->size());
    m[k] = 1;
    p.add_term(m, coords[k]);
  }
  return p;
}

// Reynolds average of (linear form)^d, using w.(f^d) = (w.f)^d.
SparsePoly averaged_power(const std::vector<Rational>& coords, int d,
                          const std::shared_ptr<const VarSet>& vars,
                          const WeylGroup& W) {
  SparsePoly acc = SparsePoly::zero(vars);
  for (std::size_t w = 0; w < W.size(); ++w) {
    auto img = W[w].mat * coords;
    acc += linear_form(vars, img).pow(d);
  }
  return acc * rat(1, static_cast<long>(W.size()));
}

// Hilbert series of the invariant ring via Molien's formula,
// (1/|W|) sum_w 1/det(I - t w), expanded exactly to order `order`.
std::vector<Rational> molien_series(const WeylGroup& W, int order) {
  const std::size_t l = W[0].mat.rows();
  std::vector<Rational> total(order + 1, Rational(0));
  for (std::size_t w = 0; w < W.size(); ++w) {
    // det(I - t M) as a polynomial in t, by fraction-free expansion over
    // the polynomial ring Q[t] (l <= 4, Laplace is fine).
    std::vector<std::vector<Rational>> det_memo;
    // Represent polynomials in t as coefficient vectors.
    auto poly_mul = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
      std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
      return r;
    };
    // charpoly-style Laplace expansion on I - tM.
    const RatMat& M = W[w].mat;
    auto entry = [&](std::size_t i, std::size_t j) {
      std::vector<Rational> e{Rational(i == j ? 1 : 0), -M(i, j)};
      return e;
    };
    std::vector<std::size_t> cols(l);
    for (std::size_t i = 0; i < l; ++i) cols[i] = i;
    auto det = [&](auto&& self, std::size_t row, std::vector<std::size_t> cs)
        -> std::vector<Rational> {
      if (cs.empty()) return {Rational(1)};
      std::vector<Rational> acc(1, Rational(0));
      for (std::size_t k = 0; k < cs.size(); ++k) {
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < cs.size(); ++t)
          if (t != k) rest.push_back(cs[t]);
        auto sub = self(self, row + 1, rest);
        auto prod = poly_mul(entry(row, cs[k]), sub);
        if (k % 2 == 1)
          for (auto& c : prod) c = -c;
        if (prod.size() > acc.size()) acc.resize(prod.size(), Rational(0));
        for (std::size_t t = 0; t < prod.size(); ++t) acc[t] += prod[t];
      }
      return acc;
    };
    auto d = det(det, 0, cols);
    d.resize(order + 1, Rational(0));
    // Series inverse of d (constant term is 1: det(I) = 1).
    std::vector<Rational> inv(order + 1, Rational(0));
    inv[0] = Rational(1) / d[0];
    for (int k = 1; k <= order; ++k) {
      Rational s(0);
      for (int j = 1; j <= k; ++j) s += d[j] * inv[k - j];
      inv[k] = -s / d[0];
    }
    for (int k = 0; k <= order; ++k) total[k] += inv[k];
  }
  for (auto& c : total) c /= static_cast<long>(W.size());
  return total;
}

}  // namespace

std::vector<int> fundamental_degrees(const RootSystem& rs, const WeylGroup& W) {
  const int l = rs.rank();
  const int max_degree = 8;
  auto hilbert = molien_series(W, max_degree);
  std::vector<int> degrees;
  long product = 1;
  for (int d = 1; d <= max_degree && static_cast<int>(degrees.size()) < l; ++d) {
    // Dimension of the slice generated by already-found degrees.
    std::vector<long> gen_dim(d + 1, 0);
    gen_dim[0] = 1;
    for (int dk : degrees)
      for (int t = dk; t <= d; ++t) gen_dim[t] += gen_dim[t - dk];
    long inv_dim = hilbert[d].get_num().get_si();
    if (hilbert[d].get_den() != 1)
      throw std::logic_error("non-integral invariant dimension");
    long deficit = inv_dim - gen_dim[d];
    for (long k = 0; k < deficit; ++k) {
      degrees.push_back(d);
      product *= d;
    }
  }
  if (static_cast<int>(degrees.size()) != l ||
      product != static_cast<long>(W.size()))
    throw std::logic_error("fundamental degree search failed consistency check");
  return degrees;
}

InvariantSet chevalley_generators(const RootSystem& rs, const WeylGroup& W) {
  const int l = rs.rank();
  auto vars = weight_vars(l);
  auto degrees = fundamental_degrees(rs, W);

  InvariantSet inv;
  inv.vars = vars;
  inv.degrees = degrees;

  // u_1 = sum_ij G_ij l_i l_j, exactly.
  SparsePoly u1(vars);
  const RatMat& G = rs.coroot_gram();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (qtoda::is_zero(G(i, j))) continue;
      MultiIndex m(static_cast<std::size_t>(l));
      m[i] += 1;
      m[j] += 1;
      u1.add_term(m, G(i, j));
    }
  inv.u.push_back(u1);

  // Deterministic sample points for the Jacobian rank certificate.
  auto sample_point = [&](int s) {
    std::vector<Rational> p;
    for (int j = 0; j < l; ++j) {
      long v = 1;
      for (int t = 0; t <= s; ++t) v *= (j + 2);
      p.emplace_back(v);
    }
    return p;
  };
  auto independent = [&](const std::vector<SparsePoly>& us) {
    for (int s = 0; s < 5; ++s) {
      auto pt = sample_point(s);
      RatMat jac(static_cast<std::size_t>(l), us.size());
      for (std::size_t k = 0; k < us.size(); ++k)
        for (int j = 0; j < l; ++j)
          jac(static_cast<std::size_t>(j), k) =
              us[k].derivative(static_cast<std::size_t>(j)).eval(pt);
      if (rank(jac) == us.size()) return true;
    }
    return false;
  };

  // Higher generators: Reynolds averages of powers of linear forms near
  // rho = sum l_i. A single perturbation direction is not enough when a
  // degree repeats (D4 has 4 twice), so the schedule walks every coordinate
  // from two base points.
  for (int k = 1; k < l; ++k) {
    const int d = degrees[static_cast<std::size_t>(k)];
    bool found = false;
    for (int m = 0; m <= 20 && !found; ++m) {
      for (int j = 0; j < (m == 0 ? 1 : l) && !found; ++j) {
        for (int base = 0; base < 2 && !found; ++base) {
          std::vector<Rational> coords(static_cast<std::size_t>(l));
          for (int i = 0; i < l; ++i)
            coords[static_cast<std::size_t>(i)] = base == 0 ? 1 : i + 1;
          coords[static_cast<std::size_t>(j)] += m;
          SparsePoly cand = averaged_power(coords, d, vars, W);
          if (cand.is_zero()) continue;
          auto trial = inv.u;
          trial.push_back(cand);
          if (independent(trial)) {
            inv.u.push_back(std::move(cand));
            found = true;
          }
        }
      }
    }
    if (!found)
      throw std::logic_error("independence search exhausted the perturbation schedule");
  }
  return inv;
}

SparsePoly jacobian_det(const InvariantSet& inv) {
  const std::size_t l = inv.u.size();
  std::vector<std::vector<SparsePoly>> jac;
  for (std::size_t k = 0; k < l; ++k) {
    std::vector<SparsePoly> row;
    for (std::size_t j = 0; j < l; ++j) row.push_back(inv.u[k].derivative(j));
    jac.push_back(std::move(row));
  }
  std::vector<std::size_t> cols(l);
  for (std::size_t i = 0; i < l; ++i) cols[i] = i;
  auto det = [&](auto&& self, std::size_t row, std::vector<std::size_t> cs) -> SparsePoly {
    if (cs.empty()) return SparsePoly::constant(inv.vars, Rational(1));
    SparsePoly acc = SparsePoly::zero(inv.vars);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 0; t < cs.size(); ++t)
        if (t != k) rest.push_back(cs[t]);
      SparsePoly term = jac[row][cs[k]] * self(self, row + 1, rest);
      if (k % 2 == 1) term = -term;
      acc += term;
    }
    return acc;
  };
  return det(det, 0, cols);
}

}  // namespace qtoda
