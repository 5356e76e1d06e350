#include "qtoda/root_system.hpp"

#include <set>

namespace qtoda {

bool RootSystem::supported(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1 && rank <= 4;
    case 'B': return rank >= 2 && rank <= 3;
    case 'C': return rank >= 2 && rank <= 3;
    case 'D': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  if (!supported(type, rank))
    throw UnsupportedType(std::string("unsupported type/rank: ") + type + std::to_string(rank));
  const std::size_t l = static_cast<std::size_t>(rank);

  // pair(i,j) = alpha_i(alpha_j^vee); sym_[i] = <alpha_i,alpha_i>/2 in the
  // normalization where long roots have squared length 2.
  RatMat pair(l, l);
  sym_.assign(l, Rational(1));
  for (std::size_t i = 0; i < l; ++i) pair(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { pair(i, j) = -1; pair(j, i) = -1; };
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_{l-1} short
      for (std::size_t i = 0; i + 1 < l; ++i) link(i, i + 1);
      pair(l - 2, l - 1) = -2;
      sym_[l - 1] = rat(1, 2);
      break;
    case 'C':  // alpha_{l-1} long
      for (std::size_t i = 0; i + 1 < l; ++i) link(i, i + 1);
      pair(l - 1, l - 2) = -2;
      for (std::size_t i = 0; i + 1 < l; ++i) sym_[i] = rat(1, 2);
      break;
    case 'D':  // D4, node 1 central
      link(0, 1);
      link(1, 2);
      link(1, 3);
      break;
    case 'G':  // alpha_0 short, alpha_1 long
      pair(0, 1) = -1;
      pair(1, 0) = -3;
      sym_[0] = rat(1, 3);
      break;
  }

  cartan_ = pair.transpose();  // C(i,j) = alpha_j(alpha_i^vee)

  gram_ = RatMat(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) gram_(i, j) = pair(i, j) / sym_[i];

  // lambda_i = sum_k M(i,k) alpha_k with M = pair^{-1}; then
  // <lambda_i, lambda_j> = M(i,j) * d_j.
  RatMat m = inverse(pair);
  weight_gram_ = RatMat(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) weight_gram_(i, j) = m(i, j) * sym_[j];

  build_positive_roots();
}

std::vector<Rational> RootSystem::simple_root(std::size_t i) const {
  const std::size_t l = static_cast<std::size_t>(rank_);
  std::vector<Rational> c(l);
  for (std::size_t k = 0; k < l; ++k) c[k] = cartan_(k, i);
  return c;
}

Rational RootSystem::pairing(const std::vector<Rational>& weight,
                             const std::vector<Rational>& coroot) const {
  Rational acc(0);
  for (std::size_t k = 0; k < weight.size(); ++k) acc += weight[k] * coroot[k];
  return acc;
}

Rational RootSystem::inner(const std::vector<Rational>& a,
                           const std::vector<Rational>& b) const {
  Rational acc(0);
  const std::size_t l = a.size();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) acc += a[i] * weight_gram_(i, j) * b[j];
  return acc;
}

RatMat RootSystem::simple_reflection(std::size_t i) const {
  const std::size_t l = static_cast<std::size_t>(rank_);
  RatMat s = RatMat::identity(l);
  auto alpha = simple_root(i);
  for (std::size_t k = 0; k < l; ++k) s(k, i) -= alpha[k];
  return s;
}

RatMat RootSystem::reflection(const PosRoot& beta) const {
  const std::size_t l = static_cast<std::size_t>(rank_);
  RatMat s = RatMat::identity(l);
  for (std::size_t k = 0; k < l; ++k)
    for (std::size_t j = 0; j < l; ++j)
      s(k, j) -= beta.weight_coords[k] * beta.coroot_coords[j];
  return s;
}

void RootSystem::build_positive_roots() {
  const std::size_t l = static_cast<std::size_t>(rank_);
  // A root is tracked as (root_coords, weight_coords); closure under the
  // simple reflections starting from the simple roots.
  using Coords = std::vector<Rational>;
  std::set<std::vector<Rational>> seen;
  std::vector<std::pair<Coords, Coords>> queue;
  for (std::size_t i = 0; i < l; ++i) {
    Coords rc(l, Rational(0));
    rc[i] = 1;
    queue.emplace_back(rc, simple_root(i));
    seen.insert(rc);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [rc, wc] = queue[head];
    for (std::size_t i = 0; i < l; ++i) {
      // s_i(beta) = beta - beta(alpha_i^vee) alpha_i.
      Rational p = wc[i];
      Coords nrc = rc, nwc = wc;
      nrc[i] -= p;
      auto alpha = simple_root(i);
      for (std::size_t k = 0; k < l; ++k) nwc[k] -= p * alpha[k];
      if (seen.insert(nrc).second) queue.emplace_back(nrc, nwc);
    }
  }
  for (const auto& [rc, wc] : queue) {
    bool positive = true;
    for (const auto& c : rc)
      if (sgn(c) < 0) positive = false;
    if (!positive) continue;
    PosRoot r;
    r.root_coords = rc;
    r.weight_coords = wc;
    r.norm2 = 0;
    for (std::size_t k = 0; k < l; ++k) r.norm2 += rc[k] * sym_[k] * wc[k];
    r.coroot_coords.resize(l);
    Rational height(0);
    for (std::size_t k = 0; k < l; ++k) {
      r.coroot_coords[k] = Rational(2) * rc[k] * sym_[k] / r.norm2;
      height += r.coroot_coords[k];
    }
    r.coroot_height = static_cast<long>(height.get_num().get_si());
    positive_.push_back(std::move(r));
  }
  // Sort by (height of root, root coords) for a stable enumeration.
  std::sort(positive_.begin(), positive_.end(), [](const PosRoot& a, const PosRoot& b) {
    Rational ha(0), hb(0);
    for (const auto& c : a.root_coords) ha += c;
    for (const auto& c : b.root_coords) hb += c;
    if (ha != hb) return ha < hb;
    return a.root_coords < b.root_coords;
  });
}

}  // namespace qtoda
