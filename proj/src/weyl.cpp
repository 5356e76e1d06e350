#include "qtoda/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace qtoda {

std::string WeylGroup::key_of(const RatMat& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) os << m(i, j).get_str() << ';';
  return os.str();
}

WeylGroup WeylGroup::generate(const RootSystem& rs) {
  const std::size_t l = static_cast<std::size_t>(rs.rank());
  std::vector<RatMat> gens;
  gens.reserve(l);
  for (std::size_t i = 0; i < l; ++i) gens.push_back(rs.simple_reflection(i));

  WeylGroup g;
  WeylElement id{RatMat::identity(l), 0, {}};
  g.index_[key_of(id.mat)] = 0;
  g.elems_.push_back(std::move(id));
  for (std::size_t head = 0; head < g.elems_.size(); ++head) {
    // Copy: push_back below may reallocate.
    WeylElement cur = g.elems_[head];
    for (std::size_t i = 0; i < l; ++i) {
      RatMat next = cur.mat * gens[i];  // w * s_i
      std::string key = key_of(next);
      if (g.index_.contains(key)) continue;
      WeylElement e;
      e.mat = std::move(next);
      e.length = cur.length + 1;
      e.word = cur.word;
      e.word.push_back(static_cast<int>(i));
      g.index_[key] = static_cast<int>(g.elems_.size());
      g.elems_.push_back(std::move(e));
    }
    if (g.elems_.size() > 384)
      throw std::runtime_error("Weyl group larger than the supported cap of 384");
  }
  g.longest_ = 0;
  for (std::size_t i = 0; i < g.elems_.size(); ++i)
    if (g.elems_[i].length > g.elems_[g.longest_].length) g.longest_ = static_cast<int>(i);
  return g;
}

int WeylGroup::index_of(const RatMat& m) const {
  auto it = index_.find(key_of(m));
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::mul(int a, int b) const {
  return index_of(elems_[a].mat * elems_[b].mat);
}

std::vector<Rational> WeylGroup::act(std::size_t w, const std::vector<Rational>& v) const {
  return elems_[w].mat * v;
}

int WeylGroup::inversion_count(const RootSystem& rs, std::size_t w) const {
  RatMat cinv = inverse(rs.cartan());
  int count = 0;
  for (const auto& beta : rs.positive_roots()) {
    auto image_wc = elems_[w].mat * beta.weight_coords;
    auto image_rc = cinv * image_wc;
    bool negative = false;
    for (const auto& c : image_rc)
      if (sgn(c) < 0) negative = true;
    if (negative) ++count;
  }
  return count;
}

}  // namespace qtoda
