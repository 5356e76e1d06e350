#include "qtoda/sparse_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qtoda {

VarSet::VarSet(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size())
    throw std::invalid_argument("VarSet: names/weights length mismatch");
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names,
                                           std::vector<int> weights) {
  return std::make_shared<const VarSet>(std::move(names), std::move(weights));
}

std::shared_ptr<const VarSet> VarSet::make_unit(std::vector<std::string> names) {
  std::vector<int> w(names.size(), 1);
  return make(std::move(names), std::move(w));
}

long VarSet::weighted_degree(const MultiIndex& m) const {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(weights_[i]) * m[i];
  return d;
}

SparsePoly::SparsePoly(std::shared_ptr<const VarSet> vars)
    : vars_(std::move(vars)), terms_(GradedLexLess{vars_}) {}

SparsePoly SparsePoly::zero(std::shared_ptr<const VarSet> vars) {
  return SparsePoly(std::move(vars));
}

SparsePoly SparsePoly::constant(std::shared_ptr<const VarSet> vars, const Rational& c) {
  SparsePoly p(std::move(vars));
  p.add_term(MultiIndex(p.vars_->size()), c);
  return p;
}

SparsePoly SparsePoly::variable(std::shared_ptr<const VarSet> vars, std::size_t i,
                                int power) {
  SparsePoly p(std::move(vars));
  MultiIndex m(p.vars_->size());
  m[i] = power;
  p.add_term(m, Rational(1));
  return p;
}

SparsePoly SparsePoly::monomial(std::shared_ptr<const VarSet> vars,
                                const MultiIndex& m, const Rational& c) {
  SparsePoly p(std::move(vars));
  p.add_term(m, c);
  return p;
}

Rational SparsePoly::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const MultiIndex& m, const Rational& c) {
  if (m.size() != vars_->size())
    throw std::invalid_argument("term length does not match variable count");
  if (qtoda::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (qtoda::is_zero(it->second)) terms_.erase(it);
  }
}

void SparsePoly::check_same_vars(const SparsePoly& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
    throw std::invalid_argument("variable-set mismatch");
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  check_same_vars(o);
  SparsePoly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  check_same_vars(o);
  SparsePoly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_same_vars(o);
  SparsePoly r(vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

SparsePoly SparsePoly::operator*(const Rational& c) const {
  SparsePoly r(vars_);
  if (qtoda::is_zero(c)) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

SparsePoly SparsePoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  SparsePoly r = constant(vars_, Rational(1));
  SparsePoly base(*this);
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
  SparsePoly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    MultiIndex mm(m);
    mm[var] -= 1;
    r.add_term(mm, c * Rational(m[var]));
  }
  return r;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& images) const {
  if (images.size() != vars_->size())
    throw std::invalid_argument("substitute: wrong number of images");
  auto target = images.empty() ? vars_ : images.front().vars();
  SparsePoly r(target);
  for (const auto& [m, c] : terms_) {
    SparsePoly t = SparsePoly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t = t * images[i].pow(m[i]);
    r += t;
  }
  return r;
}

Rational SparsePoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != vars_->size())
    throw std::invalid_argument("eval: wrong point dimension");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

long SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  return vars_->weighted_degree(terms_.rbegin()->first);
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = vars_->weighted_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (vars_->weighted_degree(m) != d) return false;
  return true;
}

SparsePoly SparsePoly::graded_part(long d) const {
  SparsePoly r(vars_);
  for (const auto& [m, c] : terms_)
    if (vars_->weighted_degree(m) == d) r.terms_.emplace(m, c);
  return r;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest grade first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << "*" << vars_->name(i);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

}  // namespace qtoda
