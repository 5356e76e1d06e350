#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtoda/linalg.hpp"
#include "qtoda/root_system.hpp"

namespace qtoda {

struct WeylElement {
  RatMat mat;              // action on fundamental-weight coordinates
  int length = 0;          // word length at first BFS discovery
  std::vector<int> word;   // one reduced word (generator indices)
};

// The full Weyl group as matrices, generated breadth-first from the simple
// reflections. Element 0 is the identity; discovery order is deterministic.
class WeylGroup {
 public:
  static WeylGroup generate(const RootSystem& rs);

  std::size_t size() const { return elems_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elems_[i]; }
  int longest() const { return longest_; }

  // Index of the element with this matrix, or -1.
  int index_of(const RatMat& m) const;

  // Group operation on indices: returns index of elems_[a] * elems_[b].
  int mul(int a, int b) const;

  std::vector<Rational> act(std::size_t w, const std::vector<Rational>& v) const;

  // Number of positive roots mapped to negative roots.
  int inversion_count(const RootSystem& rs, std::size_t w) const;

 private:
  static std::string key_of(const RatMat& m);

  std::vector<WeylElement> elems_;
  std::map<std::string, int> index_;
  int longest_ = 0;
};

}  // namespace qtoda
