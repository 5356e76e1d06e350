#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qtoda {

// Exponent vector of fixed length (the ambient variable count).
struct MultiIndex {
  std::vector<int> e;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e(n, 0) {}
  MultiIndex(std::initializer_list<int> init) : e(init) {}
  explicit MultiIndex(std::vector<int> v) : e(std::move(v)) {}

  std::size_t size() const { return e.size(); }
  int operator[](std::size_t i) const { return e[i]; }
  int& operator[](std::size_t i) { return e[i]; }

  int total() const { return std::accumulate(e.begin(), e.end(), 0); }

  bool is_zero() const {
    for (int x : e)
      if (x != 0) return false;
    return true;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    if (e.size() != o.e.size()) throw std::invalid_argument("multi-index length mismatch");
    MultiIndex r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }

  // Componentwise subtraction; caller guarantees non-negativity where needed.
  MultiIndex operator-(const MultiIndex& o) const {
    if (e.size() != o.e.size()) throw std::invalid_argument("multi-index length mismatch");
    MultiIndex r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }

  bool dominates(const MultiIndex& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < o.e[i]) return false;
    return true;
  }

  bool operator==(const MultiIndex& o) const = default;
  auto operator<=>(const MultiIndex& o) const = default;
};

// Enumerates all multi-indices of given length with total degree exactly d,
// in lexicographic order. Deterministic; used for ansatz/monomial bases.
inline void enumerate_degree(std::size_t nvars, int d,
                             std::vector<MultiIndex>& out) {
  MultiIndex cur(nvars);
  // Recursive lambda over positions.
  auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
    if (pos + 1 == nvars) {
      cur.e[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur.e[pos] = k;
      self(self, pos + 1, rem - k);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(MultiIndex{});
    return;
  }
  rec(rec, 0, d);
}

inline std::vector<MultiIndex> all_of_degree(std::size_t nvars, int d) {
  std::vector<MultiIndex> out;
  enumerate_degree(nvars, d, out);
  return out;
}

inline std::vector<MultiIndex> all_up_to_degree(std::size_t nvars, int d) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= d; ++k) enumerate_degree(nvars, k, out);
  return out;
}

}  // namespace qtoda
