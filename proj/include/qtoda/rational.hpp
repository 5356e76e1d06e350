#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qtoda {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", optional leading '-'.
inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in: " + s);
  r.canonicalize();
  return r;
}

// "p/q" for non-integers, plain "p" otherwise.
inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational abs_rat(const Rational& r) { return abs(r); }

}  // namespace qtoda
