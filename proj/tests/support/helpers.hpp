#pragma once

#include "conesing/divisor.hpp"

#include <string>

namespace conesing::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline Rational frac(long p, long den) {
  Rational r(p, den);
  r.canonicalize();
  return r;
}

inline CurveCouple couple(std::initializer_list<std::pair<const MarkedPoint, Rational>> terms) {
  return CurveCouple(QDivisor(terms));
}

}  // namespace conesing::testing
