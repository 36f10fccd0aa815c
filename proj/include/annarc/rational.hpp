#pragma once

#include <boost/rational.hpp>
#include <string>

namespace annarc {

using Rational = boost::rational<long long>;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace annarc
