// Helpers for exact fractions taken mod 1 (values of characters Y -> Q/Z).

#pragma once

#include <numeric>
#include <string>

#include "parflag/intmat.hpp"

namespace parflag {

// Representative of x in [0,1).
inline Rat mod1(Rat x) {
  Int n = x.numerator(), d = x.denominator();  // d > 0 (boost normalizes)
  Int r = n % d;
  if (r < 0) r += d;
  return Rat(r, d);
}

inline Rat parse_frac(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    Int num = std::stoll(s.substr(0, slash));
    Int den = std::stoll(s.substr(slash + 1));
    if (den == 0) fail("fraction with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    fail("cannot parse fraction: " + s);
  } catch (const std::out_of_range&) {
    fail("fraction out of range: " + s);
  }
  return Rat(0);  // unreachable
}

inline std::string frac_str(const Rat& x) {
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

}  // namespace parflag
