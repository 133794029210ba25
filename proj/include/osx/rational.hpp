#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace osx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (q > 0 after normalization).
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

// Lowest terms, "p" when integral, "p/q" otherwise.
inline std::string rat_str(const Rat& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

// Display-only logarithm.
inline double rat_log(const Rat& r) {
  return std::log(numerator(r).convert_to<double>()) -
         std::log(denominator(r).convert_to<double>());
}

}  // namespace osx
