#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace powaut {

// Exact arbitrary-precision integer. Orders of the assembled automorphism
// groups overflow 64 bits already for modest inputs (products of factorials).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace powaut
