#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace udc {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// base^e for integer e of either sign; throws on 0^negative
inline Rat rat_pow(const Rat& base, int e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-(long long)e)
                        : static_cast<unsigned long>(e);
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (inv) {
    if (acc == 0) throw std::domain_error("rat_pow: zero to negative power");
    acc = Rat(1) / acc;
  }
  return acc;
}

}  // namespace udc
