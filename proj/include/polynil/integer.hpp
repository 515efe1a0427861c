#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace polynil {

using Integer = boost::multiprecision::cpp_int;

/// Input violates a documented precondition (bad modulus, mismatched shape, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is well defined but not implemented for this input,
/// typically an enumeration over an infinite group.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& x) { return x.str(); }

inline Integer absolute(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = absolute(a);
  b = absolute(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return absolute(a / gcd(a, b) * b);
}

/// Three-way comparison; cpp_int predates operator<=>.
inline std::strong_ordering compare(const Integer& a, const Integer& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Prime factorization by trial division. n must be >= 1; factor(1) is empty.
inline std::map<Integer, Integer> factor(Integer n) {
  if (n < 1) throw InvalidInput("factor: argument must be positive, got " + n.str());
  std::map<Integer, Integer> out;
  auto strip = [&](const Integer& p) {
    while (n % p == 0) {
      n /= p;
      ++out[p];
    }
  };
  strip(2);
  strip(3);
  // 6k +/- 1 wheel
  for (Integer p = 5; p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace polynil
