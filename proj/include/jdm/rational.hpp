#ifndef JDM_RATIONAL_HPP
#define JDM_RATIONAL_HPP

#include <numeric>
#include <string>

namespace jdm {

// Exact fraction with a positive denominator, always stored reduced.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d) {
    Rational r{n, d};
    r.normalize();
    return r;
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

}  // namespace jdm

#endif
