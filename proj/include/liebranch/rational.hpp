#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace liebranch {

/// Exact rational number over int64 with reduced representation.
///
/// All intermediate products run through 128-bit integers; a result that
/// does not fit into int64 after reduction throws std::overflow_error
/// instead of wrapping. Denominators are kept positive.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(int n) : num_(n), den_(1) {}        // NOLINT
  Rational(long long n, long long d) { assign(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Fractional part in [0,1): this - floor(this).
  Rational frac() const {
    long long m = num_ % den_;
    if (m < 0) m += den_;
    return Rational(m, den_);
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  using i128 = __int128;

  void assign(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    *this = from128(i128(n), i128(d));
  }

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) d = 1;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  long long num_;
  long long den_;
};

}  // namespace liebranch

namespace Eigen {

template <>
struct NumTraits<liebranch::Rational> {
  using Real = liebranch::Rational;
  using NonInteger = liebranch::Rational;
  using Literal = liebranch::Rational;
  using Nested = liebranch::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 20
  };
  static liebranch::Rational epsilon() { return {}; }
  static liebranch::Rational dummy_precision() { return {}; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
