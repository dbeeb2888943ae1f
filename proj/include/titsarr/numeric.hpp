#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "titsarr/errors.hpp"

namespace titsarr {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor of the square root of a non-negative integer.
inline Int isqrt(const Int& n) {
  if (n < 0) fail(Errc::invalid_argument, "isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

// Exact rational number. Invariants: den > 0 and gcd(|num|, den) == 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}            // NOLINT: implicit by design
  Rational(long n) : num_(n), den_(1) {}           // NOLINT
  Rational(long long n) : num_(n), den_(1) {}      // NOLINT
  Rational(Int n) : num_(std::move(n)), den_(1) {} // NOLINT
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  // Parses "p", "-p" or "p/q" with arbitrary-precision decimal digits.
  static Rational parse(std::string_view s);

  Int floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }
  Int ceil() const {
    Int q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) ++q;
    return q;
  }

  Rational operator-() const { return Rational(raw{}, -num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(Errc::invalid_argument, "division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct raw {};
  Rational(raw, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

  void reduce() {
    if (den_ == 0) fail(Errc::invalid_argument, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

inline Rational rational_abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational Rational::parse(std::string_view s) {
  auto parse_int = [](std::string_view t) -> Int {
    if (t.empty()) fail(Errc::parse_error, "empty integer literal");
    bool negative = t[0] == '-';
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) fail(Errc::parse_error, "sign without digits");
    for (std::size_t k = i; k < t.size(); ++k) {
      if (t[k] < '0' || t[k] > '9')
        fail(Errc::parse_error, "invalid digit in '" + std::string(t) + "'");
    }
    Int magnitude{std::string(t.substr(i))};
    return negative ? -magnitude : magnitude;
  };
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  Int n = parse_int(s.substr(0, slash));
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) fail(Errc::parse_error, "zero denominator in '" + std::string(s) + "'");
  return Rational(std::move(n), std::move(d));
}

}  // namespace titsarr
