#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "titsarr/numeric.hpp"

namespace titsarr {

using Triple = std::array<Int, 3>;

namespace detail {

// Canonical representative of a projective class: primitive integer triple
// with positive first nonzero entry. Throws on the zero triple.
Triple reduced(Triple t);

// Plain vector product; callers normalize.
inline Triple cross_raw(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Int dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace detail

// Shared canonical homogeneous triple. Points and lines use the same
// representation but distinct types; the only bridge between the roles is
// dual(), which is the identity on coordinates.
template <typename Tag>
class Homog {
 public:
  static Homog of(Int x, Int y, Int z) {
    return Homog(detail::reduced({std::move(x), std::move(y), std::move(z)}));
  }
  static Homog of(long x, long y, long z) { return of(Int(x), Int(y), Int(z)); }
  static Homog of(const Rational& x, const Rational& y, const Rational& z) {
    // Clear denominators by the common multiple, then reduce.
    Int m = lcm(lcm(x.den(), y.den()), z.den());
    return of(x.num() * (m / x.den()), y.num() * (m / y.den()), z.num() * (m / z.den()));
  }
  static Homog from_triple(const Triple& t) { return Homog(detail::reduced(t)); }

  const Triple& coords() const { return c_; }
  const Int& operator[](std::size_t i) const { return c_[i]; }

  friend bool operator==(const Homog& a, const Homog& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Homog& a, const Homog& b) { return a.c_ != b.c_; }
  friend bool operator<(const Homog& a, const Homog& b) { return a.c_ < b.c_; }

  std::string str() const {
    return "(" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const Homog& h) { return os << h.str(); }

 private:
  explicit Homog(Triple t) : c_(std::move(t)) {}
  Triple c_;
};

struct PointTag {};
struct LineTag {};
using HPoint = Homog<PointTag>;
using HLine = Homog<LineTag>;

// Standard duality: identity on coordinates, swap of roles.
inline HLine dual(const HPoint& p) { return HLine::from_triple(p.coords()); }
inline HPoint dual(const HLine& l) { return HPoint::from_triple(l.coords()); }

inline bool incident(const HPoint& p, const HLine& l) {
  return detail::dot(p.coords(), l.coords()) == 0;
}

// Line through two distinct points.
HLine cross(const HPoint& a, const HPoint& b);
// Intersection point of two distinct lines.
HPoint cross(const HLine& a, const HLine& b);

inline bool collinear(const HPoint& a, const HPoint& b, const HPoint& c) {
  Triple n = detail::cross_raw(a.coords(), b.coords());
  return detail::dot(n, c.coords()) == 0;
}

inline bool concurrent(const HLine& a, const HLine& b, const HLine& c) {
  Triple n = detail::cross_raw(a.coords(), b.coords());
  return detail::dot(n, c.coords()) == 0;
}

// Row-major exact 3x3 integer matrix; just enough linear algebra for
// projectivities and conic matrices.
struct Mat3 {
  std::array<Int, 9> a{};

  static Mat3 identity() {
    Mat3 m;
    m.a = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return m;
  }

  const Int& at(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }
  Int& at(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }

  Int det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }

  Mat3 adjugate() const;
  Mat3 transpose() const;
  Triple mul(const Triple& v) const;
  friend Mat3 operator*(const Mat3& x, const Mat3& y);
  friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }
};

// Invertible projective transformation, stored as a canonical primitive
// integer matrix (positive first nonzero entry in row-major order).
class Projectivity {
 public:
  static Projectivity identity() { return Projectivity(Mat3::identity()); }
  static Projectivity from_matrix(const Mat3& m);

  const Mat3& matrix() const { return m_; }

  // Points transform by the matrix, lines by the inverse transpose, so that
  // incidence is preserved.
  HPoint operator()(const HPoint& p) const { return HPoint::from_triple(m_.mul(p.coords())); }
  HLine operator()(const HLine& l) const {
    return HLine::from_triple(m_.adjugate().transpose().mul(l.coords()));
  }

  Projectivity inverse() const { return Projectivity::from_matrix(m_.adjugate()); }
  friend Projectivity operator*(const Projectivity& f, const Projectivity& g) {
    return Projectivity::from_matrix(f.m_ * g.m_);
  }
  friend bool operator==(const Projectivity& f, const Projectivity& g) { return f.m_ == g.m_; }

 private:
  explicit Projectivity(Mat3 m) : m_(std::move(m)) {}
  Mat3 m_;
};

// The unique projectivity sending the standard frame e1, e2, e3, e1+e2+e3 to
// a, b, c, d. The four targets must be in general position.
Projectivity frame_map(const HPoint& a, const HPoint& b, const HPoint& c, const HPoint& d);

}  // namespace titsarr
