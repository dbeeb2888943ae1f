#pragma once

#include <random>
#include <utility>

#include "titsarr/arrangement.hpp"
#include "titsarr/projective.hpp"

namespace titsarr::testing {

// Exact transport of a chart frame along a projectivity. Canonicalizing the
// image forms rescales each axis by a rational factor, so chart coordinates
// transform per-axis: u' = fu * u, v' = fv * v. The transported window is the
// image of the original one under those factors.
struct ChartTransport {
  ChartFrame frame;
  Rational fu, fv;

  std::pair<Rational, Rational> coords(const Rational& u, const Rational& v) const {
    return {fu * u, fv * v};
  }
  Window window(const Window& w) const {
    Rational a = fu * w.u_min, b = fu * w.u_max;
    if (b < a) std::swap(a, b);
    Rational c = fv * w.v_min, d = fv * w.v_max;
    if (d < c) std::swap(c, d);
    return Window(a, b, c, d);
  }
};

// Transport along an explicit coordinate map of line coefficient vectors.
inline ChartTransport transport_chart_matrix(const Mat3& n, const HLine& l0, const HLine& l1,
                                             const HLine& l2) {
  auto image = [&](const HLine& l) -> std::pair<HLine, Rational> {
    Triple raw = n.mul(l.coords());
    HLine canon = HLine::from_triple(raw);
    for (std::size_t i = 0; i < 3; ++i)
      if (raw[i] != 0) return {canon, Rational(raw[i], canon[i])};
    return {canon, Rational(1)};
  };
  auto [m0, s0] = image(l0);
  auto [m1, s1] = image(l1);
  auto [m2, s2] = image(l2);
  return {ChartFrame::framed(m0, m1, m2), s0 / s1, s0 / s2};
}

// Lines moved by the projectivity's line action l -> t(l).
inline ChartTransport transport_chart(const Projectivity& t, const HLine& l0, const HLine& l1,
                                      const HLine& l2) {
  return transport_chart_matrix(t.matrix().adjugate().transpose(), l0, l1, l2);
}

// Deterministic generators for the property suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long int_in(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }

  Int nonzero_int(long lo, long hi) {
    while (true) {
      long v = int_in(lo, hi);
      if (v != 0) return Int(v);
    }
  }

  Rational rational(long mag = 20, long den = 9) {
    return Rational(Int(int_in(-mag, mag)), Int(int_in(1, den)));
  }

  Rational nonzero_rational(long mag = 20, long den = 9) {
    while (true) {
      Rational r = rational(mag, den);
      if (!r.is_zero()) return r;
    }
  }

  HPoint point(long mag = 30) {
    while (true) {
      long x = int_in(-mag, mag), y = int_in(-mag, mag), z = int_in(-mag, mag);
      if (x != 0 || y != 0 || z != 0) return HPoint::of(x, y, z);
    }
  }

  HLine line(long mag = 30) { return dual(point(mag)); }

  Projectivity projectivity(long mag = 4) {
    while (true) {
      Mat3 m;
      for (auto& x : m.a) x = int_in(-mag, mag);
      if (m.det() != 0) return Projectivity::from_matrix(m);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace titsarr::testing
