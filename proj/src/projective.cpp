#include "titsarr/projective.hpp"

namespace titsarr {

namespace detail {

Triple reduced(Triple t) {
  if (t[0] == 0 && t[1] == 0 && t[2] == 0)
    fail(Errc::degenerate_input, "zero triple has no projective class");
  Int g = gcd(gcd(abs(t[0]), abs(t[1])), abs(t[2]));
  if (g > 1)
    for (auto& x : t) x /= g;
  for (const auto& x : t) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : t) y = -y;
    break;
  }
  return t;
}

}  // namespace detail

HLine cross(const HPoint& a, const HPoint& b) {
  Triple n = detail::cross_raw(a.coords(), b.coords());
  if (n[0] == 0 && n[1] == 0 && n[2] == 0)
    fail(Errc::degenerate_input, "cross of proportional points " + a.str() + ", " + b.str());
  return HLine::from_triple(n);
}

HPoint cross(const HLine& a, const HLine& b) {
  Triple n = detail::cross_raw(a.coords(), b.coords());
  if (n[0] == 0 && n[1] == 0 && n[2] == 0)
    fail(Errc::degenerate_input, "cross of proportional lines " + a.str() + ", " + b.str());
  return HPoint::from_triple(n);
}

Mat3 Mat3::adjugate() const {
  Mat3 r;
  r.at(0, 0) = at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
  r.at(0, 1) = at(0, 2) * at(2, 1) - at(0, 1) * at(2, 2);
  r.at(0, 2) = at(0, 1) * at(1, 2) - at(0, 2) * at(1, 1);
  r.at(1, 0) = at(1, 2) * at(2, 0) - at(1, 0) * at(2, 2);
  r.at(1, 1) = at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0);
  r.at(1, 2) = at(0, 2) * at(1, 0) - at(0, 0) * at(1, 2);
  r.at(2, 0) = at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0);
  r.at(2, 1) = at(0, 1) * at(2, 0) - at(0, 0) * at(2, 1);
  r.at(2, 2) = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  return r;
}

Mat3 Mat3::transpose() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
  return r;
}

Triple Mat3::mul(const Triple& v) const {
  return {at(0, 0) * v[0] + at(0, 1) * v[1] + at(0, 2) * v[2],
          at(1, 0) * v[0] + at(1, 1) * v[1] + at(1, 2) * v[2],
          at(2, 0) * v[0] + at(2, 1) * v[1] + at(2, 2) * v[2]};
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s += x.at(i, k) * y.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

namespace {

Mat3 canonical_matrix(Mat3 m) {
  Int g = 0;
  for (const auto& x : m.a) g = gcd(g, abs(x));
  if (g > 1)
    for (auto& x : m.a) x /= g;
  for (const auto& x : m.a) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : m.a) y = -y;
    break;
  }
  return m;
}

}  // namespace

Projectivity Projectivity::from_matrix(const Mat3& m) {
  if (m.det() == 0) fail(Errc::degenerate_input, "projectivity matrix is singular");
  return Projectivity(canonical_matrix(m));
}

Projectivity frame_map(const HPoint& a, const HPoint& b, const HPoint& c, const HPoint& d) {
  const auto check = [](const HPoint& p, const HPoint& q, const HPoint& r) {
    if (collinear(p, q, r))
      fail(Errc::degenerate_frame,
           "collinear frame points " + p.str() + ", " + q.str() + ", " + r.str());
  };
  check(a, b, c);
  check(a, b, d);
  check(a, c, d);
  check(b, c, d);

  // Solve l1*a + l2*b + l3*c = d by Cramer's rule, then scale the columns.
  Mat3 cols;
  for (int i = 0; i < 3; ++i) {
    cols.at(i, 0) = a[static_cast<std::size_t>(i)];
    cols.at(i, 1) = b[static_cast<std::size_t>(i)];
    cols.at(i, 2) = c[static_cast<std::size_t>(i)];
  }
  Mat3 adj = cols.adjugate();
  Triple lambda = adj.mul(d.coords());  // det * coefficients
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    m.at(i, 0) = lambda[0] * a[static_cast<std::size_t>(i)];
    m.at(i, 1) = lambda[1] * b[static_cast<std::size_t>(i)];
    m.at(i, 2) = lambda[2] * c[static_cast<std::size_t>(i)];
  }
  return Projectivity::from_matrix(m);
}

}  // namespace titsarr
