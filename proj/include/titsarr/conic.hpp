#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "titsarr/projective.hpp"

namespace titsarr {

// Ternary quadratic form as a canonical symmetric integer matrix (primitive
// entries, positive first nonzero entry in row-major order). Note the
// canonical matrix represents the form up to scale: the form coefficients of
// e.g. XY are stored as 2XY so the matrix stays integral.
class Conic {
 public:
  // Coefficients of a*X^2 + b*XY + c*XZ + d*Y^2 + e*YZ + f*Z^2.
  static Conic from_coeffs(const Rational& a, const Rational& b, const Rational& c,
                           const Rational& d, const Rational& e, const Rational& f);
  static Conic from_symmetric(const std::array<Rational, 6>& upper);  // m00,m01,m02,m11,m12,m22

  const Mat3& matrix() const { return m_; }

  // (X^2, XY, XZ, Y^2, YZ, Z^2) coefficients of the stored integral form.
  std::array<Int, 6> form_coeffs() const {
    return {m_.at(0, 0), 2 * m_.at(0, 1), 2 * m_.at(0, 2),
            m_.at(1, 1), 2 * m_.at(1, 2), m_.at(2, 2)};
  }

  Int eval(const HPoint& p) const {
    const Triple& v = p.coords();
    return detail::dot(v, m_.mul(v));
  }

  // Polar pairing 2 p^T M q; zero iff p and q are conjugate.
  Int polar(const HPoint& p, const HPoint& q) const {
    return 2 * detail::dot(p.coords(), m_.mul(q.coords()));
  }

  friend bool operator==(const Conic& a, const Conic& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Conic& a, const Conic& b) { return !(a == b); }

  std::string str() const;

 private:
  explicit Conic(Mat3 m) : m_(std::move(m)) {}
  Mat3 m_;
};

// The unique conic through five points in sufficiently general position.
// Throws UnderdeterminedFit (with the nullspace dimension) otherwise.
Conic conic_through_5(const std::array<HPoint, 5>& pts);

// Tangent line M p at a smooth point p of the conic.
HLine tangent_line(const Conic& m, const HPoint& p);

enum class LineConicRelation { disjoint, tangent, secant };

struct LineConicResult {
  LineConicRelation relation;
  std::optional<HPoint> tangent_point;                 // set for tangent
  std::optional<std::pair<HPoint, HPoint>> points;     // set for secant with rational points
  bool irrational_points = false;                      // secant with irrational intersections
};

// Classifies the restriction of the form to a line by discriminant sign.
// Throws ComponentLine when the line lies on the conic.
LineConicResult line_conic_intersection(const HLine& l, const Conic& m);

enum class ConicKind {
  irreducible_real,     // rank 3, signature (2,1)
  irreducible_empty,    // rank 3, signature (3,0)
  two_real_lines,       // rank 2, signature (1,1)
  conjugate_line_pair,  // rank 2, signature (2,0)
  double_line,          // rank 1
};

const char* conic_kind_name(ConicKind k);

struct ConicClass {
  int rank = 0;
  std::pair<int, int> signature;  // normalized so positives >= negatives
  ConicKind kind = ConicKind::irreducible_real;
  std::optional<HPoint> singular_point;               // rank 2 only
  std::optional<std::pair<HLine, HLine>> components;  // rational line components when they exist
};

// Exact rank and signature by symmetric congruence reduction.
ConicClass conic_classify(const Conic& m);

// Adjugate conic; the tangent lines of m are the points of the dual. Requires
// rank 3.
Conic dual_conic(const Conic& m);

// Second intersection of a line with the conic through a known rational point
// of both; returns the known point itself when the line is tangent there.
HPoint second_intersection(const Conic& m, const HLine& l, const HPoint& known);

}  // namespace titsarr
