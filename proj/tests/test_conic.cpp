#include <doctest.h>

#include "support.hpp"
#include "titsarr/conic.hpp"

using namespace titsarr;

namespace {
const Conic circle = Conic::from_coeffs(1, 0, 0, 1, 0, -1);        // X^2+Y^2-Z^2
const Conic a2t0 = Conic::from_coeffs(1, 0, -1, 0, -2, 0);         // X^2-XZ-2YZ
}  // namespace

TEST_SUITE_BEGIN("conic");

TEST_CASE("evaluation") {
  CHECK(circle.eval(HPoint::of(1, 0, 1)) == 0);
  CHECK(circle.eval(HPoint::of(0, 0, 1)) == -1);
  // X^2 - XZ - 2YZ at (3,3,1): 9 - 3 - 6 = 0
  CHECK(a2t0.eval(HPoint::of(3, 3, 1)) == 0);
}

TEST_CASE("conic through five points: the tangency-contradiction fit") {
  // p1 = (1 : 0 : (b+4)/3) at b = -7/3 is (9:0:5).
  Conic c = conic_through_5({HPoint::of(0, 1, 0), HPoint::of(9, 0, 5), HPoint::of(1, 0, 1),
                             HPoint::of(2, 1, 1), HPoint::of(3, 3, 1)});
  CHECK(c == Conic::from_coeffs(Rational(-10, 3), 2, Rational(28, 3), 0, Rational(-10, 3), -6));
  CHECK(c == Conic::from_coeffs(5, -3, -14, 0, 5, 9));
  // independent check: the form vanishes at all five inputs
  for (const auto& p : {HPoint::of(0, 1, 0), HPoint::of(9, 0, 5), HPoint::of(1, 0, 1),
                        HPoint::of(2, 1, 1), HPoint::of(3, 3, 1)})
    CHECK(c.eval(p) == 0);
}

TEST_CASE("conic through five points: unit circle and parabola") {
  Conic c = conic_through_5({HPoint::of(1, 0, 1), HPoint::of(-1, 0, 1), HPoint::of(0, 1, 1),
                             HPoint::of(0, -1, 1), HPoint::of(3, 4, 5)});
  CHECK(c == circle);

  auto pt = [](long k) { return HPoint::of(Int(k), Int(k * (k - 1) / 2), Int(1)); };
  Conic par = conic_through_5({pt(0), pt(1), pt(2), pt(3), pt(4)});
  CHECK(par == a2t0);
}

TEST_CASE("conic through five points rejects dependent conditions") {
  CHECK_THROWS_AS(conic_through_5({HPoint::of(0, 0, 1), HPoint::of(1, 0, 1), HPoint::of(2, 0, 1),
                                   HPoint::of(3, 0, 1), HPoint::of(0, 1, 0)}),
                  Error);
}

TEST_CASE("tangent lines") {
  CHECK(tangent_line(circle, HPoint::of(1, 0, 1)) == HLine::of(1, 0, -1));
  // tangent to the circle at (-a:-b:1) is (a, b, 1): take a=3/5, b=4/5 scaled
  CHECK(tangent_line(circle, HPoint::of(-3, -4, 5)) == HLine::of(3, 4, 5));
  CHECK_THROWS_AS(tangent_line(circle, HPoint::of(5, 0, 1)), Error);
  // dual conic of the canonical model, tangent at (0:0:1) is Y = 0
  Conic dual_form = Conic::from_coeffs(4, -4, 0, 1, -8, 0);
  CHECK(tangent_line(dual_form, HPoint::of(0, 0, 1)) == HLine::of(0, 1, 0));
  // singular point of a degenerate conic
  Conic pair = Conic::from_coeffs(0, 1, 0, 0, 0, 0);  // XY
  CHECK_THROWS_AS(tangent_line(pair, HPoint::of(0, 0, 1)), Error);
}

TEST_CASE("line conic intersection classification") {
  auto far_line = line_conic_intersection(HLine::of(0, 0, 1), circle);
  CHECK(far_line.relation == LineConicRelation::disjoint);

  auto tangent = line_conic_intersection(HLine::of(0, 0, 1), a2t0);
  CHECK(tangent.relation == LineConicRelation::tangent);
  CHECK(*tangent.tangent_point == HPoint::of(0, 1, 0));

  auto secant = line_conic_intersection(HLine::of(0, 1, 0), circle);
  CHECK(secant.relation == LineConicRelation::secant);
  REQUIRE(secant.points.has_value());
  CHECK(((secant.points->first == HPoint::of(1, 0, 1) && secant.points->second == HPoint::of(-1, 0, 1)) ||
         (secant.points->first == HPoint::of(-1, 0, 1) && secant.points->second == HPoint::of(1, 0, 1))));

  auto irr = line_conic_intersection(HLine::of(1, 0, 0), Conic::from_coeffs(1, 0, 0, 1, 0, -2));
  CHECK(irr.relation == LineConicRelation::secant);
  CHECK(irr.irrational_points);
  CHECK_FALSE(irr.points.has_value());

  Conic pair = Conic::from_coeffs(0, 1, 0, 0, 0, 0);  // XY
  CHECK_THROWS_AS(line_conic_intersection(HLine::of(1, 0, 0), pair), Error);
}

TEST_CASE("classification by rank and signature") {
  auto c1 = conic_classify(circle);
  CHECK(c1.rank == 3);
  CHECK(c1.signature == std::pair<int, int>(2, 1));
  CHECK(c1.kind == ConicKind::irreducible_real);

  auto c2 = conic_classify(Conic::from_coeffs(0, 1, 0, 0, 0, 0));  // XY
  CHECK(c2.rank == 2);
  CHECK(c2.signature == std::pair<int, int>(1, 1));
  CHECK(c2.kind == ConicKind::two_real_lines);
  REQUIRE(c2.components.has_value());
  HLine x = HLine::of(1, 0, 0), y = HLine::of(0, 1, 0);
  CHECK(((c2.components->first == x && c2.components->second == y) ||
         (c2.components->first == y && c2.components->second == x)));

  auto c3 = conic_classify(Conic::from_coeffs(1, 0, 0, 1, 0, 0));  // X^2+Y^2
  CHECK(c3.rank == 2);
  CHECK(c3.signature == std::pair<int, int>(2, 0));
  CHECK(c3.kind == ConicKind::conjugate_line_pair);
  CHECK(*c3.singular_point == HPoint::of(0, 0, 1));

  auto c4 = conic_classify(Conic::from_coeffs(1, 0, 0, 0, 0, 0));  // X^2
  CHECK(c4.rank == 1);
  CHECK(c4.kind == ConicKind::double_line);
  CHECK(c4.components->first == HLine::of(1, 0, 0));

  auto c5 = conic_classify(Conic::from_coeffs(1, 0, 0, 1, 0, 1));  // X^2+Y^2+Z^2
  CHECK(c5.rank == 3);
  CHECK(c5.signature == std::pair<int, int>(3, 0));
  CHECK(c5.kind == ConicKind::irreducible_empty);

  // irrational component pair: X^2 - 2Y^2
  auto c6 = conic_classify(Conic::from_coeffs(1, 0, 0, -2, 0, 0));
  CHECK(c6.kind == ConicKind::two_real_lines);
  CHECK_FALSE(c6.components.has_value());
  CHECK(*c6.singular_point == HPoint::of(0, 0, 1));
}

TEST_CASE("classification kind is projectively invariant") {
  testing::Rng rng(21);
  const Conic forms[3] = {circle, Conic::from_coeffs(0, 1, 0, 0, 0, 0),
                          Conic::from_coeffs(1, 0, 0, 1, 0, 0)};
  for (int i = 0; i < 60; ++i) {
    Projectivity t = rng.projectivity();
    Mat3 m = t.matrix();
    for (const Conic& c : forms) {
      // congruence transform of the matrix
      Mat3 g = m.transpose() * c.matrix() * m;
      Conic moved = Conic::from_symmetric({Rational(g.at(0, 0)), Rational(g.at(0, 1)),
                                           Rational(g.at(0, 2)), Rational(g.at(1, 1)),
                                           Rational(g.at(1, 2)), Rational(g.at(2, 2))});
      CHECK(conic_classify(moved).kind == conic_classify(c).kind);
    }
  }
}

TEST_CASE("refitting transformed points yields the congruence-transformed conic") {
  const std::array<HPoint, 5> pts{HPoint::of(0, 1, 0), HPoint::of(9, 0, 5), HPoint::of(1, 0, 1),
                                  HPoint::of(2, 1, 1), HPoint::of(3, 3, 1)};
  Conic base = conic_through_5(pts);
  testing::Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    Projectivity t = rng.projectivity();
    std::array<HPoint, 5> moved{t(pts[0]), t(pts[1]), t(pts[2]), t(pts[3]), t(pts[4])};
    Conic refit = conic_through_5(moved);
    // forms transform by congruence with the inverse point map
    Mat3 n = t.matrix().adjugate();
    Mat3 g = n.transpose() * base.matrix() * n;
    Conic expected = Conic::from_symmetric({Rational(g.at(0, 0)), Rational(g.at(0, 1)),
                                            Rational(g.at(0, 2)), Rational(g.at(1, 1)),
                                            Rational(g.at(1, 2)), Rational(g.at(2, 2))});
    CHECK(refit == expected);
  }
}

TEST_CASE("dual conic") {
  CHECK(dual_conic(circle) == circle);  // self-dual up to canonical scale
  CHECK(dual_conic(a2t0) == Conic::from_coeffs(4, -4, 0, 1, -8, 0));
  CHECK(dual_conic(Conic::from_coeffs(1, 0, 0, 1, 0, 1)) == Conic::from_coeffs(1, 0, 0, 1, 0, 1));
  CHECK(dual_conic(dual_conic(a2t0)) == a2t0);
  CHECK_THROWS_AS(dual_conic(Conic::from_coeffs(0, 1, 0, 0, 0, 0)), Error);
}

TEST_CASE("tangent lines land on the dual conic") {
  // rational circle points (1-t^2 : 2t : 1+t^2)
  Conic dc = dual_conic(circle);
  for (long t : {0L, 1L, -1L, 2L, -2L, 3L, 5L}) {
    HPoint p = HPoint::of(Int(1 - t * t), Int(2 * t), Int(1 + t * t));
    REQUIRE(circle.eval(p) == 0);
    HLine tl = tangent_line(circle, p);
    CHECK(dc.eval(dual(tl)) == 0);
  }
}

TEST_CASE("second intersection walks the conic rationally") {
  HPoint top = HPoint::of(0, 1, 1);
  HPoint s = second_intersection(circle, cross(top, HPoint::of(1, 0, 1)), top);
  CHECK(s == HPoint::of(1, 0, 1));
  // tangent line comes back to the same point
  CHECK(second_intersection(circle, tangent_line(circle, top), top) == top);
}

TEST_SUITE_END();
