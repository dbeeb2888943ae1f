#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "titsarr/cubic.hpp"

using namespace titsarr;

namespace {

Cubic cubic_xy_xminusy() {  // XY(X-Y) = X^2Y - XY^2
  std::array<Rational, 10> c{};
  c[1] = 1;
  c[3] = -1;
  return Cubic::from_coeffs(c);
}

Cubic cubic_z_times_parabola() {  // Z(X^2 - XZ - 2YZ) = X^2Z - XZ^2 - 2YZ^2
  std::array<Rational, 10> c{};
  c[2] = 1;
  c[5] = -1;
  c[8] = -2;
  return Cubic::from_coeffs(c);
}

Cubic fermat() {  // X^3 + Y^3 + Z^3
  std::array<Rational, 10> c{};
  c[0] = c[6] = c[9] = 1;
  return Cubic::from_coeffs(c);
}

}  // namespace

TEST_SUITE_BEGIN("cubic");

TEST_CASE("evaluation in the fixed monomial order") {
  Cubic p = cubic_z_times_parabola();
  CHECK(p.eval(HPoint::of(3, 3, 1)) == 0);
  CHECK(p.eval(HPoint::of(0, 1, 0)) == 0);
  CHECK(fermat().eval(HPoint::of(1, 1, 0)) == 2);
}

TEST_CASE("fit recovers the triple-line cubic from dual points") {
  std::vector<HPoint> pts;
  for (long k : {-1L, 0L, 1L, 2L}) {
    pts.push_back(HPoint::of(1, 0, -k));
    pts.push_back(HPoint::of(0, 1, -k));
    pts.push_back(HPoint::of(1, 1, -k));
  }
  CubicFit fit = cubic_fit(pts);
  REQUIRE(fit.status == CubicFit::Status::unique);
  CHECK(*fit.cubic == cubic_xy_xminusy());
  for (const auto& p : pts) CHECK(fit.cubic->eval(p) == 0);
}

TEST_CASE("fit recovers the conic-plus-line cubic from dual points") {
  std::vector<HPoint> pts;
  for (long k = -2; k <= 6; ++k)
    pts.push_back(HPoint::of(Int(k), Int(k * (k - 1) / 2), Int(1)));
  for (long k : {0L, 1L, 2L})
    pts.push_back(HPoint::of(Rational(1), Rational(k, 2), Rational(0)));
  CubicFit fit = cubic_fit(pts);
  REQUIRE(fit.status == CubicFit::Status::unique);
  CHECK(*fit.cubic == cubic_z_times_parabola());
}

TEST_CASE("fit reports underdetermined systems") {
  std::vector<HPoint> pts;
  for (long k = 1; k <= 9; ++k) pts.push_back(HPoint::of(Int(k), Int(1), Int(0)));
  CubicFit fit = cubic_fit(pts);
  CHECK(fit.status == CubicFit::Status::underdetermined);
  CHECK(fit.nullity >= 4);
  CHECK_THROWS_AS(cubic_fit(std::vector<HPoint>(8, HPoint::of(1, 0, 0))), Error);
}

TEST_CASE("fit reports when only the zero cubic remains") {
  // 3x3 grid plus extra generic points kill every cubic.
  std::vector<HPoint> pts;
  for (long x = 0; x <= 3; ++x)
    for (long y = 0; y <= 3; ++y) pts.push_back(HPoint::of(Int(x), Int(y), Int(1)));
  pts.push_back(HPoint::of(1, 5, 7));
  pts.push_back(HPoint::of(5, 1, 9));
  CubicFit fit = cubic_fit(pts);
  CHECK(fit.status == CubicFit::Status::no_cubic);
}

TEST_CASE("linear factor test certifies divisibility with cofactor") {
  auto lf = linear_factor_test(cubic_z_times_parabola(), HLine::of(0, 0, 1));
  CHECK(lf.divides);
  CHECK(*lf.cofactor == Conic::from_coeffs(1, 0, -1, 0, -2, 0));

  auto lf2 = linear_factor_test(cubic_xy_xminusy(), HLine::of(1, -1, 0));
  CHECK(lf2.divides);
  CHECK(*lf2.cofactor == Conic::from_coeffs(0, 1, 0, 0, 0, 0));

  // evaluate at (1,0,0),(0,1,0),(1,1,0),(1,-1,0): values 1,1,2,0 not all zero
  auto lf3 = linear_factor_test(fermat(), HLine::of(0, 0, 1));
  CHECK_FALSE(lf3.divides);
}

TEST_CASE("factor type: three concurrent lines") {
  const HLine cands[4] = {HLine::of(1, 0, 0), HLine::of(0, 1, 0), HLine::of(1, -1, 0),
                          HLine::of(1, 1, 0)};
  FactorType f = cubic_factor_type(cubic_xy_xminusy(), cands);
  CHECK(f.kind == FactorType::Kind::three_lines);
  CHECK(f.concurrent);
  CHECK(*f.common_point == HPoint::of(0, 0, 1));
  CHECK(f.all_rational);
  CHECK(f.dividing_candidates.size() == 3);
  CHECK(f.lines.size() == 3);
}

TEST_CASE("factor type: conic plus tangent line") {
  const HLine cands[1] = {HLine::of(0, 0, 1)};
  FactorType f = cubic_factor_type(cubic_z_times_parabola(), cands);
  CHECK(f.kind == FactorType::Kind::conic_plus_line);
  CHECK(*f.line == HLine::of(0, 0, 1));
  CHECK(*f.conic == Conic::from_coeffs(1, 0, -1, 0, -2, 0));
  CHECK(f.relation->relation == LineConicRelation::tangent);
  CHECK(*f.relation->tangent_point == HPoint::of(0, 1, 0));
}

TEST_CASE("factor type: no rational linear factor among candidates") {
  std::vector<HLine> cands;
  testing::Rng rng(31);
  int tries = 0;
  while (cands.size() < 12 && tries < 200) {
    ++tries;
    HPoint p = rng.point(4), q = rng.point(4);
    if (p == q) continue;
    HLine l = cross(p, q);
    if (std::find(cands.begin(), cands.end(), l) == cands.end()) cands.push_back(l);
  }
  FactorType f = cubic_factor_type(fermat(), cands);
  CHECK(f.kind == FactorType::Kind::no_rational_linear_factor);
}

TEST_CASE("factor type: non-concurrent triple") {
  // XYZ: components meet pairwise in three distinct points.
  std::array<Rational, 10> c{};
  c[4] = 1;
  Cubic xyz = Cubic::from_coeffs(c);
  const HLine cands[3] = {HLine::of(1, 0, 0), HLine::of(0, 1, 0), HLine::of(0, 0, 1)};
  FactorType f = cubic_factor_type(xyz, cands);
  CHECK(f.kind == FactorType::Kind::three_lines);
  CHECK_FALSE(f.concurrent);
}

TEST_CASE("cofactor vanishes at the fitted points off the factor line") {
  std::vector<HPoint> pts;
  for (long k = -2; k <= 6; ++k)
    pts.push_back(HPoint::of(Int(k), Int(k * (k - 1) / 2), Int(1)));
  for (long k : {0L, 1L, 2L})
    pts.push_back(HPoint::of(Rational(1), Rational(k, 2), Rational(0)));
  CubicFit fit = cubic_fit(pts);
  auto lf = linear_factor_test(*fit.cubic, HLine::of(0, 0, 1));
  REQUIRE(lf.divides);
  for (const auto& p : pts) {
    if (incident(p, HLine::of(0, 0, 1))) continue;
    CHECK(lf.cofactor->eval(p) == 0);
  }
}

TEST_CASE("divisible product property") {
  testing::Rng rng(32);
  int done = 0;
  while (done < 200) {
    HLine l = rng.line(6);
    std::array<Int, 6> q;
    for (auto& x : q) x = rng.int_in(-5, 5);
    bool zero = true;
    for (const auto& x : q) zero = zero && x == 0;
    if (zero) continue;
    Cubic p = Cubic::from_int_coeffs(multiply_linear_quadratic(l.coords(), q));
    auto lf = linear_factor_test(p, l);
    CHECK(lf.divides);
    ++done;
  }
}

TEST_SUITE_END();
