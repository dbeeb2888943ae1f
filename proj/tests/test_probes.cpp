#include <doctest.h>


#include <algorithm>
#include "support.hpp"
#include "titsarr/families.hpp"
#include "titsarr/probes.hpp"

using namespace titsarr;

namespace {

// Complete quadrilateral on four points in convex position: the four sides
// plus the two inner diagonals; the diagonals cross in a weight-2 vertex
// surrounded by the four weight-3 base points.
Arrangement complete_quadrilateral() {
  HPoint v1 = HPoint::of(0, 0, 1), v2 = HPoint::of(4, 0, 1), v3 = HPoint::of(5, 3, 1),
         v4 = HPoint::of(1, 2, 1);
  std::vector<TaggedLine> lines{{cross(v1, v2), "g12"}, {cross(v2, v3), "g23"},
                                {cross(v3, v4), "g34"}, {cross(v4, v1), "g41"},
                                {cross(v1, v3), "g13"}, {cross(v2, v4), "g24"}};
  return Arrangement::make(std::move(lines), HLine::of(0, 0, 1));
}

}  // namespace

TEST_SUITE_BEGIN("probes");

TEST_CASE("near pencil probe finds consecutive weight-2 vertices") {
  std::vector<TaggedLine> lines{{HLine::of(1, 0, 0), "x"},
                                {HLine::of(0, 1, 0), "y"},
                                {HLine::of(1, -1, 0), "xy"},
                                {HLine::of(0, 0, 1), "z"}};
  Arrangement arr = Arrangement::make(std::move(lines), HLine::of(1, 1, -1));
  ChartFrame f = Chart::boundary_at_infinity().resolve(arr);
  Window w(Rational(-3), Rational(3), Rational(-3), Rational(3));
  auto witness = near_pencil_probe(arr, f, w);
  REQUIRE(witness.has_value());
  // all three vertices on Z = 0 have weight two
  CHECK(arr.lines()[witness->line].line == HLine::of(0, 0, 1));
  CHECK(incident(witness->v1, HLine::of(0, 0, 1)));
  CHECK(incident(witness->v2, HLine::of(0, 0, 1)));
}

TEST_CASE("near pencil probe is silent on the triangular grid") {
  Arrangement arr = gen_affine_a2(-1, 2);
  ChartFrame f = Chart::boundary_at_infinity().resolve(arr);
  Window w(Rational(-1, 4), Rational(5, 4), Rational(-1, 4), Rational(5, 4));
  CHECK_FALSE(near_pencil_probe(arr, f, w).has_value());
}

TEST_CASE("near pencil probe is silent on the tangent-pencil model") {
  auto [lo, hi] = window_complete_range(Window(Rational(-5, 2), Rational(5, 2), Rational(-2),
                                               Rational(4)));
  Arrangement arr = gen_a2tilde0(lo, hi);
  ChartFrame f = Chart::boundary_at_infinity().resolve(arr);
  Window w(Rational(-5, 2), Rational(5, 2), Rational(-2), Rational(4));
  CHECK_FALSE(near_pencil_probe(arr, f, w).has_value());
}

TEST_CASE("generated near pencils always witness") {
  for (int n = 4; n <= 8; ++n) {
    Arrangement arr = gen_near_pencil(n);
    ChartFrame f = Chart::boundary_at_infinity().resolve(arr);
    Window w(Rational(-12), Rational(12), Rational(-12), Rational(12));
    CHECK(near_pencil_probe(arr, f, w).has_value());
  }
}

TEST_CASE("lemma3 probe finds the inner diagonal vertex") {
  Arrangement arr = complete_quadrilateral();
  ChartFrame f = Chart::coordinate(2).resolve(arr);
  Window w(Rational(-20), Rational(30), Rational(-30), Rational(40));
  auto witness = lemma3_probe(arr, f, w);
  REQUIRE(witness.has_value());
  // the crossing of the two diagonals: g13 = y = 3x/5, g24: 2x + 3y = 8
  CHECK(witness->v == HPoint::of(40, 24, 19));
  std::vector<HPoint> expect{HPoint::of(0, 0, 1), HPoint::of(4, 0, 1), HPoint::of(5, 3, 1),
                             HPoint::of(1, 2, 1)};
  for (const auto& n : witness->neighbors)
    CHECK(std::find(expect.begin(), expect.end(), n) != expect.end());
}

TEST_CASE("lemma3 probe is silent on the grid and the tangent-pencil model") {
  Arrangement grid = gen_affine_a2(-1, 2);
  ChartFrame fg = Chart::boundary_at_infinity().resolve(grid);
  Window wg(Rational(-1, 4), Rational(5, 4), Rational(-1, 4), Rational(5, 4));
  CHECK_FALSE(lemma3_probe(grid, fg, wg).has_value());

  Window wa(Rational(-5, 2), Rational(5, 2), Rational(-2), Rational(4));
  auto [lo, hi] = window_complete_range(wa);
  Arrangement a2t0_arr = gen_a2tilde0(lo, hi);
  ChartFrame fa = Chart::boundary_at_infinity().resolve(a2t0_arr);
  CHECK_FALSE(lemma3_probe(a2t0_arr, fa, wa).has_value());
}

TEST_SUITE_END();
