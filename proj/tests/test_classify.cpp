#include <doctest.h>


#include <algorithm>
#include "support.hpp"
#include "titsarr/classify.hpp"
#include "titsarr/families.hpp"

using namespace titsarr;

namespace {

Cubic canonical_a2t0_cubic() {  // Z(X^2 - XZ - 2YZ)
  std::array<Rational, 10> c{};
  c[2] = 1;
  c[5] = -1;
  c[8] = -2;
  return Cubic::from_coeffs(c);
}

Cubic canonical_a2_cubic() {  // XY(X-Y)
  std::array<Rational, 10> c{};
  c[1] = 1;
  c[3] = -1;
  return Cubic::from_coeffs(c);
}

}  // namespace

TEST_SUITE_BEGIN("classify");

TEST_CASE("candidate spans cover exactly the heavy dual lines") {
  Arrangement arr = gen_a2tilde0(-4, 8);
  std::vector<HPoint> duals;
  for (const auto& tl : arr.lines()) duals.push_back(dual(tl.line));
  auto cands = component_candidates(duals);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0] == HLine::of(0, 0, 1));

  Arrangement grid = gen_affine_a2(-2, 3);
  duals.clear();
  for (const auto& tl : grid.lines()) duals.push_back(dual(tl.line));
  auto gc = component_candidates(duals);
  REQUIRE(gc.size() == 3);
  CHECK(std::find(gc.begin(), gc.end(), HLine::of(1, 0, 0)) != gc.end());
  CHECK(std::find(gc.begin(), gc.end(), HLine::of(0, 1, 0)) != gc.end());
  CHECK(std::find(gc.begin(), gc.end(), HLine::of(1, -1, 0)) != gc.end());
}

TEST_CASE("the tangent-pencil model classifies as AffineA2Zero") {
  Arrangement arr = gen_a2tilde0(-4, 8);
  Window w(Rational(-2), Rational(2), Rational(-2), Rational(3));
  Classification cls = classify(arr, Chart::boundary_at_infinity(), w);
  CHECK(cls.verdict == Verdict::affine_a2zero);
  REQUIRE(cls.cubic.has_value());
  CHECK(*cls.cubic == canonical_a2t0_cubic());
  CHECK(cls.factor->kind == FactorType::Kind::conic_plus_line);
  CHECK(*cls.tangency_point == HPoint::of(0, 1, 0));
}

TEST_CASE("the triangular grid classifies as AffineA2") {
  Arrangement arr = gen_affine_a2(-2, 3);
  Window w(Rational(-1, 2), Rational(3, 2), Rational(-1, 2), Rational(3, 2));
  Classification cls = classify(arr, Chart::boundary_at_infinity(), w);
  CHECK(cls.verdict == Verdict::affine_a2);
  REQUIRE(cls.cubic.has_value());
  CHECK(*cls.cubic == canonical_a2_cubic());
  CHECK(cls.factor->kind == FactorType::Kind::three_lines);
  CHECK(*cls.concurrency_point == HPoint::of(0, 0, 1));
}

TEST_CASE("generated near pencils classify as NearPencil") {
  Arrangement arr = gen_near_pencil(10);
  Window w(Rational(-12), Rational(12), Rational(-12), Rational(12));
  Classification cls = classify(arr, Chart::boundary_at_infinity(), w);
  CHECK(cls.verdict == Verdict::near_pencil);
  CHECK(cls.pencil_witness.has_value());
}

TEST_CASE("small truncations without structural evidence are refused") {
  // six lines, no consecutive weight-2 pair in the window
  Arrangement arr = gen_affine_a2(0, 1);
  Window w(Rational(-1, 4), Rational(5, 4), Rational(-1, 4), Rational(5, 4));
  Classification cls = classify(arr, Chart::boundary_at_infinity(), w);
  CHECK(cls.verdict == Verdict::unsupported);
  CHECK(cls.reason == UnsupportedReason::small_instance);
}

TEST_CASE("a near pencil witness outranks the size gate") {
  Arrangement arr = gen_near_pencil(5);
  Window w(Rational(-8), Rational(8), Rational(-8), Rational(8));
  Classification cls = classify(arr, Chart::boundary_at_infinity(), w);
  CHECK(cls.verdict == Verdict::near_pencil);
}

TEST_CASE("an underdetermined fit without structural evidence is reported") {
  // ten lines through one point: the dual points are collinear, no vertex
  // has weight two, and no chamber is an interior triangle
  std::vector<TaggedLine> lines;
  for (long k = 1; k <= 10; ++k) lines.push_back({HLine::of(1, k, 0), ""});
  Arrangement arr = Arrangement::make(std::move(lines), HLine::of(0, 0, 1));
  Window w(Rational(-2), Rational(2), Rational(-2), Rational(2));
  Classification cls = classify(arr, Chart::custom(HLine::of(1, 1, -7)), w);
  CHECK(cls.verdict == Verdict::unsupported);
  CHECK(cls.reason == UnsupportedReason::fit_underdetermined);
}

TEST_CASE("classification is stable under framed-chart transport") {
  testing::Rng rng(71);
  Arrangement arr = gen_a2tilde0(-3, 5);
  Window w(Rational(-3, 2), Rational(3, 2), Rational(-1), Rational(2));
  Classification base = classify(arr, Chart::boundary_at_infinity(), w);
  REQUIRE(base.verdict == Verdict::affine_a2zero);
  for (int i = 0; i < 20; ++i) {
    Projectivity t = rng.projectivity();
    std::vector<TaggedLine> moved;
    for (const auto& tl : arr.lines()) moved.push_back({t(tl.line), tl.tag});
    Arrangement arr2 = Arrangement::make(std::move(moved), t(arr.boundary()));
    auto tp = testing::transport_chart(t, HLine::of(0, 1, 0), HLine::of(1, 0, 0),
                                       HLine::of(0, 0, 1));
    Chart chart = Chart::framed(t(HLine::of(0, 1, 0)), t(HLine::of(1, 0, 0)),
                                t(HLine::of(0, 0, 1)));
    Classification moved_cls = classify(arr2, chart, tp.window(w));
    CHECK(moved_cls.verdict == base.verdict);
  }
}

TEST_CASE("recognition returns the identity on the canonical model") {
  Arrangement arr = gen_a2tilde0(-4, 8);
  Window w(Rational(-2), Rational(2), Rational(-2), Rational(3));
  Classification cls = classify(arr, Chart::boundary_at_infinity(), w);
  REQUIRE(cls.verdict == Verdict::affine_a2zero);
  CHECK(recognize_a2tilde0(arr, cls) == Projectivity::identity());
}

TEST_CASE("recognition inverts a hidden projectivity") {
  testing::Rng rng(72);
  Arrangement model = gen_a2tilde0(-4, 8);
  // the reflection symmetry of the canonical family with matching pencil and
  // conic index ranges, k -> 2-k
  Mat3 rm;
  rm.a = {-1, 0, 2, -1, 1, 1, 0, 0, 1};
  Projectivity refl = Projectivity::from_matrix(rm);
  int done = 0;
  while (done < 20) {
    // transport the dual points by t: member lines move coordinate-wise
    Projectivity t = rng.projectivity();
    auto move_line = [&](const HLine& l) { return dual(t(dual(l))); };
    std::vector<TaggedLine> moved;
    for (const auto& tl : model.lines()) moved.push_back({move_line(tl.line), tl.tag});
    Arrangement arr = Arrangement::make(std::move(moved), move_line(model.boundary()));
    Chart chart = Chart::framed(move_line(HLine::of(0, 1, 0)), move_line(HLine::of(1, 0, 0)),
                                move_line(HLine::of(0, 0, 1)));
    auto tp = testing::transport_chart_matrix(t.matrix(), HLine::of(0, 1, 0),
                                              HLine::of(1, 0, 0), HLine::of(0, 0, 1));
    Window w = tp.window(Window(Rational(-2), Rational(2), Rational(-2), Rational(3)));
    Classification cls = classify(arr, chart, w);
    REQUIRE(cls.verdict == Verdict::affine_a2zero);
    Projectivity got = recognize_a2tilde0(arr, cls);
    // determined up to the family's reflection symmetry
    CHECK((got == t.inverse() || got == refl * t.inverse()));
    ++done;
  }
}

TEST_CASE("recognition refuses non-model inputs") {
  Arrangement arr = gen_affine_a2(-2, 3);
  Window w(Rational(-1, 2), Rational(3, 2), Rational(-1, 2), Rational(3, 2));
  Classification cls = classify(arr, Chart::boundary_at_infinity(), w);
  CHECK_THROWS_AS(recognize_a2tilde0(arr, cls), Error);
}

TEST_CASE("weight audit: tangent-pencil model exceeds three only at the apex") {
  Arrangement arr = gen_a2tilde0(-4, 8);
  Window w(Rational(-2), Rational(2), Rational(-2), Rational(3));
  Classification cls = classify(arr, Chart::boundary_at_infinity(), w);
  WeightAudit audit = bezout_weight_audit(arr, *cls.factor);
  CHECK(audit.ok);
  REQUIRE(audit.flagged.size() == 1);
  CHECK(audit.flagged[0].point == HPoint::of(0, 0, 1));
  CHECK(audit.flagged[0].note == "apex");
  CHECK(audit.flagged[0].weight == 13);  // one pencil line per k in range
}

TEST_CASE("weight audit: tangents to the circle stay at weight two") {
  std::vector<TaggedLine> lines;
  Conic circle = Conic::from_coeffs(1, 0, 0, 1, 0, -1);
  for (long t : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 5L}) {
    HPoint p = HPoint::of(Int(1 - t * t), Int(2 * t), Int(1 + t * t));
    lines.push_back({tangent_line(circle, p), "t=" + std::to_string(t)});
  }
  Arrangement arr = Arrangement::make(std::move(lines), HLine::of(0, 0, 1));
  WeightAudit audit = bezout_weight_audit(arr, dual_conic(circle));
  CHECK(audit.ok);
  CHECK(audit.max_weight == 2);
  CHECK(audit.flagged.empty());
}

TEST_CASE("weight audit: the grid's three direction points are allowed") {
  Arrangement arr = gen_affine_a2(-2, 3);
  Window w(Rational(-1, 2), Rational(3, 2), Rational(-1, 2), Rational(3, 2));
  Classification cls = classify(arr, Chart::boundary_at_infinity(), w);
  WeightAudit audit = bezout_weight_audit(arr, *cls.factor);
  CHECK(audit.ok);
  CHECK(audit.flagged.size() == 3);
}

TEST_SUITE_END();
