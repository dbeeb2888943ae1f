#include "titsarr/families.hpp"

#include <algorithm>
#include <map>

namespace titsarr {

namespace {

Triple chain_cross(const Triple& a, const Triple& b) {
  Triple r = detail::cross_raw(a, b);
  if (r[0] == 0 && r[1] == 0 && r[2] == 0)
    fail(Errc::degenerate_seed, "proportional pair in recurrence chain");
  return r;
}

long floor_div2(long m) { return (m >= 0 || m % 2 == 0) ? m / 2 : m / 2 - 1; }

}  // namespace

ConicPencilBasis conic_pencil_basis(const Conic& c, const HPoint& base) {
  HLine tangent = tangent_line(c, base);
  const HPoint units[3] = {HPoint::of(1, 0, 0), HPoint::of(0, 1, 0), HPoint::of(0, 0, 1)};
  for (const auto& q : units) {
    if (q == base || incident(q, tangent)) continue;
    return {tangent, cross(base, q)};
  }
  fail(Errc::invalid_argument, "no unit point off the tangent");  // unreachable
}

Rational conic_param(const ConicPencilBasis& basis, const HPoint& base, const HPoint& p) {
  if (p == base) fail(Errc::invalid_argument, "parameter of the base point is undefined");
  HLine line = cross(base, p);
  const Triple& a = basis.tangent.coords();
  const Triple& b = basis.second.coords();
  const Triple& l = line.coords();
  static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [i, j] : pairs) {
    Int det = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] -
              a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)];
    if (det == 0) continue;
    Rational alpha(l[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] -
                       l[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)],
                   det);
    Rational beta(a[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(j)] -
                      a[static_cast<std::size_t>(j)] * l[static_cast<std::size_t>(i)],
                  det);
    int k = 3 - i - j;
    if (alpha * Rational(a[static_cast<std::size_t>(k)]) +
            beta * Rational(b[static_cast<std::size_t>(k)]) !=
        Rational(l[static_cast<std::size_t>(k)]))
      fail(Errc::invalid_argument, "line is not in the pencil through the base");
    if (beta.is_zero())
      fail(Errc::invalid_argument, "point parameter collides with the tangent direction");
    return -alpha / beta;
  }
  fail(Errc::invalid_argument, "pencil basis is degenerate");  // unreachable
}

ConicOrder order_on_conic(const Conic& c, const HPoint& base, std::span<const HPoint> pts) {
  auto basis = conic_pencil_basis(c, base);
  std::vector<std::pair<Rational, HPoint>> tagged;
  tagged.reserve(pts.size());
  for (const auto& p : pts) {
    if (c.eval(p) != 0) fail(Errc::not_on_curve, p.str() + " is not on the conic");
    tagged.emplace_back(conic_param(basis, base, p), p);
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i + 1 < tagged.size(); ++i)
    if (tagged[i].first == tagged[i + 1].first)
      fail(Errc::invalid_argument, "duplicate point " + tagged[i].second.str());
  ConicOrder out;
  for (auto& [param, p] : tagged) {
    out.points.push_back(std::move(p));
    out.params.push_back(std::move(param));
  }
  return out;
}

SeedQuadruple SeedQuadruple::make_with_boundary(const HPoint& p0, const HPoint& p1,
                                                const HPoint& p2, const HPoint& p3,
                                                const HPoint& apex, const HPoint& boundary_dual) {
  const std::array<HPoint, 4> pts = {p0, p1, p2, p3};
  for (std::size_t i = 0; i < 4; ++i) {
    if (pts[i] == boundary_dual)
      fail(Errc::degenerate_seed, "seed point coincides with the boundary dual");
    for (std::size_t j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) fail(Errc::degenerate_seed, "repeated seed point " + pts[i].str());
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        if (collinear(pts[i], pts[j], pts[k]))
          fail(Errc::degenerate_seed, "three collinear seed points");

  Conic conic = [&] {
    try {
      return conic_through_5({boundary_dual, p0, p1, p2, p3});
    } catch (const Error&) {
      fail(Errc::degenerate_seed, "seed points do not determine a conic");
    }
  }();
  if (conic.matrix().det() == 0)
    fail(Errc::degenerate_seed, "seed conic is degenerate");
  if (tangent_line(conic, boundary_dual) != dual(apex))
    fail(Errc::degenerate_seed, "apex line is not tangent to the seed conic at the boundary dual");

  auto basis = conic_pencil_basis(conic, boundary_dual);
  Rational l0 = conic_param(basis, boundary_dual, p0);
  Rational l1 = conic_param(basis, boundary_dual, p1);
  Rational l2 = conic_param(basis, boundary_dual, p2);
  Rational l3 = conic_param(basis, boundary_dual, p3);
  Rational step = l1 - l0;
  if (step.is_zero() || l2 - l1 != step || l3 - l2 != step)
    fail(Errc::degenerate_seed, "seed points are not consecutive (uneven pencil spacing)");

  return SeedQuadruple(pts, apex, boundary_dual, std::move(conic));
}

SeedQuadruple SeedQuadruple::make(const HPoint& p0, const HPoint& p1, const HPoint& p2,
                                  const HPoint& p3, const HPoint& apex) {
  try {
    // Tangency point from the diagonal triangle: the polar of the diagonal
    // point of chords (p0 p3), (p1 p2) passes through the tangency point, and
    // the tangent line itself is the apex dual.
    HPoint d1 = cross(cross(p0, p1), cross(p2, p3));
    HPoint d2 = cross(cross(p0, p2), cross(p1, p3));
    HLine polar = cross(d1, d2);
    HPoint bd = cross(polar, dual(apex));
    return make_with_boundary(p0, p1, p2, p3, apex, bd);
  } catch (const Error& e) {
    if (e.code() == Errc::degenerate_seed) throw;
    fail(Errc::degenerate_seed, std::string("degenerate diagonal construction: ") + e.what());
  }
}

SeedQuadruple SeedQuadruple::canonical() {
  return make_with_boundary(a2t0::conic_point(0), a2t0::conic_point(1), a2t0::conic_point(2),
                            a2t0::conic_point(3), a2t0::apex(), a2t0::boundary_dual());
}

SeedQuadruple SeedQuadruple::advanced(const HPoint& p4) const {
  return SeedQuadruple({p_[1], p_[2], p_[3], p4}, apex_, boundary_dual_, conic_);
}

SeedQuadruple SeedQuadruple::retreated(const HPoint& pm1) const {
  return SeedQuadruple({pm1, p_[0], p_[1], p_[2]}, apex_, boundary_dual_, conic_);
}

SeedQuadruple SeedQuadruple::transformed(const Projectivity& t) const {
  // The seed points live in the plane the projectivity acts on; the apex is
  // the dual of the tangent line there, so it rides along via the line action.
  return make_with_boundary(t(p_[0]), t(p_[1]), t(p_[2]), t(p_[3]),
                            dual(t(dual(apex_))), t(boundary_dual_));
}

HPoint lemma5_forward(const SeedQuadruple& s) {
  const Triple& p0 = s.points()[0].coords();
  const Triple& p1 = s.points()[1].coords();
  const Triple& p2 = s.points()[2].coords();
  const Triple& p3 = s.points()[3].coords();
  const Triple& ap = s.apex().coords();
  Triple left = chain_cross(p0, chain_cross(ap, chain_cross(p1, p3)));
  Triple right = chain_cross(p1, chain_cross(ap, chain_cross(p2, p3)));
  HPoint p4 = HPoint::from_triple(chain_cross(left, right));
  if (s.conic().eval(p4) != 0)
    fail(Errc::degenerate_seed, "forward recurrence left the conic at " + p4.str());
  return p4;
}

HPoint lemma5_backward(const SeedQuadruple& s) {
  const Triple& p0 = s.points()[0].coords();
  const Triple& p1 = s.points()[1].coords();
  const Triple& p2 = s.points()[2].coords();
  const Triple& p3 = s.points()[3].coords();
  const Triple& ap = s.apex().coords();
  Triple left = chain_cross(p2, chain_cross(ap, chain_cross(p0, p1)));
  Triple right = chain_cross(p3, chain_cross(ap, chain_cross(p0, p2)));
  HPoint pm1 = HPoint::from_triple(chain_cross(left, right));
  if (s.conic().eval(pm1) != 0)
    fail(Errc::degenerate_seed, "backward recurrence left the conic at " + pm1.str());
  return pm1;
}

namespace a2t0 {

HPoint conic_point(const Rational& k) {
  return HPoint::of(k, k * (k - Rational(1)) * Rational(1, 2), Rational(1));
}

HPoint pencil_point(const Rational& k) {
  return HPoint::of(Rational(1), k * Rational(1, 2), Rational(0));
}

Conic dual_conic_form() { return Conic::from_coeffs(1, 0, -1, 0, -2, 0); }

HLine dual_line() { return HLine::of(0, 0, 1); }

HPoint boundary_dual() { return HPoint::of(0, 1, 0); }

HPoint apex() { return HPoint::of(0, 0, 1); }

HLine boundary() { return HLine::of(0, 1, 0); }

}  // namespace a2t0

Arrangement gen_a2tilde0(long k_min, long k_max) {
  if (k_min >= k_max) fail(Errc::invalid_argument, "k_min must be below k_max");
  std::vector<TaggedLine> lines;
  for (long k = k_min; k <= k_max; ++k)
    lines.push_back({dual(a2t0::conic_point(k)), "conic:k=" + std::to_string(k)});
  for (long k = k_min; k <= k_max; ++k)
    lines.push_back({dual(a2t0::pencil_point(k)), "pencil:k=" + std::to_string(k)});
  return Arrangement::make(std::move(lines), a2t0::boundary());
}

Arrangement gen_affine_a2(long k_min, long k_max) {
  if (k_min >= k_max) fail(Errc::invalid_argument, "k_min must be below k_max");
  std::vector<TaggedLine> lines;
  for (long k = k_min; k <= k_max; ++k)
    lines.push_back({HLine::of(1, 0, -k), "x:k=" + std::to_string(k)});
  for (long k = k_min; k <= k_max; ++k)
    lines.push_back({HLine::of(0, 1, -k), "y:k=" + std::to_string(k)});
  for (long k = k_min; k <= k_max; ++k)
    lines.push_back({HLine::of(1, 1, -k), "diag:k=" + std::to_string(k)});
  return Arrangement::make(std::move(lines), HLine::of(0, 0, 1));
}

Arrangement gen_near_pencil(int n) {
  if (n < 3) fail(Errc::insufficient_lines, "near pencil needs at least 3 lines");
  std::vector<TaggedLine> lines;
  lines.push_back({HLine::of(1, 0, 0), "pencil:0"});
  lines.push_back({HLine::of(0, 1, 0), "pencil:1"});
  for (int k = 1; k + 2 < n; ++k)
    lines.push_back({HLine::of(1, -k, 0), "pencil:" + std::to_string(k + 1)});
  lines.push_back({HLine::of(0, 0, 1), "cross"});

  Arrangement tentative = Arrangement::make(lines, HLine::of(1, 1, -1));
  auto verts = all_vertices(tentative);
  for (Int t = 1;; ++t) {
    HLine cand = HLine::of(1, 1, -t);
    if (tentative.index_of(cand) != Arrangement::npos) continue;
    bool hits = false;
    for (const auto& v : verts) hits = hits || incident(v.point, cand);
    if (!hits) return Arrangement::make(std::move(lines), cand);
  }
}

Arrangement gen_from_seed(const SeedQuadruple& seed, long k_min, long k_max) {
  if (k_min >= k_max) fail(Errc::invalid_argument, "k_min must be below k_max");
  // Pencil index m joins the chord through conic indices (i, m+1-i); extend
  // the recurrence far enough to cover all needed indices.
  long lo = std::min(k_min, 0L), hi = std::max(k_max, 3L);
  for (long m = k_min; m <= k_max; ++m) {
    long i = floor_div2(m);
    long j = m + 1 - i;
    lo = std::min(lo, i);
    hi = std::max(hi, j);
  }
  std::map<long, HPoint> pt;
  for (long t = 0; t < 4; ++t) pt.emplace(t, seed.points()[static_cast<std::size_t>(t)]);
  SeedQuadruple fwd = seed;
  for (long t = 4; t <= hi; ++t) {
    HPoint next = lemma5_forward(fwd);
    pt.emplace(t, next);
    fwd = fwd.advanced(next);
  }
  SeedQuadruple bwd = seed;
  for (long t = -1; t >= lo; --t) {
    HPoint prev = lemma5_backward(bwd);
    pt.emplace(t, prev);
    bwd = bwd.retreated(prev);
  }

  HLine apex_line = dual(seed.apex());
  std::vector<TaggedLine> lines;
  for (long k = k_min; k <= k_max; ++k)
    lines.push_back({dual(pt.at(k)), "conic:k=" + std::to_string(k)});
  for (long m = k_min; m <= k_max; ++m) {
    long i = floor_div2(m);
    long j = m + 1 - i;
    HPoint q = cross(cross(pt.at(i), pt.at(j)), apex_line);
    lines.push_back({dual(q), "pencil:k=" + std::to_string(m)});
  }
  return Arrangement::make(std::move(lines), dual(seed.boundary_dual()));
}

namespace {

// Integer solutions of D k^2 + B k + C <= 0 with D > 0. The truncated
// quotients land within two of the real roots, so a bounded scan suffices;
// the real interval may contain no integer at all.
std::optional<std::pair<Int, Int>> quad_nonpos_range(const Int& d, const Int& b, const Int& c) {
  Int disc = b * b - 4 * d * c;
  if (disc < 0) return std::nullopt;
  Int s = isqrt(disc);
  auto q = [&](const Int& k) { return d * k * k + b * k + c; };
  std::optional<Int> hi, lo;
  Int hi_seed = (-b + s) / (2 * d);
  for (Int k = hi_seed + 2; k >= hi_seed - 2; --k)
    if (q(k) <= 0) {
      hi = k;
      break;
    }
  Int lo_seed = (-b - s) / (2 * d);
  for (Int k = lo_seed - 2; k <= lo_seed + 2; ++k)
    if (q(k) <= 0) {
      lo = k;
      break;
    }
  if (!hi || !lo) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

Rational tangent_height(const Int& k, const Rational& u) {
  Rational kr(k);
  return -kr * u - kr * (kr - Rational(1)) * Rational(1, 2);
}

bool conic_line_meets(const Int& k, const Window& w) {
  Rational f1 = tangent_height(k, w.u_min);
  Rational f2 = tangent_height(k, w.u_max);
  Rational top = f1 < f2 ? f2 : f1;
  Rational bot = f1 < f2 ? f1 : f2;
  return top >= w.v_min && bot <= w.v_max;
}

}  // namespace

std::pair<long, long> window_complete_range(const Window& window) {
  std::vector<Int> marks;

  // Pencil lines u = -k/2 meeting the window, widened to the flanking pair.
  marks.push_back((Rational(-2) * window.u_max).floor());
  marks.push_back((Rational(-2) * window.u_min).ceil());

  // Tangent walls of the cells reaching into the window: integer neighbours
  // of the touch-point parameter 1/2 - u at both window ends.
  for (const Rational& u : {window.u_min, window.u_max}) {
    Rational r = Rational(1, 2) - u;
    marks.push_back(r.floor());
    marks.push_back(r.ceil());
  }

  // Tangent lines meeting the window: enumerate the candidates where the
  // height at a window end clears the bottom edge, then filter exactly.
  // f(u_end) >= v_min  <=>  k^2 + (2u - 1)k + 2 v_min <= 0.
  std::optional<std::pair<Int, Int>> hull;
  for (const Rational& u : {window.u_min, window.u_max}) {
    Rational bcoef = Rational(2) * u - Rational(1);
    Int scale = lcm(bcoef.den(), window.v_min.den());
    Int d = scale;
    Int b = bcoef.num() * (scale / bcoef.den());
    Int c = 2 * window.v_min.num() * (scale / window.v_min.den());
    auto range = quad_nonpos_range(d, b, c);
    if (!range) continue;
    if (!hull) hull = range;
    else hull = std::make_pair(std::min(hull->first, range->first),
                               std::max(hull->second, range->second));
  }
  if (hull) {
    for (Int k = hull->first; k <= hull->second; ++k)
      if (conic_line_meets(k, window)) marks.push_back(k);
  }

  Int lo = marks[0], hi = marks[0];
  for (const Int& m : marks) {
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  return {lo.convert_to<long>(), hi.convert_to<long>()};
}

}  // namespace titsarr
