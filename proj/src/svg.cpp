#include "titsarr/svg.hpp"

#include <algorithm>
#include <sstream>

#include "titsarr/classify.hpp"
#include "titsarr/cubic.hpp"

namespace titsarr {

namespace {

Int pow10(int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

std::string decimal(const Rational& r, int significant_digits) {
  if (significant_digits < 1) fail(Errc::invalid_argument, "need at least one digit");
  if (r.is_zero()) return "0";
  Int n = abs(r.num());
  const Int& d = r.den();

  // Exponent e with 10^e <= n/d < 10^(e+1).
  int e = 0;
  if (n >= d) {
    while (n >= d * pow10(e + 1)) ++e;
  } else {
    do --e; while (n * pow10(-e) < d);
  }

  int shift = significant_digits - 1 - e;
  Int num2 = n * pow10(std::max(0, shift));
  Int den2 = d * pow10(std::max(0, -shift));
  Int q = (2 * num2 + den2) / (2 * den2);  // round half up
  std::string digits = q.str();
  if (static_cast<int>(digits.size()) > significant_digits) {
    digits.pop_back();  // rounding carried into an extra digit; q ends in 0
    ++e;
  }

  std::string out;
  if (e >= significant_digits - 1) {
    out = digits + std::string(static_cast<std::size_t>(e - significant_digits + 1), '0');
  } else if (e >= 0) {
    out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
          digits.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return (r.sign() < 0 ? "-" : "") + out;
}

namespace {

using UV = std::pair<Rational, Rational>;

// Both intersection points of an affine line with the window frame, when the
// line crosses the window in a proper segment.
std::optional<std::pair<UV, UV>> clip_to_window(const AffineLine& al, const Window& w) {
  std::vector<UV> hits;
  auto push = [&](const Rational& u, const Rational& v) {
    if (!w.contains(u, v)) return;
    for (const auto& h : hits)
      if (h.first == u && h.second == v) return;
    hits.emplace_back(u, v);
  };
  const Rational m0(al.m[0]), m1(al.m[1]), m2(al.m[2]);
  if (!m2.is_zero()) {
    for (const Rational& u : {w.u_min, w.u_max}) push(u, -(m0 + m1 * u) / m2);
  }
  if (!m1.is_zero()) {
    for (const Rational& v : {w.v_min, w.v_max}) push(-(m0 + m2 * v) / m1, v);
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::make_pair(hits.front(), hits.back());
}

}  // namespace

namespace {

// Envelope conic plus the pencil apex (a rational point on it), when the
// dual points admit a conic-plus-line cubic.
std::optional<std::pair<Conic, HPoint>> envelope_with_apex(const Arrangement& arr) {
  std::vector<HPoint> duals;
  duals.reserve(arr.size());
  for (const auto& tl : arr.lines()) duals.push_back(dual(tl.line));
  if (duals.size() < 9) return std::nullopt;
  CubicFit fit = cubic_fit(duals);
  if (fit.status != CubicFit::Status::unique) return std::nullopt;
  FactorType f = cubic_factor_type(*fit.cubic, component_candidates(duals));
  if (f.kind != FactorType::Kind::conic_plus_line) return std::nullopt;
  return std::make_pair(dual_conic(*f.conic), dual(*f.line));
}

}  // namespace

std::optional<Conic> primal_envelope(const Arrangement& arr) {
  auto found = envelope_with_apex(arr);
  if (!found) return std::nullopt;
  return found->first;
}

std::string render_svg(const Arrangement& arr, const ChartFrame& frame, const Window& window,
                       const SvgStyle& style) {
  const Rational du = window.u_max - window.u_min;
  const Rational dv = window.v_max - window.v_min;
  const Rational scale = Rational(style.width_px) / du;
  const Rational height = dv * scale;
  auto sx = [&](const Rational& u) { return decimal((u - window.u_min) * scale, style.precision); };
  auto sy = [&](const Rational& v) { return decimal((window.v_max - v) * scale, style.precision); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
      << style.width_px << " " << decimal(height, style.precision) << "\">\n";
  out << "<path d=\"M 0 0 L " << style.width_px << " 0 L " << style.width_px << " "
      << decimal(height, style.precision) << " L 0 " << decimal(height, style.precision)
      << " Z\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  if (style.conic_overlay) {
    if (auto found = envelope_with_apex(arr)) {
      // Sample by pencil lines through the apex aimed at a deterministic
      // walk of the window frame.
      const auto& [envelope, apex] = *found;
      const int segments = 256;
      std::ostringstream path;
      bool pen_down = false;
      for (int i = 0; i <= segments; ++i) {
        // Perimeter walk: 4 edges, parameter in [0, 4).
        Rational t = Rational(4 * i, segments);
        int edge = std::min(3, t.floor().convert_to<int>());
        Rational frac = t - Rational(edge);
        Rational u, v;
        switch (edge) {
          case 0: u = window.u_min + frac * du; v = window.v_min; break;
          case 1: u = window.u_max; v = window.v_min + frac * dv; break;
          case 2: u = window.u_max - frac * du; v = window.v_max; break;
          default: u = window.u_min; v = window.v_max - frac * dv; break;
        }
        HPoint target = frame.point_from_coords(u, v);
        if (target == apex) { pen_down = false; continue; }
        HPoint s = second_intersection(envelope, cross(apex, target), apex);
        auto uv = frame.point_coords(s);
        if (!uv || !window.contains(uv->first, uv->second)) { pen_down = false; continue; }
        path << (pen_down ? " L " : " M ") << sx(uv->first) << " " << sy(uv->second);
        pen_down = true;
      }
      std::string d = path.str();
      if (!d.empty())
        out << "<path d=\"" << d.substr(1) << "\" fill=\"none\" stroke=\"#3366cc\""
            << " stroke-width=\"1\"/>\n";
    }
  }

  for (const AffineLine& al : to_chart(arr, frame)) {
    auto seg = clip_to_window(al, window);
    if (!seg) continue;
    out << "<line x1=\"" << sx(seg->first.first) << "\" y1=\"" << sy(seg->first.second)
        << "\" x2=\"" << sx(seg->second.first) << "\" y2=\"" << sy(seg->second.second)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }

  if (style.vertex_markers) {
    for (const Vertex& v : vertices_in_window(arr, frame, window)) {
      out << "<circle cx=\"" << sx(v.u) << "\" cy=\"" << sy(v.v) << "\" r=\""
          << decimal(Rational(3 * v.weight, 2), 3) << "\" fill=\"#cc2200\"/>\n";
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace titsarr
