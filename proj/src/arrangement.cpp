#include "titsarr/arrangement.hpp"

#include <algorithm>
#include <map>

namespace titsarr {

Arrangement Arrangement::make(std::vector<TaggedLine> lines, HLine boundary) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i].line == lines[j].line)
        fail(Errc::invalid_argument, "duplicate line " + lines[i].line.str());
    if (lines[i].line == boundary)
      fail(Errc::invalid_argument, "boundary " + boundary.str() + " is a member line");
  }
  return Arrangement(std::move(lines), std::move(boundary));
}

std::size_t Arrangement::index_of(const HLine& l) const {
  for (std::size_t i = 0; i < lines_.size(); ++i)
    if (lines_[i].line == l) return i;
  return npos;
}

ChartFrame::ChartFrame(HLine l0, HLine l1, HLine l2)
    : l0_(std::move(l0)), l1_(std::move(l1)), l2_(std::move(l2)) {
  for (int j = 0; j < 3; ++j) {
    n_.at(0, j) = l0_[static_cast<std::size_t>(j)];
    n_.at(1, j) = l1_[static_cast<std::size_t>(j)];
    n_.at(2, j) = l2_[static_cast<std::size_t>(j)];
  }
  if (n_.det() == 0) fail(Errc::degenerate_input, "chart forms are linearly dependent");
  n_adj_ = n_.adjugate();
}

ChartFrame ChartFrame::completed(const HLine& at_infinity) {
  std::size_t lead = 0;
  while (at_infinity[lead] == 0) ++lead;
  std::array<HLine, 3> units = {HLine::of(1, 0, 0), HLine::of(0, 1, 0), HLine::of(0, 0, 1)};
  std::vector<HLine> rest;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != lead) rest.push_back(units[i]);
  return ChartFrame(at_infinity, rest[0], rest[1]);
}

ChartFrame ChartFrame::framed(const HLine& l0, const HLine& l1, const HLine& l2) {
  return ChartFrame(l0, l1, l2);
}

std::optional<std::pair<Rational, Rational>> ChartFrame::point_coords(const HPoint& p) const {
  Int d0 = detail::dot(l0_.coords(), p.coords());
  if (d0 == 0) return std::nullopt;
  Int d1 = detail::dot(l1_.coords(), p.coords());
  Int d2 = detail::dot(l2_.coords(), p.coords());
  return std::make_pair(Rational(d1, d0), Rational(d2, d0));
}

HPoint ChartFrame::point_from_coords(const Rational& u, const Rational& v) const {
  Int w = lcm(u.den(), v.den());
  Triple rhs{w, u.num() * (w / u.den()), v.num() * (w / v.den())};
  return HPoint::from_triple(n_adj_.mul(rhs));
}

AffineLine ChartFrame::line_in_chart(const HLine& l, std::size_t source) const {
  if (l == l0_)
    fail(Errc::chart_collision, "line " + l.str() + " is the chart line at infinity");
  AffineLine out;
  out.m = detail::reduced(n_adj_.transpose().mul(l.coords()));
  out.source = source;
  return out;
}

Chart Chart::coordinate(int axis) {
  if (axis < 0 || axis > 2) fail(Errc::invalid_argument, "coordinate chart axis must be 0..2");
  Chart c(Kind::coordinate);
  Triple t{0, 0, 0};
  t[static_cast<std::size_t>(axis)] = 1;
  c.forms_.push_back(HLine::from_triple(t));
  return c;
}

Chart Chart::custom(HLine l) {
  Chart c(Kind::custom);
  c.forms_.push_back(std::move(l));
  return c;
}

Chart Chart::framed(HLine l0, HLine l1, HLine l2) {
  Chart c(Kind::framed);
  c.forms_ = {std::move(l0), std::move(l1), std::move(l2)};
  return c;
}

ChartFrame Chart::resolve(const Arrangement& arr) const {
  ChartFrame frame = [&] {
    switch (kind_) {
      case Kind::boundary_at_infinity:
        return ChartFrame::completed(arr.boundary());
      case Kind::coordinate:
      case Kind::custom:
        return ChartFrame::completed(forms_[0]);
      case Kind::framed:
        return ChartFrame::framed(forms_[0], forms_[1], forms_[2]);
    }
    fail(Errc::invalid_argument, "unknown chart kind");
  }();
  if (arr.index_of(frame.at_infinity()) != Arrangement::npos)
    fail(Errc::chart_collision,
         "chart line " + frame.at_infinity().str() + " is an arrangement line");
  return frame;
}

Window::Window(Rational u0, Rational u1, Rational v0, Rational v1)
    : u_min(std::move(u0)), u_max(std::move(u1)), v_min(std::move(v0)), v_max(std::move(v1)) {
  if (!(u_min < u_max) || !(v_min < v_max))
    fail(Errc::invalid_argument, "window must have positive extent");
}

std::vector<AffineLine> to_chart(const Arrangement& arr, const ChartFrame& frame) {
  std::vector<AffineLine> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(frame.line_in_chart(arr.lines()[i].line, i));
  return out;
}

std::vector<ProjectiveVertex> all_vertices(const Arrangement& arr) {
  std::map<HPoint, ProjectiveVertex> seen;
  const auto& lines = arr.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Triple raw = detail::cross_raw(lines[i].line.coords(), lines[j].line.coords());
      if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0) continue;  // cannot happen for distinct lines
      HPoint p = HPoint::from_triple(raw);
      if (seen.contains(p)) continue;
      ProjectiveVertex v{p, 0, {}};
      for (std::size_t k = 0; k < lines.size(); ++k)
        if (incident(p, lines[k].line)) v.lines.push_back(k);
      v.weight = static_cast<int>(v.lines.size());
      seen.emplace(p, std::move(v));
    }
  }
  std::vector<ProjectiveVertex> out;
  out.reserve(seen.size());
  for (auto& [_, v] : seen) out.push_back(std::move(v));
  return out;
}

std::vector<Vertex> vertices_in_window(const Arrangement& arr, const ChartFrame& frame,
                                       const Window& window) {
  std::vector<Vertex> out;
  for (auto& pv : all_vertices(arr)) {
    auto uv = frame.point_coords(pv.point);
    if (!uv) continue;
    if (!window.contains(uv->first, uv->second)) continue;
    out.push_back(Vertex{pv.point, pv.weight, incident(pv.point, arr.boundary()), uv->first,
                         uv->second, std::move(pv.lines)});
  }
  std::sort(out.begin(), out.end(), [](const Vertex& a, const Vertex& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return out;
}

BoundaryCheck boundary_vertex_check(const Arrangement& arr) {
  BoundaryCheck out;
  for (const auto& v : all_vertices(arr)) {
    if (!incident(v.point, arr.boundary())) continue;
    ++out.count;
    out.vertices.emplace_back(v.point, v.weight);
  }
  return out;
}

}  // namespace titsarr
