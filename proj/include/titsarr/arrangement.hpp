#pragma once

#include <optional>
#include <string>
#include <vector>

#include "titsarr/projective.hpp"

namespace titsarr {

struct TaggedLine {
  HLine line;
  std::string tag;
};

// Finite list of distinct projective lines together with the designated
// boundary line. The boundary is never a member: the member lines all meet
// the open cone, the boundary does not.
class Arrangement {
 public:
  static Arrangement make(std::vector<TaggedLine> lines, HLine boundary);

  const std::vector<TaggedLine>& lines() const { return lines_; }
  const HLine& boundary() const { return boundary_; }
  std::size_t size() const { return lines_.size(); }

  // Index of a canonical line, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const HLine& l) const;

 private:
  Arrangement(std::vector<TaggedLine> lines, HLine boundary)
      : lines_(std::move(lines)), boundary_(std::move(boundary)) {}
  std::vector<TaggedLine> lines_;
  HLine boundary_;
};

// Affine trace of a projective line in a chart: m0 + m1 u + m2 v = 0 with a
// canonical primitive integer triple.
struct AffineLine {
  Triple m;
  std::size_t source = 0;  // index into the arrangement

  bool vertical() const { return m[2] == 0; }
  Rational slope() const { return Rational(-m[1], m[2]); }
  Rational intercept() const { return Rational(-m[0], m[2]); }
  Rational u0() const { return Rational(-m[0], m[1]); }  // vertical only

  Rational eval(const Rational& u, const Rational& v) const {
    return Rational(m[0]) + Rational(m[1]) * u + Rational(m[2]) * v;
  }
};

// A resolved chart: a line at infinity plus two more forms completing it to a
// basis. Affine coordinates of P are (l1(P)/l0(P), l2(P)/l0(P)).
class ChartFrame {
 public:
  // Deterministic completion: the two coordinate forms are the unit forms
  // whose index differs from the first nonzero index of the chart line.
  static ChartFrame completed(const HLine& at_infinity);
  static ChartFrame framed(const HLine& l0, const HLine& l1, const HLine& l2);

  const HLine& at_infinity() const { return l0_; }

  std::optional<std::pair<Rational, Rational>> point_coords(const HPoint& p) const;
  HPoint point_from_coords(const Rational& u, const Rational& v) const;

  // Throws ChartCollision when the line is the chart line.
  AffineLine line_in_chart(const HLine& l, std::size_t source = 0) const;

 private:
  ChartFrame(HLine l0, HLine l1, HLine l2);
  HLine l0_, l1_, l2_;
  Mat3 n_;      // rows l0, l1, l2
  Mat3 n_adj_;  // adjugate of n_
};

// Chart selector; resolution validates that no arrangement line coincides
// with the chart line.
class Chart {
 public:
  enum class Kind { boundary_at_infinity, coordinate, custom, framed };

  static Chart boundary_at_infinity() { return Chart(Kind::boundary_at_infinity); }
  static Chart coordinate(int axis);
  static Chart custom(HLine l);
  static Chart framed(HLine l0, HLine l1, HLine l2);

  Kind kind() const { return kind_; }
  ChartFrame resolve(const Arrangement& arr) const;

 private:
  explicit Chart(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<HLine> forms_;
};

struct Window {
  Rational u_min, u_max, v_min, v_max;

  Window(Rational u0, Rational u1, Rational v0, Rational v1);

  bool contains(const Rational& u, const Rational& v) const {
    return u_min <= u && u <= u_max && v_min <= v && v <= v_max;
  }
  Rational area() const { return (u_max - u_min) * (v_max - v_min); }
};

struct Vertex {
  HPoint point;
  int weight = 0;      // number of arrangement lines through the point
  bool on_boundary = false;
  Rational u, v;       // chart coordinates
  std::vector<std::size_t> lines;  // indices of incident arrangement lines
};

// Affine traces of all member lines; throws ChartCollision if any member is
// the chart line.
std::vector<AffineLine> to_chart(const Arrangement& arr, const ChartFrame& frame);

// All pairwise intersection points inside the closed window, deduplicated,
// with weights counted over all lines of the arrangement. Sorted by chart
// coordinates.
std::vector<Vertex> vertices_in_window(const Arrangement& arr, const ChartFrame& frame,
                                       const Window& window);

// Projective vertex set (no chart): deduplicated intersection points with
// weights and incident-line indices, sorted by canonical coordinates.
struct ProjectiveVertex {
  HPoint point;
  int weight = 0;
  std::vector<std::size_t> lines;
};
std::vector<ProjectiveVertex> all_vertices(const Arrangement& arr);

// Number of distinct vertices on the boundary line, with diagnostics.
struct BoundaryCheck {
  std::size_t count = 0;
  std::vector<std::pair<HPoint, int>> vertices;  // point, weight
};
BoundaryCheck boundary_vertex_check(const Arrangement& arr);

}  // namespace titsarr
