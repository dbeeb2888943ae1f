#pragma once

#include <array>
#include <vector>

#include "titsarr/arrangement.hpp"

namespace titsarr {

struct WallRef {
  enum class Kind { line, window_edge };
  Kind kind = Kind::window_edge;
  std::size_t index = 0;  // arrangement line index, or window edge 0..3 (bottom,right,top,left)

  friend bool operator==(const WallRef& a, const WallRef& b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

// Convex cell of the induced subdivision of the window, in chart coordinates.
// Vertices are CCW and rotated so verts[0] is the lexicographically smallest;
// walls[i] supports the edge verts[i] -> verts[i+1].
struct Cell {
  std::vector<std::pair<Rational, Rational>> verts;
  std::vector<WallRef> walls;
  bool interior = false;  // no window edge on the boundary walk

  Rational area() const;
  std::vector<std::size_t> wall_lines() const;  // distinct line indices, sorted
};

// Iterative convex-polygon splitting: the window rectangle is split by every
// chart line in turn. Cells partition the window up to measure zero and come
// back in a deterministic order (lexicographic by vertex list).
std::vector<Cell> cells_in_window(const Arrangement& arr, const ChartFrame& frame,
                                  const Window& window);

struct SimplicialReport {
  std::size_t interior_cells = 0;
  std::size_t triangles = 0;
  std::size_t clipped_cells = 0;
  std::size_t strip_like = 0;  // clipped cells shaped like a cone with apex on the boundary
  std::vector<Cell> violations;

  bool ok() const { return violations.empty(); }
};

// Checks every interior cell for simpliciality: exactly three walls and three
// corners, each corner an arrangement vertex. Cells touching the window edge
// are counted but never judged; clipped cells whose two unbounded walls meet
// at a common point on both the chart line and the boundary are reported as
// strip-like.
SimplicialReport simplicial_report(const Arrangement& arr, const ChartFrame& frame,
                                   const Window& window);
SimplicialReport simplicial_report(const Arrangement& arr, const ChartFrame& frame,
                                   const std::vector<Cell>& cells);

struct CoxeterDiagram {
  std::array<std::size_t, 3> node_lines{};  // arrangement line indices of the three walls
  struct Edge {
    int a = 0, b = 0;  // node positions 0..2
    int weight = 0;    // the shared vertex weight (> 2)
  };
  std::vector<Edge> edges;
  bool irreducible = false;  // diagram connected
};

// Diagram of an interior triangle: nodes are the three supporting lines,
// edges appear at shared vertices of weight > 2 and carry that weight.
CoxeterDiagram coxeter_diagram(const Arrangement& arr, const ChartFrame& frame, const Cell& cell);

struct SphericalReport {
  std::size_t chambers = 0;
  std::size_t triangles = 0;
  std::vector<std::string> violations;  // one description per non-triangle chamber

  bool ok() const { return violations.empty(); }
};

// Complete projective simpliciality check for finite (spherical) fixtures:
// chooses a chart line through no vertex, enumerates the affine cells in a
// window containing every vertex, and glues the unbounded pieces across the
// chart line into projective chambers. A chamber is simplicial iff it has
// exactly three corners on three supporting lines.
SphericalReport spherical_simplicial_report(const Arrangement& arr);

}  // namespace titsarr
