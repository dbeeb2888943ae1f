#pragma once

#include <optional>
#include <string>

#include "titsarr/arrangement.hpp"
#include "titsarr/conic.hpp"

namespace titsarr {

// Exact rational-to-decimal conversion with the given number of significant
// digits (round half up, plain notation, trailing zeros stripped).
// Presentation-only: the library never computes with decimals.
std::string decimal(const Rational& r, int significant_digits = 12);

struct SvgStyle {
  int width_px = 800;
  bool vertex_markers = false;
  bool conic_overlay = false;
  int precision = 12;
};

// Deterministic SVG 1.1 subset (path, line, circle): one line per member
// clipped to the window in file order, optional weight-sized vertex markers,
// optional envelope-conic overlay sampled through the pencil apex.
std::string render_svg(const Arrangement& arr, const ChartFrame& frame, const Window& window,
                       const SvgStyle& style = {});

// The primal conic every conic-family line is tangent to, when the dual
// points admit a conic-plus-line cubic; nullopt otherwise.
std::optional<Conic> primal_envelope(const Arrangement& arr);

}  // namespace titsarr
