#pragma once

#include <optional>
#include <string>
#include <vector>

#include "titsarr/arrangement.hpp"
#include "titsarr/cubic.hpp"

namespace titsarr {

// On-disk arrangement: format tag "tits-arrangement/1", boundary and line
// coefficients as decimal-integer or "p/q" strings, optional fitted cubic in
// the fixed monomial order. Parse(emit(x)) is the identity on canonical data.
struct ArrangementFile {
  Arrangement arrangement;
  std::optional<Cubic> fitted_cubic;
};

std::string to_json_text(const ArrangementFile& file);
ArrangementFile from_json_text(const std::string& text, bool allow_unknown = false);

ArrangementFile load_arrangement(const std::string& path, bool allow_unknown = false);
void save_arrangement(const ArrangementFile& file, const std::string& path);

// Dual point set, format tag "tits-points/1".
struct PointsFile {
  std::vector<std::pair<HPoint, std::string>> points;  // point, tag
  HPoint boundary_dual;
};

PointsFile dual_points(const Arrangement& arr);

std::string points_to_json_text(const PointsFile& file);
PointsFile points_from_json_text(const std::string& text, bool allow_unknown = false);

PointsFile load_points(const std::string& path, bool allow_unknown = false);
void save_points(const PointsFile& file, const std::string& path);

}  // namespace titsarr
