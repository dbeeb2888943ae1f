#include "titsarr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace titsarr {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kArrangementFormat = "tits-arrangement/1";
constexpr const char* kPointsFormat = "tits-points/1";

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Best-effort source location of a literal for semantic errors.
std::string locate(const std::string& text, const std::string& needle) {
  std::size_t at = text.find('"' + needle + '"');
  if (at == std::string::npos) at = text.find(needle);
  if (at == std::string::npos) return "";
  auto [l, c] = line_col(text, at);
  return " at " + std::to_string(l) + ":" + std::to_string(c);
}

[[noreturn]] void parse_fail(const std::string& text, const std::string& token,
                             const std::string& what) {
  fail(Errc::parse_error, what + locate(text, token));
}

void check_keys(const std::string& text, const json& obj,
                std::initializer_list<const char*> allowed, bool allow_unknown) {
  if (allow_unknown) return;
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) parse_fail(text, key, "unknown key '" + key + "' (strict mode)");
  }
}

Rational parse_coeff(const std::string& text, const json& j) {
  if (!j.is_string()) parse_fail(text, j.dump(), "coefficient must be a string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(text, j.get<std::string>(), e.what());
  }
}

std::array<Rational, 3> parse_triple(const std::string& text, const json& j,
                                     const std::string& what) {
  if (!j.is_array() || j.size() != 3)
    parse_fail(text, j.dump(), what + " must be an array of 3 strings");
  return {parse_coeff(text, j[0]), parse_coeff(text, j[1]), parse_coeff(text, j[2])};
}

json triple_json(const Triple& t) {
  return json::array({t[0].str(), t[1].str(), t[2].str()});
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    fail(Errc::parse_error,
         "malformed JSON at " + std::to_string(l) + ":" + std::to_string(c) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::parse_error, "cannot open " + path + " for writing");
  out << text;
}

}  // namespace

std::string to_json_text(const ArrangementFile& file) {
  json j;
  j["format"] = kArrangementFormat;
  j["boundary"] = triple_json(file.arrangement.boundary().coords());
  json lines = json::array();
  for (const auto& tl : file.arrangement.lines()) {
    json l;
    l["coeffs"] = triple_json(tl.line.coords());
    l["tag"] = tl.tag;
    lines.push_back(std::move(l));
  }
  j["lines"] = std::move(lines);
  if (file.fitted_cubic) {
    json c = json::array();
    for (const auto& x : file.fitted_cubic->coeffs()) c.push_back(x.str());
    j["fitted_cubic"] = std::move(c);
  }
  return j.dump(2) + "\n";
}

ArrangementFile from_json_text(const std::string& text, bool allow_unknown) {
  json j = parse_document(text);
  if (!j.is_object()) fail(Errc::parse_error, "document is not an object");
  check_keys(text, j, {"format", "boundary", "lines", "fitted_cubic"}, allow_unknown);
  if (!j.contains("format") || j["format"] != kArrangementFormat)
    fail(Errc::parse_error, std::string("format tag must be \"") + kArrangementFormat + "\"");
  if (!j.contains("boundary") || !j.contains("lines"))
    fail(Errc::parse_error, "missing 'boundary' or 'lines'");

  auto b = parse_triple(text, j["boundary"], "boundary");
  HLine boundary = [&] {
    try {
      return HLine::of(b[0], b[1], b[2]);
    } catch (const Error& e) {
      parse_fail(text, "boundary", e.what());
    }
  }();

  std::vector<TaggedLine> lines;
  if (!j["lines"].is_array()) parse_fail(text, "lines", "'lines' must be an array");
  for (const auto& lj : j["lines"]) {
    if (!lj.is_object()) parse_fail(text, lj.dump(), "line entry must be an object");
    check_keys(text, lj, {"coeffs", "tag"}, allow_unknown);
    if (!lj.contains("coeffs")) parse_fail(text, lj.dump(), "line entry lacks 'coeffs'");
    auto c = parse_triple(text, lj["coeffs"], "coeffs");
    HLine line = [&] {
      try {
        return HLine::of(c[0], c[1], c[2]);
      } catch (const Error& e) {
        parse_fail(text, lj["coeffs"].dump(), e.what());
      }
    }();
    std::string tag = lj.contains("tag") ? lj["tag"].get<std::string>() : "";
    for (const auto& prev : lines)
      if (prev.line == line)
        parse_fail(text, lj["coeffs"].dump(), "duplicate line " + line.str());
    if (line == boundary)
      parse_fail(text, lj["coeffs"].dump(), "boundary " + line.str() + " listed as a member line");
    lines.push_back({std::move(line), std::move(tag)});
  }

  ArrangementFile out{Arrangement::make(std::move(lines), std::move(boundary)), std::nullopt};
  if (j.contains("fitted_cubic")) {
    const json& cj = j["fitted_cubic"];
    if (!cj.is_array() || cj.size() != Cubic::kMonomials)
      parse_fail(text, "fitted_cubic", "'fitted_cubic' must be an array of 10 strings");
    std::array<Rational, Cubic::kMonomials> coeffs;
    for (std::size_t i = 0; i < Cubic::kMonomials; ++i) coeffs[i] = parse_coeff(text, cj[i]);
    try {
      out.fitted_cubic = Cubic::from_coeffs(coeffs);
    } catch (const Error& e) {
      parse_fail(text, "fitted_cubic", e.what());
    }
  }
  return out;
}

ArrangementFile load_arrangement(const std::string& path, bool allow_unknown) {
  try {
    return from_json_text(read_file(path), allow_unknown);
  } catch (const Error& e) {
    if (e.code() != Errc::parse_error) throw;
    fail(Errc::parse_error, path + ": " + e.what());
  }
}

void save_arrangement(const ArrangementFile& file, const std::string& path) {
  write_file(path, to_json_text(file));
}

PointsFile dual_points(const Arrangement& arr) {
  PointsFile out{{}, dual(arr.boundary())};
  for (const auto& tl : arr.lines()) out.points.emplace_back(dual(tl.line), tl.tag);
  return out;
}

std::string points_to_json_text(const PointsFile& file) {
  json j;
  j["format"] = kPointsFormat;
  j["boundary_dual"] = triple_json(file.boundary_dual.coords());
  json pts = json::array();
  for (const auto& [p, tag] : file.points) {
    json e;
    e["coords"] = triple_json(p.coords());
    e["tag"] = tag;
    pts.push_back(std::move(e));
  }
  j["points"] = std::move(pts);
  return j.dump(2) + "\n";
}

PointsFile points_from_json_text(const std::string& text, bool allow_unknown) {
  json j = parse_document(text);
  if (!j.is_object()) fail(Errc::parse_error, "document is not an object");
  check_keys(text, j, {"format", "boundary_dual", "points"}, allow_unknown);
  if (!j.contains("format") || j["format"] != kPointsFormat)
    fail(Errc::parse_error, std::string("format tag must be \"") + kPointsFormat + "\"");
  if (!j.contains("boundary_dual") || !j.contains("points"))
    fail(Errc::parse_error, "missing 'boundary_dual' or 'points'");
  auto b = parse_triple(text, j["boundary_dual"], "boundary_dual");
  PointsFile out{{}, HPoint::of(b[0], b[1], b[2])};
  if (!j["points"].is_array()) parse_fail(text, "points", "'points' must be an array");
  for (const auto& pj : j["points"]) {
    if (!pj.is_object()) parse_fail(text, pj.dump(), "point entry must be an object");
    check_keys(text, pj, {"coords", "tag"}, allow_unknown);
    if (!pj.contains("coords")) parse_fail(text, pj.dump(), "point entry lacks 'coords'");
    auto c = parse_triple(text, pj["coords"], "coords");
    std::string tag = pj.contains("tag") ? pj["tag"].get<std::string>() : "";
    out.points.emplace_back(HPoint::of(c[0], c[1], c[2]), std::move(tag));
  }
  return out;
}

PointsFile load_points(const std::string& path, bool allow_unknown) {
  try {
    return points_from_json_text(read_file(path), allow_unknown);
  } catch (const Error& e) {
    if (e.code() != Errc::parse_error) throw;
    fail(Errc::parse_error, path + ": " + e.what());
  }
}

void save_points(const PointsFile& file, const std::string& path) {
  write_file(path, points_to_json_text(file));
}

}  // namespace titsarr
