#include "titsarr/cli.hpp"

#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "titsarr/cells.hpp"
#include "titsarr/classify.hpp"
#include "titsarr/families.hpp"
#include "titsarr/io.hpp"
#include "titsarr/svg.hpp"

namespace titsarr {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

HPoint parse_point(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() != 3)
    fail(Errc::invalid_argument, "point must be x:y:z, got '" + spec + "'");
  return HPoint::of(Rational::parse(parts[0]), Rational::parse(parts[1]),
                    Rational::parse(parts[2]));
}

std::pair<long, long> parse_range(const std::string& spec) {
  std::size_t at = spec.find("..");
  if (at == std::string::npos)
    fail(Errc::invalid_argument, "range must be K_MIN..K_MAX, got '" + spec + "'");
  try {
    long lo = std::stol(spec.substr(0, at));
    long hi = std::stol(spec.substr(at + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    fail(Errc::invalid_argument, "range must be K_MIN..K_MAX, got '" + spec + "'");
  }
}

json triple_json(const Triple& t) {
  return json::array({t[0].str(), t[1].str(), t[2].str()});
}

int cmd_gen(const std::string& family, const std::string& range_spec,
            const std::string& seed_spec, const std::string& out_path, std::ostream& out) {
  auto [lo, hi] = parse_range(range_spec);
  Arrangement arr = [&] {
    if (family == "near-pencil") return gen_near_pencil(static_cast<int>(hi - lo + 1));
    if (family == "a2tilde") return gen_affine_a2(lo, hi);
    if (family == "a2tilde0") return gen_a2tilde0(lo, hi);
    if (family == "lemma5") {
      if (seed_spec.empty()) fail(Errc::invalid_argument, "--seed required for family lemma5");
      auto parts = split(seed_spec, ',');
      if (parts.size() != 5)
        fail(Errc::invalid_argument, "--seed needs p0,p1,p2,p3,apex");
      SeedQuadruple seed =
          SeedQuadruple::make(parse_point(parts[0]), parse_point(parts[1]),
                              parse_point(parts[2]), parse_point(parts[3]),
                              parse_point(parts[4]));
      return gen_from_seed(seed, lo, hi);
    }
    fail(Errc::invalid_argument, "unknown family '" + family + "'");
  }();
  save_arrangement({arr, std::nullopt}, out_path);
  out << "wrote " << arr.size() << " lines to " << out_path << "\n";
  return 0;
}

json report_json(const SimplicialReport& rep, const std::vector<Vertex>& verts) {
  json j;
  j["interior_cells"] = rep.interior_cells;
  j["triangles"] = rep.triangles;
  j["clipped_cells"] = rep.clipped_cells;
  j["strip_like"] = rep.strip_like;
  json viol = json::array();
  for (const auto& c : rep.violations) {
    json vj = json::array();
    for (const auto& [u, v] : c.verts) vj.push_back(json::array({u.str(), v.str()}));
    viol.push_back(std::move(vj));
  }
  j["violations"] = std::move(viol);
  j["vertex_count"] = verts.size();
  json weights = json::object();
  for (const auto& v : verts) {
    std::string key = std::to_string(v.weight);
    weights[key] = (weights.contains(key) ? weights[key].get<int>() : 0) + 1;
  }
  j["weights"] = std::move(weights);
  return j;
}

int cmd_verify(const Arrangement& arr, const Chart& chart, const Window& window, bool as_json,
               std::ostream& out) {
  ChartFrame frame = chart.resolve(arr);
  auto verts = vertices_in_window(arr, frame, window);
  SimplicialReport rep = simplicial_report(arr, frame, window);
  if (as_json) {
    out << report_json(rep, verts).dump(2) << "\n";
  } else {
    out << "interior cells: " << rep.interior_cells << "\n";
    out << "triangles: " << rep.triangles << "\n";
    out << "clipped cells: " << rep.clipped_cells << "\n";
    out << "strip-like clipped cells: " << rep.strip_like << "\n";
    out << "vertices in window: " << verts.size() << "\n";
    out << "violations: " << rep.violations.size() << "\n";
    for (const auto& c : rep.violations) {
      out << "  cell:";
      for (const auto& [u, v] : c.verts) out << " (" << u << "," << v << ")";
      out << "\n";
    }
  }
  return rep.violations.empty() ? 0 : 2;
}

int cmd_classify(const Arrangement& arr, const Chart& chart, const Window& window, bool as_json,
                 std::ostream& out) {
  Classification cls = classify(arr, chart, window);
  if (as_json) {
    json j;
    j["verdict"] = verdict_name(cls.verdict);
    j["reason"] = cls.verdict == Verdict::unsupported ? json(reason_name(cls.reason)) : json();
    if (cls.cubic) {
      json c = json::array();
      for (const auto& x : cls.cubic->coeffs()) c.push_back(x.str());
      j["cubic"] = std::move(c);
    } else {
      j["cubic"] = json();
    }
    j["factor"] = cls.factor ? json(factor_kind_name(cls.factor->kind)) : json();
    j["tangency"] = cls.tangency_point ? json(triple_json(cls.tangency_point->coords())) : json();
    j["concurrency"] =
        cls.concurrency_point ? json(triple_json(cls.concurrency_point->coords())) : json();
    j["reducible_diagram"] = cls.reducible_diagram;
    j["detail"] = cls.detail;
    out << j.dump(2) << "\n";
  } else {
    out << "verdict: " << verdict_name(cls.verdict) << "\n";
    if (cls.verdict == Verdict::unsupported) out << "reason: " << reason_name(cls.reason) << "\n";
    if (cls.cubic) out << "cubic: " << cls.cubic->str() << "\n";
    if (cls.factor) out << "factor: " << factor_kind_name(cls.factor->kind) << "\n";
    if (cls.tangency_point) out << "tangency: " << cls.tangency_point->str() << "\n";
    if (cls.concurrency_point) out << "concurrency: " << cls.concurrency_point->str() << "\n";
    if (!cls.detail.empty()) out << "detail: " << cls.detail << "\n";
  }
  return 0;
}

}  // namespace

Chart parse_chart(const std::string& spec) {
  if (spec == "boundary-infinity") return Chart::boundary_at_infinity();
  if (spec == "z1") return Chart::coordinate(2);
  if (spec == "y1") return Chart::coordinate(1);
  if (spec.rfind("custom:", 0) == 0) {
    auto parts = split(spec.substr(7), ',');
    if (parts.size() != 3)
      fail(Errc::invalid_argument, "custom chart must be custom:a,b,c");
    return Chart::custom(HLine::of(Rational::parse(parts[0]), Rational::parse(parts[1]),
                                   Rational::parse(parts[2])));
  }
  fail(Errc::invalid_argument, "unknown chart '" + spec + "'");
}

Window parse_window(const std::string& spec) {
  auto parts = split(spec, ',');
  if (parts.size() != 4)
    fail(Errc::invalid_argument, "window must be u0,w0,u1,w1");
  return Window(Rational::parse(parts[0]), Rational::parse(parts[2]),
                Rational::parse(parts[1]), Rational::parse(parts[3]));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact rank-three line arrangements on cubic loci"};
  app.require_subcommand(1);

  std::string family, range_spec, seed_spec, out_path;
  auto* gen = app.add_subcommand("gen", "generate an arrangement family");
  gen->add_option("--family", family, "near-pencil|a2tilde|a2tilde0|lemma5")->required();
  gen->add_option("--range", range_spec, "K_MIN..K_MAX")->required();
  gen->add_option("--seed", seed_spec, "p0,p1,p2,p3,apex (lemma5 only)");
  gen->add_option("--out", out_path, "output file")->required();

  std::string in_path, chart_spec, window_spec, svg_path;
  bool as_json = false, vertices = false, conic_overlay = false, allow_unknown = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", in_path, "arrangement file")->required();
    cmd->add_option("--chart", chart_spec, "boundary-infinity|z1|y1|custom:a,b,c")->required();
    cmd->add_option("--window", window_spec, "u0,w0,u1,w1")->required();
    cmd->add_flag("--allow-unknown", allow_unknown, "accept unknown file keys");
  };
  auto* verify = app.add_subcommand("verify", "windowed simpliciality report");
  add_common(verify);
  verify->add_flag("--json", as_json, "machine-readable output");
  auto* classify_cmd = app.add_subcommand("classify", "decide the arrangement class");
  add_common(classify_cmd);
  classify_cmd->add_flag("--json", as_json, "machine-readable output");
  auto* render = app.add_subcommand("render", "render the window to SVG");
  add_common(render);
  render->add_option("--svg", svg_path, "output SVG file")->required();
  render->add_flag("--vertices", vertices, "draw vertex markers sized by weight");
  render->add_flag("--conic-overlay", conic_overlay, "draw the envelope conic");

  std::string dual_out;
  auto* dual_cmd = app.add_subcommand("dual", "emit the dual point set");
  dual_cmd->add_option("file", in_path, "arrangement file")->required();
  dual_cmd->add_option("--out", dual_out, "output points file")->required();
  dual_cmd->add_flag("--allow-unknown", allow_unknown, "accept unknown file keys");

  std::vector<const char*> argv;
  argv.push_back("titsarr");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) return cmd_gen(family, range_spec, seed_spec, out_path, out);
    ArrangementFile file = load_arrangement(in_path, allow_unknown);
    if (dual_cmd->parsed()) {
      save_points(dual_points(file.arrangement), dual_out);
      out << "wrote " << file.arrangement.size() << " points to " << dual_out << "\n";
      return 0;
    }
    Chart chart = parse_chart(chart_spec);
    Window window = parse_window(window_spec);
    if (verify->parsed()) return cmd_verify(file.arrangement, chart, window, as_json, out);
    if (classify_cmd->parsed())
      return cmd_classify(file.arrangement, chart, window, as_json, out);
    if (render->parsed()) {
      SvgStyle style;
      style.vertex_markers = vertices;
      style.conic_overlay = conic_overlay;
      ChartFrame frame = chart.resolve(file.arrangement);
      std::ofstream svg(svg_path, std::ios::binary | std::ios::trunc);
      if (!svg) fail(Errc::invalid_argument, "cannot open " + svg_path + " for writing");
      svg << render_svg(file.arrangement, frame, window, style);
      out << "wrote " << svg_path << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::parse_error ? 3 : 1;
  }
  return 1;
}

}  // namespace titsarr
