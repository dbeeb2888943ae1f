#include "titsarr/cells.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>

namespace titsarr {

namespace {

using UV = std::pair<Rational, Rational>;

struct Poly {
  std::vector<UV> v;
  std::vector<WallRef> lab;  // lab[i] labels edge v[i] -> v[i+1]
};

Rational shoelace2(const std::vector<UV>& v) {
  Rational s(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const UV& a = v[i];
    const UV& b = v[(i + 1) % v.size()];
    s += a.first * b.second - b.first * a.second;
  }
  return s;
}

std::optional<Poly> finish_chain(std::vector<UV> verts, std::vector<WallRef> labs) {
  // Collapse consecutive duplicates (the outgoing label of a repeated vertex
  // is the later one).
  Poly p;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!p.v.empty() && p.v.back() == verts[i]) {
      p.lab.back() = labs[i];
      continue;
    }
    p.v.push_back(std::move(verts[i]));
    p.lab.push_back(labs[i]);
  }
  while (p.v.size() > 1 && p.v.front() == p.v.back()) {
    p.v.pop_back();
    p.lab.pop_back();
  }
  if (p.v.size() < 3) return std::nullopt;
  if (shoelace2(p.v).sign() <= 0) return std::nullopt;
  return p;
}

// Splits a CCW convex polygon by the line f = 0; returns the f >= 0 and
// f <= 0 parts. Exactness makes the side predicates reliable; convexity
// guarantees the chains are single runs.
std::pair<std::optional<Poly>, std::optional<Poly>> split(const Poly& poly,
                                                          const AffineLine& line,
                                                          const WallRef& cut) {
  const std::size_t n = poly.v.size();
  std::vector<int> side(n);
  bool has_pos = false, has_neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    side[i] = line.eval(poly.v[i].first, poly.v[i].second).sign();
    has_pos = has_pos || side[i] > 0;
    has_neg = has_neg || side[i] < 0;
  }
  if (!has_neg) return {poly, std::nullopt};
  if (!has_pos) return {std::nullopt, poly};

  auto crossing = [&](std::size_t i, std::size_t j) {
    Rational fa = line.eval(poly.v[i].first, poly.v[i].second);
    Rational fb = line.eval(poly.v[j].first, poly.v[j].second);
    Rational t = fa / (fa - fb);
    return UV{poly.v[i].first + t * (poly.v[j].first - poly.v[i].first),
              poly.v[i].second + t * (poly.v[j].second - poly.v[i].second)};
  };

  std::vector<UV> pv, nv;
  std::vector<WallRef> pl, nl;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const UV& a = poly.v[i];
    const WallRef& la = poly.lab[i];
    const int sa = side[i], sb = side[j];
    // chain on the f >= 0 side
    if (sa > 0) {
      pv.push_back(a);
      pl.push_back(la);
      if (sb < 0) {
        pv.push_back(crossing(i, j));
        pl.push_back(cut);
      }
    } else if (sa == 0) {
      pv.push_back(a);
      pl.push_back(sb < 0 ? cut : la);
    } else if (sb > 0) {
      pv.push_back(crossing(i, j));
      pl.push_back(la);
    }
    // chain on the f <= 0 side
    if (sa < 0) {
      nv.push_back(a);
      nl.push_back(la);
      if (sb > 0) {
        nv.push_back(crossing(i, j));
        nl.push_back(cut);
      }
    } else if (sa == 0) {
      nv.push_back(a);
      nl.push_back(sb > 0 ? cut : la);
    } else if (sb < 0) {
      nv.push_back(crossing(i, j));
      nl.push_back(la);
    }
  }
  return {finish_chain(std::move(pv), std::move(pl)), finish_chain(std::move(nv), std::move(nl))};
}

Cell to_cell(Poly p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.v.size(); ++i)
    if (p.v[i] < p.v[best]) best = i;
  Cell c;
  const std::size_t n = p.v.size();
  for (std::size_t k = 0; k < n; ++k) {
    c.verts.push_back(std::move(p.v[(best + k) % n]));
    c.walls.push_back(p.lab[(best + k) % n]);
  }
  c.interior = true;
  for (const auto& w : c.walls)
    if (w.kind == WallRef::Kind::window_edge) c.interior = false;
  return c;
}

}  // namespace

Rational Cell::area() const { return shoelace2(verts) * Rational(1, 2); }

std::vector<std::size_t> Cell::wall_lines() const {
  std::vector<std::size_t> out;
  for (const auto& w : walls)
    if (w.kind == WallRef::Kind::line) out.push_back(w.index);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cell> cells_in_window(const Arrangement& arr, const ChartFrame& frame,
                                  const Window& window) {
  Poly rect;
  rect.v = {{window.u_min, window.v_min},
            {window.u_max, window.v_min},
            {window.u_max, window.v_max},
            {window.u_min, window.v_max}};
  rect.lab = {{WallRef::Kind::window_edge, 0},
              {WallRef::Kind::window_edge, 1},
              {WallRef::Kind::window_edge, 2},
              {WallRef::Kind::window_edge, 3}};

  std::vector<Poly> polys{rect};
  for (const AffineLine& al : to_chart(arr, frame)) {
    WallRef cut{WallRef::Kind::line, al.source};
    std::vector<Poly> next;
    next.reserve(polys.size() + 8);
    for (const Poly& p : polys) {
      auto [pos, neg] = split(p, al, cut);
      if (pos) next.push_back(std::move(*pos));
      if (neg) next.push_back(std::move(*neg));
    }
    polys = std::move(next);
  }

  std::vector<Cell> cells;
  cells.reserve(polys.size());
  for (auto& p : polys) cells.push_back(to_cell(std::move(p)));
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return a.verts < b.verts; });
  return cells;
}

SimplicialReport simplicial_report(const Arrangement& arr, const ChartFrame& frame,
                                   const Window& window) {
  return simplicial_report(arr, frame, cells_in_window(arr, frame, window));
}

SimplicialReport simplicial_report(const Arrangement& arr, const ChartFrame& frame,
                                   const std::vector<Cell>& cells) {
  SimplicialReport rep;
  for (const Cell& c : cells) {
    if (!c.interior) {
      ++rep.clipped_cells;
      // Strip rule: exactly three supporting lines, two of which meet at a
      // common point lying on both the chart line and the boundary.
      auto wl = c.wall_lines();
      if (wl.size() == 3) {
        bool strip = false;
        for (std::size_t i = 0; i < 3 && !strip; ++i) {
          for (std::size_t j = i + 1; j < 3 && !strip; ++j) {
            Triple raw = detail::cross_raw(arr.lines()[wl[i]].line.coords(),
                                           arr.lines()[wl[j]].line.coords());
            if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0) continue;
            HPoint apex = HPoint::from_triple(raw);
            strip = incident(apex, frame.at_infinity()) && incident(apex, arr.boundary());
          }
        }
        if (strip) ++rep.strip_like;
      }
      continue;
    }
    ++rep.interior_cells;
    bool good = c.verts.size() == 3 && c.wall_lines().size() == 3;
    if (good) {
      // Every corner must be an arrangement vertex (two or more lines meet).
      for (std::size_t k = 0; k < 3 && good; ++k) {
        HPoint p = frame.point_from_coords(c.verts[k].first, c.verts[k].second);
        int w = 0;
        for (const auto& tl : arr.lines())
          if (incident(p, tl.line)) ++w;
        good = w >= 2;
      }
    }
    if (good) ++rep.triangles;
    else rep.violations.push_back(c);
  }
  return rep;
}

CoxeterDiagram coxeter_diagram(const Arrangement& arr, const ChartFrame& frame, const Cell& cell) {
  if (!cell.interior || cell.verts.size() != 3)
    fail(Errc::not_simplicial, "Coxeter diagram requires an interior triangle");
  for (const auto& w : cell.walls)
    if (w.kind != WallRef::Kind::line)
      fail(Errc::not_simplicial, "triangle wall is a window edge");

  CoxeterDiagram d;
  for (int k = 0; k < 3; ++k) d.node_lines[static_cast<std::size_t>(k)] = cell.walls[static_cast<std::size_t>(k)].index;

  // Corner k joins the incoming wall (k+2 mod 3) and the outgoing wall k;
  // the three corners contribute the three distinct node pairs.
  for (int k = 0; k < 3; ++k) {
    HPoint p = frame.point_from_coords(cell.verts[static_cast<std::size_t>(k)].first,
                                       cell.verts[static_cast<std::size_t>(k)].second);
    int weight = 0;
    for (const auto& tl : arr.lines())
      if (incident(p, tl.line)) ++weight;
    if (weight > 2) d.edges.push_back({(k + 2) % 3, k, weight});
  }
  // On three nodes any two distinct edges connect the graph; one edge leaves
  // an isolated node.
  d.irreducible = d.edges.size() >= 2;
  return d;
}

namespace {

// A small-coefficient line that is neither a member nor incident with any
// vertex; every vertex is then finite in its chart.
HLine vertex_avoiding_chart(const Arrangement& arr,
                            const std::vector<ProjectiveVertex>& verts) {
  static constexpr long dirs[6][2] = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}};
  for (auto [a, b] : dirs) {
    for (long t = 1; t <= 200; ++t) {
      HLine cand = HLine::of(a, b, -t);
      if (arr.index_of(cand) != Arrangement::npos) continue;
      bool hits = false;
      for (const auto& v : verts) hits = hits || incident(v.point, cand);
      if (!hits) return cand;
    }
  }
  fail(Errc::invalid_argument, "no vertex-avoiding chart line found");
}

}  // namespace

SphericalReport spherical_simplicial_report(const Arrangement& arr) {
  auto pverts = all_vertices(arr);
  if (pverts.empty()) fail(Errc::invalid_argument, "spherical check needs crossing lines");
  HLine chart = vertex_avoiding_chart(arr, pverts);
  ChartFrame frame = ChartFrame::completed(chart);

  std::optional<Rational> u0, u1, v0, v1;
  for (const auto& pv : pverts) {
    auto uv = frame.point_coords(pv.point);
    // the chart avoids every vertex, so all of them are finite
    if (!u0 || uv->first < *u0) u0 = uv->first;
    if (!u1 || *u1 < uv->first) u1 = uv->first;
    if (!v0 || uv->second < *v0) v0 = uv->second;
    if (!v1 || *v1 < uv->second) v1 = uv->second;
  }
  Window window(*u0 - Rational(2), *u1 + Rational(2), *v0 - Rational(2), *v1 + Rational(2));
  auto cells = cells_in_window(arr, frame, window);

  auto on_frame = [&](const std::pair<Rational, Rational>& p) {
    return p.first == window.u_min || p.first == window.u_max || p.second == window.v_min ||
           p.second == window.v_max;
  };

  SphericalReport rep;
  // entries of unbounded pieces: (line, primitive exit direction, side of the
  // line); the antipodal piece of the same chamber carries the negated key.
  struct Entry {
    std::size_t line;
    std::pair<Int, Int> dir;
    int side;
    std::size_t piece;
    bool operator<(const Entry& o) const {
      return std::tie(line, dir, side) < std::tie(o.line, o.dir, o.side);
    }
  };
  struct Piece {
    std::size_t corners = 0;
    std::set<std::size_t> walls;
    std::size_t partner = static_cast<std::size_t>(-1);
  };
  std::vector<Piece> pieces;
  std::vector<Entry> entries;

  auto lines = to_chart(arr, frame);
  for (const Cell& c : cells) {
    if (c.interior) {
      ++rep.chambers;
      if (c.verts.size() == 3 && c.wall_lines().size() == 3) ++rep.triangles;
      else rep.violations.push_back("bounded chamber with " +
                                    std::to_string(c.verts.size()) + " corners");
      continue;
    }
    Piece piece;
    for (const auto& p : c.verts)
      if (!on_frame(p)) ++piece.corners;
    for (std::size_t w : c.wall_lines()) piece.walls.insert(w);

    // cell centroid decides the affine side of each ray line
    Rational cu(0), cv(0);
    for (const auto& [pu, pv] : c.verts) {
      cu += pu;
      cv += pv;
    }
    Rational n(static_cast<long>(c.verts.size()));
    cu /= n;
    cv /= n;

    auto prim_dir = [](const Rational& du, const Rational& dv) {
      Int m = lcm(du.den(), dv.den());
      Int a = du.num() * (m / du.den());
      Int b = dv.num() * (m / dv.den());
      Int g = gcd(abs(a), abs(b));
      if (g > 1) {
        a /= g;
        b /= g;
      }
      return std::make_pair(a, b);
    };

    const std::size_t piece_index = pieces.size();
    for (std::size_t i = 0; i < c.verts.size(); ++i) {
      if (c.walls[i].kind != WallRef::Kind::line) continue;
      const auto& a = c.verts[i];
      const auto& b = c.verts[(i + 1) % c.verts.size()];
      int side = lines[c.walls[i].index].eval(cu, cv).sign();
      if (on_frame(a))
        entries.push_back({c.walls[i].index,
                           prim_dir(a.first - b.first, a.second - b.second), side, piece_index});
      if (on_frame(b))
        entries.push_back({c.walls[i].index,
                           prim_dir(b.first - a.first, b.second - a.second), side, piece_index});
    }
    pieces.push_back(std::move(piece));
  }

  // glue: (line, d, s) pairs with (line, -d, -s) of the antipodal piece
  std::map<std::tuple<std::size_t, std::pair<Int, Int>, int>, std::size_t> index;
  for (const Entry& e : entries) index[{e.line, e.dir, e.side}] = e.piece;
  for (const Entry& e : entries) {
    auto partner = index.find({e.line, {-e.dir.first, -e.dir.second}, -e.side});
    if (partner == index.end())
      fail(Errc::invalid_argument, "unmatched ray while gluing projective chambers");
    std::size_t other = partner->second;
    Piece& mine = pieces[e.piece];
    if (mine.partner != static_cast<std::size_t>(-1) && mine.partner != other)
      fail(Errc::invalid_argument, "piece glued to two different partners");
    mine.partner = other;
  }
  std::vector<bool> used(pieces.size(), false);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t corners = pieces[i].corners;
    std::set<std::size_t> walls = pieces[i].walls;
    std::size_t j = pieces[i].partner;
    if (j != static_cast<std::size_t>(-1) && !used[j]) {
      used[j] = true;
      corners += pieces[j].corners;
      walls.insert(pieces[j].walls.begin(), pieces[j].walls.end());
    }
    ++rep.chambers;
    if (corners == 3 && walls.size() == 3) ++rep.triangles;
    else rep.violations.push_back("unbounded chamber with " + std::to_string(corners) +
                                  " corners on " + std::to_string(walls.size()) + " walls");
  }
  return rep;
}

}  // namespace titsarr
