#include "titsarr/conic.hpp"

#include <sstream>

#include "titsarr/linalg.hpp"

namespace titsarr {

namespace {

Mat3 canonical_symmetric(const std::array<Rational, 6>& u) {
  // u = (m00, m01, m02, m11, m12, m22)
  RatVec v(u.begin(), u.end());
  bool all_zero = true;
  for (const auto& r : v) all_zero = all_zero && r.is_zero();
  if (all_zero) fail(Errc::degenerate_input, "zero quadratic form");
  std::vector<Int> w = primitive_integer(v);
  Mat3 m;
  m.at(0, 0) = w[0];
  m.at(0, 1) = m.at(1, 0) = w[1];
  m.at(0, 2) = m.at(2, 0) = w[2];
  m.at(1, 1) = w[3];
  m.at(1, 2) = m.at(2, 1) = w[4];
  m.at(2, 2) = w[5];
  return m;
}

// Two deterministic rational points spanning a line.
std::pair<HPoint, HPoint> span_points(const HLine& l) {
  RatMat row{{Rational(l[0]), Rational(l[1]), Rational(l[2])}};
  auto basis = nullspace(row, 3);
  auto to_point = [](const RatVec& v) {
    return HPoint::of(v[0], v[1], v[2]);
  };
  return {to_point(basis[0]), to_point(basis[1])};
}

HPoint combine(const HPoint& p, const HPoint& q, const Int& s, const Int& t) {
  const Triple& a = p.coords();
  const Triple& b = q.coords();
  return HPoint::from_triple({s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]});
}

}  // namespace

Conic Conic::from_coeffs(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d, const Rational& e, const Rational& f) {
  Rational half(1, 2);
  return Conic(canonical_symmetric({a, b * half, c * half, d, e * half, f}));
}

Conic Conic::from_symmetric(const std::array<Rational, 6>& upper) {
  return Conic(canonical_symmetric(upper));
}

std::string Conic::str() const {
  static const char* mono[6] = {"X^2", "XY", "XZ", "Y^2", "YZ", "Z^2"};
  auto cs = form_coeffs();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 6; ++i) {
    if (cs[static_cast<std::size_t>(i)] == 0) continue;
    const Int& c = cs[static_cast<std::size_t>(i)];
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = abs(c);
    if (a != 1) os << a.str();
    os << mono[i];
    first = false;
  }
  return os.str();
}

Conic conic_through_5(const std::array<HPoint, 5>& pts) {
  RatMat m;
  for (const auto& p : pts) {
    const Triple& v = p.coords();
    m.push_back({Rational(v[0] * v[0]), Rational(v[0] * v[1]), Rational(v[0] * v[2]),
                 Rational(v[1] * v[1]), Rational(v[1] * v[2]), Rational(v[2] * v[2])});
  }
  auto basis = nullspace(m, 6);
  if (basis.size() != 1)
    fail(Errc::underdetermined_fit,
         "five points impose dependent conditions (nullspace dimension " +
             std::to_string(basis.size()) + ")");
  const RatVec& c = basis[0];
  return Conic::from_coeffs(c[0], c[1], c[2], c[3], c[4], c[5]);
}

HLine tangent_line(const Conic& m, const HPoint& p) {
  if (m.eval(p) != 0) fail(Errc::not_on_curve, p.str() + " is not on the conic");
  Triple g = m.matrix().mul(p.coords());
  if (g[0] == 0 && g[1] == 0 && g[2] == 0)
    fail(Errc::singular_point, p.str() + " is a singular point of the conic");
  return HLine::from_triple(g);
}

LineConicResult line_conic_intersection(const HLine& l, const Conic& m) {
  auto [p0, p1] = span_points(l);
  Int a = m.eval(p0);
  Int b = m.polar(p0, p1);
  Int c = m.eval(p1);
  if (a == 0 && b == 0 && c == 0)
    fail(Errc::component_line, l.str() + " is a component of the conic");
  Int disc = b * b - 4 * a * c;
  LineConicResult res;
  if (disc < 0) {
    res.relation = LineConicRelation::disjoint;
    return res;
  }
  if (disc == 0) {
    res.relation = LineConicRelation::tangent;
    if (a != 0)
      res.tangent_point = combine(p0, p1, -b, 2 * a);
    else  // a == 0 forces b == 0 here, double root at p0
      res.tangent_point = p0;
    return res;
  }
  res.relation = LineConicRelation::secant;
  if (!is_perfect_square(disc)) {
    res.irrational_points = true;
    return res;
  }
  Int r = isqrt(disc);
  if (a != 0) {
    res.points = {combine(p0, p1, -b + r, 2 * a), combine(p0, p1, -b - r, 2 * a)};
  } else {
    // a == 0: roots t = 0 and b s + c t = 0.
    res.points = {p0, combine(p0, p1, -c, b)};
  }
  return res;
}

const char* conic_kind_name(ConicKind k) {
  switch (k) {
    case ConicKind::irreducible_real: return "IrreducibleReal";
    case ConicKind::irreducible_empty: return "IrreducibleEmpty";
    case ConicKind::two_real_lines: return "TwoRealLines";
    case ConicKind::conjugate_line_pair: return "ConjugateLinePair";
    case ConicKind::double_line: return "DoubleLine";
  }
  return "?";
}

ConicClass conic_classify(const Conic& conic) {
  // Symmetric congruence reduction over the rationals. Pivots on the
  // diagonal; a zero diagonal with a nonzero off-diagonal entry is first
  // repaired by adding the partner row/column.
  std::array<std::array<Rational, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        Rational(conic.matrix().at(i, j));

  int pos = 0, neg = 0;
  std::array<bool, 3> done{false, false, false};
  for (int step = 0; step < 3; ++step) {
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
      if (!done[static_cast<std::size_t>(i)] &&
          !m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      int a = -1, b = -1;
      for (int i = 0; i < 3 && a < 0; ++i)
        for (int j = i + 1; j < 3 && a < 0; ++j)
          if (!done[static_cast<std::size_t>(i)] && !done[static_cast<std::size_t>(j)] &&
              !m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
            a = i;
            b = j;
          }
      if (a < 0) break;  // remaining block is zero
      for (int k = 0; k < 3; ++k)
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] +=
            m[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
      for (int k = 0; k < 3; ++k)
        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] +=
            m[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)];
      pivot = a;
    }
    const std::size_t p = static_cast<std::size_t>(pivot);
    Rational d = m[p][p];
    if (d.sign() > 0) ++pos;
    else ++neg;
    for (int j = 0; j < 3; ++j) {
      const std::size_t q = static_cast<std::size_t>(j);
      if (q == p || done[q]) continue;
      if (m[q][p].is_zero() && m[p][q].is_zero()) continue;
      Rational f = m[q][p] / d;
      for (int k = 0; k < 3; ++k)
        m[q][static_cast<std::size_t>(k)] -= f * m[p][static_cast<std::size_t>(k)];
      for (int k = 0; k < 3; ++k)
        m[static_cast<std::size_t>(k)][q] -= f * m[static_cast<std::size_t>(k)][p];
    }
    done[p] = true;
  }

  ConicClass cls;
  cls.rank = pos + neg;
  // The form is only defined up to scale; normalize the signature.
  if (neg > pos) std::swap(pos, neg);
  cls.signature = {pos, neg};
  if (cls.rank == 3) {
    cls.kind = (neg == 0) ? ConicKind::irreducible_empty : ConicKind::irreducible_real;
    return cls;
  }
  if (cls.rank == 1) {
    cls.kind = ConicKind::double_line;
    // Rank-1 symmetric matrix is proportional to l l^T; any nonzero row is l.
    for (int i = 0; i < 3; ++i) {
      Triple row{conic.matrix().at(i, 0), conic.matrix().at(i, 1), conic.matrix().at(i, 2)};
      if (row[0] == 0 && row[1] == 0 && row[2] == 0) continue;
      HLine l = HLine::from_triple(row);
      cls.components = {l, l};
      break;
    }
    return cls;
  }
  // rank 2
  cls.kind = (neg == 0) ? ConicKind::conjugate_line_pair : ConicKind::two_real_lines;
  {
    RatMat rows;
    for (int i = 0; i < 3; ++i)
      rows.push_back({Rational(conic.matrix().at(i, 0)), Rational(conic.matrix().at(i, 1)),
                      Rational(conic.matrix().at(i, 2))});
    auto rad = nullspace(rows, 3);
    const RatVec& s = rad[0];
    HPoint sing = HPoint::of(s[0], s[1], s[2]);
    cls.singular_point = sing;
    if (cls.kind == ConicKind::two_real_lines) {
      // Restrict to a coordinate line missing the singular point; the two
      // components join the singular point to the restricted roots.
      int i = 0;
      while (sing[static_cast<std::size_t>(i)] == 0) ++i;
      int j = (i + 1) % 3, k = (i + 2) % 3;
      std::array<Int, 3> ej{0, 0, 0}, ek{0, 0, 0};
      ej[static_cast<std::size_t>(j)] = 1;
      ek[static_cast<std::size_t>(k)] = 1;
      HPoint pj = HPoint::from_triple(ej), pk = HPoint::from_triple(ek);
      Int a = conic.eval(pj), b = conic.polar(pj, pk), c = conic.eval(pk);
      Int disc = b * b - 4 * a * c;
      if (is_perfect_square(disc)) {
        Int r = isqrt(disc);
        HPoint q1 = (a != 0) ? combine(pj, pk, -b + r, 2 * a) : pj;
        HPoint q2 = (a != 0) ? combine(pj, pk, -b - r, 2 * a) : combine(pj, pk, -c, b);
        cls.components = {cross(sing, q1), cross(sing, q2)};
      }
    }
  }
  return cls;
}

Conic dual_conic(const Conic& m) {
  if (m.matrix().det() == 0)
    fail(Errc::degenerate_conic, "dual conic requires rank 3");
  Mat3 adj = m.matrix().adjugate();
  return Conic::from_symmetric({Rational(adj.at(0, 0)), Rational(adj.at(0, 1)),
                                Rational(adj.at(0, 2)), Rational(adj.at(1, 1)),
                                Rational(adj.at(1, 2)), Rational(adj.at(2, 2))});
}

HPoint second_intersection(const Conic& m, const HLine& l, const HPoint& known) {
  if (m.eval(known) != 0) fail(Errc::not_on_curve, known.str() + " is not on the conic");
  if (!incident(known, l)) fail(Errc::invalid_argument, known.str() + " is not on the line");
  auto [p0, p1] = span_points(l);
  // Use a spanning point distinct from the known point.
  HPoint q = (p0 == known) ? p1 : p0;
  Int b = m.polar(known, q);
  Int c = m.eval(q);
  if (b == 0) return known;  // tangent at the known point
  return combine(known, q, -c, b);
}

}  // namespace titsarr
