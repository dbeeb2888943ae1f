#include "titsarr/cubic.hpp"

#include <sstream>

#include "titsarr/linalg.hpp"

namespace titsarr {

namespace {

std::array<Int, Cubic::kMonomials> monomials_at(const HPoint& p) {
  const Int& x = p[0];
  const Int& y = p[1];
  const Int& z = p[2];
  return {x * x * x, x * x * y, x * x * z, x * y * y, x * y * z,
          x * z * z, y * y * y, y * y * z, y * z * z, z * z * z};
}

}  // namespace

Cubic Cubic::from_coeffs(const std::array<Rational, kMonomials>& c) {
  RatVec v(c.begin(), c.end());
  bool all_zero = true;
  for (const auto& r : v) all_zero = all_zero && r.is_zero();
  if (all_zero) fail(Errc::degenerate_input, "zero cubic form");
  std::vector<Int> w = primitive_integer(v);
  std::array<Int, kMonomials> a;
  std::copy(w.begin(), w.end(), a.begin());
  return Cubic(std::move(a));
}

Cubic Cubic::from_int_coeffs(const std::array<Int, kMonomials>& c) {
  std::array<Rational, kMonomials> r;
  for (std::size_t i = 0; i < kMonomials; ++i) r[i] = Rational(c[i]);
  return from_coeffs(r);
}

Int Cubic::eval(const HPoint& p) const {
  auto m = monomials_at(p);
  Int s = 0;
  for (std::size_t i = 0; i < kMonomials; ++i) s += c_[i] * m[i];
  return s;
}

std::string Cubic::str() const {
  static const char* mono[kMonomials] = {"X^3", "X^2Y", "X^2Z", "XY^2", "XYZ",
                                         "XZ^2", "Y^3",  "Y^2Z", "YZ^2", "Z^3"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kMonomials; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    Int a = abs(c_[i]);
    if (a != 1) os << a.str();
    os << mono[i];
    first = false;
  }
  return os.str();
}

std::array<Int, Cubic::kMonomials> multiply_linear_quadratic(const Triple& l,
                                                             const std::array<Int, 6>& q) {
  const Int& a = l[0];
  const Int& b = l[1];
  const Int& c = l[2];
  // q = (X^2, XY, XZ, Y^2, YZ, Z^2)
  return {
      a * q[0],                        // X^3
      a * q[1] + b * q[0],             // X^2Y
      a * q[2] + c * q[0],             // X^2Z
      a * q[3] + b * q[1],             // XY^2
      a * q[4] + b * q[2] + c * q[1],  // XYZ
      a * q[5] + c * q[2],             // XZ^2
      b * q[3],                        // Y^3
      b * q[4] + c * q[3],             // Y^2Z
      b * q[5] + c * q[4],             // YZ^2
      c * q[5],                        // Z^3
  };
}

CubicFit cubic_fit(std::span<const HPoint> points) {
  if (points.size() < 9)
    fail(Errc::insufficient_data,
         "cubic fit needs at least 9 points, got " + std::to_string(points.size()));
  RatMat m;
  m.reserve(points.size());
  for (const auto& p : points) {
    auto row = monomials_at(p);
    RatVec rv;
    rv.reserve(Cubic::kMonomials);
    for (const auto& x : row) rv.emplace_back(x);
    m.push_back(std::move(rv));
  }
  auto basis = nullspace(m, Cubic::kMonomials);
  CubicFit fit;
  fit.nullity = basis.size();
  if (basis.empty()) {
    fit.status = CubicFit::Status::no_cubic;
  } else if (basis.size() == 1) {
    fit.status = CubicFit::Status::unique;
    std::array<Rational, Cubic::kMonomials> c;
    std::copy(basis[0].begin(), basis[0].end(), c.begin());
    fit.cubic = Cubic::from_coeffs(c);
  } else {
    fit.status = CubicFit::Status::underdetermined;
  }
  return fit;
}

LinearFactor linear_factor_test(const Cubic& p, const HLine& l) {
  // Four distinct points of the line: a nonzero binary cubic has at most
  // three roots, so four zeros certify divisibility.
  RatMat row{{Rational(l[0]), Rational(l[1]), Rational(l[2])}};
  auto basis = nullspace(row, 3);
  auto pt = [&](const Rational& s, const Rational& t) {
    return HPoint::of(s * basis[0][0] + t * basis[1][0], s * basis[0][1] + t * basis[1][1],
                      s * basis[0][2] + t * basis[1][2]);
  };
  const HPoint samples[4] = {pt(1, 0), pt(0, 1), pt(1, 1), pt(1, -1)};
  LinearFactor out;
  for (const auto& s : samples)
    if (p.eval(s) != 0) return out;

  // Cross-check by exact division: solve l * q = p for the six cofactor
  // coefficients.
  RatMat sys(Cubic::kMonomials, RatVec(6, Rational(0)));
  for (std::size_t j = 0; j < 6; ++j) {
    std::array<Int, 6> unit{};
    unit[j] = 1;
    auto col = multiply_linear_quadratic(l.coords(), unit);
    for (std::size_t i = 0; i < Cubic::kMonomials; ++i) sys[i][j] = Rational(col[i]);
  }
  RatVec rhs;
  rhs.reserve(Cubic::kMonomials);
  for (const auto& c : p.coeffs()) rhs.emplace_back(c);
  auto q = solve(std::move(sys), rhs);
  if (!q) fail(Errc::invalid_argument, "four-point zero test and exact division disagree");
  out.divides = true;
  out.cofactor = Conic::from_coeffs((*q)[0], (*q)[1], (*q)[2], (*q)[3], (*q)[4], (*q)[5]);
  return out;
}

const char* factor_kind_name(FactorType::Kind k) {
  switch (k) {
    case FactorType::Kind::three_lines: return "ThreeLines";
    case FactorType::Kind::conic_plus_line: return "ConicPlusLine";
    case FactorType::Kind::no_rational_linear_factor: return "NoRationalLinearFactor";
  }
  return "?";
}

FactorType cubic_factor_type(const Cubic& p, std::span<const HLine> candidates) {
  FactorType out;
  std::optional<HLine> factor;
  std::optional<Conic> cofactor;
  std::vector<HLine> seen;
  for (const auto& l : candidates) {
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == l;
    if (dup) continue;
    seen.push_back(l);
    auto lf = linear_factor_test(p, l);
    if (!lf.divides) continue;
    out.dividing_candidates.push_back(l);
    if (!factor) {
      factor = l;
      cofactor = lf.cofactor;
    }
  }
  if (!factor) {
    out.kind = FactorType::Kind::no_rational_linear_factor;
    return out;
  }

  ConicClass cls = conic_classify(*cofactor);
  out.cofactor_class = cls;
  if (cls.rank == 3) {
    out.kind = FactorType::Kind::conic_plus_line;
    out.line = *factor;
    out.conic = *cofactor;
    out.relation = line_conic_intersection(*factor, *cofactor);
    return out;
  }

  // Degenerate cofactor: the cubic is a product of lines (real or conjugate).
  out.kind = FactorType::Kind::three_lines;
  out.lines.push_back(*factor);
  if (cls.components) {
    out.all_rational = true;
    out.lines.push_back(cls.components->first);
    out.lines.push_back(cls.components->second);
  }
  if (cls.kind == ConicKind::double_line && cls.components) {
    const HLine& m = cls.components->first;
    out.concurrent = true;
    if (m != *factor) out.common_point = cross(*factor, m);
  } else if (cls.singular_point) {
    // The cofactor components (rational or not) meet at the singular point;
    // concurrence of all three components is decidable from it alone.
    out.concurrent = incident(*cls.singular_point, *factor);
    if (out.concurrent) out.common_point = cls.singular_point;
  }
  return out;
}

}  // namespace titsarr
