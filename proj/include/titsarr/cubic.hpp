#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "titsarr/conic.hpp"

namespace titsarr {

// Ternary cubic form with canonical primitive integer coefficients in the
// fixed monomial order X^3, X^2Y, X^2Z, XY^2, XYZ, XZ^2, Y^3, Y^2Z, YZ^2, Z^3.
class Cubic {
 public:
  static constexpr std::size_t kMonomials = 10;

  static Cubic from_coeffs(const std::array<Rational, kMonomials>& c);
  static Cubic from_int_coeffs(const std::array<Int, kMonomials>& c);

  const std::array<Int, kMonomials>& coeffs() const { return c_; }

  Int eval(const HPoint& p) const;

  friend bool operator==(const Cubic& a, const Cubic& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cubic& a, const Cubic& b) { return !(a == b); }

  std::string str() const;

 private:
  explicit Cubic(std::array<Int, kMonomials> c) : c_(std::move(c)) {}
  std::array<Int, kMonomials> c_;
};

// Product of a linear form and a quadratic form, in the fixed monomial orders
// of HLine coefficients and Conic::form_coeffs.
std::array<Int, Cubic::kMonomials> multiply_linear_quadratic(const Triple& l,
                                                             const std::array<Int, 6>& q);

struct CubicFit {
  enum class Status { unique, underdetermined, no_cubic };
  Status status;
  std::optional<Cubic> cubic;  // set when unique
  std::size_t nullity = 0;
};

// Exact nullspace of the N x 10 monomial matrix. Requires at least 9 points.
CubicFit cubic_fit(std::span<const HPoint> points);

struct LinearFactor {
  bool divides = false;
  std::optional<Conic> cofactor;  // quadratic cofactor, possibly degenerate
};

// True iff the line divides the cubic. Tests by evaluating at four distinct
// rational points of the line and cross-checks by exact division, returning
// the quadratic cofactor.
LinearFactor linear_factor_test(const Cubic& p, const HLine& l);

struct FactorType {
  enum class Kind { three_lines, conic_plus_line, no_rational_linear_factor };
  Kind kind = Kind::no_rational_linear_factor;

  // Every supplied candidate that divides the cubic.
  std::vector<HLine> dividing_candidates;

  // kind == three_lines (linear factor with degenerate quadratic cofactor):
  std::vector<HLine> lines;  // known rational components, with multiplicity
  bool all_rational = false;
  bool concurrent = false;
  std::optional<HPoint> common_point;

  // kind == conic_plus_line (linear factor with rank-3 cofactor):
  std::optional<HLine> line;
  std::optional<Conic> conic;
  std::optional<LineConicResult> relation;

  std::optional<ConicClass> cofactor_class;  // classification of the cofactor
};

const char* factor_kind_name(FactorType::Kind k);

// Certifies rational linear factors from the candidate set only; never
// asserts irreducibility over the reals.
FactorType cubic_factor_type(const Cubic& p, std::span<const HLine> candidates);

}  // namespace titsarr
