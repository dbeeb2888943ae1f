#pragma once

#include <span>
#include <utility>
#include <vector>

#include "titsarr/arrangement.hpp"
#include "titsarr/conic.hpp"

namespace titsarr {

// Pencil coordinates on a conic through a rational base point: the lines
// through the base form a projective line with basis (tangent at base,
// deterministic second line); the parameter of a conic point p is read off
// the line base-p. The tangent direction sits at infinity, so the parameter
// is affine on the conic minus the base and any projective reparametrization
// fixing the base acts affinely on it.
struct ConicPencilBasis {
  HLine tangent;
  HLine second;
};

ConicPencilBasis conic_pencil_basis(const Conic& c, const HPoint& base);

Rational conic_param(const ConicPencilBasis& basis, const HPoint& base, const HPoint& p);

struct ConicOrder {
  std::vector<HPoint> points;   // sorted by parameter
  std::vector<Rational> params;
};

// Cyclic order of points on a conic, cut at the base point. Consecutive
// means adjacent in this order.
ConicOrder order_on_conic(const Conic& c, const HPoint& base, std::span<const HPoint> pts);

// Four consecutive dual points on a conic plus the apex whose dual line is
// tangent to the conic at the boundary-dual point. Validation derives the
// tangency point from the quadrangle's diagonal triangle when it is not
// supplied, fits the conic, checks the tangency, and checks that the four
// points are evenly stepped in the pencil parameter (the recurrence leaves
// the conic otherwise).
class SeedQuadruple {
 public:
  static SeedQuadruple make(const HPoint& p0, const HPoint& p1, const HPoint& p2,
                            const HPoint& p3, const HPoint& apex);
  static SeedQuadruple make_with_boundary(const HPoint& p0, const HPoint& p1, const HPoint& p2,
                                          const HPoint& p3, const HPoint& apex,
                                          const HPoint& boundary_dual);
  static SeedQuadruple canonical();

  const std::array<HPoint, 4>& points() const { return p_; }
  const HPoint& apex() const { return apex_; }
  const HPoint& boundary_dual() const { return boundary_dual_; }
  const Conic& conic() const { return conic_; }

  SeedQuadruple advanced(const HPoint& p4) const;    // window (p1, p2, p3, p4)
  SeedQuadruple retreated(const HPoint& pm1) const;  // window (pm1, p0, p1, p2)
  SeedQuadruple transformed(const Projectivity& t) const;

 private:
  SeedQuadruple(std::array<HPoint, 4> p, HPoint apex, HPoint bd, Conic c)
      : p_(std::move(p)), apex_(std::move(apex)), boundary_dual_(std::move(bd)),
        conic_(std::move(c)) {}
  std::array<HPoint, 4> p_;
  HPoint apex_;
  HPoint boundary_dual_;
  Conic conic_;
};

// Cross-product recurrence: the next (resp. previous) consecutive conic
// point, built from chords and lines through the apex. The result is checked
// against the seed's conic.
HPoint lemma5_forward(const SeedQuadruple& s);
HPoint lemma5_backward(const SeedQuadruple& s);

// Canonical coordinates of the tangent-plus-pencil model.
namespace a2t0 {
HPoint conic_point(const Rational& k);   // (k : k(k-1)/2 : 1)
HPoint pencil_point(const Rational& k);  // (1 : k/2 : 0)
Conic dual_conic_form();                 // X^2 - XZ - 2YZ
HLine dual_line();                       // Z = 0, the line of pencil duals
HPoint boundary_dual();                  // (0:1:0)
HPoint apex();                           // (0:0:1)
HLine boundary();                        // Y = 0
}  // namespace a2t0

// Generators. Tags record the family and index of every line.
Arrangement gen_a2tilde0(long k_min, long k_max);
Arrangement gen_affine_a2(long k_min, long k_max);
Arrangement gen_near_pencil(int n);

// The same structure generated from an arbitrary seed by iterating the
// recurrence; indices k_min..k_max with the seed points at 0..3.
Arrangement gen_from_seed(const SeedQuadruple& seed, long k_min, long k_max);

// Smallest index range such that every line of the infinite canonical family
// meeting the window (boundary-at-infinity chart) is included, widened to the
// walls of the cells that reach into the window.
std::pair<long, long> window_complete_range(const Window& window);

}  // namespace titsarr
