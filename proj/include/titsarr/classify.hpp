#pragma once

#include <optional>
#include <string>

#include "titsarr/cells.hpp"
#include "titsarr/cubic.hpp"
#include "titsarr/probes.hpp"

namespace titsarr {

enum class Verdict { near_pencil, affine_a2, affine_a2zero, unsupported };

enum class UnsupportedReason {
  none,
  small_instance,
  fit_underdetermined,
  no_cubic,
  three_lines_not_concurrent,
  conic_line_secant,
  conic_line_disjoint,
  tangent_not_at_boundary,
  no_rational_linear_factor,
  weight_structure,
};

const char* verdict_name(Verdict v);
const char* reason_name(UnsupportedReason r);

struct Classification {
  Verdict verdict = Verdict::unsupported;
  UnsupportedReason reason = UnsupportedReason::none;

  std::optional<Cubic> cubic;          // unique fit of the dual points, when it exists
  std::optional<FactorType> factor;    // factorization evidence
  std::optional<NearPencilWitness> pencil_witness;
  bool reducible_diagram = false;      // a disconnected chamber diagram was found
  std::optional<HPoint> tangency_point;     // AffineA2Zero: conic-line tangency = boundary dual
  std::optional<HPoint> concurrency_point;  // AffineA2: common point of the three dual lines
  std::string detail;
};

// The trichotomy decision pipeline on a windowed truncation. Verdicts mean
// "consistent with" the infinite class; a finite window can refute the Tits
// hypothesis but never prove it.
Classification classify(const Arrangement& arr, const Chart& chart, const Window& window);

// Candidate component lines of the dual cubic: spans of dual-point pairs
// covering at least four dual points. Any line component of a cubic through
// four of the points is such a span.
std::vector<HLine> component_candidates(std::span<const HPoint> dual_points);

// For an arrangement classified AffineA2Zero: the projectivity taking it to
// the canonical model (boundary dual to (0:1:0), apex to (0:0:1), dual points
// onto the canonical lattice). Throws NotA2TildeZero when no consecutive
// quadruple verifies.
Projectivity recognize_a2tilde0(const Arrangement& arr, const Classification& cls);

struct WeightAuditEntry {
  HPoint point;
  int weight = 0;
  bool violation = false;
  std::string note;
};

struct WeightAudit {
  bool ok = true;
  int max_weight = 0;
  std::vector<WeightAuditEntry> flagged;  // vertices of weight > the applicable bound
};

// Weight bounds implied by the fitted curve: with a conic-plus-line factor at
// most one vertex (the apex) may exceed three; with three line components at
// most three may; on an irreducible conic alone every weight is at most two.
WeightAudit bezout_weight_audit(const Arrangement& arr, const FactorType& factor);
WeightAudit bezout_weight_audit(const Arrangement& arr, const Conic& conic);

}  // namespace titsarr
