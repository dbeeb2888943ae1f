#pragma once

#include <stdexcept>
#include <string>

namespace titsarr {

// Error codes for the domain operations. Result-shaped outcomes (secant vs
// tangent, underdetermined fits with a dimension, ...) are returned as values;
// exceptions are reserved for violated preconditions and malformed input.
enum class Errc {
  degenerate_input,
  degenerate_frame,
  not_on_curve,
  singular_point,
  component_line,
  underdetermined_fit,
  insufficient_data,
  degenerate_conic,
  chart_collision,
  degenerate_seed,
  insufficient_lines,
  not_simplicial,
  not_a2tilde0,
  parse_error,
  invalid_argument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::degenerate_input: return "DegenerateInput";
    case Errc::degenerate_frame: return "DegenerateFrame";
    case Errc::not_on_curve: return "NotOnCurve";
    case Errc::singular_point: return "SingularPoint";
    case Errc::component_line: return "ComponentLine";
    case Errc::underdetermined_fit: return "UnderdeterminedFit";
    case Errc::insufficient_data: return "InsufficientData";
    case Errc::degenerate_conic: return "DegenerateConic";
    case Errc::chart_collision: return "ChartCollision";
    case Errc::degenerate_seed: return "DegenerateSeed";
    case Errc::insufficient_lines: return "InsufficientLines";
    case Errc::not_simplicial: return "NotSimplicial";
    case Errc::not_a2tilde0: return "NotA2TildeZero";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace titsarr
