#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "titsarr/arrangement.hpp"

namespace titsarr {

// Command-line dispatch; exit codes: 0 success, 2 validation failure (a probe
// witness or simpliciality violation where the class forbids one), 3 file
// parse error, 1 other errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "boundary-infinity" | "z1" | "y1" | "custom:a,b,c"
Chart parse_chart(const std::string& spec);

// "u0,w0,u1,w1" (min corner, max corner)
Window parse_window(const std::string& spec);

}  // namespace titsarr
