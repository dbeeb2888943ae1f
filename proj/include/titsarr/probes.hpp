#pragma once

#include <array>
#include <optional>

#include "titsarr/arrangement.hpp"

namespace titsarr {

struct NearPencilWitness {
  std::size_t line = 0;  // arrangement line carrying the pair
  HPoint v1, v2;
};

// Searches each line for two consecutive weight-2 vertices. A witness
// certifies that a Tits arrangement containing this window is a near pencil.
std::optional<NearPencilWitness> near_pencil_probe(const Arrangement& arr,
                                                   const ChartFrame& frame,
                                                   const Window& window);

struct Lemma3Witness {
  HPoint v;
  std::array<HPoint, 4> neighbors;
};

// Finds a weight-2 vertex whose four nearest vertices along its two lines
// (one per side per line, within the window) all have weight 3. A witness
// forces the ambient arrangement to be spherical with 6 or 7 lines.
std::optional<Lemma3Witness> lemma3_probe(const Arrangement& arr, const ChartFrame& frame,
                                          const Window& window);

}  // namespace titsarr
