#include "titsarr/probes.hpp"

#include <algorithm>

namespace titsarr {

namespace {

// Vertex ids per line, in the order induced by the chart coordinates. The
// global (u, v) sort is monotone along every affine line, so filtering keeps
// the along-line order.
std::vector<std::vector<std::size_t>> per_line_orders(const Arrangement& arr,
                                                      const std::vector<Vertex>& verts) {
  std::vector<std::vector<std::size_t>> orders(arr.size());
  for (std::size_t id = 0; id < verts.size(); ++id)
    for (std::size_t li : verts[id].lines) orders[li].push_back(id);
  return orders;
}

}  // namespace

std::optional<NearPencilWitness> near_pencil_probe(const Arrangement& arr,
                                                   const ChartFrame& frame,
                                                   const Window& window) {
  auto verts = vertices_in_window(arr, frame, window);
  auto orders = per_line_orders(arr, verts);
  for (std::size_t li = 0; li < orders.size(); ++li) {
    const auto& ids = orders[li];
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
      const Vertex& a = verts[ids[k]];
      const Vertex& b = verts[ids[k + 1]];
      if (a.weight == 2 && b.weight == 2)
        return NearPencilWitness{li, a.point, b.point};
    }
  }
  return std::nullopt;
}

std::optional<Lemma3Witness> lemma3_probe(const Arrangement& arr, const ChartFrame& frame,
                                          const Window& window) {
  auto verts = vertices_in_window(arr, frame, window);
  auto orders = per_line_orders(arr, verts);
  for (std::size_t id = 0; id < verts.size(); ++id) {
    const Vertex& v = verts[id];
    if (v.weight != 2) continue;
    std::array<HPoint, 4> nbr = {v.point, v.point, v.point, v.point};
    std::size_t found = 0;
    bool all_weight_three = true;
    for (std::size_t li : v.lines) {
      const auto& ids = orders[li];
      auto it = std::find(ids.begin(), ids.end(), id);
      if (it == ids.begin() || std::next(it) == ids.end()) break;  // missing a side
      for (std::size_t nid : {*std::prev(it), *std::next(it)}) {
        nbr[found++] = verts[nid].point;
        all_weight_three = all_weight_three && verts[nid].weight == 3;
      }
    }
    if (found == 4 && all_weight_three) return Lemma3Witness{v.point, nbr};
  }
  return std::nullopt;
}

}  // namespace titsarr
