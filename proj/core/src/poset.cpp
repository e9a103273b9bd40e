#include "hbn/poset.hpp"

#include <algorithm>

namespace hbn {

HasseDiagram hasse_diagram(std::vector<SplittingType> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const std::size_t n = nodes.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) below[i][j] = i != j && leq(nodes[i], nodes[j]);

  HasseDiagram out;
  for (std::size_t upper = 0; upper < n; ++upper)
    for (std::size_t lower = 0; lower < n; ++lower) {
      if (!below[lower][upper]) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < n && covered; ++mid)
        if (below[lower][mid] && below[mid][upper]) covered = false;
      if (covered) out.covers.emplace_back(upper, lower);
    }
  out.nodes = std::move(nodes);
  return out;
}

}  // namespace hbn
