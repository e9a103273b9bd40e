#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hbn/splitting_type.hpp"

namespace hbn {

/// Hasse diagram of a finite set of comparable splitting types under leq.
struct HasseDiagram {
  std::vector<SplittingType> nodes;
  /// (upper, lower) index pairs where lower < upper with nothing in between.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// All nodes must share length and total.
HasseDiagram hasse_diagram(std::vector<SplittingType> nodes);

}  // namespace hbn
