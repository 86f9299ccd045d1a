#pragma once

#include <vector>

#include "qwalk/instance.hpp"

// Small graphs for full-space cross checks, including empty marked classes
// and fully marked parts.
inline std::vector<qwalk::BipartiteInstance> oracle_instances() {
  return {{12, 8, 1, 2},  {20, 10, 3, 5}, {30, 30, 2, 2}, {16, 16, 0, 3},
          {25, 9, 4, 0},  {40, 20, 1, 1}, {10, 50, 2, 7}, {5, 4, 5, 1},
          {6, 6, 0, 6},   {33, 27, 6, 2}, {3, 2, 1, 1},   {1, 7, 1, 0}};
}
