#pragma once

#include <string>
#include <vector>

#include "podec/poset.hpp"

namespace podec::test {

// Every labelled order on {0, ..., n-1} in which 0 is the least element.
inline std::vector<Poset> all_posets(std::size_t n) {
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i < n; ++i)
    labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (i != j)
        pairs.emplace_back(i, j);

  std::vector<Poset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((m >> k) & 1u)
        lt[pairs[k].first][pairs[k].second] = true;
    bool order = true;
    for (std::size_t a = 1; a < n && order; ++a)
      for (std::size_t b = 1; b < n && order; ++b) {
        if (lt[a][b] && lt[b][a])
          order = false;
        for (std::size_t c = 1; c < n && order; ++c)
          if (lt[a][b] && lt[b][c] && !lt[a][c])
            order = false;
      }
    if (!order)
      continue;
    std::vector<ElementSet> up(n, ElementSet(n));
    for (std::size_t a = 0; a < n; ++a) {
      up[a].insert(ElementId(a));
      up[0].insert(ElementId(a));
      for (std::size_t b = 1; b < n; ++b)
        if (lt[a][b])
          up[a].insert(ElementId(b));
    }
    out.push_back(Poset::from_up_sets(labels, up));
  }
  return out;
}

} // namespace podec::test
