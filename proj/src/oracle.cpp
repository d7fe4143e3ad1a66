#include <algorithm>
#include <vector>

#include "mdlab/coloring.hpp"
#include "mdlab/errors.hpp"
#include "mdlab/solver.hpp"

namespace mdlab {

int md_oracle(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw GraphError("md_oracle needs a connected graph");
  const std::size_t m = g.size();
  if (m > kOracleMaxEdges) {
    throw CapacityError("md_oracle refuses graphs with more than " + std::to_string(kOracleMaxEdges) + " edges (got " +
                        std::to_string(m) + ")");
  }
  if (m == 0) return 0;

  // Restricted growth string: rgs[0] = 1, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<Color> rgs(m, 1);
  std::vector<Color> prefix_max(m, 1);
  int best = 0;
  while (true) {
    const int parts = prefix_max[m - 1];
    if (parts > best && is_md_coloring_fast(g, rgs)) best = parts;

    std::size_t i = m - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      rgs[j] = 1;
      prefix_max[j] = prefix_max[i];
    }
  }
  return best;
}

}  // namespace mdlab
