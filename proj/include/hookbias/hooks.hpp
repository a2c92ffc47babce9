#ifndef HOOKBIAS_HOOKS_HPP
#define HOOKBIAS_HOOKS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hookbias/partition.hpp"

namespace hookbias {

struct HookGrid {
    // rows[i][j] is the hook length of the cell in row i, column j.
    std::vector<std::vector<int>> rows;
    bool operator==(const HookGrid&) const = default;
};

HookGrid hook_grid(const Partition& p);

/* Three routes to the same statistic. The cell count is the definition;
 * the beta-set and domino counts are fast paths that must agree with it
 * (and do, exhaustively -- see the tests). */
std::int64_t count_k_hooks_cells(const Partition& p, int k);
std::int64_t count_k_hooks_beta(const Partition& p, int k);
std::int64_t count_2_hooks_domino(const Partition& p);

// Raw-buffer variants for enumeration sweeps (parts weakly decreasing).
std::int64_t count_k_hooks_beta(const std::vector<int>& parts, int k);
std::int64_t count_2_hooks_domino(const std::vector<int>& parts);

// Total number of k-hooks over all t-regular partitions of n.
std::int64_t b_tk(int n, int t, int k);

struct BiasTable {
    int t = 0;
    int k = 0;
    std::map<int, std::int64_t> values; // n -> b_{t,k}(n)
};

// Table of b_{t,k}(n) for 0 <= n <= n_max; rows are computed in
// parallel when jobs > 1 and merged in index order.
BiasTable bias_table(int t, int k, int n_max, int jobs = 1);

} // namespace hookbias

#endif
