#ifndef HOOKBIAS_BLOCKS_HPP
#define HOOKBIAS_BLOCKS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "hookbias/partition.hpp"

namespace hookbias {

/* Parts are grouped mod 12. For a 3-regular partition the blocks are
 *   1_k : 12k+4, 12k+2, 12k+1
 *   2_k : 12k+8, 12k+7, 12k+5
 *   3_k : 12k+11, 12k+10
 * Image partitions reuse the same grouping with the transformed
 * residues sliding into place: 3 joins 1_k, 6 joins 2_k, 9 joins 3_k.
 * Residue 0 belongs to no block (such parts are divisible by 3 and 4
 * alike and never occur here). */
struct BlockId {
    int level = 0; // 1, 2 or 3
    int k = 0;
    friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

BlockId block_of_part(int value);

std::string block_name(const BlockId& id); // e.g. "1_0-block"

// Multiplicity of part 12k+j in p.
std::int64_t alpha(const Partition& p, int k, int j);

// Sum over k of the multiplicity of parts congruent to j mod 12.
std::int64_t residue_mult_sum(const Partition& p, int j);

// Sum over k of 2*alpha_{k,6} + alpha_{k,3}; the bound that separates
// the 4-regular images of 3-regular partitions from the rest.
std::int64_t weighted_63(const Partition& p);

struct BlockTable {
    // (k, j) -> multiplicity of the part 12k+j, j in {1,2,4,5,7,8,10,11}
    std::map<std::pair<int, int>, int> alpha;

    int alpha_at(int k, int j) const;
    std::int64_t sum_over_k(int j) const;
    bool operator==(const BlockTable&) const = default;
};

// Requires a 3-regular partition.
BlockTable decompose(const Partition& p);
Partition recompose(const BlockTable& bt);

struct BlockHooks {
    std::int64_t count = 0;
    /* Set when the block's count includes a horizontal 2-hook at its
     * last row, whose existence depends on the first part of the next
     * block (or on there being nothing below). */
    bool boundary = false;
    bool operator==(const BlockHooks&) const = default;
};

struct BlockHookProfile {
    std::map<BlockId, BlockHooks> blocks;
    std::int64_t total() const;
};

/* Partitions the 2-hooks of p among its blocks: a vertical 2-hook goes
 * to the block of its part value, a horizontal 2-hook at row i to the
 * block of the row's part. The counts sum to the 2-hook total of p.
 * Requires a 3-regular partition. */
BlockHookProfile block_two_hooks(const Partition& p);

/* Per-block 2-hook counts with every block scored as a standalone
 * partition, ignoring the parts below it. This is the reading under
 * which the per-block bookkeeping of the case formulas is exact; the
 * counts do not in general sum to the 2-hook total of p. Accepts any
 * partition with no part divisible by 12. */
std::map<BlockId, std::int64_t> block_two_hooks_isolated(const Partition& p);

} // namespace hookbias

#endif
