#ifndef HOOKBIAS_PHI_HPP
#define HOOKBIAS_PHI_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hookbias/blocks.hpp"
#include "hookbias/partition.hpp"
#include "hookbias/report.hpp"

namespace hookbias {

enum class PhiCase { Case1, Case2, Case3 };

/* The injection from 3-regular to 4-regular partitions of n: parts
 * 12k+11, 12k+10, 12k+7, 12k+5 stay; each 12k+8 becomes 12k+6; each
 * 12k+4 becomes 12k+3; the lost units are absorbed as new 1s, so the
 * multiplicity of 1 grows by sum(2*alpha_{k,8} + alpha_{k,4}). */
Partition phi(const Partition& p);

/* Case 1: no parts congruent to 8 or 4 mod 12 (phi fixes p).
 * Case 2: such parts exist but none congruent to 5 or 2 mod 12.
 * Case 3: both kinds exist; only these partitions may lose 2-hooks. */
PhiCase phi_case(const Partition& p);

/* Per-block change in the standalone 2-hook count between p and phi(p),
 * over the union of blocks of both; see block_two_hooks_isolated. */
std::map<BlockId, std::int64_t> two_hook_delta(const Partition& p);

/* The values the case formulas allow for a block's delta. A singleton
 * everywhere except the unresolved 1_0 branch of Case 3, which allows
 * {0, +1}. */
std::set<std::int64_t> case_formula_delta(const Partition& p, const BlockId& id);

struct CompensationSets {
    int n = 0;
    // level n
    std::set<Partition> c3, c3_1, c3_2, c4;
    // level n-2
    std::set<Partition> q1, q2, q3;
    // level n, built by adjoining parts to the level n-2 sets
    std::set<Partition> q1p, q2p, q3p, q;
};

std::set<Partition> b_t_set(int n, int t);
std::set<Partition> phi_image_set(int n);
std::set<Partition> c4_set(int n);

// All compensation sets at level n; requires n >= 2 because the Q sets
// dissect C_4(n-2).
CompensationSets build_sets(int n);

// Adjoining helper: p plus the extra parts.
Partition adjoin(const Partition& p, const std::vector<int>& extra);

// |phi(B_3(n))| == |B_3(n)| and phi(B_3(n)) subset of B_4(n).
VerificationReport verify_injective(int n);

} // namespace hookbias

#endif
