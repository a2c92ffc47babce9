#ifndef HOOKBIAS_VERIFY_HPP
#define HOOKBIAS_VERIFY_HPP

#include <vector>

#include "hookbias/report.hpp"

namespace hookbias {

// Cell, beta-set and (k=2) domino counts agree on every partition of
// every n <= n_max, for 1 <= k <= k_max.
VerificationReport verify_hook_oracles(int n_max, int k_max);

// Sum preservation, 4-regularity, injectivity and the Case 1 identity
// for n <= n_max; measured per-block 2-hook deltas against the case
// formulas for n <= case_n_max; losses confined to Case 3.
std::vector<VerificationReport> verify_phi(int n_max, int case_n_max);

// Q1', Q2', Q3' pairwise disjoint and contained in C_4(n).
VerificationReport verify_qsets(int n_min, int n_max);

// b_{4,2}(n) >= b_{3,2}(n) for 0 <= n <= n_max.
VerificationReport verify_theorem(int n_max, int jobs);

// b_{3,2}>=b_{2,2} (n>=4), b_{2,2}>=b_{2,1} (n>4), b_{2,2}>=b_{2,3} (n>=0).
std::vector<VerificationReport> verify_prior_biases(int n_max, int jobs);

// b_{t+1,2}(n) >= b_{t,2}(n) for t_min <= t <= t_max; numeric evidence.
VerificationReport verify_conjecture(int t_min, int t_max, int n_max, int jobs);

// Worked examples, determined-branch properties, the aggregate 2-hook
// compensation bound and class disjointness.
std::vector<VerificationReport> verify_psi(int n_max);

// Regenerates the n=22 mapping table and diffs it against the golden copy.
VerificationReport verify_table1();

// The A1a/B1 identities, the negative supports of every displayed case
// and the product-vs-count agreement.
std::vector<VerificationReport> verify_series(int order);

// The p_a/p_b three-term inequalities and p_b(n) >= p_b(n-5).
VerificationReport verify_restricted_inequalities(int order);

// Appendix worked examples plus every level 0..level_max (7 exempt).
std::vector<VerificationReport> verify_appendix_levels(int level_max);

} // namespace hookbias

#endif
