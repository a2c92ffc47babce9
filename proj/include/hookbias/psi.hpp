#ifndef HOOKBIAS_PSI_HPP
#define HOOKBIAS_PSI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hookbias/blocks.hpp"
#include "hookbias/partition.hpp"

namespace hookbias {

/* The compensation map's domain is D_3(n) := C_3^1(n), the Case 3
 * partitions with at most one part equal to 1. Membership is intrinsic,
 * so it can be checked without materializing the set. */
bool in_d3(const Partition& p);

struct XiSplit {
    Partition xi_block;      // parts with value in {7,5,4,2,1}
    Partition xi_complement; // everything else (all parts >= 8)
    int xi = 0;              // sum of the xi_block
};

XiSplit xi_split(const Partition& p); // requires 3-regular

/* Surplus collected while rewriting the parts congruent to 8 and 4
 * mod 12:
 *   r = sum_{alpha_{k,8}=1} (-1) + sum_{alpha_{k,8}>1} (2*alpha_{k,8}-3)
 *       + sum_{k>=1} alpha_{k,4}. */
std::int64_t r_value(const BlockTable& bt);

enum class PsiCaseTag { A1a, A1b, A2, A3, B1, B2a, B2b, B2c, B2d };

struct PsiCase {
    PsiCaseTag tag;
    std::int64_t r;
};

std::string psi_case_name(PsiCaseTag tag);

PsiCase psi_case_of(const Partition& p); // rejects p outside D_3

/* Generic rewriting of the parts >= 8: each run of 12k+8 becomes 12k+9
 * (plus (12k+6)^{mult-1} when the run is longer), each 12k+4 with k >= 1
 * becomes 12k+3, everything else stays. Returns the transformed
 * complement and r. */
std::pair<Partition, std::int64_t> psi_high(const Partition& p);

/* Image of a Xi-block (4, 2^{alpha02}) given the surplus r >= -1; the
 * six branches select by the parity of r (r = 2s-1 or 2s) and by
 * (alpha02 + s) mod 3. The output sums to 4 + 2*alpha02 + r and carries
 * at least two 2-hooks when placed as a 1_0-block. */
Partition psi_xi_42a(int alpha02, std::int64_t r);

// Case A1 with an empty Xi-block: a part 12k+5 (k >= 1) absorbs the
// deficit, its smallest occurrence splitting into 12(k-1)+7 and 9.
Partition psi_special_xi0_A1a(const Partition& p);

// Case A1b with an empty Xi-block and no part 12k+5 (k >= 1): the
// smallest part 12k+2 splits instead (14 -> (9,3,1), otherwise
// 12k+2 -> (12(k-2)+11, 9, 3, 1^2)).
Partition psi_special_xi0_A1b(const Partition& p);

/* Case A3 (r <= -2): the largest part 12l+8 of multiplicity one
 * becomes 9^a where 12l+8+r+1 = 9a+b, 0 <= b < 9, and the image
 * Xi-block is built from Xi+b. */
Partition psi_special_A3(const Partition& p);

// Case B2a with Xi in {0,1}: the unique part 12k+4 (k >= 1) pairs with
// one 12k+2 to give (12k+3)^2.
Partition psi_special_B2a(const Partition& p);

// Case B2b with Xi = 0: every 12k+4 run with a companion 12k+2 turns
// into (12k+3)^{mult+1}, consuming one 12k+2.
Partition psi_special_B2b(const Partition& p);

/* The partial map: the image when the explicitly defined branches
 * determine it, nullopt otherwise. Never guesses. */
std::optional<Partition> psi(const Partition& p);

enum class ClassLabel { CL1, CL2, CL3, CL4, CL5, CL6 };

std::string class_label_name(ClassLabel c);

// Every class whose defining conditions p satisfies (they are disjoint
// by construction, which the verifier rechecks).
std::vector<ClassLabel> classes_matching(const Partition& p);

// Unique matching class of a member of C_4(n), or nullopt.
std::optional<ClassLabel> class_of(const Partition& p);

// One row of the n=22 mapping table.
struct Table1Row {
    Partition complement;                 // Xi-complement shared by the preimages
    std::vector<Partition> preimages;     // members of D_3(22)
    std::optional<Partition> psi_complement;
    std::vector<Partition> images;        // members of D_4(22)
};

struct Table1 {
    std::vector<Table1Row> rows;
    std::vector<Partition> extras;        // D_4(22) partitions matched by no row
};

Table1 generate_table1();
const Table1& golden_table1();
std::string render_table1(const Table1& t);

} // namespace hookbias

#endif
