#ifndef HOOKBIAS_APPENDIX_HPP
#define HOOKBIAS_APPENDIX_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "hookbias/partition.hpp"
#include "hookbias/report.hpp"

namespace hookbias {

/* Members of Q_2 shaped (..., 3^{a03}, 1^{a01}) with no part 2, a03 and
 * a01 at least 1, and a01 equal to the bound sum(2 alpha_{k,6} +
 * alpha_{k,3}) minus 2 or minus 1. These are the partitions whose
 * 1_0-block loses a 2-hook when a 2 is adjoined. */
struct Form1Partition {
    Partition p;
    std::int64_t bound = 0; // sum(2 alpha_{k,6} + alpha_{k,3})
    bool bound_minus_two = false; // a01 == bound-2; otherwise a01 == bound-1

    friend auto operator<=>(const Form1Partition& a, const Form1Partition& b)
    {
        return a.p <=> b.p;
    }
    friend bool operator==(const Form1Partition& a, const Form1Partition& b)
    {
        return a.p == b.p;
    }
};

enum class FormLabel { F1, F2, F3 };

std::string form_label_name(FormLabel f);

// F1: ends in a single 2 (no 1s). F2: has a part 12k+9 and exactly one
// 1. F3: single 2 over 1^{a01}, again in Q_2 with one of the two bound
// equations. nullopt when none matches.
std::optional<FormLabel> form_of(const Partition& p, int level);

// Intrinsic Q_2 membership at the level: in C_4(level), alpha_{0,1} != 0
// and no part congruent to 9 mod 12.
bool in_q2(const Partition& p, int level);

std::set<Form1Partition> find_form1(int level);

// The case (i)-(iv) correspondence. Rejects level 7 and any shape no
// case covers (which would be a gap in the dispatch).
Partition correspond(const Form1Partition& f);

/* Checks, at one level: every form-(1) partition maps, images are
 * pairwise distinct, match one of F1/F2/F3, stay in C_4 and preserve
 * the sum. Level 7 is reported as skipped (the correspondence is
 * exempt there). */
VerificationReport verify_appendix(int level);

} // namespace hookbias

#endif
