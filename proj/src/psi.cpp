#include "hookbias/psi.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hookbias/phi.hpp"

namespace hookbias {

namespace {

using Counts = std::map<int, int>; // part value -> multiplicity

Counts counts_of(const Partition& p)
{
    Counts c;
    for (int x : p.parts())
        ++c[x];
    return c;
}

int count_at(const Counts& c, int v)
{
    auto it = c.find(v);
    return it == c.end() ? 0 : it->second;
}

void remove_one(Counts& c, int v)
{
    auto it = c.find(v);
    if (it == c.end() || it->second <= 0)
        throw std::logic_error("remove_one: part " + std::to_string(v) + " not present");
    if (--it->second == 0)
        c.erase(it);
}

void add_parts(Counts& c, int v, int m = 1)
{
    if (m > 0)
        c[v] += m;
}

Partition to_partition(const Counts& c)
{
    std::vector<int> parts;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        for (int i = 0; i < it->second; ++i)
            parts.push_back(it->first);
    return Partition::from_sorted(std::move(parts));
}

} // namespace

bool in_d3(const Partition& p)
{
    return is_t_regular(p, 3) && phi_case(p) == PhiCase::Case3 && alpha(p, 0, 1) <= 1;
}

XiSplit xi_split(const Partition& p)
{
    if (!is_t_regular(p, 3))
        throw std::invalid_argument("xi_split requires a 3-regular partition");
    XiSplit xs;
    std::vector<int> small, rest;
    for (int x : p.parts()) {
        if (x == 7 || x == 5 || x == 4 || x == 2 || x == 1) {
            small.push_back(x);
            xs.xi += x;
        } else {
            rest.push_back(x);
        }
    }
    xs.xi_block = Partition::from_sorted(std::move(small));
    xs.xi_complement = Partition::from_sorted(std::move(rest));
    return xs;
}

std::int64_t r_value(const BlockTable& bt)
{
    std::int64_t r = 0;
    for (const auto& [kj, mult] : bt.alpha) {
        auto [k, j] = kj;
        if (j == 8)
            r += (mult == 1) ? -1 : 2 * mult - 3;
        else if (j == 4 && k >= 1)
            r += mult;
    }
    return r;
}

std::string psi_case_name(PsiCaseTag tag)
{
    switch (tag) {
    case PsiCaseTag::A1a: return "A1a";
    case PsiCaseTag::A1b: return "A1b";
    case PsiCaseTag::A2: return "A2";
    case PsiCaseTag::A3: return "A3";
    case PsiCaseTag::B1: return "B1";
    case PsiCaseTag::B2a: return "B2a";
    case PsiCaseTag::B2b: return "B2b";
    case PsiCaseTag::B2c: return "B2c";
    case PsiCaseTag::B2d: return "B2d";
    }
    return "?";
}

PsiCase psi_case_of(const Partition& p)
{
    if (!in_d3(p))
        throw std::invalid_argument("psi case classification requires a member of D_3(n)");
    BlockTable bt = decompose(p);
    std::int64_t r = r_value(bt);
    bool has8 = residue_mult_sum(p, 8) != 0;
    if (has8) {
        if (r == -1) {
            bool high4 = false;
            for (const auto& [kj, mult] : bt.alpha)
                if (kj.second == 4 && kj.first >= 1 && mult > 0)
                    high4 = true;
            return {high4 ? PsiCaseTag::A1b : PsiCaseTag::A1a, r};
        }
        if (r <= -2)
            return {PsiCaseTag::A3, r};
        return {PsiCaseTag::A2, r};
    }
    if (r == 0)
        return {PsiCaseTag::B1, r};
    if (r == 1)
        return {PsiCaseTag::B2a, r};
    if (r == 2)
        return {PsiCaseTag::B2b, r};
    if (r == 3)
        return {PsiCaseTag::B2c, r};
    return {PsiCaseTag::B2d, r};
}

std::pair<Partition, std::int64_t> psi_high(const Partition& p)
{
    if (!is_t_regular(p, 3))
        throw std::invalid_argument("psi_high requires a 3-regular partition");
    Counts out;
    std::int64_t r = 0;
    Counts highs;
    for (int x : p.parts())
        if (x >= 8)
            ++highs[x];
    for (const auto& [v, m] : highs) {
        switch (v % 12) {
        case 8:
            add_parts(out, v + 1);
            add_parts(out, v - 2, m - 1);
            r += (m == 1) ? -1 : 2 * m - 3;
            break;
        case 4: // v >= 16 here
            add_parts(out, v - 1, m);
            r += m;
            break;
        default:
            add_parts(out, v, m);
            break;
        }
    }
    return {to_partition(out), r};
}

Partition psi_xi_42a(int alpha02, std::int64_t r)
{
    if (alpha02 < 1)
        throw std::invalid_argument("psi_xi_42a requires alpha02 >= 1");
    if (r < -1)
        throw std::domain_error("psi_xi_42a requires r >= -1 (r = 2s-1 or 2s with s >= 0)");
    const bool odd = (r % 2 != 0);
    const std::int64_t s = odd ? (r + 1) / 2 : r / 2;
    const std::int64_t t = alpha02 + s;
    const std::int64_t md = t % 3;
    std::int64_t threes = 0, ones = 0;
    bool five = false;
    if (odd) {
        if (md == 1)
            threes = 2 * (t + 2) / 3 - 1, ones = 2;
        else if (md == 2)
            threes = 2 * (t + 1) / 3, ones = 1;
        else
            threes = 2 * t / 3 + 1;
    } else {
        if (md == 1)
            threes = 2 * (t + 2) / 3;
        else if (md == 2)
            five = true, threes = 2 * (t + 1) / 3 - 1;
        else
            threes = 2 * t / 3 + 1, ones = 1;
    }
    std::vector<int> parts;
    if (five)
        parts.push_back(5);
    parts.insert(parts.end(), static_cast<std::size_t>(threes), 3);
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    Partition out = Partition::from_sorted(std::move(parts));
    if (out.n() != 4 + 2 * alpha02 + r)
        throw std::logic_error("psi_xi_42a branch does not preserve the sum");
    return out;
}

namespace {

// smallest part congruent to j mod 12 with value >= 12+j, or 0
int smallest_high_with_residue(const Partition& p, int j)
{
    int best = 0;
    for (int x : p.parts())
        if (x % 12 == j && x >= 12 + j && (best == 0 || x < best))
            best = x;
    return best;
}

Partition merge(const Partition& a, const Partition& b)
{
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition::from_parts(std::move(parts));
}

} // namespace

Partition psi_special_xi0_A1a(const Partition& p)
{
    XiSplit xs = xi_split(p);
    if (xs.xi != 0)
        throw std::invalid_argument("A1a Xi=0 rule requires an empty Xi-block");
    int v = smallest_high_with_residue(p, 5);
    if (v == 0)
        throw std::invalid_argument("A1a Xi=0 rule requires a part 12k+5 with k >= 1");
    Counts c = counts_of(xs.xi_complement);
    remove_one(c, v);
    auto [high, r] = psi_high(to_partition(c));
    (void)r;
    Counts out = counts_of(high);
    add_parts(out, v - 10); // 12(k-1)+7
    add_parts(out, 9);
    return to_partition(out);
}

Partition psi_special_xi0_A1b(const Partition& p)
{
    XiSplit xs = xi_split(p);
    if (xs.xi != 0)
        throw std::invalid_argument("A1b Xi=0 rule requires an empty Xi-block");
    if (smallest_high_with_residue(p, 5) != 0)
        throw std::invalid_argument("A1b Xi=0 rule applies only without parts 12k+5, k >= 1");
    int v = smallest_high_with_residue(p, 2);
    if (v == 0)
        throw std::invalid_argument("A1b Xi=0 rule requires a part 12k+2 with k >= 1");
    Counts c = counts_of(xs.xi_complement);
    remove_one(c, v);
    auto [high, r] = psi_high(to_partition(c));
    (void)r;
    Counts out = counts_of(high);
    if (v == 14) {
        add_parts(out, 9);
        add_parts(out, 3);
        add_parts(out, 1);
    } else {
        add_parts(out, v - 15); // 12(k-2)+11
        add_parts(out, 9);
        add_parts(out, 3);
        add_parts(out, 1, 2);
    }
    return to_partition(out);
}

namespace {

bool is_42a_block(const Partition& xi_block, int& alpha02)
{
    Counts c = counts_of(xi_block);
    alpha02 = count_at(c, 2);
    return count_at(c, 4) == 1 && alpha02 >= 1 && count_at(c, 7) == 0 &&
           count_at(c, 5) == 0 && count_at(c, 1) == 0;
}

std::optional<Partition> try_a3(const Partition& p)
{
    BlockTable bt = decompose(p);
    std::int64_t r = r_value(bt);
    if (r > -2)
        throw std::invalid_argument("case A3 requires r <= -2");
    // largest part 12l+8 of multiplicity one
    int v = 0;
    Counts all = counts_of(p);
    for (const auto& [value, mult] : all)
        if (value % 12 == 8 && mult == 1 && value > v)
            v = value;
    if (v == 0)
        throw std::logic_error("r <= -2 forces a part 12l+8 of multiplicity one");
    std::int64_t target = v + r + 1; // 12l+8+r+1 = 9a+b
    if (target < 0)
        throw std::logic_error("A3 target must be nonnegative (r >= -(l+1))");
    std::int64_t a = target / 9;
    std::int64_t b = target % 9;

    XiSplit xs = xi_split(p);
    Partition xi_to;
    int alpha02 = 0;
    if (is_42a_block(xs.xi_block, alpha02))
        xi_to = psi_xi_42a(alpha02, b);
    else if (xs.xi == 0 && b == 0)
        xi_to = Partition();
    else
        return std::nullopt; // the image Xi-block is not pinned down

    Counts c = counts_of(xs.xi_complement);
    remove_one(c, v);
    auto [high, hr] = psi_high(to_partition(c));
    (void)hr;
    Counts out = counts_of(high);
    add_parts(out, 9, static_cast<int>(a));
    return merge(to_partition(out), xi_to);
}

std::optional<Partition> try_b2a(const Partition& p)
{
    if (residue_mult_sum(p, 8) != 0 || r_value(decompose(p)) != 1)
        throw std::invalid_argument("case B2a requires no 8-parts and r = 1");
    XiSplit xs = xi_split(p);
    if (xs.xi != 0 && xs.xi != 1)
        throw std::invalid_argument("the B2a pairing rule applies for Xi in {0,1}");
    int v = smallest_high_with_residue(p, 4); // the unique 12k+4, k >= 1
    if (v == 0)
        throw std::logic_error("r = 1 without 8-parts forces a part 12k+4, k >= 1");
    Counts c = counts_of(p);
    if (count_at(c, v - 2) == 0)
        return std::nullopt; // no companion 12k+2
    remove_one(c, v);
    remove_one(c, v - 2);
    add_parts(c, v - 1, 2);
    return to_partition(c);
}

std::optional<Partition> try_b2b(const Partition& p)
{
    if (residue_mult_sum(p, 8) != 0 || r_value(decompose(p)) != 2)
        throw std::invalid_argument("case B2b requires no 8-parts and r = 2");
    XiSplit xs = xi_split(p);
    if (xs.xi != 0)
        throw std::invalid_argument("the B2b pairing rule applies for Xi = 0");
    Counts c = counts_of(p);
    std::vector<std::pair<int, int>> fours; // (value, mult), 12k+4 with k >= 1
    for (const auto& [value, mult] : c)
        if (value % 12 == 4 && value >= 16)
            fours.emplace_back(value, mult);
    int absorbed = 0;
    for (auto [v, m] : fours) {
        if (count_at(c, v - 2) > 0) {
            // (12k+4)^m with one 12k+2 -> (12k+3)^{m+1}
            c.erase(v);
            remove_one(c, v - 2);
            add_parts(c, v - 1, m + 1);
            ++absorbed;
        } else {
            c.erase(v);
            add_parts(c, v - 1, m);
        }
    }
    if (absorbed == 0)
        return std::nullopt; // leftover 2 leaves the image Xi-block ambiguous
    add_parts(c, 1, 2 - absorbed);
    return to_partition(c);
}

} // namespace

Partition psi_special_A3(const Partition& p)
{
    auto img = try_a3(p);
    if (!img)
        throw std::domain_error("A3 image is undetermined for this Xi-block");
    return *img;
}

Partition psi_special_B2a(const Partition& p)
{
    auto img = try_b2a(p);
    if (!img)
        throw std::domain_error("B2a pairing rule needs a companion 12k+2");
    return *img;
}

Partition psi_special_B2b(const Partition& p)
{
    auto img = try_b2b(p);
    if (!img)
        throw std::domain_error("B2b pairing rule needs at least one companion 12k+2");
    return *img;
}

std::optional<Partition> psi(const Partition& p)
{
    if (!in_d3(p))
        throw std::invalid_argument("psi requires a member of D_3(n)");
    BlockTable bt = decompose(p);
    const std::int64_t r = r_value(bt);
    const XiSplit xs = xi_split(p);
    const bool has8 = residue_mult_sum(p, 8) != 0;

    if (r <= -2)
        return try_a3(p);

    int alpha02 = 0;
    if (is_42a_block(xs.xi_block, alpha02)) {
        auto [high, hr] = psi_high(p);
        return merge(high, psi_xi_42a(alpha02, hr));
    }

    if (has8 && r == -1 && xs.xi == 0) {
        if (smallest_high_with_residue(p, 5) != 0)
            return psi_special_xi0_A1a(p);
        if (smallest_high_with_residue(p, 2) != 0 &&
            psi_case_of(p).tag == PsiCaseTag::A1b)
            return psi_special_xi0_A1b(p);
        return std::nullopt; // A1a with nothing to absorb the deficit
    }

    if (!has8 && r == 1 && (xs.xi == 0 || xs.xi == 1))
        return try_b2a(p);
    if (!has8 && r == 2 && xs.xi == 0)
        return try_b2b(p);

    return std::nullopt;
}

std::string class_label_name(ClassLabel c)
{
    switch (c) {
    case ClassLabel::CL1: return "CL1";
    case ClassLabel::CL2: return "CL2";
    case ClassLabel::CL3: return "CL3";
    case ClassLabel::CL4: return "CL4";
    case ClassLabel::CL5: return "CL5";
    case ClassLabel::CL6: return "CL6";
    }
    return "?";
}

std::vector<ClassLabel> classes_matching(const Partition& p)
{
    std::vector<ClassLabel> out;
    const std::int64_t a01 = alpha(p, 0, 1);
    const std::int64_t a02 = alpha(p, 0, 2);
    const std::int64_t w63 = weighted_63(p);
    if (residue_mult_sum(p, 9) != 0) {
        if ((a01 == 0 && a02 == 0) || a01 == 1 || a01 == 2)
            out.push_back(ClassLabel::CL1);
        return out;
    }
    const std::int64_t s63 = residue_mult_sum(p, 6) + residue_mult_sum(p, 3);
    if (a01 == 0 && a02 == 0 && s63 != 0)
        out.push_back(ClassLabel::CL2);
    if (a02 == 0 && a01 == 1 && w63 > 1)
        out.push_back(ClassLabel::CL3);
    if (a02 == 0 && a01 == 2 && w63 > 2)
        out.push_back(ClassLabel::CL4);
    if (a02 != 0 && a01 == 1 && w63 > 3)
        out.push_back(ClassLabel::CL5);
    if (a02 != 0 && a01 == 2 && w63 > 4)
        out.push_back(ClassLabel::CL6);
    return out;
}

std::optional<ClassLabel> class_of(const Partition& p)
{
    auto matches = classes_matching(p);
    if (matches.size() == 1)
        return matches.front();
    return std::nullopt;
}

namespace {

/* Row images contain the transformed complement; the leftover parts are
 * the image Xi-block, drawn from {7,6,5,3,2,1}. In the A cases 6 never
 * appears there (a 6 can only arrive from an 8-run of the complement,
 * and those 6s travel with the complement). */
bool row_match(const Partition& mu, const Partition& psi_c, bool a_case)
{
    Counts cm = counts_of(mu);
    Counts cp = counts_of(psi_c);
    for (const auto& [v, m] : cp)
        if (count_at(cm, v) < m)
            return false;
    for (const auto& [v, m] : cm) {
        int leftover = m - count_at(cp, v);
        if (leftover <= 0)
            continue;
        if (v >= 8)
            return false;
        if (v == 6 && a_case)
            return false;
    }
    return true;
}

void sort_desc(std::vector<Partition>& v)
{
    std::sort(v.begin(), v.end(), std::greater<Partition>());
}

} // namespace

Table1 generate_table1()
{
    const int n = 22;
    CompensationSets sets = build_sets(n);
    std::set<Partition> d4;
    for (const Partition& p : sets.c4)
        if (!sets.q.count(p))
            d4.insert(p);

    std::map<std::vector<int>, std::vector<Partition>, std::greater<std::vector<int>>> groups;
    for (const Partition& p : sets.c3_1) {
        XiSplit xs = xi_split(p);
        if (xs.xi_complement.empty())
            continue; // the table covers largest part > 7
        groups[xs.xi_complement.parts()].push_back(p);
    }

    Table1 table;
    std::set<Partition> matched;
    for (auto& [cparts, members] : groups) {
        /* B1 partitions without the part 2 lose no 2-hooks and stay out
         * of the mapping; a group drops out only when that covers all of
         * its members. */
        bool keep = false;
        for (const Partition& m : members) {
            bool b1 = residue_mult_sum(m, 8) == 0 && r_value(decompose(m)) == 0;
            if (!b1 || alpha(m, 0, 2) != 0) {
                keep = true;
                break;
            }
        }
        if (!keep)
            continue;
        Table1Row row;
        row.complement = Partition::from_sorted(cparts);
        row.preimages = members;
        sort_desc(row.preimages);
        auto [psi_c, r] = psi_high(row.complement);
        (void)r;
        bool a_case = residue_mult_sum(row.complement, 8) != 0;
        for (const Partition& mu : d4)
            if (row_match(mu, psi_c, a_case))
                row.images.push_back(mu);
        sort_desc(row.images);
        if (!row.images.empty())
            row.psi_complement = psi_c;
        for (const Partition& mu : row.images)
            matched.insert(mu);
        table.rows.push_back(std::move(row));
    }
    // the table covers largest part > 7; smaller D_4 partitions pair with
    // the small-part regime outside it
    for (const Partition& mu : d4)
        if (!matched.count(mu) && !mu.empty() && mu.parts().front() > 7)
            table.extras.push_back(mu);
    sort_desc(table.extras);
    return table;
}

namespace {

Partition mk(std::vector<int> parts)
{
    return Partition::from_parts(std::move(parts));
}

Table1Row grow(Partition c, std::vector<Partition> pre, std::optional<Partition> pc,
               std::vector<Partition> img)
{
    Table1Row row{std::move(c), std::move(pre), std::move(pc), std::move(img)};
    sort_desc(row.preimages);
    sort_desc(row.images);
    return row;
}

} // namespace

const Table1& golden_table1()
{
    static const Table1 table = [] {
        Table1 t;
        t.rows.push_back(grow(mk({20}), {mk({20, 2})}, mk({21}), {mk({21, 1})}));
        t.rows.push_back(grow(mk({16}),
                              {mk({16, 5, 1}), mk({16, 4, 2}), mk({16, 2, 2, 2})},
                              mk({15}),
                              {mk({15, 7}), mk({15, 6, 1}), mk({15, 3, 3, 1})}));
        t.rows.push_back(grow(mk({14, 8}), {mk({14, 8})}, std::nullopt, {}));
        t.rows.push_back(grow(mk({14}), {mk({14, 4, 4}), mk({14, 4, 2, 2})}, mk({14}),
                              {mk({14, 5, 3})}));
        t.rows.push_back(grow(mk({13}), {mk({13, 5, 4}), mk({13, 4, 2, 2, 1})}, mk({13}),
                              {mk({13, 6, 3}), mk({13, 3, 3, 3})}));
        t.rows.push_back(grow(mk({11, 8}), {mk({11, 8, 2, 1})}, mk({11, 9}),
                              {mk({11, 9, 1, 1})}));
        t.rows.push_back(grow(mk({11}),
                              {mk({11, 5, 4, 2}), mk({11, 4, 4, 2, 1}), mk({11, 4, 2, 2, 2, 1})},
                              mk({11}),
                              {mk({11, 6, 5}), mk({11, 6, 3, 1, 1}), mk({11, 5, 3, 3}),
                               mk({11, 3, 3, 3, 1, 1})}));
        t.rows.push_back(grow(mk({10, 8}), {mk({10, 8, 2, 2})}, mk({10, 9}),
                              {mk({10, 9, 3}), mk({10, 9, 2, 1})}));
        t.rows.push_back(grow(mk({10}),
                              {mk({10, 5, 4, 2, 1}), mk({10, 4, 4, 2, 2}), mk({10, 4, 2, 2, 2, 2})},
                              mk({10}),
                              {mk({10, 6, 6}), mk({10, 6, 5, 1}), mk({10, 6, 3, 3}),
                               mk({10, 5, 3, 3, 1}), mk({10, 3, 3, 3, 3})}));
        t.rows.push_back(grow(mk({8, 8}),
                              {mk({8, 8, 5, 1}), mk({8, 8, 4, 2}), mk({8, 8, 2, 2, 2})},
                              mk({9, 6}),
                              {mk({9, 7, 6}), mk({9, 6, 5, 1, 1}), mk({9, 6, 3, 3, 1}),
                               mk({9, 6, 3, 2, 1, 1}), mk({9, 6, 2, 2, 2, 1})}));
        t.rows.push_back(grow(
            mk({8}),
            {mk({8, 7, 5, 2}), mk({8, 7, 4, 2, 1}), mk({8, 7, 2, 2, 2, 1}), mk({8, 5, 5, 4}),
             mk({8, 5, 5, 2, 2}), mk({8, 5, 4, 4, 1}), mk({8, 5, 4, 2, 2, 1}),
             mk({8, 5, 2, 2, 2, 2, 1}), mk({8, 4, 4, 4, 2}), mk({8, 4, 4, 2, 2, 2}),
             mk({8, 4, 2, 2, 2, 2, 2}), mk({8, 2, 2, 2, 2, 2, 2, 2})},
            mk({9}),
            /* The printed row stops at (9,3,2^4,1^2); the subset computed
             * from the definitions also contains (9,2^6,1), which satisfies
             * every stated condition (in C_4, outside Q, class CL1, no 6).
             * The golden copy carries the full subset. */
            {mk({9, 7, 5, 1}), mk({9, 7, 3, 3}), mk({9, 7, 3, 2, 1}), mk({9, 7, 2, 2, 1, 1}),
             mk({9, 5, 5, 3}), mk({9, 5, 5, 2, 1}), mk({9, 5, 3, 3, 1, 1}),
             mk({9, 5, 3, 2, 2, 1}), mk({9, 5, 2, 2, 2, 1, 1}), mk({9, 3, 3, 3, 3, 1}),
             mk({9, 3, 3, 3, 2, 1, 1}), mk({9, 3, 3, 2, 2, 2, 1}),
             mk({9, 3, 2, 2, 2, 2, 1, 1}), mk({9, 2, 2, 2, 2, 2, 2, 1})}));
        t.extras = {mk({19, 3}), mk({18, 3, 1}), mk({13, 9}), mk({9, 9, 2, 1, 1}),
                    mk({9, 9, 3, 1}), mk({9, 6, 6, 1})};
        sort_desc(t.extras);
        return t;
    }();
    return table;
}

std::string render_table1(const Table1& t)
{
    std::ostringstream os;
    os << "Xi-complement | preimages in D_3(22) | Psi(Xi-complement) | images in D_4(22)\n";
    auto join = [](const std::vector<Partition>& ps) {
        std::string s;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (i)
                s += ", ";
            s += ps[i].to_string();
        }
        return s.empty() ? std::string("-") : s;
    };
    for (const Table1Row& row : t.rows) {
        os << row.complement.to_string() << " | " << join(row.preimages) << " | "
           << (row.psi_complement ? row.psi_complement->to_string() : std::string("-"))
           << " | " << join(row.images) << '\n';
    }
    os << "unmatched extras | - | - | " << join(t.extras) << '\n';
    return os.str();
}

} // namespace hookbias
