#include "hookbias/appendix.hpp"

#include <map>
#include <stdexcept>

#include "hookbias/blocks.hpp"
#include "hookbias/phi.hpp"

namespace hookbias {

namespace {

using Counts = std::map<int, int>;

Counts counts_of(const Partition& p)
{
    Counts c;
    for (int x : p.parts())
        ++c[x];
    return c;
}

void remove_parts(Counts& c, int v, int m = 1)
{
    auto it = c.find(v);
    if (it == c.end() || it->second < m)
        throw std::logic_error("correspondence tried to consume a missing part " +
                               std::to_string(v));
    it->second -= m;
    if (it->second == 0)
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

// smallest part of p congruent to j mod 12 with k >= 1, or 0
int smallest_high_residue(const Counts& c, int j)
{
    for (const auto& [v, m] : c)
        if (m > 0 && v % 12 == j && v >= 12 + j)
            return v;
    return 0;
}

int smallest_six_part(const Counts& c)
{
    for (const auto& [v, m] : c)
        if (m > 0 && v % 12 == 6)
            return v;
    return 0;
}

// the (iii-b)/(iv-b) rewrite of the run of 1s
void rewrite_ones(Counts& c, std::int64_t a01)
{
    remove_parts(c, 1, static_cast<int>(a01));
    switch (a01 % 3) {
    case 0:
        add_parts(c, 3, static_cast<int>((a01 - 3) / 3));
        add_parts(c, 2);
        add_parts(c, 1);
        break;
    case 1:
        add_parts(c, 3, static_cast<int>((a01 - 1) / 3));
        add_parts(c, 1);
        break;
    default:
        add_parts(c, 3, static_cast<int>((a01 - 5) / 3));
        add_parts(c, 2, 2);
        add_parts(c, 1);
        break;
    }
}

} // namespace

std::string form_label_name(FormLabel f)
{
    switch (f) {
    case FormLabel::F1: return "F1";
    case FormLabel::F2: return "F2";
    case FormLabel::F3: return "F3";
    }
    return "?";
}

bool in_q2(const Partition& p, int level)
{
    if (p.n() != level)
        return false;
    if (alpha(p, 0, 1) == 0 || residue_mult_sum(p, 9) != 0)
        return false;
    return c4_set(level).count(p) != 0;
}

std::optional<FormLabel> form_of(const Partition& p, int level)
{
    if (p.n() != level)
        throw std::invalid_argument("form_of: partition does not sum to the level");
    const std::int64_t a01 = alpha(p, 0, 1);
    const std::int64_t a02 = alpha(p, 0, 2);
    if (residue_mult_sum(p, 9) != 0 && a01 == 1)
        return FormLabel::F2;
    if (a02 == 1 && a01 == 0)
        return FormLabel::F1;
    if (a02 == 1 && a01 >= 1 && residue_mult_sum(p, 9) == 0) {
        std::int64_t bound = weighted_63(p);
        // no 9s, so C_4 membership reduces to a01 < bound; Q_2 then follows
        if ((a01 == bound - 2 || a01 == bound - 1) && a01 < bound)
            return FormLabel::F3;
    }
    return std::nullopt;
}

std::set<Form1Partition> find_form1(int level)
{
    std::set<Form1Partition> out;
    if (level < 0)
        throw std::invalid_argument("find_form1 requires level >= 0");
    for (const Partition& tau : c4_set(level)) {
        if (alpha(tau, 0, 1) == 0 || residue_mult_sum(tau, 9) != 0)
            continue; // not in Q_2
        const std::int64_t a01 = alpha(tau, 0, 1);
        const std::int64_t a03 = alpha(tau, 0, 3);
        if (alpha(tau, 0, 2) != 0 || a03 == 0)
            continue;
        const std::int64_t bound = weighted_63(tau);
        if (a01 != bound - 2 && a01 != bound - 1)
            continue;
        out.insert(Form1Partition{tau, bound, a01 == bound - 2});
    }
    return out;
}

Partition correspond(const Form1Partition& f)
{
    const Partition& p = f.p;
    const int level = p.n();
    if (level == 7)
        throw std::invalid_argument("the correspondence is exempt at level 7");
    const std::int64_t a01 = alpha(p, 0, 1);
    const std::int64_t a03 = alpha(p, 0, 3);
    const std::int64_t bound = weighted_63(p);
    if (alpha(p, 0, 2) != 0 || a03 < 1 || a01 < 1 ||
        (a01 != bound - 2 && a01 != bound - 1))
        throw std::invalid_argument("correspond requires a form-(1) partition");

    Counts c = counts_of(p);

    if (a01 == 1) {
        if (bound == 3) {
            // Case (i-a)
            int v6 = smallest_six_part(c);
            if (v6 != 0) {
                remove_parts(c, v6);
                remove_parts(c, 3);
                add_parts(c, v6 + 3);
                return to_partition(c);
            }
            if (a03 == 1) {
                int v = smallest_high_residue(c, 3);
                if (v == 0)
                    throw std::logic_error("case (i-a) with a03=1 needs a part 12k+3, k >= 1");
                remove_parts(c, v);
                remove_parts(c, 3);
                remove_parts(c, 1);
                add_parts(c, v + 2); // 12k'+5
                add_parts(c, 2);
                return to_partition(c);
            }
            if (a03 == 2) {
                remove_parts(c, 3, 2);
                remove_parts(c, 1);
                add_parts(c, 5);
                add_parts(c, 2);
                return to_partition(c);
            }
            if (a03 == 3) {
                remove_parts(c, 3, 3);
                remove_parts(c, 1);
                add_parts(c, 5);
                add_parts(c, 3);
                add_parts(c, 2);
                return to_partition(c);
            }
            throw std::logic_error("case (i-a): no branch matches " + p.to_string());
        }
        if (bound == 2) {
            // Case (i-b)
            const int delta = a03 == 1 ? 1 : 0;
            int extra3 = 0; // the part 12k1+3, k1 >= 1, present iff delta = 1
            int k1 = 0;
            if (delta == 1) {
                extra3 = smallest_high_residue(c, 3);
                if (extra3 == 0)
                    throw std::logic_error("case (i-b) with a03=1 needs a part 12k+3, k >= 1");
                k1 = extra3 / 12;
            }
            // smallest part greater than 3 not congruent to 3 mod 12
            int ks = 0;
            for (const auto& [v, m] : c)
                if (m > 0 && v > 3 && v % 12 != 3) {
                    ks = v;
                    break;
                }
            if (ks == 0) {
                // only parts are 1, 3 and 12k1+3
                if (delta == 0)
                    throw std::logic_error("case (i-b): (3^2,1) occurs at level 7 only");
                remove_parts(c, extra3);
                add_parts(c, extra3 - 6); // 12(k1-1)+9
                add_parts(c, 2, 3);
                return to_partition(c);
            }
            remove_parts(c, ks);
            remove_parts(c, 3);
            if (delta == 1)
                remove_parts(c, extra3);
            else
                remove_parts(c, 3);
            switch (ks % 12) {
            case 11:
                add_parts(c, ks - 2); // 12k2+9
                add_parts(c, 2, 6 * delta * k1 + 4);
                break;
            case 10:
                add_parts(c, ks - 1);
                add_parts(c, 3);
                add_parts(c, 2, 6 * delta * k1 + 2);
                break;
            case 7:
                add_parts(c, ks + 2);
                add_parts(c, 2, 6 * delta * k1 + 2);
                break;
            case 5:
                add_parts(c, ks + 4);
                add_parts(c, 2, 6 * delta * k1 + 1);
                break;
            case 2:
                add_parts(c, ks - 5); // 12(k2-1)+9
                add_parts(c, 3);
                add_parts(c, 2, 6 * delta * k1 + 4);
                break;
            case 1:
                add_parts(c, ks - 4); // 12(k2-1)+9
                add_parts(c, 2, 6 * delta * k1 + 5);
                break;
            default:
                throw std::logic_error("case (i-b): unexpected smallest part " +
                                       std::to_string(ks));
            }
            return to_partition(c);
        }
        throw std::logic_error("case (i): bound must be 2 or 3, got " + std::to_string(bound));
    }

    if (a01 == 2) {
        // Case (ii)
        remove_parts(c, 1, 2);
        add_parts(c, 2);
        return to_partition(c);
    }

    // a01 >= 3
    const std::int64_t high3 = residue_mult_sum(p, 3) - a03;
    const std::int64_t sixes = residue_mult_sum(p, 6);
    if (a01 == bound - 2) {
        if (a03 >= 2) {
            // Case (iii-a), first branch
            remove_parts(c, 3, 2);
            remove_parts(c, 1);
            add_parts(c, 5);
            add_parts(c, 2);
            return to_partition(c);
        }
        if (high3 >= 1) {
            // Case (iii-a), second branch
            int v = smallest_high_residue(c, 3);
            remove_parts(c, v);
            remove_parts(c, 3);
            remove_parts(c, 1);
            add_parts(c, v + 2);
            add_parts(c, 2);
            return to_partition(c);
        }
        // Case (iii-b): a03 = 1 and no higher 12k+3
        int v6 = smallest_six_part(c);
        if (v6 == 0 || sixes < 2)
            throw std::logic_error("case (iii-b) needs at least two parts 12k+6: " +
                                   p.to_string());
        remove_parts(c, v6);
        remove_parts(c, 3);
        add_parts(c, v6 + 3);
        rewrite_ones(c, a01);
        return to_partition(c);
    }

    // a01 == bound - 1
    if (sixes >= 1) {
        // Case (iv-a)
        int v6 = smallest_six_part(c);
        remove_parts(c, v6);
        add_parts(c, v6 + 1);
        remove_parts(c, 1, static_cast<int>(a01));
        add_parts(c, 2);
        add_parts(c, 1, static_cast<int>(a01 - 3));
        return to_partition(c);
    }
    // Case (iv-b): no 12k+6 parts, so sum(alpha_{k,3}) >= 4
    if (residue_mult_sum(p, 3) < 4)
        throw std::logic_error("case (iv-b) needs at least four parts 12k+3: " + p.to_string());
    int s1 = 0, s2 = 0, s3 = 0;
    {
        std::vector<int> threes;
        for (const auto& [v, m] : c)
            if (v % 12 == 3)
                for (int i = 0; i < m && threes.size() < 3; ++i)
                    threes.push_back(v);
        s1 = threes[0];
        s2 = threes[1];
        s3 = threes[2];
    }
    const int nine = s1 + s2 + s3;
    if (nine % 12 != 9)
        throw std::logic_error("case (iv-b): merged part is not congruent to 9 mod 12");
    remove_parts(c, s1);
    remove_parts(c, s2);
    remove_parts(c, s3);
    add_parts(c, nine);
    rewrite_ones(c, a01);
    return to_partition(c);
}

VerificationReport verify_appendix(int level)
{
    VerificationReport report;
    report.claim_id = "appendix.level";
    report.range = "level=" + std::to_string(level);
    if (level == 7) {
        report.status = VerificationReport::Status::skipped;
        report.skip_reason = "the correspondence is exempt at level 7";
        return report;
    }
    const std::set<Partition> c4 = c4_set(level);
    std::set<Partition> images;
    for (const Form1Partition& f : find_form1(level)) {
        Partition img;
        try {
            img = correspond(f);
        } catch (const std::exception& e) {
            report.add_failure(f.p.to_string(), "a defined correspondence", e.what());
            continue;
        }
        if (img.n() != level)
            report.add_failure(f.p.to_string(), "sum " + std::to_string(level),
                               "sum " + std::to_string(img.n()));
        if (!c4.count(img))
            report.add_failure(f.p.to_string(), "image in C_4(" + std::to_string(level) + ")",
                               img.to_string());
        if (!form_of(img, level))
            report.add_failure(f.p.to_string(), "image of form F1/F2/F3", img.to_string());
        if (!images.insert(img).second)
            report.add_failure(f.p.to_string(), "a distinct image",
                               img.to_string() + " (repeated)");
    }
    report.finish();
    return report;
}

} // namespace hookbias
