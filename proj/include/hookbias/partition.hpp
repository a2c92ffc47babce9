#ifndef HOOKBIAS_PARTITION_HPP
#define HOOKBIAS_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hookbias {

/* A partition is stored canonically as its weakly decreasing list of
 * positive parts; the empty list is the unique partition of 0. Every
 * other representation in the project (multiplicity form, block tables)
 * is a derived view of this one. */
class Partition {
public:
    Partition() = default;

    // Sorts and validates. Rejects any nonpositive element.
    static Partition from_parts(std::vector<int> raw);

    // Trusts the caller that `sorted` is already weakly decreasing and
    // positive; validated in debug builds only.
    static Partition from_sorted(std::vector<int> sorted);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    bool empty() const { return parts_.empty(); }
    std::size_t num_parts() const { return parts_.size(); }

    // Exponent notation, e.g. "(10^2,8^3,5,4,2,1^2)"; "()" for empty.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct MultiplicityPartition {
    // (value, multiplicity) pairs, values strictly decreasing.
    std::vector<std::pair<int, int>> entries;

    Partition expand() const;
    friend bool operator==(const MultiplicityPartition&, const MultiplicityPartition&) = default;
};

MultiplicityPartition to_multiplicity(const Partition& p);

Partition make_partition(std::vector<int> raw);

// True iff no part is divisible by t. Rejects t < 2.
bool is_t_regular(const Partition& p, int t);

/* Visits every t-regular partition of n exactly once, in descending
 * lexicographic order on part lists. t == 0 visits all partitions of n.
 * The callback receives the weakly decreasing part buffer; it must not
 * retain the reference. */
template <class F>
void for_each_t_regular(int n, int t, F&& fn);

template <class F>
void for_each_partition(int n, F&& fn)
{
    for_each_t_regular(n, 0, std::forward<F>(fn));
}

std::vector<Partition> enumerate_t_regular(int n, int t);

// Number of t-regular partitions of n, computed from the Euler product
// prod (1-q^{tk})/(1-q^k); independent of the enumerator above.
std::int64_t count_t_regular(int n, int t);

// -- implementation ------------------------------------------------------

namespace detail {

template <class F>
void partition_rec(int remaining, int max_part, int t, std::vector<int>& buf, F& fn)
{
    if (remaining == 0) {
        fn(const_cast<const std::vector<int>&>(buf));
        return;
    }
    int top = max_part < remaining ? max_part : remaining;
    for (int m = top; m >= 1; --m) {
        if (t >= 2 && m % t == 0)
            continue;
        buf.push_back(m);
        partition_rec(remaining - m, m, t, buf, fn);
        buf.pop_back();
    }
}

void check_enumeration_args(int n, int t);

} // namespace detail

template <class F>
void for_each_t_regular(int n, int t, F&& fn)
{
    detail::check_enumeration_args(n, t);
    std::vector<int> buf;
    buf.reserve(static_cast<std::size_t>(n));
    detail::partition_rec(n, n, t, buf, fn);
}

} // namespace hookbias

#endif
