#include "hookbias/partition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hookbias/checked.hpp"
#include "hookbias/series.hpp"

namespace hookbias {

Partition Partition::from_parts(std::vector<int> raw)
{
    for (int x : raw)
        if (x <= 0)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(raw.begin(), raw.end(), std::greater<int>());
    return from_sorted(std::move(raw));
}

Partition Partition::from_sorted(std::vector<int> sorted)
{
    Partition p;
    std::int64_t sum = 0;
    for (int x : sorted)
        sum = checked_add(sum, x);
    if (sum > INT32_MAX)
        throw std::invalid_argument("partition sum out of range");
#ifndef NDEBUG
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        assert(sorted[i] >= sorted[i + 1] && sorted[i + 1] >= 1);
    if (!sorted.empty())
        assert(sorted.back() >= 1);
#endif
    p.parts_ = std::move(sorted);
    p.n_ = static_cast<int>(sum);
    return p;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    std::size_t i = 0;
    bool first = true;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        if (!first)
            os << ',';
        first = false;
        os << parts_[i];
        if (j - i > 1)
            os << '^' << (j - i);
        i = j;
    }
    os << ')';
    return os.str();
}

Partition make_partition(std::vector<int> raw)
{
    return Partition::from_parts(std::move(raw));
}

MultiplicityPartition to_multiplicity(const Partition& p)
{
    MultiplicityPartition m;
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        m.entries.emplace_back(parts[i], static_cast<int>(j - i));
        i = j;
    }
    return m;
}

Partition MultiplicityPartition::expand() const
{
    std::vector<int> parts;
    for (auto [value, mult] : entries) {
        if (value <= 0 || mult <= 0)
            throw std::invalid_argument("multiplicity entries must be positive");
        for (int i = 0; i < mult; ++i)
            parts.push_back(value);
    }
    return Partition::from_sorted(std::move(parts));
}

bool is_t_regular(const Partition& p, int t)
{
    if (t < 2)
        throw std::invalid_argument("t-regularity requires t >= 2");
    for (int x : p.parts())
        if (x % t == 0)
            return false;
    return true;
}

namespace detail {

void check_enumeration_args(int n, int t)
{
    if (n < 0)
        throw std::invalid_argument("partition enumeration requires n >= 0");
    if (t != 0 && t < 2)
        throw std::invalid_argument("t-regular enumeration requires t >= 2");
}

} // namespace detail

std::vector<Partition> enumerate_t_regular(int n, int t)
{
    std::vector<Partition> out;
    for_each_t_regular(n, t, [&](const std::vector<int>& parts) {
        out.push_back(Partition::from_sorted(parts));
    });
    return out;
}

std::int64_t count_t_regular(int n, int t)
{
    detail::check_enumeration_args(n, t);
    if (t == 0)
        throw std::invalid_argument("count_t_regular requires t >= 2");
    // prod (1-q^{tk})/(1-q^k) = prod over k not divisible by t of 1/(1-q^k)
    TruncatedSeries s = TruncatedSeries::one(n);
    for (int k = 1; k <= n; ++k)
        if (k % t != 0)
            s = series_mul(s, geometric_inverse(k, n));
    return s.coeff(n);
}

} // namespace hookbias
