#include "hookbias/hooks.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "hookbias/checked.hpp"

namespace hookbias {

HookGrid hook_grid(const Partition& p)
{
    const auto& parts = p.parts();
    const int r = static_cast<int>(parts.size());
    // conjugate part lengths: conj[j] = #{i : parts[i] > j}, 0-based column j
    std::vector<int> conj;
    if (r > 0) {
        conj.assign(static_cast<std::size_t>(parts[0]), 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < parts[static_cast<std::size_t>(i)]; ++j)
                ++conj[static_cast<std::size_t>(j)];
    }
    HookGrid g;
    g.rows.resize(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        int len = parts[static_cast<std::size_t>(i)];
        auto& row = g.rows[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(len));
        for (int j = 0; j < len; ++j) {
            int arm = len - (j + 1);
            int leg = conj[static_cast<std::size_t>(j)] - (i + 1);
            row[static_cast<std::size_t>(j)] = arm + leg + 1;
        }
    }
    return g;
}

std::int64_t count_k_hooks_cells(const Partition& p, int k)
{
    if (k < 1)
        throw std::invalid_argument("hook length k must be >= 1");
    std::int64_t count = 0;
    for (const auto& row : hook_grid(p).rows)
        for (int h : row)
            if (h == k)
                ++count;
    return count;
}

std::int64_t count_k_hooks_beta(const std::vector<int>& parts, int k)
{
    if (k < 1)
        throw std::invalid_argument("hook length k must be >= 1");
    const int r = static_cast<int>(parts.size());
    if (r == 0)
        return 0;
    // beta set: {parts[i] + r - (i+1)}, the first-column hook lengths
    const int maxb = parts[0] + r - 1;
    std::vector<char> in(static_cast<std::size_t>(maxb) + 1, 0);
    for (int i = 0; i < r; ++i)
        in[static_cast<std::size_t>(parts[static_cast<std::size_t>(i)] + r - (i + 1))] = 1;
    std::int64_t count = 0;
    for (int b = k; b <= maxb; ++b)
        if (in[static_cast<std::size_t>(b)] && !in[static_cast<std::size_t>(b - k)])
            ++count;
    return count;
}

std::int64_t count_k_hooks_beta(const Partition& p, int k)
{
    return count_k_hooks_beta(p.parts(), k);
}

std::int64_t count_2_hooks_domino(const std::vector<int>& parts)
{
    const std::size_t r = parts.size();
    std::int64_t count = 0;
    auto at = [&](std::size_t i) { return i < r ? parts[i] : 0; };
    for (std::size_t i = 0; i < r; ++i) {
        // horizontal domino at the end of row i
        if (parts[i] - at(i + 1) >= 2)
            ++count;
        // vertical domino at rows (i, i+1); only the last pair of a run
        // of equal parts is removable
        if (parts[i] == at(i + 1) && at(i + 1) > at(i + 2))
            ++count;
    }
    return count;
}

std::int64_t count_2_hooks_domino(const Partition& p)
{
    return count_2_hooks_domino(p.parts());
}

std::int64_t b_tk(int n, int t, int k)
{
    if (k < 1)
        throw std::invalid_argument("hook length k must be >= 1");
    std::int64_t total = 0;
    for_each_t_regular(n, t, [&](const std::vector<int>& parts) {
        total = checked_add(total, count_k_hooks_beta(parts, k));
    });
    return total;
}

BiasTable bias_table(int t, int k, int n_max, int jobs)
{
    if (n_max < 0)
        throw std::invalid_argument("bias_table requires n_max >= 0");
    BiasTable table;
    table.t = t;
    table.k = k;
    std::vector<std::int64_t> values(static_cast<std::size_t>(n_max) + 1, 0);
    if (jobs < 1)
        jobs = 1;
    if (jobs == 1) {
        for (int n = 0; n <= n_max; ++n)
            values[static_cast<std::size_t>(n)] = b_tk(n, t, k);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (int n = w; n <= n_max; n += jobs)
                    values[static_cast<std::size_t>(n)] = b_tk(n, t, k);
            });
        for (auto& th : workers)
            th.join();
    }
    for (int n = 0; n <= n_max; ++n)
        table.values[n] = values[static_cast<std::size_t>(n)];
    return table;
}

} // namespace hookbias
