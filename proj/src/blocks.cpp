#include "hookbias/blocks.hpp"

#include <stdexcept>

#include "hookbias/checked.hpp"
#include "hookbias/hooks.hpp"

namespace hookbias {

BlockId block_of_part(int value)
{
    if (value <= 0)
        throw std::invalid_argument("block_of_part requires a positive part");
    int j = value % 12;
    if (j == 0)
        throw std::invalid_argument("parts divisible by 12 belong to no block");
    int level = j <= 4 ? 1 : (j <= 8 ? 2 : 3);
    return BlockId{level, value / 12};
}

std::string block_name(const BlockId& id)
{
    return std::to_string(id.level) + "_" + std::to_string(id.k) + "-block";
}

std::int64_t alpha(const Partition& p, int k, int j)
{
    int value = 12 * k + j;
    std::int64_t m = 0;
    for (int x : p.parts())
        if (x == value)
            ++m;
    return m;
}

std::int64_t residue_mult_sum(const Partition& p, int j)
{
    std::int64_t m = 0;
    for (int x : p.parts())
        if (x % 12 == j)
            ++m;
    return m;
}

std::int64_t weighted_63(const Partition& p)
{
    std::int64_t m = 0;
    for (int x : p.parts()) {
        if (x % 12 == 6)
            m += 2;
        else if (x % 12 == 3)
            m += 1;
    }
    return m;
}

int BlockTable::alpha_at(int k, int j) const
{
    auto it = alpha.find({k, j});
    return it == alpha.end() ? 0 : it->second;
}

std::int64_t BlockTable::sum_over_k(int j) const
{
    std::int64_t s = 0;
    for (const auto& [kj, mult] : alpha)
        if (kj.second == j)
            s += mult;
    return s;
}

BlockTable decompose(const Partition& p)
{
    if (!is_t_regular(p, 3))
        throw std::invalid_argument("decompose requires a 3-regular partition");
    BlockTable bt;
    for (int x : p.parts())
        ++bt.alpha[{x / 12, x % 12}];
    return bt;
}

Partition recompose(const BlockTable& bt)
{
    std::vector<int> parts;
    for (const auto& [kj, mult] : bt.alpha) {
        if (mult < 0)
            throw std::invalid_argument("recompose requires nonnegative multiplicities");
        int value = 12 * kj.first + kj.second;
        for (int i = 0; i < mult; ++i)
            parts.push_back(value);
    }
    return Partition::from_parts(std::move(parts));
}

std::int64_t BlockHookProfile::total() const
{
    std::int64_t s = 0;
    for (const auto& [id, h] : blocks)
        s = checked_add(s, h.count);
    return s;
}

BlockHookProfile block_two_hooks(const Partition& p)
{
    if (!is_t_regular(p, 3))
        throw std::invalid_argument("block_two_hooks requires a 3-regular partition");
    BlockHookProfile profile;
    const auto& parts = p.parts();
    const std::size_t r = parts.size();
    auto at = [&](std::size_t i) { return i < r ? parts[i] : 0; };
    for (std::size_t i = 0; i < r; ++i) {
        BlockId id = block_of_part(parts[i]);
        if (parts[i] - at(i + 1) >= 2) {
            auto& h = profile.blocks[id];
            h.count += 1;
            // boundary when the next row's part (or nothing) lies outside
            // this block
            if (i + 1 >= r || block_of_part(parts[i + 1]) != id)
                h.boundary = true;
        }
        if (parts[i] == at(i + 1) && at(i + 1) > at(i + 2))
            profile.blocks[id].count += 1;
    }
    return profile;
}

std::map<BlockId, std::int64_t> block_two_hooks_isolated(const Partition& p)
{
    std::map<BlockId, std::int64_t> out;
    const auto& parts = p.parts();
    std::size_t i = 0;
    // parts of one block are contiguous in the sorted list
    while (i < parts.size()) {
        BlockId id = block_of_part(parts[i]);
        std::size_t j = i;
        while (j < parts.size() && block_of_part(parts[j]) == id)
            ++j;
        std::vector<int> piece(parts.begin() + static_cast<std::ptrdiff_t>(i),
                               parts.begin() + static_cast<std::ptrdiff_t>(j));
        out[id] = count_2_hooks_domino(piece);
        i = j;
    }
    return out;
}

} // namespace hookbias
