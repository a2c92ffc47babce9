#ifndef HOOKBIAS_CHECKED_HPP
#define HOOKBIAS_CHECKED_HPP

#include <cstdint>
#include <stdexcept>

namespace hookbias {

/* All counts and series coefficients in this project are exact 64-bit
 * integers. Desk-scale inputs stay far below the limits; these helpers
 * turn a silent wraparound into a loud failure if that ever changes. */

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in checked_add");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in checked_sub");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in checked_mul");
    return r;
}

} // namespace hookbias

#endif
