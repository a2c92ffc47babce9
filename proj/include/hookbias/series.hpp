#ifndef HOOKBIAS_SERIES_HPP
#define HOOKBIAS_SERIES_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hookbias {

/* Truncated formal power series with exact 64-bit integer coefficients
 * c_0..c_N. The order N is the last coefficient that is known exactly;
 * arithmetic shrinks it to whatever the operands can support. */
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(std::vector<std::int64_t> coeffs, int order);

    static TruncatedSeries zero(int order);
    static TruncatedSeries one(int order);
    // Polynomial from (exponent, coefficient) pairs, e.g. {{0,-1},{3,1},{4,1}}.
    static TruncatedSeries from_terms(const std::vector<std::pair<int, std::int64_t>>& terms,
                                      int order);

    int order() const { return order_; }
    std::int64_t coeff(int i) const;
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<std::int64_t> coeffs_; // size order_ + 1
    int order_ = -1;
};

// 1/(1-q^a) = sum_j q^{ja}, truncated at `order`.
TruncatedSeries geometric_inverse(int a, int order);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/* Shift by k: multiply by q^k. Negative k divides by q^{-k} and requires
 * the discarded low coefficients to be exactly zero; a nonzero low
 * coefficient is a hard error (it means a formula was transcribed
 * wrongly). */
TruncatedSeries series_shift(const TruncatedSeries& s, int k);

/* Laurent-style division by q^m: drops the coefficients of q^0..q^{m-1}
 * whether or not they vanish. This is the meaning of the 1/q^m
 * prefactors in the case generating functions, whose brackets genuinely
 * have nonzero low coefficients (they count blocks too small to pair
 * with any nonnegative index). */
TruncatedSeries series_drop_low(const TruncatedSeries& s, int m);

// Product of 1/(1-q^a) over the given exponents.
TruncatedSeries product_inverse(const std::vector<int>& exponents, int order);

// Number of partitions of n with all parts from `parts` (exact DP;
// independent of the series route above).
std::int64_t restricted_count(int n, const std::vector<int>& parts);

// Cached prefixes of p_a (parts 3,4,5,7) and p_b (parts 3,4,5,6,7).
std::vector<std::int64_t> pa_prefix(int order);
std::vector<std::int64_t> pb_prefix(int order);

// Indices n <= order(s) with a strictly negative coefficient.
std::set<int> negative_support(const TruncatedSeries& s);

/* Case tags for the block-count generating functions. A1b and A3 have
 * no displayed pair; A2 takes the surplus r >= 0 and B2d the exponent
 * m >= 4. */
struct GfA1a {};
struct GfA2 { int r; };
struct GfB1 {};
struct GfB2a {};
struct GfB2b {};
struct GfB2c {};
struct GfB2d { int m; };
using GfCaseSpec = std::variant<GfA1a, GfA2, GfB1, GfB2a, GfB2b, GfB2c, GfB2d>;

std::string gf_case_name(const GfCaseSpec& spec);

// Builds (X3, X4) for the case, both exact to `order`.
std::pair<TruncatedSeries, TruncatedSeries> build_x3_x4(const GfCaseSpec& spec, int order);

} // namespace hookbias

#endif
