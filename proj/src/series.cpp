#include "hookbias/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hookbias/checked.hpp"

namespace hookbias {

TruncatedSeries::TruncatedSeries(std::vector<std::int64_t> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries TruncatedSeries::zero(int order)
{
    return TruncatedSeries(std::vector<std::int64_t>(), order);
}

TruncatedSeries TruncatedSeries::one(int order)
{
    TruncatedSeries s = zero(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_terms(
    const std::vector<std::pair<int, std::int64_t>>& terms, int order)
{
    TruncatedSeries s = zero(order);
    for (auto [e, c] : terms) {
        if (e < 0)
            throw std::invalid_argument("polynomial exponents must be >= 0");
        if (e <= order)
            s.coeffs_[static_cast<std::size_t>(e)] =
                checked_add(s.coeffs_[static_cast<std::size_t>(e)], c);
    }
    return s;
}

std::int64_t TruncatedSeries::coeff(int i) const
{
    if (i < 0)
        return 0;
    if (i > order_)
        throw std::out_of_range("coefficient index beyond truncation order");
    return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries geometric_inverse(int a, int order)
{
    if (a < 1)
        throw std::invalid_argument("geometric_inverse requires a >= 1");
    std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1, 0);
    for (int j = 0; j <= order; j += a)
        c[static_cast<std::size_t>(j)] = 1;
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    int order = std::min(a.order(), b.order());
    std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        c[static_cast<std::size_t>(i)] = checked_add(a.coeff(i), b.coeff(i));
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    int order = std::min(a.order(), b.order());
    std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        c[static_cast<std::size_t>(i)] = checked_sub(a.coeff(i), b.coeff(i));
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    int order = std::min(a.order(), b.order());
    std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1, 0);
    for (int i = 0; i <= order; ++i) {
        std::int64_t ai = a.coeff(i);
        if (ai == 0)
            continue;
        for (int j = 0; i + j <= order; ++j) {
            std::int64_t bj = b.coeff(j);
            if (bj == 0)
                continue;
            auto& slot = c[static_cast<std::size_t>(i + j)];
            slot = checked_add(slot, checked_mul(ai, bj));
        }
    }
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries series_shift(const TruncatedSeries& s, int k)
{
    if (k >= 0) {
        int order = s.order() + k;
        std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1, 0);
        for (int i = 0; i <= s.order(); ++i)
            c[static_cast<std::size_t>(i + k)] = s.coeff(i);
        return TruncatedSeries(std::move(c), order);
    }
    int m = -k;
    if (m > s.order())
        throw std::invalid_argument("negative shift exceeds truncation order");
    for (int i = 0; i < m; ++i)
        if (s.coeff(i) != 0)
            throw std::domain_error("negative shift would discard a nonzero coefficient");
    int order = s.order() - m;
    std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        c[static_cast<std::size_t>(i)] = s.coeff(i + m);
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries series_drop_low(const TruncatedSeries& s, int m)
{
    if (m < 0)
        throw std::invalid_argument("series_drop_low requires m >= 0");
    if (m > s.order())
        throw std::invalid_argument("drop exceeds truncation order");
    int order = s.order() - m;
    std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        c[static_cast<std::size_t>(i)] = s.coeff(i + m);
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries product_inverse(const std::vector<int>& exponents, int order)
{
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int a : exponents)
        s = series_mul(s, geometric_inverse(a, order));
    return s;
}

std::int64_t restricted_count(int n, const std::vector<int>& parts)
{
    if (n < 0)
        return 0;
    if (parts.empty())
        throw std::invalid_argument("restricted_count requires a nonempty part set");
    for (int a : parts)
        if (a < 1)
            throw std::invalid_argument("restricted_count parts must be positive");
    std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int a : parts)
        for (int i = a; i <= n; ++i)
            ways[static_cast<std::size_t>(i)] = checked_add(
                ways[static_cast<std::size_t>(i)], ways[static_cast<std::size_t>(i - a)]);
    return ways[static_cast<std::size_t>(n)];
}

namespace {

std::vector<std::int64_t> restricted_prefix(int order, const std::vector<int>& parts)
{
    std::vector<std::int64_t> ways(static_cast<std::size_t>(order) + 1, 0);
    ways[0] = 1;
    for (int a : parts)
        for (int i = a; i <= order; ++i)
            ways[static_cast<std::size_t>(i)] = checked_add(
                ways[static_cast<std::size_t>(i)], ways[static_cast<std::size_t>(i - a)]);
    return ways;
}

} // namespace

std::vector<std::int64_t> pa_prefix(int order)
{
    return restricted_prefix(order, {3, 4, 5, 7});
}

std::vector<std::int64_t> pb_prefix(int order)
{
    return restricted_prefix(order, {3, 4, 5, 6, 7});
}

std::set<int> negative_support(const TruncatedSeries& s)
{
    std::set<int> out;
    for (int i = 0; i <= s.order(); ++i)
        if (s.coeff(i) < 0)
            out.insert(i);
    return out;
}

std::string gf_case_name(const GfCaseSpec& spec)
{
    struct Namer {
        std::string operator()(const GfA1a&) const { return "A1a"; }
        std::string operator()(const GfA2& a) const { return "A2(r=" + std::to_string(a.r) + ")"; }
        std::string operator()(const GfB1&) const { return "B1"; }
        std::string operator()(const GfB2a&) const { return "B2a"; }
        std::string operator()(const GfB2b&) const { return "B2b"; }
        std::string operator()(const GfB2c&) const { return "B2c"; }
        std::string operator()(const GfB2d& d) const { return "B2d(m=" + std::to_string(d.m) + ")"; }
    };
    return std::visit(Namer{}, spec);
}

namespace {

using Terms = std::vector<std::pair<int, std::int64_t>>;

TruncatedSeries poly_times_product(const Terms& terms, const std::vector<int>& denom, int order)
{
    return series_mul(TruncatedSeries::from_terms(terms, order), product_inverse(denom, order));
}

/* The Xi-blocks are (7^a,5^b,4^c,2^d,1^e) with e in {0,1}, so their
 * counting function is (1+q)/((1-q^2)(1-q^4)(1-q^5)(1-q^7)) in every
 * case; B1 additionally pins a 4 and a 2 as parts. */
TruncatedSeries x3_generic(int order)
{
    return poly_times_product({{0, 1}, {1, 1}}, {2, 4, 5, 7}, order);
}

TruncatedSeries x3_b1(int order)
{
    return poly_times_product({{6, 1}, {7, 1}}, {2, 4, 5, 7}, order);
}

// Shared A-case bracket: 1/((1-q^3)(1-q^5)(1-q^7)) + (q+q^2)/((1-q^2)(1-q^3)(1-q^5)(1-q^7)).
TruncatedSeries a_bracket(int order)
{
    return series_add(product_inverse({3, 5, 7}, order),
                      poly_times_product({{1, 1}, {2, 1}}, {2, 3, 5, 7}, order));
}

} // namespace

std::pair<TruncatedSeries, TruncatedSeries> build_x3_x4(const GfCaseSpec& spec, int order)
{
    struct Builder {
        int order;

        std::pair<TruncatedSeries, TruncatedSeries> operator()(const GfA1a&) const
        {
            return {x3_generic(order), series_shift(a_bracket(order), 1)};
        }

        std::pair<TruncatedSeries, TruncatedSeries> operator()(const GfA2& a) const
        {
            if (a.r <= -1)
                throw std::invalid_argument("case A2 requires r > -1");
            int inner_order = order + a.r;
            return {x3_generic(order), series_drop_low(a_bracket(inner_order), a.r)};
        }

        std::pair<TruncatedSeries, TruncatedSeries> operator()(const GfB1&) const
        {
            TruncatedSeries x4 = product_inverse({3, 5, 6, 7}, order);
            x4 = series_sub(x4, product_inverse({5, 7}, order));
            x4 = series_add(x4, poly_times_product({{1, 1}, {2, 1}}, {2, 3, 5, 6, 7}, order));
            // q^1 + q^{1+3} + q^{1+2}(q^{3+3} + q^{3+3+3} + q^{3+6} + q^6)
            x4 = series_sub(x4, poly_times_product({{1, 1}, {4, 1}, {9, 2}, {12, 2}},
                                                   {2, 5, 7}, order));
            // q^{1+1} + q^{1+1}(q^3 + q^{3+3} + q^6)
            //         + q^{1+1+2}(q^{3+3+3} + q^{3+3+3+3} + q^{3+6} + q^{3+3+6} + q^{6+6})
            x4 = series_sub(x4, poly_times_product({{2, 1}, {5, 1}, {8, 2}, {13, 2}, {16, 3}},
                                                   {2, 5, 7}, order));
            return {x3_b1(order), x4};
        }

        std::pair<TruncatedSeries, TruncatedSeries> operator()(const GfB2a&) const
        {
            int io = order + 1;
            TruncatedSeries br = product_inverse({3, 5, 6, 7}, io);
            br = series_add(br, poly_times_product({{1, 1}, {2, 1}}, {2, 3, 5, 6, 7}, io));
            // q^1 + q^{1+2}(q^3 + q^{3+3} + q^6)
            br = series_sub(br, poly_times_product({{1, 1}, {6, 1}, {9, 2}}, {2, 5, 7}, io));
            // q^{1+1} + q^{1+1+3} + q^{1+1+2}(q^{3+3} + q^{3+3+3} + q^{3+6} + q^6)
            br = series_sub(br, poly_times_product({{2, 1}, {5, 1}, {10, 2}, {13, 2}},
                                                   {2, 5, 7}, io));
            return {x3_generic(order), series_drop_low(br, 1)};
        }

        std::pair<TruncatedSeries, TruncatedSeries> operator()(const GfB2b&) const
        {
            int io = order + 2;
            TruncatedSeries br = product_inverse({3, 5, 6, 7}, io);
            br = series_add(br, poly_times_product({{1, 1}, {2, 1}}, {2, 3, 5, 6, 7}, io));
            // q^{1+2+3}
            br = series_sub(br, poly_times_product({{6, 1}}, {2, 5, 7}, io));
            // q^{1+1} + q^{1+1+2}(q^3 + q^{3+3} + q^6)
            br = series_sub(br, poly_times_product({{2, 1}, {7, 1}, {10, 2}}, {2, 5, 7}, io));
            return {x3_generic(order), series_drop_low(br, 2)};
        }

        std::pair<TruncatedSeries, TruncatedSeries> operator()(const GfB2c&) const
        {
            int io = order + 3;
            TruncatedSeries br = product_inverse({3, 5, 6, 7}, io);
            br = series_add(br, poly_times_product({{1, 1}, {2, 1}}, {2, 3, 5, 6, 7}, io));
            // q^{1+1+2} + q^{1+1+2+3}
            br = series_sub(br, poly_times_product({{4, 1}, {7, 1}}, {2, 5, 7}, io));
            return {x3_generic(order), series_drop_low(br, 3)};
        }

        std::pair<TruncatedSeries, TruncatedSeries> operator()(const GfB2d& d) const
        {
            if (d.m < 4)
                throw std::invalid_argument("case B2d requires m >= 4");
            int io = order + d.m;
            TruncatedSeries br =
                poly_times_product({{0, 1}, {1, 1}}, {2, 3, 5, 6, 7}, io);
            return {x3_generic(order), series_drop_low(br, d.m)};
        }
    };
    auto [x3, x4] = std::visit(Builder{order}, spec);
    return {std::move(x3), std::move(x4)};
}

} // namespace hookbias
