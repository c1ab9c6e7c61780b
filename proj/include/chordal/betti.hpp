/**
 * Graded Betti numbers of Stanley-Reisner rings R/I_Delta by independent
 * routes: Hochster's formula by brute force (full table and linear strand),
 * the closed formula in the h-vector for t-linear ideals, and its rewriting
 * in the b-vector; plus projective dimension, depth and 2-linearity.
 *
 * All public tables use R/I_Delta indexing: beta_{i,j} with homological
 * index i and internal degree j, beta_{0,0} = 1. The h-vector formula's
 * index i counts the Betti numbers of the ideal, so its value lands at
 * beta_{i+1, i+t}(R/I_Delta).
 */

#ifndef CHORDAL_BETTI_HPP
#define CHORDAL_BETTI_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "core.hpp"
#include "graph.hpp"
#include "vectors.hpp"

namespace chordal {

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

template <typename Scalar>
Scalar mul(const Scalar& a, const Scalar& b)
{
    if constexpr (std::is_same_v<Scalar, std::int64_t>)
        return checked_mul(a, b);
    else
        return a * b;
}

template <typename Scalar>
Scalar sub(const Scalar& a, const Scalar& b)
{
    if constexpr (std::is_same_v<Scalar, std::int64_t>)
        return checked_sub(a, b);
    else
        return a - b;
}

/**
 * Rank over the rationals by fraction-free (Bareiss) elimination; every
 * intermediate entry is a minor of the input, so divisions are exact.
 */
template <typename Scalar>
std::size_t bareiss_rank(std::vector<std::vector<Scalar>> m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t rank = 0;
    Scalar prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c)
    {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r)
        {
            for (std::size_t k = c + 1; k < cols; ++k)
                m[r][k] = sub(mul(m[rank][c], m[r][k]), mul(m[r][c], m[rank][k])) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

/// Rank of the boundary map from faces of size s to faces of size s-1.
inline std::size_t boundary_rank(const std::vector<Mask>& upper, const std::vector<Mask>& lower)
{
    if (upper.empty() || lower.empty())
        return 0;
    std::map<Mask, std::size_t> column;
    for (std::size_t k = 0; k < lower.size(); ++k)
        column[lower[k]] = k;
    std::vector<std::vector<std::int64_t>> m(upper.size(), std::vector<std::int64_t>(lower.size(), 0));
    for (std::size_t r = 0; r < upper.size(); ++r)
    {
        int sign = 1;
        for (Mask rest = upper[r]; rest; rest &= rest - 1)
        {
            const Mask bit = rest & (~rest + 1);
            m[r][column.at(upper[r] & ~bit)] = sign;
            sign = -sign;
        }
    }
    try
    {
        return bareiss_rank(m);
    }
    catch (const Overflow&)
    {
        std::vector<std::vector<BigInt>> big(m.size());
        for (std::size_t r = 0; r < m.size(); ++r)
            big[r].assign(m[r].begin(), m[r].end());
        return bareiss_rank(big);
    }
}

}   // namespace detail

/**
 * Reduced homology dimensions over a field of characteristic 0: slot k+1
 * holds dim H~_k for k = -1 .. dim. The complex {empty face} has
 * H~_{-1} = 1. Throws CapExceeded beyond `face_cap` faces.
 */
inline std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& delta,
                                                       std::size_t face_cap = 1u << 20)
{
    const auto layers = faces_by_size(delta, face_cap);
    const std::size_t top = layers.size();   // sizes 0 .. top-1
    std::vector<std::size_t> rank(top + 1, 0);   // rank[s]: boundary from size s to size s-1
    for (std::size_t s = 1; s < top; ++s)
        rank[s] = detail::boundary_rank(layers[s], layers[s - 1]);
    std::vector<std::size_t> out(top, 0);
    for (std::size_t s = 0; s < top; ++s)
        out[s] = layers[s].size() - rank[s] - rank[s + 1];
    return out;
}

/// Nonzero graded Betti numbers beta_{i,j}(R/I_Delta).
struct BettiTable {
    std::size_t n = 0;
    std::map<std::pair<int, int>, BigInt> entries;

    BigInt at(int i, int j) const
    {
        auto it = entries.find({i, j});
        return it == entries.end() ? BigInt(0) : it->second;
    }

    void add(int i, int j, const BigInt& value)
    {
        if (value == 0)
            return;
        auto& slot = entries[{i, j}];
        slot += value;
        if (slot == 0)
            entries.erase({i, j});
    }

    bool operator==(const BettiTable&) const = default;
};

/**
 * Hochster's formula: beta_{i+1,j}(R/I_Delta) = sum over |W| = j of
 * dim H~_{j-i-2}(Delta|_W). Brute force over all 2^n subsets W, split into
 * contiguous mask ranges across `jobs` workers and merged in range order.
 */
inline BettiTable full_betti_hochster(const SimplicialComplex& delta, std::size_t cap = 10, unsigned jobs = 1)
{
    if (delta.n > cap)
        throw CapExceeded("full_betti_hochster: n = " + std::to_string(delta.n) + " exceeds the cap "
                          + std::to_string(cap));
    if (delta.n >= 30)
        throw CapExceeded("full_betti_hochster: n must stay below 30");
    const Mask total = Mask{1} << delta.n;
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
    std::vector<BettiTable> partial(jobs);
    auto work = [&](unsigned worker) {
        const Mask lo = total * worker / jobs, hi = total * (worker + 1) / jobs;
        for (Mask w = lo; w < hi; ++w)
        {
            const auto h = reduced_homology_ranks(restrict(delta, from_mask(w)));
            const int j = popcount(w);
            for (std::size_t slot = 0; slot < h.size(); ++slot)
                if (h[slot])
                {
                    const int k = static_cast<int>(slot) - 1;   // homology degree
                    partial[worker].add(j - k - 1, j, h[slot]);
                }
        }
    };
    if (jobs == 1)
        work(0);
    else
    {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(work, t);
        for (auto& th : pool)
            th.join();
    }
    BettiTable table;
    table.n = delta.n;
    for (const auto& p : partial)
        for (const auto& [key, value] : p.entries)
            table.add(key.first, key.second, value);
    return table;
}

/**
 * Linear strand of R/I_{Delta(G)} from cut-component sums:
 * slot i-1 holds beta_{i,i+1} = sum over |Y| = n-i-1 of (W(G-Y) - 1), i = 1..n-1.
 */
inline std::vector<BigInt> linear_strand_hochster(const Graph& g, unsigned jobs = 1)
{
    const std::size_t n = g.order();
    std::vector<BigInt> out;
    for (std::size_t i = 1; i < n; ++i)
        out.push_back(cut_component_sum(g, n - i - 1, jobs));
    return out;
}

/**
 * Closed formula for a t-linear ideal:
 *   value_i = sum_{l=0}^{t+i} (-1)^{l+i+1} h_{t+i-l} C(n-d, l),
 * h_k = 0 outside 0..d. Slot i holds value_i for i = 0..n-1, which equals
 * beta_{i+1, i+t}(R/I_Delta).
 */
inline std::vector<BigInt> betti_from_hvector(const HVector& h, std::size_t n, std::size_t d, std::size_t t)
{
    auto h_at = [&](long long k) -> BigInt {
        return k >= 0 && static_cast<std::size_t>(k) < h.size() ? h[static_cast<std::size_t>(k)] : BigInt(0);
    };
    const long long nd = static_cast<long long>(n) - static_cast<long long>(d);
    std::vector<BigInt> out;
    for (long long i = 0; i < static_cast<long long>(n); ++i)
    {
        BigInt sum = 0;
        const long long upper = static_cast<long long>(t) + i;
        for (long long l = 0; l <= upper; ++l)
        {
            const BigInt term = h_at(upper - l) * binomial(nd, l);
            if ((l + i + 1) % 2)
                sum -= term;
            else
                sum += term;
        }
        out.push_back(sum);
    }
    return out;
}

/**
 * The same values written in the b-vector (2-linear case):
 *   value_i = sum_l (-1)^{l+i+1} [ sum_{j=0}^{m} (-1)^{m-j} C(d-j, m-j)
 *             ( sum_{k=j}^{d} C(k-1, k-j) b_k ) ] C(n-d, l),   m = 2+i-l,
 * with b_0 := 1 and C(-1, 0) := 1, so the inner sum at j = 0 is f_{-1} = 1.
 */
inline std::vector<BigInt> betti_from_bvector(const BVector& b, std::size_t n, std::size_t d)
{
    auto b_at = [&](long long k) -> BigInt {
        if (k == 0)
            return 1;
        return k >= 1 && static_cast<std::size_t>(k) <= b.size() ? b[static_cast<std::size_t>(k - 1)] : BigInt(0);
    };
    auto choose = [](long long a, long long c) -> BigInt {
        if (a == -1 && c == 0)
            return 1;
        return binomial(a, c);
    };
    const long long dd = static_cast<long long>(d);
    const long long nd = static_cast<long long>(n) - dd;
    std::vector<BigInt> out;
    for (long long i = 0; i < static_cast<long long>(n); ++i)
    {
        BigInt total = 0;
        for (long long l = 0; l <= 2 + i; ++l)
        {
            const long long m = 2 + i - l;
            BigInt h = 0;
            for (long long j = 0; j <= m; ++j)
            {
                BigInt c = 0;
                for (long long k = j; k <= dd; ++k)
                    c += choose(k - 1, k - j) * b_at(k);
                const BigInt term = binomial(dd - j, m - j) * c;
                if ((m - j) % 2)
                    h -= term;
                else
                    h += term;
            }
            const BigInt term = h * binomial(nd, l);
            if ((l + i + 1) % 2)
                total -= term;
            else
                total += term;
        }
        out.push_back(total);
    }
    return out;
}

/// Place closed-formula values (slot i -> beta_{i+1,i+t}) into a table with beta_{0,0} = 1.
inline BettiTable table_from_linear_values(const std::vector<BigInt>& values, std::size_t n, std::size_t t)
{
    BettiTable table;
    table.n = n;
    table.add(0, 0, 1);
    for (std::size_t i = 0; i < values.size(); ++i)
        table.add(static_cast<int>(i + 1), static_cast<int>(i + t), values[i]);
    return table;
}

/// Linear strand (slot i-1 -> beta_{i,i+1}) as a table with beta_{0,0} = 1.
inline BettiTable table_from_strand(const std::vector<BigInt>& strand, std::size_t n)
{
    BettiTable table;
    table.n = n;
    table.add(0, 0, 1);
    for (std::size_t i = 0; i < strand.size(); ++i)
        table.add(static_cast<int>(i + 1), static_cast<int>(i + 2), strand[i]);
    return table;
}

struct HomologicalProfile {
    std::size_t pd = 0;
    std::size_t depth = 0;
    bool is_two_linear = true;
    std::size_t kappa_from_betti = 0;
};

/**
 * pd = largest i with a nonzero entry; depth = n - pd; 2-linear iff every
 * nonzero entry with i >= 1 sits at j = i+1; kappa_from_betti = largest k
 * (capped at n-1) with beta_{i,i+1} = 0 for all i >= n-k.
 */
inline HomologicalProfile homological_profile(const BettiTable& table)
{
    HomologicalProfile p;
    for (const auto& [key, value] : table.entries)
    {
        p.pd = std::max(p.pd, static_cast<std::size_t>(key.first));
        if (key.first >= 1 && key.second != key.first + 1)
            p.is_two_linear = false;
    }
    p.depth = table.n - p.pd;
    const std::size_t n = table.n;
    std::size_t k = 0;
    while (k + 1 <= (n > 0 ? n - 1 : 0))
    {
        const std::size_t next = k + 1;
        bool zero = true;
        for (const auto& [key, value] : table.entries)
            if (key.first >= 1 && key.second == key.first + 1
                && static_cast<std::size_t>(key.first) >= n - next)
                zero = false;
        if (!zero)
            break;
        k = next;
    }
    p.kappa_from_betti = k;
    return p;
}

}   // namespace chordal

#endif
