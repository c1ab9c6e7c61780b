/**
 * Shared vocabulary for the chordal library: vertex ids, vertex sets,
 * arbitrary-precision integers, binomial coefficients, error types, bitmask
 * helpers and a portable deterministic random source.
 */

#ifndef CHORDAL_CORE_HPP
#define CHORDAL_CORE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chordal {

using BigInt = boost::multiprecision::cpp_int;

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Subset of at most 64 vertices; bit v set iff vertex v is a member.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaskBits = 64;

/// Malformed input (unparsable file, bad word, out-of-range id).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input is well formed but violates an operation's precondition.
class PreconditionError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A configured resource cap (vertex count, face count) was exceeded.
class CapExceeded : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// An internal self-check failed. Never swallowed.
class VerificationError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/**
 * Binomial coefficient C(n, k), zero when k < 0 or k > n. Negative n is
 * not supported here; see betti.hpp for the generalized form.
 */
inline BigInt binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i)
    {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline VertexSet normalized(VertexSet set)
{
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

inline bool contains(const VertexSet& set, Vertex v)
{
    return std::binary_search(set.begin(), set.end(), v);
}

/// Both arguments sorted.
inline bool is_subset(const VertexSet& small, const VertexSet& large)
{
    return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Mask to_mask(const VertexSet& set)
{
    Mask m = 0;
    for (Vertex v : set)
        m |= Mask{1} << v;
    return m;
}

inline VertexSet from_mask(Mask m)
{
    VertexSet out;
    while (m)
    {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline int popcount(Mask m) { return std::popcount(m); }

/// Next larger mask with the same popcount (colexicographic successor).
inline Mask next_combination(Mask m)
{
    const Mask low = m & (~m + 1);
    const Mask ripple = m + low;
    return ripple | (((m ^ ripple) >> 2) / low);
}

inline Mask low_bits(std::size_t count)
{
    return count >= kMaskBits ? ~Mask{0} : (Mask{1} << count) - 1;
}

/**
 * Deterministic random source. The engine is mt19937_64 (fully specified by
 * the standard); bounded draws use rejection sampling instead of
 * std::uniform_int_distribution so that output is identical across standard
 * library implementations.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound == 0)
            throw std::invalid_argument("Rng::below: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;)
        {
            const std::uint64_t x = engine_();
            if (x >= threshold)
                return x % bound;
        }
    }

    /// Uniform integer in [lo, hi].
    long long between(long long lo, long long hi)
    {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (engine_() >> 63) != 0; }

  private:
    std::mt19937_64 engine_;
};

/// Seed for the index-th member of a family drawn from a base seed (splitmix64).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}   // namespace chordal

#endif
