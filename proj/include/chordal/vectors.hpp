/**
 * Clique, b-, f- and h-vectors with exact conversions between them.
 *
 * Storage is 0-based: CVector/BVector slot k holds c_{k+1}/b_{k+1};
 * FVector slot k holds f_{k-1} (so slot 0 is f_{-1} = 1); HVector slot k
 * holds h_k.
 */

#ifndef CHORDAL_VECTORS_HPP
#define CHORDAL_VECTORS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace chordal {

template <typename Tag>
struct CountVector {
    std::vector<BigInt> values;

    CountVector() = default;
    explicit CountVector(std::vector<BigInt> v) : values(std::move(v)) {}
    CountVector(std::initializer_list<long long> init)
    {
        for (long long x : init)
            values.emplace_back(x);
    }

    std::size_t size() const { return values.size(); }
    const BigInt& operator[](std::size_t k) const { return values[k]; }
    BigInt& operator[](std::size_t k) { return values[k]; }

    bool operator==(const CountVector&) const = default;
};

struct CTag {};
struct BTag {};
struct FTag {};
struct HTag {};

/// c_1..c_d: number of cliques of each order.
using CVector = CountVector<CTag>;
/// b_1..b_d.
using BVector = CountVector<BTag>;
/// f_{-1}..f_{d-1}.
using FVector = CountVector<FTag>;
/// h_0..h_d.
using HVector = CountVector<HTag>;

/**
 * b-vector from clique vector, inverting
 *   sum_i b_i (x+1)^{i-1} = sum_i c_i x^{i-1}
 * by substituting x -> x-1:  b_j = sum_{i>=j} (-1)^{i-j} C(i-1, j-1) c_i.
 */
inline BVector b_from_c(const CVector& c)
{
    const long long d = static_cast<long long>(c.size());
    BVector b;
    b.values.assign(c.size(), 0);
    for (long long j = 1; j <= d; ++j)
    {
        BigInt sum = 0;
        for (long long i = j; i <= d; ++i)
        {
            BigInt term = binomial(i - 1, j - 1) * c[i - 1];
            if ((i - j) % 2)
                sum -= term;
            else
                sum += term;
        }
        b[j - 1] = sum;
    }
    return b;
}

/// c_i = sum_{j=i}^{d} C(j-1, j-i) b_j.
inline CVector c_from_b(const BVector& b)
{
    const long long d = static_cast<long long>(b.size());
    CVector c;
    c.values.assign(b.size(), 0);
    for (long long i = 1; i <= d; ++i)
    {
        BigInt sum = 0;
        for (long long j = i; j <= d; ++j)
            sum += binomial(j - 1, j - i) * b[j - 1];
        c[i - 1] = sum;
    }
    return c;
}

/**
 * Diagnostic for vectors that cannot be clique vectors of any graph by
 * sign alone (some c_i <= 0). Does not attempt full realizability.
 */
inline std::optional<std::string> nonpositive_entry(const CVector& c)
{
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] <= 0)
            return "c_" + std::to_string(k + 1) + " = " + c[k].str() + " is not positive";
    return std::nullopt;
}

/// h_j = sum_{i=0}^{j} (-1)^{j-i} C(d-i, j-i) f_{i-1}.
inline HVector h_from_f(const FVector& f, std::size_t d)
{
    if (f.size() != d + 1)
        throw PreconditionError("h_from_f: f-vector length must be d+1");
    HVector h;
    h.values.assign(d + 1, 0);
    const long long dd = static_cast<long long>(d);
    for (long long j = 0; j <= dd; ++j)
    {
        BigInt sum = 0;
        for (long long i = 0; i <= j; ++i)
        {
            BigInt term = binomial(dd - i, j - i) * f[i];
            if ((j - i) % 2)
                sum -= term;
            else
                sum += term;
        }
        h[j] = sum;
    }
    return h;
}

/// f_{j-1} = sum_{i=0}^{j} C(d-i, j-i) h_i.
inline FVector f_from_h(const HVector& h, std::size_t d)
{
    if (h.size() != d + 1)
        throw PreconditionError("f_from_h: h-vector length must be d+1");
    FVector f;
    f.values.assign(d + 1, 0);
    const long long dd = static_cast<long long>(d);
    for (long long j = 0; j <= dd; ++j)
    {
        BigInt sum = 0;
        for (long long i = 0; i <= j; ++i)
            sum += binomial(dd - i, j - i) * h[i];
        f[j] = sum;
    }
    return f;
}

/// f-vector of a clique complex: prepend f_{-1} = 1 to the clique vector.
inline FVector f_from_c(const CVector& c)
{
    FVector f;
    f.values.reserve(c.size() + 1);
    f.values.emplace_back(1);
    for (const auto& x : c.values)
        f.values.push_back(x);
    return f;
}

inline CVector c_from_f(const FVector& f)
{
    if (f.size() == 0)
        throw PreconditionError("c_from_f: empty f-vector");
    return CVector(std::vector<BigInt>(f.values.begin() + 1, f.values.end()));
}

}   // namespace chordal

#endif
