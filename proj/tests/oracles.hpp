#pragma once

// Independent brute-force references. Nothing here calls into the library.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

inline std::set<std::uint64_t> squares(std::uint64_t m)
{
    std::set<std::uint64_t> out;
    for (std::uint64_t a = 0; a < m; ++a)
        out.insert(a * a % m);
    return out;
}

inline bool integer_square(std::uint64_t d)
{
    for (std::uint64_t r = 0; r * r <= d; ++r)
        if (r * r == d)
            return true;
    return false;
}

inline bool is_sdf_mod(const std::vector<std::uint64_t>& elems, std::uint64_t m,
                       const std::set<std::uint64_t>& sq)
{
    for (auto x : elems)
        for (auto y : elems)
            if (x != y && sq.count(((x % m) + m - (y % m)) % m))
                return false;
    return true;
}

inline bool is_sdf_mod(const std::vector<std::uint64_t>& elems, std::uint64_t m)
{
    return is_sdf_mod(elems, m, squares(m));
}

inline bool is_sdf(const std::vector<std::uint64_t>& elems)
{
    for (auto x : elems)
        for (auto y : elems)
            if (x > y && integer_square(x - y))
                return false;
    return true;
}

inline bool squarefree(std::uint64_t m)
{
    for (std::uint64_t k = 2; k * k <= m; ++k)
        if (m % (k * k) == 0)
            return false;
    return true;
}

inline bool prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Conflict masks of the square graph on Z_m (m <= 64).
inline std::vector<std::uint64_t> conflict_masks(std::uint64_t m)
{
    const auto sq = squares(m);
    std::vector<std::uint64_t> mask(m, 0);
    for (std::uint64_t x = 0; x < m; ++x)
        for (std::uint64_t y = 0; y < m; ++y)
            if (x != y && (sq.count((x + m - y) % m) || sq.count((y + m - x) % m)))
                mask[x] |= std::uint64_t{1} << y;
    return mask;
}

/// Every SDFMOD(m) subset of Z_m, as bitmasks (m <= 24 or so).
inline std::vector<std::uint64_t> all_sdf_mod_subsets(std::uint64_t m)
{
    const auto mask = conflict_masks(m);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        bool ok = true;
        for (std::uint64_t v = 0; v < m && ok; ++v)
            if ((s >> v & 1) && (mask[v] & s))
                ok = false;
        if (ok)
            out.push_back(s);
    }
    return out;
}

/// sdfmod(m) by enumerating all 2^m subsets.
inline std::size_t max_sdf_mod(std::uint64_t m)
{
    std::size_t best = 0;
    for (auto s : all_sdf_mod_subsets(m))
        best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    return best;
}

inline std::vector<std::uint64_t> bits_of(std::uint64_t s)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 0; v < 64; ++v)
        if (s >> v & 1)
            out.push_back(v);
    return out;
}

/// {m^2 x + s mod m^(2k) : x in X, s in B}, B = {m z + b}.
inline std::set<std::uint64_t> lift(std::uint64_t m, const std::vector<std::uint64_t>& base,
                                    const std::vector<std::uint64_t>& prev, unsigned k)
{
    std::uint64_t mod = 1;
    for (unsigned i = 0; i < 2 * k; ++i)
        mod *= m;
    std::set<std::uint64_t> out;
    for (auto x : prev)
        for (std::uint64_t z = 0; z < m; ++z)
            for (auto b : base)
                out.insert((m * m * x + m * z + b) % mod);
    return out;
}

} // namespace oracle
