#include "sdf_forge/residue.hpp"

#include <algorithm>
#include <sstream>

namespace sdf {

bool Modulus::squarefree() const
{
    return std::all_of(factorization.begin(), factorization.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

SquareTable::SquareTable(std::uint64_t m) : m_(m)
{
    if (m == 0)
        throw InvalidArgument("modulus must be positive");
    bits_.assign(m, false);
    // (m - a)^2 = a^2, so a <= m/2 reaches every residue.
    for (std::uint64_t a = 0; a <= m / 2; ++a)
        bits_[mul_mod(a, a, m)] = true;
}

std::uint64_t SquareTable::root(std::uint64_t d) const
{
    d %= m_;
    for (std::uint64_t a = 0; a < m_; ++a)
        if (mul_mod(a, a, m_) == d)
            return a;
    throw InvalidArgument("residue " + std::to_string(d) + " is not a square mod " +
                          std::to_string(m_));
}

std::vector<std::uint64_t> SquareTable::nonzero_squares() const
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d < m_; ++d)
        if (bits_[d])
            out.push_back(d);
    return out;
}

std::size_t SquareTable::count() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

SquareTable squares_mod(std::uint64_t m) { return SquareTable(m); }

Modulus factorize(std::uint64_t m)
{
    if (m == 0)
        throw InvalidArgument("cannot factorize 0");
    Modulus out{m, {}};
    std::uint64_t rest = m;
    for (std::uint64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0)
            out.factorization.push_back({p, e});
    }
    if (rest > 1)
        out.factorization.push_back({rest, 1});
    return out;
}

bool is_squarefree(std::uint64_t m) { return factorize(m).squarefree(); }

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

std::uint64_t isqrt(std::uint64_t d)
{
    if (d < 2)
        return d;
    // Newton iteration from an overestimate; decreases monotonically to floor(sqrt(d)).
    unsigned bits = 64 - static_cast<unsigned>(__builtin_clzll(d));
    std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
    for (;;) {
        std::uint64_t y = (x + d / x) / 2;
        if (y >= x)
            return x;
        x = y;
    }
}

bool is_perfect_square(std::uint64_t d)
{
    std::uint64_t r = isqrt(d);
    return r * r == d;
}

std::uint64_t bertrand_prime(std::uint64_t n)
{
    if (n < 16)
        throw InvalidArgument("bertrand_prime requires n >= 16, got " + std::to_string(n));
    const std::uint64_t hi = isqrt(n);
    // smallest p with 2p >= sqrt(n), i.e. 4p^2 >= n
    auto reaches = [n](std::uint64_t p) {
        return 4 * static_cast<unsigned __int128>(p) * p >= n;
    };
    std::uint64_t lo = (hi + 1) / 2;
    while (lo > 1 && reaches(lo - 1))
        --lo;
    while (!reaches(lo))
        ++lo;
    for (std::uint64_t p = hi; p >= lo && p >= 2; --p)
        if (is_prime(p))
            return p;
    throw InvalidArgument("no prime in range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "]");
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp)
{
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(out, base, &out))
            throw CapacityError(std::to_string(base) + "^" + std::to_string(exp) +
                                " exceeds the exact 64-bit integer range");
    return out;
}

std::string to_string(const Modulus& mod)
{
    std::ostringstream os;
    os << mod.value << " =";
    if (mod.factorization.empty())
        os << " 1";
    bool first = true;
    for (const auto& pp : mod.factorization) {
        os << (first ? " " : " * ") << pp.prime;
        if (pp.exponent > 1)
            os << '^' << pp.exponent;
        first = false;
    }
    return os.str();
}

} // namespace sdf
