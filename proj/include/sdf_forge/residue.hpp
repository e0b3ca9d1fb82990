#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdf {

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a fixed resource cap (exact integer range,
/// dense adjacency size, materialized set size).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization.
struct Modulus {
    std::uint64_t value = 1;
    std::vector<PrimePower> factorization;

    bool squarefree() const;
};

/// Quadratic residues of Z_m, including 0.
class SquareTable {
public:
    explicit SquareTable(std::uint64_t m);

    std::uint64_t modulus() const { return m_; }
    bool is_square(std::uint64_t d) const { return bits_[d % m_]; }

    /// Smallest a in [0, m) with a^2 = d (mod m); linear scan, meant for
    /// reporting witnesses rather than hot loops.
    std::uint64_t root(std::uint64_t d) const;

    /// Nonzero residues marked as squares, ascending.
    std::vector<std::uint64_t> nonzero_squares() const;

    std::size_t count() const;

private:
    std::uint64_t m_;
    std::vector<bool> bits_;
};

SquareTable squares_mod(std::uint64_t m);

Modulus factorize(std::uint64_t m);

bool is_squarefree(std::uint64_t m);

bool is_prime(std::uint64_t n);

/// Primes in [2, limit], ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Largest prime p with ceil(sqrt(n)/2) <= p <= floor(sqrt(n)). Requires n >= 16.
std::uint64_t bertrand_prime(std::uint64_t n);

/// floor(sqrt(d)), exact for the full 64-bit range.
std::uint64_t isqrt(std::uint64_t d);

bool is_perfect_square(std::uint64_t d);

/// a * b mod m without overflow.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// base^exp, throwing CapacityError if the result leaves uint64.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::string to_string(const Modulus& mod);

} // namespace sdf
