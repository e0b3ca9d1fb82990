#include <doctest.h>

#include "oracles.hpp"
#include "sdf_forge/residue.hpp"

#include <random>

using namespace sdf;

namespace {

std::vector<std::uint64_t> square_list(const SquareTable& t)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 0; d < t.modulus(); ++d)
        if (t.is_square(d))
            out.push_back(d);
    return out;
}

} // namespace

TEST_CASE("squares_mod small moduli")
{
    CHECK(square_list(squares_mod(5)) == std::vector<std::uint64_t>{0, 1, 4});
    CHECK(square_list(squares_mod(4)) == std::vector<std::uint64_t>{0, 1});
    CHECK(square_list(squares_mod(1)) == std::vector<std::uint64_t>{0});
    CHECK_THROWS_AS(squares_mod(0), InvalidArgument);
}

TEST_CASE("squares_mod 205 matches enumeration")
{
    const auto table = squares_mod(205);
    const auto ref = oracle::squares(205);
    CHECK(table.count() == 63);
    CHECK(square_list(table) == std::vector<std::uint64_t>(ref.begin(), ref.end()));
    CHECK(table.nonzero_squares().size() == 62);
    CHECK(table.root(41) == 41);
    CHECK(table.root(4) == 2);
}

TEST_CASE("squares_mod agrees with exhaustive roots for every m <= 1000")
{
    for (std::uint64_t m = 1; m <= 1000; ++m) {
        const auto table = squares_mod(m);
        std::vector<bool> ref(m, false);
        for (std::uint64_t a = 0; a < m; ++a)
            ref[a * a % m] = true;
        for (std::uint64_t d = 0; d < m; ++d)
            REQUIRE_MESSAGE(table.is_square(d) == ref[d], "m=" << m << " d=" << d);
        REQUIRE(table.is_square(0));
    }
}

TEST_CASE("factorize")
{
    CHECK(factorize(205).factorization == std::vector<PrimePower>{{5, 1}, {41, 1}});
    CHECK(factorize(65).factorization == std::vector<PrimePower>{{5, 1}, {13, 1}});
    CHECK(factorize(12).factorization == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factorize(1).factorization.empty());
    CHECK(factorize(9'999'991).factorization == std::vector<PrimePower>{{9'999'991, 1}});
    CHECK_THROWS_AS(factorize(0), InvalidArgument);

    for (std::uint64_t m = 1; m <= 5000; ++m) {
        const auto f = factorize(m);
        std::uint64_t prod = 1;
        std::uint64_t last = 0;
        for (const auto& pp : f.factorization) {
            REQUIRE(pp.prime > last);
            REQUIRE(pp.exponent >= 1);
            REQUIRE(oracle::prime(pp.prime));
            last = pp.prime;
            for (unsigned e = 0; e < pp.exponent; ++e)
                prod *= pp.prime;
        }
        REQUIRE(prod == m);
    }
}

TEST_CASE("is_squarefree")
{
    CHECK(is_squarefree(205));
    CHECK_FALSE(is_squarefree(12));
    CHECK(is_squarefree(1));
    for (std::uint64_t m = 1; m <= 100'000; ++m)
        REQUIRE_MESSAGE(is_squarefree(m) == oracle::squarefree(m), "m=" << m);
}

TEST_CASE("bertrand_prime")
{
    CHECK(bertrand_prime(100) == 7);
    CHECK(bertrand_prime(16) == 3);
    CHECK(bertrand_prime(1'000'000) == 997);
    CHECK_THROWS_AS(bertrand_prime(15), InvalidArgument);
    CHECK_THROWS_AS(bertrand_prime(0), InvalidArgument);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(16, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = i < 200 ? 16 + static_cast<std::uint64_t>(i) : dist(rng);
        const std::uint64_t p = bertrand_prime(n);
        REQUIRE(oracle::prime(p));
        REQUIRE(p * p <= n);
        REQUIRE(4 * p * p >= n);
        // largest such prime
        for (std::uint64_t q = p + 1; q * q <= n; ++q)
            REQUIRE_FALSE(oracle::prime(q));
    }
}

TEST_CASE("is_perfect_square")
{
    CHECK(is_perfect_square(49));
    CHECK_FALSE(is_perfect_square(42));
    CHECK(is_perfect_square(0));
    CHECK(is_perfect_square(1));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000);
    for (int i = 0; i < 100'000; ++i) {
        const std::uint64_t a = i < 1000 ? static_cast<std::uint64_t>(i + 1) : dist(rng);
        REQUIRE(is_perfect_square(a * a));
        REQUIRE_FALSE(is_perfect_square(a * a + 1));
    }

    // top of the 64-bit range
    const std::uint64_t r = 4'294'967'295ULL;
    CHECK(isqrt(~std::uint64_t{0}) == r);
    CHECK(is_perfect_square(r * r));
    CHECK_FALSE(is_perfect_square(r * r - 1));
    CHECK(isqrt(r * r - 1) == r - 1);
}

TEST_CASE("checked_pow reports overflow")
{
    CHECK(checked_pow(205, 4) == 1'766'100'625ULL);
    CHECK(checked_pow(7, 0) == 1);
    CHECK_THROWS_AS(checked_pow(205, 10), CapacityError);
}
