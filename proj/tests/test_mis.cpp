#include <doctest.h>

#include "oracles.hpp"
#include "sdf_forge/construct.hpp"
#include "sdf_forge/mis.hpp"

#include <numeric>
#include <random>

using namespace sdf;

namespace {

std::vector<std::uint64_t> vec(std::span<const std::uint64_t> s) { return {s.begin(), s.end()}; }

// sdfmod(m) for m = 2..24, from enumerating all 2^m subsets
const std::size_t kSdfmod[] = {1, 1, 2, 2, 1, 1, 3, 3, 2, 1, 3, 3, 1, 2, 6, 3, 3, 1, 4, 3, 1, 1, 4};

} // namespace

TEST_CASE("build_graph connection sets")
{
    CHECK(vec(build_graph(5).connection()) == std::vector<std::uint64_t>{1, 4});
    CHECK(vec(build_graph(8).connection()) == std::vector<std::uint64_t>{1, 4, 7});
    CHECK(build_graph(205).degree() == 62);
    CHECK(vec(build_graph(2).connection()) == std::vector<std::uint64_t>{1});
    CHECK_THROWS_AS(build_graph(1), InvalidArgument);
    CHECK_THROWS_AS(build_graph(kMaxGraphModulus + 1), CapacityError);
}

TEST_CASE("graph invariants: symmetric connection set, rotation rows")
{
    for (std::uint64_t m = 2; m <= 120; ++m) {
        const auto g = build_graph(m);
        for (auto d : g.connection())
            REQUIRE(std::binary_search(g.connection().begin(), g.connection().end(), m - d));
        const Bitset r0 = g.row(0);
        for (std::uint64_t v = 0; v < m; ++v) {
            const Bitset rv = g.row(v);
            for (std::uint64_t u = 0; u < m; ++u) {
                REQUIRE(rv.test((u + v) % m) == r0.test(u));
                REQUIRE(rv.test(u) == g.adjacent(u, v));
            }
        }
    }
}

TEST_CASE("independent sets are exactly the SDFMOD sets")
{
    // exhaustive for m <= 20
    for (std::uint64_t m = 2; m <= 20; ++m) {
        const auto g = build_graph(m);
        const auto table = squares_mod(m);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
            const ResidueSet set(m, oracle::bits_of(s));
            REQUIRE(g.is_independent(set) == !check_sdf_mod(set, table).has_value());
        }
    }
    std::mt19937_64 rng(17);
    for (std::uint64_t m = 21; m <= 40; ++m) {
        const auto g = build_graph(m);
        for (int trial = 0; trial < 5000; ++trial) {
            std::vector<std::uint64_t> e;
            for (std::uint64_t v = 0; v < m; ++v)
                if (rng() % 8 == 0)
                    e.push_back(v);
            const ResidueSet set(m, e);
            REQUIRE(g.is_independent(set) == !check_sdf_mod(set).has_value());
        }
    }
}

TEST_CASE("greedy_independent")
{
    CHECK(vec(greedy_independent(build_graph(5)).elements()) == std::vector<std::uint64_t>{0, 2});
    CHECK(vec(greedy_independent(build_graph(2)).elements()) == std::vector<std::uint64_t>{0});

    std::mt19937_64 rng(23);
    for (std::uint64_t m = 2; m <= 300; m += 13) {
        const auto g = build_graph(m);
        std::vector<std::uint64_t> order(m);
        std::iota(order.begin(), order.end(), std::uint64_t{0});
        std::shuffle(order.begin(), order.end(), rng);
        const auto s = greedy_independent(g, order);
        REQUIRE_FALSE(check_sdf_mod(s));
        // maximal: every other vertex conflicts with the set
        for (std::uint64_t v = 0; v < m; ++v) {
            if (s.contains(v))
                continue;
            bool blocked = false;
            for (auto u : s.elements())
                blocked = blocked || g.adjacent(u, v);
            REQUIRE(blocked);
        }
    }
    const auto g = build_graph(5);
    const std::vector<std::uint64_t> bad{0, 1, 1, 2, 3};
    CHECK_THROWS_AS(greedy_independent(g, bad), InvalidArgument);
    const std::vector<std::uint64_t> short_order{0, 1};
    CHECK_THROWS_AS(greedy_independent(g, short_order), InvalidArgument);
}

TEST_CASE("exact_mis matches exhaustive enumeration for m <= 24")
{
    for (std::uint64_t m = 2; m <= 24; ++m) {
        const auto r = exact_mis(build_graph(m), 10'000'000);
        REQUIRE(r.optimal);
        REQUIRE_FALSE(r.budget_exhausted);
        REQUIRE(r.best_set.size() == kSdfmod[m - 2]);
        REQUIRE_FALSE(check_sdf_mod(r.best_set));
    }
    // the frozen table itself against the enumeration oracle
    for (std::uint64_t m = 2; m <= 16; ++m)
        REQUIRE(oracle::max_sdf_mod(m) == kSdfmod[m - 2]);
}

TEST_CASE("exact_mis recovers the known base sizes")
{
    const auto r5 = exact_mis(build_graph(5), 1000);
    CHECK(r5.best_set.size() == 2);
    CHECK(r5.optimal);

    const auto r65 = exact_mis(build_graph(65), 10'000'000);
    CHECK(r65.best_set.size() >= 7);
    CHECK_FALSE(check_sdf_mod(r65.best_set));

    const auto r205 = exact_mis(build_graph(205), 10'000'000);
    CHECK(r205.best_set.size() >= 12);
    CHECK_FALSE(check_sdf_mod(r205.best_set));
    MESSAGE("sdfmod(65) search: size " << r65.best_set.size() << std::string(r65.optimal ? " (optimal)" : "")
                                        << ", sdfmod(205) search: size " << r205.best_set.size()
                                        << std::string(r205.optimal ? " (optimal)" : ""));
}

TEST_CASE("exact_mis dominates greedy and is rotation invariant")
{
    for (std::uint64_t m = 2; m <= 150; m += 3) {
        const auto g = build_graph(m);
        const auto r = exact_mis(g, 200'000);
        REQUIRE(r.best_set.size() >= greedy_independent(g).size());
        REQUIRE(r.best_set.contains(0));
        for (std::uint64_t t = 0; t < m; t += 1 + m / 7) {
            const auto rot = r.best_set.rotated(t);
            REQUIRE(rot.size() == r.best_set.size());
            REQUIRE_FALSE(check_sdf_mod(rot));
        }
    }
}

TEST_CASE("exact_mis budget exhaustion")
{
    const auto r = exact_mis(build_graph(205), 1);
    CHECK(r.budget_exhausted);
    CHECK_FALSE(r.optimal);
    CHECK(r.nodes_explored <= 1);
    CHECK(r.best_set.size() >= greedy_independent(build_graph(205)).size());
    CHECK_FALSE(check_sdf_mod(r.best_set));
    CHECK_THROWS_AS(exact_mis(build_graph(5), 0), InvalidArgument);
}

TEST_CASE("rank_moduli")
{
    const auto small = rank_moduli(2, 10, 10'000'000);
    bool saw5 = false;
    for (const auto& row : small.rows) {
        if (row.m == 4 || row.m == 8 || row.m == 9) {
            CHECK(row.skipped_reason == "not squarefree");
        }
        if (row.m == 5) {
            saw5 = true;
            CHECK(row.size == 2);
            CHECK(row.optimal);
            CHECK(row.exponent == doctest::Approx(0.7153382790366966));
        }
    }
    CHECK(saw5);
    CHECK(small.rows.front().m == 5);
    CHECK(small.rows.size() == 9);

    const auto mid = rank_moduli(60, 70, 10'000'000);
    CHECK(mid.rows.front().m == 65);
    CHECK(mid.rows.front().size >= 7);
    CHECK(mid.rows.front().exponent >= 0.733077);

    const auto top = rank_moduli(200, 210, 10'000'000);
    CHECK(top.rows.front().m == 205);
    CHECK(top.rows.front().size >= 12);
    CHECK(top.rows.front().exponent >= 0.7334);

    const std::string csv = to_csv(small);
    CHECK(csv.rfind("m,size,optimal,exponent,nodes,skipped_reason\n5,2,true,0.715338,", 0) == 0);
    CHECK(csv.find("4,,,,,not squarefree\n") != std::string::npos);

    CHECK_THROWS_AS(rank_moduli(1, 10, 10), InvalidArgument);
    CHECK_THROWS_AS(rank_moduli(10, 9, 10), InvalidArgument);
}

TEST_CASE("rank_moduli is schedule independent")
{
    const std::string one = to_csv(rank_moduli(2, 120, 50'000, 1));
    CHECK(to_csv(rank_moduli(2, 120, 50'000, 3)) == one);
    CHECK(to_csv(rank_moduli(2, 120, 50'000, 1)) == one);
}
