#pragma once

#include "sdf_forge/bitset.hpp"
#include "sdf_forge/sets.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sdf {

inline constexpr std::uint64_t kMaxGraphModulus = 100'000;

/// Above this modulus exact_mis does not materialize the search matrix and
/// reports the greedy set instead.
inline constexpr std::uint64_t kMaxExactSearchModulus = 20'000;

/// Circulant graph on Z_m: u ~ v iff (u - v) mod m lies in the connection set
/// D = {d != 0 : d or m - d is a square mod m}. Its independent sets are
/// exactly the SDFMOD(m) sets.
class SquareCayleyGraph {
public:
    std::uint64_t modulus() const { return m_; }

    /// D, ascending.
    std::span<const std::uint64_t> connection() const { return connection_; }

    bool adjacent(std::uint64_t u, std::uint64_t v) const
    {
        return u != v && in_connection_[(u + m_ - v) % m_];
    }

    /// Neighbourhood of v as a bit vector over Z_m. Rows are rotations of row 0.
    Bitset row(std::uint64_t v) const;

    std::size_t degree() const { return connection_.size(); }

    bool is_independent(const ResidueSet& set) const;

private:
    friend SquareCayleyGraph build_graph(std::uint64_t m);

    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> connection_;
    std::vector<bool> in_connection_;
};

/// Throws InvalidArgument for m < 2 and CapacityError above kMaxGraphModulus.
SquareCayleyGraph build_graph(std::uint64_t m);

/// Maximal independent set from scanning `order` (a permutation of Z_m) and
/// keeping every vertex compatible with those already kept.
ResidueSet greedy_independent(const SquareCayleyGraph& g, std::span<const std::uint64_t> order);
ResidueSet greedy_independent(const SquareCayleyGraph& g);

struct SearchResult {
    std::uint64_t m = 0;
    ResidueSet best_set;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
};

/// Maximum independent set by branch and bound, budgeted in search nodes.
/// `optimal` is set only when the tree is exhausted within the budget.
SearchResult exact_mis(const SquareCayleyGraph& g, std::uint64_t budget);

struct RankRow {
    std::uint64_t m = 0;
    std::uint64_t size = 0;
    bool optimal = false;
    double exponent = 0.0;
    std::uint64_t nodes = 0;
    std::string skipped_reason; ///< empty for ranked rows
    ResidueSet best_set;

    bool skipped() const { return !skipped_reason.empty(); }
};

/// Ranked rows first (exponent descending, then m ascending), skipped rows
/// after them in ascending m.
struct RankTable {
    std::vector<RankRow> rows;
};

/// Searches every squarefree m in [m_lo, m_hi]; moduli are independent, so
/// `threads` only changes wall time.
RankTable rank_moduli(std::uint64_t m_lo, std::uint64_t m_hi, std::uint64_t budget,
                      unsigned threads = 1);

/// CSV with columns m,size,optimal,exponent,nodes,skipped_reason.
std::string to_csv(const RankTable& table);

std::string to_json(const SearchResult& result);

} // namespace sdf
