#include "sdf_forge/mis.hpp"

#include "sdf_forge/construct.hpp"
#include "sdf_forge/residue.hpp"

#include "json_io.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <thread>

namespace sdf {

Bitset SquareCayleyGraph::row(std::uint64_t v) const
{
    Bitset out(m_);
    for (auto d : connection_)
        out.set((v + d) % m_);
    return out;
}

bool SquareCayleyGraph::is_independent(const ResidueSet& set) const
{
    if (set.modulus() != m_)
        return false;
    const auto e = set.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (adjacent(e[i], e[j]))
                return false;
    return true;
}

SquareCayleyGraph build_graph(std::uint64_t m)
{
    if (m < 2)
        throw InvalidArgument("square graph needs m >= 2");
    if (m > kMaxGraphModulus)
        throw CapacityError("modulus " + std::to_string(m) + " exceeds the graph cap of " +
                            std::to_string(kMaxGraphModulus));
    const SquareTable squares(m);
    SquareCayleyGraph g;
    g.m_ = m;
    g.in_connection_.assign(m, false);
    for (std::uint64_t d = 1; d < m; ++d) {
        if (squares.is_square(d) || squares.is_square(m - d)) {
            g.in_connection_[d] = true;
            g.connection_.push_back(d);
        }
    }
    return g;
}

ResidueSet greedy_independent(const SquareCayleyGraph& g, std::span<const std::uint64_t> order)
{
    const std::uint64_t m = g.modulus();
    if (order.size() != m)
        throw InvalidArgument("order must be a permutation of Z_m");
    std::vector<bool> seen(m, false);
    for (auto v : order) {
        if (v >= m || seen[v])
            throw InvalidArgument("order must be a permutation of Z_m");
        seen[v] = true;
    }

    std::vector<bool> blocked(m, false);
    std::vector<std::uint64_t> chosen;
    for (auto v : order) {
        if (blocked[v])
            continue;
        chosen.push_back(v);
        blocked[v] = true;
        for (auto d : g.connection())
            blocked[(v + d) % m] = true;
    }
    return ResidueSet(m, std::move(chosen));
}

ResidueSet greedy_independent(const SquareCayleyGraph& g)
{
    std::vector<std::uint64_t> order(g.modulus());
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    return greedy_independent(g, order);
}

namespace {

// Maximum clique in the compatibility graph H (u, v compatible iff not
// adjacent in G) restricted to the vertices compatible with 0. Coloring H
// greedily partitions the candidates into cliques of G, and the number of
// colors bounds how many more vertices an independent set can take.
class CliqueSearch {
public:
    CliqueSearch(const SquareCayleyGraph& g, std::uint64_t budget) : budget_(budget)
    {
        const std::uint64_t m = g.modulus();
        std::vector<std::uint64_t> cand;
        for (std::uint64_t v = 1; v < m; ++v)
            if (!g.adjacent(0, v))
                cand.push_back(v);

        // branching order: descending degree within the candidate subgraph
        std::vector<std::size_t> deg(cand.size(), 0);
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (!g.adjacent(cand[i], cand[j])) {
                    ++deg[i];
                    ++deg[j];
                }
        std::vector<std::size_t> idx(cand.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
        for (auto i : idx)
            vertex_.push_back(cand[i]);

        const std::size_t n = vertex_.size();
        compat_.assign(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!g.adjacent(vertex_[i], vertex_[j])) {
                    compat_[i].set(j);
                    compat_[j].set(i);
                }
        pool_.assign(n + 2, Bitset(n));
        uncolored_.assign(n + 2, Bitset(n));
        klass_ = Bitset(n);
        order_buf_.resize(n + 2);
    }

    std::size_t candidate_count() const { return vertex_.size(); }

    /// Seeds the incumbent with a known clique (original vertex labels).
    void seed(std::vector<std::uint64_t> clique) { best_ = std::move(clique); }

    void run()
    {
        if (vertex_.empty())
            return;
        Bitset& root = pool_[0];
        root.set_all();
        expand(0);
    }

    const std::vector<std::uint64_t>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }

private:
    void expand(std::size_t depth)
    {
        if (nodes_ >= budget_) {
            aborted_ = true;
            return;
        }
        ++nodes_;

        Bitset& cand = pool_[depth];
        const std::size_t have = current_.size();
        const std::size_t need = best_.size() + 1 > have ? best_.size() + 1 - have : 1;

        // greedy coloring; only vertices whose color can still improve are kept
        auto& order = order_buf_[depth];
        order.clear();
        Bitset& uncolored = uncolored_[depth];
        uncolored = cand;
        Bitset& klass = klass_;
        std::size_t color = 0;
        while (!uncolored.none()) {
            ++color;
            klass = uncolored;
            for (std::size_t v = klass.first(); v < klass.size(); v = klass.first()) {
                klass.reset(v);
                uncolored.reset(v);
                klass.and_not(compat_[v]);
                if (color >= need)
                    order.push_back({v, color});
            }
        }

        for (std::size_t i = order.size(); i-- > 0;) {
            const auto [v, c] = order[i];
            if (have + c <= best_.size())
                return;
            current_.push_back(vertex_[v]);
            Bitset& next = pool_[depth + 1];
            next.assign_and(cand, compat_[v]);
            if (next.none()) {
                if (current_.size() > best_.size())
                    best_ = current_;
            } else {
                expand(depth + 1);
            }
            current_.pop_back();
            if (aborted_)
                return;
            cand.reset(v);
        }
    }

    struct Colored {
        std::size_t vertex;
        std::size_t color;
    };

    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::uint64_t> vertex_;
    std::vector<Bitset> compat_;
    std::vector<Bitset> pool_;
    std::vector<Bitset> uncolored_;
    Bitset klass_;
    std::vector<std::vector<Colored>> order_buf_;
    std::vector<std::uint64_t> current_;
    std::vector<std::uint64_t> best_;
};

} // namespace

SearchResult exact_mis(const SquareCayleyGraph& g, std::uint64_t budget)
{
    if (budget < 1)
        throw InvalidArgument("search budget must be at least 1 node");
    SearchResult result;
    result.m = g.modulus();

    // The identity-order greedy set always contains 0.
    ResidueSet greedy = greedy_independent(g);
    if (g.modulus() > kMaxExactSearchModulus) {
        result.best_set = std::move(greedy);
        result.budget_exhausted = true;
        return result;
    }

    // Every independent set rotates onto one containing 0, so searching the
    // sets through 0 loses no size.
    CliqueSearch search(g, budget);
    search.seed(std::vector<std::uint64_t>(greedy.elements().begin() + 1, greedy.elements().end()));
    search.run();

    std::vector<std::uint64_t> best = search.best();
    best.push_back(0);
    result.best_set = ResidueSet(g.modulus(), std::move(best));
    result.nodes_explored = search.nodes();
    result.budget_exhausted = search.aborted();
    result.optimal = !search.aborted();
    return result;
}

RankTable rank_moduli(std::uint64_t m_lo, std::uint64_t m_hi, std::uint64_t budget, unsigned threads)
{
    if (m_lo < 2 || m_lo > m_hi || m_hi > kMaxGraphModulus)
        throw InvalidArgument("rank range must satisfy 2 <= from <= to <= " +
                              std::to_string(kMaxGraphModulus));
    if (budget < 1)
        throw InvalidArgument("search budget must be at least 1 node");

    const std::size_t count = m_hi - m_lo + 1;
    std::vector<RankRow> rows(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            RankRow& row = rows[i];
            row.m = m_lo + i;
            if (!is_squarefree(row.m)) {
                row.skipped_reason = "not squarefree";
                continue;
            }
            try {
                auto res = exact_mis(build_graph(row.m), budget);
                row.size = res.best_set.size();
                row.optimal = res.optimal;
                row.nodes = res.nodes_explored;
                row.exponent = exponent(row.m, row.size);
                row.best_set = std::move(res.best_set);
            } catch (const CapacityError& e) {
                row.skipped_reason = e.what();
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::stable_sort(rows.begin(), rows.end(), [](const RankRow& a, const RankRow& b) {
        if (a.skipped() != b.skipped())
            return !a.skipped();
        if (!a.skipped() && a.exponent != b.exponent)
            return a.exponent > b.exponent;
        return a.m < b.m;
    });
    return RankTable{std::move(rows)};
}

std::string to_csv(const RankTable& table)
{
    std::ostringstream os;
    os << "m,size,optimal,exponent,nodes,skipped_reason\n";
    for (const auto& r : table.rows) {
        if (r.skipped()) {
            os << r.m << ",,,,," << r.skipped_reason << '\n';
            continue;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", r.exponent);
        os << r.m << ',' << r.size << ',' << (r.optimal ? "true" : "false") << ',' << buf << ','
           << r.nodes << ",\n";
    }
    return os.str();
}

std::string to_json(const SearchResult& result)
{
    detail::Json j;
    j["m"] = result.m;
    j["size"] = result.best_set.size();
    j["optimal"] = result.optimal;
    j["nodes"] = result.nodes_explored;
    j["budget_exhausted"] = result.budget_exhausted;
    j["exponent"] = result.m >= 2 && !result.best_set.empty()
                        ? detail::Json(exponent(result.m, result.best_set.size()))
                        : detail::Json(nullptr);
    j["elements"] = std::vector<std::uint64_t>(result.best_set.elements().begin(),
                                               result.best_set.elements().end());
    return j.dump() + "\n";
}

} // namespace sdf
