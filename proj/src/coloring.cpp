#include "sdf_forge/coloring.hpp"

#include "sdf_forge/parallel.hpp"

#include "json_io.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace sdf {

IntegerSet translate(const IntegerSet& set, std::int64_t t, std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (auto a : set.elements()) {
        const std::int64_t v = static_cast<std::int64_t>(a) + t;
        if (v >= 1 && static_cast<std::uint64_t>(v) <= n)
            out.push_back(static_cast<std::uint64_t>(v));
    }
    return IntegerSet(n, std::move(out));
}

std::uint64_t cover_size_bound(std::uint64_t n, std::uint64_t set_size)
{
    if (n == 0 || set_size == 0)
        throw InvalidArgument("cover bound needs n >= 1 and a nonempty set");
    const double steps = static_cast<double>(2 * n - 1) / static_cast<double>(set_size) *
                         std::log(static_cast<double>(n));
    return static_cast<std::uint64_t>(std::floor(steps)) + 1;
}

TranslateCover greedy_cover(const IntegerSet& base, std::uint64_t n)
{
    if (base.empty())
        throw InvalidArgument("cannot cover with an empty set");
    if (n == 0 || base.elements().back() > n)
        throw InvalidArgument("base set must lie inside [n]");

    const auto a = base.elements();
    const std::int64_t sn = static_cast<std::int64_t>(n);
    auto in_range = [sn](std::int64_t v) { return v >= 1 && v <= sn; };

    // Each step picks the shift with the largest current gain. Gains only
    // shrink as points get covered, so stale heap keys are upper bounds and a
    // shift rescored in the current round that surfaces on top is the true
    // argmax (lazy greedy). Ties resolve to the smaller shift via the heap order.
    struct Entry {
        std::uint64_t gain;
        std::int64_t shift;
        bool operator<(const Entry& o) const
        {
            return gain != o.gain ? gain < o.gain : shift > o.shift;
        }
    };
    std::priority_queue<Entry> heap;
    for (std::int64_t t = -(sn - 1); t <= sn - 1; ++t) {
        // points a with 1 <= a + t <= n
        auto lo = std::lower_bound(a.begin(), a.end(), static_cast<std::uint64_t>(std::max<std::int64_t>(1, 1 - t)));
        auto hi = std::upper_bound(a.begin(), a.end(), static_cast<std::uint64_t>(std::max<std::int64_t>(0, sn - t)));
        if (hi > lo)
            heap.push({static_cast<std::uint64_t>(hi - lo), t});
    }

    std::vector<bool> covered(n + 1, false);
    std::vector<std::uint64_t> scored_in(2 * n, 0);
    std::uint64_t round = 1;
    std::uint64_t uncovered = n;

    TranslateCover cover;
    cover.n = n;
    cover.base = base;
    while (uncovered > 0) {
        if (heap.empty())
            throw std::logic_error("greedy cover ran out of shifts");
        const Entry top = heap.top();
        heap.pop();
        const std::size_t slot = static_cast<std::size_t>(top.shift + sn - 1);
        if (scored_in[slot] == round) {
            for (auto x : a) {
                const std::int64_t v = static_cast<std::int64_t>(x) + top.shift;
                if (in_range(v))
                    covered[static_cast<std::size_t>(v)] = true;
            }
            uncovered -= top.gain;
            cover.shifts.push_back(top.shift);
            ++round;
            continue;
        }
        std::uint64_t gain = 0;
        for (auto x : a) {
            const std::int64_t v = static_cast<std::int64_t>(x) + top.shift;
            if (in_range(v) && !covered[static_cast<std::size_t>(v)])
                ++gain;
        }
        scored_in[slot] = round;
        if (gain > 0)
            heap.push({gain, top.shift});
    }
    cover.covered = true;
    return cover;
}

Coloring build_coloring(const TranslateCover& cover)
{
    if (!cover.covered)
        throw InvalidArgument("cover is not marked as covering [n]");
    const std::uint64_t n = cover.n;
    const std::int64_t sn = static_cast<std::int64_t>(n);
    std::vector<unsigned> raw(n, 0);
    std::vector<bool> used(cover.shifts.size(), false);
    for (std::size_t i = 0; i < cover.shifts.size(); ++i) {
        for (auto x : cover.base.elements()) {
            const std::int64_t v = static_cast<std::int64_t>(x) + cover.shifts[i];
            if (v >= 1 && v <= sn && raw[static_cast<std::size_t>(v - 1)] == 0) {
                raw[static_cast<std::size_t>(v - 1)] = static_cast<unsigned>(i + 1);
                used[i] = true;
            }
        }
    }
    for (std::uint64_t x = 0; x < n; ++x)
        if (raw[x] == 0)
            throw InvalidArgument("element " + std::to_string(x + 1) + " is not covered");

    Coloring chi;
    chi.n = n;
    std::vector<unsigned> remap(cover.shifts.size() + 1, 0);
    for (std::size_t i = 0; i < cover.shifts.size(); ++i) {
        if (!used[i])
            continue;
        chi.shifts.push_back(cover.shifts[i]);
        remap[i + 1] = static_cast<unsigned>(chi.shifts.size());
    }
    chi.c = static_cast<unsigned>(chi.shifts.size());
    chi.assignment.resize(n);
    for (std::uint64_t x = 0; x < n; ++x)
        chi.assignment[x] = remap[raw[x]];
    return chi;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> validate_coloring(const Coloring& chi,
                                                                         unsigned threads)
{
    using Pair = std::pair<std::uint64_t, std::uint64_t>;
    const std::uint64_t n = chi.n;
    return first_hit<Pair>(n, threads, [&](std::size_t i) -> std::optional<Pair> {
        const std::uint64_t x = i + 1;
        const unsigned col = chi.assignment[i];
        for (std::uint64_t r = 1; r * r <= n - x; ++r)
            if (chi.assignment[x + r * r - 1] == col)
                return Pair{x, x + r * r};
        return std::nullopt;
    });
}

IntegerSet integer_set_of(const ConstructionCertificate& cert)
{
    if (const auto* s = std::get_if<IntegerSet>(&cert.result))
        return *s;
    const auto& r = std::get<ResidueSet>(cert.result);
    std::vector<std::uint64_t> out(r.elements().begin(), r.elements().end());
    if (!out.empty() && out.front() == 0) {
        out.erase(out.begin());
        out.push_back(r.modulus());
    }
    return IntegerSet(r.modulus(), std::move(out));
}

std::vector<GridPoint> evaluate_family(std::span<const ConstructionCertificate> family,
                                       unsigned threads)
{
    if (family.empty())
        throw InvalidArgument("certificate family is empty");
    std::vector<GridPoint> grid;
    for (const auto& cert : family) {
        if (cert.verified != Verification::brute_force_checked)
            throw InvalidArgument("fc_bound needs brute-force checked certificates");
        if (cert.modulus > kBruteForceModulusCutoff)
            throw InvalidArgument("certificate universe " + std::to_string(cert.modulus) +
                                  " exceeds the validation cap");
        const IntegerSet set = integer_set_of(cert);
        if (set.empty())
            throw InvalidArgument("certificate set is empty");
        GridPoint pt;
        pt.n = cert.modulus;
        pt.certificate = cert;
        pt.coloring = build_coloring(greedy_cover(set, pt.n));
        pt.validated = !validate_coloring(pt.coloring, threads).has_value();
        grid.push_back(std::move(pt));
    }
    std::stable_sort(grid.begin(), grid.end(),
                     [](const GridPoint& a, const GridPoint& b) { return a.n < b.n; });
    return grid;
}

FcCertificate fc_bound(unsigned c, std::span<const GridPoint> grid)
{
    if (c < 1)
        throw InvalidArgument("color count must be at least 1");
    const GridPoint* best = nullptr;
    for (const auto& pt : grid)
        if (pt.validated && pt.coloring.c <= c && (!best || pt.n > best->n))
            best = &pt;

    FcCertificate out;
    out.c = c;
    if (best && best->n >= c) {
        out.n = best->n;
        out.base = best->certificate;
        out.coloring = best->coloring;
        out.validated = true;
        return out;
    }
    // trivial: color i -> {i} over [c]
    out.n = c;
    out.coloring.n = c;
    out.coloring.c = c;
    out.coloring.assignment.resize(c);
    for (unsigned i = 0; i < c; ++i)
        out.coloring.assignment[i] = i + 1;
    out.validated = !validate_coloring(out.coloring).has_value();
    return out;
}

FcCertificate fc_bound(unsigned c, std::span<const ConstructionCertificate> family, unsigned threads)
{
    const auto grid = evaluate_family(family, threads);
    return fc_bound(c, grid);
}

std::string to_json(const FcCertificate& cert)
{
    detail::Json j;
    j["c"] = cert.c;
    j["n"] = cert.n;
    j["colors_used"] = cert.colors_used();
    j["base_certificate"] = cert.base ? detail::certificate_to_json(*cert.base) : detail::Json(nullptr);
    j["shifts"] = cert.coloring.shifts;
    j["validated"] = cert.validated;
    if (cert.n <= kExplicitAssignmentLimit)
        j["assignment"] = cert.coloring.assignment;
    return j.dump() + "\n";
}

FcCertificate fc_certificate_from_json(const std::string& text)
{
    try {
        const auto j = detail::Json::parse(text);
        FcCertificate out;
        out.c = j.at("c").get<unsigned>();
        out.n = j.at("n").get<std::uint64_t>();
        out.validated = j.at("validated").get<bool>();
        const auto shifts = j.at("shifts").get<std::vector<std::int64_t>>();
        if (!j.at("base_certificate").is_null()) {
            out.base = detail::certificate_from_json(j.at("base_certificate"));
            TranslateCover cover;
            cover.n = out.n;
            cover.base = integer_set_of(*out.base);
            cover.shifts = shifts;
            cover.covered = true;
            out.coloring = build_coloring(cover);
            if (out.coloring.shifts != shifts)
                throw InvalidArgument("stored shifts include unused colors");
            if (j.contains("assignment") &&
                j.at("assignment").get<std::vector<unsigned>>() != out.coloring.assignment)
                throw InvalidArgument("stored assignment disagrees with the cover");
        } else {
            out.coloring.n = out.n;
            out.coloring.assignment = j.at("assignment").get<std::vector<unsigned>>();
            if (out.coloring.assignment.size() != out.n)
                throw InvalidArgument("assignment length differs from n");
            unsigned c = 0;
            for (auto col : out.coloring.assignment)
                c = std::max(c, col);
            out.coloring.c = c;
        }
        if (out.colors_used() != j.at("colors_used").get<unsigned>())
            throw InvalidArgument("colors_used disagrees with the coloring");
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed fc certificate JSON: ") + e.what());
    }
}

std::string to_json(const TranslateCover& cover)
{
    detail::Json j;
    j["n"] = cover.n;
    j["base_size"] = cover.base.size();
    j["bound"] = cover_size_bound(cover.n, cover.base.size());
    j["covered"] = cover.covered;
    j["shifts"] = cover.shifts;
    j["base"] = std::vector<std::uint64_t>(cover.base.elements().begin(), cover.base.elements().end());
    return j.dump() + "\n";
}

} // namespace sdf
