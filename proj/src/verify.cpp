#include "sdf_forge/verify.hpp"

#include "sdf_forge/parallel.hpp"

#include <algorithm>
#include <limits>

namespace sdf {

namespace {

// Membership oracle over a sorted element list: a bit table when the values
// are small enough, binary search otherwise.
class Membership {
public:
    explicit Membership(std::span<const std::uint64_t> elems) : elems_(elems)
    {
        if (!elems.empty() && elems.back() <= kTableLimit) {
            table_.assign(elems.back() + 1, false);
            for (auto x : elems)
                table_[x] = true;
        }
    }

    bool operator()(std::uint64_t x) const
    {
        if (!table_.empty())
            return x < table_.size() && table_[x];
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }

private:
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 30;
    std::span<const std::uint64_t> elems_;
    std::vector<bool> table_;
};

bool use_pair_scan(ScanMode mode, std::size_t n)
{
    if (mode == ScanMode::automatic)
        return n <= kPairScanLimit;
    return mode == ScanMode::pair_scan;
}

} // namespace

std::optional<Violation> check_sdf(const IntegerSet& set, CheckOptions opts)
{
    const auto a = set.elements();
    if (use_pair_scan(opts.mode, a.size())) {
        return first_hit<Violation>(a.size(), opts.threads, [&](std::size_t i) -> std::optional<Violation> {
            for (std::size_t j = i + 1; j < a.size(); ++j) {
                const std::uint64_t d = a[j] - a[i];
                const std::uint64_t r = isqrt(d);
                if (r * r == d)
                    return Violation{a[j], a[i], r};
            }
            return std::nullopt;
        });
    }

    if (a.empty())
        return std::nullopt;
    const Membership member(a);
    const std::uint64_t top = a.back();
    return first_hit<Violation>(a.size(), opts.threads, [&](std::size_t i) -> std::optional<Violation> {
        const std::uint64_t x = a[i];
        // squares ascending, so the first hit is the smallest partner
        for (std::uint64_t r = 1; r * r <= top - x; ++r)
            if (member(x + r * r))
                return Violation{x + r * r, x, r};
        return std::nullopt;
    });
}

std::optional<Violation> check_sdf_mod(const ResidueSet& set, CheckOptions opts)
{
    return check_sdf_mod(set, squares_mod(set.modulus()), opts);
}

std::optional<Violation> check_sdf_mod(const ResidueSet& set, const SquareTable& squares,
                                       CheckOptions opts)
{
    const std::uint64_t m = set.modulus();
    if (squares.modulus() != m)
        throw InvalidArgument("square table modulus " + std::to_string(squares.modulus()) +
                              " does not match set modulus " + std::to_string(m));
    const auto a = set.elements();

    auto oriented = [&](std::uint64_t lo, std::uint64_t hi) {
        // hi > lo; prefer x = hi when hi - lo is itself a square
        const std::uint64_t up = hi - lo;
        Violation v = squares.is_square(up) ? Violation{hi, lo, std::nullopt}
                                            : Violation{lo, hi, std::nullopt};
        v.witness_root = squares.root((v.x + m - v.y) % m);
        return v;
    };

    // pairs cost |S|^2 / 2, the indexed scan |S| * |Q|
    const bool pairs = opts.mode == ScanMode::automatic
                           ? a.size() <= kPairScanLimit || a.size() / 2 <= squares.count()
                           : use_pair_scan(opts.mode, a.size());
    if (pairs) {
        auto idx = first_hit<std::size_t>(a.size(), opts.threads, [&](std::size_t i) -> std::optional<std::size_t> {
            for (std::size_t j = i + 1; j < a.size(); ++j) {
                const std::uint64_t up = a[j] - a[i];
                if (squares.is_square(up) || squares.is_square(m - up))
                    return i * a.size() + j;
            }
            return std::nullopt;
        });
        if (idx)
            return oriented(a[*idx / a.size()], a[*idx % a.size()]);
        return std::nullopt;
    }

    if (a.empty())
        return std::nullopt;
    const auto nonzero = squares.nonzero_squares();
    const Membership member(a);
    auto partner = first_hit<std::pair<std::uint64_t, std::uint64_t>>(
        a.size(), opts.threads, [&](std::size_t i) -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
            const std::uint64_t x = a[i];
            std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
            for (auto s : nonzero) {
                const std::uint64_t up = (x + s) % m;
                const std::uint64_t down = (x + m - s) % m;
                if (up > x && up < best && member(up))
                    best = up;
                if (down > x && down < best && member(down))
                    best = down;
            }
            if (best == std::numeric_limits<std::uint64_t>::max())
                return std::nullopt;
            return std::pair{x, best};
        });
    if (partner)
        return oriented(partner->first, partner->second);
    return std::nullopt;
}

IntegerSet mod_implies_integer(const ResidueSet& set)
{
    if (auto v = check_sdf_mod(set))
        throw ViolationError("set is not SDF mod " + std::to_string(set.modulus()), *v);
    std::vector<std::uint64_t> out(set.elements().begin(), set.elements().end());
    if (!out.empty() && out.front() == 0) {
        out.erase(out.begin());
        out.push_back(set.modulus());
    }
    return IntegerSet(set.modulus(), std::move(out));
}

} // namespace sdf
