#include "sdf_forge/sets.hpp"

#include "sdf_forge/residue.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sdf {

namespace {

void sort_unique_or_throw(std::vector<std::uint64_t>& v)
{
    if (!std::is_sorted(v.begin(), v.end()))
        std::sort(v.begin(), v.end());
    auto dup = std::adjacent_find(v.begin(), v.end());
    if (dup != v.end())
        throw InvalidArgument("duplicate element " + std::to_string(*dup));
}

std::uint64_t parse_u64(std::string_view tok)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InvalidArgument("not a nonnegative integer: '" + std::string(tok) + "'");
    return v;
}

} // namespace

std::string to_string(const Violation& v)
{
    std::string s = "(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")";
    if (v.witness_root)
        s += " with root " + std::to_string(*v.witness_root);
    return s;
}

ResidueSet::ResidueSet(std::uint64_t modulus, std::vector<std::uint64_t> elements)
    : modulus_(modulus), elements_(std::move(elements))
{
    if (modulus_ == 0)
        throw InvalidArgument("modulus must be positive");
    sort_unique_or_throw(elements_);
    if (!elements_.empty() && elements_.back() >= modulus_)
        throw InvalidArgument("residue " + std::to_string(elements_.back()) + " not below modulus " +
                              std::to_string(modulus_));
}

bool ResidueSet::contains(std::uint64_t r) const
{
    return std::binary_search(elements_.begin(), elements_.end(), r);
}

ResidueSet ResidueSet::rotated(std::uint64_t t) const
{
    std::vector<std::uint64_t> out;
    out.reserve(elements_.size());
    t %= modulus_;
    for (auto x : elements_)
        out.push_back((x + t) % modulus_);
    return ResidueSet(modulus_, std::move(out));
}

IntegerSet::IntegerSet(std::uint64_t universe, std::vector<std::uint64_t> elements)
    : universe_(universe), elements_(std::move(elements))
{
    sort_unique_or_throw(elements_);
    if (!elements_.empty() && elements_.front() == 0)
        throw InvalidArgument("integer sets live in {1, ..., n}; got 0");
    if (!elements_.empty() && elements_.back() > universe_)
        throw InvalidArgument("element " + std::to_string(elements_.back()) +
                              " exceeds universe bound " + std::to_string(universe_));
}

bool IntegerSet::contains(std::uint64_t x) const
{
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

AnySet read_set(std::istream& in)
{
    std::string header;
    if (!std::getline(in, header))
        throw InvalidArgument("empty set file");
    std::istringstream hs(header);
    std::string tag, bound, extra;
    hs >> tag >> bound;
    if (bound.empty() || (hs >> extra))
        throw InvalidArgument("malformed set header: '" + header + "'");
    const std::uint64_t b = parse_u64(bound);

    std::vector<std::uint64_t> elems;
    std::string line;
    if (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok)
            elems.push_back(parse_u64(tok));
    }
    // trailing blank lines are tolerated, anything else is not
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw InvalidArgument("unexpected content after the element line");

    if (tag == "mod")
        return ResidueSet(b, std::move(elems));
    if (tag == "int")
        return IntegerSet(b, std::move(elems));
    throw InvalidArgument("set header must start with 'mod' or 'int', got '" + tag + "'");
}

AnySet read_set_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open set file " + path);
    return read_set(in);
}

void write_set(std::ostream& out, const AnySet& set)
{
    std::visit(
        [&out](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ResidueSet>)
                out << "mod " << s.modulus() << '\n';
            else
                out << "int " << s.universe() << '\n';
            bool first = true;
            for (auto x : s.elements()) {
                if (!first)
                    out << ' ';
                out << x;
                first = false;
            }
            out << '\n';
        },
        set);
}

std::string format_set(const AnySet& set)
{
    std::ostringstream os;
    write_set(os, set);
    return os.str();
}

} // namespace sdf
