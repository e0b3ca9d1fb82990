#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace sdf {

/// A pair x != y in a set whose difference x - y is a square (mod m for
/// residue sets, over the integers otherwise). witness_root is the smallest
/// a >= 0 with a^2 = x - y.
struct Violation {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::optional<std::uint64_t> witness_root;

    friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(const Violation& v);

/// Residues of Z_m, stored ascending in [0, m). The residue 0 stands for the
/// element m of {1, ..., m}.
class ResidueSet {
public:
    ResidueSet() = default;
    /// Sorts the input; throws InvalidArgument on duplicates or out-of-range values.
    ResidueSet(std::uint64_t modulus, std::vector<std::uint64_t> elements);

    std::uint64_t modulus() const { return modulus_; }
    std::span<const std::uint64_t> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(std::uint64_t r) const;

    /// The set {x + t mod m}.
    ResidueSet rotated(std::uint64_t t) const;

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    std::uint64_t modulus_ = 1;
    std::vector<std::uint64_t> elements_;
};

/// A subset of [n] = {1, ..., n}, stored ascending.
class IntegerSet {
public:
    IntegerSet() = default;
    IntegerSet(std::uint64_t universe, std::vector<std::uint64_t> elements);

    std::uint64_t universe() const { return universe_; }
    std::span<const std::uint64_t> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(std::uint64_t x) const;

    friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

private:
    std::uint64_t universe_ = 0;
    std::vector<std::uint64_t> elements_;
};

using AnySet = std::variant<ResidueSet, IntegerSet>;

// Set file: line 1 is "mod <m>" or "int <n>", line 2 the elements separated
// by single spaces, each line newline-terminated.
AnySet read_set(std::istream& in);
AnySet read_set_file(const std::string& path);
void write_set(std::ostream& out, const AnySet& set);
std::string format_set(const AnySet& set);

} // namespace sdf
