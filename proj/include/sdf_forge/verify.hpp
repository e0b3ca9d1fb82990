#pragma once

#include "sdf_forge/residue.hpp"
#include "sdf_forge/sets.hpp"

#include <optional>
#include <stdexcept>

namespace sdf {

enum class ScanMode {
    automatic,          ///< pair scan up to kPairScanLimit elements, otherwise whichever scan is cheaper
    pair_scan,          ///< O(|A|^2) double loop
    difference_indexed, ///< for each x, probe x + s for every square s
};

inline constexpr std::size_t kPairScanLimit = 10'000;

struct CheckOptions {
    ScanMode mode = ScanMode::automatic;
    unsigned threads = 1;
};

/// Thrown when an operation's input must be square-difference free but is not.
class ViolationError : public std::runtime_error {
public:
    ViolationError(const std::string& what, Violation v)
        : std::runtime_error(what + ": " + to_string(v)), violation_(v)
    {
    }
    const Violation& violation() const { return violation_; }

private:
    Violation violation_;
};

// Both checks report the first violating pair (i < j) in lexicographic index
// order, independent of the scan mode and thread count.

/// Absent iff no two elements of `set` differ by a perfect square. The
/// reported violation has x > y.
std::optional<Violation> check_sdf(const IntegerSet& set, CheckOptions opts = {});

/// Absent iff no ordered pair x != y in `set` has x - y a square mod m.
/// Where both orientations of a pair are squares, x is the larger element.
std::optional<Violation> check_sdf_mod(const ResidueSet& set, CheckOptions opts = {});
std::optional<Violation> check_sdf_mod(const ResidueSet& set, const SquareTable& squares,
                                       CheckOptions opts = {});

/// Reads an SDFMOD(m) set as a subset of [m] (0 becomes m). Throws
/// ViolationError if the set is not SDF mod m.
IntegerSet mod_implies_integer(const ResidueSet& set);

} // namespace sdf
