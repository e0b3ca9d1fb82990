#pragma once

#include "sdf_forge/construct.hpp"
#include "sdf_forge/sets.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sdf {

/// Colorings over universes larger than this are serialized as their cover
/// (base set + shifts) rather than an explicit assignment.
inline constexpr std::uint64_t kExplicitAssignmentLimit = 100'000;

/// (A + t) ∩ [n].
IntegerSet translate(const IntegerSet& set, std::int64_t t, std::uint64_t n);

/// Translates A + t_i of one base set whose union is [n].
struct TranslateCover {
    std::uint64_t n = 0;
    IntegerSet base;
    std::vector<std::int64_t> shifts;
    bool covered = false;
};

/// Guaranteed cover size floor((2n - 1) / |A| * ln n) + 1.
std::uint64_t cover_size_bound(std::uint64_t n, std::uint64_t set_size);

/// Greedy cover: each step takes the shift in [-(n-1), n-1] covering the
/// most uncovered points, smallest shift on ties.
TranslateCover greedy_cover(const IntegerSet& base, std::uint64_t n);

/// Coloring of [n]; assignment[x - 1] is the color of x, in 1..c.
struct Coloring {
    std::uint64_t n = 0;
    unsigned c = 0;
    std::vector<unsigned> assignment;
    std::vector<std::int64_t> shifts; ///< shift behind each color, empty when not cover-derived

    unsigned color(std::uint64_t x) const { return assignment[x - 1]; }
};

/// Least-index coloring from a cover. Shifts that are never the least index
/// are dropped and colors renumbered, so c counts colors actually used.
Coloring build_coloring(const TranslateCover& cover);

/// First (x, y), x < y, with equal colors and y - x a positive square.
std::optional<std::pair<std::uint64_t, std::uint64_t>> validate_coloring(const Coloring& chi,
                                                                         unsigned threads = 1);

/// One point of the certificate grid: a verified SDF set over [n] and the
/// coloring its greedy cover induces.
struct GridPoint {
    std::uint64_t n = 0;
    ConstructionCertificate certificate;
    Coloring coloring;
    bool validated = false;
};

/// Asserts f(c) >= n: some c-coloring of [n] has no monochromatic pair at
/// square distance.
struct FcCertificate {
    unsigned c = 0;
    std::uint64_t n = 0;
    std::optional<ConstructionCertificate> base; ///< absent for the trivial coloring
    Coloring coloring;
    bool validated = false;

    unsigned colors_used() const { return coloring.c; }
};

/// Builds cover, coloring and validation at each certificate's universe,
/// ascending in n. Certificates must be brute_force_checked with modulus at
/// most kBruteForceModulusCutoff.
std::vector<GridPoint> evaluate_family(std::span<const ConstructionCertificate> family,
                                       unsigned threads = 1);

/// Largest grid n whose coloring uses at most c colors, or the trivial
/// certificate n = c (color i -> {i}) when that is larger.
FcCertificate fc_bound(unsigned c, std::span<const GridPoint> grid);
FcCertificate fc_bound(unsigned c, std::span<const ConstructionCertificate> family,
                       unsigned threads = 1);

/// The integer SDF set a certificate stands for, inside [modulus].
IntegerSet integer_set_of(const ConstructionCertificate& cert);

// FcCertificate JSON: {c, n, colors_used, base_certificate, shifts, validated},
// plus "assignment" when n <= kExplicitAssignmentLimit.
std::string to_json(const FcCertificate& cert);
FcCertificate fc_certificate_from_json(const std::string& text);

std::string to_json(const TranslateCover& cover);

} // namespace sdf
