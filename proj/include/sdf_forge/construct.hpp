#pragma once

#include "sdf_forge/sets.hpp"
#include "sdf_forge/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace sdf {

/// Moduli up to this bound are verified pair-by-pair after construction;
/// larger ones carry only the lifting-lemma guarantee.
inline constexpr std::uint64_t kBruteForceModulusCutoff = 1'000'000;

/// Bertrand sets over [n] are re-checked with check_sdf up to this n.
inline constexpr std::uint64_t kBertrandCheckCutoff = 100'000'000;

/// Largest set iterate() will materialize.
inline constexpr std::uint64_t kMaxMaterializedSize = 50'000'000;

/// Base data for the lifting recursion: a squarefree modulus m, an SDFMOD(m)
/// set S and a depth k >= 1. Construct through make_lift_params, which
/// checks all three.
struct LiftParams {
    std::uint64_t m = 0;
    ResidueSet base;
    unsigned k = 1;
};

LiftParams make_lift_params(ResidueSet base, unsigned k);

enum class CertificateKind { bertrand, lift, base };
enum class Verification { brute_force_checked, guaranteed_by_lemma };

std::string to_string(CertificateKind kind);
std::string to_string(Verification v);

/// A constructed SDF or SDFMOD set together with how it was built and how
/// its property is known.
///
/// For `lift` and `base`, `m` is the base modulus and `modulus` is the
/// modulus of `result` (m^(2k), or m). For `bertrand`, `m` is the prime p and
/// `modulus` the universe bound n; `k` is unset.
struct ConstructionCertificate {
    CertificateKind kind = CertificateKind::base;
    std::uint64_t m = 0;
    std::optional<unsigned> k;
    std::uint64_t modulus = 0;
    AnySet result;
    std::uint64_t claimed_size = 0;
    Verification verified = Verification::guaranteed_by_lemma;
    std::optional<double> exponent;

    std::size_t size() const;
};

/// A = {p, 2p, ..., p^2} in [n] with p = bertrand_prime(n).
ConstructionCertificate bertrand_set(std::uint64_t n);

/// One lifting step: Y = {m^2 x + m z + b : x in X, z in [0, m), b in S},
/// an SDFMOD(m^(2k)) set of size m |S| |X|. X must live mod m^(2k-2).
///
/// Checks m squarefree and S SDF mod m. X is checked when its modulus is at
/// most kBruteForceModulusCutoff; above that its property is the caller's
/// responsibility. Throws ViolationError naming the failing pair.
ResidueSet lift(const ResidueSet& base, const ResidueSet& previous, unsigned k);

/// Applies lift k times from X0 = {0} mod 1.
ConstructionCertificate iterate(const LiftParams& params, CheckOptions opts = {});

/// Certificate for the base set itself (kind = base).
ConstructionCertificate base_certificate(const ResidueSet& base, CheckOptions opts = {});

/// Growth exponent 0.5 (1 + log_m s) of the sets built from an s-element base mod m.
double exponent(std::uint64_t m, std::uint64_t s);

/// m = 205 with the 12-element SDFMOD(205) base set, k = 1.
LiftParams paper_base();

/// Re-derives a certificate's verdict: brute force where the certificate
/// claims it, otherwise rebuilds the lift from the base residues (y mod m)
/// and compares element-for-element. Returns the first violation, if any;
/// throws InvalidArgument if the certificate is internally inconsistent.
std::optional<Violation> recheck(const ConstructionCertificate& cert, CheckOptions opts = {});

// Certificate JSON: {kind, m, k, modulus, size, exponent, verified, elements}.
std::string to_json(const ConstructionCertificate& cert);
ConstructionCertificate certificate_from_json(const std::string& text);

} // namespace sdf
