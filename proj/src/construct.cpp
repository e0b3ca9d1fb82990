#include "sdf_forge/construct.hpp"

#include "json_io.hpp"

#include <algorithm>
#include <cmath>

namespace sdf {

namespace {

const std::vector<std::uint64_t> kBase205 = {0, 2, 8, 14, 77, 79, 85, 96, 103, 109, 111, 181};

void require_base(const ResidueSet& base)
{
    const std::uint64_t m = base.modulus();
    if (!is_squarefree(m))
        throw InvalidArgument("lifting needs a squarefree modulus; " + to_string(factorize(m)));
    if (base.empty())
        throw InvalidArgument("lifting needs a nonempty base set");
    if (auto v = check_sdf_mod(base))
        throw ViolationError("base set is not SDF mod " + std::to_string(m), *v);
}

// Y = {m^2 x + m z + b}; ascending because m z + b < m^2 and S is sorted.
ResidueSet lift_unchecked(const ResidueSet& base, const ResidueSet& previous, std::uint64_t modulus)
{
    const std::uint64_t m = base.modulus();
    const std::uint64_t m2 = m * m;
    std::vector<std::uint64_t> out;
    out.reserve(previous.size() * m * base.size());
    for (auto x : previous.elements())
        for (std::uint64_t z = 0; z < m; ++z)
            for (auto b : base.elements())
                out.push_back(m2 * x + m * z + b);
    return ResidueSet(modulus, std::move(out));
}

std::uint64_t lifted_size(std::uint64_t m, std::uint64_t s, unsigned k)
{
    std::uint64_t per_step = 0;
    if (__builtin_mul_overflow(m, s, &per_step))
        throw CapacityError("m |S| overflows");
    return checked_pow(per_step, k);
}

} // namespace

LiftParams make_lift_params(ResidueSet base, unsigned k)
{
    if (k < 1)
        throw InvalidArgument("lifting depth k must be at least 1");
    require_base(base);
    const std::uint64_t m = base.modulus();
    return LiftParams{m, std::move(base), k};
}

std::string to_string(CertificateKind kind)
{
    switch (kind) {
    case CertificateKind::bertrand: return "bertrand";
    case CertificateKind::lift: return "lift";
    case CertificateKind::base: return "base";
    }
    return "?";
}

std::string to_string(Verification v)
{
    return v == Verification::brute_force_checked ? "brute_force_checked" : "guaranteed_by_lemma";
}

std::size_t ConstructionCertificate::size() const
{
    return std::visit([](const auto& s) { return s.size(); }, result);
}

ConstructionCertificate bertrand_set(std::uint64_t n)
{
    const std::uint64_t p = bertrand_prime(n);
    std::vector<std::uint64_t> elems;
    elems.reserve(p);
    for (std::uint64_t i = 1; i <= p; ++i)
        elems.push_back(i * p);

    ConstructionCertificate cert;
    cert.kind = CertificateKind::bertrand;
    cert.m = p;
    cert.modulus = n;
    cert.result = IntegerSet(n, std::move(elems));
    cert.claimed_size = p;
    cert.exponent = 0.5;
    cert.verified = Verification::guaranteed_by_lemma;
    if (n <= kBertrandCheckCutoff) {
        if (auto v = check_sdf(std::get<IntegerSet>(cert.result)))
            throw ViolationError("bertrand set failed verification", *v);
        cert.verified = Verification::brute_force_checked;
    }
    return cert;
}

ResidueSet lift(const ResidueSet& base, const ResidueSet& previous, unsigned k)
{
    if (k < 1)
        throw InvalidArgument("lifting depth k must be at least 1");
    require_base(base);
    const std::uint64_t m = base.modulus();
    const std::uint64_t prev_mod = checked_pow(m, 2 * k - 2);
    const std::uint64_t modulus = checked_pow(m, 2 * k);
    if (previous.modulus() != prev_mod)
        throw InvalidArgument("previous set must live mod m^(2k-2) = " + std::to_string(prev_mod) +
                              ", got mod " + std::to_string(previous.modulus()));
    if (prev_mod <= kBruteForceModulusCutoff)
        if (auto v = check_sdf_mod(previous))
            throw ViolationError("previous set is not SDF mod " + std::to_string(prev_mod), *v);
    std::uint64_t size = 0;
    if (__builtin_mul_overflow(previous.size(), m * base.size(), &size) || size > kMaxMaterializedSize)
        throw CapacityError("lifted set too large to materialize");
    return lift_unchecked(base, previous, modulus);
}

ConstructionCertificate iterate(const LiftParams& params, CheckOptions opts)
{
    const std::uint64_t m = params.m;
    if (params.base.modulus() != m)
        throw InvalidArgument("base set modulus does not match m");
    if (params.k < 1)
        throw InvalidArgument("lifting depth k must be at least 1");
    const std::uint64_t modulus = checked_pow(m, 2 * params.k);
    const std::uint64_t size = lifted_size(m, params.base.size(), params.k);
    if (size > kMaxMaterializedSize)
        throw CapacityError("lifted set of size " + std::to_string(size) +
                            " exceeds the materialization cap of " +
                            std::to_string(kMaxMaterializedSize));
    require_base(params.base);

    ResidueSet current(1, {0});
    for (unsigned step = 1; step <= params.k; ++step)
        current = lift_unchecked(params.base, current, checked_pow(m, 2 * step));

    ConstructionCertificate cert;
    cert.kind = CertificateKind::lift;
    cert.m = m;
    cert.k = params.k;
    cert.modulus = modulus;
    cert.claimed_size = size;
    cert.exponent = exponent(m, params.base.size());
    cert.verified = Verification::guaranteed_by_lemma;
    if (current.size() != size)
        throw std::logic_error("lift produced " + std::to_string(current.size()) +
                               " elements, expected " + std::to_string(size));
    if (modulus <= kBruteForceModulusCutoff) {
        if (auto v = check_sdf_mod(current, opts))
            throw ViolationError("lifted set failed verification", *v);
        cert.verified = Verification::brute_force_checked;
    }
    cert.result = std::move(current);
    return cert;
}

ConstructionCertificate base_certificate(const ResidueSet& base, CheckOptions opts)
{
    if (auto v = check_sdf_mod(base, opts))
        throw ViolationError("base set is not SDF mod " + std::to_string(base.modulus()), *v);
    ConstructionCertificate cert;
    cert.kind = CertificateKind::base;
    cert.m = base.modulus();
    cert.modulus = base.modulus();
    cert.claimed_size = base.size();
    if (base.modulus() >= 2 && !base.empty())
        cert.exponent = exponent(base.modulus(), base.size());
    cert.verified = Verification::brute_force_checked;
    cert.result = base;
    return cert;
}

double exponent(std::uint64_t m, std::uint64_t s)
{
    if (m < 2 || s < 1)
        throw InvalidArgument("exponent needs m >= 2 and s >= 1");
    return 0.5 * (1.0 + std::log(static_cast<double>(s)) / std::log(static_cast<double>(m)));
}

LiftParams paper_base()
{
    return make_lift_params(ResidueSet(205, kBase205), 1);
}

std::optional<Violation> recheck(const ConstructionCertificate& cert, CheckOptions opts)
{
    if (cert.size() != cert.claimed_size)
        throw InvalidArgument("certificate claims " + std::to_string(cert.claimed_size) +
                              " elements but carries " + std::to_string(cert.size()));

    if (cert.kind == CertificateKind::bertrand) {
        const auto* set = std::get_if<IntegerSet>(&cert.result);
        if (!set)
            throw InvalidArgument("bertrand certificate must carry an integer set");
        if (cert.verified == Verification::brute_force_checked)
            return check_sdf(*set, opts);
        // Lemma route: the set must be exactly {p, 2p, ..., p^2} for a prime p.
        if (!is_prime(cert.m) || set->size() != cert.m)
            throw InvalidArgument("bertrand certificate is not of the form {p, ..., p^2}");
        for (std::size_t i = 0; i < set->size(); ++i)
            if (set->elements()[i] != (i + 1) * cert.m)
                throw InvalidArgument("bertrand certificate is not of the form {p, ..., p^2}");
        return std::nullopt;
    }

    const auto* set = std::get_if<ResidueSet>(&cert.result);
    if (!set)
        throw InvalidArgument("modular certificate must carry a residue set");
    if (set->modulus() != cert.modulus)
        throw InvalidArgument("certificate modulus does not match its set");
    if (cert.verified == Verification::brute_force_checked)
        return check_sdf_mod(*set, opts);

    if (cert.kind != CertificateKind::lift || !cert.k)
        throw InvalidArgument("only lift certificates may rely on the lifting lemma");
    std::vector<std::uint64_t> base;
    for (auto y : set->elements())
        base.push_back(y % cert.m);
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    const auto params = make_lift_params(ResidueSet(cert.m, std::move(base)), *cert.k);
    const auto rebuilt = iterate(params, opts);
    if (std::get<ResidueSet>(rebuilt.result) != *set)
        throw InvalidArgument("certificate elements do not match the lift of their base residues");
    return std::nullopt;
}

namespace detail {

Json certificate_to_json(const ConstructionCertificate& cert)
{
    Json j;
    j["kind"] = to_string(cert.kind);
    j["m"] = cert.m;
    j["k"] = cert.k ? Json(*cert.k) : Json(nullptr);
    j["modulus"] = cert.modulus;
    j["size"] = cert.claimed_size;
    j["exponent"] = cert.exponent ? Json(*cert.exponent) : Json(nullptr);
    j["verified"] = to_string(cert.verified);
    j["elements"] = std::visit(
        [](const auto& s) { return Json(std::vector<std::uint64_t>(s.elements().begin(), s.elements().end())); },
        cert.result);
    return j;
}

ConstructionCertificate certificate_from_json(const Json& j)
{
    ConstructionCertificate cert;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "bertrand")
        cert.kind = CertificateKind::bertrand;
    else if (kind == "lift")
        cert.kind = CertificateKind::lift;
    else if (kind == "base")
        cert.kind = CertificateKind::base;
    else
        throw InvalidArgument("unknown certificate kind '" + kind + "'");
    cert.m = j.at("m").get<std::uint64_t>();
    if (!j.at("k").is_null())
        cert.k = j.at("k").get<unsigned>();
    cert.modulus = j.at("modulus").get<std::uint64_t>();
    cert.claimed_size = j.at("size").get<std::uint64_t>();
    if (!j.at("exponent").is_null())
        cert.exponent = j.at("exponent").get<double>();
    const auto verified = j.at("verified").get<std::string>();
    if (verified == "brute_force_checked")
        cert.verified = Verification::brute_force_checked;
    else if (verified == "guaranteed_by_lemma")
        cert.verified = Verification::guaranteed_by_lemma;
    else
        throw InvalidArgument("unknown verification status '" + verified + "'");
    auto elems = j.at("elements").get<std::vector<std::uint64_t>>();
    if (cert.kind == CertificateKind::bertrand)
        cert.result = IntegerSet(cert.modulus, std::move(elems));
    else
        cert.result = ResidueSet(cert.modulus, std::move(elems));
    return cert;
}

} // namespace detail

std::string to_json(const ConstructionCertificate& cert)
{
    return detail::certificate_to_json(cert).dump() + "\n";
}

ConstructionCertificate certificate_from_json(const std::string& text)
{
    try {
        return detail::certificate_from_json(detail::Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed certificate JSON: ") + e.what());
    }
}

} // namespace sdf
