// sdf_forge: build, verify, search and certify square-difference-free sets.
//
// Exit status: 0 success, 1 verification found a violation, 2 usage error.

#include "sdf_forge/coloring.hpp"
#include "sdf_forge/construct.hpp"
#include "sdf_forge/mis.hpp"
#include "sdf_forge/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace fs = std::filesystem;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts plain integers, "10^7" and "1e7".
std::uint64_t parse_count(const std::string& text)
{
    static const std::regex pow_form(R"((\d+)\^(\d+))");
    static const std::regex sci_form(R"((\d+)[eE](\d+))");
    static const std::regex plain(R"(\d+)");
    std::smatch mt;
    auto pow10 = [](std::uint64_t base, unsigned e) { return sdf::checked_pow(base, e); };
    if (std::regex_match(text, mt, pow_form))
        return pow10(std::stoull(mt[1]), static_cast<unsigned>(std::stoul(mt[2])));
    if (std::regex_match(text, mt, sci_form)) {
        std::uint64_t out = 0;
        if (__builtin_mul_overflow(std::stoull(mt[1]), pow10(10, static_cast<unsigned>(std::stoul(mt[2]))), &out))
            throw UsageError("count out of range: " + text);
        return out;
    }
    if (std::regex_match(text, plain))
        return std::stoull(text);
    throw UsageError("not a count: '" + text + "'");
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& content)
{
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + out_path);
    out << content;
}

std::optional<fs::path> seed_dir()
{
    const char* dir = std::getenv("SDF_FORGE_SEED_DIR");
    if (!dir || !*dir)
        return std::nullopt;
    return fs::path(dir);
}

void cache_certificate(const sdf::ConstructionCertificate& cert, const std::string& json)
{
    auto dir = seed_dir();
    if (!dir)
        return;
    fs::create_directories(*dir);
    std::string name = sdf::to_string(cert.kind);
    if (cert.kind == sdf::CertificateKind::bertrand)
        name += "_n" + std::to_string(cert.modulus);
    else
        name += "_m" + std::to_string(cert.m) + (cert.k ? "_k" + std::to_string(*cert.k) : "");
    std::ofstream(*dir / (name + ".json"), std::ios::binary) << json;
}

std::string describe(const sdf::Violation& v, std::uint64_t modulus, bool modular)
{
    std::ostringstream os;
    os << "violation x=" << v.x << " y=" << v.y;
    if (v.witness_root) {
        if (modular)
            os << " (x - y = " << *v.witness_root << "^2 mod " << modulus << ")";
        else
            os << " (x - y = " << *v.witness_root << "^2)";
    }
    return os.str();
}

bool looks_like_json(const std::string& text)
{
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

struct Options {
    std::optional<std::uint64_t> mod;
    std::optional<std::uint64_t> n;
    std::optional<unsigned> k;
    std::string set_file;
    std::string x_file;
    std::string from = "2";
    std::string to;
    std::string budget = "10^7";
    std::optional<unsigned> colors;
    std::string format;
    unsigned threads = 1;
    std::string out;
    bool bertrand = false;
    bool paper = false;
};

std::string verify_report(const Options& opt, std::string& report)
{
    const sdf::CheckOptions check{sdf::ScanMode::automatic, opt.threads};
    const std::string text = slurp(opt.set_file);
    if (!looks_like_json(text)) {
        std::istringstream in(text);
        auto set = sdf::read_set(in);
        if (auto* r = std::get_if<sdf::ResidueSet>(&set)) {
            if (opt.mod && *opt.mod != r->modulus())
                throw UsageError("--mod " + std::to_string(*opt.mod) + " does not match the file's modulus " +
                                 std::to_string(r->modulus()));
            const auto v = sdf::check_sdf_mod(*r, check);
            std::ostringstream os;
            os << "SDFMOD(" << r->modulus() << "): " << (v ? "no" : "yes") << ", |S|=" << r->size();
            if (v)
                os << ", " << describe(*v, r->modulus(), true);
            report = os.str() + "\n";
            return v ? "violation" : "";
        }
        const auto& a = std::get<sdf::IntegerSet>(set);
        if (opt.mod)
            throw UsageError("--mod given but the set file holds an integer set");
        const auto v = sdf::check_sdf(a, check);
        std::ostringstream os;
        os << "SDF([" << a.universe() << "]): " << (v ? "no" : "yes") << ", |A|=" << a.size();
        if (v)
            os << ", " << describe(*v, 0, false);
        report = os.str() + "\n";
        return v ? "violation" : "";
    }

    if (text.find("\"base_certificate\"") != std::string::npos) {
        const auto cert = sdf::fc_certificate_from_json(text);
        std::optional<sdf::Violation> base_violation;
        if (cert.base)
            base_violation = sdf::recheck(*cert.base, check);
        const auto pair = sdf::validate_coloring(cert.coloring, opt.threads);
        const bool ok = !pair && !base_violation && cert.coloring.c <= cert.c;
        std::ostringstream os;
        os << "f(" << cert.c << ") >= " << cert.n << ": " << (ok ? "yes" : "no")
           << ", colors used=" << cert.colors_used() << ", recorded validated=" << (cert.validated ? "true" : "false");
        if (pair)
            os << ", monochromatic pair x=" << pair->first << " y=" << pair->second;
        if (base_violation)
            os << ", base set " << describe(*base_violation, cert.base->modulus, true);
        report = os.str() + "\n";
        if (ok != cert.validated)
            return "verdict differs from the recorded one";
        return ok ? "" : "violation";
    }

    const auto cert = sdf::certificate_from_json(text);
    if (opt.mod && *opt.mod != cert.modulus)
        throw UsageError("--mod does not match the certificate's modulus");
    const auto v = sdf::recheck(cert, check);
    const bool modular = cert.kind != sdf::CertificateKind::bertrand;
    std::ostringstream os;
    os << (modular ? "SDFMOD(" : "SDF([") << cert.modulus << (modular ? ")" : "])") << ": " << (v ? "no" : "yes")
       << ", |S|=" << cert.size() << ", certificate " << sdf::to_string(cert.kind) << " "
       << sdf::to_string(cert.verified);
    if (v)
        os << ", " << describe(*v, cert.modulus, modular);
    report = os.str() + "\n";
    return v ? "violation" : "";
}

int run_verify(const Options& opt)
{
    if (opt.set_file.empty())
        throw UsageError("verify needs --set-file");
    std::string report;
    const std::string problem = verify_report(opt, report);
    emit(opt.out, report);
    if (!problem.empty()) {
        if (problem != "violation")
            std::cerr << problem << '\n';
        return kExitViolation;
    }
    return 0;
}

int run_construct(const Options& opt)
{
    const sdf::CheckOptions check{sdf::ScanMode::automatic, opt.threads};
    sdf::ConstructionCertificate cert;
    if (opt.bertrand) {
        if (!opt.n)
            throw UsageError("construct --bertrand needs --n");
        cert = sdf::bertrand_set(*opt.n);
    } else if (opt.paper) {
        auto params = sdf::paper_base();
        if (opt.k) {
            params.k = *opt.k;
            cert = sdf::iterate(params, check);
        } else {
            cert = sdf::base_certificate(params.base, check);
        }
    } else {
        if (opt.set_file.empty())
            throw UsageError("construct needs --bertrand, --paper or --set-file with a base set");
        auto set = sdf::read_set_file(opt.set_file);
        auto* base = std::get_if<sdf::ResidueSet>(&set);
        if (!base)
            throw UsageError("base set file must hold a residue set ('mod <m>')");
        if (opt.mod && *opt.mod != base->modulus())
            throw UsageError("--mod does not match the base set's modulus");
        if (opt.k)
            cert = sdf::iterate(sdf::make_lift_params(*base, *opt.k), check);
        else
            cert = sdf::base_certificate(*base, check);
    }

    const std::string json = sdf::to_json(cert);
    cache_certificate(cert, json);
    if (opt.format == "text")
        emit(opt.out, sdf::format_set(cert.result));
    else
        emit(opt.out, json);
    return 0;
}

int run_lift(const Options& opt)
{
    if (opt.set_file.empty() || opt.x_file.empty() || !opt.k)
        throw UsageError("lift needs --set-file (base S), --x-file (previous X) and --k");
    auto s = sdf::read_set_file(opt.set_file);
    auto x = sdf::read_set_file(opt.x_file);
    auto* base = std::get_if<sdf::ResidueSet>(&s);
    auto* prev = std::get_if<sdf::ResidueSet>(&x);
    if (!base || !prev)
        throw UsageError("lift inputs must be residue sets");
    if (opt.mod && *opt.mod != base->modulus())
        throw UsageError("--mod does not match the base set's modulus");
    emit(opt.out, sdf::format_set(sdf::lift(*base, *prev, *opt.k)));
    return 0;
}

int run_search(const Options& opt)
{
    if (!opt.mod)
        throw UsageError("search needs --mod");
    const auto result = sdf::exact_mis(sdf::build_graph(*opt.mod), parse_count(opt.budget));
    if (opt.format == "text")
        emit(opt.out, sdf::format_set(result.best_set));
    else
        emit(opt.out, sdf::to_json(result));
    return 0;
}

int run_rank(const Options& opt)
{
    if (opt.to.empty())
        throw UsageError("rank needs --to");
    const auto table = sdf::rank_moduli(parse_count(opt.from), parse_count(opt.to), parse_count(opt.budget),
                                        opt.threads);
    emit(opt.out, sdf::to_csv(table));
    return 0;
}

int run_cover(const Options& opt)
{
    if (opt.set_file.empty())
        throw UsageError("cover needs --set-file");
    auto set = sdf::read_set_file(opt.set_file);
    sdf::IntegerSet base;
    if (auto* r = std::get_if<sdf::ResidueSet>(&set)) {
        sdf::ConstructionCertificate tmp;
        tmp.result = *r;
        base = sdf::integer_set_of(tmp);
    } else {
        base = std::get<sdf::IntegerSet>(set);
    }
    const std::uint64_t n = opt.n.value_or(base.universe());
    const auto cover = sdf::greedy_cover(base, n);
    emit(opt.out, sdf::to_json(cover));
    return 0;
}

std::vector<sdf::ConstructionCertificate> load_family()
{
    std::vector<sdf::ConstructionCertificate> family;
    if (auto dir = seed_dir(); dir && fs::is_directory(*dir)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(*dir))
            if (entry.path().extension() == ".json")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            auto cert = sdf::certificate_from_json(slurp(f.string()));
            if (cert.verified == sdf::Verification::brute_force_checked &&
                cert.modulus <= sdf::kBruteForceModulusCutoff && cert.size() > 0)
                family.push_back(std::move(cert));
        }
    }
    if (family.empty()) {
        const auto toy = sdf::make_lift_params(sdf::ResidueSet(5, {0, 2}), 1);
        auto toy2 = toy;
        toy2.k = 2;
        family.push_back(sdf::iterate(toy));
        family.push_back(sdf::iterate(toy2));
        family.push_back(sdf::iterate(sdf::paper_base()));
    }
    return family;
}

int run_fc_bound(const Options& opt)
{
    if (!opt.colors)
        throw UsageError("fc-bound needs --colors");
    const auto family = load_family();
    const auto cert = sdf::fc_bound(*opt.colors, family, opt.threads);
    emit(opt.out, sdf::to_json(cert));
    return cert.validated ? 0 : kExitViolation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Construct, verify, search and certify square-difference-free sets"};
    app.require_subcommand(1);
    Options opt;

    auto count_opt = [](CLI::App* sub, const std::string& flag, auto& target, const std::string& help) {
        return sub->add_option_function<std::string>(
            flag, [&target](const std::string& s) { target = parse_count(s); }, help);
    };
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--threads", opt.threads, "Worker threads (results do not depend on it)")
            ->check(CLI::Range(1u, 1024u));
        sub->add_option("--out", opt.out, "Write output here instead of stdout");
    };

    auto* verify = app.add_subcommand("verify", "Check a set file or certificate");
    verify->add_option("--set-file", opt.set_file, "Set file or certificate JSON")->required();
    count_opt(verify, "--mod", opt.mod, "Expected modulus");
    common(verify);

    auto* construct = app.add_subcommand("construct", "Build a certified SDF or SDFMOD set");
    construct->add_flag("--bertrand", opt.bertrand, "Multiples-of-a-prime set in [n]");
    construct->add_flag("--paper", opt.paper, "The 12-element base set mod 205");
    count_opt(construct, "--n", opt.n, "Universe bound for --bertrand");
    count_opt(construct, "--mod", opt.mod, "Expected base modulus");
    construct->add_option("--k", opt.k, "Lifting depth")->check(CLI::Range(1u, 64u));
    construct->add_option("--set-file", opt.set_file, "Base set (mod m)");
    common(construct);

    auto* lift = app.add_subcommand("lift", "One lifting step: S mod m, X mod m^(2k-2) -> Y mod m^(2k)");
    count_opt(lift, "--mod", opt.mod, "Expected base modulus");
    lift->add_option("--set-file", opt.set_file, "Base set S (mod m)");
    lift->add_option("--x-file", opt.x_file, "Previous set X (mod m^(2k-2))");
    lift->add_option("--k", opt.k, "Lifting depth")->check(CLI::Range(1u, 64u));
    common(lift);

    auto* search = app.add_subcommand("search", "Maximum SDFMOD(m) set by branch and bound");
    count_opt(search, "--mod", opt.mod, "Modulus");
    search->add_option("--budget", opt.budget, "Node budget (e.g. 10^7)");
    common(search);

    auto* rank = app.add_subcommand("rank", "Rank squarefree moduli by growth exponent");
    rank->add_option("--from", opt.from, "Smallest modulus");
    rank->add_option("--to", opt.to, "Largest modulus");
    rank->add_option("--budget", opt.budget, "Node budget per modulus");
    common(rank);

    auto* cover = app.add_subcommand("cover", "Greedy translate cover of [n]");
    cover->add_option("--set-file", opt.set_file, "Base set");
    count_opt(cover, "--n", opt.n, "Universe size (defaults to the set's bound)");
    common(cover);

    auto* fc = app.add_subcommand("fc-bound", "Certify f(c) >= n from a certificate family");
    fc->add_option("--colors", opt.colors, "Number of colors c")->check(CLI::Range(1u, 1u << 30));
    common(fc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*verify)
            return run_verify(opt);
        if (*construct)
            return run_construct(opt);
        if (*lift)
            return run_lift(opt);
        if (*search)
            return run_search(opt);
        if (*rank)
            return run_rank(opt);
        if (*cover)
            return run_cover(opt);
        if (*fc)
            return run_fc_bound(opt);
    } catch (const sdf::ViolationError& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sdf::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sdf::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
