#include "sdf_forge/coloring.hpp"
#include "sdf_forge/construct.hpp"
#include "sdf_forge/mis.hpp"
#include "sdf_forge/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

std::optional<std::tuple<std::uint64_t, std::uint64_t, std::optional<std::uint64_t>>>
as_tuple(const std::optional<sdf::Violation>& v)
{
    if (!v)
        return std::nullopt;
    return std::tuple{v->x, v->y, v->witness_root};
}

std::vector<std::uint64_t> vec(std::span<const std::uint64_t> s) { return {s.begin(), s.end()}; }

std::vector<sdf::ConstructionCertificate> default_family()
{
    auto toy = sdf::make_lift_params(sdf::ResidueSet(5, {0, 2}), 1);
    auto toy2 = toy;
    toy2.k = 2;
    return {sdf::iterate(toy), sdf::iterate(toy2), sdf::iterate(sdf::paper_base())};
}

} // namespace

PYBIND11_MODULE(_core, mod)
{
    mod.doc() = "Square-difference-free set construction and certification";

    py::register_exception<sdf::CapacityError>(mod, "CapacityError", PyExc_RuntimeError);

    mod.def(
        "check_sdf_mod",
        [](std::uint64_t m, std::vector<std::uint64_t> elems, unsigned threads) {
            return as_tuple(sdf::check_sdf_mod(sdf::ResidueSet(m, std::move(elems)),
                                               {sdf::ScanMode::automatic, threads}));
        },
        py::arg("m"), py::arg("elements"), py::arg("threads") = 1,
        "First violating pair (x, y, root) of a residue set, or None.");
    mod.def(
        "check_sdf",
        [](std::uint64_t n, std::vector<std::uint64_t> elems, unsigned threads) {
            return as_tuple(sdf::check_sdf(sdf::IntegerSet(n, std::move(elems)),
                                           {sdf::ScanMode::automatic, threads}));
        },
        py::arg("n"), py::arg("elements"), py::arg("threads") = 1,
        "First violating pair (x, y, root) of a subset of [n], or None.");
    mod.def(
        "squares_mod", [](std::uint64_t m) { return vec(sdf::squares_mod(m).nonzero_squares()); },
        py::arg("m"), "Nonzero squares mod m, ascending.");
    mod.def("is_squarefree", &sdf::is_squarefree, py::arg("m"));
    mod.def("bertrand_prime", &sdf::bertrand_prime, py::arg("n"));
    mod.def("exponent", &sdf::exponent, py::arg("m"), py::arg("s"));

    mod.def(
        "bertrand_set", [](std::uint64_t n) { return sdf::to_json(sdf::bertrand_set(n)); }, py::arg("n"));
    mod.def(
        "iterate",
        [](std::uint64_t m, std::vector<std::uint64_t> base, unsigned k, unsigned threads) {
            const auto params = sdf::make_lift_params(sdf::ResidueSet(m, std::move(base)), k);
            return sdf::to_json(sdf::iterate(params, {sdf::ScanMode::automatic, threads}));
        },
        py::arg("m"), py::arg("base"), py::arg("k"), py::arg("threads") = 1);
    mod.def(
        "lift",
        [](std::uint64_t m, std::vector<std::uint64_t> base, std::uint64_t x_mod, std::vector<std::uint64_t> x,
           unsigned k) {
            return vec(sdf::lift(sdf::ResidueSet(m, std::move(base)), sdf::ResidueSet(x_mod, std::move(x)), k)
                           .elements());
        },
        py::arg("m"), py::arg("base"), py::arg("x_mod"), py::arg("x"), py::arg("k"));
    mod.def("paper_base", [] { return vec(sdf::paper_base().base.elements()); });
    mod.def(
        "recheck",
        [](const std::string& json, unsigned threads) {
            return as_tuple(sdf::recheck(sdf::certificate_from_json(json), {sdf::ScanMode::automatic, threads}));
        },
        py::arg("certificate_json"), py::arg("threads") = 1);

    mod.def(
        "exact_mis",
        [](std::uint64_t m, std::uint64_t budget) {
            const auto g = sdf::build_graph(m);
            py::gil_scoped_release release;
            return sdf::to_json(sdf::exact_mis(g, budget));
        },
        py::arg("m"), py::arg("budget") = 10'000'000);
    mod.def(
        "rank_moduli",
        [](std::uint64_t lo, std::uint64_t hi, std::uint64_t budget, unsigned threads) {
            py::gil_scoped_release release;
            return sdf::to_csv(sdf::rank_moduli(lo, hi, budget, threads));
        },
        py::arg("lo"), py::arg("hi"), py::arg("budget") = 10'000'000, py::arg("threads") = 1);

    mod.def(
        "greedy_cover",
        [](std::uint64_t n, std::vector<std::uint64_t> elems) {
            return sdf::to_json(sdf::greedy_cover(sdf::IntegerSet(n, std::move(elems)), n));
        },
        py::arg("n"), py::arg("elements"));
    mod.def("cover_size_bound", &sdf::cover_size_bound, py::arg("n"), py::arg("set_size"));
    mod.def(
        "fc_bound",
        [](unsigned c, unsigned threads) {
            const auto family = default_family();
            py::gil_scoped_release release;
            return sdf::to_json(sdf::fc_bound(c, family, threads));
        },
        py::arg("c"), py::arg("threads") = 1);
}
