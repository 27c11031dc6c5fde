#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qparity/errors.hpp"
#include "qparity/genfun.hpp"
#include "qparity/partitions.hpp"
#include "qparity/series.hpp"
#include "qparity/verify.hpp"

namespace py = pybind11;
using namespace qparity;

namespace {

py::int_ to_py(const BigInt& v)
{
    std::string digits = v.get_str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v)
{
    return BigInt(py::str(v).cast<std::string>());
}

py::list coefficients(const TruncatedSeries& s)
{
    py::list out;
    for (std::size_t k = 0; k < s.order(); ++k) {
        if (s.domain() == Domain::Mod2)
            out.append(py::int_(s.odd(k) ? 1 : 0));
        else
            out.append(to_py(s.coefficient(k)));
    }
    return out;
}

py::dict report_dict(const VerificationReport& r)
{
    py::dict d;
    d["theorem"] = r.theorem_id;
    d["range"] = r.range;
    d["passed"] = r.passed;
    d["counterexample"] = r.counterexample ? py::object(py::int_(*r.counterexample)) : py::none();
    d["detail"] = r.detail;
    return d;
}

py::dict claim_dict(const CongruenceClaim& c)
{
    py::dict d;
    d["t"] = c.t;
    d["modulus"] = c.modulus;
    d["residue"] = c.residue;
    d["checked_bound"] = c.checked_bound;
    d["status"] = to_string(c.status);
    d["witness_n"] = c.witness_n ? py::object(py::int_(*c.witness_n)) : py::none();
    d["origin"] = to_string(c.origin);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    py::register_exception<DomainMismatch>(m, "DomainMismatch", PyExc_ValueError);
    py::register_exception<NotAUnit>(m, "NotAUnit", PyExc_ArithmeticError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_OverflowError);

    py::enum_<Domain>(m, "Domain")
        .value("INTEGERS", Domain::Integers)
        .value("MOD2", Domain::Mod2);

    py::class_<TruncatedSeries>(m, "Series")
        .def_static("from_integers",
                    [](const std::vector<py::int_>& cs) {
                        std::vector<BigInt> v;
                        v.reserve(cs.size());
                        for (const auto& c : cs)
                            v.push_back(from_py(c));
                        return TruncatedSeries::from_integers(std::move(v));
                    })
        .def_static("from_bits",
                    [](const std::vector<int>& bits) { return TruncatedSeries::from_bits(bits); })
        .def_property_readonly("domain", &TruncatedSeries::domain)
        .def_property_readonly("order", &TruncatedSeries::order)
        .def("coefficient",
             [](const TruncatedSeries& s, std::size_t k) {
                 if (k >= s.order())
                     throw py::index_error("coefficient index past the truncation order");
                 return s.domain() == Domain::Mod2 ? py::int_(s.odd(k) ? 1 : 0) : to_py(s.coefficient(k));
             })
        .def("coefficients", &coefficients)
        .def("support", &TruncatedSeries::support)
        .def("truncate", &TruncatedSeries::truncate)
        .def("__len__", &TruncatedSeries::order)
        .def("__eq__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a == b; })
        .def("__mul__", &series_mul)
        .def("__repr__", [](const TruncatedSeries& s) {
            return "<Series " + std::string(to_string(s.domain())) + " order=" + std::to_string(s.order()) + ">";
        });

    m.def("series_mul", &series_mul);
    m.def("series_recip", &series_recip);
    m.def("dissect", &dissect, py::arg("series"), py::arg("modulus"), py::arg("residue"));
    m.def("reduce_mod2", &reduce_mod2);
    m.def("dilate", &dilate);
    m.def("euler_product", &euler_product, py::arg("step"), py::arg("power"), py::arg("order"),
          py::arg("domain") = Domain::Integers);

    m.def("ptt_series", &ptt_series, py::arg("t"), py::arg("order"));
    m.def("ptt_mod2_series", &ptt_mod2_series, py::arg("t"), py::arg("order"));
    m.def("acore_series", &acore_series, py::arg("t"), py::arg("order"),
          py::arg("domain") = Domain::Integers);
    m.def("dissection_identity_check", &dissection_identity_check, py::arg("t"), py::arg("residue"),
          py::arg("order"));

    m.def("p_direct", [](unsigned modulus, unsigned start, unsigned n) {
        return p_direct(MexSpec(modulus, start), n);
    }, py::arg("modulus"), py::arg("start"), py::arg("n"));
    m.def("mex", [](std::vector<unsigned> parts, unsigned modulus, unsigned start) {
        return mex(Partition(std::move(parts)), MexSpec(modulus, start));
    }, py::arg("parts"), py::arg("modulus"), py::arg("start"));
    m.def("rank", [](std::vector<unsigned> parts) { return rank(Partition(std::move(parts))); });
    m.def("crank", [](std::vector<unsigned> parts) { return crank(Partition(std::move(parts))); });
    m.def("hook_lengths", [](std::vector<unsigned> parts) { return hook_lengths(Partition(std::move(parts))); });
    m.def("partitions", [](unsigned n) {
        std::vector<std::vector<unsigned>> out;
        for (const auto& p : enumerate_partitions(n))
            out.push_back(p.parts());
        return out;
    });
    m.def("a_t_direct", &a_t_direct, py::arg("t"), py::arg("n"));

    m.def("scan_congruences", [](std::size_t t, std::size_t modulus, std::size_t bound) {
        py::list out;
        for (const auto& c : scan_congruences(t, modulus, bound))
            out.append(claim_dict(c));
        return out;
    }, py::arg("t"), py::arg("modulus"), py::arg("bound"));
    m.def("run_suite", [](const std::string& name, std::size_t limit) {
        auto suite = parse_suite(name);
        if (!suite)
            throw py::value_error("unknown suite: " + name);
        py::list out;
        {
            py::gil_scoped_release release;
            auto reports = run_suite(*suite, limit);
            py::gil_scoped_acquire acquire;
            for (const auto& r : reports)
                out.append(report_dict(r));
        }
        return out;
    }, py::arg("suite"), py::arg("limit"));
    m.attr("suite_names") = [] {
        std::vector<std::string> v;
        for (auto s : suite_names())
            v.emplace_back(s);
        return v;
    }();
}
