// Python bindings for the core library. Sequences and polynomials cross the
// boundary as plain lists of integer element encodings; traces and
// verification reports come back as dicts shaped exactly like the CLI's
// JSON output.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcq/binary.hpp"
#include "gcq/field.hpp"
#include "gcq/fold.hpp"
#include "gcq/games_chan.hpp"
#include "gcq/oracle.hpp"
#include "gcq/poly.hpp"

namespace py = pybind11;
using namespace gcq;

namespace {

PeriodicSequence make_sequence(const Field& field, std::vector<Elem> block) {
    return PeriodicSequence(field, std::move(block));
}

DensePoly make_poly(const Field& field, std::vector<Elem> coeffs) {
    return DensePoly(field, std::move(coeffs));
}

py::dict trace_dict(std::size_t value, const RecursionTrace& trace, const OpCounters& ops) {
    py::list levels;
    for (const auto& lv : trace.levels) {
        py::dict level;
        level["N"] = lv.period;
        level["kstar"] = lv.kstar;
        level["contribution"] = lv.contribution;
        levels.append(level);
    }
    py::dict d;
    d["value"] = value;
    d["levels"] = levels;
    d["base_value"] = trace.base_value;
    py::dict counters;
    counters["additions"] = ops.additions;
    counters["scalar_multiplications"] = ops.scalar_multiplications;
    counters["polynomial_divisions"] = ops.polynomial_divisions;
    counters["field_inversions"] = ops.field_inversions;
    d["ops"] = counters;
    return d;
}

SearchMode parse_mode(const std::string& mode) {
    if (mode == "exhaustive") return SearchMode::exhaustive;
    if (mode == "random") return SearchMode::random;
    throw py::value_error("mode must be 'exhaustive' or 'random', got '" + mode + "'");
}

AlgorithmKind parse_algorithm(const std::string& algorithm) {
    if (algorithm == "corrected") return AlgorithmKind::corrected;
    if (algorithm == "paper-literal") return AlgorithmKind::paper_literal;
    throw py::value_error("algorithm must be 'corrected' or 'paper-literal', got '" +
                          algorithm + "'");
}

std::vector<std::uint64_t> pack_bit_list(const std::vector<Elem>& bits) {
    for (Elem b : bits) {
        if (b > 1) throw bad_element("bit values must be 0 or 1");
    }
    return pack_bits(bits);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "division-free minimal period and (x-1)-multiplicity over GF(q)";

    py::register_exception<error>(m, "Error");

    py::class_<Field>(m, "Field",
                      "GF(p^e) with elements encoded as integers in [0, q); e > 1 uses the "
                      "canonical modulus (smallest monic irreducible by integer encoding).")
        .def(py::init(&Field::make), py::arg("q"))
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("e", &Field::e)
        .def_property_readonly("modulus", &Field::modulus_encoding,
                               "integer encoding sum(c_i * p^i) of the modulus")
        .def("add", &Field::add, py::arg("a"), py::arg("b"))
        .def("sub", &Field::sub, py::arg("a"), py::arg("b"))
        .def("neg", &Field::neg, py::arg("a"))
        .def("mul", &Field::mul, py::arg("a"), py::arg("b"))
        .def("inv", &Field::inv, py::arg("a"))
        .def("pow", &Field::pow, py::arg("a"), py::arg("k"))
        .def("coords", [](const Field& f, Elem a) { return f.coords(a); }, py::arg("a"),
             "base-p coordinate vector of an element encoding")
        .def("from_coords", &Field::from_coords, py::arg("digits"))
        .def("__eq__",
             [](const Field& a, const Field& b) { return a == b; }, py::is_operator())
        .def("__repr__", [](const Field& f) {
            return "Field(q=" + std::to_string(f.q()) + ", p=" + std::to_string(f.p()) +
                   ", e=" + std::to_string(f.e()) +
                   ", modulus=" + std::to_string(f.modulus_encoding()) + ")";
        });

    m.def(
        "min_period",
        [](const Field& field, std::vector<Elem> block, bool use_shortcut) {
            return min_period(make_sequence(field, std::move(block)), {use_shortcut}).value;
        },
        py::arg("field"), py::arg("block"), py::kw_only(), py::arg("use_shortcut") = true,
        "minimal period of the sequence repeating `block` (len must be a power of q)");

    m.def(
        "min_period_trace",
        [](const Field& field, std::vector<Elem> block, bool use_shortcut) {
            const auto r = min_period(make_sequence(field, std::move(block)), {use_shortcut});
            return trace_dict(r.value, r.trace, r.ops);
        },
        py::arg("field"), py::arg("block"), py::kw_only(), py::arg("use_shortcut") = true,
        "min_period plus the per-level folding trace and operation counters");

    m.def(
        "paper_literal_min_period",
        [](const Field& field, std::vector<Elem> block) {
            return paper_literal_min_period(make_sequence(field, std::move(block)));
        },
        py::arg("field"), py::arg("block"),
        "published recurrence taken at face value; WRONG for some blocks when q > 2");

    m.def(
        "multiplicity",
        [](const Field& field, std::vector<Elem> coeffs) {
            return multiplicity(make_poly(field, std::move(coeffs))).value;
        },
        py::arg("field"), py::arg("coeffs"),
        "multiplicity of (x-1) in the polynomial with the given coefficients "
        "(coeffs[i] multiplies x^i)");

    m.def(
        "multiplicity_trace",
        [](const Field& field, std::vector<Elem> coeffs) {
            const auto r = multiplicity(make_poly(field, std::move(coeffs)));
            return trace_dict(r.value, r.trace, r.ops);
        },
        py::arg("field"), py::arg("coeffs"));

    m.def(
        "mp_oracle",
        [](const Field& field, std::vector<Elem> block) {
            return mp_oracle(make_sequence(field, std::move(block)));
        },
        py::arg("field"), py::arg("block"),
        "gcd-based reference value: N - deg gcd(block_poly, x^N - 1)");

    m.def(
        "minimal_polynomial",
        [](const Field& field, std::vector<Elem> block) {
            const auto mu = minimal_polynomial(make_sequence(field, std::move(block)));
            return std::vector<Elem>(mu.coeffs().begin(), mu.coeffs().end());
        },
        py::arg("field"), py::arg("block"),
        "monic minimal polynomial coefficients, constant term first");

    m.def(
        "multiplicity_oracle",
        [](const Field& field, std::vector<Elem> coeffs) {
            return multiplicity_oracle(make_poly(field, std::move(coeffs)));
        },
        py::arg("field"), py::arg("coeffs"),
        "reference multiplicity by repeated exact division by (x-1)");

    m.def(
        "planted_instance",
        [](const Field& field, std::size_t m, std::size_t degree_bound, std::uint64_t seed) {
            const auto f = planted_instance(field, m, degree_bound, seed);
            return std::vector<Elem>(f.coeffs().begin(), f.coeffs().end());
        },
        py::arg("field"), py::arg("m"), py::arg("degree_bound"), py::arg("seed"),
        "coefficients of a seed-random g * (x-1)^m with known multiplicity m");

    m.def(
        "min_period_binary",
        [](const std::vector<Elem>& bits) {
            return min_period_binary(pack_bit_list(bits), bits.size());
        },
        py::arg("bits"), "bit-packed GF(2) fast path; `bits` is a list of 0/1");

    m.def(
        "multiplicity_binary",
        [](const std::vector<Elem>& bits) {
            return multiplicity_binary(pack_bit_list(bits), bits.size());
        },
        py::arg("bits"));

    m.def("binomial_mod_p", &binomial_mod_p, py::arg("i"), py::arg("k"), py::arg("p"),
          "C(i, k) mod p via Lucas digits");

    m.def(
        "discrepancy_search",
        [](const Field& field, std::size_t n, const std::string& mode,
           const std::string& algorithm, std::size_t budget, std::uint64_t seed,
           std::size_t count) {
            const auto rep = discrepancy_search(field, n, parse_mode(mode),
                                                parse_algorithm(algorithm), budget, seed, count);
            py::list mismatches;
            for (const auto& mm : rep.mismatches) {
                py::dict entry;
                entry["block"] = mm.block;
                entry["expected"] = mm.expected;
                entry["got"] = mm.got;
                mismatches.append(entry);
            }
            py::dict d;
            d["q"] = rep.q;
            d["n"] = rep.n;
            d["period"] = rep.period;
            d["mode"] = to_string(rep.mode);
            d["algorithm"] = to_string(rep.algorithm);
            d["seed"] = rep.seed;
            d["cases"] = rep.cases;
            d["mismatches"] = mismatches;
            d["elapsed_seconds"] = rep.elapsed_seconds;
            d["passed"] = rep.passed();
            return d;
        },
        py::arg("field"), py::arg("n"), py::kw_only(), py::arg("mode") = "exhaustive",
        py::arg("algorithm") = "corrected", py::arg("budget") = std::size_t{1} << 20,
        py::arg("seed") = 42, py::arg("count") = 1000,
        "compare an algorithm against the gcd oracle over blocks of period q^n");
}
