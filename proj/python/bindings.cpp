#include "qfwitt/job.hpp"
#include "qfwitt/class_group.hpp"
#include "qfwitt/local.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qf;

namespace {

DiagonalForm to_form(const NumberField& K, const std::vector<std::string>& coeffs)
{
    std::vector<FieldElt> c;
    for (const auto& s : coeffs)
        c.push_back(parse_element(K, s));
    return DiagonalForm(K, std::move(c));
}

std::vector<std::string> strings(const DiagonalForm& q)
{
    std::vector<std::string> out;
    for (const auto& c : q.coeffs())
        out.push_back(c.str());
    return out;
}

// Heavy work runs without the GIL; fields are interned so nothing Python-side is touched.
template <class F>
auto unlocked(F&& f)
{
    py::gil_scoped_release release;
    return f();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Witt decomposition of diagonal quadratic forms over Q and Q(sqrt(d))";

    // Messages start with the error kind, e.g. "Parse: ...".
    py::register_exception<Error>(m, "QfwittError");

    m.def("field_name", [](const std::string& spec) { return make_field(spec).name(); }, py::arg("field"));

    m.def("normalize", [](const std::string& field, const std::string& x) {
        return parse_element(make_field(field), x).str();
    }, py::arg("field"), py::arg("x"));

    m.def("decompose", [](const std::string& field, const std::vector<std::string>& form, bool trace) {
        const auto& K = make_field(field);
        const auto q = to_form(K, form);
        auto r = unlocked([&] { return anisotropic_part(q); });
        nlohmann::json j{{"field", K.name()},
                         {"adim", r.part.dim()},
                         {"witt_index", r.witt_index},
                         {"anisotropic_part", strings(r.part)}};
        if (trace)
            j["trace"] = trace_json(r.trace);
        return j.dump();
    }, py::arg("field"), py::arg("form"), py::arg("trace") = false);

    m.def("adim", [](const std::string& field, const std::vector<std::string>& form) {
        const auto q = to_form(make_field(field), form);
        return unlocked([&] { return adim(q); });
    }, py::arg("field"), py::arg("form"));

    m.def("local_adim", [](const std::string& field, const std::vector<std::string>& form, const std::string& place) {
        const auto& K = make_field(field);
        return local_adim(to_form(K, form), parse_place(K, place));
    }, py::arg("field"), py::arg("form"), py::arg("place"));

    m.def("hilbert", [](const std::string& field, const std::string& a, const std::string& b, const std::string& place) {
        const auto& K = make_field(field);
        return hilbert(parse_element(K, a), parse_element(K, b), parse_place(K, place));
    }, py::arg("field"), py::arg("a"), py::arg("b"), py::arg("place"));

    m.def("certificate", [](const std::string& field, const std::vector<std::string>& form,
                            const std::vector<std::string>& extra_primes) {
        const auto& K = make_field(field);
        const auto q = to_form(K, form);
        std::vector<PrimeIdeal> S;
        for (const auto& p : extra_primes)
            S.push_back(parse_prime(K, p));
        S = merge_primes(relevant_primes(q), S);
        return unlocked([&] { return certificate_json(certificate(q, S)).dump(); });
    }, py::arg("field"), py::arg("form"), py::arg("extra_primes") = std::vector<std::string>{});

    m.def("equivalent", [](const std::string& field, const std::vector<std::string>& a,
                           const std::vector<std::string>& b, bool similar) {
        const auto& K = make_field(field);
        const auto q1 = to_form(K, a), q2 = to_form(K, b);
        return unlocked([&] {
            return forms_equivalent(q1, q2, similar ? Equivalence::Similar : Equivalence::Isometric);
        });
    }, py::arg("field"), py::arg("a"), py::arg("b"), py::arg("similar") = false);

    m.def("singular_group", [](const std::string& field, const std::vector<std::string>& primes) {
        const auto& K = make_field(field);
        std::vector<PrimeIdeal> S;
        for (const auto& p : primes)
            S.push_back(parse_prime(K, p));
        S = merge_primes(S, dyadic_primes(K));
        const auto sb = unlocked([&] { return singular_group_basis(K, S); });
        std::vector<std::string> basis;
        for (const auto& b : sb.basis)
            basis.push_back(b.str());
        return basis;
    }, py::arg("field"), py::arg("primes") = std::vector<std::string>{});

    m.def("run", [](const std::string& command, const std::string& text, bool verify, bool trace, bool json) {
        JobSpec job;
        job.command = parse_command(command);
        parse_input(text, job);
        job.verify = verify;
        job.trace = trace;
        job.json = json;
        auto r = unlocked([&] { return run_job(job); });
        return py::make_tuple(r.output, r.exit_code);
    }, py::arg("command"), py::arg("text"), py::arg("verify") = false, py::arg("trace") = false,
       py::arg("json") = false);
}
