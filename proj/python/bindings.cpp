#include "cli.hpp"

#include "rsat/dimacs.hpp"
#include "rsat/gadgets.hpp"
#include "rsat/oracle.hpp"
#include "rsat/reductions.hpp"
#include "rsat/report_json.hpp"
#include "rsat/variant.hpp"
#include "rsat/witnesses.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace rsat;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object report(const VerificationReport& r) { return to_python(report_to_json(r)); }

std::vector<int> signed_model(const Assignment& a)
{
    std::vector<int> out;
    for (Var v = 0; v < a.size(); ++v)
        out.push_back(a[v] ? static_cast<int>(v) + 1 : -static_cast<int>(v) - 1);
    return out;
}

Assignment from_signed(const std::vector<int>& lits, std::size_t n)
{
    if (lits.size() != n)
        throw std::invalid_argument("model needs one literal per variable");
    Assignment a(n);
    for (int l : lits) {
        auto v = static_cast<std::size_t>(std::abs(l));
        if (v == 0 || v > n)
            throw std::invalid_argument("model literal out of range");
        a.set(static_cast<Var>(v - 1), l > 0);
    }
    return a;
}

Mode mode_from(const std::string& s)
{
    if (s == "sat")
        return Mode::sat;
    if (s == "nae")
        return Mode::nae;
    throw std::invalid_argument("mode must be 'sat' or 'nae'");
}

CnfInstance make_instance(std::size_t num_vars, const std::vector<std::vector<int>>& clauses, const std::string& mode,
                          bool multiset)
{
    std::vector<Clause> cls;
    for (const auto& c : clauses) {
        std::vector<Literal> lits;
        for (int l : c)
            lits.push_back(Literal::from_dimacs(l));
        cls.emplace_back(std::move(lits), multiset ? Flavor::multiset : Flavor::set);
    }
    return CnfInstance{num_vars, std::move(cls), mode_from(mode)};
}

std::vector<std::vector<int>> clause_lists(const CnfInstance& f)
{
    std::vector<std::vector<int>> out;
    for (const auto& c : f.clauses()) {
        std::vector<int> lits;
        for (auto l : c)
            lits.push_back(static_cast<int>(l.dimacs()));
        out.push_back(std::move(lits));
    }
    return out;
}

KnownUnsat witness_from(const std::string& name)
{
    auto w = known_unsat_from_name(name);
    if (!w)
        throw std::invalid_argument("unknown witness '" + name + "'");
    return *w;
}

ReductionId reduction_from(const std::string& name)
{
    auto id = reduction_from_name(name);
    if (!id)
        throw std::invalid_argument("unknown reduction '" + name + "'");
    return *id;
}

ReductionParams params_from(std::optional<std::size_t> k, const std::optional<CnfInstance>& m_source,
                            bool allow_star_source, bool pad_with_d)
{
    ReductionParams p;
    p.k = k;
    p.m_source = m_source;
    p.allow_star_source = allow_star_source;
    p.pad_with_d = pad_with_d;
    return p;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Restricted SAT and NAE-SAT toolkit";

    py::register_exception<DimacsError>(m, "DimacsError", PyExc_ValueError);
    py::register_exception<EnumerationCapExceeded>(m, "EnumerationCapExceeded", PyExc_RuntimeError);

    py::class_<CnfInstance>(m, "Instance")
        .def(py::init(&make_instance), py::arg("num_vars"), py::arg("clauses"), py::arg("mode") = "sat",
             py::arg("multiset") = false, "Clauses are lists of signed 1-based literals.")
        .def_property_readonly("num_vars", &CnfInstance::num_vars)
        .def_property_readonly("num_clauses", &CnfInstance::num_clauses)
        .def_property_readonly("mode", [](const CnfInstance& f) { return to_string(f.mode()); })
        .def_property_readonly("clauses", &clause_lists)
        .def("with_mode", [](const CnfInstance& f, const std::string& mode) { return f.with_mode(mode_from(mode)); })
        .def("to_dimacs", [](const CnfInstance& f) { return emit_dimacs(f); })
        .def("__eq__", [](const CnfInstance& a, const CnfInstance& b) { return a == b; })
        .def("__repr__", [](const CnfInstance& f) {
            std::ostringstream s;
            s << "<Instance " << to_string(f.mode()) << ", " << f.num_vars() << " vars, " << f.num_clauses()
              << " clauses>";
            return s.str();
        });

    m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); }, py::arg("text"));
    m.def(
        "parse_dimacs_variant",
        [](const std::string& text) -> std::optional<std::string> {
            auto v = parse_dimacs_file(text).variant;
            return v ? std::optional<std::string>(v->to_string()) : std::nullopt;
        },
        py::arg("text"), "The `c variant` annotation, if any.");
    m.def(
        "emit_dimacs",
        [](const CnfInstance& f, const std::optional<std::string>& variant) {
            return emit_dimacs(f, variant ? std::optional<VariantSpec>(VariantSpec::parse(*variant)) : std::nullopt);
        },
        py::arg("instance"), py::arg("variant") = py::none());

    m.def("normalize_variant", [](const std::string& spec) { return VariantSpec::parse(spec).to_string(); },
          py::arg("spec"));
    m.def(
        "validate", [](const CnfInstance& f, const std::string& spec) { return report(validate(f, VariantSpec::parse(spec))); },
        py::arg("instance"), py::arg("variant"));

    m.def(
        "solve",
        [](const CnfInstance& f, const std::string& engine, std::size_t cap, std::optional<double> timeout) {
            OracleLimits lim;
            lim.enumeration_cap = cap;
            if (timeout)
                lim.timeout = std::chrono::milliseconds(static_cast<long long>(*timeout * 1000));
            Engine e = engine == "exhaustive" ? Engine::exhaustive
                       : engine == "dpll"     ? Engine::dpll
                                              : throw std::invalid_argument("engine must be 'exhaustive' or 'dpll'");
            SolveResult r;
            {
                py::gil_scoped_release release;
                r = solve(f, e, lim);
            }
            py::object model = py::none();
            if (r.model)
                model = py::cast(signed_model(*r.model));
            return py::make_tuple(to_string(r.status), model);
        },
        py::arg("instance"), py::arg("engine") = "dpll", py::arg("cap") = kDefaultEnumerationCap,
        py::arg("timeout") = py::none(), "Returns (status, model); model holds signed 1-based literals.");

    m.def("gadget_names", [] {
        std::vector<std::string> out;
        for (const auto& row : catalogue())
            out.push_back(row.name);
        return out;
    });
    m.def(
        "verify_gadget",
        [](const std::string& name) {
            auto k = gadget_from_name(name);
            if (!k)
                throw std::invalid_argument("unknown gadget '" + name + "'");
            return report(verify_gadget(*k));
        },
        py::arg("name"));

    py::class_<ReductionCertificate>(m, "Certificate")
        .def_property_readonly("reduction", [](const ReductionCertificate& c) { return to_string(c.id); })
        .def_readonly("input", &ReductionCertificate::input)
        .def_readonly("output", &ReductionCertificate::output)
        .def("pull_back",
             [](const ReductionCertificate& c, const std::vector<int>& model) {
                 return signed_model(pull_back(c, from_signed(model, c.output.num_vars())));
             })
        .def("check_traceability", [](const ReductionCertificate& c) { return report(check_traceability(c)); })
        .def("check_equisat", [](const ReductionCertificate& c) { return report(check_equisat(c)); });

    m.def("reduction_names", [] {
        std::vector<std::string> out;
        for (auto id : all_reductions())
            out.push_back(to_string(id));
        return out;
    });
    m.def(
        "reduce",
        [](const std::string& id, const CnfInstance& input, std::optional<std::size_t> k,
           std::optional<CnfInstance> m_source, bool allow_star_source, bool pad_with_d) {
            return apply_reduction(reduction_from(id), input, params_from(k, m_source, allow_star_source, pad_with_d));
        },
        py::arg("reduction"), py::arg("instance"), py::arg("k") = py::none(), py::arg("m_source") = py::none(),
        py::arg("allow_star_source") = false, py::arg("pad_with_d") = false);
    m.def(
        "output_spec",
        [](const std::string& id, std::optional<std::size_t> k) {
            return output_spec(reduction_from(id), params_from(k, std::nullopt, false, false)).to_string();
        },
        py::arg("reduction"), py::arg("k") = py::none());

    m.def("known_unsat", [](const std::string& name) { return known_unsat(witness_from(name)); }, py::arg("name"));
    m.def(
        "certify_known_unsat", [](const std::string& name) { return report(certify_known_unsat(witness_from(name))); },
        py::arg("name"));
    m.def("check_sat_via_transversal", [](const CnfInstance& f) { return report(check_sat_via_transversal(f)); },
          py::arg("instance"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
            std::istringstream in(stdin_text);
            std::ostringstream out, err;
            int code = cli::run(args, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "", "Runs the command line in-process; returns (code, stdout, stderr).");
}
