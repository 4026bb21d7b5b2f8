// Python bindings. Results cross the boundary as JSON text; the package
// wrapper decodes them.

#include "superlie/affinize.hpp"
#include "superlie/document.hpp"
#include "superlie/error.hpp"
#include "superlie/matrixsuper.hpp"
#include "superlie/osp12.hpp"
#include "superlie/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace superlie;
using nlohmann::json;

namespace {

json weight_json(const Weight& w) {
    json j = json::array();
    for (const auto& s : w) j.push_back(s.str());
    return j;
}

std::vector<std::vector<Scalar>> parse_matrix(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (const auto& s : r) row.push_back(Scalar::parse(s));
        out.push_back(row);
    }
    return out;
}

std::string verify(const std::string& source) {
    LieSuperalgebra L = load_algebra(source);
    PipelineResult res = verify_pipeline(L);
    json doc{{"passed", res.report.passed()}, {"report", res.report.to_json()}};
    if (res.report.passed()) doc["cross"] = cross_check(L).to_json();
    return doc.dump();
}

std::string decompose_module(const std::string& source) {
    Osp12Module M = load_module(source);
    Decomposition d = decompose(M);
    json summands = json::array();
    for (const auto& s : d.summands)
        summands.push_back({{"lambda", s.lambda}, {"top_parity", s.top_parity}, {"dim", s.basis.size()}});
    return json{{"dim", M.dim()}, {"lambdas", d.lambdas()}, {"summands", summands}}.dump();
}

std::string affinize(const std::string& base, std::size_t rank, const std::vector<std::vector<std::string>>& q,
                     long window, std::size_t samples, std::uint64_t seed) {
    CocycleTorus t = q.empty() ? CocycleTorus::trivial(rank) : CocycleTorus::bimultiplicative(parse_matrix(q));
    if (t.rank() != rank) throw PreconditionError("q must be rank x rank");
    AffinizedAlgebra A(load_algebra(base), t);
    DegreeWindow w{rank, window};
    Report r = verify_affinized(A, w, {samples, seed, {}});
    json roots = json::array();
    for (const auto& rt : affinized_roots(A, w).roots)
        roots.push_back({{"base", weight_json(rt.base)}, {"degree", rt.degree.coords()}, {"dim", rt.basis.size()}});
    return json{{"passed", r.passed()}, {"report", r.to_json()}, {"roots", roots}}.dump();
}

std::string twist(std::size_t m, std::size_t n, bool zero, bool zero_prime, const std::string& kind, long window,
                  long torus_window, std::size_t samples, std::uint64_t seed) {
    MatrixConfig cfg;
    cfg.index = SuperIndexSet{m, n, zero, zero_prime};
    if (kind == "sl") cfg.kind = MatrixKind::sl;
    else if (kind == "pl") cfg.kind = MatrixKind::pl;
    else if (kind == "auto") cfg.kind = cfg.index.even_count() == cfg.index.odd_count() ? MatrixKind::pl : MatrixKind::sl;
    else throw ParseError("kind must be sl, pl or auto");
    MatrixSuper M(cfg);
    DegreeWindow tw{1, torus_window};
    Report a = verify_matrix_structure(M, tw, samples, seed);
    TwistedAlgebra T(M);
    Report b = verify_twisted(T, {window, tw}, {samples, seed});
    json roots = json::array();
    for (const auto& rt : twisted_roots(T, {window, tw}).roots)
        roots.push_back({{"weight", weight_json(rt.weight)}, {"dim", rt.basis.size()}});
    return json{{"type", M.type_label()},
                {"passed", a.passed() && b.passed()},
                {"structure", a.to_json()},
                {"report", b.to_json()},
                {"roots", roots}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification of Lie superalgebra constructions";
    static py::exception<Error> error(m, "SuperlieError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            error(e.what());
        }
    });

    m.def("builtin_algebras", &builtin_algebra_names);
    m.def("algebra_document", [](const std::string& s) { return algebra_to_json(load_algebra(s)).dump(); });
    m.def("module_document", [](const std::string& s) { return module_to_json(load_module(s)).dump(); });
    m.def("verify", &verify, py::arg("source"));
    m.def("decompose", &decompose_module, py::arg("source"));
    m.def("h_spectrum", [](const std::string& s) { return h_spectrum(load_module(s)); }, py::arg("source"));
    m.def("affinize", &affinize, py::arg("base"), py::arg("rank") = 1,
          py::arg("q") = std::vector<std::vector<std::string>>{}, py::arg("window") = 3, py::arg("samples") = 500,
          py::arg("seed") = 0);
    m.def("twist", &twist, py::arg("m") = 1, py::arg("n") = 1, py::arg("zero") = false, py::arg("zero_prime") = false,
          py::arg("kind") = "auto", py::arg("window") = 4, py::arg("torus_window") = 1, py::arg("samples") = 500,
          py::arg("seed") = 0);
    m.def("normalize_scalar", [](const std::string& s) { return Scalar::parse(s).str(); });
}
