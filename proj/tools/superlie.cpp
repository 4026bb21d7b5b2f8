// superlie: verify algebras, decompose osp(1,2) modules, and run the
// affinization and twisted-construction suites.
//
// Exit status: 0 all checks pass, 1 some check fails, 2 input error.

#include "superlie/affinize.hpp"
#include "superlie/document.hpp"
#include "superlie/error.hpp"
#include "superlie/matrixsuper.hpp"
#include "superlie/osp12.hpp"
#include "superlie/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace superlie;
using nlohmann::json;

namespace {

struct Common {
    std::string field;
    std::string format = "text";
    long window = -1;
    std::size_t samples = 500;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--field", c.field, "Coefficient field")->check(CLI::IsMember({"Q", "Qi"}));
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--window", c.window, "Window radius")->check(CLI::NonNegativeNumber);
    sub->add_option("--samples", c.samples, "Sampled identity checks (0 disables sampling)");
    sub->add_option("--seed", c.seed, "Sampling seed");
}

json weight_json(const Weight& w) {
    json j = json::array();
    for (const auto& s : w) j.push_back(s.str());
    return j;
}

/// Algebras are named by builtin (with or without "builtin:") or by path.
LieSuperalgebra algebra_source(const std::string& s) {
    for (const auto& n : builtin_algebra_names())
        if (s == n) return builtin_algebra(n);
    return load_algebra(s);
}

void check_field(const LieSuperalgebra& L, const std::string& field) {
    if (field.empty()) return;
    Field f = parse_field(field);
    if (f == Field::rational && L.field() == Field::gaussian)
        throw ParseError("the document is over Qi but --field Q was given");
}

std::vector<std::vector<Scalar>> q_matrix(const std::string& text, std::size_t rank, const std::string& field) {
    if (text.empty()) return {};
    std::vector<Scalar> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(Scalar::parse(item));
    if (field == "Q")
        for (const auto& v : vals)
            if (!v.in_field(Field::rational)) throw ParseError("q entry " + v.str() + " is not rational");
    std::vector<std::vector<Scalar>> q(rank, std::vector<Scalar>(rank));
    if (vals.size() == 1) {
        for (auto& row : q)
            for (auto& v : row) v = vals[0];
    } else if (vals.size() == rank * rank) {
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j) q[i][j] = vals[i * rank + j];
    } else {
        throw ParseError("--q needs 1 or rank*rank comma-separated scalars");
    }
    return q;
}

int emit(const Common& c, const std::string& text, const json& doc, bool ok) {
    if (c.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& source, const Common& c) {
    LieSuperalgebra L = algebra_source(source);
    check_field(L, c.field);
    PipelineResult res = verify_pipeline(L);
    res.report.params()["source"] = source;
    json doc{{"command", "verify"}, {"report", res.report.to_json()}};
    return emit(c, res.report.text(), doc, res.report.passed());
}

int cmd_roots(const std::string& source, const Common& c) {
    LieSuperalgebra L = algebra_source(source);
    check_field(L, c.field);
    RootDatum d = weight_decomposition(L);
    Report r("roots");
    r.params()["source"] = source;
    std::ostringstream text;
    json roots = json::array();
    text << "roots (" << d.roots.size() << ", including 0):\n";
    std::optional<RootSupersystem> sys;
    if (d.form) sys = from_root_datum(d);
    for (const auto& a : d.roots) {
        const std::size_t ev = d.space(a, 0).size(), od = d.space(a, 1).size();
        std::string kind = "zero";
        if (!is_zero(a) && d.form) {
            if (!d.pair(a, a).is_zero())
                kind = "real";
            else
                kind = in_root_radical(d, a) ? "radical" : "nonsingular";
        }
        text << "  " << weight_str(a) << "  even " << ev << ", odd " << od << "  " << kind << "\n";
        roots.push_back({{"weight", weight_json(a)}, {"even_dim", ev}, {"odd_dim", od}, {"kind", kind}});
    }
    if (sys)
        r.merge(check_axioms(*sys), "ears.");
    else
        r.fail("ears.form", "the algebra has no form, so the axioms cannot be evaluated");
    text << r.text();
    json doc{{"command", "roots"}, {"roots", roots}, {"report", r.to_json()}};
    return emit(c, text.str(), doc, r.passed());
}

int cmd_decompose(const std::string& source, const Common& c) {
    Osp12Module M = load_module(source);
    try {
        Decomposition dec = decompose(M);
        std::ostringstream text;
        json lambdas = dec.lambdas();
        text << "λ: [";
        auto ls = dec.lambdas();
        for (std::size_t k = 0; k < ls.size(); ++k) text << (k ? ", " : "") << ls[k];
        text << "]\n";
        json summands = json::array();
        for (const auto& s : dec.summands) {
            json basis = json::array();
            for (const auto& v : s.basis) {
                json jv = json::object();
                for (const auto& [i, x] : v) jv[std::to_string(i)] = x.str();
                basis.push_back(jv);
            }
            text << "  V(" << s.lambda << "), top parity " << int(s.top_parity) << ", dim " << s.basis.size() << "\n";
            for (const auto& b : basis) text << "    " << b.dump() << "\n";
            summands.push_back({{"lambda", s.lambda}, {"top_parity", s.top_parity}, {"basis", basis}});
        }
        json doc{{"command", "decompose"}, {"source", source}, {"dim", M.dim()}, {"lambdas", lambdas},
                 {"summands", summands}};
        return emit(c, text.str(), doc, true);
    } catch (const WitnessError& e) {
        json doc{{"command", "decompose"}, {"source", source}, {"error", e.what()}, {"witness", e.witness()}};
        return emit(c, std::string("FAIL: ") + e.what() + "\n  witness: " + e.witness().dump() + "\n", doc, false);
    }
}

struct AffinizeArgs {
    std::string base = "osp12";
    std::size_t rank = 1;
    std::string q;
};

int cmd_affinize(const AffinizeArgs& a, Common c) {
    if (c.window < 0) c.window = 3;
    if (a.rank == 0) throw ParseError("--rank must be positive");
    LieSuperalgebra L = algebra_source(a.base);
    check_field(L, c.field);
    auto q = q_matrix(a.q, a.rank, c.field);
    CocycleTorus torus = q.empty() ? CocycleTorus::trivial(a.rank) : CocycleTorus::bimultiplicative(q);
    AffinizedAlgebra A(std::move(L), std::move(torus));
    DegreeWindow w{a.rank, c.window};
    Report r = verify_affinized(A, w, {c.samples, c.seed, {}});
    r.params()["base"] = a.base;
    AffineRoots roots = affinized_roots(A, w);

    std::ostringstream text;
    text << r.text() << "roots in the window (" << roots.roots.size() << "):\n";
    json list = json::array();
    for (const auto& rt : roots.roots) {
        text << "  " << weight_str(rt.base) << " + " << rt.degree.str() << "  dim " << rt.basis.size() << "\n";
        list.push_back({{"base", weight_json(rt.base)}, {"degree", rt.degree.coords()}, {"dim", rt.basis.size()}});
    }
    json doc{{"command", "affinize"}, {"report", r.to_json()}, {"roots", list}};
    return emit(c, text.str(), doc, r.passed());
}

struct TwistArgs {
    std::size_t I = 1, J = 1;
    bool zero = false, zero_prime = false;
    std::size_t torus_rank = 1;
    long torus_window = 1;
    std::string kind = "auto";
    std::string q, star;
};

int cmd_twist(const TwistArgs& a, Common c) {
    if (c.window < 0) c.window = 4;
    if (c.field == "Q") throw ParseError("the twisted construction needs a primitive 4th root of unity (--field Qi)");
    if (a.torus_rank == 0) throw ParseError("--torus-rank must be positive");
    MatrixConfig cfg;
    cfg.index = {a.I, a.J, a.zero, a.zero_prime};
    cfg.torus_rank = a.torus_rank;
    cfg.q = q_matrix(a.q, a.torus_rank, "Qi");
    if (!a.star.empty()) {
        std::stringstream ss(a.star);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item != "1" && item != "-1" && item != "+1") throw ParseError("--star entries must be 1 or -1");
            cfg.star.signs.push_back(item == "-1" ? -1 : 1);
        }
    }
    if (a.kind == "auto")
        cfg.kind = cfg.index.even_count() == cfg.index.odd_count() ? MatrixKind::pl : MatrixKind::sl;
    else
        cfg.kind = a.kind == "pl" ? MatrixKind::pl : MatrixKind::sl;

    MatrixSuper M(cfg);
    DegreeWindow tw{a.torus_rank, a.torus_window};
    Report structure = verify_matrix_structure(M, tw, c.samples == 0 ? 0 : 200, c.seed);
    TwistedAlgebra T(M);
    TwistedWindow w{c.window, tw};
    Report twisted = verify_twisted(T, w, {c.samples, c.seed});
    TwistedRoots roots = twisted_roots(T, w);

    const std::string label = M.type_label();
    std::ostringstream text;
    text << "type: " << label << "\n"
         << "algebra: " << (cfg.kind == MatrixKind::sl ? "sl" : "pl") << " over " << cfg.index.size() << " indices\n"
         << structure.text() << twisted.text() << "roots in the window (" << roots.roots.size() << "):\n";
    json list = json::array();
    for (const auto& rt : roots.roots) {
        text << "  " << weight_str(rt.weight) << "  dim " << rt.basis.size() << "\n";
        list.push_back({{"weight", weight_json(rt.weight)}, {"dim", rt.basis.size()}});
    }
    json doc{{"command", "twist"},
             {"type", label},
             {"structure", structure.to_json()},
             {"report", twisted.to_json()},
             {"roots", list}};
    return emit(c, text.str(), doc, structure.passed() && twisted.passed());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Lie superalgebras, root supersystems and affinizations"};
    app.require_subcommand(1);

    Common common;
    std::string source;

    auto* verify = app.add_subcommand("verify", "Run the full verification pipeline on an algebra");
    verify->add_option("source", source, "builtin:<name>, a builtin name, or a JSON document")->required();
    add_common(verify, common);

    auto* roots = app.add_subcommand("roots", "List roots and check the root supersystem axioms");
    roots->add_option("source", source, "builtin:<name>, a builtin name, or a JSON document")->required();
    add_common(roots, common);

    auto* decomp = app.add_subcommand("decompose", "Split an osp(1,2) module into irreducibles");
    decomp->add_option("source", source, "builtin:<name> or a module document")->required();
    add_common(decomp, common);

    AffinizeArgs aff;
    auto* affinize = app.add_subcommand("affinize", "Affinize a base algebra over a cocycle torus");
    affinize->add_option("--base", aff.base, "Base algebra");
    affinize->add_option("--rank", aff.rank, "Torus rank");
    affinize->add_option("--q", aff.q, "Bimultiplicative cocycle: one scalar or rank*rank comma-separated");
    add_common(affinize, common);

    TwistArgs tw;
    auto* twist = app.add_subcommand("twist", "Twisted construction from the order-4 matrix automorphism");
    twist->add_option("--I", tw.I, "Size of the even index set without 0");
    twist->add_option("--J", tw.J, "Size of the odd index set without 0'");
    twist->add_flag("--with-zero", tw.zero, "Add the even index 0");
    twist->add_flag("--with-zero-prime", tw.zero_prime, "Add the odd index 0'");
    twist->add_option("--torus-rank", tw.torus_rank, "Torus rank");
    twist->add_option("--torus-window", tw.torus_window, "Torus degree window radius")->check(CLI::NonNegativeNumber);
    twist->add_option("--kind", tw.kind, "sl, pl, or auto (pl when the index counts agree)")
        ->check(CLI::IsMember({"auto", "sl", "pl"}));
    twist->add_option("--q", tw.q, "Bimultiplicative cocycle");
    twist->add_option("--star", tw.star, "Comma-separated signs of the involution on the torus");
    add_common(twist, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return cmd_verify(source, common);
        if (*roots) return cmd_roots(source, common);
        if (*decomp) return cmd_decompose(source, common);
        if (*affinize) return cmd_affinize(aff, common);
        if (*twist) return cmd_twist(tw, common);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
