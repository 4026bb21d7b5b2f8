#include "superlie/pipeline.hpp"

#include "superlie/error.hpp"
#include "superlie/osp12.hpp"

#include <functional>

namespace superlie {

PipelineResult verify_pipeline(const LieSuperalgebra& L) {
    PipelineResult out;
    Report& r = out.report;
    r = Report("pipeline");
    r.params()["dim"] = L.dim();
    r.params()["field"] = to_string(L.field());

    struct Stage {
        const char* name;
        std::function<void()> run;
    };
    const std::vector<Stage> stages{
        {"superalgebra", [&] { r.merge(verify_superalgebra(L)); }},
        {"form", [&] { r.merge(verify_form(L)); }},
        {"weights",
         [&] {
             out.datum = weight_decomposition(L);
             r.pass("weights.decomposition", std::to_string(out.datum->roots.size()) + " roots including 0");
         }},
        {"eals", [&] { r.merge(verify_eals(L, *out.datum)); }},
        {"roots", [&] { r.merge(structural_root_checks(L, *out.datum)); }},
        {"ears", [&] { r.merge(check_axioms(from_root_datum(*out.datum)), "ears."); }},
    };
    for (std::size_t k = 0; k < stages.size(); ++k) {
        try {
            stages[k].run();
        } catch (const WitnessError& e) {
            r.fail(std::string(stages[k].name) + ".precondition", e.what(), e.witness());
        } catch (const Error& e) {
            r.fail(std::string(stages[k].name) + ".precondition", e.what());
        }
        if (r.find(std::string(stages[k].name) + ".precondition")) {
            for (std::size_t j = k + 1; j < stages.size(); ++j)
                r.skip(std::string(stages[j].name) + ".stage", std::string("not run after ") + stages[k].name + " failed");
            break;
        }
    }
    return out;
}

Report cross_check(const LieSuperalgebra& L) {
    Report r("cross");
    RootDatum d = weight_decomposition(L);
    Report eals = verify_eals(L, d);
    r.expect(eals.passed(), "cross.eals", "the algebra passes verify_eals");
    if (!eals.passed()) return r;
    Report axioms = check_axioms(from_root_datum(d));
    r.expect(axioms.passed(), "cross.axioms", "its root datum satisfies S1 to S5");
    LieSuperalgebra E = even_part(L);
    RootDatum de = weight_decomposition(E);
    r.expect(de.odd.empty(), "cross.even_odd_empty", "the even part has no odd roots");
    Report ee = verify_eals(E, de);
    r.expect(ee.passed(), "cross.even_eals", "the even part passes verify_eals");
    return r;
}

}  // namespace superlie
