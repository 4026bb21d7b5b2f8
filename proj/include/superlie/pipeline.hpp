#pragma once

#include "superlie/eals.hpp"
#include "superlie/report.hpp"
#include "superlie/rootsys.hpp"

#include <optional>

namespace superlie {

struct PipelineResult {
    Report report;
    std::optional<RootDatum> datum;   // set once weight_decomposition succeeds
};

/// verify_superalgebra, verify_form, weight_decomposition, verify_eals,
/// structural_root_checks, then check_axioms on the root datum (as "ears.S*").
/// A stage that throws is recorded as "<stage>.precondition" and the
/// remaining stages are skipped.
PipelineResult verify_pipeline(const LieSuperalgebra& L);

/// For an algebra passing verify_eals: its root datum satisfies S1 to S5, and
/// the even part passes verify_eals with an empty odd part.
Report cross_check(const LieSuperalgebra& L);

}  // namespace superlie
