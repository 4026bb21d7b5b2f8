#pragma once

#include "superlie/algebra.hpp"
#include "superlie/report.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace superlie {

/// Nondegenerate symmetric form on a Cartan subalgebra, used to represent
/// functionals α by t_α with (t_α, h) = α(h).
class CartanForm {
public:
    CartanForm() = default;
    /// gram[i][j] = (h_i, h_j). Throws PreconditionError if singular.
    explicit CartanForm(SparseMatrix gram);

    std::size_t size() const { return gram_.rows(); }
    const SparseMatrix& gram() const { return gram_; }
    /// Coefficients of t_α in the Cartan basis.
    std::vector<Scalar> represent(const Weight& alpha) const;
    /// (α, β) := (t_α, t_β) = α(t_β).
    Scalar pair(const Weight& alpha, const Weight& beta) const;

private:
    SparseMatrix gram_;
};

/// Weight-space data of an algebra with a Cartan index set and weights.
struct RootDatum {
    std::vector<Weight> roots;                          // sorted, R = R₀ ∪ R₁
    std::set<Weight> even, odd;                         // R₀, R₁
    std::map<Weight, std::vector<std::size_t>> even_space, odd_space;
    std::optional<CartanForm> form;                     // present iff the algebra has a Gram matrix
    std::vector<std::size_t> cartan;                    // Cartan basis indices of the algebra

    bool contains(const Weight& w) const { return even.count(w) || odd.count(w); }
    /// Weight-basis indices of 𝔏ᵢ^α (empty if α ∉ Rᵢ).
    const std::vector<std::size_t>& space(const Weight& w, Parity p) const;
    /// (α, β); requires the form.
    Scalar pair(const Weight& a, const Weight& b) const;
    /// t_α as a vector of the algebra.
    SparseVector t(const Weight& a) const;
    /// h_α = 2 t_α / (α, α) for real α.
    SparseVector coroot(const Weight& a) const;
    std::size_t rank() const { return cartan.size(); }
};

/// Grading, anti-supersymmetry and super Jacobi on all basis pairs/triples.
Report verify_superalgebra(const LieSuperalgebra& L);
/// Supersymmetry, evenness, invariance, nondegeneracy (whole and on 𝔥) and,
/// with weights, orthogonality of weight spaces. Throws PreconditionError
/// without a Gram matrix.
Report verify_form(const LieSuperalgebra& L);
/// Verifies [h, b] = wt_b(h) b and assembles the root datum. Throws
/// PreconditionError (not a weight basis) with the offending pair.
RootDatum weight_decomposition(const LieSuperalgebra& L);
/// Axiom (1) witnesses with [x, y] = (x, y) t_α, and nilpotency of ad x for
/// weight vectors of real roots.
Report verify_eals(const LieSuperalgebra& L, const RootDatum& datum);
/// Structural facts of root data of EALS: odd real α ⇒ 2α ∈ R₀; 2α ∉ R₁ for
/// real α; isotropic even roots are orthogonal to R₀ and R₀ ∩ R_im = {0};
/// R^× ∩ R₀ ∩ R₁ = ∅ when 𝔏⁰ is even; (α, β) ≠ 0 ⇒ β−α or β+α ∈ R.
Report structural_root_checks(const LieSuperalgebra& L, const RootDatum& datum);

/// First basis pair (a, b), lexicographic over the two index lists, with
/// 0 != [a, b] in the Cartan; failing that, for each a in order, a
/// combination y of the second list with 0 != [a, y] in the Cartan.
std::optional<std::pair<SparseVector, SparseVector>> axiom1_witness(const LieSuperalgebra& L,
                                                                    const std::vector<std::size_t>& plus,
                                                                    const std::vector<std::size_t>& minus);

/// True iff α is orthogonal to every root (α ∈ A⁰ for A the span of R).
bool in_root_radical(const RootDatum& d, const Weight& a);

}  // namespace superlie
