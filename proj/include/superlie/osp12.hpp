#pragma once

#include "superlie/algebra.hpp"
#include "superlie/error.hpp"
#include "superlie/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <vector>

namespace superlie {

/// Basis indices of osp12_standard().
namespace osp {
inline constexpr std::size_t Ep = 0, Em = 1, H = 2, Fp = 3, Fm = 4;
}

/// osp(1,2) on the basis (E+, E−, H, F+, F−), built from 3×3 matrices with
/// index parities (0, 1, 1), with supertrace form, Cartan {H} and weights.
LieSuperalgebra osp12_standard();

/// Error carrying a JSON witness of what went wrong.
class WitnessError : public Error {
public:
    WitnessError(const std::string& what, nlohmann::json witness) : Error(what), witness_(std::move(witness)) {}
    const nlohmann::json& witness() const { return witness_; }

private:
    nlohmann::json witness_;
};

struct Sl2SuperTriple {
    enum class Kind { osp, sl2 };
    SparseVector x, y, h;
    Kind kind = Kind::osp;
};

/// Checks [h,x] = 2x, [h,y] = −2y, [x,y] = h, equal homogeneous parity and
/// that {x, y, h} generates L. For odd x, y also checks that
/// (¼[x,x], −¼[y,y], ½h) satisfies the sl2 relations and [[x,x],x] = 0.
/// Throws WitnessError on the first failure.
Sl2SuperTriple verify_triple(const LieSuperalgebra& L, const SparseVector& x, const SparseVector& y,
                             const SparseVector& h);

/// Representation of osp(1,2) given by the actions of e = F+, f = F− and h = H
/// on a parity-graded basis.
struct Osp12Module {
    std::vector<Parity> parity;
    SparseMatrix e, f, h;

    std::size_t dim() const { return parity.size(); }
    /// Action of [e,e] = E+, i.e. 2e².
    SparseMatrix ee() const;
    /// Action of [f,f] = E−, i.e. 2f².
    SparseMatrix ff() const;
    /// Actions of the five basis elements of osp12_standard(), in order.
    std::vector<SparseMatrix> actions() const;
};

/// ρ([a,b]) = ρ(a)ρ(b) − (−1)^{|a||b|}ρ(b)ρ(a) on all basis pairs, and the
/// parity behaviour of e, f, h.
Report check_representation(const Osp12Module& M);

/// V(λ) on v₀ … v_λ: f·vᵢ = v_{i+1}, h·vᵢ = (λ−2i)vᵢ, e·vᵢ = −i v_{i−1} for
/// even i and (λ−i+1) v_{i−1} for odd i. Parities alternate from top_parity.
/// Throws PreconditionError for odd or negative λ.
Osp12Module irreducible_module(long lambda, Parity top_parity = 0);

Osp12Module direct_sum(const std::vector<Osp12Module>& parts);

/// Conjugates by a random parity-preserving invertible matrix: a permutation
/// within each parity block followed by about 2·dim elementary row operations
/// with multipliers in {±1, ±2}.
Osp12Module scramble(const Osp12Module& M, std::uint64_t seed);

/// Eigenvalues of h with multiplicity, descending. Throws PreconditionError
/// unless h is diagonalizable with even integer eigenvalues and μ, −μ occur
/// equally often.
std::vector<long> h_spectrum(const Osp12Module& M);
/// Eigenvalues of h on the basis vectors of one parity only.
std::vector<long> h_spectrum(const Osp12Module& M, Parity p);

struct G0Submodule {
    std::vector<SparseVector> basis;   // spanning set of T from the two f-strings
    std::size_t dim = 0;
    bool equals_closure = false;       // T equals the closure of {f·u} under [e,e], [f,f], h
};

/// T = Σ f^{2k}(e·u) + Σ f^{2k+1}(f·(e·u) − (λ+2)u). Throws PreconditionError
/// unless h·u = λu, [e,e]·u = 0, λ ≠ −2 and u is homogeneous (or zero).
G0Submodule generated_g0_submodule(const Osp12Module& M, const SparseVector& u, const Scalar& lambda);

struct Summand {
    long lambda = 0;
    Parity top_parity = 0;
    std::vector<SparseVector> basis;   // u, f·u, …, f^λ·u with e·u = 0
};

struct Decomposition {
    std::vector<Summand> summands;     // in the order selected
    /// λ values, descending.
    std::vector<long> lambdas() const;
};

/// Splits M into irreducible summands. Each summand is certified (highest
/// weight string with nonzero lowering constants, odd dimension) and the
/// family is certified to be a direct sum equal to M. Throws WitnessError if
/// the representation property fails or a certificate breaks.
Decomposition decompose(const Osp12Module& M);

}  // namespace superlie
