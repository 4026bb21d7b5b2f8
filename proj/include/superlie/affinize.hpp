#pragma once

#include "superlie/algebra.hpp"
#include "superlie/eals.hpp"
#include "superlie/lattice.hpp"
#include "superlie/report.hpp"
#include "superlie/rootsys.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace superlie {

/// Box {λ ∈ ℤⁿ : |λᵢ| ≤ radius}.
struct DegreeWindow {
    std::size_t rank = 0;
    long radius = 0;

    bool contains(const GroupElement& g) const;
    /// All elements, lexicographic.
    std::vector<GroupElement> elements() const;
};

/// Group algebra of ℤⁿ with multiplication t^λ t^μ = θ(λ,μ) t^{λ+μ}.
class CocycleTorus {
public:
    /// θ = 1.
    static CocycleTorus trivial(std::size_t rank);
    /// θ(λ,μ) = Π q_ij^{λᵢ μⱼ}. Throws PreconditionError unless q is square,
    /// symmetric and has no zero entry.
    static CocycleTorus bimultiplicative(std::vector<std::vector<Scalar>> q);
    /// All q_ij = c.
    static CocycleTorus constant(std::size_t rank, const Scalar& c);
    /// Explicit values on pairs from the box of the given radius.
    static CocycleTorus table(std::size_t rank, long radius, std::map<std::pair<GroupElement, GroupElement>, Scalar> values);

    std::size_t rank() const { return rank_; }
    bool is_table() const { return table_mode_; }
    const std::vector<std::vector<Scalar>>& q() const { return q_; }
    /// Throws PreconditionError outside the table window.
    Scalar theta(const GroupElement& a, const GroupElement& b) const;

private:
    std::size_t rank_ = 0;
    bool table_mode_ = false;
    bool unit_ = false;    // every q_ij = 1
    bool signs_ = false;   // every q_ij = ±1
    std::vector<std::vector<Scalar>> q_;
    long radius_ = 0;
    std::map<std::pair<GroupElement, GroupElement>, Scalar> table_;
};

/// t^λ · t^μ = (θ(λ,μ), λ+μ).
std::pair<Scalar, GroupElement> torus_mul(const CocycleTorus& t, const GroupElement& a, const GroupElement& b);

/// θ(0,0) = 1, symmetry and the cocycle identity on the window. For
/// bimultiplicative θ the identities hold symbolically given a symmetric q;
/// they are also evaluated on the radius-1 sub-box.
Report verify_cocycle(const CocycleTorus& t, const DegreeWindow& window);

/// Finite sum Σ x_λ ⊗ t^λ + v + d with v ∈ 𝒱 and d ∈ 𝒱† in coordinates.
class LoopElement {
public:
    LoopElement() = default;
    explicit LoopElement(std::size_t rank) : v_(rank), d_(rank) {}
    static LoopElement loop(std::size_t rank, SparseVector x, GroupElement degree);
    static LoopElement v_basis(std::size_t rank, std::size_t i);
    static LoopElement d_basis(std::size_t rank, std::size_t i);

    std::size_t rank() const { return v_.size(); }
    const std::map<GroupElement, SparseVector>& loop_part() const { return loop_; }
    /// Component of degree λ (zero if absent).
    SparseVector component(const GroupElement& degree) const;
    const std::vector<Scalar>& v() const { return v_; }
    const std::vector<Scalar>& d() const { return d_; }
    bool is_zero() const;

    void add_loop(const GroupElement& degree, const Scalar& c, const SparseVector& x);
    void add_v(std::size_t i, const Scalar& c) { v_.at(i) += c; }
    void add_d(std::size_t i, const Scalar& c) { d_.at(i) += c; }

    LoopElement& operator+=(const LoopElement& o);
    LoopElement& operator-=(const LoopElement& o);
    LoopElement& operator*=(const Scalar& c);
    friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
    friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
    friend LoopElement operator*(const Scalar& c, LoopElement a) { return a *= c; }
    friend bool operator==(const LoopElement& a, const LoopElement& b) {
        return a.loop_ == b.loop_ && a.v_ == b.v_ && a.d_ == b.d_;
    }

private:
    std::map<GroupElement, SparseVector> loop_;
    std::vector<Scalar> v_, d_;
};

/// 𝔩 = (𝔤 ⊗ 𝒜) ⊕ 𝒱 ⊕ 𝒱† over a base superalgebra with Cartan, weights and
/// form, with Cartan 𝔥̂ = (𝔥 ⊗ 1) ⊕ 𝒱 ⊕ 𝒱†.
class AffinizedAlgebra {
public:
    /// Throws PreconditionError if the base lacks a Cartan, weights or form,
    /// or fails verify_eals.
    AffinizedAlgebra(LieSuperalgebra base, CocycleTorus torus);

    const LieSuperalgebra& base() const { return base_; }
    const RootDatum& base_roots() const { return datum_; }
    const CocycleTorus& torus() const { return torus_; }
    std::size_t rank() const { return torus_.rank(); }

    LoopElement bracket(const LoopElement& x, const LoopElement& y) const;
    Scalar form(const LoopElement& x, const LoopElement& y) const;
    std::optional<Parity> parity_of(const LoopElement& x) const;

    /// h_k ⊗ 1, then v_i, then d_i.
    std::vector<LoopElement> cartan() const;
    CartanForm cartan_form() const;
    bool in_cartan(const LoopElement& x) const;
    /// Functional of x_b ⊗ t^λ on cartan(): (wt_b, 0, λ).
    Weight weight(std::size_t b, const GroupElement& degree) const;
    /// Cartan element t_ρ for a functional ρ on cartan().
    LoopElement t(const Weight& rho) const;
    /// Homogeneous basis x_b ⊗ t^λ (λ in the window) followed by v_i, d_i.
    std::vector<LoopElement> window_basis(const DegreeWindow& w) const;
    nlohmann::json to_json(const LoopElement& x) const;

private:
    LieSuperalgebra base_;
    CocycleTorus torus_;
    RootDatum datum_;
    CartanForm hat_form_;
};

struct AffineRoot {
    Weight weight;                   // on AffinizedAlgebra::cartan()
    Weight base;                     // α on 𝔥
    GroupElement degree;             // λ
    std::vector<LoopElement> basis;  // weight space basis within the window
};

struct AffineRoots {
    std::vector<AffineRoot> roots;   // sorted by weight
    Report report;                   // eigen relations of the Cartan
};

/// Reads weights off [ĥ, ·] on the window basis and groups them.
AffineRoots affinized_roots(const AffinizedAlgebra& A, const DegreeWindow& w);

struct AffineOptions {
    std::size_t samples = 500;
    std::uint64_t seed = 0;
    /// Replaces the form in the form checks (used for negative tests).
    std::function<Scalar(const LoopElement&, const LoopElement&)> form_override;
};

/// Windowed EALS suite for 𝔩.
Report verify_affinized(const AffinizedAlgebra& A, const DegreeWindow& w, const AffineOptions& opt = {});

/// The same form with the δ_{λ+μ,0} factor dropped.
Scalar form_without_delta(const AffinizedAlgebra& A, const LoopElement& x, const LoopElement& y);

}  // namespace superlie
