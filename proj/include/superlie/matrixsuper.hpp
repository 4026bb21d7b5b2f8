#pragma once

#include "superlie/affinize.hpp"
#include "superlie/algebra.hpp"
#include "superlie/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace superlie {

/// I = {0}? ⊎ İ ⊎ bar İ (even) and J = {0'}? ⊎ J̇ ⊎ bar J̇ (odd), with
/// İ = {1..m} and J̇ = {1..n}. Index order: 0, 1..m, 1b..mb, 0', 1'..n', 1b'..nb'.
struct SuperIndexSet {
    std::size_t m = 1, n = 1;
    bool zero = false, zero_prime = false;

    std::size_t size() const { return even_count() + odd_count(); }
    std::size_t even_count() const { return 2 * m + (zero ? 1 : 0); }
    std::size_t odd_count() const { return 2 * n + (zero_prime ? 1 : 0); }
    std::vector<std::string> names() const;
    std::vector<Parity> parity() const;
    /// bar as an index permutation.
    std::vector<std::size_t> bar() const;
    std::size_t index_of(const std::string& name) const;
    /// "BC(m,n)" if 0 or 0' is present, else "C(m,n)".
    std::string type_label() const;
};

/// Σ c_τ t^τ; zero coefficients are never stored.
using TorusElement = std::map<GroupElement, Scalar>;

void torus_add(TorusElement& a, const GroupElement& tau, const Scalar& c);

/// t^τ ↦ s_τ t^τ with s_τ = Π σᵢ^{τᵢ} and σᵢ = ±1.
struct StarInvolution {
    std::vector<int> signs;   // empty means the identity

    Scalar sign(const GroupElement& tau) const;
    TorusElement apply(const TorusElement& a) const;
};

/// s_τ² = 1 and (ab)* = b*a* on the window. Throws PreconditionError for a
/// sign other than ±1.
Report verify_star(const StarInvolution& star, const CocycleTorus& t, const DegreeWindow& w);

/// Finitely supported square matrix with torus entries.
class TorusMatrix {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    TorusMatrix() = default;
    explicit TorusMatrix(std::size_t n) : n_(n) {}
    /// E_ab(c t^τ)
    static TorusMatrix unit(std::size_t n, std::size_t a, std::size_t b, const GroupElement& tau, Scalar c = 1);

    std::size_t size() const { return n_; }
    const std::map<Key, TorusElement>& entries() const { return entries_; }
    TorusElement entry(std::size_t a, std::size_t b) const;
    void add(std::size_t a, std::size_t b, const GroupElement& tau, const Scalar& c);
    bool is_zero() const { return entries_.empty(); }
    /// Entries (a, b) with |a| + |b| = p.
    TorusMatrix homogeneous_part(const std::vector<Parity>& parity, Parity p) const;
    std::optional<Parity> parity_of(const std::vector<Parity>& parity) const;

    TorusMatrix& operator+=(const TorusMatrix& o);
    TorusMatrix& operator-=(const TorusMatrix& o);
    TorusMatrix& operator*=(const Scalar& c);
    friend TorusMatrix operator+(TorusMatrix a, const TorusMatrix& b) { return a += b; }
    friend TorusMatrix operator-(TorusMatrix a, const TorusMatrix& b) { return a -= b; }
    friend TorusMatrix operator*(const Scalar& c, TorusMatrix a) { return a *= c; }
    friend bool operator==(const TorusMatrix& a, const TorusMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    nlohmann::json to_json(const std::vector<std::string>& names) const;

private:
    std::size_t n_ = 0;
    std::map<Key, TorusElement> entries_;
};

TorusMatrix multiply(const TorusMatrix& a, const TorusMatrix& b, const CocycleTorus& t);
/// Super-commutator, extended bilinearly over the homogeneous parts.
TorusMatrix super_commutator(const TorusMatrix& a, const TorusMatrix& b, const std::vector<Parity>& parity,
                             const CocycleTorus& t);
TorusElement trace(const TorusMatrix& x);
/// Σ (−1)^{|a|} x_aa
TorusElement supertrace(const TorusMatrix& x, const std::vector<Parity>& parity);
/// ε(str(xy)), the t⁰ coefficient of the supertrace.
Scalar supertrace_form(const TorusMatrix& x, const TorusMatrix& y, const std::vector<Parity>& parity,
                       const CocycleTorus& t);
/// (X^⋄)_{bar b, bar a} = (x_ab)*.
TorusMatrix diamond(const TorusMatrix& x, const std::vector<std::size_t>& bar, const StarInvolution& star);
/// Block formula for #: every entry maps as under ⋄, with sign + on the
/// J×I block and − elsewhere.
TorusMatrix sharp(const TorusMatrix& x, const SuperIndexSet& idx, const StarInvolution& star);

enum class MatrixKind { sl, pl };

struct MatrixConfig {
    SuperIndexSet index;
    std::size_t torus_rank = 1;
    std::vector<std::vector<Scalar>> q;   // bimultiplicative cocycle; empty means trivial
    StarInvolution star;
    MatrixKind kind = MatrixKind::sl;
    int sharp_power = 1;                  // realize #^p instead of # (negative tests)
};

/// Part of 𝔩 of a single torus degree, π-weight, parity and #-eigenvalue ζ^k.
struct EigenBlock {
    int k = 0;
    Parity parity = 0;
    GroupElement degree;
    Weight pi;                            // π(α) + τ on the 𝔥̂ coordinates
    std::vector<LoopElement> basis;
};

/// 𝔩 = 𝔤 ⊗ 𝒜 ⊕ 𝒱 ⊕ 𝒱† for 𝔤 = sl (or pl) over I ⊎ J and the field ℚ(i),
/// with # extended by the identity on 𝒱 ⊕ 𝒱†.
class MatrixSuper {
public:
    /// Throws PreconditionError for sl with |I| = |J| and for inadmissible stars.
    explicit MatrixSuper(MatrixConfig cfg);

    const MatrixConfig& config() const { return cfg_; }
    const SuperIndexSet& index() const { return cfg_.index; }
    const AffinizedAlgebra& loop() const { return loop_; }
    const LieSuperalgebra& base() const { return loop_.base(); }
    const std::vector<SparseMatrix>& base_matrices() const { return mats_; }
    /// Column b holds the coordinates of (#^p)(b) for the constant basis element b.
    const SparseMatrix& sharp_base() const { return S_; }
    /// Sign of #^p on degree τ.
    Scalar degree_sign(const GroupElement& tau) const;
    LoopElement sharp(const LoopElement& x) const;
    /// Smallest k ≤ 8 with (#^p)^k = id on every degree, 0 if there is none.
    int order() const;

    /// σ on 𝔥̂ coordinates (base Cartan, 𝒱, 𝒱†); column c is σ(ĥ_c).
    const SparseMatrix& sigma() const { return sigma_; }
    /// ¼(α + σα + σ²α + σ³α) for a functional on 𝔥̂ coordinates.
    Weight pi(const Weight& alpha) const;
    /// Basis of 𝔥^σ on 𝔥̂ coordinates: fixed vectors in the base Cartan, then 𝒱, 𝒱†.
    const std::vector<SparseVector>& fixed_cartan() const { return fixed_; }
    Weight restrict_to_fixed(const Weight& w) const;
    /// ε_a (a ∈ I) or δ_a (a ∈ J) on the base Cartan: h ↦ h_aa.
    Weight epsilon(std::size_t a) const;
    /// Base weight padded by zeros on 𝒱 ⊕ 𝒱†.
    Weight hat(const Weight& base_weight) const;

    std::vector<EigenBlock> eigenblocks(const DegreeWindow& w) const;
    std::string type_label() const { return cfg_.index.type_label(); }

private:
    struct Class {
        Parity parity = 0;
        Weight pi;
        std::vector<SparseVector> basis[2][4];   // [sign −1 / +1][k]
    };

    MatrixConfig cfg_;
    AffinizedAlgebra loop_;
    std::vector<SparseMatrix> mats_;
    SparseMatrix S_;
    SparseMatrix sigma_;
    std::vector<SparseVector> fixed_;
    std::vector<Class> classes_;
};

/// π(𝕽) from the realized σ against the union of the five displayed
/// families, base parts only (𝕽 adds all τ to both sides).
struct PiComparison {
    std::set<Weight> projected;   // {π(α) : α ∈ R}, 0 included
    std::set<Weight> families;    // nonzero family members, plus 0 from the τ family
    std::set<Weight> second;      // the rewritten display, same convention
    std::size_t degenerate = 0;   // family members equal to 0 (absorbed by τ)
};
PiComparison compare_pi_families(const MatrixSuper& M);

/// Matrix-level and 𝔩-level properties of ⋄, #, the eigenspaces and π.
Report verify_matrix_structure(const MatrixSuper& M, const DegreeWindow& w, std::size_t samples = 200,
                               std::uint64_t seed = 0);

/// Σᵢ xᵢ ⊗ tⁱ + r c + s d with xᵢ ∈ 𝔩.
class TwistedElement {
public:
    TwistedElement() = default;
    explicit TwistedElement(std::size_t rank) : rank_(rank) {}
    static TwistedElement part(LoopElement x, long i);
    static TwistedElement central(std::size_t rank);
    static TwistedElement derivation(std::size_t rank);

    std::size_t rank() const { return rank_; }
    const std::map<long, LoopElement>& parts() const { return parts_; }
    const Scalar& c() const { return c_; }
    const Scalar& d() const { return d_; }
    bool is_zero() const { return parts_.empty() && c_.is_zero() && d_.is_zero(); }

    void add_part(long i, const Scalar& k, const LoopElement& x);
    void add_c(const Scalar& k) { c_ += k; }
    void add_d(const Scalar& k) { d_ += k; }

    TwistedElement& operator+=(const TwistedElement& o);
    TwistedElement& operator-=(const TwistedElement& o);
    TwistedElement& operator*=(const Scalar& k);
    friend TwistedElement operator+(TwistedElement a, const TwistedElement& b) { return a += b; }
    friend TwistedElement operator-(TwistedElement a, const TwistedElement& b) { return a -= b; }
    friend TwistedElement operator*(const Scalar& k, TwistedElement a) { return a *= k; }
    friend bool operator==(const TwistedElement& a, const TwistedElement& b) {
        return a.parts_ == b.parts_ && a.c_ == b.c_ && a.d_ == b.d_;
    }

private:
    std::size_t rank_ = 0;
    std::map<long, LoopElement> parts_;
    Scalar c_, d_;
};

/// |i| ≤ radius for the t-degree and a box for the torus degree.
struct TwistedWindow {
    long radius = 4;
    DegreeWindow torus;
};

/// 𝔩̃ = Σ ^{[i]}𝔩 ⊗ tⁱ ⊕ 𝔽c ⊕ 𝔽d with Cartan 𝔥̃ = (𝔥^σ ⊗ 1) ⊕ 𝔽c ⊕ 𝔽d.
class TwistedAlgebra {
public:
    /// Throws PreconditionError unless the realized # has order exactly 4.
    explicit TwistedAlgebra(MatrixSuper M);

    const MatrixSuper& matrix() const { return M_; }
    std::size_t rank() const { return M_.loop().rank(); }

    TwistedElement bracket(const TwistedElement& x, const TwistedElement& y) const;
    Scalar form(const TwistedElement& x, const TwistedElement& y) const;
    std::optional<Parity> parity_of(const TwistedElement& x) const;
    /// Every component of t-degree i satisfies x^# = ζ^i x.
    bool is_graded(const TwistedElement& x) const;

    /// 𝔥^σ ⊗ 1 in fixed_cartan() order, then c, d.
    std::vector<TwistedElement> cartan() const;
    const CartanForm& cartan_form() const { return form_; }
    bool in_cartan(const TwistedElement& x) const;
    /// Functional on cartan() of x ⊗ tⁱ for x of π-weight pi (𝔥̂ coordinates).
    Weight weight(const Weight& pi, long i) const;
    /// t_ρ in 𝔥̃.
    TwistedElement t(const Weight& rho) const;
    nlohmann::json to_json(const TwistedElement& x) const;

private:
    MatrixSuper M_;
    CartanForm form_;
};

struct TwistedRoot {
    Weight weight;                        // on TwistedAlgebra::cartan()
    std::vector<TwistedElement> basis;
};

struct TwistedRoots {
    std::vector<TwistedRoot> roots;       // sorted by weight
    std::vector<TwistedElement> basis;    // the whole window basis
    Report report;                        // eigen relations of 𝔥̃
};

TwistedRoots twisted_roots(const TwistedAlgebra& T, const TwistedWindow& w);

struct TwistedOptions {
    std::size_t samples = 500;
    std::uint64_t seed = 0;
};

/// Windowed EALS suite for 𝔩̃.
Report verify_twisted(const TwistedAlgebra& T, const TwistedWindow& w, const TwistedOptions& opt = {});

}  // namespace superlie
