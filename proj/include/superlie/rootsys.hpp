#pragma once

#include "superlie/eals.hpp"
#include "superlie/lattice.hpp"
#include "superlie/report.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace superlie {

/// Finite root set in ℤⁿ with a symmetric form, classified into radical,
/// real and nonsingular roots.
///
/// A window predicate marks the part of ℤⁿ where the set is known to be
/// complete; outside it, absence of an element says nothing. Axioms that
/// would need information outside the window are skipped, not failed.
class RootSupersystem {
public:
    /// How S1's ⟨R⟩ = A is read: A is the ℤ-span of R (span), or A is the
    /// whole container ℤⁿ (container).
    enum class Ambient { span, container };
    using Window = std::function<bool(const GroupElement&)>;

    RootSupersystem() = default;
    /// Throws DimensionError if some root has the wrong rank.
    RootSupersystem(SymmetricGroupForm form, std::vector<GroupElement> roots);

    std::size_t rank() const { return form_.rank(); }
    const SymmetricGroupForm& form() const { return form_; }
    Scalar pair(const GroupElement& a, const GroupElement& b) const { return form_(a, b); }
    /// Sorted, duplicate-free.
    const std::vector<GroupElement>& roots() const { return roots_; }
    bool contains(const GroupElement& a) const;

    /// R⁰ = R ∩ A⁰
    const std::vector<GroupElement>& radical() const { return radical_; }
    /// R_re^× = {α : (α,α) ≠ 0}
    const std::vector<GroupElement>& real() const { return real_; }
    /// R_ns^× = {α ∉ R⁰ : (α,α) = 0}
    const std::vector<GroupElement>& nonsingular() const { return nonsingular_; }
    bool is_real(const GroupElement& a) const { return !pair(a, a).is_zero(); }
    /// (a, R) = 0, i.e. a ∈ A⁰ for A = ⟨R⟩.
    bool in_radical(const GroupElement& a) const;

    void set_window(Window w) { window_ = std::move(w); }
    bool has_window() const { return static_cast<bool>(window_); }
    bool in_window(const GroupElement& a) const { return !window_ || window_(a); }
    void set_ambient(Ambient a) { ambient_ = a; }
    Ambient ambient() const { return ambient_; }

private:
    SymmetricGroupForm form_;
    std::vector<GroupElement> roots_;
    std::vector<GroupElement> radical_, real_, nonsingular_;
    Window window_;
    Ambient ambient_ = Ambient::span;
};

RootSupersystem classify(std::vector<GroupElement> roots, SymmetricGroupForm form);

/// 2(α,β)/(α,α); throws PreconditionError unless α is real.
Scalar cartan_number(const RootSupersystem& s, const GroupElement& alpha, const GroupElement& beta);

/// r_α(β) = β − 2(α,β)/(α,α) α. Throws PreconditionError for non-real α or
/// a non-integral Cartan number.
GroupElement reflect(const RootSupersystem& s, const GroupElement& alpha, const GroupElement& beta);

struct RootString {
    std::vector<long> ks;     // k with β + kα ∈ R, ascending, within the scan cap
    long p = 0;               // −min k
    long q = 0;               // max k
    bool interval = false;    // ks is {−p, …, q} and contains 0
    bool fits = true;         // both string ends lie inside the window
    bool capped = false;      // membership reached the scan cap
    Scalar cartan_number;     // 2(β,α)/(α,α)
    bool balanced = false;    // p − q = cartan_number
};

/// Scans β + kα for |k| ≤ 4|R|. Throws PreconditionError for non-real α.
RootString root_string(const RootSupersystem& s, const GroupElement& alpha, const GroupElement& beta);

struct RatioResult {
    std::vector<Scalar> ratios;      // all k ∈ ℚ with kα ∈ R, ascending
    std::vector<Scalar> offending;   // those outside {0, ±1, ±2, ±1/2}
};

/// Throws PreconditionError for non-real α.
RatioResult ratio_check(const RootSupersystem& s, const GroupElement& alpha);

/// Axioms S1 to S5 with the first failing witness for each.
Report check_axioms(const RootSupersystem& s);

/// Re-expresses functionals in integer coordinates on a ℤ-basis of their
/// span, with the form transferred from the Cartan. The window predicate,
/// if given, is evaluated on the original functionals.
RootSupersystem from_root_values(const std::vector<Weight>& roots, const CartanForm& form,
                                 std::function<bool(const Weight&)> window = {});
/// from_root_values on the roots of a datum; requires its form.
RootSupersystem from_root_datum(const RootDatum& d);

}  // namespace superlie
