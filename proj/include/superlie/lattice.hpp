#pragma once

#include "superlie/scalar.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace superlie {

/// Element of ℤⁿ in the fixed standard basis.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(std::size_t rank) : coords_(rank, 0) {}
    explicit GroupElement(std::vector<long> coords) : coords_(std::move(coords)) {}
    GroupElement(std::initializer_list<long> coords) : coords_(coords) {}
    static GroupElement basis(std::size_t rank, std::size_t i);

    std::size_t rank() const { return coords_.size(); }
    long operator[](std::size_t i) const { return coords_.at(i); }
    const std::vector<long>& coords() const { return coords_; }
    bool is_zero() const;

    GroupElement& operator+=(const GroupElement& o);
    GroupElement& operator-=(const GroupElement& o);
    GroupElement operator-() const;
    friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
    friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
    friend GroupElement operator*(long k, const GroupElement& a);
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

    /// "(a, b, c)"
    std::string str() const;

private:
    std::vector<long> coords_;
};

/// Symmetric bilinear form on ℤⁿ given by its Gram matrix.
class SymmetricGroupForm {
public:
    SymmetricGroupForm() = default;
    /// Throws DimensionError for a non-square Gram, PreconditionError if not symmetric.
    explicit SymmetricGroupForm(std::vector<std::vector<Scalar>> gram);
    static SymmetricGroupForm zero(std::size_t rank);

    std::size_t rank() const { return gram_.size(); }
    const Scalar& entry(std::size_t i, std::size_t j) const { return gram_.at(i).at(j); }
    const std::vector<std::vector<Scalar>>& gram() const { return gram_; }
    Scalar operator()(const GroupElement& a, const GroupElement& b) const;

private:
    std::vector<std::vector<Scalar>> gram_;
};

Scalar form_eval(const SymmetricGroupForm& f, const GroupElement& a, const GroupElement& b);
/// True iff a · gram = 0.
bool radical_member(const SymmetricGroupForm& f, const GroupElement& a);

/// ℤ-basis of the subgroup of ℚ(i)^k generated by finitely many vectors.
///
/// Vectors are flattened to ℚ^{2k} (real and imaginary parts), scaled to
/// integers and brought to Hermite normal form.
class LatticeBasis {
public:
    explicit LatticeBasis(const std::vector<std::vector<Scalar>>& generators);

    std::size_t rank() const { return basis_.size(); }
    /// Basis vectors in the original coordinates.
    std::vector<std::vector<Scalar>> basis() const;
    /// Integer coordinates of v; throws PreconditionError if v is outside the lattice.
    GroupElement coordinates(const std::vector<Scalar>& v) const;
    bool contains(const std::vector<Scalar>& v) const;
    /// Image of integer coordinates in the original coordinates.
    std::vector<Scalar> embed(const GroupElement& c) const;
    /// True iff the lattice is all of ℤ^k (only meaningful for integer generators).
    bool is_standard() const;

private:
    std::vector<mpz_class> flatten(const std::vector<Scalar>& v, bool& integral) const;

    std::size_t dim_ = 0;            // k
    mpz_class denominator_ = 1;      // common denominator used for scaling
    std::vector<std::vector<mpz_class>> basis_;   // HNF rows over ℤ^{2k}, scaled
    std::vector<std::size_t> pivots_;
};

}  // namespace superlie
