#pragma once

#include "superlie/linalg.hpp"
#include "superlie/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superlie {

using Parity = std::uint8_t;
/// Values of a functional on the Cartan basis elements, in Cartan order.
using Weight = std::vector<Scalar>;

std::string weight_str(const Weight& w);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(const Scalar& k, const Weight& a);
bool is_zero(const Weight& w);

/// (−1)^{pq}
inline int super_sign(Parity p, Parity q) { return (p & q) ? -1 : 1; }

/// Finite-dimensional Lie superalgebra given by structure constants on a
/// homogeneous basis, optionally with a Gram matrix, a Cartan index set and
/// weight labels.
class LieSuperalgebra {
public:
    LieSuperalgebra() = default;
    LieSuperalgebra(std::vector<std::string> labels, std::vector<Parity> parity, Field field = Field::rational);

    std::size_t dim() const { return labels_.size(); }
    Field field() const { return field_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    Parity parity(std::size_t i) const { return parity_.at(i); }
    const std::vector<Parity>& parities() const { return parity_; }
    std::size_t index_of(const std::string& label) const;
    SparseVector basis_vector(std::size_t i) const;
    /// Parity of a nonzero homogeneous vector; nullopt if mixed or zero.
    std::optional<Parity> parity_of(const SparseVector& x) const;

    /// Stores [b_i, b_j] exactly as given (no symmetrization).
    void set_bracket(std::size_t i, std::size_t j, SparseVector v);
    /// Stores [b_i, b_j] and the anti-supersymmetric partner [b_j, b_i].
    void set_bracket_super(std::size_t i, std::size_t j, const SparseVector& v);
    const SparseVector& structure(std::size_t i, std::size_t j) const;
    /// Nonzero structure constants keyed by (i, j).
    const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& structure_table() const { return table_; }
    SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

    void set_gram(SparseMatrix gram);
    bool has_gram() const { return gram_.has_value(); }
    const SparseMatrix& gram() const;
    Scalar form(const SparseVector& x, const SparseVector& y) const;

    void set_cartan(std::vector<std::size_t> cartan);
    const std::vector<std::size_t>& cartan() const { return cartan_; }
    bool has_cartan() const { return !cartan_.empty(); }
    bool in_cartan(const SparseVector& x) const;

    void set_weights(std::vector<Weight> weights);
    bool has_weights() const { return !weights_.empty(); }
    const Weight& weight(std::size_t i) const { return weights_.at(i); }
    const std::vector<Weight>& weights() const { return weights_; }

private:
    void check_index(std::size_t i) const;

    std::vector<std::string> labels_;
    std::vector<Parity> parity_;
    Field field_ = Field::rational;
    std::map<std::pair<std::size_t, std::size_t>, SparseVector> table_;
    std::optional<SparseMatrix> gram_;
    std::vector<std::size_t> cartan_;
    std::vector<Weight> weights_;
};

/// Lie superalgebra spanned by homogeneous square matrices over a superspace
/// with the given index parities. Brackets are super-commutators and the Gram
/// matrix is the supertrace form str(xy). Throws PreconditionError if the
/// matrices are dependent, inhomogeneous or not closed under the bracket.
LieSuperalgebra from_matrix_basis(std::vector<std::string> labels, const std::vector<SparseMatrix>& matrices,
                                  const std::vector<Parity>& index_parity, Field field = Field::rational);

/// Super-commutator of homogeneous matrices over a superspace.
SparseMatrix super_commutator(const SparseMatrix& a, const SparseMatrix& b, const std::vector<Parity>& index_parity);
Scalar supertrace(const SparseMatrix& a, const std::vector<Parity>& index_parity);
/// Parity of a nonzero homogeneous matrix; nullopt if mixed or zero.
std::optional<Parity> matrix_parity(const SparseMatrix& a, const std::vector<Parity>& index_parity);

/// Sets the Cartan index set and reads each basis weight off [h, b] = w(h) b.
/// Throws PreconditionError naming the pair if some b is not a weight vector.
void assign_weights(LieSuperalgebra& L, std::vector<std::size_t> cartan);

/// sl(m|n) on matrix units plus the diagonal basis e_aa − e_00 (a even),
/// e_bb + e_00 (b odd), with Cartan = diagonal part, weights and supertrace
/// form. Even indices come first. Requires m ≥ 1 and m ≠ n.
LieSuperalgebra sl_matrix_superalgebra(std::size_t m, std::size_t n);

/// The same construction over arbitrary named indices. The diagonal basis is
/// built against the first index; labels are "e[a,b]" and "h[a]". Throws
/// PreconditionError when the even and odd index counts agree (the
/// supertrace form is then degenerate).
LieSuperalgebra special_linear(const std::vector<std::string>& index_names, const std::vector<Parity>& index_parity,
                               Field field = Field::rational);

/// pl over named indices: units e[a,b] (a ≠ b), then h[a] = e_aa, with the
/// full diagonal as Cartan. The supertrace form is nondegenerate for any
/// index counts.
LieSuperalgebra general_linear(const std::vector<std::string>& index_names, const std::vector<Parity>& index_parity,
                               Field field = Field::rational);

/// Basis matrices of special_linear and general_linear, in basis order.
std::vector<SparseMatrix> special_linear_basis(const std::vector<Parity>& index_parity);
std::vector<SparseMatrix> general_linear_basis(std::size_t n);

/// Restriction to the even basis indices (structure, form, Cartan, weights).
LieSuperalgebra even_part(const LieSuperalgebra& L);

}  // namespace superlie
