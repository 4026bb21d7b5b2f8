#pragma once

#include "superlie/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace superlie {

/// Sparse coordinate vector; entries sorted by index, zeros never stored.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    SparseVector() = default;
    static SparseVector unit(std::size_t i, Scalar c = 1);
    static SparseVector from_dense(std::span<const Scalar> values);

    Scalar get(std::size_t i) const;
    void set(std::size_t i, Scalar v);
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    /// Smallest index with a nonzero entry; only valid when nonzero.
    std::size_t leading_index() const { return entries_.front().first; }
    const Scalar& leading() const { return entries_.front().second; }
    /// One past the largest stored index (0 when zero).
    std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

    /// this += a * x
    void axpy(const Scalar& a, const SparseVector& x);
    SparseVector& operator+=(const SparseVector& x) { axpy(Scalar(1), x); return *this; }
    SparseVector& operator-=(const SparseVector& x) { axpy(Scalar(-1), x); return *this; }
    SparseVector& operator*=(const Scalar& a);
    SparseVector operator-() const;

    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator*(const Scalar& a, SparseVector x) { return x *= a; }
    friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }
    friend bool operator<(const SparseVector& a, const SparseVector& b) { return a.entries_ < b.entries_; }

    Scalar dot(const SparseVector& y) const;
    /// Keeps only the entries whose index satisfies keep(i).
    template <class Pred>
    SparseVector filter(Pred keep) const {
        SparseVector out;
        for (const auto& [i, v] : entries_)
            if (keep(i)) out.entries_.emplace_back(i, v);
        return out;
    }
    /// Relabels index i as map[i]; map must be strictly increasing on the support.
    SparseVector reindex(std::span<const std::size_t> map) const;

private:
    std::vector<Entry> entries_;
};

/// Row-major sparse matrix.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);
    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
    static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& cols);
    static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Scalar v);
    const SparseVector& row(std::size_t r) const { return data_.at(r); }
    SparseVector& row_mut(std::size_t r) { return data_.at(r); }
    bool is_zero() const;
    std::size_t nnz() const;

    SparseVector apply(const SparseVector& x) const;
    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix& operator+=(const SparseMatrix& o);
    SparseMatrix& operator-=(const SparseMatrix& o);
    SparseMatrix& operator*=(const Scalar& a);
    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
    friend SparseMatrix operator*(const Scalar& a, SparseMatrix m) { return m *= a; }
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    SparseVector column(std::size_t c) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> data_;
};

/// Span of vectors kept in fully reduced row echelon form.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(const std::vector<SparseVector>& gens);

    /// Adds v; returns true iff the dimension grew.
    bool insert(const SparseVector& v);
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
    bool contains(const Subspace& other) const;
    std::size_t dim() const { return rows_.size(); }
    /// Reduced echelon rows keyed by pivot index.
    const std::map<std::size_t, SparseVector>& rows() const { return rows_; }
    std::vector<SparseVector> basis() const;
    friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }

private:
    std::map<std::size_t, SparseVector> rows_;
};

/// Coordinates with respect to a fixed linearly independent family.
class CoordinateSolver {
public:
    CoordinateSolver() = default;
    /// Throws PreconditionError if the family is dependent.
    explicit CoordinateSolver(const std::vector<SparseVector>& family);
    std::optional<SparseVector> coordinates(const SparseVector& v) const;
    std::size_t size() const { return size_; }

private:
    struct Row {
        SparseVector vec;
        SparseVector tag;
    };
    std::map<std::size_t, Row> rows_;
    std::size_t size_ = 0;
};

/// Exact solution of M x = rhs, free variables set to zero; nullopt if inconsistent.
std::optional<SparseVector> solve_linear(const SparseMatrix& m, const SparseVector& rhs);
/// Basis of {x : M x = 0}, one vector per free column in increasing order.
std::vector<SparseVector> nullspace(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);
std::size_t rank(const std::vector<SparseVector>& vectors);

}  // namespace superlie
