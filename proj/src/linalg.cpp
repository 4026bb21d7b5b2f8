#include "superlie/linalg.hpp"

#include "superlie/error.hpp"

#include <algorithm>

namespace superlie {

SparseVector SparseVector::unit(std::size_t i, Scalar c) {
    SparseVector v;
    if (!c.is_zero()) v.entries_.emplace_back(i, std::move(c));
    return v;
}

SparseVector SparseVector::from_dense(std::span<const Scalar> values) {
    SparseVector v;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_zero()) v.entries_.emplace_back(i, values[i]);
    return v;
}

Scalar SparseVector::get(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    return it != entries_.end() && it->first == i ? it->second : Scalar();
}

void SparseVector::set(std::size_t i, Scalar v) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    bool present = it != entries_.end() && it->first == i;
    if (v.is_zero()) {
        if (present) entries_.erase(it);
    } else if (present) {
        it->second = std::move(v);
    } else {
        entries_.emplace(it, i, std::move(v));
    }
}

void SparseVector::axpy(const Scalar& a, const SparseVector& x) {
    if (a.is_zero() || x.entries_.empty()) return;
    const bool unit = a.is_one();
    if (entries_.empty()) {
        entries_ = x.entries_;
        if (!unit)
            for (auto& e : entries_) e.second *= a;
        return;
    }
    std::vector<Entry> out;
    out.reserve(entries_.size() + x.entries_.size());
    auto p = entries_.begin();
    auto q = x.entries_.begin();
    while (p != entries_.end() || q != x.entries_.end()) {
        if (q == x.entries_.end() || (p != entries_.end() && p->first < q->first)) {
            out.push_back(std::move(*p++));
        } else if (p == entries_.end() || q->first < p->first) {
            out.emplace_back(q->first, unit ? q->second : a * q->second);
            ++q;
        } else {
            Scalar s = std::move(p->second);
            if (unit) s += q->second; else s += a * q->second;
            if (!s.is_zero()) out.emplace_back(p->first, std::move(s));
            ++p;
            ++q;
        }
    }
    entries_ = std::move(out);
}

SparseVector& SparseVector::operator*=(const Scalar& a) {
    if (a.is_zero()) {
        entries_.clear();
    } else if (!a.is_one()) {
        for (auto& e : entries_) e.second *= a;
    }
    return *this;
}

SparseVector SparseVector::operator-() const {
    SparseVector v = *this;
    for (auto& e : v.entries_) e.second = -e.second;
    return v;
}

Scalar SparseVector::dot(const SparseVector& y) const {
    Scalar s;
    auto p = entries_.begin();
    auto q = y.entries_.begin();
    while (p != entries_.end() && q != y.entries_.end()) {
        if (p->first < q->first) {
            ++p;
        } else if (q->first < p->first) {
            ++q;
        } else {
            s.add_mul(p->second, q->second);
            ++p;
            ++q;
        }
    }
    return s;
}

SparseVector SparseVector::reindex(std::span<const std::size_t> map) const {
    SparseVector out;
    for (const auto& [i, v] : entries_) {
        if (i >= map.size()) throw DimensionError("reindex: index out of range");
        out.entries_.emplace_back(map[i], v);
    }
    for (std::size_t k = 1; k < out.entries_.size(); ++k)
        if (out.entries_[k - 1].first >= out.entries_[k].first)
            throw DimensionError("reindex: map not increasing");
    return out;
}

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i] = SparseVector::unit(i);
    return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
    SparseMatrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    for (const auto& r : rows)
        if (r.extent() > cols) throw DimensionError("row longer than column count");
    m.data_ = std::move(rows);
    return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& cols) {
    SparseMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].extent() > rows) throw DimensionError("column longer than row count");
        for (const auto& [r, v] : cols[c]) m.data_[r].set(c, v);
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<SparseVector> data;
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionError("ragged dense matrix");
        data.push_back(SparseVector::from_dense(r));
    }
    return from_rows(cols, std::move(data));
}

Scalar SparseMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    return data_[r].get(c);
}

void SparseMatrix::set(std::size_t r, std::size_t c, Scalar v) {
    if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    data_[r].set(c, std::move(v));
}

bool SparseMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.is_zero(); });
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.nnz();
    return n;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
    if (x.extent() > cols_) throw DimensionError("apply: vector longer than column count");
    SparseVector y;
    std::vector<SparseVector::Entry> out;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].is_zero()) continue;
        Scalar s = data_[r].dot(x);
        if (!s.is_zero()) out.emplace_back(r, std::move(s));
    }
    for (auto& e : out) y.set(e.first, std::move(e.second));
    return y;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    std::vector<std::vector<SparseVector::Entry>> acc(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) acc[c].emplace_back(r, v);
    for (std::size_t c = 0; c < cols_; ++c)
        for (auto& e : acc[c]) t.data_[c].set(e.first, std::move(e.second));
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product: inner dimensions differ");
    SparseMatrix p(rows_, o.cols_);
    // Dense accumulator per row; touched records the columns written.
    std::vector<Scalar> acc(o.cols_);
    std::vector<char> seen(o.cols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t r = 0; r < rows_; ++r) {
        touched.clear();
        for (const auto& [k, v] : data_[r])
            for (const auto& [j, w] : o.data_[k]) {
                if (!seen[j]) {
                    seen[j] = 1;
                    touched.push_back(j);
                }
                acc[j].add_mul(v, w);
            }
        std::sort(touched.begin(), touched.end());
        SparseVector row;
        for (std::size_t j : touched) {
            if (!acc[j].is_zero()) row.set(j, std::move(acc[j]));
            acc[j] = Scalar();
            seen[j] = 0;
        }
        p.data_[r] = std::move(row);
    }
    return p;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shapes differ");
    for (std::size_t r = 0; r < rows_; ++r) data_[r] += o.data_[r];
    return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shapes differ");
    for (std::size_t r = 0; r < rows_; ++r) data_[r] -= o.data_[r];
    return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Scalar& a) {
    for (auto& r : data_) r *= a;
    return *this;
}

SparseVector SparseMatrix::column(std::size_t c) const {
    if (c >= cols_) throw DimensionError("column index out of range");
    SparseVector v;
    std::vector<SparseVector::Entry> out;
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar s = data_[r].get(c);
        if (!s.is_zero()) v.set(r, std::move(s));
    }
    return v;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const std::vector<SparseVector>& gens) {
    for (const auto& g : gens) insert(g);
}

SparseVector Subspace::reduce(const SparseVector& v) const {
    // Rows are fully reduced, so the coefficient needed at each pivot is the
    // original entry of v there.
    SparseVector w = v;
    for (const auto& [i, c] : v) {
        auto it = rows_.find(i);
        if (it != rows_.end()) w.axpy(-c, it->second);
    }
    return w;
}

bool Subspace::insert(const SparseVector& v) {
    SparseVector w = reduce(v);
    if (w.is_zero()) return false;
    w *= w.leading().inverse();
    std::size_t p = w.leading_index();
    for (auto& [pivot, row] : rows_) {
        Scalar c = row.get(p);
        if (!c.is_zero()) row.axpy(-c, w);
    }
    rows_.emplace(p, std::move(w));
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& [p, row] : other.rows_)
        if (!contains(row)) return false;
    return true;
}

std::vector<SparseVector> Subspace::basis() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
}

// ---------------------------------------------------------------------------

CoordinateSolver::CoordinateSolver(const std::vector<SparseVector>& family) : size_(family.size()) {
    for (std::size_t k = 0; k < family.size(); ++k) {
        Row r{family[k], SparseVector::unit(k)};
        for (const auto& [i, c] : family[k]) {
            auto it = rows_.find(i);
            if (it != rows_.end()) {
                r.vec.axpy(-c, it->second.vec);
                r.tag.axpy(-c, it->second.tag);
            }
        }
        if (r.vec.is_zero()) throw PreconditionError("coordinate family is linearly dependent");
        Scalar inv = r.vec.leading().inverse();
        r.vec *= inv;
        r.tag *= inv;
        std::size_t p = r.vec.leading_index();
        for (auto& [pivot, row] : rows_) {
            Scalar c = row.vec.get(p);
            if (!c.is_zero()) {
                row.vec.axpy(-c, r.vec);
                row.tag.axpy(-c, r.tag);
            }
        }
        rows_.emplace(p, std::move(r));
    }
}

std::optional<SparseVector> CoordinateSolver::coordinates(const SparseVector& v) const {
    SparseVector w = v;
    SparseVector tag;
    for (const auto& [i, c] : v) {
        auto it = rows_.find(i);
        if (it != rows_.end()) {
            w.axpy(-c, it->second.vec);
            tag.axpy(c, it->second.tag);
        }
    }
    if (!w.is_zero()) return std::nullopt;
    return tag;
}

// ---------------------------------------------------------------------------

namespace {

// Reduced row echelon form of the rows, inserted in row order.
Subspace row_echelon(const SparseMatrix& m) {
    Subspace s;
    for (std::size_t r = 0; r < m.rows(); ++r) s.insert(m.row(r));
    return s;
}

}  // namespace

std::optional<SparseVector> solve_linear(const SparseMatrix& m, const SparseVector& rhs) {
    if (rhs.extent() > m.rows()) throw DimensionError("solve_linear: rhs longer than row count");
    const std::size_t aug = m.cols();
    Subspace s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseVector row = m.row(r);
        Scalar b = rhs.get(r);
        if (!b.is_zero()) row.set(aug, b);
        s.insert(row);
    }
    if (s.rows().count(aug)) return std::nullopt;
    SparseVector x;
    for (const auto& [p, row] : s.rows()) {
        Scalar v = row.get(aug);
        if (!v.is_zero()) x.set(p, v);
    }
    return x;
}

std::vector<SparseVector> nullspace(const SparseMatrix& m) {
    Subspace s = row_echelon(m);
    std::vector<SparseVector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (s.rows().count(f)) continue;
        SparseVector x = SparseVector::unit(f);
        for (const auto& [p, row] : s.rows()) {
            if (p > f) break;
            Scalar c = row.get(f);
            if (!c.is_zero()) x.set(p, -c);
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::size_t rank(const SparseMatrix& m) { return row_echelon(m).dim(); }

std::size_t rank(const std::vector<SparseVector>& vectors) { return Subspace(vectors).dim(); }

}  // namespace superlie
