#include "superlie/algebra.hpp"

#include "superlie/error.hpp"

#include <algorithm>
#include <set>

namespace superlie {

std::string weight_str(const Weight& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i].str();
    return s + "]";
}

Weight operator+(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw DimensionError("weights of different length");
    Weight c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Weight operator-(const Weight& a) {
    Weight c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

Weight operator*(const Scalar& k, const Weight& a) {
    Weight c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
    return c;
}

bool is_zero(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------------------

LieSuperalgebra::LieSuperalgebra(std::vector<std::string> labels, std::vector<Parity> parity, Field field)
    : labels_(std::move(labels)), parity_(std::move(parity)), field_(field) {
    if (labels_.size() != parity_.size()) throw DimensionError("labels and parities differ in length");
    for (Parity p : parity_)
        if (p > 1) throw PreconditionError("parity must be 0 or 1");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw PreconditionError("duplicate basis label");
}

void LieSuperalgebra::check_index(std::size_t i) const {
    if (i >= dim()) throw DimensionError("basis index " + std::to_string(i) + " out of range");
}

std::size_t LieSuperalgebra::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw PreconditionError("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

SparseVector LieSuperalgebra::basis_vector(std::size_t i) const {
    check_index(i);
    return SparseVector::unit(i);
}

std::optional<Parity> LieSuperalgebra::parity_of(const SparseVector& x) const {
    if (x.is_zero()) return std::nullopt;
    Parity p = parity(x.leading_index());
    for (const auto& [i, v] : x)
        if (parity(i) != p) return std::nullopt;
    return p;
}

void LieSuperalgebra::set_bracket(std::size_t i, std::size_t j, SparseVector v) {
    check_index(i);
    check_index(j);
    if (v.extent() > dim()) throw DimensionError("bracket value outside the basis");
    for (const auto& [k, c] : v)
        if (!c.in_field(field_)) throw PreconditionError("structure constant " + c.str() + " outside the field");
    if (v.is_zero()) {
        table_.erase({i, j});
    } else {
        table_[{i, j}] = std::move(v);
    }
}

void LieSuperalgebra::set_bracket_super(std::size_t i, std::size_t j, const SparseVector& v) {
    set_bracket(i, j, v);
    if (i != j) set_bracket(j, i, Scalar(-super_sign(parity(i), parity(j))) * v);
}

const SparseVector& LieSuperalgebra::structure(std::size_t i, std::size_t j) const {
    static const SparseVector zero;
    check_index(i);
    check_index(j);
    auto it = table_.find({i, j});
    return it == table_.end() ? zero : it->second;
}

SparseVector LieSuperalgebra::bracket(const SparseVector& x, const SparseVector& y) const {
    if (x.extent() > dim() || y.extent() > dim()) throw DimensionError("bracket: index out of range");
    SparseVector out;
    for (const auto& [i, a] : x) {
        for (const auto& [j, b] : y) {
            auto it = table_.find({i, j});
            if (it != table_.end()) out.axpy(a * b, it->second);
        }
    }
    return out;
}

void LieSuperalgebra::set_gram(SparseMatrix gram) {
    if (gram.rows() != dim() || gram.cols() != dim()) throw DimensionError("Gram matrix has wrong shape");
    gram_ = std::move(gram);
}

const SparseMatrix& LieSuperalgebra::gram() const {
    if (!gram_) throw PreconditionError("algebra has no bilinear form");
    return *gram_;
}

Scalar LieSuperalgebra::form(const SparseVector& x, const SparseVector& y) const {
    const SparseMatrix& g = gram();
    Scalar s;
    for (const auto& [i, a] : x) {
        Scalar r = g.row(i).dot(y);
        if (!r.is_zero()) s += a * r;
    }
    return s;
}

void LieSuperalgebra::set_cartan(std::vector<std::size_t> cartan) {
    for (std::size_t h : cartan) check_index(h);
    std::set<std::size_t> seen(cartan.begin(), cartan.end());
    if (seen.size() != cartan.size()) throw PreconditionError("repeated Cartan index");
    cartan_ = std::move(cartan);
}

bool LieSuperalgebra::in_cartan(const SparseVector& x) const {
    for (const auto& [i, v] : x)
        if (std::find(cartan_.begin(), cartan_.end(), i) == cartan_.end()) return false;
    return true;
}

void LieSuperalgebra::set_weights(std::vector<Weight> weights) {
    if (weights.size() != dim()) throw DimensionError("one weight per basis element required");
    for (const auto& w : weights)
        if (w.size() != cartan_.size()) throw DimensionError("weight length differs from Cartan size");
    weights_ = std::move(weights);
}

// ---------------------------------------------------------------------------

std::optional<Parity> matrix_parity(const SparseMatrix& a, const std::vector<Parity>& index_parity) {
    if (a.rows() != index_parity.size() || a.cols() != index_parity.size())
        throw DimensionError("matrix does not match the superspace");
    std::optional<Parity> p;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (const auto& [c, v] : a.row(r)) {
            Parity q = static_cast<Parity>(index_parity[r] ^ index_parity[c]);
            if (p && *p != q) return std::nullopt;
            p = q;
        }
    }
    return p;
}

SparseMatrix super_commutator(const SparseMatrix& a, const SparseMatrix& b, const std::vector<Parity>& index_parity) {
    auto pa = matrix_parity(a, index_parity);
    auto pb = matrix_parity(b, index_parity);
    if (!pa || !pb) return SparseMatrix(a.rows(), a.cols()) + (a * b) - (b * a);   // zero or mixed: plain
    SparseMatrix ab = a * b;
    SparseMatrix ba = b * a;
    if (super_sign(*pa, *pb) < 0) return ab + ba;
    return ab - ba;
}

Scalar supertrace(const SparseMatrix& a, const std::vector<Parity>& index_parity) {
    if (a.rows() != a.cols()) throw DimensionError("supertrace of a non-square matrix");
    if (a.rows() != index_parity.size()) throw DimensionError("matrix does not match the superspace");
    Scalar s;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Scalar d = a.get(i, i);
        if (index_parity[i]) s -= d; else s += d;
    }
    return s;
}

namespace {

SparseVector flatten(const SparseMatrix& m) {
    SparseVector v;
    std::vector<SparseVector::Entry> entries;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, x] : m.row(r)) v.set(r * m.cols() + c, x);
    return v;
}

}  // namespace

LieSuperalgebra from_matrix_basis(std::vector<std::string> labels, const std::vector<SparseMatrix>& matrices,
                                  const std::vector<Parity>& index_parity, Field field) {
    if (labels.size() != matrices.size()) throw DimensionError("labels and matrices differ in length");
    std::vector<Parity> parity;
    std::vector<SparseVector> flat;
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        auto p = matrix_parity(matrices[k], index_parity);
        if (!p) throw PreconditionError("basis matrix '" + labels[k] + "' is zero or not homogeneous");
        parity.push_back(*p);
        flat.push_back(flatten(matrices[k]));
    }
    CoordinateSolver solver(flat);
    LieSuperalgebra L(std::move(labels), std::move(parity), field);
    SparseMatrix gram(matrices.size(), matrices.size());
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        for (std::size_t j = 0; j < matrices.size(); ++j) {
            SparseMatrix c = super_commutator(matrices[i], matrices[j], index_parity);
            auto coords = solver.coordinates(flatten(c));
            if (!coords)
                throw PreconditionError("span not closed: [" + L.label(i) + ", " + L.label(j) + "] leaves it");
            L.set_bracket(i, j, *coords);
            gram.set(i, j, supertrace(matrices[i] * matrices[j], index_parity));
        }
    }
    L.set_gram(std::move(gram));
    return L;
}

void assign_weights(LieSuperalgebra& L, std::vector<std::size_t> cartan) {
    L.set_cartan(cartan);
    std::vector<Weight> weights(L.dim(), Weight(cartan.size()));
    for (std::size_t b = 0; b < L.dim(); ++b) {
        for (std::size_t k = 0; k < cartan.size(); ++k) {
            const SparseVector& v = L.structure(cartan[k], b);
            if (v.is_zero()) continue;
            if (v.nnz() != 1 || v.leading_index() != b)
                throw PreconditionError("'" + L.label(b) + "' is not a weight vector for '" + L.label(cartan[k]) +
                                        "'");
            weights[b][k] = v.leading();
        }
    }
    L.set_weights(std::move(weights));
}

std::vector<SparseMatrix> special_linear_basis(const std::vector<Parity>& index_parity) {
    const std::size_t n = index_parity.size();
    std::vector<SparseMatrix> mats;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            SparseMatrix m(n, n);
            m.set(a, b, 1);
            mats.push_back(std::move(m));
        }
    for (std::size_t a = 1; a < n; ++a) {
        SparseMatrix m(n, n);
        m.set(a, a, 1);
        m.set(0, 0, index_parity[a] == index_parity[0] ? -1 : 1);
        mats.push_back(std::move(m));
    }
    return mats;
}

std::vector<SparseMatrix> general_linear_basis(std::size_t n) {
    std::vector<SparseMatrix> mats;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            SparseMatrix m(n, n);
            m.set(a, b, 1);
            mats.push_back(std::move(m));
        }
    for (std::size_t a = 0; a < n; ++a) {
        SparseMatrix m(n, n);
        m.set(a, a, 1);
        mats.push_back(std::move(m));
    }
    return mats;
}

namespace {

std::vector<std::string> unit_labels(const std::vector<std::string>& names) {
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = 0; b < names.size(); ++b)
            if (a != b) labels.push_back("e[" + names[a] + "," + names[b] + "]");
    return labels;
}

}  // namespace

LieSuperalgebra special_linear(const std::vector<std::string>& index_names, const std::vector<Parity>& index_parity,
                               Field field) {
    const std::size_t n = index_names.size();
    if (n != index_parity.size()) throw DimensionError("index names and parities differ in length");
    if (n < 2) throw PreconditionError("special linear superalgebra needs at least two indices");
    auto odd = static_cast<std::size_t>(std::count(index_parity.begin(), index_parity.end(), Parity{1}));
    if (2 * odd == n) throw PreconditionError("equal even and odd index counts: the supertrace form is degenerate");

    std::vector<std::string> labels = unit_labels(index_names);
    std::vector<std::size_t> cartan;
    for (std::size_t a = 1; a < n; ++a) {
        cartan.push_back(labels.size());
        labels.push_back("h[" + index_names[a] + "]");
    }
    LieSuperalgebra L = from_matrix_basis(std::move(labels), special_linear_basis(index_parity), index_parity, field);
    assign_weights(L, std::move(cartan));
    return L;
}

LieSuperalgebra general_linear(const std::vector<std::string>& index_names, const std::vector<Parity>& index_parity,
                               Field field) {
    const std::size_t n = index_names.size();
    if (n != index_parity.size()) throw DimensionError("index names and parities differ in length");
    if (n < 1) throw PreconditionError("general linear superalgebra needs an index");
    std::vector<std::string> labels = unit_labels(index_names);
    std::vector<std::size_t> cartan;
    for (std::size_t a = 0; a < n; ++a) {
        cartan.push_back(labels.size());
        labels.push_back("h[" + index_names[a] + "]");
    }
    LieSuperalgebra L = from_matrix_basis(std::move(labels), general_linear_basis(n), index_parity, field);
    assign_weights(L, std::move(cartan));
    return L;
}

LieSuperalgebra sl_matrix_superalgebra(std::size_t m, std::size_t n) {
    if (m == 0) throw PreconditionError("sl(m|n) here needs m >= 1");
    std::vector<std::string> names;
    std::vector<Parity> parity;
    for (std::size_t a = 1; a <= m; ++a) {
        names.push_back(std::to_string(a));
        parity.push_back(0);
    }
    for (std::size_t b = 1; b <= n; ++b) {
        names.push_back(std::to_string(b) + "'");
        parity.push_back(1);
    }
    return special_linear(names, parity);
}

LieSuperalgebra even_part(const LieSuperalgebra& L) {
    std::vector<std::size_t> keep;
    std::vector<std::size_t> new_index(L.dim(), L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) {
        if (L.parity(i) == 0) {
            new_index[i] = keep.size();
            keep.push_back(i);
        }
    }
    std::vector<std::string> labels;
    for (std::size_t i : keep) labels.push_back(L.label(i));
    LieSuperalgebra E(std::move(labels), std::vector<Parity>(keep.size(), 0), L.field());
    auto is_even = [&](std::size_t k) { return new_index[k] < L.dim(); };
    std::vector<std::size_t> map(new_index.begin(), new_index.end());
    for (const auto& [key, v] : L.structure_table()) {
        if (!is_even(key.first) || !is_even(key.second)) continue;
        // The bracket is graded, but drop any odd components of a broken table.
        SparseVector w = v.filter(is_even).reindex(map);
        E.set_bracket(new_index[key.first], new_index[key.second], std::move(w));
    }
    if (L.has_gram()) {
        SparseMatrix g(keep.size(), keep.size());
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (const auto& [c, v] : L.gram().row(keep[a]))
                if (is_even(c)) g.set(a, new_index[c], v);
        E.set_gram(std::move(g));
    }
    if (L.has_cartan()) {
        std::vector<std::size_t> cartan;
        for (std::size_t h : L.cartan()) {
            if (!is_even(h)) throw PreconditionError("Cartan element '" + L.label(h) + "' is odd");
            cartan.push_back(new_index[h]);
        }
        E.set_cartan(std::move(cartan));
        if (L.has_weights()) {
            std::vector<Weight> w;
            for (std::size_t i : keep) w.push_back(L.weight(i));
            E.set_weights(std::move(w));
        }
    }
    return E;
}

}  // namespace superlie
