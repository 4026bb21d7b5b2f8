#include "superlie/lattice.hpp"

#include "superlie/error.hpp"

#include <algorithm>
#include <sstream>

namespace superlie {

GroupElement GroupElement::basis(std::size_t rank, std::size_t i) {
    if (i >= rank) throw DimensionError("basis index out of range");
    GroupElement g(rank);
    g.coords_[i] = 1;
    return g;
}

bool GroupElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](long c) { return c == 0; });
}

GroupElement& GroupElement::operator+=(const GroupElement& o) {
    if (rank() != o.rank()) throw DimensionError("group elements of different rank");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& o) {
    if (rank() != o.rank()) throw DimensionError("group elements of different rank");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

GroupElement GroupElement::operator-() const {
    GroupElement g = *this;
    for (auto& c : g.coords_) c = -c;
    return g;
}

GroupElement operator*(long k, const GroupElement& a) {
    GroupElement g = a;
    for (auto& c : g.coords_) c *= k;
    return g;
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i];
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------

SymmetricGroupForm::SymmetricGroupForm(std::vector<std::vector<Scalar>> gram) : gram_(std::move(gram)) {
    for (const auto& row : gram_)
        if (row.size() != gram_.size()) throw DimensionError("Gram matrix is not square");
    for (std::size_t i = 0; i < gram_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i]) throw PreconditionError("Gram matrix is not symmetric");
}

SymmetricGroupForm SymmetricGroupForm::zero(std::size_t rank) {
    return SymmetricGroupForm(std::vector<std::vector<Scalar>>(rank, std::vector<Scalar>(rank)));
}

Scalar SymmetricGroupForm::operator()(const GroupElement& a, const GroupElement& b) const {
    if (a.rank() != rank() || b.rank() != rank()) throw DimensionError("form_eval: rank mismatch");
    Scalar s;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        Scalar row;
        for (std::size_t j = 0; j < rank(); ++j)
            if (b[j] != 0) row += gram_[i][j] * Scalar(b[j]);
        s += Scalar(a[i]) * row;
    }
    return s;
}

Scalar form_eval(const SymmetricGroupForm& f, const GroupElement& a, const GroupElement& b) { return f(a, b); }

bool radical_member(const SymmetricGroupForm& f, const GroupElement& a) {
    if (a.rank() != f.rank()) throw DimensionError("radical_member: rank mismatch");
    for (std::size_t j = 0; j < f.rank(); ++j) {
        Scalar s;
        for (std::size_t i = 0; i < f.rank(); ++i)
            if (a[i] != 0) s += Scalar(a[i]) * f.entry(i, j);
        if (!s.is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

void row_axpy(std::vector<mpz_class>& dst, const mpz_class& a, const std::vector<mpz_class>& src) {
    for (std::size_t k = 0; k < dst.size(); ++k)
        if (sgn(src[k])) dst[k] += a * src[k];
}

}  // namespace

std::vector<mpz_class> LatticeBasis::flatten(const std::vector<Scalar>& v, bool& integral) const {
    if (v.size() != dim_) throw DimensionError("lattice vector of wrong length");
    std::vector<mpz_class> out(2 * dim_);
    integral = true;
    for (std::size_t k = 0; k < dim_; ++k) {
        mpq_class re = v[k].real() * denominator_;
        mpq_class im = v[k].imag() * denominator_;
        re.canonicalize();
        im.canonicalize();
        if (re.get_den() != 1 || im.get_den() != 1) integral = false;
        out[2 * k] = re.get_num();
        out[2 * k + 1] = im.get_num();
    }
    return out;
}

LatticeBasis::LatticeBasis(const std::vector<std::vector<Scalar>>& generators) {
    dim_ = generators.empty() ? 0 : generators.front().size();
    for (const auto& g : generators) {
        if (g.size() != dim_) throw DimensionError("lattice generators of different length");
        for (const auto& s : g) {
            mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), s.real().get_den_mpz_t());
            mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), s.imag().get_den_mpz_t());
        }
    }
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& g : generators) {
        bool integral = false;
        rows.push_back(flatten(g, integral));
    }
    // Hermite normal form by repeated Euclidean row reduction per column.
    std::size_t top = 0;
    for (std::size_t col = 0; col < 2 * dim_ && top < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r)
                if (sgn(rows[r][col]) && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])))
                    best = r;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (!sgn(rows[r][col])) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
                row_axpy(rows[r], -q, rows[top]);
                if (sgn(rows[r][col])) done = false;
            }
            if (done) break;
        }
        if (top < rows.size() && sgn(rows[top][col])) {
            if (sgn(rows[top][col]) < 0)
                for (auto& x : rows[top]) x = -x;
            for (std::size_t r = 0; r < top; ++r) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
                if (sgn(q)) row_axpy(rows[r], -q, rows[top]);
            }
            pivots_.push_back(col);
            ++top;
        }
    }
    rows.resize(top);
    basis_ = std::move(rows);
}

std::vector<std::vector<Scalar>> LatticeBasis::basis() const {
    std::vector<std::vector<Scalar>> out;
    for (const auto& row : basis_) {
        std::vector<Scalar> v(dim_);
        for (std::size_t k = 0; k < dim_; ++k)
            v[k] = Scalar(mpq_class(row[2 * k], denominator_), mpq_class(row[2 * k + 1], denominator_));
        out.push_back(std::move(v));
    }
    return out;
}

bool LatticeBasis::contains(const std::vector<Scalar>& v) const {
    try {
        coordinates(v);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

GroupElement LatticeBasis::coordinates(const std::vector<Scalar>& v) const {
    bool integral = false;
    std::vector<mpz_class> w = flatten(v, integral);
    if (!integral) throw PreconditionError("vector not in lattice (denominator)");
    std::vector<long> c(basis_.size());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const mpz_class& piv = basis_[r][pivots_[r]];
        if (!mpz_divisible_p(w[pivots_[r]].get_mpz_t(), piv.get_mpz_t()))
            throw PreconditionError("vector not in lattice");
        mpz_class q = w[pivots_[r]] / piv;
        if (!q.fits_slong_p()) throw PreconditionError("lattice coordinate overflow");
        c[r] = q.get_si();
        row_axpy(w, -q, basis_[r]);
    }
    for (const auto& x : w)
        if (sgn(x)) throw PreconditionError("vector not in lattice");
    return GroupElement(std::move(c));
}

std::vector<Scalar> LatticeBasis::embed(const GroupElement& c) const {
    if (c.rank() != basis_.size()) throw DimensionError("lattice coordinates of wrong rank");
    std::vector<mpz_class> w(2 * dim_);
    for (std::size_t r = 0; r < basis_.size(); ++r) row_axpy(w, mpz_class(c[r]), basis_[r]);
    std::vector<Scalar> v(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        v[k] = Scalar(mpq_class(w[2 * k], denominator_), mpq_class(w[2 * k + 1], denominator_));
    return v;
}

bool LatticeBasis::is_standard() const {
    if (basis_.size() != dim_) return false;
    for (std::size_t k = 0; k < dim_; ++k) {
        std::vector<Scalar> e(dim_);
        e[k] = 1;
        if (!contains(e)) return false;
    }
    return true;
}

}  // namespace superlie
