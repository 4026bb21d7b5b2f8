#include "superlie/matrixsuper.hpp"

#include "superlie/error.hpp"
#include "superlie/windowed.hpp"

#include <algorithm>
#include <random>

namespace superlie {

namespace {

nlohmann::json weight_json(const Weight& w) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : w) j.push_back(s.str());
    return j;
}

int mod4(long i) { return static_cast<int>(((i % 4) + 4) % 4); }

Weight add(const Weight& a, const Weight& b) { return a + b; }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::string> SuperIndexSet::names() const {
    std::vector<std::string> out;
    if (zero) out.push_back("0");
    for (std::size_t k = 1; k <= m; ++k) out.push_back(std::to_string(k));
    for (std::size_t k = 1; k <= m; ++k) out.push_back(std::to_string(k) + "b");
    if (zero_prime) out.push_back("0'");
    for (std::size_t k = 1; k <= n; ++k) out.push_back(std::to_string(k) + "'");
    for (std::size_t k = 1; k <= n; ++k) out.push_back(std::to_string(k) + "b'");
    return out;
}

std::vector<Parity> SuperIndexSet::parity() const {
    std::vector<Parity> p(even_count(), 0);
    p.resize(size(), 1);
    return p;
}

std::vector<std::size_t> SuperIndexSet::bar() const {
    std::vector<std::size_t> b(size());
    std::size_t o = 0;
    if (zero) b[o] = o, ++o;
    for (std::size_t k = 0; k < m; ++k) {
        b[o + k] = o + m + k;
        b[o + m + k] = o + k;
    }
    o = even_count();
    if (zero_prime) b[o] = o, ++o;
    for (std::size_t k = 0; k < n; ++k) {
        b[o + k] = o + n + k;
        b[o + n + k] = o + k;
    }
    return b;
}

std::size_t SuperIndexSet::index_of(const std::string& name) const {
    auto nm = names();
    auto it = std::find(nm.begin(), nm.end(), name);
    if (it == nm.end()) throw PreconditionError("unknown index '" + name + "'");
    return static_cast<std::size_t>(it - nm.begin());
}

std::string SuperIndexSet::type_label() const {
    return std::string(zero || zero_prime ? "BC(" : "C(") + std::to_string(m) + "," + std::to_string(n) + ")";
}

// ---------------------------------------------------------------------------

void torus_add(TorusElement& a, const GroupElement& tau, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = a.try_emplace(tau);
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
}

Scalar StarInvolution::sign(const GroupElement& tau) const {
    if (signs.empty()) return Scalar(1);
    if (signs.size() != tau.rank()) throw DimensionError("star sign count differs from torus rank");
    long odd = 0;
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] == -1) odd += tau[i];
    return odd % 2 == 0 ? Scalar(1) : Scalar(-1);
}

TorusElement StarInvolution::apply(const TorusElement& a) const {
    TorusElement out;
    for (const auto& [tau, c] : a) torus_add(out, tau, sign(tau) * c);
    return out;
}

Report verify_star(const StarInvolution& star, const CocycleTorus& t, const DegreeWindow& w) {
    for (int s : star.signs)
        if (s != 1 && s != -1) throw PreconditionError("star signs must be +1 or -1");
    if (!star.signs.empty() && star.signs.size() != t.rank())
        throw PreconditionError("star sign count differs from torus rank");
    Report r("star");
    const auto box = w.elements();
    nlohmann::json bad;
    for (const auto& a : box)
        if (!(star.sign(a) * star.sign(a)).is_one()) {
            bad = {{"tau", a.coords()}};
            break;
        }
    r.expect(bad.is_null(), "star.involution", "s_tau^2 = 1 on " + std::to_string(box.size()) + " degrees", bad);
    bad = nullptr;
    for (const auto& a : box) {
        for (const auto& b : box) {
            Scalar lhs = t.theta(a, b) * star.sign(a + b);
            Scalar rhs = star.sign(b) * star.sign(a) * t.theta(b, a);
            if (lhs != rhs) {
                bad = {{"a", a.coords()}, {"b", b.coords()}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
                break;
            }
        }
        if (!bad.is_null()) break;
    }
    r.expect(bad.is_null(), "star.anti_automorphism", "(t^a t^b)* = (t^b)*(t^a)* on the window", bad);
    return r;
}

// ---------------------------------------------------------------------------

TorusMatrix TorusMatrix::unit(std::size_t n, std::size_t a, std::size_t b, const GroupElement& tau, Scalar c) {
    TorusMatrix m(n);
    m.add(a, b, tau, c);
    return m;
}

TorusElement TorusMatrix::entry(std::size_t a, std::size_t b) const {
    auto it = entries_.find({a, b});
    return it == entries_.end() ? TorusElement{} : it->second;
}

void TorusMatrix::add(std::size_t a, std::size_t b, const GroupElement& tau, const Scalar& c) {
    if (a >= n_ || b >= n_) throw DimensionError("matrix index out of range");
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({a, b});
    torus_add(it->second, tau, c);
    if (it->second.empty()) entries_.erase(it);
}

TorusMatrix TorusMatrix::homogeneous_part(const std::vector<Parity>& parity, Parity p) const {
    TorusMatrix out(n_);
    for (const auto& [k, e] : entries_)
        if ((parity[k.first] ^ parity[k.second]) == p) out.entries_.emplace(k, e);
    return out;
}

std::optional<Parity> TorusMatrix::parity_of(const std::vector<Parity>& parity) const {
    std::optional<Parity> p;
    for (const auto& [k, e] : entries_) {
        Parity q = parity[k.first] ^ parity[k.second];
        if (p && *p != q) return std::nullopt;
        p = q;
    }
    return p;
}

TorusMatrix& TorusMatrix::operator+=(const TorusMatrix& o) {
    if (o.n_ != n_) throw DimensionError("matrix sizes differ");
    for (const auto& [k, e] : o.entries_)
        for (const auto& [tau, c] : e) add(k.first, k.second, tau, c);
    return *this;
}

TorusMatrix& TorusMatrix::operator-=(const TorusMatrix& o) {
    if (o.n_ != n_) throw DimensionError("matrix sizes differ");
    for (const auto& [k, e] : o.entries_)
        for (const auto& [tau, c] : e) add(k.first, k.second, tau, -c);
    return *this;
}

TorusMatrix& TorusMatrix::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [k, e] : entries_)
        for (auto& [tau, v] : e) v *= c;
    return *this;
}

nlohmann::json TorusMatrix::to_json(const std::vector<std::string>& names) const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, e] : entries_) {
        nlohmann::json terms = nlohmann::json::object();
        for (const auto& [tau, c] : e) terms[tau.str()] = c.str();
        out.push_back({{"row", names.at(k.first)}, {"col", names.at(k.second)}, {"entry", terms}});
    }
    return out;
}

TorusMatrix multiply(const TorusMatrix& a, const TorusMatrix& b, const CocycleTorus& t) {
    if (a.size() != b.size()) throw DimensionError("matrix sizes differ");
    TorusMatrix out(a.size());
    const auto& be = b.entries();
    for (const auto& [ka, x] : a.entries()) {
        for (auto it = be.lower_bound({ka.second, 0}); it != be.end() && it->first.first == ka.second; ++it)
            for (const auto& [l, cx] : x)
                for (const auto& [m, cy] : it->second) out.add(ka.first, it->first.second, l + m, t.theta(l, m) * cx * cy);
    }
    return out;
}

TorusMatrix super_commutator(const TorusMatrix& a, const TorusMatrix& b, const std::vector<Parity>& parity,
                             const CocycleTorus& t) {
    TorusMatrix out(a.size());
    for (Parity p : {Parity{0}, Parity{1}}) {
        TorusMatrix ap = a.homogeneous_part(parity, p);
        if (ap.is_zero()) continue;
        for (Parity q : {Parity{0}, Parity{1}}) {
            TorusMatrix bq = b.homogeneous_part(parity, q);
            if (bq.is_zero()) continue;
            out += multiply(ap, bq, t);
            out -= Scalar(super_sign(p, q)) * multiply(bq, ap, t);
        }
    }
    return out;
}

TorusElement trace(const TorusMatrix& x) {
    TorusElement out;
    for (std::size_t a = 0; a < x.size(); ++a)
        for (const auto& [tau, c] : x.entry(a, a)) torus_add(out, tau, c);
    return out;
}

TorusElement supertrace(const TorusMatrix& x, const std::vector<Parity>& parity) {
    if (parity.size() != x.size()) throw DimensionError("parity list differs from matrix size");
    TorusElement out;
    for (std::size_t a = 0; a < x.size(); ++a)
        for (const auto& [tau, c] : x.entry(a, a)) torus_add(out, tau, parity[a] ? -c : c);
    return out;
}

Scalar supertrace_form(const TorusMatrix& x, const TorusMatrix& y, const std::vector<Parity>& parity,
                       const CocycleTorus& t) {
    TorusElement s = supertrace(multiply(x, y, t), parity);
    auto it = s.find(GroupElement(t.rank()));
    return it == s.end() ? Scalar() : it->second;
}

TorusMatrix diamond(const TorusMatrix& x, const std::vector<std::size_t>& bar, const StarInvolution& star) {
    TorusMatrix out(x.size());
    for (const auto& [k, e] : x.entries())
        for (const auto& [tau, c] : e) out.add(bar.at(k.second), bar.at(k.first), tau, star.sign(tau) * c);
    return out;
}

TorusMatrix sharp(const TorusMatrix& x, const SuperIndexSet& idx, const StarInvolution& star) {
    const auto bar = idx.bar();
    const auto par = idx.parity();
    TorusMatrix out(x.size());
    for (const auto& [k, e] : x.entries()) {
        const bool plus = par[k.first] == 1 && par[k.second] == 0;
        for (const auto& [tau, c] : e)
            out.add(bar[k.second], bar[k.first], tau, (plus ? Scalar(1) : Scalar(-1)) * star.sign(tau) * c);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

LieSuperalgebra make_base(const MatrixConfig& cfg) {
    const SuperIndexSet& idx = cfg.index;
    if (idx.m == 0 && idx.n == 0 && !idx.zero && !idx.zero_prime) throw PreconditionError("empty index set");
    if (cfg.kind == MatrixKind::sl) {
        if (idx.even_count() == idx.odd_count())
            throw PreconditionError("|I| = |J|: the supertrace form on sl is degenerate (use pl)");
        return special_linear(idx.names(), idx.parity(), Field::gaussian);
    }
    return general_linear(idx.names(), idx.parity(), Field::gaussian);
}

CocycleTorus make_torus(const MatrixConfig& cfg) {
    if (cfg.q.empty()) return CocycleTorus::trivial(cfg.torus_rank);
    if (cfg.q.size() != cfg.torus_rank) throw PreconditionError("cocycle matrix size differs from torus rank");
    return CocycleTorus::bimultiplicative(cfg.q);
}

SparseVector flatten(const SparseMatrix& m) {
    SparseVector v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, x] : m.row(r)) v.set(r * m.cols() + c, x);
    return v;
}

SparseMatrix power(const SparseMatrix& m, int p) {
    SparseMatrix out = SparseMatrix::identity(m.rows());
    for (int k = 0; k < p; ++k) out = out * m;
    return out;
}

}  // namespace

MatrixSuper::MatrixSuper(MatrixConfig cfg) : cfg_(std::move(cfg)), loop_(make_base(cfg_), make_torus(cfg_)) {
    if (cfg_.sharp_power < 1) throw PreconditionError("sharp power must be positive");
    for (int s : cfg_.star.signs)
        if (s != 1 && s != -1) throw PreconditionError("star signs must be +1 or -1");
    if (!cfg_.star.signs.empty() && cfg_.star.signs.size() != cfg_.torus_rank)
        throw PreconditionError("star sign count differs from torus rank");

    const SuperIndexSet& idx = cfg_.index;
    const std::size_t N = idx.size(), dim = base().dim();
    mats_ = cfg_.kind == MatrixKind::sl ? special_linear_basis(idx.parity()) : general_linear_basis(N);

    std::vector<SparseVector> flat;
    for (const auto& m : mats_) flat.push_back(flatten(m));
    CoordinateSolver solver(flat);
    SparseMatrix S1(dim, dim);
    const GroupElement zero(cfg_.torus_rank);
    for (std::size_t b = 0; b < dim; ++b) {
        TorusMatrix tm(N);
        for (std::size_t r = 0; r < N; ++r)
            for (const auto& [c, x] : mats_[b].row(r)) tm.add(r, c, zero, x);
        TorusMatrix img = superlie::sharp(tm, idx, StarInvolution{});
        SparseMatrix dense(N, N);
        for (const auto& [k, e] : img.entries()) dense.set(k.first, k.second, e.begin()->second);
        auto coords = solver.coordinates(flatten(dense));
        if (!coords) throw Error("# does not preserve the matrix superalgebra");
        for (const auto& [i, c] : *coords) S1.set(i, b, c);
    }
    S_ = power(S1, cfg_.sharp_power);

    const auto& cart = base().cartan();
    const std::size_t hs = cart.size(), n = cfg_.torus_rank, H = hs + 2 * n;
    std::vector<std::size_t> pos(dim, dim);
    for (std::size_t k = 0; k < hs; ++k) pos[cart[k]] = k;
    sigma_ = SparseMatrix(H, H);
    for (std::size_t c = 0; c < hs; ++c)
        for (const auto& [i, x] : S_.column(cart[c])) {
            if (pos[i] == dim) throw Error("# does not map the Cartan to itself");
            sigma_.set(pos[i], c, x);
        }
    for (std::size_t i = hs; i < H; ++i) sigma_.set(i, i, Scalar(1));

    SparseMatrix fix(hs, hs);
    for (std::size_t r = 0; r < hs; ++r)
        for (std::size_t c = 0; c < hs; ++c) {
            Scalar v = sigma_.get(r, c) - Scalar(r == c ? 1 : 0);
            if (!v.is_zero()) fix.set(r, c, v);
        }
    fixed_ = nullspace(fix);
    for (std::size_t i = hs; i < H; ++i) fixed_.push_back(SparseVector::unit(i));

    std::map<std::pair<Weight, Parity>, std::vector<std::size_t>> groups;
    for (std::size_t b = 0; b < dim; ++b) groups[{pi(hat(base().weight(b))), base().parity(b)}].push_back(b);
    for (const auto& [key, members] : groups) {
        Class cl;
        cl.pi = key.first;
        cl.parity = key.second;
        const std::size_t s = members.size();
        std::vector<std::size_t> local(dim, s);
        for (std::size_t i = 0; i < s; ++i) local[members[i]] = i;
        SparseMatrix SC(s, s);
        for (std::size_t j = 0; j < s; ++j)
            for (const auto& [i, x] : S_.column(members[j])) {
                if (local[i] == s) throw Error("# does not preserve a pi-weight space");
                SC.set(local[i], j, x);
            }
        for (int sign : {0, 1})
            for (int k = 0; k < 4; ++k) {
                SparseMatrix A = (sign ? Scalar(1) : Scalar(-1)) * SC;
                for (std::size_t i = 0; i < s; ++i) A.set(i, i, A.get(i, i) - Scalar::zeta_power(k));
                for (const auto& z : nullspace(A)) {
                    SparseVector v;
                    for (const auto& [i, x] : z) v.set(members[i], x);
                    cl.basis[sign][k].push_back(std::move(v));
                }
            }
        classes_.push_back(std::move(cl));
    }
}

Scalar MatrixSuper::degree_sign(const GroupElement& tau) const {
    return cfg_.star.sign(tau).pow(cfg_.sharp_power);
}

LoopElement MatrixSuper::sharp(const LoopElement& x) const {
    LoopElement out(x.rank());
    for (const auto& [tau, v] : x.loop_part()) out.add_loop(tau, degree_sign(tau), S_.apply(v));
    for (std::size_t i = 0; i < x.rank(); ++i) {
        out.add_v(i, x.v()[i]);
        out.add_d(i, x.d()[i]);
    }
    return out;
}

int MatrixSuper::order() const {
    const bool negative = cfg_.sharp_power % 2 == 1 &&
                          std::find(cfg_.star.signs.begin(), cfg_.star.signs.end(), -1) != cfg_.star.signs.end();
    const SparseMatrix I = SparseMatrix::identity(S_.rows());
    SparseMatrix P = I;
    for (int k = 1; k <= 8; ++k) {
        P = P * S_;
        if (P == I && (!negative || k % 2 == 0)) return k;
    }
    return 0;
}

Weight MatrixSuper::pi(const Weight& alpha) const {
    const std::size_t H = sigma_.rows();
    if (alpha.size() != H) throw DimensionError("functional length differs from the Cartan of l");
    Weight sum = alpha, cur = alpha;
    for (int j = 1; j < 4; ++j) {
        Weight next(H);
        for (std::size_t k = 0; k < H; ++k)
            for (const auto& [c, s] : sigma_.row(k)) next[c].add_mul(s, cur[k]);
        cur = std::move(next);
        sum = sum + cur;
    }
    return Scalar(1, 4) * sum;
}

Weight MatrixSuper::restrict_to_fixed(const Weight& w) const {
    Weight out;
    for (const auto& f : fixed_) {
        Scalar s;
        for (const auto& [c, x] : f) s.add_mul(x, w.at(c));
        out.push_back(std::move(s));
    }
    return out;
}

Weight MatrixSuper::epsilon(std::size_t a) const {
    Weight w;
    for (std::size_t h : base().cartan()) w.push_back(mats_[h].get(a, a));
    return w;
}

Weight MatrixSuper::hat(const Weight& base_weight) const {
    Weight w = base_weight;
    w.resize(w.size() + 2 * cfg_.torus_rank);
    return w;
}

std::vector<EigenBlock> MatrixSuper::eigenblocks(const DegreeWindow& w) const {
    if (w.rank != cfg_.torus_rank) throw DimensionError("window rank differs from torus rank");
    const std::size_t n = cfg_.torus_rank, hs = base().cartan().size();
    std::vector<EigenBlock> out;
    for (const auto& tau : w.elements()) {
        const int sidx = degree_sign(tau).is_one() ? 1 : 0;
        for (const auto& cl : classes_)
            for (int k = 0; k < 4; ++k) {
                const auto& vecs = cl.basis[sidx][k];
                EigenBlock b;
                b.k = k;
                b.parity = cl.parity;
                b.degree = tau;
                b.pi = cl.pi;
                for (std::size_t i = 0; i < n; ++i) b.pi[hs + n + i] += Scalar(tau[i]);
                for (const auto& v : vecs) b.basis.push_back(LoopElement::loop(n, v, tau));
                if (tau.is_zero() && k == 0 && cl.parity == 0 && is_zero(cl.pi)) {
                    for (std::size_t i = 0; i < n; ++i) b.basis.push_back(LoopElement::v_basis(n, i));
                    for (std::size_t i = 0; i < n; ++i) b.basis.push_back(LoopElement::d_basis(n, i));
                }
                if (!b.basis.empty()) out.push_back(std::move(b));
            }
    }
    return out;
}

// ---------------------------------------------------------------------------

PiComparison compare_pi_families(const MatrixSuper& M) {
    PiComparison out;
    const auto& d = M.loop().base_roots();
    for (const auto& a : d.roots) out.projected.insert(M.pi(M.hat(a)));

    const SuperIndexSet& idx = M.index();
    const auto bar = idx.bar();
    const std::size_t N = idx.size(), ne = idx.even_count();
    auto E = [&](std::size_t a) { return M.hat(M.epsilon(a)); };
    const Scalar half(1, 2);
    const Weight zero(E(0).size());

    auto put = [&](std::set<Weight>& s, const Weight& w, bool count) {
        if (is_zero(w)) {
            if (count) ++out.degenerate;
        } else {
            s.insert(w);
        }
    };
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            const bool ia = a < ne, ib = b < ne;
            if (ia == ib && a == b) continue;   // i ≠ r and j ≠ s within a block
            // ½((ε_a − ε_b) + (ε_{bar b} − ε_{bar a})) covers all four displayed families.
            put(out.families, half * ((E(a) + -E(b)) + (E(bar[b]) + -E(bar[a]))), true);
            put(out.second, half * ((E(a) + -E(bar[a])) + -(E(b) + -E(bar[b]))), false);
        }
    out.families.insert(zero);
    out.second.insert(zero);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class MatrixSampler {
public:
    MatrixSampler(const SuperIndexSet& idx, const DegreeWindow& w, std::uint64_t seed)
        : n_(idx.size()), ne_(idx.even_count()), parity_(idx.parity()), degrees_(w.elements()), rng_(seed) {}

    Scalar coeff() {
        static const Scalar c[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar::i(), -Scalar::i(),
                                   Scalar(1) + Scalar::i()};
        return c[rng_() % 6];
    }
    const GroupElement& degree() { return degrees_[rng_() % degrees_.size()]; }
    std::size_t in_block(int block) {   // 0: I, 1: J, 2: any
        if (block == 0) return rng_() % ne_;
        if (block == 1) return ne_ + rng_() % (n_ - ne_);
        return rng_() % n_;
    }
    TorusMatrix block(int rows, int cols) {
        TorusMatrix m(n_);
        std::size_t terms = 1 + rng_() % 4;
        for (std::size_t t = 0; t < terms; ++t) m.add(in_block(rows), in_block(cols), degree(), coeff());
        return m;
    }
    TorusMatrix any() { return block(2, 2); }
    TorusMatrix homogeneous() {
        Parity p = rng_() % 2;
        TorusMatrix m(n_);
        std::size_t terms = 1 + rng_() % 4;
        for (std::size_t t = 0; t < terms; ++t) {
            std::size_t a = rng_() % n_, b = rng_() % n_;
            if ((parity_[a] ^ parity_[b]) != p) continue;
            m.add(a, b, degree(), coeff());
        }
        if (m.is_zero()) m.add(0, 0, degree(), Scalar(1));
        return m;
    }
    int block_choice() { return static_cast<int>(rng_() % 2); }

private:
    std::size_t n_, ne_;
    std::vector<Parity> parity_;
    std::vector<GroupElement> degrees_;
    std::mt19937_64 rng_;
};

TorusMatrix sharp_power(const TorusMatrix& x, const MatrixSuper& M, int times) {
    TorusMatrix out = x;
    for (int k = 0; k < times * M.config().sharp_power; ++k) out = sharp(out, M.index(), M.config().star);
    return out;
}

TorusMatrix as_matrix(const MatrixSuper& M, const LoopElement& x) {
    TorusMatrix out(M.index().size());
    for (const auto& [tau, v] : x.loop_part())
        for (const auto& [b, c] : v)
            for (std::size_t r = 0; r < M.base_matrices()[b].rows(); ++r)
                for (const auto& [col, e] : M.base_matrices()[b].row(r)) out.add(r, col, tau, c * e);
    return out;
}

/// (x, ^{[j]}𝔩^{π'}) ≠ 0 iff i + j ∈ 4ℤ and π + π' = 0, for every basis
/// vector x of every block; also accumulates the eigenspace pairing pattern.
void form1_check(Report& r, const std::string& name, const std::string& pattern_name, const MatrixSuper& M,
                 const std::vector<EigenBlock>& blocks) {
    const AffinizedAlgebra& L = M.loop();
    bool seen[4][4] = {};
    nlohmann::json bad;
    std::size_t vectors = 0;
    for (const auto& b1 : blocks)
        for (const auto& x : b1.basis) {
            ++vectors;
            for (const auto& b2 : blocks) {
                bool nz = false;
                for (const auto& y : b2.basis)
                    if (!L.form(x, y).is_zero()) {
                        nz = true;
                        break;
                    }
                if (nz) seen[b1.k][b2.k] = true;
                bool want = (b1.k + b2.k) % 4 == 0 && is_zero(add(b1.pi, b2.pi));
                if (nz != want && bad.is_null())
                    bad = {{"x", L.to_json(x)}, {"i", b1.k}, {"j", b2.k}, {"pi", weight_json(b1.pi)},
                           {"pi_other", weight_json(b2.pi)}, {"pairs_nonzero", nz}};
            }
        }
    r.expect(bad.is_null(), name, std::to_string(vectors) + " window vectors against " + std::to_string(blocks.size()) +
                                      " blocks", bad);
    nlohmann::json table = nlohmann::json::array();
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 4; ++j) {
            row.push_back(seen[i][j]);
            if (seen[i][j] != ((i + j) % 4 == 0)) ok = false;
        }
        table.push_back(row);
    }
    r.expect(ok, pattern_name, "(l[i], l[j]) != 0 iff i + j in 4Z", table);
}

}  // namespace

Report verify_matrix_structure(const MatrixSuper& M, const DegreeWindow& w, std::size_t samples, std::uint64_t seed) {
    Report r("matrix");
    const SuperIndexSet& idx = M.index();
    const auto par = idx.parity();
    const auto bar = idx.bar();
    const std::size_t N = idx.size();
    const CocycleTorus& T = M.loop().torus();
    const StarInvolution& star = M.config().star;
    r.params()["I"] = idx.m;
    r.params()["J"] = idx.n;
    r.params()["zero"] = idx.zero;
    r.params()["zero_prime"] = idx.zero_prime;
    r.params()["kind"] = M.config().kind == MatrixKind::sl ? "sl" : "pl";
    r.params()["type"] = M.type_label();
    r.params()["radius"] = w.radius;
    r.params()["samples"] = samples;
    r.params()["seed"] = seed;
    r.params()["sharp_power"] = M.config().sharp_power;

    bool bar_ok = true;
    for (std::size_t a = 0; a < N; ++a)
        if (bar[bar[a]] != a || par[bar[a]] != par[a]) bar_ok = false;
    if (idx.zero && bar[0] != 0) bar_ok = false;
    if (idx.zero_prime && bar[idx.even_count()] != idx.even_count()) bar_ok = false;
    r.expect(bar_ok, "index.bar", "bar is a parity-preserving involution fixing 0 and 0'");
    if (M.config().kind == MatrixKind::sl)
        r.expect(idx.even_count() != idx.odd_count(), "index.sizes", "|I| != |J| for sl");

    r.merge(verify_star(star, T, w));

    // ⋄ and # on torus matrices.
    MatrixSampler gen(idx, w, seed);
    nlohmann::json bad[4];
    for (std::size_t s = 0; s < samples; ++s) {
        TorusMatrix A = gen.homogeneous(), B = gen.homogeneous();
        TorusMatrix AB = super_commutator(A, B, par, T);
        if (bad[0].is_null() && !supertrace(AB, par).empty())
            bad[0] = {{"sample", s}, {"A", A.to_json(idx.names())}, {"B", B.to_json(idx.names())}};
        if (bad[1].is_null() &&
            sharp_power(AB, M, 1) != super_commutator(sharp_power(A, M, 1), sharp_power(B, M, 1), par, T))
            bad[1] = {{"sample", s}, {"A", A.to_json(idx.names())}, {"B", B.to_json(idx.names())}};
        TorusMatrix X = gen.any();
        if (bad[2].is_null() && trace(diamond(X, bar, star)) != star.apply(trace(X)))
            bad[2] = {{"sample", s}, {"X", X.to_json(idx.names())}};
        int p = gen.block_choice(), q = gen.block_choice(), u = gen.block_choice();
        TorusMatrix Y = gen.block(p, q), Z = gen.block(q, u);
        if (bad[3].is_null() &&
            diamond(multiply(Y, Z, T), bar, star) != multiply(diamond(Z, bar, star), diamond(Y, bar, star), T))
            bad[3] = {{"sample", s}, {"X", Y.to_json(idx.names())}, {"Y", Z.to_json(idx.names())}};
    }
    const std::string detail = std::to_string(samples) + " samples, seed " + std::to_string(seed);
    if (samples == 0) {
        for (const char* nm : {"matrix.supertrace_commutator", "matrix.sharp_automorphism", "matrix.dia1", "matrix.dia2"})
            r.skip(nm, "sampling disabled");
    } else {
        r.expect(bad[0].is_null(), "matrix.supertrace_commutator", "str([A,B]) = 0; " + detail, bad[0]);
        r.expect(bad[1].is_null(), "matrix.sharp_automorphism", "[A,B]# = [A#,B#]; " + detail, bad[1]);
        r.expect(bad[2].is_null(), "matrix.dia1", "tr(X<>) = tr(X)*; " + detail, bad[2]);
        r.expect(bad[3].is_null(), "matrix.dia2", "(XY)<> = Y<> X<>; " + detail, bad[3]);
    }

    std::vector<TorusMatrix> units;
    for (const auto& tau : w.elements())
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) units.push_back(TorusMatrix::unit(N, a, b, tau));
    nlohmann::json dd, order, parity_bad;
    bool square_is_identity = true;
    for (const auto& E : units) {
        if (dd.is_null() && diamond(diamond(E, bar, star), bar, star) != E) dd = E.to_json(idx.names());
        if (order.is_null() && sharp_power(E, M, 4) != E) order = E.to_json(idx.names());
        if (sharp_power(E, M, 2) != E) square_is_identity = false;
        if (parity_bad.is_null() && sharp_power(E, M, 1).parity_of(par) != E.parity_of(par))
            parity_bad = E.to_json(idx.names());
    }
    r.expect(dd.is_null(), "matrix.diamond_involution", std::to_string(units.size()) + " units", dd);
    if (order.is_null() && square_is_identity) order = "the automorphism squares to the identity";
    r.expect(order.is_null(), "matrix.sharp_order4",
             "(#)^4 = id and (#)^2 != id on " + std::to_string(units.size()) + " units", order);
    r.expect(parity_bad.is_null(), "matrix.sharp_parity", "# preserves parity", parity_bad);

    nlohmann::json fbad;
    std::size_t pairs = 0;
    std::vector<TorusMatrix> images;
    for (const auto& E : units) images.push_back(sharp_power(E, M, 1));
    for (std::size_t i = 0; i < units.size() && fbad.is_null(); ++i)
        for (std::size_t j = 0; j < units.size(); ++j) {
            ++pairs;
            if (supertrace_form(images[i], images[j], par, T) != supertrace_form(units[i], units[j], par, T)) {
                fbad = {{"M", units[i].to_json(idx.names())}, {"N", units[j].to_json(idx.names())}};
                break;
            }
        }
    r.expect(fbad.is_null(), "matrix.sharp_form", "(M#, N#) = (M, N) on " + std::to_string(pairs) + " unit pairs", fbad);

    // # on 𝔩 = 𝔤 ⊗ 𝒜 ⊕ 𝒱 ⊕ 𝒱†.
    const AffinizedAlgebra& L = M.loop();
    const auto basis = L.window_basis(w);
    std::vector<LoopElement> sh;
    for (const auto& x : basis) sh.push_back(M.sharp(x));
    nlohmann::json realize, aut, form_bad, der;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (realize.is_null() && as_matrix(M, sh[i]) != sharp_power(as_matrix(M, basis[i]), M, 1))
            realize = L.to_json(basis[i]);
    for (std::size_t i = 0; i < basis.size() && aut.is_null(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (M.sharp(L.bracket(basis[i], basis[j])) != L.bracket(sh[i], sh[j])) {
                aut = {{"x", L.to_json(basis[i])}, {"y", L.to_json(basis[j])}};
                break;
            }
            if (form_bad.is_null() && L.form(sh[i], sh[j]) != L.form(basis[i], basis[j]))
                form_bad = {{"x", L.to_json(basis[i])}, {"y", L.to_json(basis[j])}};
        }
    for (std::size_t t = 0; t < L.rank(); ++t) {
        LoopElement dt = LoopElement::d_basis(L.rank(), t);
        for (std::size_t i = 0; i < basis.size() && der.is_null(); ++i)
            if (L.bracket(dt, sh[i]) != M.sharp(L.bracket(dt, basis[i])))
                der = {{"d", t}, {"x", L.to_json(basis[i])}};
    }
    const std::string wdetail = std::to_string(basis.size()) + " window basis elements";
    r.expect(realize.is_null(), "loop.sharp_realization", "# on l agrees with the block formula; " + wdetail, realize);
    r.expect(aut.is_null(), "loop.sharp_automorphism", "[x,y]# = [x#,y#] on all pairs; " + wdetail, aut);
    r.expect(form_bad.is_null(), "loop.sharp_form", "(x#,y#) = (x,y) on all pairs; " + wdetail, form_bad);
    r.expect(der.is_null(), "loop.sharp_derivation", "d(x#) = d(x)# for the dual basis; " + wdetail, der);

    // Eigenspaces.
    const auto blocks = M.eigenblocks(w);
    nlohmann::json eig;
    std::size_t total = 0;
    Subspace span;
    const std::size_t dim = L.base().dim(), n = L.rank();
    const auto degrees = w.elements();
    auto flat = [&](const LoopElement& x) {
        SparseVector v;
        for (const auto& [tau, y] : x.loop_part()) {
            std::size_t pos = static_cast<std::size_t>(std::find(degrees.begin(), degrees.end(), tau) - degrees.begin());
            for (const auto& [b, c] : y) v.set(pos * dim + b, c);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!x.v()[i].is_zero()) v.set(degrees.size() * dim + i, x.v()[i]);
            if (!x.d()[i].is_zero()) v.set(degrees.size() * dim + n + i, x.d()[i]);
        }
        return v;
    };
    for (const auto& b : blocks)
        for (const auto& x : b.basis) {
            ++total;
            span.insert(flat(x));
            if (eig.is_null() && (M.sharp(x) != Scalar::zeta_power(b.k) * x || L.parity_of(x) != b.parity))
                eig = {{"x", L.to_json(x)}, {"k", b.k}};
        }
    r.expect(eig.is_null(), "eigen.eigenvectors", "x# = zeta^k x with homogeneous parity", eig);
    r.expect(total == basis.size() && span.dim() == total, "eigen.direct_sum",
             std::to_string(total) + " independent eigenvectors, window dimension " + std::to_string(basis.size()));
    bool center = true;
    for (std::size_t i = 0; i < n; ++i)
        if (M.sharp(LoopElement::v_basis(n, i)) != LoopElement::v_basis(n, i) ||
            M.sharp(LoopElement::d_basis(n, i)) != LoopElement::d_basis(n, i))
            center = false;
    r.expect(center, "eigen.center_fixed", "V + V^dagger lies in l[0]");
    form1_check(r, "eigen.form1", "eigen.pairing", M, blocks);

    // σ and π.
    const SparseMatrix& sg = M.sigma();
    r.expect(sg * sg * sg * sg == SparseMatrix::identity(sg.rows()), "roots.sigma_order", "sigma^4 = id on h-hat");
    const std::size_t hs = L.base().cartan().size();
    std::size_t zero_dim = 0;
    bool zero_ok = true;
    for (const auto& b : blocks)
        if (b.k == 0 && is_zero(b.pi)) {
            zero_dim += b.basis.size();
            for (const auto& x : b.basis)
                if (!L.in_cartan(x) || M.sharp(x) != x) zero_ok = false;
        }
    r.expect(zero_ok && zero_dim == M.fixed_cartan().size(), "roots.zero_class",
             "l[0] at pi = 0 is h^sigma: dim " + std::to_string(zero_dim) + " vs " +
                 std::to_string(M.fixed_cartan().size()));
    (void)hs;

    PiComparison pc = compare_pi_families(M);
    auto set_json = [](const std::set<Weight>& s) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& w : s) j.push_back(weight_json(w));
        return j;
    };
    nlohmann::json pw;
    if (pc.projected != pc.families) pw = {{"projected", set_json(pc.projected)}, {"families", set_json(pc.families)}};
    r.expect(pw.is_null(), "roots.pi_families",
             std::to_string(pc.projected.size()) + " projected base roots; " + std::to_string(pc.degenerate) +
                 " degenerate family members removed",
             pw);
    r.expect(pc.families == pc.second, "roots.pi_displays_agree", "both displayed forms give the same set");
    return r;
}

// ---------------------------------------------------------------------------

TwistedElement TwistedElement::part(LoopElement x, long i) {
    TwistedElement e(x.rank());
    if (!x.is_zero()) e.parts_.emplace(i, std::move(x));
    return e;
}

TwistedElement TwistedElement::central(std::size_t rank) {
    TwistedElement e(rank);
    e.c_ = Scalar(1);
    return e;
}

TwistedElement TwistedElement::derivation(std::size_t rank) {
    TwistedElement e(rank);
    e.d_ = Scalar(1);
    return e;
}

void TwistedElement::add_part(long i, const Scalar& k, const LoopElement& x) {
    if (k.is_zero() || x.is_zero()) return;
    auto [it, inserted] = parts_.try_emplace(i, LoopElement(rank_));
    it->second += k * x;
    if (it->second.is_zero()) parts_.erase(it);
}

TwistedElement& TwistedElement::operator+=(const TwistedElement& o) {
    for (const auto& [i, x] : o.parts_) add_part(i, Scalar(1), x);
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

TwistedElement& TwistedElement::operator-=(const TwistedElement& o) {
    for (const auto& [i, x] : o.parts_) add_part(i, Scalar(-1), x);
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

TwistedElement& TwistedElement::operator*=(const Scalar& k) {
    if (k.is_zero()) {
        *this = TwistedElement(rank_);
        return *this;
    }
    for (auto& [i, x] : parts_) x *= k;
    c_ *= k;
    d_ *= k;
    return *this;
}

TwistedAlgebra::TwistedAlgebra(MatrixSuper M) : M_(std::move(M)) {
    int o = M_.order();
    if (o != 4)
        throw PreconditionError("the automorphism has order " + (o ? std::to_string(o) : std::string("> 8")) +
                                ", the twisted construction needs order 4");
    auto cart = cartan();
    SparseMatrix g(cart.size(), cart.size());
    for (std::size_t i = 0; i < cart.size(); ++i)
        for (std::size_t j = 0; j < cart.size(); ++j) {
            Scalar v = form(cart[i], cart[j]);
            if (!v.is_zero()) g.set(i, j, v);
        }
    form_ = CartanForm(std::move(g));
}

TwistedElement TwistedAlgebra::bracket(const TwistedElement& x, const TwistedElement& y) const {
    const AffinizedAlgebra& L = M_.loop();
    TwistedElement out(rank());
    for (const auto& [i, a] : x.parts())
        for (const auto& [j, b] : y.parts()) {
            out.add_part(i + j, Scalar(1), L.bracket(a, b));
            if (i + j == 0 && i != 0) out.add_c(Scalar(i) * L.form(a, b));
        }
    if (!x.d().is_zero())
        for (const auto& [j, b] : y.parts()) out.add_part(j, x.d() * Scalar(j), b);
    if (!y.d().is_zero())
        for (const auto& [i, a] : x.parts()) out.add_part(i, -(y.d() * Scalar(i)), a);
    return out;
}

Scalar TwistedAlgebra::form(const TwistedElement& x, const TwistedElement& y) const {
    Scalar out;
    for (const auto& [i, a] : x.parts()) {
        auto it = y.parts().find(-i);
        if (it != y.parts().end()) out += M_.loop().form(a, it->second);
    }
    out.add_mul(x.c(), y.d());
    out.add_mul(x.d(), y.c());
    return out;
}

std::optional<Parity> TwistedAlgebra::parity_of(const TwistedElement& x) const {
    std::optional<Parity> p;
    for (const auto& [i, a] : x.parts()) {
        auto q = M_.loop().parity_of(a);
        if (!q || (p && *p != *q)) return std::nullopt;
        p = q;
    }
    if (!x.c().is_zero() || !x.d().is_zero()) {
        if (p && *p != 0) return std::nullopt;
        p = 0;
    }
    return p;
}

bool TwistedAlgebra::is_graded(const TwistedElement& x) const {
    for (const auto& [i, a] : x.parts())
        if (M_.sharp(a) != Scalar::zeta_power(mod4(i)) * a) return false;
    return true;
}

std::vector<TwistedElement> TwistedAlgebra::cartan() const {
    const auto hat = M_.loop().cartan();
    std::vector<TwistedElement> out;
    for (const auto& f : M_.fixed_cartan()) {
        LoopElement e(rank());
        for (const auto& [c, x] : f) e += x * hat[c];
        out.push_back(TwistedElement::part(std::move(e), 0));
    }
    out.push_back(TwistedElement::central(rank()));
    out.push_back(TwistedElement::derivation(rank()));
    return out;
}

bool TwistedAlgebra::in_cartan(const TwistedElement& x) const {
    for (const auto& [i, a] : x.parts())
        if (i != 0 || !M_.loop().in_cartan(a) || M_.sharp(a) != a) return false;
    return true;
}

Weight TwistedAlgebra::weight(const Weight& pi, long i) const {
    Weight w = M_.restrict_to_fixed(pi);
    w.push_back(Scalar());
    w.push_back(Scalar(i));
    return w;
}

TwistedElement TwistedAlgebra::t(const Weight& rho) const {
    auto c = form_.represent(rho);
    auto cart = cartan();
    TwistedElement out(rank());
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) out += c[k] * cart[k];
    return out;
}

nlohmann::json TwistedAlgebra::to_json(const TwistedElement& x) const {
    nlohmann::json j = nlohmann::json::object();
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& [i, a] : x.parts()) parts.push_back({{"i", i}, {"x", M_.loop().to_json(a)}});
    if (!parts.empty()) j["parts"] = parts;
    if (!x.c().is_zero()) j["c"] = x.c().str();
    if (!x.d().is_zero()) j["d"] = x.d().str();
    return j;
}

TwistedRoots twisted_roots(const TwistedAlgebra& T, const TwistedWindow& w) {
    TwistedRoots out;
    const auto blocks = T.matrix().eigenblocks(w.torus);
    const auto cart = T.cartan();
    std::map<Weight, TwistedRoot> groups;
    nlohmann::json bad;
    auto record = [&](TwistedElement e, const Weight& wt) {
        for (std::size_t k = 0; k < cart.size() && bad.is_null(); ++k)
            if (T.bracket(cart[k], e) != wt[k] * e)
                bad = {{"element", T.to_json(e)}, {"cartan", k}, {"expected", wt[k].str()}};
        auto& g = groups[wt];
        g.weight = wt;
        g.basis.push_back(e);
        out.basis.push_back(std::move(e));
    };
    for (long i = -w.radius; i <= w.radius; ++i)
        for (const auto& b : blocks) {
            if (b.k != mod4(i)) continue;
            Weight wt = T.weight(b.pi, i);
            for (const auto& x : b.basis) record(TwistedElement::part(x, i), wt);
        }
    Weight zero(cart.size());
    record(TwistedElement::central(T.rank()), zero);
    record(TwistedElement::derivation(T.rank()), zero);
    out.report.expect(bad.is_null(), "twisted.weights",
                      std::to_string(out.basis.size()) + " window elements are weight vectors for h-tilde", bad);
    for (auto& [wt, g] : groups) out.roots.push_back(std::move(g));
    return out;
}

Report verify_twisted(const TwistedAlgebra& T, const TwistedWindow& w, const TwistedOptions& opt) {
    Report r("twisted");
    const MatrixSuper& M = T.matrix();
    r.params()["type"] = M.type_label();
    r.params()["kind"] = M.config().kind == MatrixKind::sl ? "sl" : "pl";
    r.params()["radius"] = w.radius;
    r.params()["torus_radius"] = w.torus.radius;
    r.params()["samples"] = opt.samples;
    r.params()["seed"] = opt.seed;

    windowed::Ops<TwistedElement> ops;
    ops.bracket = [&](const TwistedElement& x, const TwistedElement& y) { return T.bracket(x, y); };
    ops.form = [&](const TwistedElement& x, const TwistedElement& y) { return T.form(x, y); };
    ops.parity = [&](const TwistedElement& x) { return T.parity_of(x); };
    ops.to_json = [&](const TwistedElement& x) { return T.to_json(x); };

    TwistedRoots roots = twisted_roots(T, w);
    const auto& basis = roots.basis;
    r.merge(roots.report);

    nlohmann::json bad;
    for (const auto& x : basis)
        if (!T.is_graded(x) || !T.parity_of(x)) {
            bad = T.to_json(x);
            break;
        }
    r.expect(bad.is_null(), "twisted.graded_basis", "degree-i components lie in l[i mod 4]", bad);

    bad = nullptr;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < basis.size() && bad.is_null(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            ++pairs;
            TwistedElement br = T.bracket(basis[i], basis[j]);
            if (br.is_zero()) continue;
            auto p = T.parity_of(br);
            if (!T.is_graded(br) || !p || *p != (*T.parity_of(basis[i]) ^ *T.parity_of(basis[j]))) {
                bad = {{"x", T.to_json(basis[i])}, {"y", T.to_json(basis[j])}, {"bracket", T.to_json(br)}};
                break;
            }
        }
    r.expect(bad.is_null(), "twisted.grading", std::to_string(pairs) + " window basis pairs", bad);

    std::size_t zero_dim = 0;
    bool zero_ok = true;
    for (const auto& rt : roots.roots)
        if (is_zero(rt.weight)) {
            zero_dim = rt.basis.size();
            for (const auto& x : rt.basis)
                if (!T.in_cartan(x)) zero_ok = false;
        }
    const std::size_t csize = T.cartan().size();
    r.expect(zero_ok && zero_dim == csize, "twisted.zero_space",
             "weight-0 space is h^sigma + c + d: dim " + std::to_string(zero_dim) + " vs " + std::to_string(csize));

    form1_check(r, "twisted.form1", "twisted.pairing", M, M.eigenblocks(w.torus));

    windowed::sampled_identities(r, "twisted.", basis, ops, opt.samples, opt.seed);
    windowed::window_nondegeneracy(r, "twisted.window_nondegenerate", basis, ops);

    // Axiom (1): basis pairs across ±root, per parity.
    std::map<Weight, const TwistedRoot*> by_weight;
    for (const auto& rt : roots.roots) by_weight[rt.weight] = &rt;
    nlohmann::json missing, wrong;
    std::size_t witnessed = 0;
    for (const auto& rt : roots.roots) {
        if (is_zero(rt.weight)) continue;
        auto neg = by_weight.find(-rt.weight);
        for (Parity p : {Parity{0}, Parity{1}}) {
            std::optional<std::pair<const TwistedElement*, const TwistedElement*>> found;
            bool any = false;
            for (const auto& x : rt.basis) {
                if (*T.parity_of(x) != p) continue;
                any = true;
                if (neg == by_weight.end()) break;
                for (const auto& y : neg->second->basis)
                    if (*T.parity_of(y) == p && !T.bracket(x, y).is_zero()) {
                        found = std::pair{&x, &y};
                        break;
                    }
                if (found) break;
            }
            if (!any) continue;
            if (!found) {
                if (missing.is_null()) missing = {{"root", weight_json(rt.weight)}, {"parity", p}};
                continue;
            }
            ++witnessed;
            const TwistedElement &x = *found->first, &y = *found->second;
            TwistedElement br = T.bracket(x, y);
            TwistedElement expect = T.form(x, y) * T.t(rt.weight);
            if ((!T.in_cartan(br) || br != expect) && wrong.is_null())
                wrong = {{"root", weight_json(rt.weight)}, {"x", T.to_json(x)}, {"y", T.to_json(y)},
                         {"bracket", T.to_json(br)}, {"expected", T.to_json(expect)}};
        }
    }
    if (missing.is_null())
        r.pass("eals.axiom1", std::to_string(witnessed) + " window roots with witnesses");
    else
        r.fail("eals.axiom1", "no witness pair with 0 != [x,y] in the Cartan", missing);
    r.expect(wrong.is_null(), "eals.witness_identity", "[x, y] = (x, y) t_root for every witness", wrong);

    std::vector<TwistedElement> real_vectors;
    for (const auto& rt : roots.roots) {
        if (is_zero(rt.weight) || T.cartan_form().pair(rt.weight, rt.weight).is_zero()) continue;
        for (const auto& x : rt.basis) real_vectors.push_back(x);
    }
    windowed::windowed_nilpotency(r, "eals.axiom2", real_vectors, basis, ops, M.base().dim() + 3);

    std::vector<Weight> root_weights;
    for (const auto& rt : roots.roots) root_weights.push_back(rt.weight);
    const std::size_t n = T.rank(), size = csize;
    const std::size_t tau_off = size - 2 - n;
    auto in_window = [&, tau_off, n, size](const Weight& wt) {
        std::vector<long> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!wt[tau_off + i].is_integer()) return false;
            c[i] = wt[tau_off + i].to_long();
        }
        const Scalar& i = wt[size - 1];
        return w.torus.contains(GroupElement(c)) && i.is_integer() && std::labs(i.to_long()) <= w.radius;
    };
    RootSupersystem sys = from_root_values(root_weights, T.cartan_form(), in_window);
    r.merge(check_axioms(sys), "ears.");
    return r;
}

}  // namespace superlie
