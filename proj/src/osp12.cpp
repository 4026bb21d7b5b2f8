#include "superlie/osp12.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace superlie {

namespace {

nlohmann::json vec_json(const SparseVector& v) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [i, c] : v) j[std::to_string(i)] = c.str();
    return j;
}

SparseMatrix matrix3(std::initializer_list<std::tuple<std::size_t, std::size_t, long>> entries) {
    SparseMatrix m(3, 3);
    for (const auto& [r, c, v] : entries) m.set(r, c, Scalar(v));
    return m;
}

// Restriction of m to the given rows and columns.
SparseMatrix block(const SparseMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    std::vector<std::size_t> col_pos(m.cols(), cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) col_pos[cols[k]] = k;
    SparseMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : m.row(rows[r]))
            if (col_pos[c] < cols.size()) out.set(r, col_pos[c], v);
    return out;
}

std::vector<std::size_t> indices_of_parity(const std::vector<Parity>& parity, Parity p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parity.size(); ++i)
        if (parity[i] == p) out.push_back(i);
    return out;
}

// u, f·u, f²·u, … up to the first zero. Throws if longer than dim.
std::vector<SparseVector> f_string(const Osp12Module& M, const SparseVector& u) {
    std::vector<SparseVector> out;
    SparseVector v = u;
    while (!v.is_zero()) {
        if (out.size() > M.dim()) throw WitnessError("f is not nilpotent on a string", {{"start", vec_json(u)}});
        out.push_back(v);
        v = M.f.apply(v);
    }
    return out;
}

// h·v = μ v; nullopt if v is not an h-eigenvector.
std::optional<Scalar> eigenvalue(const SparseMatrix& h, const SparseVector& v) {
    SparseVector hv = h.apply(v);
    Scalar mu = hv.get(v.leading_index()) / v.leading();
    if (hv != mu * v) return std::nullopt;
    return mu;
}

// Certifies that the string is an irreducible summand; returns it.
Summand certify(const Osp12Module& M, const std::vector<Parity>& parity, std::vector<SparseVector> string) {
    const SparseVector& u = string.front();
    nlohmann::json where{{"top", vec_json(u)}};
    if (!M.e.apply(u).is_zero()) throw WitnessError("summand top is not killed by e", where);
    auto mu = eigenvalue(M.h, u);
    if (!mu || !mu->is_integer()) throw WitnessError("summand top is not an integral h-eigenvector", where);
    long lambda = mu->to_long();
    if (lambda < 0 || lambda % 2 != 0) throw WitnessError("summand highest weight is not even and nonnegative", where);
    if (static_cast<long>(string.size()) != lambda + 1)
        throw WitnessError("summand dimension differs from highest weight + 1",
                           {{"top", vec_json(u)}, {"lambda", lambda}, {"dimension", string.size()}});
    for (std::size_t k = 0; k < string.size(); ++k) {
        const SparseVector& v = string[k];
        if (M.h.apply(v) != Scalar(lambda - 2 * static_cast<long>(k)) * v)
            throw WitnessError("h does not act diagonally on the summand string", {{"top", vec_json(u)}, {"k", k}});
        if (k == 0) continue;
        SparseVector ev = M.e.apply(v);
        const SparseVector& prev = string[k - 1];
        Scalar c = ev.is_zero() ? Scalar(0) : ev.get(prev.leading_index()) / prev.leading();
        if (c.is_zero() || ev != c * prev)
            throw WitnessError("e does not map the summand string down with a nonzero constant",
                               {{"top", vec_json(u)}, {"k", k}});
    }
    auto p = std::optional<Parity>{};
    for (const auto& [i, c] : u) {
        if (p && *p != parity[i]) throw WitnessError("summand top is not homogeneous", where);
        p = parity[i];
    }
    return Summand{lambda, *p, std::move(string)};
}

}  // namespace

// ---------------------------------------------------------------------------

LieSuperalgebra osp12_standard() {
    std::vector<SparseMatrix> mats{
        matrix3({{2, 1, 2}}),                // E+
        matrix3({{1, 2, -8}}),               // E−
        matrix3({{1, 1, -2}, {2, 2, 2}}),    // H
        matrix3({{0, 1, 1}, {2, 0, 1}}),     // F+
        matrix3({{0, 2, 2}, {1, 0, -2}}),    // F−
    };
    LieSuperalgebra L = from_matrix_basis({"E+", "E-", "H", "F+", "F-"}, mats, {0, 1, 1});
    assign_weights(L, {osp::H});
    return L;
}

Sl2SuperTriple verify_triple(const LieSuperalgebra& L, const SparseVector& x, const SparseVector& y,
                             const SparseVector& h) {
    if (x.is_zero() || y.is_zero() || h.is_zero()) throw WitnessError("triple has a zero member", nullptr);
    auto px = L.parity_of(x), py = L.parity_of(y);
    if (!px || !py || *px != *py)
        throw WitnessError("x and y are not homogeneous of the same parity",
                           {{"x_parity", px ? nlohmann::json(*px) : nlohmann::json()},
                            {"y_parity", py ? nlohmann::json(*py) : nlohmann::json()}});
    auto relation = [&](const SparseVector& got, const SparseVector& want, const std::string& name) {
        if (got != want) throw WitnessError("relation " + name + " fails", {{"relation", name}, {"got", vec_json(got)}, {"want", vec_json(want)}});
    };
    relation(L.bracket(h, x), Scalar(2) * x, "[h,x] = 2x");
    relation(L.bracket(h, y), Scalar(-2) * y, "[h,y] = -2y");
    relation(L.bracket(x, y), h, "[x,y] = h");

    // Generation: close {x, y, h} under brackets.
    Subspace span;
    std::vector<SparseVector> elems;
    std::deque<SparseVector> queue{x, y, h};
    while (!queue.empty()) {
        SparseVector v = std::move(queue.front());
        queue.pop_front();
        if (!span.insert(v)) continue;
        elems.push_back(v);
        for (const auto& w : elems) {
            queue.push_back(L.bracket(v, w));
            queue.push_back(L.bracket(w, v));
        }
    }
    if (span.dim() != L.dim())
        throw WitnessError("triple does not generate the algebra", {{"generated_dim", span.dim()}, {"dim", L.dim()}});

    Sl2SuperTriple t{x, y, h, *px ? Sl2SuperTriple::Kind::osp : Sl2SuperTriple::Kind::sl2};
    if (t.kind == Sl2SuperTriple::Kind::osp) {
        SparseVector xx = L.bracket(x, x), yy = L.bracket(y, y);
        SparseVector x2 = Scalar(1, 4) * xx, y2 = Scalar(-1, 4) * yy, h2 = Scalar(1, 2) * h;
        relation(L.bracket(h2, x2), Scalar(2) * x2, "[h',x'] = 2x'");
        relation(L.bracket(h2, y2), Scalar(-2) * y2, "[h',y'] = -2y'");
        relation(L.bracket(x2, y2), h2, "[x',y'] = h'");
        relation(L.bracket(xx, x), SparseVector(), "[[x,x],x] = 0");
        relation(L.bracket(yy, y), SparseVector(), "[[y,y],y] = 0");
    }
    return t;
}

// ---------------------------------------------------------------------------

SparseMatrix Osp12Module::ee() const { return Scalar(2) * (e * e); }
SparseMatrix Osp12Module::ff() const { return Scalar(2) * (f * f); }
std::vector<SparseMatrix> Osp12Module::actions() const { return {ee(), ff(), h, e, f}; }

Report check_representation(const Osp12Module& M) {
    Report r("osp(1,2)-module");
    r.params()["dim"] = M.dim();
    const std::size_t n = M.dim();
    for (const SparseMatrix* m : {&M.e, &M.f, &M.h})
        if (m->rows() != n || m->cols() != n) throw DimensionError("action matrix size differs from module dimension");

    nlohmann::json bad;
    auto scan = [&](const SparseMatrix& m, bool odd, const char* name) {
        for (std::size_t i = 0; i < n && bad.is_null(); ++i)
            for (const auto& [j, v] : m.row(i))
                if ((M.parity[i] != M.parity[j]) != odd) {
                    bad = {{"action", name}, {"row", i}, {"col", j}};
                    break;
                }
    };
    scan(M.e, true, "e");
    scan(M.f, true, "f");
    scan(M.h, false, "h");
    r.expect(bad.is_null(), "module.parity", "e, f odd and h even", bad);

    static const LieSuperalgebra g = osp12_standard();
    const auto rho = M.actions();
    bad = nullptr;
    for (std::size_t a = 0; a < 5 && bad.is_null(); ++a)
        for (std::size_t b = a; b < 5; ++b) {
            SparseMatrix lhs(n, n);
            for (const auto& [k, c] : g.structure(a, b)) lhs += c * rho[k];
            SparseMatrix rhs = rho[a] * rho[b];
            SparseMatrix ba = rho[b] * rho[a];
            if (super_sign(g.parity(a), g.parity(b)) > 0)
                rhs -= ba;
            else
                rhs += ba;
            if (!(lhs == rhs)) {
                bad = {{"a", g.label(a)}, {"b", g.label(b)}};
                break;
            }
        }
    r.expect(bad.is_null(), "module.representation", "rho([a,b]) = rho(a)rho(b) - (-1)^{|a||b|} rho(b)rho(a)", bad);
    return r;
}

Osp12Module irreducible_module(long lambda, Parity top_parity) {
    if (lambda < 0 || lambda % 2 != 0) throw PreconditionError("highest weight must be even and nonnegative");
    const std::size_t n = static_cast<std::size_t>(lambda) + 1;
    Osp12Module M{std::vector<Parity>(n), SparseMatrix(n, n), SparseMatrix(n, n), SparseMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        const long k = static_cast<long>(i);
        M.parity[i] = static_cast<Parity>((top_parity + i) % 2);
        M.h.set(i, i, Scalar(lambda - 2 * k));
        if (i + 1 < n) M.f.set(i + 1, i, Scalar(1));
        if (i > 0) M.e.set(i - 1, i, Scalar(k % 2 == 0 ? -k : lambda - k + 1));
    }
    return M;
}

Osp12Module direct_sum(const std::vector<Osp12Module>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.dim();
    Osp12Module M{{}, SparseMatrix(n, n), SparseMatrix(n, n), SparseMatrix(n, n)};
    std::size_t off = 0;
    for (const auto& p : parts) {
        M.parity.insert(M.parity.end(), p.parity.begin(), p.parity.end());
        for (auto [dst, src] : {std::pair{&M.e, &p.e}, {&M.f, &p.f}, {&M.h, &p.h}})
            for (std::size_t i = 0; i < p.dim(); ++i)
                for (const auto& [j, v] : src->row(i)) dst->set(off + i, off + j, v);
        off += p.dim();
    }
    return M;
}

Osp12Module scramble(const Osp12Module& M, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = M.dim();
    std::vector<std::size_t> perm(n);
    for (Parity p : {Parity{0}, Parity{1}}) {
        auto idx = indices_of_parity(M.parity, p);
        auto shuffled = idx;
        for (std::size_t k = shuffled.size(); k > 1; --k) std::swap(shuffled[k - 1], shuffled[rng() % k]);
        for (std::size_t k = 0; k < idx.size(); ++k) perm[idx[k]] = shuffled[k];
    }
    Osp12Module out{M.parity, SparseMatrix(n, n), SparseMatrix(n, n), SparseMatrix(n, n)};
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    for (auto [dst, src] : {std::pair{&out.e, &M.e}, {&out.f, &M.f}, {&out.h, &M.h}})
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [j, v] : src->row(perm[i])) dst->set(i, inv[j], v);

    // P = 1 + c·E_ab within a parity block; M ↦ P M P⁻¹.
    static const long mult[] = {1, -1, 2, -2};
    std::vector<std::vector<std::size_t>> blocks;
    for (Parity p : {Parity{0}, Parity{1}}) {
        auto idx = indices_of_parity(M.parity, p);
        if (idx.size() >= 2) blocks.push_back(std::move(idx));
    }
    if (blocks.empty()) return out;
    for (std::size_t step = 0; step < 2 * n; ++step) {
        const auto& b = blocks[rng() % blocks.size()];
        std::size_t a = b[rng() % b.size()];
        std::size_t c = b[rng() % (b.size() - 1)];
        if (c == a) c = b.back();
        Scalar k(mult[rng() % 4]);
        for (SparseMatrix* m : {&out.e, &out.f, &out.h}) {
            SparseVector src = m->row(c);
            m->row_mut(a).axpy(k, src);
            for (std::size_t r = 0; r < n; ++r) {
                Scalar v = m->row(r).get(a);
                if (!v.is_zero()) m->row_mut(r).axpy(-k * v, SparseVector::unit(c));
            }
        }
    }
    return out;
}

std::vector<long> h_spectrum(const Osp12Module& M, Parity p) {
    auto idx = indices_of_parity(M.parity, p);
    SparseMatrix hb = block(M.h, idx, idx);
    std::vector<long> out;
    const long bound = static_cast<long>(M.dim());
    for (long step = 0; step <= bound && out.size() < idx.size(); ++step) {
        for (int sign : {1, -1}) {
            if (step == 0 && sign < 0) continue;
            const long mu = sign * 2 * step;
            if (std::labs(mu) > bound) continue;
            SparseMatrix shifted = hb - Scalar(mu) * SparseMatrix::identity(idx.size());
            std::size_t nullity = idx.size() - rank(shifted);
            out.insert(out.end(), nullity, mu);
        }
    }
    if (out.size() != idx.size())
        throw PreconditionError("h is not diagonalizable with even integer eigenvalues on the parity-" +
                                std::to_string(p) + " part");
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<long> h_spectrum(const Osp12Module& M) {
    std::vector<long> out = h_spectrum(M, 0);
    auto odd = h_spectrum(M, 1);
    out.insert(out.end(), odd.begin(), odd.end());
    std::sort(out.rbegin(), out.rend());
    std::vector<long> neg(out.rbegin(), out.rend());
    for (auto& v : neg) v = -v;
    if (neg != out) throw PreconditionError("h-spectrum is not symmetric under mu -> -mu");
    return out;
}

G0Submodule generated_g0_submodule(const Osp12Module& M, const SparseVector& u, const Scalar& lambda) {
    if (lambda == Scalar(-2)) throw PreconditionError("lambda = -2 is excluded");
    if (M.h.apply(u) != lambda * u) throw PreconditionError("u is not an h-eigenvector with the given eigenvalue");
    const SparseMatrix ee = M.ee(), ff = M.ff();
    if (!ee.apply(u).is_zero()) throw PreconditionError("[e,e] does not kill u");
    std::optional<Parity> p;
    for (const auto& [i, c] : u) {
        if (p && *p != M.parity.at(i)) throw PreconditionError("u is not homogeneous");
        p = M.parity.at(i);
    }

    G0Submodule out;
    SparseVector eu = M.e.apply(u);
    SparseVector y = M.f.apply(eu) - (lambda + Scalar(2)) * u;
    auto s1 = f_string(M, eu), s2 = f_string(M, y);
    for (std::size_t k = 0; k < s1.size(); k += 2) out.basis.push_back(s1[k]);
    for (std::size_t k = 1; k < s2.size(); k += 2) out.basis.push_back(s2[k]);
    Subspace t(out.basis);
    out.dim = t.dim();

    Subspace closure;
    std::deque<SparseVector> queue{M.f.apply(u)};
    while (!queue.empty()) {
        SparseVector v = std::move(queue.front());
        queue.pop_front();
        if (!closure.insert(v)) continue;
        queue.push_back(ee.apply(v));
        queue.push_back(ff.apply(v));
        queue.push_back(M.h.apply(v));
    }
    out.equals_closure = closure == t;
    return out;
}

std::vector<long> Decomposition::lambdas() const {
    std::vector<long> out;
    for (const auto& s : summands) out.push_back(s.lambda);
    std::sort(out.rbegin(), out.rend());
    return out;
}

Decomposition decompose(const Osp12Module& M) {
    Report rep = check_representation(M);
    if (!rep.passed()) {
        for (const auto& c : rep.checks())
            if (c.status == Status::fail) throw WitnessError("not a representation: " + c.name, c.witness);
    }
    const std::size_t n = M.dim();
    const SparseMatrix ee = M.ee(), ff = M.ff();
    std::vector<std::vector<SparseVector>> candidates;

    // (a) highest weight vectors of the even part under span{[e,e], [f,f], h}.
    auto even = indices_of_parity(M.parity, 0);
    std::vector<SparseVector> kernel;
    for (const auto& z : nullspace(block(ee, even, even))) kernel.push_back(z.reindex(even));
    std::vector<std::pair<long, SparseVector>> tops;
    if (!kernel.empty()) {
        CoordinateSolver coords(kernel);
        SparseMatrix hk(kernel.size(), kernel.size());
        for (std::size_t i = 0; i < kernel.size(); ++i) {
            auto c = coords.coordinates(M.h.apply(kernel[i]));
            if (!c) throw WitnessError("h does not preserve the kernel of [e,e]", {{"vector", vec_json(kernel[i])}});
            for (const auto& [k, v] : *c) hk.set(k, i, v);
        }
        for (long mu = static_cast<long>(n / 2 * 2); mu >= -static_cast<long>(n) && tops.size() < kernel.size(); mu -= 2) {
            SparseMatrix shifted = hk - Scalar(mu) * SparseMatrix::identity(kernel.size());
            for (const auto& z : nullspace(shifted)) {
                SparseVector w;
                for (const auto& [k, v] : z) w.axpy(v, kernel[k]);
                tops.emplace_back(mu, std::move(w));
            }
        }
        if (tops.size() != kernel.size())
            throw WitnessError("h is not diagonalizable with even eigenvalues on even highest weight vectors",
                               {{"found", tops.size()}, {"kernel", kernel.size()}});
    }

    // (b) the f-strings of e·w and of f(e·w) − (μ+2)w.
    for (const auto& [mu, w] : tops) {
        SparseVector ew = M.e.apply(w);
        SparseVector y = M.f.apply(ew) - Scalar(mu + 2) * w;
        if (!ew.is_zero()) candidates.push_back(f_string(M, ew));
        if (!y.is_zero()) candidates.push_back(f_string(M, y));
    }

    // (c) odd vectors killed by [e,e], [f,f] and h give lines f(e·v) − 2v.
    auto odd = indices_of_parity(M.parity, 1);
    if (!odd.empty()) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        SparseMatrix stacked(3 * n, odd.size());
        std::size_t off = 0;
        for (const SparseMatrix* m : {&ee, &ff, &M.h}) {
            SparseMatrix b = block(*m, all, odd);
            for (std::size_t r = 0; r < n; ++r) stacked.row_mut(off + r) = b.row(r);
            off += n;
        }
        for (const auto& z : nullspace(stacked)) {
            SparseVector v = z.reindex(odd);
            SparseVector x = M.f.apply(M.e.apply(v)) - Scalar(2) * v;
            if (!x.is_zero()) candidates.push_back(f_string(M, x));
        }
    }

    // (d) greedy selection of a direct family.
    Decomposition out;
    Subspace acc;
    for (auto& z : candidates) {
        if (acc.dim() == n) break;
        Subspace trial = acc;
        std::size_t grew = 0;
        for (const auto& v : z) grew += trial.insert(v) ? 1 : 0;
        if (grew == 0) continue;
        if (grew != z.size())
            throw WitnessError("candidate summand meets the selected family partially",
                               {{"top", vec_json(z.front())}, {"new", grew}, {"size", z.size()}});
        out.summands.push_back(certify(M, M.parity, std::move(z)));
        acc = std::move(trial);
    }
    if (acc.dim() != n)
        throw WitnessError("selected summands do not span the module", {{"span", acc.dim()}, {"dim", n}});
    return out;
}

}  // namespace superlie
