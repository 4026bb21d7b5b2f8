#include "superlie/eals.hpp"

#include "superlie/error.hpp"

#include <algorithm>

namespace superlie {

namespace {

nlohmann::json vec_json(const LieSuperalgebra& L, const SparseVector& v) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [i, c] : v) j[L.label(i)] = c.str();
    return j;
}

nlohmann::json weight_json(const Weight& w) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : w) j.push_back(s.str());
    return j;
}

}  // namespace

// ---------------------------------------------------------------------------

CartanForm::CartanForm(SparseMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw DimensionError("Cartan Gram block is not square");
    if (rank(gram_) != gram_.rows()) throw PreconditionError("form restricted to the Cartan is degenerate");
}

std::vector<Scalar> CartanForm::represent(const Weight& alpha) const {
    if (alpha.size() != size()) throw DimensionError("functional length differs from Cartan size");
    auto x = solve_linear(gram_, SparseVector::from_dense(alpha));
    if (!x) throw PreconditionError("functional not representable on the Cartan");
    std::vector<Scalar> out(size());
    for (const auto& [i, v] : *x) out[i] = v;
    return out;
}

Scalar CartanForm::pair(const Weight& alpha, const Weight& beta) const {
    std::vector<Scalar> tb = represent(beta);
    Scalar s;
    for (std::size_t i = 0; i < size(); ++i) s += alpha[i] * tb[i];
    return s;
}

const std::vector<std::size_t>& RootDatum::space(const Weight& w, Parity p) const {
    static const std::vector<std::size_t> none;
    const auto& m = p ? odd_space : even_space;
    auto it = m.find(w);
    return it == m.end() ? none : it->second;
}

Scalar RootDatum::pair(const Weight& a, const Weight& b) const {
    if (!form) throw PreconditionError("root datum has no form");
    return form->pair(a, b);
}

SparseVector RootDatum::t(const Weight& a) const {
    if (!form) throw PreconditionError("root datum has no form");
    std::vector<Scalar> c = form->represent(a);
    SparseVector v;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) v.axpy(c[k], SparseVector::unit(cartan[k]));
    return v;
}

SparseVector RootDatum::coroot(const Weight& a) const {
    Scalar n = pair(a, a);
    if (n.is_zero()) throw PreconditionError("coroot of an isotropic functional");
    return (Scalar(2) / n) * t(a);
}

bool in_root_radical(const RootDatum& d, const Weight& a) {
    return std::all_of(d.roots.begin(), d.roots.end(), [&](const Weight& b) { return d.pair(a, b).is_zero(); });
}

// ---------------------------------------------------------------------------

Report verify_superalgebra(const LieSuperalgebra& L) {
    Report r("superalgebra");
    const std::size_t n = L.dim();

    nlohmann::json bad;
    for (const auto& [key, v] : L.structure_table()) {
        Parity want = static_cast<Parity>(L.parity(key.first) ^ L.parity(key.second));
        for (const auto& [k, c] : v) {
            if (L.parity(k) != want) {
                bad = {{"i", L.label(key.first)}, {"j", L.label(key.second)}, {"k", L.label(k)}, {"coefficient", c.str()}};
                break;
            }
        }
        if (!bad.is_null()) break;
    }
    r.expect(bad.is_null(), "superalgebra.grading", bad.is_null() ? "bracket respects the Z2-grading" : "bracket component of wrong parity", bad);

    bad = nullptr;
    for (std::size_t i = 0; i < n && bad.is_null(); ++i) {
        for (std::size_t j = i; j < n; ++j) {
            SparseVector res = L.structure(i, j);
            res.axpy(Scalar(super_sign(L.parity(i), L.parity(j))), L.structure(j, i));
            if (!res.is_zero()) {
                bad = {{"i", L.label(i)}, {"j", L.label(j)}, {"residual", vec_json(L, res)}};
                break;
            }
        }
    }
    r.expect(bad.is_null(), "superalgebra.anti_supersymmetry", bad.is_null() ? "all basis pairs" : "[b_i,b_j] + (-1)^{|i||j|}[b_j,b_i] != 0", bad);

    // [x,[y,z]] = [[x,y],z] + (−1)^{|x||y|} [y,[x,z]]
    bad = nullptr;
    std::size_t triples = 0;
    for (std::size_t i = 0; i < n && bad.is_null(); ++i) {
        SparseVector x = SparseVector::unit(i);
        for (std::size_t j = 0; j < n && bad.is_null(); ++j) {
            SparseVector y = SparseVector::unit(j);
            const SparseVector& xy = L.structure(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                ++triples;
                SparseVector res = L.bracket(x, L.structure(j, k));
                res -= L.bracket(xy, SparseVector::unit(k));
                res.axpy(Scalar(-super_sign(L.parity(i), L.parity(j))), L.bracket(y, L.structure(i, k)));
                if (!res.is_zero()) {
                    bad = {{"i", L.label(i)}, {"j", L.label(j)}, {"k", L.label(k)}, {"residual", vec_json(L, res)}};
                    break;
                }
            }
        }
    }
    r.expect(bad.is_null(), "superalgebra.jacobi",
             bad.is_null() ? std::to_string(triples) + " basis triples" : "super Jacobi residual nonzero", bad);
    return r;
}

Report verify_form(const LieSuperalgebra& L) {
    const SparseMatrix& g = L.gram();
    Report r("form");
    const std::size_t n = L.dim();

    nlohmann::json bad;
    for (std::size_t i = 0; i < n && bad.is_null(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.get(i, j) != Scalar(super_sign(L.parity(i), L.parity(j))) * g.get(j, i)) {
                bad = {{"i", L.label(i)}, {"j", L.label(j)}, {"ij", g.get(i, j).str()}, {"ji", g.get(j, i).str()}};
                break;
            }
    r.expect(bad.is_null(), "form.supersymmetry", "(x,y) = (-1)^{|x||y|}(y,x)", bad);

    bad = nullptr;
    for (std::size_t i = 0; i < n && bad.is_null(); ++i)
        for (const auto& [j, v] : g.row(i))
            if (L.parity(i) != L.parity(j)) {
                bad = {{"i", L.label(i)}, {"j", L.label(j)}, {"value", v.str()}};
                break;
            }
    r.expect(bad.is_null(), "form.evenness", "even and odd parts orthogonal", bad);

    bad = nullptr;
    for (std::size_t i = 0; i < n && bad.is_null(); ++i) {
        SparseVector x = SparseVector::unit(i);
        for (std::size_t j = 0; j < n && bad.is_null(); ++j) {
            const SparseVector& xy = L.structure(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Scalar lhs = L.form(xy, SparseVector::unit(k));
                Scalar rhs = L.form(x, L.structure(j, k));
                if (lhs != rhs) {
                    bad = {{"x", L.label(i)}, {"y", L.label(j)}, {"z", L.label(k)}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
                    break;
                }
            }
        }
    }
    r.expect(bad.is_null(), "form.invariance", "([x,y],z) = (x,[y,z]) on all basis triples", bad);

    std::size_t rk = rank(g);
    r.expect(rk == n, "form.nondegenerate", "rank " + std::to_string(rk) + " of " + std::to_string(n));

    if (L.has_cartan()) {
        const auto& H = L.cartan();
        SparseMatrix gh(H.size(), H.size());
        for (std::size_t a = 0; a < H.size(); ++a)
            for (std::size_t b = 0; b < H.size(); ++b) gh.set(a, b, g.get(H[a], H[b]));
        std::size_t rh = rank(gh);
        r.expect(rh == H.size(), "form.cartan_nondegenerate", "rank " + std::to_string(rh) + " of " + std::to_string(H.size()));
    } else {
        r.skip("form.cartan_nondegenerate", "no Cartan given");
    }

    if (L.has_weights()) {
        bad = nullptr;
        for (std::size_t i = 0; i < n && bad.is_null(); ++i)
            for (const auto& [j, v] : g.row(i))
                if (!is_zero(L.weight(i) + L.weight(j))) {
                    bad = {{"i", L.label(i)}, {"j", L.label(j)}, {"value", v.str()}};
                    break;
                }
        r.expect(bad.is_null(), "form.weight_orthogonality", "(L^a, L^b) = 0 unless a + b = 0", bad);
    } else {
        r.skip("form.weight_orthogonality", "no weights given");
    }
    return r;
}

RootDatum weight_decomposition(const LieSuperalgebra& L) {
    if (!L.has_cartan() || !L.has_weights()) throw PreconditionError("Cartan and weights are required");
    const auto& H = L.cartan();
    for (std::size_t h : H) {
        if (L.parity(h) != 0) throw PreconditionError("Cartan element '" + L.label(h) + "' is odd");
        if (!is_zero(L.weight(h))) throw PreconditionError("Cartan element '" + L.label(h) + "' has nonzero weight");
    }
    RootDatum d;
    d.cartan = H;
    for (std::size_t b = 0; b < L.dim(); ++b) {
        for (std::size_t k = 0; k < H.size(); ++k) {
            SparseVector want = L.weight(b)[k] * SparseVector::unit(b);
            if (L.structure(H[k], b) != want)
                throw PreconditionError("not a weight basis: [" + L.label(H[k]) + ", " + L.label(b) + "] != " +
                                        L.weight(b)[k].str() + " " + L.label(b));
        }
        const Weight& w = L.weight(b);
        if (L.parity(b)) {
            d.odd.insert(w);
            d.odd_space[w].push_back(b);
        } else {
            d.even.insert(w);
            d.even_space[w].push_back(b);
        }
    }
    std::set<Weight> all(d.even.begin(), d.even.end());
    all.insert(d.odd.begin(), d.odd.end());
    d.roots.assign(all.begin(), all.end());
    if (L.has_gram()) {
        SparseMatrix gh(H.size(), H.size());
        for (std::size_t a = 0; a < H.size(); ++a)
            for (std::size_t b = 0; b < H.size(); ++b) gh.set(a, b, L.gram().get(H[a], H[b]));
        if (rank(gh) == H.size()) d.form = CartanForm(std::move(gh));
    }
    return d;
}

std::optional<std::pair<SparseVector, SparseVector>> axiom1_witness(const LieSuperalgebra& L,
                                                                    const std::vector<std::size_t>& plus,
                                                                    const std::vector<std::size_t>& minus) {
    for (std::size_t a : plus)
        for (std::size_t b : minus) {
            const SparseVector& v = L.structure(a, b);
            if (!v.is_zero() && L.in_cartan(v)) return std::pair{SparseVector::unit(a), SparseVector::unit(b)};
        }
    std::vector<bool> cart(L.dim(), false);
    for (std::size_t h : L.cartan()) cart[h] = true;
    for (std::size_t a : plus) {
        // Columns: non-Cartan components of [a, b_k].
        SparseMatrix m(L.dim(), minus.size());
        for (std::size_t k = 0; k < minus.size(); ++k)
            for (const auto& [i, c] : L.structure(a, minus[k]))
                if (!cart[i]) m.set(i, k, c);
        for (const auto& z : nullspace(m)) {
            SparseVector y;
            for (const auto& [k, c] : z) y.axpy(c, SparseVector::unit(minus[k]));
            if (!L.bracket(SparseVector::unit(a), y).is_zero()) return std::pair{SparseVector::unit(a), y};
        }
    }
    return std::nullopt;
}

Report verify_eals(const LieSuperalgebra& L, const RootDatum& d) {
    Report r("eals");
    bool any_nonzero = std::any_of(d.roots.begin(), d.roots.end(), [](const Weight& w) { return !is_zero(w); });
    if (any_nonzero && !d.form) {
        r.fail("eals.prerequisites", "nonzero roots but no nondegenerate form on the Cartan");
        return r;
    }

    nlohmann::json bad;
    for (Parity p : {Parity{0}, Parity{1}}) {
        for (const Weight& a : (p ? d.odd : d.even))
            if (!(p ? d.odd : d.even).count(-a)) {
                bad = {{"parity", p}, {"root", weight_json(a)}};
                break;
            }
        if (!bad.is_null()) break;
    }
    r.expect(bad.is_null(), "eals.root_symmetry", "R_0 = -R_0 and R_1 = -R_1", bad);

    nlohmann::json missing, wrong, witnesses = nlohmann::json::array();
    std::size_t found = 0;
    for (Parity p : {Parity{0}, Parity{1}}) {
        for (const Weight& a : (p ? d.odd : d.even)) {
            if (is_zero(a)) continue;
            auto w = axiom1_witness(L, d.space(a, p), d.space(-a, p));
            if (!w) {
                if (missing.is_null()) missing = {{"parity", p}, {"root", weight_json(a)}};
                continue;
            }
            ++found;
            SparseVector br = L.bracket(w->first, w->second);
            SparseVector expect = L.form(w->first, w->second) * d.t(a);
            nlohmann::json entry{{"parity", p}, {"root", weight_json(a)}, {"x", vec_json(L, w->first)},
                                 {"y", vec_json(L, w->second)}, {"bracket", vec_json(L, br)}};
            if (br != expect && wrong.is_null()) {
                wrong = entry;
                wrong["expected"] = vec_json(L, expect);
            }
            witnesses.push_back(std::move(entry));
        }
    }
    if (missing.is_null()) {
        r.pass("eals.axiom1", std::to_string(found) + " nonzero roots with witnesses", witnesses);
    } else {
        r.fail("eals.axiom1", "no witness pair with 0 != [x,y] in h", missing);
    }
    r.expect(wrong.is_null(), "eals.witness_identity", "[x_a, x_-a] = (x_a, x_-a) t_a for every witness", wrong);

    bad = nullptr;
    std::size_t checked = 0;
    for (const Weight& a : d.roots) {
        if (is_zero(a) || d.pair(a, a).is_zero()) continue;
        for (Parity p : {Parity{0}, Parity{1}}) {
            for (std::size_t xi : d.space(a, p)) {
                ++checked;
                SparseVector x = SparseVector::unit(xi);
                for (std::size_t b = 0; b < L.dim() && bad.is_null(); ++b) {
                    SparseVector v = SparseVector::unit(b);
                    for (std::size_t step = 0; step < L.dim() && !v.is_zero(); ++step) v = L.bracket(x, v);
                    if (!v.is_zero()) bad = {{"x", L.label(xi)}, {"on", L.label(b)}, {"root", weight_json(a)}};
                }
            }
        }
    }
    r.expect(bad.is_null(), "eals.axiom2",
             std::to_string(checked) + " real-root vectors, ad-nilpotent with exponent <= dim", bad);
    return r;
}

Report structural_root_checks(const LieSuperalgebra& L, const RootDatum& d) {
    Report r("roots");
    auto real = [&](const Weight& a) { return !is_zero(a) && !d.pair(a, a).is_zero(); };
    const Scalar two(2);

    nlohmann::json bad;
    for (const Weight& a : d.odd)
        if (real(a) && !d.even.count(two * a)) {
            bad = {{"alpha", weight_json(a)}};
            break;
        }
    r.expect(bad.is_null(), "roots.odd_real_double_even", "odd real a => 2a in R_0", bad);

    bad = nullptr;
    for (const Weight& a : d.roots) {
        if (real(a) && d.odd.count(two * a)) {
            bad = {{"alpha", weight_json(a)}, {"reason", "2a in R_1"}};
            break;
        }
        bool in_re = is_zero(a) || real(a);
        if (in_re && !d.contains(two * a) && !d.even.count(a)) {
            bad = {{"alpha", weight_json(a)}, {"reason", "2a not in R but a not in R_0"}};
            break;
        }
    }
    r.expect(bad.is_null(), "roots.real_double_not_odd", "2a not in R_1 for real a; 2a not in R => a in R_0", bad);

    bad = nullptr;
    for (const Weight& a : d.even) {
        if (!d.pair(a, a).is_zero()) continue;
        for (const Weight& b : d.even)
            if (!d.pair(a, b).is_zero()) {
                bad = {{"alpha", weight_json(a)}, {"beta", weight_json(b)}};
                break;
            }
        if (!bad.is_null()) break;
    }
    r.expect(bad.is_null(), "roots.isotropic_even_orthogonal", "(a, R_0) = 0 for even a with (a,a) = 0", bad);

    bad = nullptr;
    for (const Weight& a : d.even) {
        if (is_zero(a)) continue;
        bool nonsingular = d.pair(a, a).is_zero() && !in_root_radical(d, a);
        if (nonsingular) {
            bad = {{"alpha", weight_json(a)}};
            break;
        }
    }
    r.expect(bad.is_null(), "roots.even_imaginary_trivial", "R_0 and R_im meet only in 0", bad);

    bool l0_even = d.space(Weight(d.rank()), 1).empty();
    if (l0_even) {
        bad = nullptr;
        for (const Weight& a : d.even)
            if (d.odd.count(a) && !in_root_radical(d, a)) {
                bad = {{"alpha", weight_json(a)}};
                break;
            }
        r.expect(bad.is_null(), "roots.even_odd_disjoint", "R^x, R_0, R_1 have empty common part", bad);
    } else {
        r.skip("roots.even_odd_disjoint", "L^0 has odd elements");
    }

    bad = nullptr;
    for (const Weight& a : d.roots) {
        for (const Weight& b : d.roots) {
            if (d.pair(a, b).is_zero()) continue;
            if (!d.contains(b + -a) && !d.contains(b + a)) {
                bad = {{"alpha", weight_json(a)}, {"beta", weight_json(b)}};
                break;
            }
        }
        if (!bad.is_null()) break;
    }
    r.expect(bad.is_null(), "roots.nonorthogonal_neighbours", "(a,b) != 0 => b-a or b+a in R", bad);
    (void)L;
    return r;
}

}  // namespace superlie
