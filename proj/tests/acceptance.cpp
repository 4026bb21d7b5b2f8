// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include "superlie/affinize.hpp"
#include "superlie/document.hpp"
#include "superlie/eals.hpp"
#include "superlie/error.hpp"
#include "superlie/matrixsuper.hpp"
#include "superlie/osp12.hpp"
#include "superlie/pipeline.hpp"
#include "superlie/rootsys.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace superlie;

namespace {

/// Collects the first few failure notes for the summary line.
struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (notes.size() < 3) notes.push_back(what);
    }
    void report(const Report& r, const std::string& what) {
        if (r.passed()) return;
        std::string failed;
        for (const auto& c : r.checks())
            if (c.status == Status::fail) failed += (failed.empty() ? "" : ",") + c.name;
        require(false, what + " [" + failed + "]");
    }
    void status(const Report& r, const std::string& name, Status want, const std::string& what) {
        const Check* c = r.find(name);
        require(c && c->status == want, what + ": " + name);
    }
};

SparseVector unit(std::size_t i) { return SparseVector::unit(i); }

bool is_fixture_eals(const LieSuperalgebra& L) {
    try {
        if (!verify_superalgebra(L).passed() || !verify_form(L).passed()) return false;
        return verify_eals(L, weight_decomposition(L)).passed();
    } catch (const Error&) {
        return false;
    }
}

// 1 ------------------------------------------------------------------------

void osp_ground_truth(Outcome& out) {
    LieSuperalgebra L = osp12_standard();
    out.report(verify_superalgebra(L), "superalgebra");
    out.report(verify_form(L), "form");
    SparseVector fpfp = L.bracket(unit(osp::Fp), unit(osp::Fp));
    SparseVector fmfm = L.bracket(unit(osp::Fm), unit(osp::Fm));
    out.require(L.bracket(fpfp, fmfm) == Scalar(-8) * unit(osp::H), "[[F+,F+],[F-,F-]] = -8H");
    out.require(L.bracket(unit(osp::H), fpfp) == Scalar(4) * fpfp, "[H,[F+,F+]] = 4[F+,F+]");
    out.require(L.bracket(fpfp, unit(osp::Fp)).is_zero(), "[[F+,F+],F+] = 0");
}

// 2 ------------------------------------------------------------------------

void irreducibles(Outcome& out) {
    for (long lam = 0; lam <= 20; lam += 2) {
        const std::string tag = "V(" + std::to_string(lam) + ")";
        Osp12Module V = irreducible_module(lam);
        out.report(check_representation(V), tag + " representation");
        out.require(V.dim() == static_cast<std::size_t>(lam + 1), tag + " dimension");
        std::vector<long> all, even, odd;
        for (long mu = lam; mu >= -lam; mu -= 2) {
            all.push_back(mu);
            ((lam - mu) % 4 == 0 ? even : odd).push_back(mu);
        }
        out.require(h_spectrum(V) == all, tag + " h-spectrum");
        out.require(h_spectrum(V, 0) == even, tag + " even part");
        out.require(h_spectrum(V, 1) == odd, tag + " odd part");
    }
}

// 3 ------------------------------------------------------------------------

/// Each summand spans an invariant subspace, its basis is a highest weight
/// string u, fu, …, f^λ u with every e f^k u (k ≥ 1) a nonzero multiple of
/// f^{k−1} u, and the summands together span M.
void certify(Outcome& out, const Osp12Module& M, const Decomposition& d, const std::string& tag) {
    Subspace total;
    for (const auto& s : d.summands) {
        const auto& b = s.basis;
        out.require(b.size() == static_cast<std::size_t>(s.lambda + 1) && b.size() % 2 == 1, tag + " odd dimension");
        Subspace span(b);
        out.require(span.dim() == b.size(), tag + " summand basis independent");
        out.require(M.e.apply(b[0]).is_zero(), tag + " e kills the top vector");
        for (std::size_t k = 0; k < b.size(); ++k) {
            out.require(M.h.apply(b[k]) == Scalar(s.lambda - 2 * static_cast<long>(k)) * b[k], tag + " h-weight");
            out.require(span.contains(M.e.apply(b[k])) && span.contains(M.f.apply(b[k])), tag + " invariance");
            if (k + 1 < b.size()) out.require(M.f.apply(b[k]) == b[k + 1], tag + " f-string");
            if (k == 0) continue;
            SparseVector eb = M.e.apply(b[k]);
            Subspace prev(std::vector<SparseVector>{b[k - 1]});
            out.require(!eb.is_zero() && prev.contains(eb), tag + " irreducibility");
        }
        for (const auto& v : b) total.insert(v);
    }
    out.require(total.dim() == M.dim(), tag + " summands span M");
}

void complete_reducibility(Outcome& out) {
    std::mt19937_64 rng(20261017);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t cap = 1 + rng() % 120;
        std::vector<Osp12Module> parts;
        std::vector<long> want;
        std::size_t dim = 0;
        for (;;) {
            long lam = 2 * static_cast<long>(rng() % 16);
            if (dim + lam + 1 > cap) {
                if (!parts.empty()) break;
                lam = 0;
            }
            parts.push_back(irreducible_module(lam, static_cast<Parity>(rng() % 2)));
            want.push_back(lam);
            dim += lam + 1;
        }
        std::sort(want.rbegin(), want.rend());
        const std::uint64_t seed = rng();
        Osp12Module M = scramble(direct_sum(parts), seed);
        const std::string tag = "trial " + std::to_string(trial) + " (seed " + std::to_string(seed) + ")";
        try {
            Decomposition d = decompose(M);
            out.require(d.lambdas() == want, tag + " multiset");
            certify(out, M, d, tag);
        } catch (const WitnessError& e) {
            out.require(false, tag + ": " + e.what());
        }
    }
}

// 4 ------------------------------------------------------------------------

std::vector<Scalar> ratios_of(const RootSupersystem& s, const GroupElement& a) {
    std::vector<Scalar> out;
    std::size_t pivot = 0;
    while (a[pivot] == 0) ++pivot;
    for (const auto& b : s.roots()) {
        Scalar c(b[pivot], a[pivot]);
        bool multiple = true;
        for (std::size_t k = 0; k < a.rank(); ++k) multiple = multiple && Scalar(b[k]) == c * Scalar(a[k]);
        if (multiple) out.push_back(c);
    }
    return out;
}

void ears_axioms(Outcome& out) {
    const std::set<Scalar> allowed{Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(1, 2), Scalar(-1, 2)};
    for (const char* name : {"osp12", "sl12"}) {
        const std::string tag = name;
        RootSupersystem s = from_root_datum(weight_decomposition(builtin_algebra(name)));
        out.report(check_axioms(s), tag + " S1-S5");
        for (const auto& a : s.roots()) {
            if (std::count(s.radical().begin(), s.radical().end(), a)) continue;
            for (const auto& c : ratios_of(s, a)) out.require(allowed.count(c), tag + " ratio " + c.str());
            const Scalar aa = s.pair(a, a);
            if (aa.is_zero()) continue;
            out.require(ratio_check(s, a).offending.empty(), tag + " ratio_check");
            for (const auto& b : s.roots()) {
                // Walk the string directly and compare with the library.
                const Scalar n = Scalar(2) * s.pair(b, a) / aa;
                std::vector<long> ks;
                for (long k = -8; k <= 8; ++k)
                    if (s.contains(b + k * a)) ks.push_back(k);
                bool interval = true;
                for (std::size_t i = 1; i < ks.size(); ++i) interval = interval && ks[i] == ks[i - 1] + 1;
                out.require(interval, tag + " string is an interval");
                const long p = -ks.front(), q = ks.back();
                out.require(Scalar(p - q) == n, tag + " p - q = 2(b,a)/(a,a)");
                RootString rs = root_string(s, a, b);
                out.require(rs.p == p && rs.q == q && rs.interval, tag + " root_string agrees");
                out.require(n.is_integer(), tag + " integral");
                GroupElement r = b - n.to_long() * a;
                out.require(s.contains(r) && reflect(s, a, b) == r, tag + " reflection");
            }
        }
        for (const auto& drop : s.roots()) {
            if (drop.is_zero()) continue;
            std::vector<GroupElement> kept;
            for (const auto& b : s.roots())
                if (b != drop) kept.push_back(b);
            out.require(!check_axioms(classify(kept, s.form())).passed(), tag + " mutation survives");
        }
    }
}

// 5 and 8 -------------------------------------------------------------------

std::vector<std::string> eals_fixtures(Outcome& out) {
    std::vector<std::string> names;
    for (const auto& n : builtin_algebra_names())
        if (is_fixture_eals(builtin_algebra(n))) names.push_back(n);
    for (const char* must : {"osp12", "sl12", "sl21"})
        out.require(std::count(names.begin(), names.end(), must), std::string(must) + " verifies as EALS");
    return names;
}

void structural(Outcome& out) {
    for (const auto& n : eals_fixtures(out)) {
        LieSuperalgebra L = builtin_algebra(n);
        out.report(structural_root_checks(L, weight_decomposition(L)), n);
    }
}

void cross_module(Outcome& out) {
    for (const auto& n : eals_fixtures(out)) {
        LieSuperalgebra L = builtin_algebra(n);
        out.report(cross_check(L), n);
        out.report(check_axioms(from_root_datum(weight_decomposition(L))), n + " axioms");
        LieSuperalgebra E = even_part(L);
        RootDatum d = weight_decomposition(E);
        out.require(d.odd.empty(), n + " even part has no odd roots");
        out.report(verify_eals(E, d), n + " even part");
    }
}

// 6 ------------------------------------------------------------------------

void untwisted(Outcome& out) {
    std::uint64_t seed = 1;
    for (const char* base : {"osp12", "sl12"})
        for (std::size_t rank : {1u, 2u})
            for (bool twisted : {false, true}) {
                std::ostringstream tag;
                tag << base << " rank " << rank << (twisted ? " q=-1" : " trivial");
                CocycleTorus t = twisted ? CocycleTorus::constant(rank, Scalar(-1)) : CocycleTorus::trivial(rank);
                AffinizedAlgebra A(builtin_algebra(base), t);
                DegreeWindow w{rank, 3};
                Report r = verify_affinized(A, w, {500, seed++, {}});
                out.report(r, tag.str());
                for (const char* name : {"affine.jacobi", "affine.form_invariance", "affine.form_evenness",
                                         "affine.window_nondegenerate", "eals.axiom1", "eals.witness_identity",
                                         "eals.axiom2", "affine.root_list"})
                    out.status(r, name, Status::pass, tag.str());

                // Witnesses: [x⊗t^λ, θ(λ,−λ)⁻¹ y⊗t^{−λ}] = (x,y)((t_α⊗1) + λ).
                const LieSuperalgebra& L = A.base();
                const RootDatum& d = A.base_roots();
                for (const auto& a : d.roots) {
                    Weight neg = a;
                    for (auto& v : neg) v = -v;
                    for (Parity p : {Parity(0), Parity(1)}) {
                        std::optional<std::pair<SparseVector, SparseVector>> xy;
                        if (is_zero(a)) {
                            if (p == 1) continue;
                            for (std::size_t i : d.cartan)
                                for (std::size_t j : d.cartan)
                                    if (!xy && !L.form(unit(i), unit(j)).is_zero()) xy.emplace(unit(i), unit(j));
                        } else {
                            if (d.space(a, p).empty()) continue;
                            xy = axiom1_witness(L, d.space(a, p), d.space(neg, p));
                        }
                        out.require(xy.has_value(), tag.str() + " base witness");
                        if (!xy) continue;
                        const Scalar c = L.form(xy->first, xy->second);
                        for (const auto& l : w.elements()) {
                            GroupElement ml = -1 * l;
                            LoopElement X = LoopElement::loop(rank, xy->first, l);
                            LoopElement Y = t.theta(l, ml).inverse() * LoopElement::loop(rank, xy->second, ml);
                            LoopElement want = LoopElement::loop(rank, d.t(a), GroupElement(rank));
                            for (std::size_t i = 0; i < rank; ++i) want.add_v(i, Scalar(l[i]));
                            out.require(A.bracket(X, Y) == c * want, tag.str() + " witness identity");
                        }
                    }
                }

                // Root list against the product of base roots and degrees.
                std::set<std::pair<Weight, GroupElement>> want, got;
                for (const auto& a : A.base_roots().roots)
                    for (const auto& l : w.elements()) want.insert({a, l});
                for (const auto& r : affinized_roots(A, w).roots) got.insert({r.base, r.degree});
                out.require(got == want, tag.str() + " root list");
            }
}

// 7 ------------------------------------------------------------------------

void twisted(Outcome& out) {
    struct Case {
        bool zero;
        MatrixKind kind;
        const char* label;
        std::size_t families;
    };
    std::uint64_t seed = 11;
    for (const Case& c : {Case{false, MatrixKind::pl, "C(1,1)", 9}, Case{true, MatrixKind::sl, "BC(1,1)", 13}}) {
        MatrixConfig cfg;
        cfg.index = SuperIndexSet{1, 1, c.zero, false};
        cfg.kind = c.kind;
        MatrixSuper M(cfg);
        const std::string tag = c.label;
        out.require(M.type_label() == c.label, tag + " type label");
        Report a = verify_matrix_structure(M, {1, 1}, 500, seed++);
        out.report(a, tag + " level A");
        for (const char* name : {"matrix.sharp_order4", "matrix.sharp_form", "loop.sharp_form", "eigen.pairing",
                                 "roots.pi_families", "roots.pi_displays_agree"})
            out.status(a, name, Status::pass, tag);
        PiComparison pc = compare_pi_families(M);
        out.require(pc.projected == pc.families && pc.projected.size() == c.families, tag + " projected roots");

        TwistedAlgebra T(M);
        Report b = verify_twisted(T, {4, DegreeWindow{1, 1}}, {500, seed++});
        out.report(b, tag + " level B");
        for (const char* name : {"twisted.zero_space", "twisted.jacobi", "twisted.form_invariance",
                                 "twisted.window_nondegenerate", "eals.axiom1", "eals.axiom2"})
            out.status(b, name, Status::pass, tag);
    }
}

struct Criterion {
    int id;
    const char* title;
    double budget;   // seconds
    std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "osp(1,2) ground truth", 1, osp_ground_truth},
        {2, "irreducible modules V(0) to V(20)", 5, irreducibles},
        {3, "complete reducibility on 100 scrambled sums", 60, complete_reducibility},
        {4, "root supersystem axioms, strings, reflections, mutations", 5, ears_axioms},
        {5, "structural root facts on EALS fixtures", 60, structural},
        {6, "untwisted affinization", 120, untwisted},
        {7, "twisted construction", 120, twisted},
        {8, "cross-module theorem check", 60, cross_module},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome out;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget) out.require(false, "over the time budget");
        all = all && out.ok;
        std::printf("%s %d %s (%.2f s)", out.ok ? "PASS" : "FAIL", c.id, c.title, secs);
        for (const auto& n : out.notes) std::printf(" | %s", n.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
