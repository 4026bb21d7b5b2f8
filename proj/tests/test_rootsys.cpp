#include "doctest.h"
#include "oracle.hpp"

#include "superlie/algebra.hpp"
#include "superlie/error.hpp"
#include "superlie/osp12.hpp"
#include "superlie/rootsys.hpp"

#include <algorithm>

using namespace superlie;

namespace {

RootSupersystem osp_abstract() {
    return classify({GroupElement{0}, GroupElement{1}, GroupElement{-1}, GroupElement{2}, GroupElement{-2}},
                    SymmetricGroupForm({{Scalar(2)}}));
}

/// Roots of sl(m|n) in ε/δ coordinates with (ε,ε) = 1, (δ,δ) = −1.
RootSupersystem sl_abstract(std::size_t m, std::size_t n) {
    const std::size_t N = m + n;
    std::vector<GroupElement> roots{GroupElement(N)};
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            if (a != b) roots.push_back(GroupElement::basis(N, a) - GroupElement::basis(N, b));
    std::vector<std::vector<Scalar>> gram(N, std::vector<Scalar>(N));
    for (std::size_t a = 0; a < N; ++a) gram[a][a] = a < m ? Scalar(1) : Scalar(-1);
    return classify(roots, SymmetricGroupForm(gram));
}

GroupElement eps(std::size_t N, std::size_t a) { return GroupElement::basis(N, a); }

}  // namespace

TEST_SUITE("rootsys") {
    TEST_CASE("classification") {
        RootSupersystem s = osp_abstract();
        CHECK(s.real().size() == 4);
        CHECK(s.nonsingular().empty());
        CHECK(s.radical() == std::vector<GroupElement>{GroupElement{0}});

        RootSupersystem t = sl_abstract(1, 2);
        GroupElement a = eps(3, 0) - eps(3, 1), b = eps(3, 1) - eps(3, 2);
        CHECK(t.pair(a, a).is_zero());
        CHECK(t.pair(a, b) == Scalar(1));
        CHECK(std::count(t.nonsingular().begin(), t.nonsingular().end(), a) == 1);

        RootSupersystem z = classify({GroupElement{0}}, SymmetricGroupForm({{Scalar(3)}}));
        CHECK(z.radical().size() == 1);
        CHECK(z.real().empty());
        CHECK(z.nonsingular().empty());
    }

    TEST_CASE("reflections") {
        RootSupersystem s = osp_abstract();
        CHECK(reflect(s, GroupElement{1}, GroupElement{1}) == GroupElement{-1});
        CHECK(reflect(s, GroupElement{1}, GroupElement{2}) == GroupElement{-2});

        RootSupersystem t = sl_abstract(1, 2);
        GroupElement d12 = eps(3, 1) - eps(3, 2), e1d1 = eps(3, 0) - eps(3, 1);
        CHECK(reflect(t, d12, e1d1) == eps(3, 0) - eps(3, 2));
        CHECK_THROWS_AS(reflect(t, e1d1, d12), PreconditionError);
    }

    TEST_CASE("reflections permute the real part") {
        for (const auto& s : {osp_abstract(), sl_abstract(1, 2), sl_abstract(2, 1), sl_abstract(2, 3)})
            for (const auto& a : s.real())
                for (const auto& b : s.roots()) CHECK(s.contains(reflect(s, a, b)));
    }

    TEST_CASE("root strings") {
        RootSupersystem s = osp_abstract();
        RootString r = root_string(s, GroupElement{1}, GroupElement{1});
        CHECK(r.p == 3);
        CHECK(r.q == 1);
        CHECK(r.ks == std::vector<long>{-3, -2, -1, 0, 1});
        CHECK(r.interval);
        CHECK(r.balanced);

        RootString z = root_string(s, GroupElement{1}, GroupElement{0});
        CHECK(z.p == 2);
        CHECK(z.q == 2);
        CHECK(z.cartan_number.is_zero());

        RootSupersystem small = classify({GroupElement{0}, GroupElement{1}, GroupElement{-1}}, SymmetricGroupForm({{Scalar(2)}}));
        RootString w = root_string(small, GroupElement{1}, GroupElement{1});
        CHECK(w.p == 2);
        CHECK(w.q == 0);
    }

    TEST_CASE("ratio sets") {
        RootSupersystem s = osp_abstract();
        CHECK(ratio_check(s, GroupElement{1}).ratios == std::vector<Scalar>{-2, -1, 0, 1, 2});
        CHECK(ratio_check(s, GroupElement{2}).ratios ==
              std::vector<Scalar>{Scalar(-1), Scalar(-1, 2), Scalar(0), Scalar(1, 2), Scalar(1)});
        RootSupersystem small = classify({GroupElement{0}, GroupElement{1}, GroupElement{-1}}, SymmetricGroupForm({{Scalar(2)}}));
        CHECK(ratio_check(small, GroupElement{1}).ratios == std::vector<Scalar>{-1, 0, 1});
        RootSupersystem big = classify({GroupElement{0}, GroupElement{1}, GroupElement{-1}, GroupElement{3}, GroupElement{-3}},
                                       SymmetricGroupForm({{Scalar(2)}}));
        CHECK(ratio_check(big, GroupElement{1}).offending == std::vector<Scalar>{-3, 3});
    }

    TEST_CASE("axioms") {
        CHECK(check_axioms(osp_abstract()).passed());
        Report sl = check_axioms(sl_abstract(1, 2));
        CHECK(sl.passed());
        for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 3}, std::pair{2, 2}, std::pair{3, 2}})
            CHECK(check_axioms(sl_abstract(m, n)).passed());

        RootSupersystem half = classify({GroupElement{0}, GroupElement{1}}, SymmetricGroupForm({{Scalar(2)}}));
        Report r = check_axioms(half);
        CHECK(r.find("S2")->status == Status::fail);
    }

    TEST_CASE("deleting any nonzero root breaks an axiom") {
        for (const auto& s : {osp_abstract(), sl_abstract(1, 2)}) {
            for (const auto& drop : s.roots()) {
                if (drop.is_zero()) continue;
                std::vector<GroupElement> kept;
                for (const auto& a : s.roots())
                    if (a != drop) kept.push_back(a);
                CHECK_FALSE(check_axioms(classify(kept, s.form())).passed());
            }
        }
    }

    TEST_CASE("roots read from algebras match the abstract systems") {
        RootSupersystem a = from_root_datum(weight_decomposition(osp12_standard()));
        CHECK(a.roots().size() == 5);
        CHECK(a.real().size() == 4);
        CHECK(check_axioms(a).passed());

        RootSupersystem b = from_root_datum(weight_decomposition(sl_matrix_superalgebra(1, 2)));
        CHECK(b.roots().size() == 7);
        CHECK(b.nonsingular().size() == sl_abstract(1, 2).nonsingular().size());
        CHECK(b.real().size() == sl_abstract(1, 2).real().size());
        CHECK(check_axioms(b).passed());
    }

    TEST_CASE("scaled type A systems satisfy the axioms") {
        oracle::Gen g(61);
        // Root systems of type A scaled by a random positive form factor stay valid.
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = g.range(2, 4);
            Scalar k(g.range(1, 4));
            std::vector<std::vector<Scalar>> gram(n, std::vector<Scalar>(n));
            for (std::size_t i = 0; i < n; ++i) gram[i][i] = k;
            std::vector<GroupElement> roots{GroupElement(n)};
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (a != b) roots.push_back(eps(n, a) - eps(n, b));
            CHECK(check_axioms(classify(roots, SymmetricGroupForm(gram))).passed());
        }
    }
}
