#include "doctest.h"
#include "oracle.hpp"

#include "superlie/affinize.hpp"
#include "superlie/error.hpp"
#include "superlie/osp12.hpp"

#include <set>

using namespace superlie;

namespace {

std::vector<std::vector<Scalar>> constant_q(std::size_t n, Scalar c) {
    return std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, c));
}

LoopElement at(std::size_t n, std::size_t b, GroupElement deg) {
    return LoopElement::loop(n, SparseVector::unit(b), std::move(deg));
}

/// str(F+ F−) from the explicit 3×3 matrices.
Scalar osp_form_fp_fm() {
    auto fp = oracle::from_ints({{0, 1, 0}, {0, 0, 0}, {1, 0, 0}});
    auto fm = oracle::from_ints({{0, 0, 2}, {-2, 0, 0}, {0, 0, 0}});
    return oracle::str(oracle::mul(fp, fm), {0, 1, 1});
}

}  // namespace

TEST_SUITE("torus") {
    TEST_CASE("multiplication") {
        CocycleTorus triv = CocycleTorus::trivial(2);
        auto [c, d] = torus_mul(triv, GroupElement{1, 2}, GroupElement{-3, 1});
        CHECK(c == Scalar(1));
        CHECK(d == GroupElement{-2, 3});

        CocycleTorus q = CocycleTorus::bimultiplicative({{Scalar(1), Scalar(-1)}, {Scalar(-1), Scalar(1)}});
        CHECK(torus_mul(q, GroupElement{1, 0}, GroupElement{0, 1}).first == Scalar(-1));
        CHECK(torus_mul(q, GroupElement{0, 0}, GroupElement{3, -2}).first == Scalar(1));

        CHECK_THROWS_AS(CocycleTorus::bimultiplicative({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(1)}}), PreconditionError);
        CHECK_THROWS_AS(CocycleTorus::bimultiplicative({{Scalar(0)}}), PreconditionError);
    }

    TEST_CASE("bimultiplicative values by direct substitution") {
        oracle::Gen g(71);
        for (int trial = 0; trial < 20; ++trial) {
            Scalar a(g.range(-2, 2) == 0 ? 3 : g.range(1, 3)), b = g.coin() ? Scalar(-1) : Scalar(2), c(g.range(1, 2));
            std::vector<std::vector<Scalar>> q{{a, b}, {b, c}};
            CocycleTorus t = CocycleTorus::bimultiplicative(q);
            for (int k = 0; k < 10; ++k) {
                GroupElement l{g.range(-2, 2), g.range(-2, 2)}, m{g.range(-2, 2), g.range(-2, 2)};
                Scalar want(1);
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) want *= q[i][j].pow(l[i] * m[j]);
                CHECK(t.theta(l, m) == want);
            }
        }
    }

    TEST_CASE("cocycle verification") {
        CHECK(verify_cocycle(CocycleTorus::trivial(1), {1, 2}).passed());
        CHECK(verify_cocycle(CocycleTorus::bimultiplicative({{Scalar(2), Scalar(-1)}, {Scalar(-1), Scalar(3)}}), {2, 1})
                  .passed());
        std::map<std::pair<GroupElement, GroupElement>, Scalar> vals;
        for (long a = -1; a <= 1; ++a)
            for (long b = -1; b <= 1; ++b) vals[{GroupElement{a}, GroupElement{b}}] = Scalar(1);
        vals[{GroupElement{0}, GroupElement{0}}] = Scalar(2);
        Report r = verify_cocycle(CocycleTorus::table(1, 1, vals), {1, 1});
        CHECK(r.find("cocycle.normalized")->status == Status::fail);
    }
}

TEST_SUITE("affinize") {
    TEST_CASE("bracket and form values") {
        AffinizedAlgebra A(osp12_standard(), CocycleTorus::trivial(1));
        const Scalar f = osp_form_fp_fm();
        for (long l = -3; l <= 3; ++l) {
            LoopElement x = at(1, osp::Fp, {l}), y = at(1, osp::Fm, {-l});
            LoopElement want = at(1, osp::H, {0});
            want.add_v(0, f * Scalar(l));
            CHECK(A.bracket(x, y) == want);
            CHECK(A.form(x, y) == f);
            CHECK(A.form(x, at(1, osp::Fm, {1 - l})).is_zero());
            // [d, x ⊗ t^λ] = λ x ⊗ t^λ and 𝒱 is central.
            CHECK(A.bracket(LoopElement::d_basis(1, 0), x) == Scalar(l) * x);
            CHECK(A.bracket(LoopElement::v_basis(1, 0), x).is_zero());
            CHECK(A.bracket(x, LoopElement::v_basis(1, 0)).is_zero());
        }
        CHECK(A.form(LoopElement::v_basis(1, 0), LoopElement::d_basis(1, 0)) == Scalar(1));
        CHECK(A.form(LoopElement::d_basis(1, 0), LoopElement::d_basis(1, 0)).is_zero());
    }

    TEST_CASE("twisted torus enters the bracket") {
        AffinizedAlgebra A(osp12_standard(), CocycleTorus::bimultiplicative(constant_q(1, Scalar(-1))));
        LoopElement x = at(1, osp::Fp, {1}), y = at(1, osp::Fp, {1});
        // θ(1,1) = −1 and [F+, F+] = E+.
        CHECK(A.bracket(x, y) == Scalar(-1) * at(1, osp::Ep, {2}));
    }

    TEST_CASE("root list on a window") {
        AffinizedAlgebra A(osp12_standard(), CocycleTorus::trivial(1));
        AffineRoots roots = affinized_roots(A, {1, 1});
        CHECK(roots.report.passed());
        std::set<std::pair<long, long>> got, want;
        for (const auto& r : roots.roots) {
            got.insert({r.base[0].to_long(), r.degree[0]});
            std::size_t expect = r.base[0].is_zero() ? (r.degree.is_zero() ? 3 : 1) : 1;
            CHECK(r.basis.size() == expect);
        }
        for (long b : {-4, -2, 0, 2, 4})
            for (long l = -1; l <= 1; ++l) want.insert({b, l});
        CHECK(got == want);

        AffineRoots base = affinized_roots(A, {1, 0});
        CHECK(base.roots.size() == 5);
    }

    TEST_CASE("windowed suite passes on the standard cases") {
        AffinizedAlgebra A(osp12_standard(), CocycleTorus::trivial(1));
        Report r = verify_affinized(A, {1, 3}, {500, 1, {}});
        CHECK(r.passed());
        CHECK(r.find("affine.jacobi")->status == Status::pass);

        AffinizedAlgebra B(sl_matrix_superalgebra(1, 2), CocycleTorus::trivial(2));
        CHECK(verify_affinized(B, {2, 1}, {200, 2, {}}).passed());

        AffinizedAlgebra C(osp12_standard(), CocycleTorus::bimultiplicative({{Scalar(2)}}));
        CHECK(verify_affinized(C, {1, 2}, {200, 3, {}}).passed());
    }

    TEST_CASE("dropping the delta factor breaks invariance") {
        AffinizedAlgebra A(osp12_standard(), CocycleTorus::trivial(1));
        AffineOptions opt{300, 1, [&](const LoopElement& x, const LoopElement& y) { return form_without_delta(A, x, y); }};
        Report r = verify_affinized(A, {1, 2}, opt);
        CHECK(r.find("affine.form_invariance")->status == Status::fail);
        CHECK_FALSE(r.find("affine.form_invariance")->witness.is_null());
    }

    TEST_CASE("sampling disabled") {
        AffinizedAlgebra A(osp12_standard(), CocycleTorus::trivial(1));
        Report r = verify_affinized(A, {1, 1}, {0, 0, {}});
        CHECK(r.passed());
        CHECK(r.find("affine.jacobi")->status == Status::skip);
    }

    TEST_CASE("base without a form is rejected") {
        LieSuperalgebra L({"p", "q", "z"}, {0, 0, 0});
        L.set_bracket_super(0, 1, SparseVector::unit(2));
        assign_weights(L, {2});
        CHECK_THROWS_AS(AffinizedAlgebra(L, CocycleTorus::trivial(1)), PreconditionError);
    }
}
