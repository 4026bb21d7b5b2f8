#include "doctest.h"
#include "oracle.hpp"

#include "superlie/error.hpp"
#include "superlie/matrixsuper.hpp"

#include <set>

using namespace superlie;

namespace {

MatrixConfig config(std::size_t m, std::size_t n, bool zero, bool zero_prime, MatrixKind kind) {
    MatrixConfig c;
    c.index = SuperIndexSet{m, n, zero, zero_prime};
    c.kind = kind;
    return c;
}

MatrixConfig c11() { return config(1, 1, false, false, MatrixKind::pl); }
MatrixConfig bc11() { return config(1, 1, true, false, MatrixKind::sl); }

TorusMatrix random_matrix(oracle::Gen& g, std::size_t n) {
    TorusMatrix x(n);
    for (int k = g.range(1, 4); k > 0; --k)
        x.add(g.range(0, n - 1), g.range(0, n - 1), GroupElement{g.range(-2, 2)}, g.gaussian(3));
    return x;
}

/// Distinct ½(u_a − u_b), u_a = ε_a − ε_{bar a}, over a ≠ b in plain ℚ^N, 0 included.
std::size_t pi_count_oracle(const SuperIndexSet& idx) {
    const auto bar = idx.bar();
    const std::size_t N = idx.size();
    auto u = [&](std::size_t a) {
        std::vector<Scalar> v(N);
        v[a] += Scalar(1);
        v[bar[a]] -= Scalar(1);
        return v;
    };
    std::set<std::vector<Scalar>> out{std::vector<Scalar>(N)};
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            if (a == b) continue;
            auto ua = u(a), ub = u(b);
            std::vector<Scalar> w(N);
            for (std::size_t k = 0; k < N; ++k) w[k] = Scalar(1, 2) * (ua[k] - ub[k]);
            out.insert(w);
        }
    return out.size();
}

TwistedWindow small_window() { return {2, DegreeWindow{1, 1}}; }

}  // namespace

TEST_SUITE("matrix") {
    TEST_CASE("index sets") {
        SuperIndexSet a{1, 1, false, false};
        CHECK(a.names() == std::vector<std::string>{"1", "1b", "1'", "1b'"});
        CHECK(a.bar() == std::vector<std::size_t>{1, 0, 3, 2});
        CHECK(a.type_label() == "C(1,1)");
        SuperIndexSet b{1, 2, true, true};
        CHECK(b.size() == 8);
        CHECK(b.type_label() == "BC(1,2)");
        CHECK(b.bar()[b.index_of("0")] == b.index_of("0"));
        CHECK(b.bar()[b.index_of("0'")] == b.index_of("0'"));
        CHECK(b.parity() == std::vector<Parity>{0, 0, 0, 1, 1, 1, 1, 1});
    }

    TEST_CASE("supertrace of diagonal units") {
        SuperIndexSet idx{1, 1, true, false};
        const auto par = idx.parity();
        CocycleTorus t = CocycleTorus::trivial(1);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            TorusMatrix e = TorusMatrix::unit(idx.size(), a, a, GroupElement{0});
            TorusElement s = supertrace(e, par);
            CHECK(s.at(GroupElement{0}) == Scalar(par[a] ? -1 : 1));
            CHECK(trace(e).at(GroupElement{0}) == Scalar(1));
            CHECK(supertrace_form(e, e, par, t) == Scalar(par[a] ? -1 : 1));
        }
    }

    TEST_CASE("supertrace vanishes on super-commutators") {
        oracle::Gen g(81);
        SuperIndexSet idx{1, 1, true, true};
        CocycleTorus t = CocycleTorus::bimultiplicative({{Scalar(-1)}});
        for (int k = 0; k < 100; ++k) {
            TorusMatrix x = random_matrix(g, idx.size()), y = random_matrix(g, idx.size());
            CHECK(supertrace(super_commutator(x, y, idx.parity(), t), idx.parity()).empty());
        }
    }

    TEST_CASE("diamond and sharp") {
        oracle::Gen g(82);
        SuperIndexSet idx{1, 1, true, false};
        StarInvolution star{{-1}};
        CocycleTorus t = CocycleTorus::trivial(1);
        const auto par = idx.parity();
        for (int k = 0; k < 100; ++k) {
            TorusMatrix x = random_matrix(g, idx.size()), y = random_matrix(g, idx.size());
            CHECK(diamond(diamond(x, idx.bar(), star), idx.bar(), star) == x);
            TorusMatrix s4 = sharp(sharp(sharp(sharp(x, idx, star), idx, star), idx, star), idx, star);
            CHECK(s4 == x);
            CHECK(supertrace_form(sharp(x, idx, star), sharp(y, idx, star), par, t) == supertrace_form(x, y, par, t));
        }
        // #² is −1 on the off-diagonal blocks and +1 on the diagonal ones.
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) {
                TorusMatrix e = TorusMatrix::unit(idx.size(), a, b, GroupElement{0});
                TorusMatrix s2 = sharp(sharp(e, idx, star), idx, star);
                CHECK(s2 == Scalar(par[a] == par[b] ? 1 : -1) * e);
            }
        // # E_ab for a even, b odd: −E_{bar b, bar a}.
        std::size_t i = idx.index_of("1"), j = idx.index_of("1'");
        CHECK(sharp(TorusMatrix::unit(idx.size(), i, j, GroupElement{0}), idx, StarInvolution{}) ==
              Scalar(-1) * TorusMatrix::unit(idx.size(), idx.bar()[j], idx.bar()[i], GroupElement{0}));
        CHECK(sharp(TorusMatrix::unit(idx.size(), j, i, GroupElement{0}), idx, StarInvolution{}) ==
              TorusMatrix::unit(idx.size(), idx.bar()[i], idx.bar()[j], GroupElement{0}));
    }

    TEST_CASE("stars") {
        CHECK(verify_star(StarInvolution{{-1}}, CocycleTorus::trivial(1), {1, 2}).passed());
        CHECK(verify_star(StarInvolution{}, CocycleTorus::trivial(2), {2, 1}).passed());
        CHECK_THROWS_AS(verify_star(StarInvolution{{2}}, CocycleTorus::trivial(1), {1, 1}), PreconditionError);
    }

    TEST_CASE("sl with equal halves is rejected") {
        CHECK_THROWS_AS(MatrixSuper(config(1, 1, false, false, MatrixKind::sl)), PreconditionError);
    }

    TEST_CASE("eigenvectors of the realized sharp") {
        MatrixSuper M(bc11());
        CHECK(M.order() == 4);
        for (const auto& blk : M.eigenblocks({1, 1})) {
            Scalar z = Scalar::zeta_power(blk.k);
            for (const auto& x : blk.basis) CHECK(M.sharp(x) == z * x);
        }
        // 𝒱 ⊕ 𝒱† sits in the fixed part of the Cartan.
        CHECK(M.sharp(LoopElement::v_basis(1, 0)) == LoopElement::v_basis(1, 0));
        CHECK(M.sharp(LoopElement::d_basis(1, 0)) == LoopElement::d_basis(1, 0));
    }

    TEST_CASE("projection on roots") {
        MatrixSuper M(c11());
        const auto& idx = M.index();
        const auto bar = idx.bar();
        std::size_t i = idx.index_of("1"), r = idx.index_of("1'");
        Weight a = M.hat(M.epsilon(i)), b = M.hat(M.epsilon(r));
        Weight want(a.size());
        Weight abar = M.hat(M.epsilon(bar[i])), bbar = M.hat(M.epsilon(bar[r]));
        for (std::size_t k = 0; k < a.size(); ++k) want[k] = Scalar(1, 2) * ((a[k] - b[k]) + (bbar[k] - abar[k]));
        Weight diff(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) diff[k] = a[k] - b[k];
        CHECK(M.pi(diff) == want);

        // Pure torus degrees are fixed.
        Weight tau(a.size());
        tau.back() = Scalar(3);
        CHECK(M.pi(tau) == tau);
    }

    TEST_CASE("projected roots match the displayed families") {
        for (const auto& cfg : {c11(), bc11(), config(2, 1, false, false, MatrixKind::sl), config(1, 2, true, true, MatrixKind::sl)}) {
            MatrixSuper M(cfg);
            PiComparison pc = compare_pi_families(M);
            CHECK(pc.projected == pc.families);
            CHECK(pc.second == pc.families);
            CHECK(pc.projected.size() == pi_count_oracle(cfg.index));
        }
        CHECK(compare_pi_families(MatrixSuper(c11())).projected.size() == 9);
        CHECK(compare_pi_families(MatrixSuper(bc11())).projected.size() == 13);
        CHECK(compare_pi_families(MatrixSuper(config(1, 2, true, true, MatrixKind::sl))).degenerate == 2);
        CHECK(compare_pi_families(MatrixSuper(bc11())).degenerate == 0);
    }

    TEST_CASE("epsilon form values on the diagonal") {
        MatrixSuper M(c11());
        const CartanForm& f = *M.loop().base_roots().form;
        const auto& idx = M.index();
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) {
                Scalar want = a != b ? Scalar(0) : Scalar(idx.parity()[a] ? -1 : 1);
                CHECK(f.pair(M.epsilon(a), M.epsilon(b)) == want);
            }
    }

    TEST_CASE("structure suites") {
        Report a = verify_matrix_structure(MatrixSuper(c11()), {1, 1}, 100, 4);
        CHECK(a.passed());
        Report b = verify_matrix_structure(MatrixSuper(bc11()), {1, 1}, 100, 5);
        CHECK(b.passed());
        CHECK(b.params()["type"] == "BC(1,1)");

        Report z = verify_matrix_structure(MatrixSuper(bc11()), {1, 1}, 0, 0);
        CHECK(z.passed());
        CHECK(z.find("matrix.dia1")->status == Status::skip);
    }

    TEST_CASE("squared sharp is caught") {
        MatrixConfig cfg = c11();
        cfg.sharp_power = 2;
        MatrixSuper M(cfg);
        CHECK(M.order() == 2);
        Report r = verify_matrix_structure(M, {1, 1}, 50, 1);
        CHECK(r.find("matrix.sharp_order4")->status == Status::fail);
        CHECK_THROWS_AS(TwistedAlgebra{M}, PreconditionError);
    }
}

TEST_SUITE("twisted") {
    TEST_CASE("central and derivation") {
        TwistedAlgebra T{MatrixSuper(c11())};
        auto c = TwistedElement::central(1), d = TwistedElement::derivation(1);
        CHECK(T.form(c, d) == Scalar(1));
        CHECK(T.form(d, c) == Scalar(1));
        CHECK(T.form(c, c).is_zero());
        CHECK(T.form(d, d).is_zero());
        CHECK(T.bracket(c, d).is_zero());
    }

    TEST_CASE("bracket on graded pieces") {
        TwistedAlgebra T{MatrixSuper(bc11())};
        const MatrixSuper& M = T.matrix();
        const AffinizedAlgebra& L = M.loop();
        auto blocks = M.eigenblocks({1, 1});
        bool central_seen = false;
        for (const auto& p : blocks) {
            if (p.k != 1) continue;
            for (const auto& q : blocks) {
                if (q.k != 3) continue;
                for (const auto& x : p.basis)
                    for (const auto& y : q.basis) {
                        TwistedElement X = TwistedElement::part(x, 1), Y = TwistedElement::part(y, -1);
                        TwistedElement want = TwistedElement::part(L.bracket(x, y), 0);
                        want.add_c(L.form(x, y));
                        CHECK(T.bracket(X, Y) == want);
                        CHECK(T.is_graded(X));
                        central_seen = central_seen || !L.form(x, y).is_zero();
                    }
            }
            for (const auto& x : p.basis) {
                for (long j : {-3, 1, 5}) {
                    TwistedElement X = TwistedElement::part(x, j);
                    CHECK(T.bracket(TwistedElement::derivation(1), X) == Scalar(j) * X);
                }
                CHECK_FALSE(T.is_graded(TwistedElement::part(x, 2)));
            }
        }
        CHECK(central_seen);
    }

    TEST_CASE("root weights") {
        TwistedAlgebra T{MatrixSuper(c11())};
        TwistedRoots R = twisted_roots(T, small_window());
        CHECK(R.report.passed());
        std::set<Weight> ws;
        for (const auto& r : R.roots) ws.insert(r.weight);
        CHECK(ws.size() == R.roots.size());
        CHECK(!R.roots.empty());
    }

    TEST_CASE("zero window") {
        TwistedAlgebra T{MatrixSuper(c11())};
        Report r = verify_twisted(T, {0, DegreeWindow{1, 0}}, {50, 1});
        CHECK(r.find("twisted.zero_space")->status == Status::pass);
    }

    TEST_CASE("both zero indices keep the zero weight space") {
        TwistedAlgebra T{MatrixSuper(config(1, 2, true, true, MatrixKind::sl))};
        Report r = verify_twisted(T, {1, DegreeWindow{1, 1}}, {50, 6});
        CHECK(r.passed());
        CHECK(r.find("twisted.zero_space")->status == Status::pass);
    }

    TEST_CASE("suites pass") {
        CHECK(verify_twisted(TwistedAlgebra{MatrixSuper(c11())}, small_window(), {150, 2}).passed());
        CHECK(verify_twisted(TwistedAlgebra{MatrixSuper(bc11())}, small_window(), {150, 3}).passed());
    }
}
