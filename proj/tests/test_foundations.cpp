#include "doctest.h"
#include "oracle.hpp"

#include "superlie/error.hpp"
#include "superlie/lattice.hpp"
#include "superlie/linalg.hpp"
#include "superlie/scalar.hpp"

using namespace superlie;

TEST_SUITE("scalar") {
    TEST_CASE("parse and print") {
        CHECK(Scalar::parse("3/6") == Scalar(1, 2));
        CHECK(Scalar::parse("-2/4+1/3*i") == Scalar(mpq_class(-1, 2), mpq_class(1, 3)));
        CHECK(Scalar::parse("i") == Scalar::i());
        CHECK(Scalar::parse("-i") == -Scalar::i());
        CHECK(Scalar(mpq_class(0), mpq_class(-3, 2)).str() == "-3/2*i");
        CHECK(Scalar(7).str() == "7");
        CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
        CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
        CHECK_THROWS_AS(Scalar::parse(""), ParseError);
    }

    TEST_CASE("text round trip on random values") {
        oracle::Gen g(11);
        for (int k = 0; k < 500; ++k) {
            Scalar x = g.coin() ? g.rational(40) : g.gaussian(40);
            CHECK(Scalar::parse(x.str()) == x);
        }
    }

    TEST_CASE("field identities on random values") {
        oracle::Gen g(12);
        for (int k = 0; k < 300; ++k) {
            Scalar a = g.gaussian(), b = g.gaussian(), c = g.gaussian();
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            Scalar acc = a;
            acc.add_mul(b, c);
            CHECK(acc == a + b * c);
            if (!a.is_zero()) CHECK(a.pow(-3) * a.pow(3) == Scalar(1));
        }
    }

    TEST_CASE("fourth roots of unity") {
        CHECK(Scalar::zeta_power(1) == Scalar::i());
        CHECK(Scalar::zeta_power(2) == Scalar(-1));
        CHECK(Scalar::zeta_power(-1) == -Scalar::i());
        for (long k = -8; k <= 8; ++k) CHECK(Scalar::zeta_power(k).pow(4) == Scalar(1));
    }
}

TEST_SUITE("linalg") {
    TEST_CASE("solve_linear examples") {
        SparseVector v = SparseVector::from_dense(std::vector<Scalar>{1, -2, 3});
        auto x = solve_linear(SparseMatrix::identity(3), v);
        REQUIRE(x);
        CHECK(*x == v);

        auto y = solve_linear(SparseMatrix::from_dense({{2}}), SparseVector::unit(0, 3));
        REQUIRE(y);
        CHECK(y->get(0) == Scalar(3, 2));

        CHECK_FALSE(solve_linear(SparseMatrix(2, 2), SparseVector::unit(1)));
    }

    TEST_CASE("nullspace and rank on random matrices") {
        oracle::Gen g(21);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = g.range(1, 6), c = g.range(1, 7);
            std::vector<std::vector<Scalar>> rows(r, std::vector<Scalar>(c));
            for (auto& row : rows)
                for (auto& v : row)
                    if (g.range(0, 2) == 0) v = g.gaussian(3);
            SparseMatrix m = SparseMatrix::from_dense(rows);
            auto ns = nullspace(m);
            CHECK(rank(m) + ns.size() == c);
            for (const auto& z : ns) {
                CHECK_FALSE(z.is_zero());
                // Row products computed directly from the dense rows.
                for (const auto& row : rows) {
                    Scalar s;
                    for (std::size_t j = 0; j < c; ++j) s += row[j] * z.get(j);
                    CHECK(s.is_zero());
                }
            }
            CHECK(rank(ns) == ns.size());
        }
    }

    TEST_CASE("coordinates recover random combinations") {
        oracle::Gen g(22);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<SparseVector> fam;
            for (int k = 0; k < 4; ++k) {
                SparseVector v = SparseVector::unit(k, Scalar(1));
                for (int j = 4; j < 8; ++j) v.set(j, g.rational(3));
                fam.push_back(v);
            }
            CoordinateSolver solver(fam);
            std::vector<Scalar> coeff;
            SparseVector target;
            for (const auto& f : fam) {
                coeff.push_back(g.gaussian(4));
                target.axpy(coeff.back(), f);
            }
            auto c = solver.coordinates(target);
            REQUIRE(c);
            for (std::size_t k = 0; k < 4; ++k) CHECK(c->get(k) == coeff[k]);
            CHECK_FALSE(solver.coordinates(SparseVector::unit(9)));
        }
    }

    TEST_CASE("subspace membership") {
        Subspace s({SparseVector::from_dense(std::vector<Scalar>{1, 1, 0}), SparseVector::from_dense(std::vector<Scalar>{0, 1, 1})});
        CHECK(s.dim() == 2);
        CHECK(s.contains(SparseVector::from_dense(std::vector<Scalar>{1, 2, 1})));
        CHECK_FALSE(s.contains(SparseVector::unit(0)));
        CHECK_FALSE(s.insert(SparseVector::from_dense(std::vector<Scalar>{1, 0, -1})));
    }
}

TEST_SUITE("lattice") {
    TEST_CASE("form evaluation") {
        SymmetricGroupForm f1({{Scalar(2)}});
        CHECK(f1(GroupElement{1}, GroupElement{1}) == Scalar(2));
        CHECK(f1(GroupElement{0}, GroupElement{7}).is_zero());

        std::vector<std::vector<Scalar>> gram{{1, 0}, {0, -1}};
        SymmetricGroupForm f2(gram);
        GroupElement a{1, 1};
        // a^T G a by hand.
        Scalar want;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) want += Scalar(a[i]) * gram[i][j] * Scalar(a[j]);
        CHECK(f2(a, a) == want);
        CHECK(want.is_zero());

        CHECK_THROWS_AS(SymmetricGroupForm({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(1)}}), PreconditionError);
    }

    TEST_CASE("radical membership") {
        CHECK(radical_member(SymmetricGroupForm({{Scalar(0)}}), GroupElement{5}));
        CHECK_FALSE(radical_member(SymmetricGroupForm({{Scalar(2)}}), GroupElement{1}));
        CHECK(radical_member(SymmetricGroupForm({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}}), GroupElement{0, 3}));
    }

    TEST_CASE("lattice basis of generated subgroups") {
        LatticeBasis b({{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(2)}, {Scalar(2), Scalar(2)}});
        CHECK(b.rank() == 2);
        CHECK(b.contains({Scalar(4), Scalar(-2)}));
        CHECK_FALSE(b.contains({Scalar(1), Scalar(0)}));

        LatticeBasis h({{Scalar(1, 2)}, {Scalar(1)}});
        CHECK(h.rank() == 1);
        CHECK(h.coordinates({Scalar(3, 2)}) == GroupElement{3});
    }

    TEST_CASE("embed inverts coordinates") {
        oracle::Gen g(31);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::vector<Scalar>> gens;
            for (int k = 0; k < 3; ++k) gens.push_back({g.rational(4), g.rational(4), Scalar(g.range(-3, 3))});
            LatticeBasis b(gens);
            for (const auto& v : gens) CHECK(b.embed(b.coordinates(v)) == v);
        }
    }
}
