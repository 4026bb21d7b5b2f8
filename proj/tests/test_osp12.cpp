#include "doctest.h"
#include "oracle.hpp"

#include "superlie/error.hpp"
#include "superlie/osp12.hpp"

#include <algorithm>
#include <map>

using namespace superlie;

namespace {

oracle::Dense dense(const SparseMatrix& m) {
    oracle::Dense d(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) d[r][c] = v;
    return d;
}

/// Multiset of highest weights from h-eigenspace dimensions alone:
/// #V(λ) = m(λ) − m(λ+2) with m(μ) = dim ker(h − μ).
std::vector<long> multiset_oracle(const Osp12Module& M) {
    const std::size_t n = M.dim();
    auto m = [&](long mu) {
        oracle::Dense d = dense(M.h);
        for (std::size_t i = 0; i < n; ++i) d[i][i] -= Scalar(mu);
        return static_cast<long>(n - oracle::rank(d));
    };
    std::vector<long> out;
    for (long lam = 2 * static_cast<long>(n); lam >= 0; lam -= 2) {
        long count = m(lam) - m(lam + 2);
        for (long k = 0; k < count; ++k) out.push_back(lam);
    }
    return out;
}

}  // namespace

TEST_SUITE("modules") {
    TEST_CASE("V(0) is trivial") {
        Osp12Module V = irreducible_module(0);
        CHECK(V.dim() == 1);
        CHECK(V.e.is_zero());
        CHECK(V.f.is_zero());
        CHECK(V.h.is_zero());
    }

    TEST_CASE("irreducible actions follow the closed formulas") {
        for (long lam = 0; lam <= 12; lam += 2) {
            Osp12Module V = irreducible_module(lam);
            REQUIRE(V.dim() == static_cast<std::size_t>(lam + 1));
            for (long i = 0; i <= lam; ++i) {
                CHECK(V.h.get(i, i) == Scalar(lam - 2 * i));
                if (i < lam) CHECK(V.f.get(i + 1, i) == Scalar(1));
                if (i > 0) CHECK(V.e.get(i - 1, i) == Scalar(i % 2 == 0 ? -i : lam - (i - 1)));
                CHECK(V.parity[i] == i % 2);
            }
            CHECK(V.e.nnz() == static_cast<std::size_t>(lam));
            CHECK(V.f.nnz() == static_cast<std::size_t>(lam));
        }
        Osp12Module V2 = irreducible_module(2);
        CHECK(V2.e.get(0, 1) == Scalar(2));
        CHECK(V2.e.get(1, 2) == Scalar(-2));
        CHECK(irreducible_module(4).e.get(2, 3) == Scalar(2));
        CHECK_THROWS_AS(irreducible_module(3), PreconditionError);
        CHECK_THROWS_AS(irreducible_module(-2), PreconditionError);
    }

    TEST_CASE("representation property") {
        for (long lam = 0; lam <= 10; lam += 2) {
            CHECK(check_representation(irreducible_module(lam)).passed());
            CHECK(check_representation(irreducible_module(lam, 1)).passed());
        }
        Osp12Module bad = irreducible_module(2);
        bad.e.set(0, 1, Scalar(3));
        CHECK_FALSE(check_representation(bad).passed());
    }

    TEST_CASE("h spectra") {
        CHECK(h_spectrum(irreducible_module(4)) == std::vector<long>{4, 2, 0, -2, -4});
        CHECK(h_spectrum(irreducible_module(0)) == std::vector<long>{0});
        CHECK(h_spectrum(direct_sum({irreducible_module(2), irreducible_module(2)})) ==
              std::vector<long>{2, 2, 0, 0, -2, -2});
        // Even part: λ, λ−4, …; odd part: λ−2, λ−6, ….
        Osp12Module V = irreducible_module(6);
        CHECK(h_spectrum(V, 0) == std::vector<long>{6, 2, -2, -6});
        CHECK(h_spectrum(V, 1) == std::vector<long>{4, 0, -4});
    }

    TEST_CASE("generated even submodule") {
        Osp12Module V2 = irreducible_module(2);
        G0Submodule T = generated_g0_submodule(V2, SparseVector::unit(0), Scalar(2));
        CHECK(T.equals_closure);
        CHECK(T.dim == 1);

        Osp12Module V4 = irreducible_module(4);
        G0Submodule T4 = generated_g0_submodule(V4, SparseVector::unit(0), Scalar(4));
        CHECK(T4.equals_closure);
        CHECK(T4.dim == 2);

        G0Submodule T0 = generated_g0_submodule(irreducible_module(0), SparseVector::unit(0), Scalar(0));
        CHECK(T0.equals_closure);
        CHECK(T0.dim == 0);

        CHECK_THROWS_AS(generated_g0_submodule(V2, SparseVector::unit(0), Scalar(-2)), PreconditionError);
        CHECK_THROWS_AS(generated_g0_submodule(V2, SparseVector::unit(1), Scalar(2)), PreconditionError);
    }

    TEST_CASE("generated submodule equals closure on random eigenvectors") {
        oracle::Gen g(51);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<long> lams;
            for (int k = g.range(1, 3); k > 0; --k) lams.push_back(2 * g.range(0, 3));
            std::vector<Osp12Module> parts;
            for (long l : lams) parts.push_back(irreducible_module(l, g.coin()));
            Osp12Module M = direct_sum(parts);
            // A top vector of the first summand; [e,e] kills it.
            G0Submodule T = generated_g0_submodule(M, SparseVector::unit(0), Scalar(lams[0]));
            CHECK(T.equals_closure);
        }
    }

    TEST_CASE("decompose an irreducible") {
        Decomposition d = decompose(irreducible_module(2));
        REQUIRE(d.summands.size() == 1);
        CHECK(d.summands[0].lambda == 2);
        CHECK(d.summands[0].basis.size() == 3);
    }

    TEST_CASE("decompose scrambled sums") {
        Decomposition a = decompose(scramble(direct_sum({irreducible_module(2), irreducible_module(0)}), 3));
        CHECK(a.lambdas() == std::vector<long>{2, 0});
        Decomposition b =
            decompose(scramble(direct_sum({irreducible_module(4), irreducible_module(2), irreducible_module(2)}), 9));
        CHECK(b.lambdas() == std::vector<long>{4, 2, 2});
    }

    TEST_CASE("decompose agrees with the eigenspace oracle") {
        oracle::Gen g(52);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Osp12Module> parts;
            std::vector<long> want;
            std::size_t dim = 0;
            while (dim < 20) {
                long l = 2 * g.range(0, 4);
                parts.push_back(irreducible_module(l, g.coin()));
                want.push_back(l);
                dim += l + 1;
            }
            std::sort(want.rbegin(), want.rend());
            Osp12Module M = scramble(direct_sum(parts), g.next());
            CHECK(check_representation(M).passed());
            CHECK(multiset_oracle(M) == want);
            Decomposition d = decompose(M);
            CHECK(d.lambdas() == want);
            std::size_t total = 0;
            for (const auto& s : d.summands) {
                CHECK(s.basis.size() % 2 == 1);
                total += s.basis.size();
            }
            CHECK(total == M.dim());
        }
    }

    TEST_CASE("decompose rejects non-representations") {
        Osp12Module bad = irreducible_module(4);
        bad.e.set(0, 1, Scalar(1));
        CHECK_THROWS_AS(decompose(bad), WitnessError);
    }

    TEST_CASE("scramble preserves parity blocks") {
        Osp12Module M = direct_sum({irreducible_module(4), irreducible_module(2, 1)});
        Osp12Module S = scramble(M, 17);
        CHECK(S.parity == M.parity);
        CHECK_FALSE(S.h == M.h);
        CHECK(h_spectrum(S) == h_spectrum(M));
    }
}
