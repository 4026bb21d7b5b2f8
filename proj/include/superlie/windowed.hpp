#pragma once

// Checks shared by the graded infinite-dimensional constructions. Each works
// on a finite homogeneous "window" basis; elements need +, −, Scalar·, ==
// and is_zero().

#include "superlie/algebra.hpp"
#include "superlie/linalg.hpp"
#include "superlie/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace superlie::windowed {

template <class E>
struct Ops {
    std::function<E(const E&, const E&)> bracket;
    std::function<Scalar(const E&, const E&)> form;
    std::function<std::optional<Parity>(const E&)> parity;
    std::function<nlohmann::json(const E&)> to_json;
};

/// Random homogeneous combinations of one to three window basis elements.
template <class E>
class Sampler {
public:
    Sampler(const std::vector<E>& basis, const std::vector<Parity>& parity, std::uint64_t seed)
        : basis_(basis), rng_(seed) {
        for (std::size_t i = 0; i < basis.size(); ++i) by_parity_[parity[i]].push_back(i);
    }

    E next() {
        static const long coeffs[] = {1, -1, 2, -2, 3};
        const auto& pool = by_parity_[by_parity_[1].empty() ? 0 : (by_parity_[0].empty() ? 1 : rng_() % 2)];
        std::size_t terms = 1 + rng_() % 3;
        E out = basis_[pool[rng_() % pool.size()]];
        for (std::size_t t = 1; t < terms; ++t) out = out + Scalar(coeffs[rng_() % 5]) * basis_[pool[rng_() % pool.size()]];
        if (out.is_zero()) out = basis_[pool.front()];
        return out;
    }

private:
    const std::vector<E>& basis_;
    std::mt19937_64 rng_;
    std::vector<std::size_t> by_parity_[2];
};

/// Anti-supersymmetry, super Jacobi and form supersymmetry, evenness and
/// invariance on sampled homogeneous triples.
template <class E>
void sampled_identities(Report& r, const std::string& prefix, const std::vector<E>& basis, const Ops<E>& ops,
                        std::size_t samples, std::uint64_t seed) {
    const char* names[] = {"anti_supersymmetry", "jacobi", "form_supersymmetry", "form_evenness", "form_invariance"};
    if (samples == 0 || basis.empty()) {
        for (const char* n : names) r.skip(prefix + n, "sampling disabled");
        return;
    }
    std::vector<Parity> par;
    for (const auto& b : basis) par.push_back(*ops.parity(b));
    Sampler<E> sampler(basis, par, seed);
    nlohmann::json bad[5];
    for (std::size_t s = 0; s < samples; ++s) {
        E x = sampler.next(), y = sampler.next(), z = sampler.next();
        Parity px = *ops.parity(x), py = *ops.parity(y);
        int sxy = super_sign(px, py);
        auto witness = [&](nlohmann::json extra) {
            nlohmann::json w{{"sample", s}, {"x", ops.to_json(x)}, {"y", ops.to_json(y)}};
            for (auto it = extra.begin(); it != extra.end(); ++it) w[it.key()] = it.value();
            return w;
        };
        E xy = ops.bracket(x, y);
        if (bad[0].is_null()) {
            E res = xy + Scalar(sxy) * ops.bracket(y, x);
            if (!res.is_zero()) bad[0] = witness({{"residual", ops.to_json(res)}});
        }
        if (bad[1].is_null()) {
            E res = ops.bracket(x, ops.bracket(y, z)) - ops.bracket(xy, z) - Scalar(sxy) * ops.bracket(y, ops.bracket(x, z));
            if (!res.is_zero()) bad[1] = witness({{"z", ops.to_json(z)}, {"residual", ops.to_json(res)}});
        }
        Scalar fxy = ops.form(x, y);
        if (bad[2].is_null() && fxy != Scalar(sxy) * ops.form(y, x))
            bad[2] = witness({{"xy", fxy.str()}, {"yx", ops.form(y, x).str()}});
        if (bad[3].is_null() && px != py && !fxy.is_zero()) bad[3] = witness({{"value", fxy.str()}});
        if (bad[4].is_null()) {
            Scalar lhs = ops.form(xy, z), rhs = ops.form(x, ops.bracket(y, z));
            if (lhs != rhs) bad[4] = witness({{"z", ops.to_json(z)}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
        }
    }
    const std::string detail = std::to_string(samples) + " samples, seed " + std::to_string(seed);
    for (int k = 0; k < 5; ++k) r.expect(bad[k].is_null(), prefix + names[k], detail, bad[k]);
}

/// Gram matrix of the form on the window basis has full rank.
template <class E>
void window_nondegeneracy(Report& r, const std::string& name, const std::vector<E>& basis, const Ops<E>& ops) {
    SparseMatrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Scalar v = ops.form(basis[i], basis[j]);
            if (!v.is_zero()) g.set(i, j, std::move(v));
        }
    std::size_t rk = rank(g);
    r.expect(rk == basis.size(), name, "Gram rank " + std::to_string(rk) + " of " + std::to_string(basis.size()));
}

/// ad x nilpotent on every window basis element within `bound` steps, for
/// each x in real_vectors.
template <class E>
void windowed_nilpotency(Report& r, const std::string& name, const std::vector<E>& real_vectors,
                         const std::vector<E>& basis, const Ops<E>& ops, std::size_t bound) {
    nlohmann::json bad;
    for (const auto& x : real_vectors) {
        for (const auto& b : basis) {
            E v = b;
            for (std::size_t k = 0; k < bound && !v.is_zero(); ++k) v = ops.bracket(x, v);
            if (!v.is_zero()) {
                bad = {{"x", ops.to_json(x)}, {"on", ops.to_json(b)}, {"steps", bound}};
                break;
            }
        }
        if (!bad.is_null()) break;
    }
    r.expect(bad.is_null(), name,
             std::to_string(real_vectors.size()) + " real-root vectors on " + std::to_string(basis.size()) +
                 " window elements, exponent <= " + std::to_string(bound),
             bad);
}

}  // namespace superlie::windowed
