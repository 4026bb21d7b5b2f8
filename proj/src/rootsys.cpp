#include "superlie/rootsys.hpp"

#include "superlie/error.hpp"

#include <algorithm>
#include <limits>

namespace superlie {

namespace {

nlohmann::json coords_json(const GroupElement& g) { return g.coords(); }

// Coordinate-wise bounding box of the roots; nothing outside it is a root.
struct Box {
    std::vector<long> lo, hi;
    bool contains(const GroupElement& g) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (g[i] < lo[i] || g[i] > hi[i]) return false;
        return true;
    }
};

Box bounding_box(const RootSupersystem& s) {
    Box b{std::vector<long>(s.rank(), std::numeric_limits<long>::max()),
          std::vector<long>(s.rank(), std::numeric_limits<long>::min())};
    for (const auto& r : s.roots())
        for (std::size_t i = 0; i < s.rank(); ++i) {
            b.lo[i] = std::min(b.lo[i], r[i]);
            b.hi[i] = std::max(b.hi[i], r[i]);
        }
    return b;
}

void require_real(const RootSupersystem& s, const GroupElement& a) {
    if (a.rank() != s.rank()) throw DimensionError("root of wrong rank");
    if (!s.is_real(a)) throw PreconditionError("root " + a.str() + " is not real");
}

}  // namespace

RootSupersystem::RootSupersystem(SymmetricGroupForm form, std::vector<GroupElement> roots)
    : form_(std::move(form)), roots_(std::move(roots)) {
    for (const auto& r : roots_)
        if (r.rank() != rank()) throw DimensionError("root " + r.str() + " does not have rank " + std::to_string(rank()));
    std::sort(roots_.begin(), roots_.end());
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
    for (const auto& r : roots_) {
        if (is_real(r))
            real_.push_back(r);
        else if (in_radical(r))
            radical_.push_back(r);
        else
            nonsingular_.push_back(r);
    }
}

bool RootSupersystem::contains(const GroupElement& a) const { return std::binary_search(roots_.begin(), roots_.end(), a); }

bool RootSupersystem::in_radical(const GroupElement& a) const {
    return std::all_of(roots_.begin(), roots_.end(), [&](const GroupElement& b) { return pair(a, b).is_zero(); });
}

RootSupersystem classify(std::vector<GroupElement> roots, SymmetricGroupForm form) {
    return RootSupersystem(std::move(form), std::move(roots));
}

Scalar cartan_number(const RootSupersystem& s, const GroupElement& alpha, const GroupElement& beta) {
    require_real(s, alpha);
    return Scalar(2) * s.pair(alpha, beta) / s.pair(alpha, alpha);
}

GroupElement reflect(const RootSupersystem& s, const GroupElement& alpha, const GroupElement& beta) {
    Scalar c = cartan_number(s, alpha, beta);
    if (!c.is_integer()) throw PreconditionError("Cartan number " + c.str() + " is not an integer");
    return beta - c.to_long() * alpha;
}

RootString root_string(const RootSupersystem& s, const GroupElement& alpha, const GroupElement& beta) {
    require_real(s, alpha);
    RootString r;
    r.cartan_number = cartan_number(s, alpha, beta);
    const long cap = 4 * static_cast<long>(std::max<std::size_t>(s.roots().size(), 1));
    const Box box = bounding_box(s);
    for (int dir : {-1, 1}) {
        GroupElement g = beta;
        for (long k = dir > 0 ? 0 : -1;; k += dir) {
            g = beta + k * alpha;
            if (std::labs(k) > cap) {
                if (box.contains(g)) r.capped = true;
                break;
            }
            if (!s.in_window(g)) break;
            if (!box.contains(g)) break;
            if (s.contains(g)) r.ks.push_back(k);
        }
    }
    std::sort(r.ks.begin(), r.ks.end());
    if (r.ks.empty()) return r;
    r.p = -r.ks.front();
    r.q = r.ks.back();
    r.interval = r.p >= 0 && r.q >= 0 && static_cast<long>(r.ks.size()) == r.p + r.q + 1;
    r.fits = s.in_window(beta + (-r.p - 1) * alpha) && s.in_window(beta + (r.q + 1) * alpha);
    r.balanced = Scalar(r.p - r.q) == r.cartan_number;
    return r;
}

RatioResult ratio_check(const RootSupersystem& s, const GroupElement& alpha) {
    require_real(s, alpha);
    RatioResult out;
    const Scalar aa = s.pair(alpha, alpha);
    static const std::vector<Scalar> allowed{Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(1, 2), Scalar(-1, 2)};
    for (const auto& b : s.roots()) {
        // b = kα forces k = (α,b)/(α,α); confirm by comparing coordinates.
        Scalar k = s.pair(alpha, b) / aa;
        bool match = true;
        for (std::size_t i = 0; i < s.rank() && match; ++i) match = k * Scalar(alpha[i]) == Scalar(b[i]);
        if (!match) continue;
        out.ratios.push_back(k);
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) out.offending.push_back(k);
    }
    auto by_value = [](const Scalar& a, const Scalar& b) { return a.real() < b.real(); };
    std::sort(out.ratios.begin(), out.ratios.end(), by_value);
    std::sort(out.offending.begin(), out.offending.end(), by_value);
    return out;
}

Report check_axioms(const RootSupersystem& s) {
    Report r("root supersystem");
    r.params()["rank"] = s.rank();
    r.params()["roots"] = s.roots().size();
    r.params()["real"] = s.real().size();
    r.params()["nonsingular"] = s.nonsingular().size();
    r.params()["radical"] = s.radical().size();
    r.params()["windowed"] = s.has_window();

    const GroupElement zero(s.rank());
    bool has_zero = s.contains(zero);
    std::vector<std::vector<Scalar>> gens;
    for (const auto& g : s.roots()) {
        std::vector<Scalar> v;
        for (long c : g.coords()) v.emplace_back(c);
        gens.push_back(std::move(v));
    }
    LatticeBasis span(gens);
    if (s.ambient() == RootSupersystem::Ambient::container) {
        bool full = span.rank() == s.rank() && span.is_standard();
        r.expect(has_zero && full, "S1", has_zero ? (full ? "0 in R, <R> = Z^n" : "<R> is a proper sublattice") : "0 not in R",
                 {{"span_rank", span.rank()}});
    } else {
        r.expect(has_zero, "S1", has_zero ? "0 in R; A taken as <R>, rank " + std::to_string(span.rank()) : "0 not in R",
                 {{"span_rank", span.rank()}});
    }

    nlohmann::json bad;
    for (const auto& a : s.roots())
        if (s.in_window(-a) && !s.contains(-a)) {
            bad = {{"alpha", coords_json(a)}};
            break;
        }
    r.expect(bad.is_null(), "S2", "R = -R", bad);

    bad = nullptr;
    for (const auto& a : s.real()) {
        for (const auto& b : s.roots()) {
            Scalar c = cartan_number(s, a, b);
            if (!c.is_integer()) {
                bad = {{"alpha", coords_json(a)}, {"beta", coords_json(b)}, {"value", c.str()}};
                break;
            }
        }
        if (!bad.is_null()) break;
    }
    r.expect(bad.is_null(), "S3", "2(a,b)/(a,a) integral", bad);

    bad = nullptr;
    std::size_t strings = 0, partial = 0;
    for (const auto& a : s.real()) {
        for (const auto& b : s.roots()) {
            RootString rs = root_string(s, a, b);
            nlohmann::json w{{"alpha", coords_json(a)}, {"beta", coords_json(b)}, {"ks", rs.ks}};
            if (rs.capped) {
                bad = w;
                bad["reason"] = "string exceeds scan cap";
            } else if (!rs.interval) {
                bad = w;
                bad["reason"] = "gap in string";
            } else if (!rs.fits) {
                ++partial;
                continue;
            } else if (!rs.balanced) {
                bad = w;
                bad["reason"] = "p - q != 2(b,a)/(a,a)";
                bad["cartan_number"] = rs.cartan_number.str();
            }
            if (!bad.is_null()) break;
            ++strings;
        }
        if (!bad.is_null()) break;
    }
    std::string detail = std::to_string(strings) + " complete strings";
    if (partial) detail += ", " + std::to_string(partial) + " leave the window";
    r.expect(bad.is_null(), "S4", detail, bad);

    bad = nullptr;
    std::size_t s5_checked = 0, s5_open = 0;
    for (const auto& a : s.nonsingular()) {
        for (const auto& b : s.roots()) {
            if (s.pair(a, b).is_zero()) continue;
            GroupElement lo = b - a, hi = b + a;
            if (s.contains(lo) || s.contains(hi)) {
                ++s5_checked;
            } else if (s.in_window(lo) && s.in_window(hi)) {
                bad = {{"alpha", coords_json(a)}, {"beta", coords_json(b)}};
                break;
            } else {
                ++s5_open;
            }
        }
        if (!bad.is_null()) break;
    }
    detail = std::to_string(s5_checked) + " nonorthogonal pairs";
    if (s5_open) detail += ", " + std::to_string(s5_open) + " undecided at the window edge";
    r.expect(bad.is_null(), "S5", detail, bad);
    return r;
}

RootSupersystem from_root_values(const std::vector<Weight>& roots, const CartanForm& form,
                                 std::function<bool(const Weight&)> window) {
    LatticeBasis lattice(roots);
    std::vector<std::vector<Scalar>> basis = lattice.basis();
    std::vector<std::vector<Scalar>> gram(basis.size(), std::vector<Scalar>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) gram[i][j] = gram[j][i] = form.pair(basis[i], basis[j]);
    std::vector<GroupElement> coords;
    coords.reserve(roots.size());
    for (const auto& r : roots) coords.push_back(lattice.coordinates(r));
    RootSupersystem s(SymmetricGroupForm(std::move(gram)), std::move(coords));
    if (window) {
        s.set_window([lattice = std::move(lattice), window = std::move(window)](const GroupElement& g) {
            return window(lattice.embed(g));
        });
    }
    return s;
}

RootSupersystem from_root_datum(const RootDatum& d) {
    if (!d.form) {
        // Only R = {0} makes sense without a form: A = 0.
        if (!std::all_of(d.roots.begin(), d.roots.end(), [](const Weight& w) { return is_zero(w); }))
            throw PreconditionError("root datum has nonzero roots but no form");
        return RootSupersystem(SymmetricGroupForm::zero(0), std::vector<GroupElement>(d.roots.size(), GroupElement(0)));
    }
    return from_root_values(d.roots, *d.form, {});
}

}  // namespace superlie
