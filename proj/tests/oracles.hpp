#pragma once

#include <optional>
#include <random>

#include "weylscope/gl_models.hpp"

// Brute-force references and generators shared by the unit tests and the acceptance driver.
namespace weylscope::oracle {

inline bool same_cone(const Cone& a, const Cone& b) { return a.contains_cone(b) && b.contains_cone(a); }

inline std::vector<Cone> type_cones(const DatumPtr& d, TypeLabel t) {
    std::vector<Cone> out;
    for (const auto& tp : all_parabolics(d)) out.push_back(type_cone(tp.set, t).cone);
    return out;
}

// Largest Q′ ⊇ Q with C_t(Q′) = C_t(Q), by search over all parabolics.
inline RootSet maximal_same_cone(const std::vector<TaggedParabolic>& all, const std::vector<Cone>& cones, int q) {
    RootSet best = all[q].set.members;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[q].set.members.subset_of(all[i].set.members) && same_cone(cones[i], cones[q]))
            best = best | all[i].set.members;
    return best;
}

inline TypeLabel all_but(int d, int r) { return TypeLabel{TypeLabel::full(d).mask & ~(std::uint64_t{1} << r)}; }

inline std::vector<TypeLabel> all_types(int rank) {
    std::vector<TypeLabel> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << rank); ++m) out.push_back(TypeLabel{m});
    return out;
}

inline Vec random_vec(std::mt19937& rng, int n, int bound = 4) {
    Vec v(n);
    for (auto& x : v) x = Rational(static_cast<int>(rng() % (2 * bound + 1)) - bound, 1 + static_cast<int>(rng() % 3));
    return v;
}

inline TropicalPolynomial random_poly(std::mt19937& rng, const std::vector<int>& gens) {
    std::vector<Monomial> ms(1 + rng() % 4);
    for (auto& m : ms) {
        m.log_coeff = rng() % 6 == 0 ? ExtendedValue::neg_inf() : ExtendedValue(Rational(static_cast<int>(rng() % 9) - 4, 1 + rng() % 2));
        for (int k : gens)
            if (rng() % 2) m.exponents[k] = static_cast<std::int64_t>(rng() % 3);
    }
    return TropicalPolynomial(ms);
}

// lim_n max_ν (c_ν + Σ ν(α)⟨u0 + n·v, α⟩), from slopes and intercepts.
inline ExtendedValue symbolic_limit(const RootDatum& d, const TropicalPolynomial& f, const Vec& u0, const Vec& v) {
    std::optional<Rational> best_slope;
    ExtendedValue best = ExtendedValue::neg_inf();
    for (const auto& m : f.monomials()) {
        if (m.log_coeff.is_neg_inf()) continue;
        Rational slope = 0, icpt = m.log_coeff.value();
        for (const auto& [k, n] : m.exponents) {
            slope += n * dot(d.root(k), v);
            icpt += n * dot(d.root(k), u0);
        }
        if (!best_slope || *best_slope < slope) {
            best_slope = slope;
            best = icpt;
        } else if (*best_slope == slope) {
            best = max(best, ExtendedValue(icpt));
        }
    }
    if (!best_slope) return ExtendedValue::neg_inf();
    if (*best_slope > 0) return ExtendedValue::pos_inf();
    if (*best_slope < 0) return ExtendedValue::neg_inf();
    return best;
}

// lim_n ⟨u0 + n·v, φ⟩.
inline ExtendedValue ray_limit(const Vec& u0, const Vec& v, const Functional& phi) {
    Rational slope = dot(phi, v);
    if (slope > 0) return ExtendedValue::pos_inf();
    if (slope < 0) return ExtendedValue::neg_inf();
    return dot(phi, u0);
}

}  // namespace weylscope::oracle
