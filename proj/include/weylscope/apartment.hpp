#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "type_geometry.hpp"

namespace weylscope {

// Big cell Ω(P,S) of a type-t parabolic P: coordinates are the root functions on Ψ_P.
struct Chart {
    ParabolicSet parabolic;
    int parabolic_id = 0;
    std::vector<int> generators;  // root indices of Ψ_P, increasing
};

// One compactified apartment Ā_t(S,k), with origin at a special point.
class ApartmentContext {
public:
    ApartmentContext(DatumPtr d, TypeLabel t) : datum_(std::move(d)), type_(t), prefan_(prefan_of_type(datum_, t)) {
        auto all = all_parabolics(datum_);
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (all[i].type != t) continue;
            charts_.push_back({all[i].set, static_cast<int>(i), chart_generators(all[i].set).indices()});
        }
    }

    const DatumPtr& datum() const { return datum_; }
    TypeLabel type() const { return type_; }
    const LabeledPrefan& prefan() const { return prefan_; }
    const Prefan& fan() const { return prefan_.fan; }
    const std::vector<Chart>& charts() const { return charts_; }
    const Chart& chart(int i) const { return charts_.at(i); }

    int chart_of(const ParabolicSet& p) const {
        int id = parabolic_id(p);
        for (std::size_t i = 0; i < charts_.size(); ++i)
            if (charts_[i].parabolic_id == id) return static_cast<int>(i);
        throw ChartMismatch("parabolic is not of type " + type_.str());
    }

    int stratum_index(const ParabolicSet& q) const { return prefan_.stratum_of(parabolic_id(q)); }

    // Every prefan cone lies in the cone C_t(P) of some chart.
    bool charts_cover() const {
        std::vector<Cone> maxes;
        for (const auto& ch : charts_) maxes.push_back(type_cone_max(ch.parabolic));
        for (const auto& c : fan().cones())
            if (std::none_of(maxes.begin(), maxes.end(), [&](const Cone& m) { return m.contains_cone(c); }))
                return false;
        return true;
    }

private:
    DatumPtr datum_;
    TypeLabel type_;
    LabeledPrefan prefan_;
    std::vector<Chart> charts_;
};

struct CompactApartmentPoint {
    BoundaryPoint point;
    ParabolicSet stratum;  // t-relevant Q with stratum cone C_t(Q)
};

inline CompactApartmentPoint make_point(const ApartmentContext& ctx, const ParabolicSet& q, const Vec& residual) {
    int s = ctx.stratum_index(q);
    return {make_boundary_point(ctx.fan(), s, residual), q};
}

inline CompactApartmentPoint from_boundary(const ApartmentContext& ctx, const BoundaryPoint& b) {
    return {make_boundary_point(ctx.fan(), b.stratum, b.residual), ctx.prefan().parabolic(b.stratum)};
}

inline CompactApartmentPoint interior_point(const ApartmentContext& ctx, const Vec& u) {
    return make_point(ctx, standard_parabolic(ctx.datum(), TypeLabel::full(ctx.datum()->rank())), u);
}

inline CompactApartmentPoint origin(const ApartmentContext& ctx) {
    return interior_point(ctx, Vec(ctx.datum()->rank(), 0));
}

inline CompactApartmentPoint limit_point(const ApartmentContext& ctx, const Vec& u0, const Vec& v) {
    return from_boundary(ctx, sequence_limit(ctx.fan(), u0, v));
}

inline ExtendedValue eval_root(const ApartmentContext& ctx, const CompactApartmentPoint& x, int root) {
    return eval_at_boundary(ctx.fan(), x.point, ctx.datum()->root(root));
}

inline std::vector<ExtendedValue> generator_values(const ApartmentContext& ctx, const CompactApartmentPoint& x,
                                                   const Chart& ch) {
    std::vector<ExtendedValue> out;
    for (int k : ch.generators) out.push_back(eval_root(ctx, x, k));
    return out;
}

inline bool chart_membership(const ApartmentContext& ctx, const CompactApartmentPoint& x, const Chart& ch) {
    for (int k : ch.generators) {
        try {
            if (!(eval_root(ctx, x, k) <= ExtendedValue(0))) return false;
        } catch (const Indeterminate&) {
            return false;
        }
    }
    return true;
}

inline bool chart_membership(const ApartmentContext& ctx, const CompactApartmentPoint& x, const ParabolicSet& p) {
    return chart_membership(ctx, x, ctx.chart(ctx.chart_of(p)));
}

// First chart in enumeration order accepting x.
inline int accepting_chart(const ApartmentContext& ctx, const CompactApartmentPoint& x) {
    for (std::size_t i = 0; i < ctx.charts().size(); ++i)
        if (chart_membership(ctx, x, ctx.chart(static_cast<int>(i)))) return static_cast<int>(i);
    throw Error("no chart accepts the point");
}

// Log-domain polynomial: coefficient magnitudes only, so sums are max and products add.
// The character part is used by the group big cell and is empty in flag-variety charts.
struct Monomial {
    IVec character;
    std::map<int, std::int64_t> exponents;  // root index ↦ n
    ExtendedValue log_coeff;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class TropicalPolynomial {
public:
    TropicalPolynomial() = default;
    explicit TropicalPolynomial(std::vector<Monomial> ms) {
        for (auto& m : ms) add(std::move(m));
    }

    static TropicalPolynomial constant(ExtendedValue c) { return TropicalPolynomial({Monomial{{}, {}, std::move(c)}}); }
    static TropicalPolynomial generator(int root, ExtendedValue c = 0) {
        return TropicalPolynomial({Monomial{{}, {{root, 1}}, std::move(c)}});
    }

    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool is_zero() const {
        return std::all_of(monomials_.begin(), monomials_.end(), [](const Monomial& m) { return m.log_coeff.is_neg_inf(); });
    }

    void add(Monomial m) {
        if (m.log_coeff.is_pos_inf()) throw ValidationError("coefficient +inf");
        for (auto it = m.exponents.begin(); it != m.exponents.end();) {
            if (it->second < 0) throw ValidationError("negative exponent");
            it = it->second == 0 ? m.exponents.erase(it) : std::next(it);
        }
        for (auto& e : monomials_)
            if (e.character == m.character && e.exponents == m.exponents) {
                e.log_coeff = max(e.log_coeff, m.log_coeff);
                return;
            }
        monomials_.push_back(std::move(m));
    }

    friend TropicalPolynomial operator+(const TropicalPolynomial& f, const TropicalPolynomial& g) {
        TropicalPolynomial r = f;
        for (const auto& m : g.monomials_) r.add(m);
        return r;
    }

    friend TropicalPolynomial operator*(const TropicalPolynomial& f, const TropicalPolynomial& g) {
        TropicalPolynomial r;
        for (const auto& a : f.monomials_)
            for (const auto& b : g.monomials_) {
                Monomial m{a.character, a.exponents, a.log_coeff + b.log_coeff};
                if (m.character.empty()) m.character = b.character;
                else if (!b.character.empty())
                    for (std::size_t i = 0; i < m.character.size(); ++i) m.character[i] += b.character[i];
                for (const auto& [k, n] : b.exponents) m.exponents[k] += n;
                r.add(std::move(m));
            }
        return r;
    }

private:
    std::vector<Monomial> monomials_;
};

inline ExtendedValue evaluate(const TropicalPolynomial& f, const std::function<ExtendedValue(int)>& value_of) {
    ExtendedValue best = ExtendedValue::neg_inf();
    for (const auto& m : f.monomials()) {
        ExtendedValue v = m.log_coeff;
        for (const auto& [k, n] : m.exponents) {
            if (v.is_neg_inf()) break;
            v = v + value_of(k).times(n);
        }
        best = max(best, v);
    }
    return best;
}

inline ExtendedValue seminorm_eval(const ApartmentContext& ctx, const CompactApartmentPoint& x,
                                   const TropicalPolynomial& f, const Chart& ch) {
    if (!chart_membership(ctx, x, ch)) throw ChartMismatch("point outside the chart");
    std::map<int, ExtendedValue> values;
    for (int k : ch.generators) values.emplace(k, eval_root(ctx, x, k));
    for (const auto& m : f.monomials()) {
        if (!m.character.empty()) throw ChartMismatch("character monomial in a flag-variety chart");
        for (const auto& [k, n] : m.exponents)
            if (!values.count(k)) throw ChartMismatch("root " + std::to_string(k) + " is not a chart generator");
    }
    return evaluate(f, [&](int k) { return values.at(k); });
}

inline ExtendedValue seminorm_eval(const ApartmentContext& ctx, const CompactApartmentPoint& x,
                                   const TropicalPolynomial& f, const ParabolicSet& p) {
    return seminorm_eval(ctx, x, f, ctx.chart(ctx.chart_of(p)));
}

// Norm on the group big cell U^op × T × U at an interior point.
inline ExtendedValue group_seminorm_eval(const RootDatum& d, const Vec& u, const TropicalPolynomial& f) {
    for (const auto& m : f.monomials())
        for (const auto& [k, n] : m.exponents)
            if (k < 0 || k >= d.num_roots()) throw ValidationError("root index out of range");
    return evaluate(f, [&](int k) { return ExtendedValue(dot(d.root(k), u)); });
}

// A generator of Ψ_P vanishing at x, if any.
inline std::optional<int> norm_witness(const ApartmentContext& ctx, const CompactApartmentPoint& x, const Chart& ch) {
    if (!chart_membership(ctx, x, ch)) throw ChartMismatch("point outside the chart");
    for (int k : ch.generators)
        if (eval_root(ctx, x, k).is_neg_inf()) return k;
    return std::nullopt;
}

inline bool is_norm(const ApartmentContext& ctx, const CompactApartmentPoint& x, const Chart& ch) {
    return !norm_witness(ctx, x, ch).has_value();
}

// The stratum read off from which generators of an accepting chart vanish: the face of C_t(P)
// cut out by the generators with finite value.
inline ParabolicSet stratum_of(const ApartmentContext& ctx, const CompactApartmentPoint& x) {
    const Chart& ch = ctx.chart(accepting_chart(ctx, x));
    const RootDatum& d = *ctx.datum();
    std::vector<Functional> ineqs, eqs;
    for (int k : ch.generators) {
        ineqs.push_back(d.root(k));
        if (eval_root(ctx, x, k).finite()) eqs.push_back(d.root(k));
    }
    auto s = ctx.fan().find(Cone(d.rank(), ineqs, eqs));
    if (!s) throw Error("vanishing pattern does not match a stratum");
    return ctx.prefan().parabolic(*s);
}

struct StratumApartment {
    DatumPtr residual;         // root datum of the stratum, possibly of rank 0
    std::vector<int> simple;   // roots of Q playing the simple roots of the residual datum
};

inline StratumApartment stratum_apartment(const ApartmentContext& ctx, const ParabolicSet& q) {
    auto rel = relevance(q, ctx.type());
    if (!rel.is_relevant) throw ValidationError("stratum_apartment requires a t-relevant parabolic");
    const RootDatum& d = *ctx.datum();
    auto sp = standard_position(q);
    WeylElement back = d.inverse(sp.w);
    std::vector<int> idx;
    for (int b = 0; b < d.rank(); ++b)
        if (rel.active_components.contains(d.root_image(back, b))) idx.push_back(b);
    RootDatum::Cartan c(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) c[i][j] = d.cartan(idx[i], idx[j]);
    StratumApartment out;
    out.residual = RootDatum::from_cartan(std::move(c), "residual");
    for (int b : idx) out.simple.push_back(d.root_image(back, b));
    return out;
}

// Coordinates of the residual of x in the stratum apartment.
inline Vec residual_coordinates(const ApartmentContext& ctx, const CompactApartmentPoint& x) {
    auto sa = stratum_apartment(ctx, x.stratum);
    Vec y;
    for (int k : sa.simple) y.push_back(dot(ctx.datum()->root(k), x.point.residual));
    return y;
}

inline CompactApartmentPoint embed_stratum(const ApartmentContext& ctx, const Vec& y, const ParabolicSet& q) {
    auto sa = stratum_apartment(ctx, q);
    if (y.size() != sa.simple.size()) throw ValidationError("residual point of wrong dimension");
    const int n = ctx.datum()->rank();
    std::vector<Vec> a;
    for (int k : sa.simple) a.push_back(to_vec(ctx.datum()->root(k)));
    auto u = solve(a, y, n);
    if (!u) throw Error("stratum coordinates are inconsistent");
    return make_point(ctx, q, *u);
}

inline void check_type_order(TypeLabel t, TypeLabel t2) {
    if (!t.subset_of(t2)) throw TypeOrderViolation("type " + t.str() + " is not below " + t2.str());
}

// Restricts the generator values of an accepting chart P to Ψ_{P′}, P′ ⊇ P of type t′.
inline CompactApartmentPoint project(const ApartmentContext& from, const ApartmentContext& to,
                                     const CompactApartmentPoint& x) {
    if (from.datum() != to.datum()) throw ValidationError("apartments over different root data");
    check_type_order(from.type(), to.type());
    const RootDatum& d = *from.datum();
    const Chart& ch = from.chart(accepting_chart(from, x));
    auto sp = standard_position(ch.parabolic);
    ParabolicSet p2 = act(d.inverse(sp.w), standard_parabolic(from.datum(), to.type()));
    const Chart& ch2 = to.chart(to.chart_of(p2));
    std::vector<Functional> ineqs, eqs;
    for (int k : ch2.generators) {
        ineqs.push_back(d.root(k));
        if (eval_root(from, x, k).finite()) eqs.push_back(d.root(k));
    }
    auto s = to.fan().find(Cone(d.rank(), ineqs, eqs));
    if (!s) throw Error("restricted values do not match a stratum");
    return {make_boundary_point(to.fan(), *s, x.point.residual), to.prefan().parabolic(*s)};
}

struct StabilizerProfile {
    ParabolicSet stratum;
    RootSet full_unipotent;
    RootSet full_levi;
    std::map<int, Rational> filtered;  // root index ↦ level
    std::string normalizer_note;
};

inline StabilizerProfile stabilizer_profile(const ApartmentContext& ctx, const CompactApartmentPoint& x) {
    ParabolicSet q = stratum_of(ctx, x);
    auto rt = rt_decomposition(q, ctx.type());
    StabilizerProfile p{q, unipotent_radical_roots(q), rt.nonvanishing, {}, "N(k)_x"};
    for (int k : rt.vanishing.indices()) p.filtered[k] = -dot(ctx.datum()->root(k), x.point.residual);
    return p;
}

// Image of u in V/⟨𝔠(Q)⟩, in the coordinates ⟨u,β⟩ for β the simple roots of L_Q.
inline Vec levi_projection(const Vec& u, const ParabolicSet& q) {
    const RootDatum& d = *q.datum;
    auto sp = standard_position(q);
    WeylElement back = d.inverse(sp.w);
    Vec out;
    for (int b : sp.type.indices()) out.push_back(dot(d.root(d.root_image(back, b)), u));
    return out;
}

}  // namespace weylscope
