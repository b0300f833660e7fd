#pragma once

#include <map>
#include <vector>

#include "parabolic.hpp"
#include "polyfan.hpp"

namespace weylscope {

inline Functional root_functional(const RootDatum& d, int k) { return d.root(k); }

// Weyl cone 𝔠(P): α ⩽ 1 on Φ(P^op), i.e. ⟨u,α⟩ <= 0 on −Φ(rad^u P), with equality on the Levi roots.
inline Cone weyl_cone(const ParabolicSet& p) {
    const RootDatum& d = *p.datum;
    std::vector<Functional> ineqs, eqs;
    RootSet levi = levi_roots(p);
    for (int k : levi.indices())
        if (d.is_positive(k)) eqs.push_back(root_functional(d, k));
    for (int k : unipotent_radical_roots(p).indices()) ineqs.push_back(root_functional(d, d.negate(k)));
    return Cone(d.rank(), ineqs, eqs);
}

// Cones of a prefan on V, each labeled by the parabolic (id in all_parabolics) indexing it.
struct LabeledPrefan {
    DatumPtr datum;
    TypeLabel type;
    Prefan fan;
    std::vector<int> parabolic_ids;
    std::map<int, int> stratum_by_id;

    int stratum_of(int parabolic_id) const {
        auto it = stratum_by_id.find(parabolic_id);
        if (it == stratum_by_id.end()) throw ValidationError("parabolic " + std::to_string(parabolic_id) + " does not index a stratum");
        return it->second;
    }
    ParabolicSet parabolic(int stratum) const { return parabolic_by_id(datum, parabolic_ids.at(stratum)); }
};

inline LabeledPrefan weyl_fan(const DatumPtr& d) {
    LabeledPrefan out;
    out.datum = d;
    std::vector<Cone> cones;
    auto all = all_parabolics(d);
    for (std::size_t i = 0; i < all.size(); ++i) {
        out.stratum_by_id[static_cast<int>(i)] = static_cast<int>(cones.size());
        out.parabolic_ids.push_back(static_cast<int>(i));
        cones.push_back(weyl_cone(all[i].set));
    }
    out.fan = Prefan(d->rank(), std::move(cones));
    return out;
}

// Ψ_P = Φ(rad^u(P^op)) = −Φ(rad^u P).
inline RootSet chart_generators(const ParabolicSet& p) { return negate(*p.datum, unipotent_radical_roots(p)); }

// C_t(P) for P of type t: α ⩽ 1 on Ψ_P.
inline Cone type_cone_max(const ParabolicSet& p) {
    const RootDatum& d = *p.datum;
    std::vector<Functional> ineqs;
    for (int k : chart_generators(p).indices()) ineqs.push_back(root_functional(d, k));
    return Cone(d.rank(), ineqs, {});
}

// The type-t parabolic containing a minimal parabolic inside Q (osculatory with Q).
inline ParabolicSet osculatory_of_type(const ParabolicSet& q, TypeLabel t) {
    auto sp = standard_position(q);
    WeylElement back = q.datum->inverse(sp.w);
    return act(back, standard_parabolic(q.datum, t));
}

struct TypeCone {
    Cone cone;
    ParabolicSet source;
    TypeLabel type;
};

// C_t(Q): α ⩽ 1 on Ψ_P and α = 1 on Ψ_P ∩ Φ(L_Q), for P of type t osculatory with Q.
inline TypeCone type_cone(const ParabolicSet& q, TypeLabel t) {
    const RootDatum& d = *q.datum;
    ParabolicSet p = osculatory_of_type(q, t);
    RootSet psi = chart_generators(p);
    RootSet levi = levi_roots(q);
    std::vector<Functional> ineqs, eqs;
    for (int k : psi.indices()) {
        ineqs.push_back(root_functional(d, k));
        if (levi.contains(k)) eqs.push_back(root_functional(d, k));
    }
    return {Cone(d.rank(), ineqs, eqs), q, t};
}

struct RelevanceReport {
    ParabolicSet query;
    TypeLabel type;
    bool is_relevant = false;
    ParabolicSet minimal_relevant;
    RootSet active_components;              // Ỹ_Q, carried back from standard position
    std::vector<Functional> span_equalities;  // ⟨C_t(Q)⟩ = {α = 0 : α ∈ Ỹ_Q}
    bool dims_equal = false;
};

inline RelevanceReport relevance(const ParabolicSet& q, TypeLabel t) {
    const RootDatum& d = *q.datum;
    auto sp = standard_position(q);
    WeylElement back = d.inverse(sp.w);
    const TypeLabel yq = sp.type;
    const TypeLabel outside{TypeLabel::full(d.rank()).mask & ~t.mask};  // Δ − Y_P

    TypeLabel active;
    bool dims_equal = true;
    for (TypeLabel comp : d.components(yq)) {
        if (comp.mask & outside.mask) active.mask |= comp.mask;
        if ((comp.mask & ~t.mask) == 0) dims_equal = false;  // component misses Y_Q − Y_P
    }
    auto orthogonal_to_active = [&](int a) {
        for (int b : active.indices())
            if (d.cartan(a, b) != 0 || a == b) return false;
        return true;
    };
    TypeLabel completed = yq;
    bool relevant = true;
    for (int a : t.indices())
        if (orthogonal_to_active(a)) {
            if (!yq.contains(a)) relevant = false;
            completed.mask |= std::uint64_t{1} << a;
        }

    RelevanceReport r;
    r.query = q;
    r.type = t;
    r.is_relevant = relevant;
    r.minimal_relevant = act(back, standard_parabolic(q.datum, completed));
    r.active_components = d.empty_set();
    for (int b : active.indices()) {
        int k = d.root_image(back, b);
        r.active_components.insert(k);
        r.span_equalities.push_back(root_functional(d, k));
    }
    r.dims_equal = dims_equal;
    return r;
}

inline bool is_relevant(const ParabolicSet& q, TypeLabel t) { return relevance(q, t).is_relevant; }
inline ParabolicSet minimal_relevant(const ParabolicSet& q, TypeLabel t) { return relevance(q, t).minimal_relevant; }
inline std::vector<Functional> span_equalities(const ParabolicSet& q, TypeLabel t) { return relevance(q, t).span_equalities; }
inline bool dims_equal(const ParabolicSet& q, TypeLabel t) { return relevance(q, t).dims_equal; }

// F_t: the cones C_t(Q) over t-relevant Q, labeled by Q.
inline LabeledPrefan prefan_of_type(const DatumPtr& d, TypeLabel t) {
    LabeledPrefan out;
    out.datum = d;
    out.type = t;
    std::vector<Cone> cones;
    auto all = all_parabolics(d);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (!is_relevant(all[i].set, t)) continue;
        out.stratum_by_id[static_cast<int>(i)] = static_cast<int>(cones.size());
        out.parabolic_ids.push_back(static_cast<int>(i));
        cones.push_back(type_cone(all[i].set, t).cone);
    }
    out.fan = Prefan(d->rank(), std::move(cones));
    return out;
}

// Checks that `candidate` is the union of the Weyl cones 𝔠(Q), Q ⊆ P: every such cone lies in it,
// and every chamber outside P meets it in a lower-dimensional set.
inline bool union_matches(const Cone& candidate, const ParabolicSet& p) {
    const int n = p.datum->rank();
    if (candidate.dim() != n) return false;
    for (const auto& tp : all_parabolics(p.datum)) {
        bool inside = tp.set.members.subset_of(p.members);
        if (inside) {
            if (!candidate.contains_cone(weyl_cone(tp.set))) return false;
        } else if (tp.type.mask == 0) {
            Cone chamber = weyl_cone(tp.set);
            auto ineqs = chamber.inequalities();
            ineqs.insert(ineqs.end(), candidate.inequalities().begin(), candidate.inequalities().end());
            auto eqs = chamber.equalities();
            eqs.insert(eqs.end(), candidate.equalities().begin(), candidate.equalities().end());
            if (Cone(n, ineqs, eqs).dim() == n) return false;
        }
    }
    return true;
}

inline bool union_weyl_oracle(const ParabolicSet& p) { return union_matches(type_cone_max(p), p); }

struct RtDecomposition {
    RootSet nonvanishing;  // Levi roots not identically zero on C_t(Q)
    RootSet vanishing;
};

inline RtDecomposition rt_decomposition(const ParabolicSet& q, TypeLabel t) {
    if (!is_relevant(q, t)) throw ValidationError("rt_decomposition requires a t-relevant parabolic");
    const RootDatum& d = *q.datum;
    Cone c = type_cone(q, t).cone;
    RtDecomposition r{d.empty_set(), d.empty_set()};
    for (int k : levi_roots(q).indices()) {
        if (c.vanishes_on_span(root_functional(d, k)))
            r.vanishing.insert(k);
        else
            r.nonvanishing.insert(k);
    }
    return r;
}

struct TypeSupport {
    std::vector<TypeLabel> nontrivial;  // components meeting Δ − Y_t
    std::vector<TypeLabel> trivial;     // components inside Y_t
    std::vector<Vec> lineality;         // Λ(S″): common lineality of the cones C_t(P)
};

inline TypeSupport type_support(const RootDatum& d, TypeLabel t) {
    TypeSupport s;
    std::vector<Functional> rows;
    for (TypeLabel comp : d.components()) {
        if (comp.subset_of(t)) {
            s.trivial.push_back(comp);
        } else {
            s.nontrivial.push_back(comp);
            for (int i : comp.indices()) rows.push_back(root_functional(d, i));
        }
    }
    s.lineality = nullspace(rref(rows, d.rank()));
    return s;
}

inline bool is_degenerate(const RootDatum& d, TypeLabel t) { return !type_support(d, t).trivial.empty(); }

}  // namespace weylscope
