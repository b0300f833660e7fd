#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "root_datum.hpp"

namespace weylscope {

// Root subset Φ(P,S) of a parabolic subgroup containing the fixed maximal split torus.
struct ParabolicSet {
    DatumPtr datum;
    RootSet members;

    bool contains(int k) const { return members.contains(k); }
    friend bool operator==(const ParabolicSet& a, const ParabolicSet& b) { return a.members == b.members; }
};

inline bool is_closed(const RootDatum& d, const RootSet& s) {
    auto idx = s.indices();
    for (int a : idx)
        for (int b : idx) {
            int c = d.sum(a, b);
            if (c >= 0 && !s.contains(c)) return false;
        }
    return true;
}

inline bool is_generating(const RootDatum& d, const RootSet& s) {
    for (int k = 0; k < d.num_roots(); ++k)
        if (!s.contains(k) && !s.contains(d.negate(k))) return false;
    return true;
}

inline bool is_parabolic(const RootDatum& d, const RootSet& s) { return is_closed(d, s) && is_generating(d, s); }

inline ParabolicSet make_parabolic(DatumPtr d, RootSet s) {
    if (!is_parabolic(*d, s)) throw ValidationError("root subset is not closed and generating");
    return ParabolicSet{std::move(d), std::move(s)};
}

// Φ⁺ together with the negative roots supported on Y.
inline ParabolicSet standard_parabolic(const DatumPtr& d, TypeLabel y) {
    RootSet s = d->positive_roots();
    for (int k = d->num_positive(); k < d->num_roots(); ++k)
        if (d->support(d->root(k)).subset_of(y)) s.insert(k);
    return ParabolicSet{d, s};
}

inline RootSet levi_roots(const ParabolicSet& p) {
    RootSet s = p.datum->empty_set();
    for (int k : p.members.indices())
        if (p.members.contains(p.datum->negate(k))) s.insert(k);
    return s;
}

inline RootSet unipotent_radical_roots(const ParabolicSet& p) { return p.members - levi_roots(p); }

inline RootSet negate(const RootDatum& d, const RootSet& s) {
    RootSet out = d.empty_set();
    for (int k : s.indices()) out.insert(d.negate(k));
    return out;
}

inline ParabolicSet opposite(const ParabolicSet& p) {
    return ParabolicSet{p.datum, levi_roots(p) | negate(*p.datum, unipotent_radical_roots(p))};
}

inline bool is_osculatory(const ParabolicSet& p, const ParabolicSet& q) {
    return is_parabolic(*p.datum, p.members & q.members);
}

inline RootSet act(const RootDatum& d, const WeylElement& w, const RootSet& s) {
    RootSet out = d.empty_set();
    for (int k : s.indices()) out.insert(d.root_image(w, k));
    return out;
}

inline ParabolicSet act(const WeylElement& w, const ParabolicSet& p) {
    return ParabolicSet{p.datum, act(*p.datum, w, p.members)};
}

struct StandardPosition {
    WeylElement w;  // act(w, P) is standard of type `type`
    TypeLabel type;
};

// The minimal-length w with act(w,P) ⊇ Φ⁺, written as its ShortLex-least reduced word.
// Each step fixes one positive root missing from P, so no Weyl enumeration is needed.
inline StandardPosition standard_position(const ParabolicSet& p) {
    const RootDatum& d = *p.datum;
    WeylElement w = d.identity();
    RootSet cur = p.members;
    for (;;) {
        int missing = -1;
        for (int i = 0; i < d.rank(); ++i)
            if (!cur.contains(i)) {
                missing = i;
                break;
            }
        if (missing < 0) break;
        WeylElement s = d.reflection(missing);
        cur = act(d, s, cur);
        w = d.compose(s, w);
    }
    TypeLabel y;
    for (int i = 0; i < d.rank(); ++i)
        if (cur.contains(d.negate(i))) y.mask |= std::uint64_t{1} << i;
    return {d.canonical(w), y};
}

inline TypeLabel type_of(const ParabolicSet& p) { return standard_position(p).type; }

inline bool is_standard(const ParabolicSet& p) { return p.datum->positive_roots().subset_of(p.members); }

struct TaggedParabolic {
    ParabolicSet set;
    TypeLabel type;
    WeylElement conjugator;  // act(conjugator, set) is standard
};

namespace detail {

struct ParabolicCatalog {
    std::vector<RootSet> sets;
    std::vector<TypeLabel> types;
    std::vector<WeylElement> conjugators;
    std::unordered_map<RootSet, int, RootSetHash> index;
};

inline std::shared_ptr<const ParabolicCatalog> build_catalog(const RootDatum& d) {
    auto g = d.weyl_group();
    auto cat = std::make_shared<ParabolicCatalog>();
    DatumPtr self = d.ptr();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.rank()); ++mask) {
        ParabolicSet std_p = standard_parabolic(self, TypeLabel{mask});
        for (std::size_t e = 0; e < g->elements.size(); ++e) {
            RootSet img = d.empty_set();
            for (int k : std_p.members.indices()) img.insert(g->perms[e][k]);
            if (cat->index.count(img)) continue;
            cat->index[img] = static_cast<int>(cat->sets.size());
            auto sp = standard_position(ParabolicSet{self, img});
            cat->sets.push_back(img);
            cat->types.push_back(sp.type);
            cat->conjugators.push_back(sp.w);
        }
    }
    return cat;
}

inline std::shared_ptr<const ParabolicCatalog> catalog(const RootDatum& d) {
    d.check_cap();
    auto& c = d.cache();
    {
        std::lock_guard<std::mutex> lock(c.mutex);
        if (c.catalog) return c.catalog;
    }
    auto built = build_catalog(d);
    std::lock_guard<std::mutex> lock(c.mutex);
    if (!c.catalog) c.catalog = built;
    return c.catalog;
}

}  // namespace detail

// Every closed generating subset of Φ, grouped by type (Y as a bitmask, increasing) and, within
// a type, in ShortLex order of the first Weyl element producing it from the standard one.
inline std::vector<TaggedParabolic> all_parabolics(const DatumPtr& d) {
    auto cat = detail::catalog(*d);
    std::vector<TaggedParabolic> out;
    out.reserve(cat->sets.size());
    for (std::size_t i = 0; i < cat->sets.size(); ++i)
        out.push_back({ParabolicSet{d, cat->sets[i]}, cat->types[i], cat->conjugators[i]});
    return out;
}

// Position of P in all_parabolics.
inline int parabolic_id(const ParabolicSet& p) {
    auto cat = detail::catalog(*p.datum);
    auto it = cat->index.find(p.members);
    if (it == cat->index.end()) throw ValidationError("not a parabolic subset");
    return it->second;
}

inline ParabolicSet parabolic_by_id(const DatumPtr& d, int id) {
    auto cat = detail::catalog(*d);
    if (id < 0 || id >= static_cast<int>(cat->sets.size()))
        throw ValidationError("parabolic id " + std::to_string(id) + " out of range");
    return ParabolicSet{d, cat->sets[id]};
}

}  // namespace weylscope
