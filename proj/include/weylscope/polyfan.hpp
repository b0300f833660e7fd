#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "lp.hpp"

namespace weylscope {

using Functional = IVec;

inline constexpr int kFaceDimCap = 12;

// max φ·u over {ineqs·u <= 0, eqs·u = 0, φ·u <= 1}; the value is 0 or 1 for a cone.
inline lp::Result max_on_cone(int n, const std::vector<Functional>& ineqs, const std::vector<Functional>& eqs,
                              const Vec& phi) {
    lp::Program p;
    p.n = n;
    for (const auto& a : ineqs) p.add_le(to_vec(a), 0);
    for (const auto& a : eqs) p.add_eq(to_vec(a), 0);
    p.add_le(phi, 1);
    p.objective = phi;
    return lp::solve(p);
}

// Cone description in canonical form: reduced-echelon equalities (primitive integer rows) and
// irredundant facet functionals reduced modulo the equalities, sorted.
struct CanonicalCone {
    std::vector<Functional> equalities;
    std::vector<Functional> facets;
    friend bool operator==(const CanonicalCone&, const CanonicalCone&) = default;
    friend auto operator<=>(const CanonicalCone&, const CanonicalCone&) = default;
};

// {u : ⟨u,φ⟩ <= 0 for inequalities, ⟨u,ψ⟩ = 0 for equalities}.
class Cone {
public:
    Cone() = default;
    Cone(int n, std::vector<Functional> ineqs, std::vector<Functional> eqs = {})
        : n_(n), ineqs_(std::move(ineqs)), eqs_(std::move(eqs)) {
        for (const auto& f : ineqs_)
            if (static_cast<int>(f.size()) != n) throw ValidationError("functional of wrong dimension");
        for (const auto& f : eqs_)
            if (static_cast<int>(f.size()) != n) throw ValidationError("functional of wrong dimension");
        analyze();
    }

    static Cone whole_space(int n) { return Cone(n, {}, {}); }

    int ambient_dim() const { return n_; }
    const std::vector<Functional>& inequalities() const { return ineqs_; }
    const std::vector<Functional>& equalities() const { return eqs_; }

    int dim() const { return a_->dim; }
    const CanonicalCone& canonical() const { return a_->canonical; }
    // Functionals vanishing on the cone (equalities plus implicit ones), reduced echelon form.
    const Echelon& annihilator() const { return a_->annihilator; }
    // Basis of the linear span ⟨C⟩, reduced echelon form.
    const Echelon& span() const { return a_->span; }
    const std::vector<Vec>& lineality() const { return a_->lineality; }
    const Vec& interior_point() const { return a_->relint; }

    bool is_strictly_convex() const { return a_->lineality.empty(); }

    bool contains(const Vec& u) const {
        for (const auto& f : ineqs_)
            if (dot(f, u) > 0) return false;
        for (const auto& f : eqs_)
            if (dot(f, u) != 0) return false;
        return true;
    }

    bool in_relative_interior(const Vec& u) const {
        for (const auto& row : a_->annihilator.rows)
            if (dot(row, u) != 0) return false;
        for (const auto& f : a_->canonical.facets)
            if (dot(f, u) >= 0) return false;
        return true;
    }

    bool vanishes_on_span(const Functional& phi) const { return a_->annihilator.contains(phi); }

    // Canonical representative of u + ⟨C⟩.
    Vec reduce_mod_span(const Vec& u) const { return a_->span.reduce(u); }

    bool contains_cone(const Cone& other) const {
        if (!contains(other.interior_point())) return false;
        for (const auto& f : ineqs_)
            if (max_on_cone(n_, other.ineqs_, other.eqs_, to_vec(f)).value > 0) return false;
        for (const auto& f : eqs_) {
            if (max_on_cone(n_, other.ineqs_, other.eqs_, to_vec(f)).value > 0) return false;
            IVec g = f;
            for (auto& x : g) x = -x;
            if (max_on_cone(n_, other.ineqs_, other.eqs_, to_vec(g)).value > 0) return false;
        }
        return true;
    }

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.n_ == b.n_ && a.canonical() == b.canonical();
    }

private:
    struct Analysis {
        int dim = 0;
        CanonicalCone canonical;
        Echelon annihilator;
        Echelon span;
        std::vector<Vec> lineality;
        Vec relint;
    };

    void analyze() {
        auto a = std::make_shared<Analysis>();
        const int m = static_cast<int>(ineqs_.size());

        // Implicit equalities and a relative interior point.
        std::vector<bool> strict(m, false);
        a->relint.assign(n_, 0);
        for (int i = 0; i < m; ++i) {
            if (strict[i]) continue;
            Vec neg(n_);
            for (int j = 0; j < n_; ++j) neg[j] = -ineqs_[i][j];
            auto r = max_on_cone(n_, ineqs_, eqs_, neg);
            if (r.status != lp::Status::Optimal || r.value <= 0) continue;
            for (int j = 0; j < n_; ++j) a->relint[j] += r.x[j];
            for (int k = 0; k < m; ++k)
                if (dot(ineqs_[k], r.x) < 0) strict[k] = true;
        }
        std::vector<Functional> vanishing = eqs_;
        for (int i = 0; i < m; ++i)
            if (!strict[i]) vanishing.push_back(ineqs_[i]);
        a->annihilator = rref(vanishing, n_);
        a->dim = n_ - a->annihilator.rank();
        for (const auto& row : a->annihilator.rows) a->canonical.equalities.push_back(primitive(row));
        auto sb = nullspace(a->annihilator);
        a->span = rref(sb, n_);

        std::vector<Functional> all = eqs_;
        all.insert(all.end(), ineqs_.begin(), ineqs_.end());
        a->lineality = nullspace(rref(all, n_));

        std::set<Functional> cand;
        for (int i = 0; i < m; ++i)
            if (strict[i]) cand.insert(primitive(a->annihilator.reduce(to_vec(ineqs_[i]))));
        std::vector<Functional> kept(cand.begin(), cand.end());
        for (std::size_t j = 0; j < kept.size();) {
            std::vector<Functional> others;
            for (std::size_t k = 0; k < kept.size(); ++k)
                if (k != j) others.push_back(kept[k]);
            auto r = max_on_cone(n_, others, a->canonical.equalities, to_vec(kept[j]));
            if (r.status == lp::Status::Optimal && r.value <= 0)
                kept.erase(kept.begin() + static_cast<long>(j));
            else
                ++j;
        }
        a->canonical.facets = std::move(kept);
        a_ = std::move(a);
    }

    int n_ = 0;
    std::vector<Functional> ineqs_;
    std::vector<Functional> eqs_;
    std::shared_ptr<const Analysis> a_;
};

inline bool is_strictly_convex(const Cone& c) { return c.is_strictly_convex(); }
inline const std::vector<Vec>& lineality(const Cone& c) { return c.lineality(); }

// All faces of C, C itself first; each face is C with some facets promoted to equalities.
inline std::vector<Cone> faces(const Cone& c) {
    if (c.ambient_dim() > kFaceDimCap)
        throw CapExceeded("face enumeration is capped at dimension " + std::to_string(kFaceDimCap));
    const auto& can = c.canonical();
    std::vector<Cone> out{c};
    std::set<CanonicalCone> seen{can};
    for (std::size_t head = 0; head < out.size(); ++head) {
        Cone f = out[head];
        for (const auto& facet : f.canonical().facets) {
            std::vector<Functional> eqs = f.canonical().equalities;
            eqs.push_back(facet);
            Cone g(c.ambient_dim(), can.facets, eqs);
            if (seen.insert(g.canonical()).second) out.push_back(std::move(g));
        }
    }
    return out;
}

inline bool is_face_of(const Cone& f, const Cone& c) {
    if (!c.contains_cone(f)) return false;
    std::vector<Functional> eqs = c.canonical().equalities;
    for (const auto& phi : c.canonical().facets)
        if (f.vanishes_on_span(phi)) eqs.push_back(phi);
    return Cone(c.ambient_dim(), c.canonical().facets, eqs) == f;
}

inline std::vector<std::string> describe(const Vec& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(to_string(x));
    return s;
}

// C1 ∩ C2, provided it is a face of both.
inline Cone common_face(const Cone& c1, const Cone& c2) {
    const int n = c1.ambient_dim();
    auto ineqs = c1.inequalities();
    ineqs.insert(ineqs.end(), c2.inequalities().begin(), c2.inequalities().end());
    auto eqs = c1.equalities();
    eqs.insert(eqs.end(), c2.equalities().begin(), c2.equalities().end());
    Cone inter(n, ineqs, eqs);
    for (const Cone* c : {&c1, &c2}) {
        const Cone* other = (c == &c1) ? &c2 : &c1;
        std::vector<Functional> fe = c->canonical().equalities;
        for (const auto& phi : c->canonical().facets)
            if (inter.vanishes_on_span(phi)) fe.push_back(phi);
        Cone face(n, c->canonical().facets, fe);
        if (face == inter) continue;
        // A point of the face of C that lies outside the other cone.
        auto try_witness = [&](const Functional& f) -> std::optional<Vec> {
            auto r = max_on_cone(n, face.inequalities(), face.equalities(), to_vec(f));
            if (r.status == lp::Status::Optimal && r.value > 0) return r.x;
            return std::nullopt;
        };
        std::optional<Vec> w;
        for (const auto& f : other->inequalities())
            if ((w = try_witness(f))) break;
        for (const auto& f : other->equalities()) {
            if (w) break;
            IVec g = f;
            for (auto& x : g) x = -x;
            if (!(w = try_witness(f))) w = try_witness(g);
        }
        throw FanAxiomViolation("cone intersection is not a common face", w ? describe(*w) : std::vector<std::string>{});
    }
    return inter;
}

// Finite family of cones in V = Q^n.
class Prefan {
public:
    Prefan() = default;
    Prefan(int n, std::vector<Cone> cones) : n_(n), cones_(std::move(cones)) {
        for (std::size_t i = 0; i < cones_.size(); ++i) {
            if (cones_[i].ambient_dim() != n) throw ValidationError("cone of wrong ambient dimension");
            index_.emplace(cones_[i].canonical(), static_cast<int>(i));
        }
    }

    int ambient_dim() const { return n_; }
    int size() const { return static_cast<int>(cones_.size()); }
    const std::vector<Cone>& cones() const { return cones_; }
    const Cone& cone(int i) const { return cones_.at(i); }

    bool is_fan() const {
        return std::all_of(cones_.begin(), cones_.end(), [](const Cone& c) { return c.is_strictly_convex(); });
    }

    std::optional<int> find(const Cone& c) const {
        auto it = index_.find(c.canonical());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // The cone having v in its relative interior (the smallest cone containing v).
    int smallest_containing(const Vec& v) const {
        int best = -1;
        for (int i = 0; i < size(); ++i)
            if (cones_[i].contains(v) && (best < 0 || cones_[i].dim() < cones_[best].dim())) best = i;
        if (best < 0) throw ValidationError("vector not covered by the prefan");
        return best;
    }

private:
    int n_ = 0;
    std::vector<Cone> cones_;
    std::map<CanonicalCone, int> index_;
};

// A face of some cone that is missing from the prefan, if any.
inline std::optional<Cone> missing_face(const Prefan& f) {
    for (const auto& c : f.cones())
        for (const auto& face : faces(c))
            if (!f.find(face)) return face;
    return std::nullopt;
}

// Throws FanAxiomViolation unless every pairwise intersection is a common face.
inline void check_common_faces(const Prefan& f) {
    for (int i = 0; i < f.size(); ++i)
        for (int j = i + 1; j < f.size(); ++j) common_face(f.cone(i), f.cone(j));
}

// Facet matching on full-dimensional cones plus integer grid sampling.
inline bool covers(const Prefan& f) {
    const int n = f.ambient_dim();
    std::map<CanonicalCone, int> facet_count;
    bool any_full = false;
    for (const auto& c : f.cones()) {
        if (c.dim() != n) continue;
        any_full = true;
        for (const auto& phi : c.canonical().facets) {
            std::vector<Functional> eqs = c.canonical().equalities;
            eqs.push_back(phi);
            ++facet_count[Cone(n, c.canonical().facets, eqs).canonical()];
        }
    }
    if (!any_full) return false;
    for (const auto& [key, count] : facet_count)
        if (count != 2) return false;

    const int bound = n <= 4 ? 2 : 1;
    Vec u(n, -bound);
    for (;;) {
        bool hit = false;
        for (const auto& c : f.cones())
            if (c.contains(u)) {
                hit = true;
                break;
            }
        if (!hit) return false;
        int k = 0;
        while (k < n && u[k] == bound) u[k++] = -bound;
        if (k == n) break;
        u[k] += 1;
    }
    return true;
}

// Point of the compactified space: a stratum cone C and a residual in V/⟨C⟩.
struct BoundaryPoint {
    int stratum = 0;
    Vec residual;  // canonical representative modulo ⟨C⟩
};

inline BoundaryPoint make_boundary_point(const Prefan& f, int stratum, const Vec& residual) {
    if (static_cast<int>(residual.size()) != f.ambient_dim()) throw ValidationError("residual of wrong dimension");
    return {stratum, f.cone(stratum).reduce_mod_span(residual)};
}

inline bool same_point(const Prefan& f, const BoundaryPoint& a, const BoundaryPoint& b) {
    if (a.stratum != b.stratum) return false;
    return f.cone(a.stratum).reduce_mod_span(a.residual) == f.cone(b.stratum).reduce_mod_span(b.residual);
}

inline ExtendedValue eval_at_boundary(const Prefan& f, const BoundaryPoint& x, const Functional& phi) {
    const Cone& c = f.cone(x.stratum);
    if (c.vanishes_on_span(phi)) return dot(phi, x.residual);
    Vec p = to_vec(phi), q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = -p[i];
    const int n = f.ambient_dim();
    if (max_on_cone(n, c.inequalities(), c.equalities(), p).value <= 0) return ExtendedValue::neg_inf();
    if (max_on_cone(n, c.inequalities(), c.equalities(), q).value <= 0) return ExtendedValue::pos_inf();
    throw Indeterminate("functional changes sign on the stratum cone");
}

// Limit of u0 + n·v as n → ∞.
inline BoundaryPoint sequence_limit(const Prefan& f, const Vec& u0, const Vec& v) {
    return make_boundary_point(f, f.smallest_containing(v), u0);
}

inline BoundaryPoint translate(const Prefan& f, const BoundaryPoint& x, const Vec& w) {
    Vec r = x.residual;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += w[i];
    return make_boundary_point(f, x.stratum, r);
}

// Strata in the closure of Σ_C: all cones of the prefan containing C.
inline std::vector<int> stratum_closure(const Prefan& f, int c) {
    std::vector<int> out;
    const Vec& p = f.cone(c).interior_point();
    for (int i = 0; i < f.size(); ++i)
        if (f.cone(i).contains(p)) out.push_back(i);
    return out;
}

// Base point bookkeeping: coordinates relative to a chosen special point.
struct AffineFrame {
    std::string origin = "o";
    Vec offset;  // position of the origin in the ambient coordinates

    Vec to_linear(const Vec& p) const {
        if (offset.empty()) return p;
        Vec r = p;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= offset[i];
        return r;
    }
    Vec from_linear(const Vec& u) const {
        if (offset.empty()) return u;
        Vec r = u;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += offset[i];
        return r;
    }
};

inline AffineFrame with_origin(std::string label, Vec offset = {}) { return {std::move(label), std::move(offset)}; }

}  // namespace weylscope
