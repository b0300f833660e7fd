#pragma once

#include <memory>
#include <string>
#include <vector>

#include "apartment.hpp"

namespace weylscope {

// Type of the stabilizer of a hyperplane in A_d: Y = {α_1, …, α_{d−1}}.
inline TypeLabel delta_type(int d) { return TypeLabel{(std::uint64_t{1} << (d - 1)) - 1}; }

// Class of the diagonal seminorm e_i ↦ e^{c_i} on V = k^{d+1}, normalized so that max c_i = 0.
class DiagSeminorm {
public:
    explicit DiagSeminorm(std::vector<ExtendedValue> values) : c_(std::move(values)) {
        if (c_.size() < 2) throw ValidationError("a seminorm needs at least two values");
        std::optional<Rational> top;
        for (const auto& v : c_) {
            if (v.is_pos_inf()) throw ValidationError("seminorm value +inf");
            if (v.finite() && (!top || *top < v.value())) top = v.value();
        }
        if (!top) throw ValidationError("seminorm is identically zero");
        for (auto& v : c_)
            if (v.finite()) v = ExtendedValue(v.value() - *top);
    }

    const std::vector<ExtendedValue>& values() const { return c_; }
    int dimension() const { return static_cast<int>(c_.size()); }
    int d() const { return dimension() - 1; }

    friend bool operator==(const DiagSeminorm& a, const DiagSeminorm& b) { return a.c_ == b.c_; }
    friend std::ostream& operator<<(std::ostream& os, const DiagSeminorm& s) {
        os << "(";
        for (std::size_t i = 0; i < s.c_.size(); ++i) os << (i ? "," : "") << s.c_[i];
        return os << ")";
    }

private:
    std::vector<ExtendedValue> c_;
};

inline std::vector<int> kernel(const DiagSeminorm& s) {
    std::vector<int> k;
    for (int i = 0; i < s.dimension(); ++i)
        if (s.values()[i].is_neg_inf()) k.push_back(i);
    return k;
}

// Root χ_i − χ_j of A_d in simple-root coordinates (indices from 0).
inline IVec chi_difference(int d, int i, int j) {
    IVec r(d, 0);
    const int lo = std::min(i, j), hi = std::max(i, j);
    for (int a = lo; a < hi; ++a) r[a] = i < j ? 1 : -1;
    return r;
}

inline int chi_root(const RootDatum& a, int i, int j) { return *a.find(chi_difference(a.rank(), i, j)); }

struct PglModel {
    int d;
    std::shared_ptr<ApartmentContext> context;
};

inline PglModel pgl_model(int d) {
    if (d < 1 || d > 5) throw ValidationError("PGL model supports 2 <= dim V <= 6");
    return {d, std::make_shared<ApartmentContext>(build_named("A" + std::to_string(d)), delta_type(d))};
}

// Stabilizer of the coordinate subspace spanned by the kernel.
inline ParabolicSet stratum_label(const DatumPtr& a, const DiagSeminorm& s) {
    const int n = s.dimension();
    if (a->rank() != s.d()) throw ValidationError("seminorm dimension does not match the datum");
    std::vector<bool> in_k(n, false);
    for (int i : kernel(s)) in_k[i] = true;
    RootSet m = a->empty_set();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !(in_k[j] && !in_k[i])) m.insert(chi_root(*a, i, j));
    return ParabolicSet{a, m};
}

// Dual-weight convention ⟨u,χ_i⟩ = −c_i, so ⟨u,α_i⟩ = c_{i+1} − c_i; −∞ entries are set to 0 in
// the residual, which only matters modulo the stratum span.
inline CompactApartmentPoint to_apartment_point(const PglModel& m, const DiagSeminorm& s) {
    if (s.d() != m.d) throw ValidationError("seminorm dimension does not match the model");
    Vec c;
    for (const auto& v : s.values()) c.push_back(v.finite() ? v.value() : Rational(0));
    Vec u(m.d);
    for (int i = 0; i < m.d; ++i) u[i] = c[i + 1] - c[i];
    return make_point(*m.context, stratum_label(m.context->datum(), s), u);
}

inline DiagSeminorm from_apartment_point(const PglModel& m, const CompactApartmentPoint& x) {
    const RootDatum& a = *m.context->datum();
    const int n = m.d + 1;
    std::vector<bool> in_k(n, false);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !x.stratum.contains(chi_root(a, i, j))) in_k[j] = true;
    int base = 0;
    while (base < n && in_k[base]) ++base;
    if (base == n) throw ValidationError("point is not a diagonal seminorm class");
    std::vector<ExtendedValue> c(n, ExtendedValue::neg_inf());
    for (int j = 0; j < n; ++j)
        if (!in_k[j]) c[j] = j == base ? Rational(0) : dot(a.root(chi_root(a, base, j)), x.point.residual);
    return DiagSeminorm(std::move(c));
}

struct StabilizerBlocks {
    RootSet full;                      // rad^u(Q) and the roots inside the kernel block
    std::map<int, Rational> filtered;  // χ_i − χ_j, i,j outside the kernel, at level c_i − c_j
};

inline StabilizerBlocks stabilizer_blocks(const PglModel& m, const DiagSeminorm& s) {
    const RootDatum& a = *m.context->datum();
    ParabolicSet q = stratum_label(m.context->datum(), s);
    StabilizerBlocks b{unipotent_radical_roots(q), {}};
    const int n = s.dimension();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto &ci = s.values()[i], &cj = s.values()[j];
            if (ci.is_neg_inf() && cj.is_neg_inf()) b.full.insert(chi_root(a, i, j));
            else if (ci.finite() && cj.finite()) b.filtered[chi_root(a, i, j)] = ci.value() - cj.value();
        }
    return b;
}

}  // namespace weylscope
