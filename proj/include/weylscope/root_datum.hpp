#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "root_set.hpp"

namespace weylscope {

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

inline constexpr std::uint64_t kDefaultEnumerationCap = 1152;
inline constexpr int kMaxRoots = 1024;

// Weyl-group enumeration cap; WEYLSCOPE_ENUM_CAP overrides the default.
inline std::uint64_t enumeration_cap() {
    const char* env = std::getenv("WEYLSCOPE_ENUM_CAP");
    if (!env || !*env) return kDefaultEnumerationCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw ValidationError(std::string("WEYLSCOPE_ENUM_CAP is not a positive integer: ") + env);
    return v;
}

// w = s_{word[0]} ∘ s_{word[1]} ∘ ... acting on characters in simple-root coordinates.
struct WeylElement {
    std::vector<int> word;
    IVec matrix;  // row-major rank×rank, column j = w(α_j)
    int rank = 0;

    int length() const { return static_cast<int>(word.size()); }
    IVec apply(const IVec& chi) const {
        IVec out(rank, 0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) out[i] += matrix[i * rank + j] * chi[j];
        return out;
    }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

struct WeylGroup {
    std::vector<WeylElement> elements;     // ShortLex order of canonical words
    std::vector<std::vector<int>> perms;  // root permutation of each element
};

namespace detail {
struct ParabolicCatalog;
struct DatumCache {
    std::mutex mutex;
    std::shared_ptr<const WeylGroup> weyl;
    std::shared_ptr<const ParabolicCatalog> catalog;
};
}  // namespace detail

// Root datum of a split semisimple group of adjoint type: the character lattice is
// the root lattice, and characters are written in simple-root coordinates.
class RootDatum : public std::enable_shared_from_this<RootDatum> {
public:
    using Cartan = std::vector<std::vector<int>>;

    // cartan[i][j] = ⟨α_i, α_j∨⟩.
    static DatumPtr from_cartan(Cartan cartan, std::string name = "") {
        auto d = std::shared_ptr<RootDatum>(new RootDatum());
        d->name_ = std::move(name);
        d->cartan_ = std::move(cartan);
        d->rank_ = static_cast<int>(d->cartan_.size());
        d->build();
        return d;
    }

    int rank() const { return rank_; }
    const std::string& name() const { return name_; }
    const Cartan& cartan() const { return cartan_; }
    int cartan(int i, int j) const { return cartan_[i][j]; }

    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_positive_; }
    const IVec& root(int k) const { return roots_[k]; }
    const IVec& coroot(int k) const { return coroots_[k]; }
    bool is_positive(int k) const { return k < num_positive_; }
    int negate(int k) const { return k < num_positive_ ? k + num_positive_ : k - num_positive_; }
    int simple(int i) const { return i; }  // α_i has root index i
    int height(int k) const {
        std::int64_t h = 0;
        for (auto c : roots_[k]) h += c;
        return static_cast<int>(h);
    }

    std::optional<int> find(const IVec& chi) const {
        auto it = index_.find(chi);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    // Index of root_i + root_j, or -1.
    int sum(int i, int j) const { return sums_[static_cast<std::size_t>(i) * roots_.size() + j]; }

    // ⟨χ, α∨⟩ for the root with index k.
    std::int64_t pairing(const IVec& chi, int k) const {
        std::int64_t s = 0;
        for (int i = 0; i < rank_; ++i) s += chi[i] * coroots_[k][i];
        return s;
    }

    IVec reflect(int i, const IVec& chi) const {
        std::int64_t p = 0;
        for (int j = 0; j < rank_; ++j) p += chi[j] * cartan_[j][i];
        IVec out = chi;
        out[i] -= p;
        return out;
    }

    // W-invariant form, normalized so that short roots of each component have (α,α) = 2.
    Rational form(const IVec& a, const IVec& b) const {
        Rational s = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (a[i] != 0 && b[j] != 0) s += gram_[i][j] * (a[i] * b[j]);
        return s;
    }
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }

    RootSet empty_set() const { return RootSet(num_roots()); }
    RootSet all_roots() const {
        RootSet s(num_roots());
        for (int k = 0; k < num_roots(); ++k) s.insert(k);
        return s;
    }
    RootSet positive_roots() const {
        RootSet s(num_roots());
        for (int k = 0; k < num_positive_; ++k) s.insert(k);
        return s;
    }

    // Dynkin adjacency: edge iff the Cartan pairing is nonzero.
    bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

    // Connected components of the Dynkin diagram restricted to Y.
    std::vector<TypeLabel> components(TypeLabel y) const {
        std::vector<TypeLabel> out;
        TypeLabel seen;
        for (int i : y.indices()) {
            if (seen.contains(i)) continue;
            TypeLabel comp;
            std::vector<int> stack{i};
            comp.mask |= std::uint64_t{1} << i;
            while (!stack.empty()) {
                int a = stack.back();
                stack.pop_back();
                for (int b : y.indices())
                    if (!comp.contains(b) && adjacent(a, b)) {
                        comp.mask |= std::uint64_t{1} << b;
                        stack.push_back(b);
                    }
            }
            seen.mask |= comp.mask;
            out.push_back(comp);
        }
        return out;
    }
    std::vector<TypeLabel> components() const { return components(TypeLabel::full(rank_)); }

    // Support of a character in simple-root coordinates.
    TypeLabel support(const IVec& chi) const {
        TypeLabel t;
        for (int i = 0; i < rank_; ++i)
            if (chi[i] != 0) t.mask |= std::uint64_t{1} << i;
        return t;
    }

    // |W_Y| by the orbit of a fundamental weight under W_Y over W_{Y−α}.
    std::uint64_t weyl_order(TypeLabel y) const {
        auto idx = y.indices();
        if (idx.empty()) return 1;
        int a = idx.back();
        TypeLabel rest{y.mask & ~(std::uint64_t{1} << a)};
        // Weights in Dynkin-label coordinates m_j = ⟨λ, α_j∨⟩.
        IVec start(rank_, 0);
        start[a] = 1;
        std::set<IVec> orbit{start};
        std::vector<IVec> queue{start};
        while (!queue.empty()) {
            IVec m = queue.back();
            queue.pop_back();
            for (int i : idx) {
                if (m[i] == 0) continue;
                IVec n = m;
                for (int j = 0; j < rank_; ++j) n[j] -= m[i] * cartan_[i][j];
                if (orbit.insert(n).second) queue.push_back(n);
            }
        }
        return orbit.size() * weyl_order(rest);
    }
    std::uint64_t weyl_order() const { return weyl_order(TypeLabel::full(rank_)); }

    void check_cap() const {
        std::uint64_t cap = enumeration_cap();
        std::uint64_t order = weyl_order();
        if (order > cap)
            throw CapExceeded("Weyl group of " + label() + " has order " + std::to_string(order) +
                              ", above the enumeration cap " + std::to_string(cap));
    }

    std::string label() const { return name_.empty() ? "rank-" + std::to_string(rank_) + " datum" : name_; }

    WeylElement identity() const {
        WeylElement w;
        w.rank = rank_;
        w.matrix.assign(static_cast<std::size_t>(rank_) * rank_, 0);
        for (int i = 0; i < rank_; ++i) w.matrix[i * rank_ + i] = 1;
        return w;
    }

    // Matrix product a∘b; the word is concatenated, not canonicalized.
    WeylElement compose(const WeylElement& a, const WeylElement& b) const {
        WeylElement w;
        w.rank = rank_;
        w.word = a.word;
        w.word.insert(w.word.end(), b.word.begin(), b.word.end());
        w.matrix.assign(static_cast<std::size_t>(rank_) * rank_, 0);
        for (int i = 0; i < rank_; ++i)
            for (int k = 0; k < rank_; ++k) {
                auto x = a.matrix[i * rank_ + k];
                if (x == 0) continue;
                for (int j = 0; j < rank_; ++j) w.matrix[i * rank_ + j] += x * b.matrix[k * rank_ + j];
            }
        return w;
    }

    WeylElement reflection(int i) const {
        WeylElement w = identity();
        for (int j = 0; j < rank_; ++j) {
            IVec e(rank_, 0);
            e[j] = 1;
            IVec img = reflect(i, e);
            for (int r = 0; r < rank_; ++r) w.matrix[r * rank_ + j] = img[r];
        }
        w.word = {i};
        return w;
    }

    WeylElement from_word(const std::vector<int>& word) const {
        WeylElement w = identity();
        for (int i : word) w = compose(w, reflection(i));
        w.word = word;
        return w;
    }

    std::vector<int> permutation(const WeylElement& w) const {
        std::vector<int> p(roots_.size());
        for (int k = 0; k < num_roots(); ++k) p[k] = *find(w.apply(roots_[k]));
        return p;
    }

    int root_image(const WeylElement& w, int k) const { return *find(w.apply(roots_[k])); }

    // Number of positive roots sent to negative roots.
    int inversion_count(const WeylElement& w) const {
        int c = 0;
        for (int k = 0; k < num_positive_; ++k)
            if (!is_positive(root_image(w, k))) ++c;
        return c;
    }

    WeylElement inverse(const WeylElement& w) const {
        std::vector<int> rev(w.word.rbegin(), w.word.rend());
        return canonical(from_word(rev));
    }

    // Same element with its ShortLex-least reduced word (greedy smallest left descent).
    WeylElement canonical(const WeylElement& w) const {
        WeylElement cur = w;
        cur.word.clear();
        std::vector<int> word;
        WeylElement id = identity();
        while (cur.matrix != id.matrix) {
            auto p = permutation(cur);
            std::vector<int> inv(p.size());
            for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = static_cast<int>(k);
            int d = -1;
            for (int i = 0; i < rank_; ++i)
                if (!is_positive(inv[i])) {
                    d = i;
                    break;
                }
            word.push_back(d);
            cur = compose(reflection(d), cur);
            cur.word.clear();
        }
        WeylElement out = w;
        out.word = std::move(word);
        return out;
    }

    // Enumerated Weyl group (subject to the cap), cached.
    std::shared_ptr<const WeylGroup> weyl_group() const {
        check_cap();
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (!cache_->weyl) cache_->weyl = enumerate();
        return cache_->weyl;
    }

    detail::DatumCache& cache() const { return *cache_; }

    DatumPtr ptr() const { return shared_from_this(); }

private:
    RootDatum() : cache_(std::make_shared<detail::DatumCache>()) {}

    void build() {
        const int r = rank_;
        if (r <= 0) {
            if (r == 0) return;
            throw ValidationError("rank must be positive");
        }
        if (r > 32) throw ValidationError("rank above 32 is not supported");
        for (const auto& row : cartan_)
            if (static_cast<int>(row.size()) != r) throw ValidationError("Cartan matrix is not square");
        for (int i = 0; i < r; ++i) {
            if (cartan_[i][i] != 2) throw ValidationError("Cartan matrix diagonal entries must be 2");
            for (int j = 0; j < r; ++j) {
                if (i == j) continue;
                if (cartan_[i][j] > 0) throw ValidationError("off-diagonal Cartan entries must be <= 0");
                if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                    throw ValidationError("Cartan matrix: a_ij = 0 must imply a_ji = 0");
            }
        }
        symmetrize();

        // Roots = W·Δ, generated by simple reflections.
        std::set<IVec> found;
        std::vector<IVec> queue;
        for (int i = 0; i < r; ++i) {
            IVec e(r, 0);
            e[i] = 1;
            found.insert(e);
            queue.push_back(e);
        }
        while (!queue.empty()) {
            IVec chi = queue.back();
            queue.pop_back();
            for (int i = 0; i < r; ++i) {
                IVec img = reflect(i, chi);
                if (found.insert(img).second) {
                    if (static_cast<int>(found.size()) > kMaxRoots)
                        throw ValidationError("Cartan matrix is not of finite type");
                    queue.push_back(img);
                }
            }
        }
        std::vector<IVec> pos;
        for (const auto& chi : found) {
            bool nonneg = std::all_of(chi.begin(), chi.end(), [](auto c) { return c >= 0; });
            bool nonpos = std::all_of(chi.begin(), chi.end(), [](auto c) { return c <= 0; });
            if (!nonneg && !nonpos) throw ValidationError("Cartan matrix is not of finite type");
            if (nonneg) pos.push_back(chi);
        }
        std::sort(pos.begin(), pos.end(), [](const IVec& a, const IVec& b) {
            std::int64_t ha = 0, hb = 0;
            for (auto c : a) ha += c;
            for (auto c : b) hb += c;
            if (ha != hb) return ha < hb;
            return a > b;
        });
        num_positive_ = static_cast<int>(pos.size());
        roots_ = pos;
        for (const auto& chi : pos) {
            IVec neg = chi;
            for (auto& c : neg) c = -c;
            roots_.push_back(neg);
        }
        for (int k = 0; k < num_roots(); ++k) index_[roots_[k]] = k;

        // α∨ as the functional χ ↦ 2(χ,α)/(α,α).
        for (const auto& a : roots_) {
            Rational aa = form(a, a);
            IVec cor(r, 0);
            for (int i = 0; i < r; ++i) {
                IVec e(r, 0);
                e[i] = 1;
                Rational v = 2 * form(e, a) / aa;
                if (denominator(v) != 1) throw ValidationError("Cartan matrix is not symmetrizable");
                cor[i] = static_cast<std::int64_t>(numerator(v));
            }
            coroots_.push_back(cor);
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (coroots_[j][i] != cartan_[i][j]) throw ValidationError("Cartan matrix is not symmetrizable");

        const std::size_t n = roots_.size();
        sums_.assign(n * n, -1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                IVec s = roots_[i];
                for (int k = 0; k < r; ++k) s[k] += roots_[j][k];
                if (auto f = find(s)) sums_[i * n + j] = *f;
            }
    }

    // Half squared lengths s_i with a_ij s_j = a_ji s_i, shortest simple root of each component s = 1.
    void symmetrize() {
        const int r = rank_;
        std::vector<Rational> s(r, 0);
        for (int start = 0; start < r; ++start) {
            if (s[start] != 0) continue;
            s[start] = 1;
            std::vector<int> comp{start}, stack{start};
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                for (int j = 0; j < r; ++j) {
                    if (!adjacent(i, j)) continue;
                    Rational sj = Rational(cartan_[j][i]) * s[i] / cartan_[i][j];
                    if (s[j] == 0) {
                        s[j] = sj;
                        comp.push_back(j);
                        stack.push_back(j);
                    } else if (s[j] != sj) {
                        throw ValidationError("Cartan matrix is not symmetrizable");
                    }
                }
            }
            Rational lo = s[comp[0]];
            for (int i : comp) lo = std::min(lo, s[i]);
            for (int i : comp) s[i] /= lo;
        }
        gram_.assign(r, std::vector<Rational>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) gram_[i][j] = Rational(cartan_[i][j]) * s[j];
    }

    std::shared_ptr<const WeylGroup> enumerate() const {
        auto g = std::make_shared<WeylGroup>();
        std::map<IVec, int> seen;
        WeylElement id = identity();
        g->elements.push_back(id);
        seen[id.matrix] = 0;
        std::vector<int> layer{0};
        while (!layer.empty()) {
            std::vector<int> next;
            for (int idx : layer)
                for (int i = 0; i < rank_; ++i) {
                    WeylElement w = compose(g->elements[idx], reflection(i));
                    if (seen.count(w.matrix)) continue;
                    seen[w.matrix] = static_cast<int>(g->elements.size());
                    next.push_back(static_cast<int>(g->elements.size()));
                    g->elements.push_back(std::move(w));
                }
            layer = std::move(next);
        }
        for (const auto& w : g->elements) g->perms.push_back(permutation(w));
        return g;
    }

    std::string name_;
    Cartan cartan_;
    int rank_ = 0;
    int num_positive_ = 0;
    std::vector<IVec> roots_;
    std::vector<IVec> coroots_;
    std::map<IVec, int> index_;
    std::vector<int> sums_;
    std::vector<std::vector<Rational>> gram_;
    std::shared_ptr<detail::DatumCache> cache_;
};

namespace detail {

inline RootDatum::Cartan cartan_of(char family, int n) {
    RootDatum::Cartan c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c[n - 2][n - 1] = -2;  // α_n short
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c[n - 1][n - 2] = -2;  // α_n long
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'G':
            c[0][1] = -1;  // α1 short
            c[1][0] = -3;
            break;
    }
    return c;
}

inline bool builtin_factor(const std::string& s, char& family, int& n) {
    static const std::set<std::string> known = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4",
                                                "C2", "C3", "C4", "D4", "G2"};
    if (!known.count(s)) return false;
    family = s[0];
    n = s[1] - '0';
    return true;
}

}  // namespace detail

// Built-in data A1–A6, B2–B4, C2–C4, D4, G2 (Bourbaki numbering) and products such as "A1xA1".
inline DatumPtr build_named(const std::string& name) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = name.find('x', start);
        parts.push_back(name.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    RootDatum::Cartan total;
    for (const auto& p : parts) {
        char family;
        int n;
        if (!detail::builtin_factor(p, family, n)) throw ValidationError("unknown root datum name \"" + name + "\"");
        auto c = detail::cartan_of(family, n);
        const std::size_t off = total.size();
        for (auto& row : total) row.resize(off + n, 0);
        for (int i = 0; i < n; ++i) {
            std::vector<int> row(off + n, 0);
            for (int j = 0; j < n; ++j) row[off + j] = c[i][j];
            total.push_back(std::move(row));
        }
    }
    return RootDatum::from_cartan(std::move(total), name);
}

}  // namespace weylscope
