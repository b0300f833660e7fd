#pragma once

#include <bit>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace weylscope {

// Subset of the root indices of a fixed datum.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }
    bool contains(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void insert(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool empty() const { return count() == 0; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    bool subset_of(const RootSet& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    friend RootSet operator&(RootSet a, const RootSet& b) {
        for (std::size_t k = 0; k < a.w_.size(); ++k) a.w_[k] &= b.w_[k];
        return a;
    }
    friend RootSet operator|(RootSet a, const RootSet& b) {
        for (std::size_t k = 0; k < a.w_.size(); ++k) a.w_[k] |= b.w_[k];
        return a;
    }
    friend RootSet operator-(RootSet a, const RootSet& b) {
        for (std::size_t k = 0; k < a.w_.size(); ++k) a.w_[k] &= ~b.w_[k];
        return a;
    }
    friend bool operator==(const RootSet& a, const RootSet& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend bool operator<(const RootSet& a, const RootSet& b) { return a.w_ < b.w_; }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : w_) h = (h ^ x) * 1099511628211ull;
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct RootSetHash {
    std::size_t operator()(const RootSet& s) const { return s.hash(); }
};

// A subset Y of the simple roots; labels the type of a parabolic.
struct TypeLabel {
    std::uint64_t mask = 0;

    static TypeLabel of(std::initializer_list<int> idx) {
        TypeLabel t;
        for (int i : idx) t.mask |= std::uint64_t{1} << i;
        return t;
    }
    static TypeLabel full(int rank) {
        return TypeLabel{rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1};
    }

    bool contains(int i) const { return (mask >> i) & 1u; }
    bool subset_of(TypeLabel o) const { return (mask & ~o.mask) == 0; }
    int size() const { return std::popcount(mask); }
    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < 64; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }
    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int i : indices()) {
            if (!first) s += ",";
            s += "a" + std::to_string(i + 1);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(TypeLabel a, TypeLabel b) { return a.mask == b.mask; }
    friend bool operator<(TypeLabel a, TypeLabel b) { return a.mask < b.mask; }
    friend std::ostream& operator<<(std::ostream& os, TypeLabel t) { return os << t.str(); }
};

}  // namespace weylscope
