#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace weylscope {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Vec = std::vector<Rational>;       // point of V = Hom(X*, Q)
using IVec = std::vector<std::int64_t>;  // element of the character lattice

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(std::string_view s) {
    auto bad = [&] { return ValidationError("not a rational number: \"" + std::string(s) + "\""); };
    auto parse_int = [&](std::string_view t) {
        if (t.empty()) throw bad();
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw bad();
        for (std::size_t k = i; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9') throw bad();
        return BigInt(std::string(t[0] == '+' ? t.substr(1) : t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt p = parse_int(s.substr(0, slash));
    std::string_view den = s.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+')) throw bad();
    BigInt q = parse_int(den);
    if (q == 0) throw bad();
    return Rational(p, q);
}

inline Rational dot(const IVec& a, const Vec& u) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += u[i] * a[i];
    return s;
}

inline Rational dot(const Vec& a, const Vec& u) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * u[i];
    return s;
}

inline Vec to_vec(const IVec& a) { return Vec(a.begin(), a.end()); }

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const IVec& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

// Scale a rational vector by a positive factor to a primitive integer vector.
inline IVec primitive(const Vec& v) {
    BigInt l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<BigInt> w;
    BigInt g = 0;
    for (const auto& x : v) {
        w.push_back(numerator(x) * (l / denominator(x)));
        g = boost::multiprecision::gcd(g, w.back());
    }
    IVec out(v.size(), 0);
    if (g == 0) return out;
    if (g < 0) g = -g;
    for (std::size_t i = 0; i < v.size(); ++i) {
        BigInt q = w[i] / g;
        if (q > INT64_MAX || q < INT64_MIN) throw Error("integer overflow in functional");
        out[i] = static_cast<std::int64_t>(q);
    }
    return out;
}

// Element of Q ∪ {−∞, +∞}.
class ExtendedValue {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtendedValue() : kind_(Kind::Finite) {}
    ExtendedValue(Rational q) : kind_(Kind::Finite), value_(std::move(q)) {}
    ExtendedValue(int q) : kind_(Kind::Finite), value_(q) {}

    static ExtendedValue neg_inf() { return ExtendedValue(Kind::NegInf); }
    static ExtendedValue pos_inf() { return ExtendedValue(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    const Rational& value() const {
        if (!finite()) throw Error("value() on an infinite ExtendedValue");
        return value_;
    }

    friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
        return a.kind_ == b.kind_ && (!a.finite() || a.value_ == b.value_);
    }
    friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.finite() && a.value_ < b.value_;
    }
    friend bool operator<=(const ExtendedValue& a, const ExtendedValue& b) { return !(b < a); }

    friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
        if ((a.is_neg_inf() && b.is_pos_inf()) || (a.is_pos_inf() && b.is_neg_inf()))
            throw Error("(+inf) + (-inf) is undefined");
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
        return ExtendedValue(a.value_ + b.value_);
    }

    // n·a for a natural number n; 0·(±∞) = 0.
    ExtendedValue times(std::int64_t n) const {
        if (n == 0) return ExtendedValue(0);
        if (!finite()) return *this;
        return ExtendedValue(value_ * n);
    }

    std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "+inf";
        return to_string(value_);
    }

    static ExtendedValue parse(std::string_view s) {
        if (s == "-inf") return neg_inf();
        if (s == "+inf" || s == "inf") return pos_inf();
        return ExtendedValue(parse_rational(s));
    }

private:
    explicit ExtendedValue(Kind k) : kind_(k) {}
    Kind kind_;
    Rational value_;
};

inline ExtendedValue max(const ExtendedValue& a, const ExtendedValue& b) { return a < b ? b : a; }

inline std::ostream& operator<<(std::ostream& os, const ExtendedValue& v) { return os << v.str(); }

}  // namespace weylscope
