#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "weylscope/parabolic.hpp"

using namespace weylscope;

namespace {

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

RootSet roots_of(const DatumPtr& d, std::initializer_list<IVec> vs) {
    RootSet s = d->empty_set();
    for (const auto& v : vs) s.insert(*d->find(v));
    return s;
}

// Every closed generating subset, by exhaustive search over subsets containing one root of each ± pair
// and possibly both.
std::set<RootSet> brute_force_parabolics(const DatumPtr& d) {
    const int p = d->num_positive();
    std::set<RootSet> out;
    std::vector<int> choice(p, 0);  // 0: +α, 1: −α, 2: both
    for (;;) {
        RootSet s = d->empty_set();
        for (int k = 0; k < p; ++k) {
            if (choice[k] != 1) s.insert(k);
            if (choice[k] != 0) s.insert(d->negate(k));
        }
        if (is_closed(*d, s)) out.insert(s);
        int k = 0;
        while (k < p && choice[k] == 2) choice[k++] = 0;
        if (k == p) break;
        ++choice[k];
    }
    return out;
}

std::vector<int> lex_least_word(const DatumPtr& d, const WeylElement& w) {
    const int len = d->inversion_count(w);
    std::vector<int> word(len, 0);
    for (;;) {
        if (d->from_word(word) == w) return word;
        int k = len - 1;
        while (k >= 0 && word[k] == d->rank() - 1) word[k--] = 0;
        if (k < 0) return {};
        ++word[k];
    }
}

}  // namespace

TEST(BuildNamed, ClosedFormCounts) {
    for (int n = 1; n <= 6; ++n) {
        auto d = build_named("A" + std::to_string(n));
        EXPECT_EQ(d->num_roots(), n * (n + 1));
        EXPECT_EQ(d->weyl_order(), factorial(n + 1));
    }
    for (int n = 2; n <= 4; ++n) {
        for (char f : {'B', 'C'}) {
            auto d = build_named(std::string(1, f) + std::to_string(n));
            EXPECT_EQ(d->num_roots(), 2 * n * n);
            EXPECT_EQ(d->weyl_order(), (std::uint64_t{1} << n) * factorial(n));
        }
    }
    auto d4 = build_named("D4");
    EXPECT_EQ(d4->num_roots(), 24);
    EXPECT_EQ(d4->weyl_order(), 192u);
    auto g2 = build_named("G2");
    EXPECT_EQ(g2->num_roots(), 12);
    EXPECT_EQ(g2->weyl_order(), 12u);
    auto a1 = build_named("A1");
    EXPECT_EQ(a1->num_roots(), 2);
    EXPECT_EQ(a1->weyl_order(), 2u);
}

TEST(BuildNamed, BourbakiHighestRoots) {
    EXPECT_TRUE(build_named("B2")->find({1, 2}).has_value());
    EXPECT_TRUE(build_named("C2")->find({2, 1}).has_value());
    EXPECT_TRUE(build_named("G2")->find({3, 2}).has_value());
    EXPECT_TRUE(build_named("D4")->find({1, 2, 1, 1}).has_value());
}

TEST(BuildNamed, UnknownNameRejected) {
    EXPECT_THROW(build_named("E8"), ValidationError);
    EXPECT_THROW(build_named("A7"), ValidationError);
    EXPECT_THROW(build_named(""), ValidationError);
}

TEST(BuildNamed, ProductDatum) {
    auto d = build_named("A1xA1");
    EXPECT_EQ(d->rank(), 2);
    EXPECT_EQ(d->num_roots(), 4);
    EXPECT_EQ(d->weyl_order(), 4u);
    EXPECT_EQ(d->components().size(), 2u);
}

TEST(RootDatumInvariants, PairingReflectionAndSigns) {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "A1xA1", "A2xB2"}) {
        auto d = build_named(name);
        for (int k = 0; k < d->num_roots(); ++k) {
            EXPECT_EQ(d->pairing(d->root(k), k), 2) << name;
            const auto& r = d->root(k);
            bool nonneg = std::all_of(r.begin(), r.end(), [](auto c) { return c >= 0; });
            bool nonpos = std::all_of(r.begin(), r.end(), [](auto c) { return c <= 0; });
            EXPECT_TRUE(nonneg || nonpos);
            for (int i = 0; i < d->rank(); ++i) EXPECT_TRUE(d->find(d->reflect(i, r)).has_value());
        }
    }
}

TEST(RootDatumInvariants, CustomCartanValidation) {
    EXPECT_THROW(RootDatum::from_cartan({{2, -1}, {-1, 3}}), ValidationError);
    EXPECT_THROW(RootDatum::from_cartan({{2, -2}, {-2, 2}}), ValidationError);  // affine A1
    EXPECT_THROW(RootDatum::from_cartan({{2, 0}, {-1, 2}}), ValidationError);
    auto d = RootDatum::from_cartan({{2, -1}, {-1, 2}});
    EXPECT_EQ(d->num_roots(), 6);
}

TEST(WeylGroup, WordLengthIsInversionCount) {
    for (const char* name : {"A2", "A3", "B2", "B3", "G2"}) {
        auto d = build_named(name);
        auto g = d->weyl_group();
        EXPECT_EQ(g->elements.size(), d->weyl_order());
        for (const auto& w : g->elements) EXPECT_EQ(w.length(), d->inversion_count(w)) << name;
    }
}

TEST(WeylGroup, WordsAreShortLexLeast) {
    for (const char* name : {"A2", "A3", "B2", "G2"}) {
        auto d = build_named(name);
        for (const auto& w : d->weyl_group()->elements) EXPECT_EQ(w.word, lex_least_word(d, w)) << name;
    }
}

TEST(WeylGroup, CanonicalMatchesEnumeration) {
    auto d = build_named("B3");
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> word(rng() % 12);
        for (auto& i : word) i = static_cast<int>(rng() % 3);
        WeylElement w = d->canonical(d->from_word(word));
        EXPECT_EQ(d->from_word(w.word), w);
        EXPECT_EQ(w.length(), d->inversion_count(w));
    }
}

TEST(WeylGroup, ParabolicSubgroupOrders) {
    for (const char* name : {"A3", "B3", "G2", "C3"}) {
        auto d = build_named(name);
        auto g = d->weyl_group();
        for (std::uint64_t mask = 0; mask < (1u << d->rank()); ++mask) {
            std::uint64_t count = 0;
            for (const auto& w : g->elements)
                if (std::all_of(w.word.begin(), w.word.end(), [&](int i) { return (mask >> i) & 1u; })) ++count;
            EXPECT_EQ(count, d->weyl_order(TypeLabel{mask})) << name << " " << mask;
        }
    }
}

TEST(StandardParabolic, A2Examples) {
    auto d = build_named("A2");
    EXPECT_EQ(standard_parabolic(d, {}).members, roots_of(d, {{1, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(standard_parabolic(d, TypeLabel::of({0})).members, roots_of(d, {{1, 0}, {0, 1}, {1, 1}, {-1, 0}}));
    EXPECT_EQ(standard_parabolic(d, TypeLabel::full(2)).members, d->all_roots());
}

TEST(AllParabolics, MatchesExhaustiveSearch) {
    for (const char* name : {"A1", "A2", "A3", "B2", "C2", "G2", "A1xA1"}) {
        auto d = build_named(name);
        auto all = all_parabolics(d);
        std::set<RootSet> listed;
        for (const auto& tp : all) {
            EXPECT_TRUE(is_closed(*d, tp.set.members));
            EXPECT_TRUE(is_generating(*d, tp.set.members));
            listed.insert(tp.set.members);
            EXPECT_EQ(act(tp.conjugator, tp.set), standard_parabolic(d, tp.type));
        }
        EXPECT_EQ(listed.size(), all.size()) << name;
        EXPECT_EQ(listed, brute_force_parabolics(d)) << name;
    }
}

TEST(AllParabolics, FrozenCounts) {
    EXPECT_EQ(all_parabolics(build_named("A1")).size(), 3u);
    EXPECT_EQ(all_parabolics(build_named("A2")).size(), 13u);
    EXPECT_EQ(all_parabolics(build_named("B2")).size(), 17u);
    EXPECT_EQ(all_parabolics(build_named("G2")).size(), 25u);
}

TEST(AllParabolics, CosetSumFormula) {
    for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"}) {
        auto d = build_named(name);
        std::uint64_t expected = 0;
        for (std::uint64_t mask = 0; mask < (1u << d->rank()); ++mask)
            expected += d->weyl_order() / d->weyl_order(TypeLabel{mask});
        EXPECT_EQ(all_parabolics(d).size(), expected) << name;
    }
}

TEST(AllParabolics, CapIsEnforcedAndOverridable) {
    EXPECT_THROW(all_parabolics(build_named("A6")), CapExceeded);
    auto a2 = build_named("A2");
    setenv("WEYLSCOPE_ENUM_CAP", "5", 1);
    EXPECT_THROW(all_parabolics(a2), CapExceeded);
    setenv("WEYLSCOPE_ENUM_CAP", "6", 1);
    EXPECT_EQ(all_parabolics(a2).size(), 13u);
    unsetenv("WEYLSCOPE_ENUM_CAP");
}

TEST(LeviAndUnipotent, Examples) {
    auto d = build_named("A2");
    auto p = standard_parabolic(d, TypeLabel::of({0}));
    EXPECT_EQ(levi_roots(p), roots_of(d, {{1, 0}, {-1, 0}}));
    EXPECT_EQ(unipotent_radical_roots(p), roots_of(d, {{0, 1}, {1, 1}}));
    auto g = standard_parabolic(d, TypeLabel::full(2));
    EXPECT_EQ(levi_roots(g), d->all_roots());
    EXPECT_TRUE(unipotent_radical_roots(g).empty());
    auto b = standard_parabolic(d, {});
    EXPECT_TRUE(levi_roots(b).empty());
    EXPECT_EQ(unipotent_radical_roots(b), d->positive_roots());
}

TEST(LeviAndUnipotent, OppositeIsAnInvolution) {
    for (const char* name : {"A3", "B2", "G2", "C3"}) {
        auto d = build_named(name);
        for (const auto& tp : all_parabolics(d)) {
            auto op = opposite(tp.set);
            EXPECT_TRUE(is_parabolic(*d, op.members));
            EXPECT_EQ(opposite(op), tp.set);
            EXPECT_EQ(levi_roots(op), levi_roots(tp.set));
            EXPECT_TRUE(levi_roots(tp.set).subset_of(tp.set.members));
            EXPECT_EQ((levi_roots(tp.set) | unipotent_radical_roots(tp.set)), tp.set.members);
        }
    }
}

TEST(Osculatory, Examples) {
    auto d = build_named("A2");
    auto p1 = standard_parabolic(d, TypeLabel::of({0}));
    auto p2 = standard_parabolic(d, TypeLabel::of({1}));
    EXPECT_TRUE(is_osculatory(p1, p2));
    RootSet q = negate(*d, d->positive_roots());
    q.insert(*d->find({1, 0}));
    EXPECT_FALSE(is_osculatory(p1, ParabolicSet{d, q}));
    auto g = standard_parabolic(d, TypeLabel::full(2));
    for (const auto& tp : all_parabolics(d)) EXPECT_TRUE(is_osculatory(g, tp.set));
}

TEST(StandardPosition, LongestElement) {
    auto d = build_named("A2");
    auto b = standard_parabolic(d, {});
    EXPECT_EQ(act(d->identity(), b), b);
    WeylElement w0 = d->canonical(d->from_word({0, 1, 0}));
    EXPECT_EQ(act(w0, b).members, negate(*d, d->positive_roots()));
    auto sp = standard_position(act(w0, b));
    EXPECT_EQ(sp.type, TypeLabel{});
    EXPECT_EQ(sp.w, w0);
    EXPECT_EQ(sp.w.word, (std::vector<int>{0, 1, 0}));
}

TEST(StandardPosition, IsMinimalAmongConjugators) {
    auto d = build_named("B3");
    auto g = d->weyl_group();
    for (const auto& tp : all_parabolics(d)) {
        auto sp = standard_position(tp.set);
        auto target = standard_parabolic(d, sp.type);
        for (const auto& w : g->elements)
            if (act(w, tp.set) == target) {
                EXPECT_GE(w.length(), sp.w.length());
                if (w.length() == sp.w.length()) EXPECT_EQ(w, sp.w);
            }
    }
}

TEST(StandardPosition, ActionPreservesTypesAndOsculation) {
    auto d = build_named("A3");
    auto all = all_parabolics(d);
    auto g = d->weyl_group();
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto& w = g->elements[rng() % g->elements.size()];
        const auto& p = all[rng() % all.size()].set;
        const auto& q = all[rng() % all.size()].set;
        EXPECT_EQ(type_of(act(w, p)), type_of(p));
        EXPECT_EQ(is_osculatory(act(w, p), act(w, q)), is_osculatory(p, q));
    }
}
