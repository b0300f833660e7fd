#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"

using namespace weylscope;
using namespace weylscope::oracle;

TEST(WeylCone, BorelOfAd) {
    for (int d = 1; d <= 4; ++d) {
        auto a = build_named("A" + std::to_string(d));
        std::vector<Functional> expected;
        for (int i = 0; i < d; ++i) expected.push_back(chi_difference(d, i + 1, i));
        EXPECT_TRUE(same_cone(weyl_cone(standard_parabolic(a, {})), Cone(d, expected)));
    }
}

TEST(WeylCone, WholeGroupIsOrigin) {
    auto d = build_named("B3");
    Cone c = weyl_cone(standard_parabolic(d, TypeLabel::full(3)));
    EXPECT_EQ(c.dim(), 0);
}

TEST(WeylCone, FacesOfBorelConeAreParabolicCones) {
    for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
        auto d = build_named(name);
        auto b = standard_parabolic(d, {});
        std::set<CanonicalCone> generic, indexed;
        for (const auto& f : faces(weyl_cone(b))) generic.insert(f.canonical());
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << d->rank()); ++m) {
            auto p = standard_parabolic(d, TypeLabel{m});
            indexed.insert(weyl_cone(p).canonical());
            // Order reversing: larger parabolics give smaller faces.
            for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << d->rank()); ++m2)
                if ((m & m2) == m)
                    EXPECT_TRUE(weyl_cone(p).contains_cone(weyl_cone(standard_parabolic(d, TypeLabel{m2}))));
        }
        EXPECT_EQ(generic, indexed) << name;
    }
}

TEST(WeylFan, Counts) {
    EXPECT_EQ(weyl_fan(build_named("A1")).fan.size(), 3);
    EXPECT_EQ(weyl_fan(build_named("A2")).fan.size(), 13);
    EXPECT_EQ(weyl_fan(build_named("G2")).fan.size(), 25);
}

TEST(WeylFan, IsACompleteFan) {
    for (const char* name : {"A2", "B2", "G2", "A3"}) {
        auto f = weyl_fan(build_named(name));
        EXPECT_TRUE(f.fan.is_fan());
        EXPECT_FALSE(missing_face(f.fan).has_value());
        EXPECT_NO_THROW(check_common_faces(f.fan));
        EXPECT_TRUE(covers(f.fan));
    }
}

TEST(TypeConeMax, A3Delta) {
    auto d = build_named("A3");
    auto p = standard_parabolic(d, delta_type(3));
    Cone expected(3, {chi_difference(3, 3, 0), chi_difference(3, 3, 1), chi_difference(3, 3, 2)});
    EXPECT_TRUE(same_cone(type_cone_max(p), expected));
}

TEST(TypeConeMax, MinimalTypeGivesWeylCone) {
    auto d = build_named("B3");
    for (const auto& tp : all_parabolics(d))
        if (tp.type.mask == 0) EXPECT_TRUE(same_cone(type_cone_max(tp.set), weyl_cone(tp.set)));
    auto f = prefan_of_type(d, {});
    auto w = weyl_fan(d);
    ASSERT_EQ(f.fan.size(), w.fan.size());
    for (const auto& c : w.fan.cones()) EXPECT_TRUE(f.fan.find(c).has_value());
}

TEST(TypeConeMax, WholeGroupType) {
    auto d = build_named("A2");
    Cone c = type_cone_max(standard_parabolic(d, TypeLabel::full(2)));
    EXPECT_TRUE(c.inequalities().empty());
    EXPECT_EQ(c.dim(), 2);
}

TEST(UnionOracle, AllStandardParabolics) {
    for (const char* name : {"A1", "A2", "A3", "B2", "G2"}) {
        auto d = build_named(name);
        for (TypeLabel t : all_types(d->rank()))
            EXPECT_TRUE(union_weyl_oracle(standard_parabolic(d, t))) << name << " " << t.str();
    }
}

TEST(UnionOracle, WrongConeRejected) {
    auto d = build_named("A2");
    auto p = standard_parabolic(d, TypeLabel::of({0}));
    auto ineqs = type_cone_max(p).inequalities();
    ineqs.pop_back();
    EXPECT_FALSE(union_matches(Cone(2, ineqs), p));
}

TEST(TypeCone, SmallestPrefanConeContainingWeylCone) {
    for (const char* name : {"A2", "A3", "B2", "G2", "C3"}) {
        auto d = build_named(name);
        for (TypeLabel t : all_types(d->rank())) {
            auto f = prefan_of_type(d, t);
            for (const auto& tp : all_parabolics(d)) {
                Cone c = type_cone(tp.set, t).cone;
                Cone w = weyl_cone(tp.set);
                EXPECT_TRUE(c.contains_cone(w));
                EXPECT_TRUE(c.in_relative_interior(w.interior_point()));
                EXPECT_TRUE(f.fan.find(c).has_value());
            }
        }
    }
}

TEST(TypeCone, OfItsOwnType) {
    auto d = build_named("A3");
    for (const auto& tp : all_parabolics(d))
        EXPECT_TRUE(same_cone(type_cone(tp.set, tp.type).cone, type_cone_max(tp.set)));
}

TEST(TypeCone, ExplicitSlCones) {
    for (int d = 1; d <= 5; ++d) {
        auto a = build_named("A" + std::to_string(d));
        for (int r = 1; r <= d; ++r) {
            std::vector<Functional> ineqs, eqs;
            for (int i = 0; i < d; ++i) {
                Functional f = chi_difference(d, d, i);
                (i < r ? ineqs : eqs).push_back(f);
            }
            auto q = standard_parabolic(a, all_but(d, r - 1));
            EXPECT_TRUE(same_cone(type_cone(q, delta_type(d)).cone, Cone(d, ineqs, eqs))) << d << " " << r;
        }
    }
}

TEST(Osculatory, MatchesConeContainment) {
    for (const char* name : {"A2", "B2", "A3"}) {
        auto d = build_named(name);
        auto all = all_parabolics(d);
        std::map<std::uint64_t, std::vector<Cone>> by_type;
        for (TypeLabel t : all_types(d->rank())) by_type[t.mask] = type_cones(d, t);
        for (const auto& p : all) {
            Cone pmax = type_cone_max(p.set);
            for (std::size_t q = 0; q < all.size(); ++q)
                EXPECT_EQ(is_osculatory(p.set, all[q].set), pmax.contains_cone(by_type[p.type.mask][q]));
        }
    }
}

TEST(StrictConvexity, ThreeWayAgreement) {
    for (const char* name : {"A2", "A1xA1", "A1xA2", "B2", "A3"}) {
        auto d = build_named(name);
        for (TypeLabel t : all_types(d->rank())) {
            auto p = standard_parabolic(d, t);
            std::vector<IVec> rows;
            for (int k : unipotent_radical_roots(p).indices()) rows.push_back(d->root(k));
            bool spans = rank_of(rows, d->rank()) == d->rank();
            EXPECT_EQ(type_cone_max(p).is_strictly_convex(), !is_degenerate(*d, t));
            EXPECT_EQ(spans, !is_degenerate(*d, t));
        }
    }
}

TEST(Relevance, DynkinCriterionMatchesMaximality) {
    for (const char* name : {"A1", "A2", "A3", "B2", "G2", "B3", "C3"}) {
        auto d = build_named(name);
        auto all = all_parabolics(d);
        for (TypeLabel t : all_types(d->rank())) {
            auto cones = type_cones(d, t);
            for (std::size_t q = 0; q < all.size(); ++q) {
                const auto& tp = all[q];
                RootSet top = maximal_same_cone(all, cones, static_cast<int>(q));
                auto r = relevance(tp.set, t);
                EXPECT_EQ(r.is_relevant, top == tp.set.members) << name << " " << t.str();
                EXPECT_EQ(r.minimal_relevant.members, top) << name << " " << t.str();
            }
        }
    }
}

TEST(Relevance, Examples) {
    auto a3 = build_named("A3");
    TypeLabel delta = delta_type(3);
    auto q = standard_parabolic(a3, TypeLabel::of({1}));
    EXPECT_FALSE(is_relevant(q, delta));
    EXPECT_EQ(minimal_relevant(q, delta), standard_parabolic(a3, TypeLabel::of({0, 1})));
    EXPECT_FALSE(dims_equal(q, delta));
    EXPECT_EQ(weyl_cone(q).dim(), 2);
    EXPECT_EQ(type_cone(q, delta).cone.dim(), 3);
    for (int d = 1; d <= 5; ++d) {
        auto a = build_named("A" + std::to_string(d));
        EXPECT_EQ(minimal_relevant(standard_parabolic(a, {}), delta_type(d)), standard_parabolic(a, delta_type(d)));
    }
    for (const auto& tp : all_parabolics(a3)) EXPECT_TRUE(is_relevant(tp.set, {}));
}

TEST(Relevance, StandardDeltaRelevantForAd) {
    for (int d = 1; d <= 5; ++d) {
        auto a = build_named("A" + std::to_string(d));
        std::set<std::uint64_t> got, expected;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m)
            if (is_relevant(standard_parabolic(a, TypeLabel{m}), delta_type(d))) got.insert(m);
        expected.insert(TypeLabel::full(d).mask);
        for (int r = 0; r < d; ++r) expected.insert(all_but(d, r).mask);
        EXPECT_EQ(got, expected) << d;
    }
}

TEST(Relevance, MinimalRelevantIsIdempotent) {
    auto d = build_named("B3");
    for (TypeLabel t : all_types(3))
        for (const auto& tp : all_parabolics(d)) {
            auto m = minimal_relevant(tp.set, t);
            EXPECT_TRUE(is_relevant(m, t));
            EXPECT_EQ(minimal_relevant(m, t), m);
            EXPECT_TRUE(same_cone(type_cone(m, t).cone, type_cone(tp.set, t).cone));
        }
}

TEST(Spans, MatchLinearAlgebra) {
    for (const char* name : {"A2", "A3", "B3", "G2", "A1xA2"}) {
        auto d = build_named(name);
        for (TypeLabel t : all_types(d->rank()))
            for (const auto& tp : all_parabolics(d)) {
                auto r = relevance(tp.set, t);
                Cone c = type_cone(tp.set, t).cone;
                auto e = rref(r.span_equalities, d->rank());
                EXPECT_EQ(e.rank(), c.annihilator().rank());
                for (const auto& f : r.span_equalities) EXPECT_TRUE(c.annihilator().contains(f));
                EXPECT_EQ(r.dims_equal, c.dim() == weyl_cone(tp.set).dim()) << name << " " << t.str();
            }
    }
}

TEST(Spans, SlExamples) {
    for (int d = 2; d <= 5; ++d) {
        auto a = build_named("A" + std::to_string(d));
        for (int r = 1; r <= d; ++r) {
            auto q = standard_parabolic(a, all_but(d, r - 1));
            EXPECT_EQ(type_cone(q, delta_type(d)).cone.dim(), r);
            EXPECT_EQ(static_cast<int>(span_equalities(q, delta_type(d)).size()), d - r);
        }
        auto b = standard_parabolic(a, {});
        EXPECT_TRUE(span_equalities(b, delta_type(d)).empty());
        EXPECT_TRUE(dims_equal(b, delta_type(d)));
    }
}

TEST(PrefanOfType, A2DeltaHasSevenCones) {
    auto f = prefan_of_type(build_named("A2"), delta_type(2));
    EXPECT_EQ(f.fan.size(), 7);
    std::vector<int> dims;
    for (const auto& c : f.fan.cones()) dims.push_back(c.dim());
    std::sort(dims.begin(), dims.end());
    EXPECT_EQ(dims, (std::vector<int>{0, 1, 1, 1, 2, 2, 2}));
    for (const auto& c : f.fan.cones())
        if (c.dim() == 2) EXPECT_EQ(faces(c).size(), 4u);
}

TEST(PrefanOfType, AxiomsAndLineality) {
    for (const char* name : {"A2", "B2", "G2", "A1xA1", "A3", "A1xA2"}) {
        auto d = build_named(name);
        for (TypeLabel t : all_types(d->rank())) {
            auto f = prefan_of_type(d, t);
            EXPECT_FALSE(missing_face(f.fan).has_value()) << name << " " << t.str();
            EXPECT_NO_THROW(check_common_faces(f.fan));
            EXPECT_TRUE(covers(f.fan)) << name << " " << t.str();
            auto lam = type_support(*d, t).lineality;
            for (const auto& c : f.fan.cones()) {
                if (c.dim() != d->rank()) continue;
                EXPECT_EQ(c.lineality().size(), lam.size());
                for (const auto& l : lam) EXPECT_TRUE(c.contains(l));
            }
        }
    }
}

TEST(PrefanOfType, DegenerateProduct) {
    auto d = build_named("A1xA1");
    TypeLabel t = TypeLabel::of({1});
    auto s = type_support(*d, t);
    ASSERT_EQ(s.nontrivial.size(), 1u);
    ASSERT_EQ(s.trivial.size(), 1u);
    EXPECT_EQ(s.nontrivial[0], TypeLabel::of({0}));
    EXPECT_EQ(s.trivial[0], TypeLabel::of({1}));
    ASSERT_EQ(s.lineality.size(), 1u);
    EXPECT_EQ(s.lineality[0], (Vec{0, 1}));
    for (const auto& c : prefan_of_type(d, t).fan.cones()) EXPECT_EQ(c.lineality().size(), 1u);
}

TEST(TypeSupport, Extremes) {
    auto d = build_named("B3");
    auto s = type_support(*d, TypeLabel::of({0}));
    EXPECT_EQ(s.nontrivial.size(), 1u);
    EXPECT_TRUE(s.trivial.empty());
    auto g = type_support(*d, TypeLabel::full(3));
    EXPECT_TRUE(g.nontrivial.empty());
    EXPECT_EQ(g.trivial.size(), 1u);
}

TEST(RtDecomposition, PartsAreClosed) {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA2"}) {
        auto d = build_named(name);
        for (TypeLabel t : all_types(d->rank()))
            for (const auto& tp : all_parabolics(d)) {
                if (!is_relevant(tp.set, t)) {
                    EXPECT_THROW(rt_decomposition(tp.set, t), ValidationError);
                    continue;
                }
                auto rt = rt_decomposition(tp.set, t);
                EXPECT_TRUE(is_closed(*d, rt.nonvanishing));
                EXPECT_TRUE(is_closed(*d, rt.vanishing));
                EXPECT_EQ(rt.nonvanishing | rt.vanishing, levi_roots(tp.set));
                EXPECT_TRUE((rt.nonvanishing & rt.vanishing).empty());
                // The vanishing part is the root system spanned by the span equalities.
                auto e = rref(span_equalities(tp.set, t), d->rank());
                for (int k : levi_roots(tp.set).indices()) EXPECT_EQ(rt.vanishing.contains(k), e.contains(d->root(k)));
            }
    }
}

TEST(RtDecomposition, SlBlocks) {
    for (int d = 1; d <= 5; ++d) {
        auto a = build_named("A" + std::to_string(d));
        for (int r = 1; r <= d; ++r) {
            auto rt = rt_decomposition(standard_parabolic(a, all_but(d, r - 1)), delta_type(d));
            RootSet nv = a->empty_set(), va = a->empty_set();
            for (int i = 0; i <= d; ++i)
                for (int j = 0; j <= d; ++j) {
                    if (i == j) continue;
                    if (i < r && j < r) nv.insert(chi_root(*a, i, j));
                    if (i >= r && j >= r) va.insert(chi_root(*a, i, j));
                }
            EXPECT_EQ(rt.nonvanishing, nv);
            EXPECT_EQ(rt.vanishing, va);
        }
    }
}

TEST(RtDecomposition, Extremes) {
    auto d = build_named("A3");
    auto g = rt_decomposition(standard_parabolic(d, TypeLabel::full(3)), delta_type(3));
    EXPECT_TRUE(g.nonvanishing.empty());
    EXPECT_EQ(g.vanishing, d->all_roots());
    auto b = rt_decomposition(standard_parabolic(d, {}), {});
    EXPECT_TRUE(b.nonvanishing.empty());
    EXPECT_TRUE(b.vanishing.empty());
}
