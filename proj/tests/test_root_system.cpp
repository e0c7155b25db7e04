#include <random>
#include <set>

#include <gtest/gtest.h>

#include <thicket/thicket.hpp>

using namespace thicket;

namespace {

const RootSystem& rs_of(Series s, int n) { return context(DynkinType::make(s, n)).rs; }

// Smallest k with w a product of k reflections, by breadth-first search over W.
int shortest_factorization(const RootSystem& rs, const GroupElement& w) {
    std::vector<GroupElement> refl;
    for (const auto& v : rs.positives()) refl.push_back(reflection(rs, v));
    std::set<GroupElement> seen{GroupElement::identity(rs.rank())};
    std::vector<GroupElement> layer{GroupElement::identity(rs.rank())};
    for (int k = 0;; ++k) {
        for (const auto& x : layer)
            if (x == w) return k;
        std::vector<GroupElement> next;
        for (const auto& x : layer)
            for (const auto& t : refl)
                if (seen.insert(x * t).second) next.push_back(x * t);
        layer = std::move(next);
    }
}

std::vector<GroupElement> whole_group(const RootSystem& rs) {
    std::set<GroupElement> seen{GroupElement::identity(rs.rank())};
    std::vector<GroupElement> todo{GroupElement::identity(rs.rank())};
    while (!todo.empty()) {
        const GroupElement x = todo.back();
        todo.pop_back();
        for (int i = 0; i < rs.rank(); ++i) {
            const GroupElement y = x * rs.simple_reflection(i);
            if (seen.insert(y).second) todo.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

TEST(DynkinType, Validation) {
    EXPECT_THROW(DynkinType::make(Series::A, 0), InvalidDynkin);
    EXPECT_THROW(DynkinType::make(Series::D, 3), InvalidDynkin);
    EXPECT_THROW(DynkinType::make(Series::E, 5), InvalidDynkin);
    EXPECT_THROW(DynkinType::make(Series::E, 9), InvalidDynkin);
    EXPECT_NO_THROW(DynkinType::make(Series::E, 8));
    EXPECT_EQ(DynkinType::make(Series::D, 5).h(), 8);
    EXPECT_EQ(DynkinType::make(Series::A, 4).m(), 4);
}

TEST(RootSystem, PositiveRootCounts) {
    const RootSystem& a1 = rs_of(Series::A, 1);
    ASSERT_EQ(a1.num_positives(), 1);
    EXPECT_EQ(a1.positives()[0], Vec{1});
    EXPECT_EQ(rs_of(Series::A, 3).num_positives(), 6);
    EXPECT_EQ(rs_of(Series::D, 4).num_positives(), 12);
    EXPECT_EQ(rs_of(Series::E, 6).num_positives(), 36);
    EXPECT_EQ(rs_of(Series::E, 7).num_positives(), 63);
    EXPECT_EQ(rs_of(Series::E, 8).num_positives(), 120);
}

TEST(RootSystem, FormsAndRoots) {
    for (const auto& d : dynkin_types(8)) {
        const RootSystem& rs = context(d).rs;
        EXPECT_EQ(rs.sym_form(), rs.euler_form() + rs.euler_form().transposed()) << d.name();
        for (const auto& v : rs.positives()) {
            EXPECT_EQ(bilinear(rs.sym_form(), v, v), 2);
            for (int c : v) EXPECT_GE(c, 0);
        }
    }
}

TEST(Reflection, A2Alpha1) {
    const RootSystem& rs = rs_of(Series::A, 2);
    const GroupElement s = reflection(rs, {1, 0});
    EXPECT_EQ(s(Vec{1, 0}), (Vec{-1, 0}));
    EXPECT_EQ(s(Vec{0, 1}), (Vec{1, 1}));
    EXPECT_EQ(reflection(rs_of(Series::A, 1), {1}).matrix(), IntMatrix{{-1}});
}

TEST(Reflection, InvolutionAndRootPermutation) {
    for (const auto& d : dynkin_types(6)) {
        const RootSystem& rs = context(d).rs;
        std::set<Vec> all(rs.positives().begin(), rs.positives().end());
        for (const auto& v : rs.positives()) {
            Vec neg = v;
            for (int& c : neg) c = -c;
            all.insert(neg);
        }
        for (const auto& v : rs.positives()) {
            const GroupElement s = reflection(rs, v);
            EXPECT_EQ(s * s, GroupElement::identity(rs.rank()));
            EXPECT_EQ(absolute_length(s), 1);
            for (const auto& u : rs.positives()) EXPECT_TRUE(all.count(s(u)));
        }
    }
}

TEST(Reflection, RejectsNonRoot) {
    EXPECT_THROW(reflection(rs_of(Series::A, 2), {1, -1}), NotARoot);
    EXPECT_THROW(reflection(rs_of(Series::A, 2), {2, 0}), NotARoot);
}

TEST(Coxeter, OrderIsCoxeterNumber) {
    for (const auto& d : dynkin_types(8)) EXPECT_EQ(matrix_order(coxeter_element(context(d).rs)), d.h()) << d.name();
    EXPECT_EQ(matrix_order(coxeter_element(rs_of(Series::E, 6))), 12);
}

TEST(Coxeter, TypeASpecializationIsLongCycle) {
    for (int n = 1; n <= 6; ++n) {
        const RootSystem& rs = rs_of(Series::A, n);
        Cycle c(n + 1);
        std::iota(c.begin(), c.end(), 1);
        EXPECT_EQ(type_a_as_permutation(rs, rs.cox()), Permutation::from_cycles(n + 1, {c}));
    }
}

TEST(Coxeter, TypeDSpecialization) {
    for (int n = 4; n <= 6; ++n) {
        const RootSystem& rs = rs_of(Series::D, n);
        Cycle c;
        for (int i = 1; i < n; ++i) c.push_back(i);
        for (int i = 1; i < n; ++i) c.push_back(-i);
        EXPECT_EQ(type_d_as_signed_permutation(rs, rs.cox()), SignedPermutation::from_cycles(n, {c, {n, -n}}));
    }
}

TEST(Coxeter, SimpleReflectionImages) {
    const RootSystem& a2 = rs_of(Series::A, 2);
    EXPECT_EQ(type_a_as_permutation(a2, a2.simple_reflection(0)), Permutation::from_cycles(3, {{1, 2}}));
    for (int n = 4; n <= 6; ++n) {
        const RootSystem& rs = rs_of(Series::D, n);
        EXPECT_EQ(type_d_as_signed_permutation(rs, rs.simple_reflection(n - 1)),
                  SignedPermutation::from_cycles(n, {{-(n - 1), n}, {n - 1, -n}}));
    }
    EXPECT_THROW(type_a_as_permutation(rs_of(Series::D, 4), GroupElement::identity(4)), WrongSeries);
    EXPECT_THROW(type_d_as_signed_permutation(a2, GroupElement::identity(2)), WrongSeries);
}

TEST(Coxeter, SpecializationIsHomomorphism) {
    std::mt19937 rng(7);
    for (auto [s, n] : {std::pair{Series::A, 4}, std::pair{Series::D, 5}}) {
        const RootSystem& rs = rs_of(s, n);
        auto random_element = [&] {
            GroupElement g = GroupElement::identity(n);
            for (int k = 0; k < 12; ++k) g = g * rs.simple_reflection(static_cast<int>(rng() % n));
            return g;
        };
        for (int trial = 0; trial < 100; ++trial) {
            const GroupElement u = random_element(), v = random_element();
            if (s == Series::A)
                EXPECT_EQ(type_a_as_permutation(rs, u * v), type_a_as_permutation(rs, u) * type_a_as_permutation(rs, v));
            else
                EXPECT_EQ(type_d_as_signed_permutation(rs, u * v),
                          type_d_as_signed_permutation(rs, u) * type_d_as_signed_permutation(rs, v));
            EXPECT_EQ(s == Series::A ? permutation_to_element(rs, type_a_as_permutation(rs, u))
                                     : signed_permutation_to_element(rs, type_d_as_signed_permutation(rs, u)),
                      u);
        }
    }
}

TEST(AbsoluteLength, BasicValues) {
    for (const auto& d : dynkin_types(8)) {
        const RootSystem& rs = context(d).rs;
        EXPECT_EQ(absolute_length(GroupElement::identity(rs.rank())), 0);
        EXPECT_EQ(absolute_length(rs.cox()), rs.rank()) << d.name();
    }
}

TEST(AbsoluteLength, MatchesShortestFactorizationUpToRank3) {
    for (auto [s, n] : {std::pair{Series::A, 1}, std::pair{Series::A, 2}, std::pair{Series::A, 3}}) {
        const RootSystem& rs = rs_of(s, n);
        for (const auto& w : whole_group(rs)) EXPECT_EQ(absolute_length(w), shortest_factorization(rs, w));
    }
}

TEST(AbsoluteOrder, A2Interval) {
    const RootSystem& rs = rs_of(Series::A, 2);
    const GroupElement s1 = rs.simple_reflection(0), s2 = rs.simple_reflection(1);
    for (const auto& w : whole_group(rs)) {
        EXPECT_TRUE(leq_absolute(GroupElement::identity(2), w));
        EXPECT_TRUE(leq_absolute(w, w));
    }
    EXPECT_TRUE(leq_absolute(s1, rs.cox()));
    EXPECT_TRUE(leq_absolute(s2, rs.cox()));
    EXPECT_TRUE(leq_absolute(s1 * s2 * s1, rs.cox()));
    int below = 0;
    for (const auto& w : whole_group(rs)) below += leq_absolute(w, rs.cox());
    EXPECT_EQ(below, 5);
}

// Transitive closure of the covering relation u < ut, l(ut) = l(u) + 1.
TEST(AbsoluteOrder, AgreesWithCoveringClosure) {
    for (auto [s, n] : {std::pair{Series::A, 3}, std::pair{Series::D, 4}}) {
        const RootSystem& rs = rs_of(s, n);
        const auto& nc = context(DynkinType::make(s, n)).nc;
        std::vector<GroupElement> refl;
        for (const auto& v : rs.positives()) refl.push_back(reflection(rs, v));
        for (const auto& u : nc.elements()) {
            std::set<GroupElement> up{u};
            std::vector<GroupElement> layer{u};
            while (!layer.empty()) {
                std::vector<GroupElement> next;
                for (const auto& x : layer)
                    for (const auto& t : refl) {
                        const GroupElement y = x * t;
                        if (absolute_length(y) == absolute_length(x) + 1 && up.insert(y).second) next.push_back(y);
                    }
                layer = std::move(next);
            }
            for (const auto& w : nc.elements()) EXPECT_EQ(leq_absolute(u, w), up.count(w) == 1);
        }
    }
}

TEST(NcInterval, Sizes) {
    EXPECT_EQ(enumerate_nc(rs_of(Series::A, 1)).size(), 2u);
    EXPECT_EQ(enumerate_nc(rs_of(Series::A, 3)).size(), 14u);
    EXPECT_EQ(enumerate_nc(rs_of(Series::D, 4)).size(), 50u);
    EXPECT_EQ(context(DynkinType::make(Series::D, 5)).nc.size(), 182u);
    EXPECT_EQ(context(DynkinType::make(Series::D, 6)).nc.size(), 672u);
    EXPECT_EQ(context(DynkinType::make(Series::E, 6)).nc.size(), 833u);
}

TEST(NcInterval, A3AgainstWholeGroup) {
    const RootSystem& rs = rs_of(Series::A, 3);
    int below = 0;
    for (const auto& w : whole_group(rs)) below += leq_absolute(w, rs.cox());
    EXPECT_EQ(below, 14);
}

TEST(NcInterval, ClosedUnderCoxeterConjugation) {
    for (const auto& d : dynkin_types(4)) {
        const Context& ctx = context(d);
        for (const auto& w : ctx.nc.elements()) EXPECT_TRUE(ctx.nc.contains(ctx.rs.cox() * w * ctx.rs.cox_inverse()));
    }
}

TEST(RootsBelow, Examples) {
    const RootSystem& rs = rs_of(Series::A, 2);
    EXPECT_TRUE(roots_below(rs, GroupElement::identity(2)).none());
    EXPECT_EQ(static_cast<int>(roots_below(rs, rs.cox()).count()), rs.num_positives());
    const auto below = root_list(rs, roots_below(rs, rs.simple_reflection(0)));
    ASSERT_EQ(below.size(), 1u);
    EXPECT_EQ(below[0], (Vec{1, 0}));
    // s1 s2 s1 s2 is not below cox in A_2
    const GroupElement outside = rs.cox() * rs.cox();
    EXPECT_THROW(roots_below(rs, outside), NotInInterval);
}

TEST(RootsBelow, GenerateTheElement) {
    const Context& ctx = context(DynkinType::make(Series::D, 4));
    for (std::size_t i = 0; i < ctx.nc.size(); ++i) {
        const auto roots = root_list(ctx.rs, ctx.roots[i]);
        EXPECT_EQ(roots.empty(), ctx.nc[i] == GroupElement::identity(4));
        // the reflections below w generate a subgroup containing w
        std::set<GroupElement> sub{GroupElement::identity(4)};
        std::vector<GroupElement> todo{GroupElement::identity(4)};
        while (!todo.empty()) {
            const GroupElement x = todo.back();
            todo.pop_back();
            for (const auto& v : roots)
                if (sub.insert(x * reflection(ctx.rs, v)).second) todo.push_back(x * reflection(ctx.rs, v));
        }
        EXPECT_TRUE(sub.count(ctx.nc[i]));
    }
}

TEST(Linalg, BareissRankAndInverse) {
    const IntMatrix m{{2, 4}, {1, 2}};
    EXPECT_EQ(bareiss_rank(m), 1);
    EXPECT_EQ(bareiss_det(IntMatrix{{2, 1}, {1, 1}}), 1);
    const IntMatrix u{{2, 1}, {1, 1}};
    EXPECT_EQ(u * unimodular_inverse(u), IntMatrix::identity(2));
}
