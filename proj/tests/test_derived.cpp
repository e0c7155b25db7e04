#include <set>

#include <gtest/gtest.h>

#include <thicket/thicket.hpp>

using namespace thicket;

namespace {
const Context& ctx_of(Series s, int n) { return context(DynkinType::make(s, n)); }
}  // namespace

TEST(ZDelta, TauMovesLeft) {
    const ZDelta& zd = ctx_of(Series::A, 3).zd;
    EXPECT_EQ(zd.apply(zd.tau(), Vertex{5, 2}), (Vertex{4, 2}));
}

TEST(ZDelta, LabelLayersBiject) {
    for (const auto& d : dynkin_types(7)) EXPECT_TRUE(check_label_layers(d).passed()) << d.name();
}

TEST(ZDelta, ProjectivesSeedTheWalk) {
    for (const auto& d : dynkin_types(6)) {
        const Context& ctx = context(d);
        const auto& eps = ctx.zd.potential();
        for (int q = 0; q < d.rank; ++q) {
            const VertexLabel l = ctx.zd.label({-eps[q], q});
            EXPECT_EQ(ctx.rs.positives()[l.root], ctx.rs.projectives()[q]) << d.name();
            EXPECT_EQ(l.shift, 0);
        }
    }
}

TEST(ZDelta, A2StepAppliesInverseCoxeter) {
    const Context& ctx = ctx_of(Series::A, 2);
    // P(1) = e_1 + e_2 for the orientation 1 -> 2
    const VertexLabel p1 = ctx.zd.label({0, 0});
    EXPECT_EQ(ctx.rs.positives()[p1.root], (Vec{1, 1}));
    const Vec next = ctx.rs.cox_inverse()(Vec{1, 1});
    const VertexLabel l = ctx.zd.label({1, 0});
    Vec expect = next;
    if (std::any_of(next.begin(), next.end(), [](int c) { return c < 0; }))
        for (int& c : expect) c = -c;
    EXPECT_EQ(ctx.rs.positives()[l.root], expect);
}

TEST(ZDelta, HStepsChangeShiftByTwo) {
    for (const auto& d : dynkin_types(6)) {
        const ZDelta& zd = context(d).zd;
        for (int q = 0; q < d.rank; ++q) {
            const Vertex v{0, q}, w{d.h(), q};
            EXPECT_EQ(zd.root_index(v), zd.root_index(w));
            EXPECT_EQ(std::abs(zd.shift(w) - zd.shift(v)), 2);
            EXPECT_EQ(zd.shift(zd.apply(zd.tau(d.h()), w)), zd.shift(v));
        }
    }
}

TEST(ZDelta, MeshRelations) {
    for (const auto& d : dynkin_types(6)) {
        const Context& ctx = context(d);
        const ZDelta& zd = ctx.zd;
        auto signed_class = [&](Vertex v) {
            Vec r = ctx.rs.positives()[zd.root_index(v)];
            if (zd.shift(v) % 2 != 0)
                for (int& c : r) c = -c;
            return r;
        };
        for (int m = 1; m < 2 * d.h(); ++m)
            for (int q = 0; q < d.rank; ++q) {
                // [tau x] + [x] = sum over middle terms of the mesh
                Vec lhs = signed_class({m - 1, q});
                const Vec x = signed_class({m, q});
                for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += x[i];
                Vec rhs(lhs.size(), 0);
                for (auto [a, b] : ctx.rs.arrows()) {
                    std::optional<Vertex> mid;
                    if (b == q) mid = Vertex{m, a};
                    if (a == q) mid = Vertex{m - 1, b};
                    if (!mid) continue;
                    const Vec y = signed_class(*mid);
                    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += y[i];
                }
                EXPECT_EQ(lhs, rhs) << d.name() << " (" << m << "," << q + 1 << ")";
            }
    }
}

TEST(Suspension, Composites) {
    const ZDelta& d4 = ctx_of(Series::D, 4).zd;
    EXPECT_TRUE(d4.same_vertex_map(d4.suspension(), d4.tau(3)));
    const ZDelta& a3 = ctx_of(Series::A, 3).zd;
    EXPECT_TRUE(a3.same_vertex_map(a3.suspension(), a3.phi() * a3.tau(2)));
    for (const auto& d : dynkin_types(7)) EXPECT_TRUE(check_suspension(d).passed()) << d.name();
}

TEST(Phi, Orders) {
    for (const auto& d : dynkin_types(6)) EXPECT_TRUE(check_phi_order(d).passed()) << d.name();
    const ZDelta& a4 = ctx_of(Series::A, 4).zd;
    EXPECT_TRUE(a4.same_vertex_map(a4.phi() * a4.phi(), a4.tau()));
    const ZDelta& d4 = ctx_of(Series::D, 4).zd;
    const auto t = d4.phi(true);
    EXPECT_FALSE(d4.same_vertex_map(t, d4.identity()));
    EXPECT_TRUE(d4.same_vertex_map(t * t * t, d4.identity()));
    EXPECT_THROW(ctx_of(Series::E, 7).zd.phi(), InvalidType);
}

TEST(Phi, TypeAEvenFormula) {
    // phi(p, q) = (p + q - n/2 - 1, n + 1 - q), with 1-based q and p = m
    for (int n : {2, 4, 6}) {
        const ZDelta& zd = ctx_of(Series::A, n).zd;
        for (int m = -3; m < 5; ++m)
            for (int q = 1; q <= n; ++q) {
                const Vertex img = zd.apply(zd.phi(), {m, q - 1});
                EXPECT_EQ(img, (Vertex{m + q - n / 2 - 1, n - q}));
            }
    }
}

TEST(Phi, E6FixesCentralLine) {
    const ZDelta& zd = ctx_of(Series::E, 6).zd;
    const auto phi = zd.phi();
    EXPECT_EQ(phi.pi[2], 2);
    EXPECT_EQ(phi.pi[3], 3);
    EXPECT_NE(phi.pi, zd.identity().pi);
}

TEST(ThickFromNc, IdentityAndCoxeter) {
    const Context& ctx = ctx_of(Series::A, 4);
    const auto ct = CategoryType::make(Series::A, 4, 1, 1);
    EXPECT_TRUE(marked_vertices(ctx, thick_from_nc(ctx, GroupElement::identity(4), ct).roots, 0, 10).empty());
    EXPECT_EQ(marked_vertices(ctx, thick_from_nc(ctx, ctx.rs.cox(), ct).roots, 0, 10).size(), 40u);
    EXPECT_THROW(thick_from_nc(ctx, ctx.rs.cox() * ctx.rs.cox(), ct), NotInInterval);
}

TEST(ThickFromNc, TauEquivariance) {
    for (const auto& d : dynkin_types(4)) {
        const Context& ctx = context(d);
        for (std::size_t i = 0; i < ctx.nc.size(); ++i) {
            const GroupElement c = ctx.rs.cox() * ctx.nc[i] * ctx.rs.cox_inverse();
            const auto j = ctx.nc.index_of(c);
            ASSERT_TRUE(j);
            EXPECT_EQ(ctx.zd.image_roots(ctx.roots[i], ctx.zd.tau()), ctx.roots[*j]) << d.name();
        }
    }
}

TEST(Invariance, TrivialSets) {
    const Context& ctx = ctx_of(Series::D, 5);
    for (const auto& g : {ctx.zd.tau(3), ctx.zd.phi(), ctx.zd.suspension()}) {
        EXPECT_TRUE(is_invariant_vertex_set(ctx, RootSet{}, g));
        EXPECT_TRUE(is_invariant_vertex_set(ctx, ctx.full, g));
    }
}

TEST(Invariance, A5Tau4) {
    const Context& ctx = ctx_of(Series::A, 5);
    EXPECT_EQ(ctx.nc.size(), 132u);
    EXPECT_EQ(brute_force_indices(ctx, ctx.zd.tau(4)).size(), 6u);
}

TEST(BruteForce, SmallCases) {
    EXPECT_EQ(brute_force_classify(CategoryType::make(Series::D, 4, 3, 3)).size(), 8u);
    EXPECT_EQ(brute_force_classify(CategoryType::make(Series::A, 2, 1, 1)).size(), 2u);
    EXPECT_EQ(brute_force_classify(CategoryType::make(Series::D, 4, 1, 1)).size(), 2u);
}

// The closed-form count for (D_4, r, 3), r not divisible by 3, is 2; the oracle finds 5.
TEST(BruteForce, D4TrialityNonzeroResidue) {
    for (int r : {1, 2, 4, 5}) {
        const auto thick = brute_force_classify(CategoryType::make(Series::D, 4, r, 3));
        EXPECT_EQ(thick.size(), 5u) << r;
    }
}

TEST(BruteForce, D4TrialitySixProper) {
    const Context& ctx = ctx_of(Series::D, 4);
    const auto thick = brute_force_classify(CategoryType::make(Series::D, 4, 3, 3));
    std::vector<int> proper;
    for (const auto& d : thick)
        if (d.roots.any() && d.roots != ctx.full) proper.push_back(d.nc_index);
    ASSERT_EQ(proper.size(), 6u);
    std::set<int> left(proper.begin(), proper.end());
    int orbits = 0;
    while (!left.empty()) {
        const int start = *left.begin();
        int i = start;
        for (int k = 0; k < 3; ++k) {
            EXPECT_TRUE(left.erase(i)) << "orbit leaves the proper set";
            i = *ctx.index_of_roots(ctx.zd.image_roots(ctx.roots[i], ctx.zd.tau()));
        }
        EXPECT_EQ(i, start) << "orbit size is not 3";
        ++orbits;
    }
    EXPECT_EQ(orbits, 2);
}

TEST(Cluster, OnlyTrivial) {
    for (const auto& d : dynkin_types(6))
        for (int m : {1, 2}) EXPECT_EQ(cluster_category_check(d, m).invariant, 2u) << d.name() << " m=" << m;
}
