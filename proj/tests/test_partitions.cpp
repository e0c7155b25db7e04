#include <set>

#include <gtest/gtest.h>

#include <thicket/thicket.hpp>

using namespace thicket;

TEST(SetPartitionA, CanonicalForm) {
    const SetPartitionA p(4, {{4, 2}, {3}, {1}});
    EXPECT_EQ(p.blocks(), (std::vector<Block>{{1}, {2, 4}, {3}}));
    EXPECT_THROW(SetPartitionA(3, {{1, 2}, {2, 3}}), InvalidPartition);
    EXPECT_THROW(SetPartitionA(3, {{1, 2}}), InvalidPartition);
}

TEST(Noncrossing, Examples) {
    EXPECT_TRUE(is_noncrossing_a(SetPartitionA(4, {{1, 3}, {2}, {4}})));
    EXPECT_FALSE(is_noncrossing_a(SetPartitionA(4, {{1, 3}, {2, 4}})));
    EXPECT_TRUE(is_noncrossing_a(SetPartitionA::singletons(7)));
}

TEST(Noncrossing, Enumeration) {
    EXPECT_EQ(enumerate_nc_a(2).size(), 2u);
    EXPECT_EQ(enumerate_nc_a(3).size(), 5u);
    EXPECT_EQ(enumerate_all_partitions(4).size(), 15u);
    EXPECT_EQ(enumerate_nc_a(4).size(), 14u);
    for (const auto& p : enumerate_all_partitions(4))
        EXPECT_EQ(is_noncrossing_a(p), p != SetPartitionA(4, {{1, 3}, {2, 4}}));
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(static_cast<long long>(enumerate_nc_a(n).size()), catalan(n)) << n;
}

TEST(Rotation, Examples) {
    const SetPartitionA p(3, {{1, 2}, {3}});
    EXPECT_EQ(rotate_a(p, 1), SetPartitionA(3, {{2, 3}, {1}}));
    for (const auto& q : enumerate_nc_a(6)) {
        EXPECT_EQ(rotate_a(q, 6), q);
        std::multiset<std::size_t> a, b;
        for (const auto& blk : q.blocks()) a.insert(blk.size());
        const SetPartitionA r = rotate_a(q, 2);
        for (const auto& blk : r.blocks()) b.insert(blk.size());
        EXPECT_EQ(a, b);
    }
}

TEST(Rotation, PreservesNoncrossing) {
    for (const auto& p : enumerate_all_partitions(6))
        for (int k = 0; k < 6; ++k) EXPECT_EQ(is_noncrossing_a(rotate_a(p, k)), is_noncrossing_a(p));
}

TEST(Rotation, InvariantCounts) {
    for (int h = 2; h <= 10; ++h) {
        const auto all = enumerate_nc_a(h);
        for (int s = 1; s < h; ++s) {
            if (h % s) continue;
            long long c = 0;
            for (const auto& p : all) c += rotate_a(p, s) == p;
            EXPECT_EQ(c, binom(2 * s, s)) << "h=" << h << " s=" << s;
        }
    }
}

TEST(Kreweras, Examples) {
    EXPECT_EQ(kreweras_alpha(SetPartitionA::singletons(5)), SetPartitionA::full(5));
    EXPECT_EQ(kreweras_alpha(SetPartitionA::full(5)), SetPartitionA::singletons(5));
    EXPECT_EQ(kreweras_alpha(SetPartitionA(4, {{1, 2}, {3}, {4}})).num_blocks(), 2u);
    EXPECT_THROW(kreweras_alpha(SetPartitionA(4, {{1, 3}, {2, 4}})), Crossing);
}

TEST(Kreweras, BijectionAndBlockCount) {
    for (int n = 1; n <= 8; ++n) {
        std::set<SetPartitionA> images;
        for (const auto& p : enumerate_nc_a(n)) {
            const SetPartitionA a = kreweras_alpha(p);
            EXPECT_EQ(a.num_blocks(), n - p.num_blocks() + 1);
            EXPECT_TRUE(is_noncrossing_a(interlace(p, a)));
            EXPECT_EQ(kreweras_alpha_inverse(a), p);
            images.insert(a);
        }
        EXPECT_EQ(static_cast<long long>(images.size()), catalan(n));
    }
}

// Diagnostic only: the maximal complement squares to a rotation.
TEST(Kreweras, SquareIsRotationNotIdentity) {
    int non_involutive = 0;
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_nc_a(n)) {
            const SetPartitionA a2 = kreweras_alpha(kreweras_alpha(p));
            non_involutive += a2 != p;
            EXPECT_EQ(a2, rotate_a(p, n - 1));
        }
    EXPECT_EQ(non_involutive, 2040);
}

TEST(ProjectF, Examples) {
    EXPECT_EQ(project_f(SetPartitionA::full(6), 2), SetPartitionA::full(2));
    EXPECT_EQ(project_f(SetPartitionA::singletons(6), 3), SetPartitionA::singletons(3));
    EXPECT_EQ(project_f(SetPartitionA(6, {{1, 4}, {2, 3}, {5, 6}}), 3), SetPartitionA(3, {{1}, {2, 3}}));
    EXPECT_THROW(project_f(SetPartitionA(6, {{1, 2}, {3}, {4}, {5}, {6}}), 2), NotInvariant);
    EXPECT_THROW(project_f(SetPartitionA::full(6), 4), BadDivisor);
}

TEST(ProjectF, CommutesWithAlpha) {
    for (auto [s, x] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        for (const auto& v : enumerate_nc_a(s * x)) {
            if (rotate_a(v, s) != v) continue;
            EXPECT_EQ(project_f(kreweras_alpha(v), s), kreweras_alpha(project_f(v, s)));
        }
    }
}

TEST(Fiber, SixPointExample) {
    const auto fiber = construct_fiber(SetPartitionA(2, {{1}, {2}}), 3);
    EXPECT_EQ(fiber.size(), 3u);
    std::size_t total = 0;
    for (const auto& w : enumerate_nc_a(2)) total += construct_fiber(w, 3).size();
    EXPECT_EQ(total, 6u);
    EXPECT_THROW(construct_fiber(SetPartitionA(2, {{1}, {2}}), 1), BadDivisor);
}

TEST(Fiber, MatchesBruteForce) {
    for (auto [s, x] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
        const int h = s * x;
        std::set<SetPartitionA> invariant;
        for (const auto& p : enumerate_nc_a(h))
            if (rotate_a(p, s) == p) invariant.insert(p);
        std::set<SetPartitionA> seen;
        for (const auto& w : enumerate_nc_a(s)) {
            const auto fiber = construct_fiber(w, x);
            EXPECT_EQ(static_cast<int>(fiber.size()), s + 1);
            for (const auto& p : fiber) {
                EXPECT_EQ(project_f(p, s), w);
                EXPECT_TRUE(seen.insert(p).second) << "fibers overlap";
            }
        }
        EXPECT_EQ(seen, invariant) << "s=" << s << " x=" << x;
        EXPECT_EQ(static_cast<long long>(seen.size()), binom(2 * s, s));
    }
}

TEST(BPartition, Counts) {
    const auto b1 = enumerate_nc_b(1);
    ASSERT_EQ(b1.size(), 2u);
    EXPECT_TRUE(std::find(b1.begin(), b1.end(), BPartition(1, {{1, -1}})) != b1.end());
    EXPECT_TRUE(std::find(b1.begin(), b1.end(), BPartition(1, {{1}, {-1}})) != b1.end());
    EXPECT_EQ(count_nc_b(2), 6);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(count_nc_b(n), binom(2 * n, n));
    for (const auto& p : enumerate_nc_b(3))
        for (const auto& b : p.blocks()) {
            Block neg;
            for (int x : b) neg.push_back(-x);
            std::sort(neg.begin(), neg.end(), signed_label_less);
            EXPECT_TRUE(std::find(p.blocks().begin(), p.blocks().end(), neg) != p.blocks().end());
        }
}

TEST(DPartition, Validation) {
    EXPECT_THROW(DPartition(4, {{1, -1}, {2}, {-2}, {3}, {-3}, {4}, {-4}}), InvalidPartition);
    EXPECT_THROW(DPartition(4, {{1, 2}, {-1}, {-2}, {3}, {-3}, {4}, {-4}}), InvalidPartition);
    EXPECT_THROW(DPartition(3, {{1}, {-1}, {2}, {-2}, {3}, {-3}}), InvalidPartition);
    EXPECT_NO_THROW(BPartition(2, {{1, -1}, {2}, {-2}}));
    const DPartition z(4, {{1, -1, 4, -4}, {2}, {-2}, {3}, {-3}});
    EXPECT_GE(z.zero_block(), 0);
}

TEST(DPartition, RhoSigma) {
    const DPartition p(4, {{1, 2}, {-1, -2}, {3}, {-3}, {4}, {-4}});
    EXPECT_EQ(rho(p), DPartition(4, {{2, 3}, {-2, -3}, {1}, {-1}, {4}, {-4}}));
    const DPartition z(5, {{1, -1, 5, -5}, {2}, {-2}, {3}, {-3}, {4}, {-4}});
    EXPECT_EQ(sigma(z), z);
    const Context& ctx = context(DynkinType::make(Series::D, 4));
    for (const auto& q : enumerate_nc_d(ctx.rs, ctx.nc)) {
        EXPECT_EQ(rho(q, 6), q);
        EXPECT_EQ(sigma(sigma(q)), q);
        EXPECT_EQ(sigma(rho(q)), rho(sigma(q)));
        DPartition x = q;
        for (int k = 0; k < 6; ++k) x = sigma(rho(x));
        EXPECT_EQ(x, q);
    }
}

TEST(DPartition, CentroidSign) {
    // sigma swaps n and -n inside non-zero blocks
    const DPartition p(4, {{1, 4}, {-1, -4}, {2}, {-2}, {3}, {-3}});
    EXPECT_EQ(sigma(p), DPartition(4, {{1, -4}, {-1, 4}, {2}, {-2}, {3}, {-3}}));
}
