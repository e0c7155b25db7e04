#include <gtest/gtest.h>

#include <thicket/thicket.hpp>

using namespace thicket;

TEST(Json, GroupElementRoundtrip) {
    for (const auto& d : dynkin_types(6)) {
        const Context& ctx = context(d);
        for (std::size_t i = 0; i < ctx.nc.size(); i += 37) {
            const json j = json::parse(to_json(ctx.rs, ctx.nc[i]).dump());
            EXPECT_EQ(j["series"], std::string(1, series_char(d.series)));
            EXPECT_EQ(j["rank"], d.rank);
            EXPECT_EQ(group_element_from_json(ctx.rs, j), ctx.nc[i]);
            EXPECT_EQ(j["cycles"].is_null(), d.series == Series::E);
        }
    }
}

TEST(Json, DCycles) {
    const Context& ctx = context(DynkinType::make(Series::D, 4));
    const json j = to_json(ctx.rs, ctx.rs.cox());
    EXPECT_EQ(j["cycles"], json::parse("[[1,2,3,-1,-2,-3],[4,-4]]"));
}

TEST(Json, PartitionSchemas) {
    const SetPartitionA a(6, {{1, 4}, {2, 3}, {5}, {6}});
    EXPECT_EQ(to_json(a).dump(), R"({"blocks":[[1,4],[2,3],[5],[6]],"model":"A","n":6})");
    EXPECT_EQ(partition_a_from_json(json::parse(to_json(a).dump())), a);
    const DPartition d(4, {{1, -1, 4, -4}, {2}, {-2}, {3}, {-3}});
    const json jd = to_json(d);
    EXPECT_EQ(jd["model"], "D");
    int zeros = 0;
    for (const auto& b : jd["blocks"]) zeros += b["zero_block"].get<bool>();
    EXPECT_EQ(zeros, 1);
    EXPECT_EQ(partition_d_from_json(json::parse(jd.dump())), d);
    const BPartition b(1, {{1, -1}});
    EXPECT_EQ(partition_b_from_json(to_json(b)), b);
}

TEST(Json, Descriptor) {
    const CategoryType ct = CategoryType::make(Series::A, 5, 4, 1);
    const Context& ctx = context(ct.delta);
    const auto thick = enumerate_thick(ct);
    const json j = to_json(ctx, thick.back());
    EXPECT_EQ(j["type"], json::parse(R"({"series":"A","rank":5,"r":4,"t":"1"})"));
    EXPECT_EQ(j["roots"].size(), thick.back().roots.count());
    EXPECT_EQ(group_element_from_json(ctx.rs, j["nc"]), thick.back().nc_element);
    for (const auto& v : j["marked_vertices"]) {
        EXPECT_GE(v[1].get<int>(), 1);
        EXPECT_LE(v[1].get<int>(), 5);
    }
}

TEST(Json, Report) {
    const auto rep = classify(CategoryType::make(Series::A, 5, 4, 1), true);
    EXPECT_EQ(to_json(rep), json::parse(R"({"type":{"series":"A","rank":5,"r":4,"t":"1"},"criterion":"cox_conjugation",
        "s":2,"count_formula":6,"count_enumerated":6,"count_brute_force":6,"agree":true})"));
    const auto e6 = classify(CategoryType::make(Series::E, 6, 6, 1), false);
    EXPECT_TRUE(to_json(e6)["count_formula"].is_null());
    EXPECT_TRUE(to_json(e6)["count_brute_force"].is_null());
}
