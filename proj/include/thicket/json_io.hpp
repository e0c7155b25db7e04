#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bijections.hpp"
#include "classifier.hpp"

namespace thicket {

using json = nlohmann::json;

inline json type_json(const DynkinType& d) { return {{"series", std::string(1, series_char(d.series))}, {"rank", d.rank}}; }

inline json type_json(const CategoryType& ct) {
    json j = type_json(ct.delta);
    j["r"] = ct.r;
    j["t"] = t_string(ct.t);
    return j;
}

inline json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(m(i, k));
        rows.push_back(row);
    }
    return rows;
}

inline IntMatrix matrix_from_json(const json& j) {
    const int n = static_cast<int>(j.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(j[i].size()) != n) throw InvalidPartition("matrix must be square");
        for (int k = 0; k < n; ++k) m(i, k) = j[i][k].get<int>();
    }
    return m;
}

/// cycles are null for series E.
inline json to_json(const RootSystem& rs, const GroupElement& w) {
    json j = type_json(rs.delta());
    j["matrix"] = matrix_json(w.matrix());
    switch (rs.delta().series) {
        case Series::A: j["cycles"] = type_a_as_permutation(rs, w).cycles(); break;
        case Series::D: j["cycles"] = type_d_as_signed_permutation(rs, w).cycles(); break;
        case Series::E: j["cycles"] = nullptr; break;
    }
    return j;
}

inline GroupElement group_element_from_json(const RootSystem& rs, const json& j) {
    const GroupElement w(matrix_from_json(j.at("matrix")));
    if (w.rank() != rs.rank()) throw InvalidDynkin("matrix size does not match the rank");
    return w;
}

inline json to_json(const SetPartitionA& p) { return {{"model", "A"}, {"n", p.n()}, {"blocks", p.blocks()}}; }

inline json signed_json(const SignedPartition& p, const char* model) {
    json blocks = json::array();
    for (const auto& b : p.blocks()) blocks.push_back({{"elements", b}, {"zero_block", SignedPartition::is_zero(b)}});
    return {{"model", model}, {"n", p.n()}, {"blocks", blocks}};
}

inline json to_json(const BPartition& p) { return signed_json(p, "B"); }
inline json to_json(const DPartition& p) { return signed_json(p, "D"); }

inline std::vector<Block> signed_blocks_from_json(const json& j) {
    std::vector<Block> out;
    for (const auto& b : j.at("blocks")) out.push_back(b.at("elements").get<Block>());
    return out;
}

inline SetPartitionA partition_a_from_json(const json& j) {
    return {j.at("n").get<int>(), j.at("blocks").get<std::vector<Block>>()};
}
inline DPartition partition_d_from_json(const json& j) { return {j.at("n").get<int>(), signed_blocks_from_json(j)}; }
inline BPartition partition_b_from_json(const json& j) { return {j.at("n").get<int>(), signed_blocks_from_json(j)}; }

/// Marked vertices over m in [0, h), with 1-based q.
inline json to_json(const Context& ctx, const ThickDescriptor& d) {
    json verts = json::array();
    for (const Vertex& v : marked_vertices(ctx, d.roots, 0, ctx.rs.h())) verts.push_back({v.m, v.q + 1});
    json roots = json::array();
    for (const Vec& r : root_list(ctx.rs, d.roots)) roots.push_back(r);
    return {{"type", type_json(d.type)},
            {"nc", to_json(ctx.rs, d.nc_element)},
            {"roots", roots},
            {"marked_vertices", verts}};
}

struct ClassificationReport {
    CategoryType type;
    InvarianceCriterion criterion;
    std::optional<long long> count_formula;  // none for series E
    long long count_enumerated = 0;
    long long count_brute_force = -1;        // -1 when not computed

    bool agree() const {
        if (count_formula && *count_formula != count_enumerated) return false;
        return count_brute_force < 0 || count_brute_force == count_enumerated;
    }
};

inline json to_json(const ClassificationReport& r) {
    json j = {{"type", type_json(r.type)},
              {"criterion", mode_name(r.criterion.mode)},
              {"s", r.criterion.s},
              {"count_enumerated", r.count_enumerated},
              {"agree", r.agree()}};
    j["count_formula"] = r.count_formula ? json(*r.count_formula) : json(nullptr);
    j["count_brute_force"] = r.count_brute_force >= 0 ? json(r.count_brute_force) : json(nullptr);
    return j;
}

inline ClassificationReport classify(const CategoryType& ct, bool brute_force) {
    ClassificationReport rep{ct, reduce_criterion(ct), std::nullopt};
    const Context& ctx = context(ct.delta);
    rep.count_enumerated = static_cast<long long>(enumerate_thick_indices(ctx, rep.criterion).size());
    if (ct.delta.series != Series::E) rep.count_formula = count_thick_formula(ct);
    if (brute_force)
        rep.count_brute_force = static_cast<long long>(brute_force_indices(ctx, orbit_generator(ctx, ct)).size());
    return rep;
}

}  // namespace thicket
