#pragma once

// Cross-check battery shared by the CLI and the test suites.

#include <functional>
#include <string>
#include <vector>

#include "classifier.hpp"

namespace thicket {

/// Dynkin types of rank <= max_rank (E_7, E_8 only when max_rank reaches them).
inline std::vector<DynkinType> dynkin_types(int max_rank) {
    std::vector<DynkinType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Series::A, n});
    for (int n = 4; n <= max_rank; ++n) out.push_back({Series::D, n});
    for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back({Series::E, n});
    return out;
}

/// Every admissible (Delta, r, t) with Delta of the given type and 1 <= r <= r_max.
inline std::vector<CategoryType> admissible_types(const DynkinType& d, int r_max) {
    std::vector<CategoryType> out;
    for (int t : {1, 2, 3, kInfinity})
        for (int r = 1; r <= r_max; ++r) {
            CategoryType ct{d, r, t};
            try {
                ct.validate();
            } catch (const InvalidType&) {
                break;
            }
            out.push_back(ct);
        }
    return out;
}

inline long long expected_nc_size(const DynkinType& d) {
    switch (d.series) {
        case Series::A: return catalan(d.rank + 1);
        case Series::D: return catalan_d(d.rank);
        case Series::E: return d.rank == 6 ? 833 : d.rank == 7 ? 4160 : 25080;
    }
    return 0;
}

inline VerificationReport check_nc_size(const DynkinType& d) {
    VerificationReport rep{"|NC| " + d.name(), 1, {}};
    const auto got = static_cast<long long>(context(d).nc.size());
    if (got != expected_nc_size(d))
        rep.counterexamples.push_back("got " + std::to_string(got) + ", expected " + std::to_string(expected_nc_size(d)));
    return rep;
}

inline VerificationReport check_brady_roundtrip(const DynkinType& d) {
    const Context& ctx = context(d);
    VerificationReport rep{"Brady f/g roundtrip " + d.name(), 0, {}};
    std::vector<SetPartitionA> images;
    for (const auto& w : ctx.nc.elements()) {
        ++rep.checked;
        const SetPartitionA p = brady_f(ctx.rs, w);
        if (brady_g(ctx.rs, p) != w) rep.counterexamples.push_back(p.str());
        images.push_back(p);
    }
    std::sort(images.begin(), images.end());
    if (images != enumerate_nc_a(d.rank + 1)) rep.counterexamples.push_back("image is not NC^A(n+1)");
    return rep;
}

inline VerificationReport check_ar_roundtrip(const DynkinType& d) {
    const Context& ctx = context(d);
    VerificationReport rep{"Athanasiadis-Reiner f/g roundtrip " + d.name(), 0, {}};
    std::vector<DPartition> images;
    for (const auto& w : ctx.nc.elements()) {
        ++rep.checked;
        const DPartition p = ar_bijection_f(ctx.rs, w);
        try {
            if (ar_bijection_g(ctx.rs, p) != w) rep.counterexamples.push_back(p.str());
        } catch (const Error& e) {
            rep.counterexamples.push_back(p.str() + ": " + e.what());
        }
        images.push_back(p);
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        rep.counterexamples.push_back("f is not injective");
    return rep;
}

inline VerificationReport check_label_layers(const DynkinType& d) {
    const Context& ctx = context(d);
    VerificationReport rep{"label layers biject with positive roots " + d.name(), 0, {}};
    for (int k = -3; k <= 3; ++k)
        for (int root = 0; root < ctx.rs.num_positives(); ++root) {
            ++rep.checked;
            try {
                if (!ctx.zd.vertex_of(root, k)) rep.counterexamples.push_back("shift " + std::to_string(k) + " misses a root");
            } catch (const NotARoot&) {
                rep.counterexamples.push_back("shift " + std::to_string(k) + " repeats a root");
            }
        }
    return rep;
}

inline VerificationReport check_suspension(const DynkinType& d) {
    const Context& ctx = context(d);
    const ZDelta& zd = ctx.zd;
    VerificationReport rep{"S^2 = tau^h and S = shift + 1 " + d.name(), 0, {}};
    const QuiverAutomorphism s = zd.suspension();
    if (!zd.same_vertex_map(s * s, zd.tau(zd.h()))) rep.counterexamples.push_back("S^2 != tau^h");
    zd.for_each_window_vertex([&](Vertex v) {
        ++rep.checked;
        if (zd.apply(s, v) != zd.suspension_by_labels(v))
            rep.counterexamples.push_back("(" + std::to_string(v.m) + "," + std::to_string(v.q + 1) + ")");
    });
    return rep;
}

inline VerificationReport check_phi_order(const DynkinType& d) {
    const ZDelta& zd = context(d).zd;
    VerificationReport rep{"phi order " + d.name(), 1, {}};
    const int n = d.rank;
    if (d.series == Series::A && n % 2 == 0) {
        if (!zd.same_vertex_map(zd.phi() * zd.phi(), zd.tau(1))) rep.counterexamples.push_back("phi^2 != tau");
    } else if (d.series == Series::A || d.series == Series::D || n == 6) {
        if (!zd.same_vertex_map(zd.phi() * zd.phi(), zd.identity())) rep.counterexamples.push_back("phi^2 != id");
        if (d.series == Series::D && n == 4) {
            const auto t = zd.phi(true);
            if (!zd.same_vertex_map(t * t * t, zd.identity())) rep.counterexamples.push_back("triality^3 != id");
        }
    }
    return rep;
}

/// NC-level criterion against brute force, and the closed formula against both.
inline VerificationReport check_classification(const CategoryType& ct, bool formula = true) {
    const Context& ctx = context(ct.delta);
    VerificationReport rep{"classification " + ct.str(), 1, {}};
    const auto nc = enumerate_thick_indices(ctx, reduce_criterion(ct));
    const auto bf = brute_force_indices(ctx, orbit_generator(ctx, ct));
    if (nc != bf)
        rep.counterexamples.push_back("criterion selects " + std::to_string(nc.size()) + ", brute force " +
                                      std::to_string(bf.size()));
    if (formula && ct.delta.series != Series::E) {
        const long long f = count_thick_formula(ct);
        if (f != static_cast<long long>(bf.size()))
            rep.counterexamples.push_back("formula " + std::to_string(f) + ", brute force " + std::to_string(bf.size()));
    }
    return rep;
}

inline VerificationReport check_cluster(const DynkinType& d, int m) {
    const ClusterReport c = cluster_category_check(d, m);
    VerificationReport rep{"cluster category m=" + std::to_string(m) + " " + d.name(), 1, {}};
    if (!c.passed()) rep.counterexamples.push_back(std::to_string(c.invariant) + " invariant");
    return rep;
}

/// The whole battery; `on_report` sees each result as it is produced.
inline std::vector<VerificationReport> run_battery(int max_rank,
                                                   const std::function<void(const VerificationReport&)>& on_report = {}) {
    std::vector<VerificationReport> out;
    auto add = [&](VerificationReport r) {
        if (on_report) on_report(r);
        out.push_back(std::move(r));
    };
    for (const DynkinType& d : dynkin_types(max_rank)) {
        const Context& ctx = context(d);
        add(check_nc_size(d));
        if (d.series == Series::A) {
            add(check_brady_roundtrip(d));
            add(coxeter_conjugation_is_rotation(ctx.rs, ctx.nc));
        }
        if (d.series == Series::D) {
            add(check_ar_roundtrip(d));
            add(coxeter_conjugation_is_sigma_rho(ctx.rs, ctx.nc));
            add(phi_fixes_sigma_on_nc(ctx));
        }
        add(check_label_layers(d));
        add(check_suspension(d));
        add(check_phi_order(d));
        for (const CategoryType& ct : admissible_types(d, 2 * d.h())) add(check_classification(ct));
        if (d.rank <= 6)
            for (int m : {1, 2}) add(check_cluster(d, m));
    }
    return out;
}

}  // namespace thicket
