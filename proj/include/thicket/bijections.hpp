#pragma once

#include <string>
#include <vector>

#include "partitions.hpp"
#include "root_system.hpp"

namespace thicket {

// ------------------------------------------------------------ Brady (A)

inline SetPartitionA brady_f(const RootSystem& rs, const GroupElement& w) {
    if (rs.delta().series != Series::A) throw WrongSeries("Brady bijection needs series A");
    if (!in_nc(rs, w)) throw NotInInterval("element is not below the Coxeter element");
    const Permutation p = type_a_as_permutation(rs, w);
    std::vector<int> lab(p.degree());
    for (int i = 1; i <= p.degree(); ++i) lab[i - 1] = i;
    for (const auto& c : p.cycles())
        for (int x : c) lab[x - 1] = c.front();
    return SetPartitionA::from_labels(lab);
}

inline GroupElement brady_g(const RootSystem& rs, const SetPartitionA& p) {
    if (rs.delta().series != Series::A) throw WrongSeries("Brady bijection needs series A");
    if (p.n() != rs.rank() + 1) throw InvalidPartition("partition must live on [n+1]");
    const GroupElement w = permutation_to_element(rs, Permutation::from_cycles(p.n(), p.blocks()));
    if (!in_nc(rs, w)) throw NotInInterval("partition " + p.str() + " is not noncrossing");
    return w;
}

// ------------------------------------------- Athanasiadis-Reiner (D)

/// Position in the order -1 < -2 < ... < -n < 1 < 2 < ... < n.
inline int ar_order_key(int x, int n) { return x < 0 ? -x : n + x; }

inline DPartition ar_bijection_f(const RootSystem& rs, const GroupElement& w) {
    if (rs.delta().series != Series::D) throw WrongSeries("AR bijection needs series D");
    if (!in_nc(rs, w)) throw NotInInterval("element is not below the Coxeter element");
    const int n = rs.rank();
    const SignedPermutation p = type_d_as_signed_permutation(rs, w);
    std::vector<Block> blocks;
    Block zero;
    std::vector<bool> used(2 * n + 1, false);
    for (const auto& c : p.cycles()) {
        const bool balanced = std::find(c.begin(), c.end(), -c.front()) != c.end();
        if (balanced)
            zero.insert(zero.end(), c.begin(), c.end());
        else
            blocks.push_back(c);
        for (int x : c) used[x + n] = true;
    }
    if (!zero.empty()) blocks.push_back(zero);
    for (int x = -n; x <= n; ++x)
        if (x != 0 && !used[x + n]) blocks.push_back({x});
    return DPartition(n, blocks);
}

inline GroupElement ar_bijection_g(const RootSystem& rs, const DPartition& p) {
    if (rs.delta().series != Series::D) throw WrongSeries("AR bijection needs series D");
    const int n = rs.rank();
    if (p.n() != n) throw InvalidPartition("rank mismatch");
    std::vector<Cycle> cycles;
    auto ordered = [n](Block b) {
        std::sort(b.begin(), b.end(), [n](int a, int c) { return ar_order_key(a, n) < ar_order_key(c, n); });
        return b;
    };
    const int z = p.zero_block();
    // circle position on the (2n-2)-gon 1..n-1,-1..-(n-1)
    auto pos = [n](int x) { return x > 0 ? x - 1 : n - 1 - x - 1; };
    for (int i = 0; i < static_cast<int>(p.blocks().size()); ++i) {
        if (i == z || p.blocks()[i].size() < 2) continue;
        const Block& blk = p.blocks()[i];
        auto it = std::find_if(blk.begin(), blk.end(), [n](int x) { return std::abs(x) == n; });
        if (it == blk.end()) {
            cycles.push_back(ordered(blk));
            continue;
        }
        // +-n goes into the gap of the remaining points that holds the mirror block
        const int centre = *it;
        Block rest;
        for (int x : blk)
            if (x != centre) rest.push_back(x);
        std::sort(rest.begin(), rest.end(), [&](int a, int c) { return pos(a) < pos(c); });
        const int mirror = pos(-rest.front());
        std::size_t k = rest.size() - 1;
        for (std::size_t j = 0; j + 1 < rest.size(); ++j)
            if (pos(rest[j]) < mirror && mirror < pos(rest[j + 1])) k = j;
        rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(k) + 1, centre);
        cycles.push_back(rest);
    }
    SignedPermutation sp = SignedPermutation::from_cycles(n, cycles);
    if (z >= 0) {
        Block rest;
        for (int x : p.blocks()[z])
            if (std::abs(x) != n) rest.push_back(x);
        const auto zc = SignedPermutation::from_cycles(n, {{n, -n}});
        sp = rest.empty() ? sp * zc : sp * zc * SignedPermutation::from_cycles(n, {ordered(rest)});
    }
    if (sp.negations() % 2) throw NotInInterval("partition " + p.str() + " gives an odd sign change");
    const GroupElement w = signed_permutation_to_element(rs, sp);
    if (!in_nc(rs, w)) throw NotInInterval("partition " + p.str() + " is not noncrossing");
    return w;
}

inline std::vector<DPartition> enumerate_nc_d(const RootSystem& rs, const NcInterval& nc) {
    std::vector<DPartition> out;
    for (const auto& w : nc.elements()) out.push_back(ar_bijection_f(rs, w));
    std::sort(out.begin(), out.end());
    return out;
}

struct VerificationReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;
    bool passed() const { return counterexamples.empty(); }
};

/// f(cox w cox^-1) = (sigma rho)(f(w)) over all of NC_{D_n}.
inline VerificationReport coxeter_conjugation_is_sigma_rho(const RootSystem& rs, const NcInterval& nc) {
    if (rs.delta().series != Series::D) throw WrongSeries("needs series D");
    VerificationReport rep{"cox conjugation = sigma rho (" + rs.delta().name() + ")", 0, {}};
    for (const auto& w : nc.elements()) {
        ++rep.checked;
        const DPartition lhs = ar_bijection_f(rs, rs.cox() * w * rs.cox_inverse());
        const DPartition rhs = sigma(rho(ar_bijection_f(rs, w)));
        if (lhs != rhs) rep.counterexamples.push_back(ar_bijection_f(rs, w).str());
    }
    return rep;
}

/// f(cox w cox^-1) = rotate(f(w), 1) over all of NC_{A_n}.
inline VerificationReport coxeter_conjugation_is_rotation(const RootSystem& rs, const NcInterval& nc) {
    if (rs.delta().series != Series::A) throw WrongSeries("needs series A");
    VerificationReport rep{"cox conjugation = rotation (" + rs.delta().name() + ")", 0, {}};
    for (const auto& w : nc.elements()) {
        ++rep.checked;
        const SetPartitionA lhs = brady_f(rs, rs.cox() * w * rs.cox_inverse());
        const SetPartitionA rhs = rotate_a(brady_f(rs, w), 1);
        if (lhs != rhs) rep.counterexamples.push_back(brady_f(rs, w).str());
    }
    return rep;
}

}  // namespace thicket
