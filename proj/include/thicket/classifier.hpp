#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "category_type.hpp"
#include "derived.hpp"

namespace thicket {

inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
inline long long catalan(int n) { return binom(2 * n, n) / (n + 1); }
inline long long catalan_d(int n) { return binom(2 * n, n) - binom(2 * n - 2, n - 1); }

enum class CriterionMode { CoxConjugation, SigmaRhoPower, D4Triality };

inline std::string mode_name(CriterionMode m) {
    switch (m) {
        case CriterionMode::CoxConjugation: return "cox_conjugation";
        case CriterionMode::SigmaRhoPower: return "sigma_rho_power";
        case CriterionMode::D4Triality: return "d4_triality";
    }
    return "";
}

struct InvarianceCriterion {
    CriterionMode mode = CriterionMode::CoxConjugation;
    int s = 0;
    friend bool operator==(const InvarianceCriterion&, const InvarianceCriterion&) = default;
};

/// Exponent p with phi tau^r acting like tau^p on thick subcategories.
/// For (A_even, r, inf) this is r + m/2 + 1, see parameter_p_uncorrected.
inline int parameter_p(const CategoryType& ct) {
    ct.validate();
    if (ct.excluded()) throw ExcludedType(ct.str() + " needs the special-case criterion");
    const int h = ct.delta.h();
    if (ct.t == 1) return ct.r;
    if (ct.t == 2) return h / 2 + ct.r;
    return ct.delta.m() / 2 + ct.r + 1;
}

/// Uncorrected exponent, m/2 + r for t = inf.
inline int parameter_p_uncorrected(const CategoryType& ct) {
    if (ct.t == kInfinity) {
        ct.validate();
        return ct.delta.m() / 2 + ct.r;
    }
    return parameter_p(ct);
}

inline InvarianceCriterion reduce_criterion(const CategoryType& ct) {
    ct.validate();
    const int h = ct.delta.h();
    if (ct.delta.series == Series::D && ct.t == 3) return {CriterionMode::D4Triality, ct.r % 3};
    if (ct.excluded()) return {CriterionMode::SigmaRhoPower, ct.r % h};
    return {CriterionMode::CoxConjugation, std::gcd(h, parameter_p(ct))};
}

inline bool is_invariant_nc(const Context& ctx, int idx, const InvarianceCriterion& crit) {
    const GroupElement& w = ctx.nc[idx];
    switch (crit.mode) {
        case CriterionMode::CoxConjugation: {
            const GroupElement c = ctx.rs.cox().pow(crit.s);
            return c * w == w * c;
        }
        case CriterionMode::SigmaRhoPower: {
            const DPartition p = ar_bijection_f(ctx.rs, w);
            return sigma_rho_power(p, crit.s + 1, crit.s) == p;
        }
        case CriterionMode::D4Triality: {
            const QuiverAutomorphism g = ctx.zd.phi(true) * ctx.zd.tau(crit.s);
            return ctx.zd.is_invariant(ctx.roots[idx], g);
        }
    }
    return false;
}

inline bool is_invariant_nc(const RootSystem& rs, const GroupElement& w, const InvarianceCriterion& crit) {
    const Context& ctx = context(rs.delta());
    auto idx = ctx.nc.index_of(w);
    if (!idx) throw NotInInterval("element is not below the Coxeter element");
    return is_invariant_nc(ctx, *idx, crit);
}

inline std::vector<int> enumerate_thick_indices(const Context& ctx, const InvarianceCriterion& crit) {
    std::vector<int> out;
    for (std::size_t i = 0; i < ctx.nc.size(); ++i)
        if (is_invariant_nc(ctx, static_cast<int>(i), crit)) out.push_back(static_cast<int>(i));
    return out;
}

inline std::vector<ThickDescriptor> enumerate_thick(const CategoryType& ct) {
    const InvarianceCriterion crit = reduce_criterion(ct);
    const Context& ctx = context(ct.delta);
    std::vector<ThickDescriptor> out;
    for (int i : enumerate_thick_indices(ctx, crit)) out.push_back(make_descriptor(ctx, ct, i));
    return out;
}

namespace detail {

inline long long d_count(int n, int s, bool n_minus_1_full) {
    if (s == 2 * n - 2) return catalan_d(n);
    if (s == n - 1) return n_minus_1_full ? catalan_d(n) : catalan_d(n - 1);
    const int p = std::gcd(n - 1, s);
    return binom(2 * p, p);
}

}  // namespace detail

inline long long count_thick_formula(const CategoryType& ct) {
    ct.validate();
    const int n = ct.delta.rank;
    const int h = ct.delta.h();
    switch (ct.delta.series) {
        case Series::A: {
            const int s = std::gcd(h, parameter_p(ct));
            return s == h ? catalan(s) : binom(2 * s, s);
        }
        case Series::D: {
            if (ct.t == 3) return ct.r % 3 == 0 ? 8 : 2;
            if (ct.t == 1) return detail::d_count(n, std::gcd(h, ct.r), n % 2 == 0);
            if (n % 2 == 1) return detail::d_count(n, std::gcd(h, ct.r + n - 1), false);
            const int s = ct.r % h;
            if (s == 0 || s == n - 1) return catalan_d(n - 1);
            const int p = std::gcd(n - 1, s);
            return binom(2 * p, p);
        }
        case Series::E:
            throw NoClosedForm("no closed count for series E; enumerate instead");
    }
    return 0;
}

// --------------------------------------------------- algebra types

struct Fraction {
    long long num = 0;
    long long den = 1;
    static Fraction make(long long a, long long b) {
        if (b == 0) throw NotAsashibaType("zero denominator");
        if (b < 0) a = -a, b = -b;
        const long long g = std::gcd(a < 0 ? -a : a, b);
        return {a / (g ? g : 1), b / (g ? g : 1)};
    }
    static Fraction parse(const std::string& s) {
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return make(std::stoll(s), 1);
            return make(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw NotAsashibaType("cannot parse frequency '" + s + "'");
        }
    }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

struct AlgebraType {
    DynkinType delta;
    Fraction f;
    int t = 1;
};

inline CategoryType algebra_type_to_category_type(const AlgebraType& alg) {
    try {
        alg.delta.validate();
    } catch (const InvalidDynkin& e) {
        throw NotAsashibaType(e.what());
    }
    const int n = alg.delta.rank;
    const Fraction f = alg.f;
    if (f.num <= 0) throw NotAsashibaType("frequency must be positive");
    bool ok = false;
    switch (alg.delta.series) {
        case Series::A:
            ok = (alg.t == 1 && n % f.den == 0) || (alg.t == 2 && n % 2 == 1 && n >= 3 && f.den == 1);
            break;
        case Series::D:
            ok = (alg.t == 1 && (f.den == 1 || (f.den == 3 && n % 3 == 0 && n >= 6))) ||
                 (alg.t == 2 && f.den == 1) || (alg.t == 3 && n == 4 && f.den == 1);
            break;
        case Series::E:
            ok = f.den == 1 && (alg.t == 1 || (alg.t == 2 && n == 6));
            break;
    }
    if (!ok)
        throw NotAsashibaType("(" + alg.delta.name() + ", " + f.str() + ", " + t_string(alg.t) + ") is not a standard self-injective type");
    const long long m = alg.delta.m();
    if ((f.num * m) % f.den != 0) throw NotAsashibaType("f * m is not an integer");
    return CategoryType::make(alg.delta.series, n, static_cast<int>(f.num * m / f.den), alg.t);
}

// ------------------------------------------------------ overview

struct TableRow {
    std::string type;
    std::string classifying;
    std::string alternative;
    std::string count;
};

inline std::vector<TableRow> overview_table() {
    return {
        {"(A_n, r, 1)", "w in NC(A_n) with w = cox^s w cox^-s, s = gcd(n+1, r)",
         "elements of NC^A(n+1) invariant under rotation by 2*pi*s/(n+1), s = gcd(n+1, r)",
         "C_s if s = n+1; binom(2s, s) else"},
        {"(A_n, r, 2), n >= 3 odd", "w in NC(A_n) with w = cox^s w cox^-s, s = gcd(n+1, (n+1)/2 + r)",
         "elements of NC^A(n+1) invariant under rotation by 2*pi*s/(n+1), s = gcd(n+1, (n+1)/2 + r)",
         "C_s if s = n+1; binom(2s, s) else"},
        {"(A_n, r, inf), n even", "w in NC(A_n) with w = cox^s w cox^-s, s = gcd(n+1, n/2 + r)",
         "elements of NC^A(n+1) invariant under rotation by 2*pi*s/(n+1), s = gcd(n+1, n/2 + r)",
         "C_s if s = n+1; binom(2s, s) else"},
        {"(D_n, r, 1)", "w in NC(D_n) with w = cox^s w cox^-s, s = gcd(2n-2, r)",
         "elements of NC^D(n) invariant under (sigma rho)^s, s = gcd(2n-2, r)",
         "Cat(D_n) if s = 2n-2 or s = n-1 odd; Cat(D_{n-1}) if s = n-1 even; binom(2p, p) else, p = gcd(n-1, s)"},
        {"(D_n, r, 2), n odd", "w in NC(D_n) with w = cox^s w cox^-s, s = gcd(2n-2, (2n-2)/2 + r)",
         "elements of NC^D(n) invariant under (sigma rho)^s, s = gcd(2n-2, (2n-2)/2 + r)",
         "Cat(D_n) if s = 2n-2; Cat(D_{n-1}) if s = n-1; binom(2p, p) else, p = gcd(n-1, s)"},
        {"(D_n, r, 2), n even", "",
         "elements of NC^D(n) invariant under sigma^(s+1) rho^s, s = r mod (2n-2)",
         "Cat(D_{n-1}) if s = 0 or s = n-1; binom(2p, p) else, p = gcd(n-1, s)"},
        {"(D_4, r, 3)", "",
         "s = r mod 3; s = 0: six distinguished proper thick subcategories; s = 1, 2: no proper ones",
         "8 if s = 0; 2 if s = 1, 2"},
        {"(E_n, r, 1), n = 6, 7, 8", "w in NC(E_n) with w = cox^s w cox^-s, s = gcd(h(E_n), r)", "", ""},
        {"(E_6, r, 2)", "w in NC(E_6) with w = cox^s w cox^-s, s = gcd(12, r+6)", "", ""},
    };
}

inline std::string overview_markdown() {
    std::string out = "| type | classifying partitions | alternative description | number of partitions |\n";
    out += "|---|---|---|---|\n";
    for (const auto& row : overview_table())
        out += "| " + row.type + " | " + row.classifying + " | " + row.alternative + " | " + row.count + " |\n";
    return out;
}

/// Cells where the table rows and brute force disagree.
inline std::string overview_notes() {
    return "note: for (A_n, r, inf) the brute-force oracle selects s = gcd(n+1, n/2 + r + 1); "
           "the table keeps n/2 + r.\n"
           "note: for (D_4, r, 3) with s = 1, 2 the brute-force oracle finds 5 thick subcategories, not 2.\n"
           "note: type D cells with s = n - 1 (n even, t = 2: s = 0 mod n - 1) have binom(2n-2, n-1), not Cat(D_{n-1}).\n";
}

}  // namespace thicket
