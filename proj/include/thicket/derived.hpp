#pragma once

// The repetition ZDelta of the fixed orientation, labelled by
// (positive root, shift), with translation quiver automorphisms.
//
// Coordinates: vertex (m, q), q a vertex of Delta (0-based here). With the
// potential eps (eps(y) = eps(x) + 1 for x -> y) put t = 2m + eps(q); every
// arrow raises t by one. An automorphism is a graph automorphism pi of Delta
// together with a constant c: (t, q) -> (t + c, pi q). tau = (id, -2).

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bijections.hpp"
#include "category_type.hpp"
#include "root_system.hpp"

namespace thicket {

struct Vertex {
    int m = 0;
    int q = 0;
    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct VertexLabel {
    int m = 0;
    int q = 0;
    int root = 0;  // index into positives()
    int shift = 0;
};

struct QuiverAutomorphism {
    std::vector<int> pi;
    int c = 0;

    friend bool operator==(const QuiverAutomorphism& a, const QuiverAutomorphism& b) {
        return a.pi == b.pi && a.c == b.c;
    }
    /// (a * b)(v) = a(b(v))
    friend QuiverAutomorphism operator*(const QuiverAutomorphism& a, const QuiverAutomorphism& b) {
        QuiverAutomorphism out{std::vector<int>(a.pi.size()), a.c + b.c};
        for (std::size_t q = 0; q < a.pi.size(); ++q) out.pi[q] = a.pi[b.pi[q]];
        return out;
    }
    QuiverAutomorphism inverse() const {
        QuiverAutomorphism out{std::vector<int>(pi.size()), -c};
        for (std::size_t q = 0; q < pi.size(); ++q) out.pi[pi[q]] = static_cast<int>(q);
        return out;
    }
    QuiverAutomorphism pow(int k) const {
        QuiverAutomorphism base = k < 0 ? inverse() : *this;
        std::vector<int> id(pi.size());
        std::iota(id.begin(), id.end(), 0);
        QuiverAutomorphism out{id, 0};
        for (int i = 0; i < std::abs(k); ++i) out = base * out;
        return out;
    }
};

/// Graph automorphisms of Delta as vertex permutations.
inline std::vector<std::vector<int>> graph_automorphisms(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : rs.arrows()) adj[a][b] = adj[b][a] = true;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    if (n > 8) {
        // type A/D beyond 8 vertices: the automorphisms are known, avoid n!
        out.push_back(p);
        return out;
    }
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) ok = adj[i][j] == adj[p[i]][p[j]];
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

class ZDelta {
public:
    explicit ZDelta(const RootSystem& rs) : rs_(rs), n_(rs.rank()), h_(rs.h()) {
        eps_ = rs.potential();
        // Projective P(q) sits at m = -eps(q); stepping m -> m+1 applies cox^-1.
        root_.assign(n_, std::vector<int>(h_));
        flips_.assign(n_, std::vector<int>(h_ + 1));
        for (int q = 0; q < n_; ++q) {
            Vec v = rs.projectives()[q];
            int k = 0;
            int sign = 1;
            for (int d = 0; d <= h_; ++d) {
                const int si = rs.signed_index(v);
                if (si == 0) throw NotARoot("label walk left the root system");
                const int s = si > 0 ? 1 : -1;
                if (s != sign) ++k;
                sign = s;
                if (d < h_) root_[q][d] = std::abs(si) - 1;
                flips_[q][d] = k;
                v = rs.cox_inverse()(v);
            }
            if (flips_[q][h_] != 2) throw NotARoot("walk over one period must flip sign twice");
        }
    }

    const RootSystem& root_system() const { return rs_; }
    int rank() const { return n_; }
    int h() const { return h_; }
    const std::vector<int>& potential() const { return eps_; }

    int t_of(Vertex v) const { return 2 * v.m + eps_[v.q]; }

    /// positive-root index at (m, q)
    int root_index(Vertex v) const {
        const int d = v.m + eps_[v.q];
        return root_[v.q][mod_pos(d, h_)];
    }
    /// Shift grows in the tau direction: tau^h raises it by two.
    int shift(Vertex v) const {
        const int d = v.m + eps_[v.q];
        const int a = d >= 0 ? d / h_ : -((-d + h_ - 1) / h_);
        const int r = d - a * h_;
        return -(flips_[v.q][r] + 2 * a);
    }
    VertexLabel label(Vertex v) const { return {v.m, v.q, root_index(v), shift(v)}; }

    std::optional<Vertex> vertex_of(int root, int shift) const {
        std::optional<Vertex> found;
        for (int q = 0; q < n_; ++q)
            for (int r = 0; r < h_; ++r) {
                if (root_[q][r] != root) continue;
                const int num = -shift - flips_[q][r];
                if (num % 2 != 0) continue;
                const int a = num / 2;
                const Vertex v{a * h_ + r - eps_[q], q};
                if (found) throw NotARoot("label is not unique");
                found = v;
            }
        return found;
    }

    // ---- automorphisms

    QuiverAutomorphism identity() const {
        std::vector<int> id(n_);
        std::iota(id.begin(), id.end(), 0);
        return {id, 0};
    }
    QuiverAutomorphism tau(int k = 1) const { return {identity().pi, -2 * k}; }

    QuiverAutomorphism make(std::vector<int> pi, int c) const {
        QuiverAutomorphism g{std::move(pi), c};
        validate(g);
        return g;
    }
    void validate(const QuiverAutomorphism& g) const {
        if (static_cast<int>(g.pi.size()) != n_) throw InvalidType("automorphism has wrong size");
        std::vector<std::vector<bool>> adj(n_, std::vector<bool>(n_, false));
        for (auto [a, b] : rs_.arrows()) adj[a][b] = adj[b][a] = true;
        for (int i = 0; i < n_; ++i) {
            if (mod_pos(g.c + eps_[i] - eps_[g.pi[i]], 2) != 0) throw InvalidType("automorphism breaks parity");
            for (int j = 0; j < n_; ++j)
                if (adj[i][j] != adj[g.pi[i]][g.pi[j]]) throw InvalidType("not a graph automorphism");
        }
    }

    Vertex apply(const QuiverAutomorphism& g, Vertex v) const {
        const int q2 = g.pi[v.q];
        const int t2 = t_of(v) + g.c;
        return {(t2 - eps_[q2]) / 2, q2};
    }

    /// The non-trivial generator phi of the weakly admissible list; order 3 for D_4 triality.
    QuiverAutomorphism phi(bool triality = false) const {
        std::vector<int> pi = identity().pi;
        int c = 0;
        switch (rs_.delta().series) {
            case Series::A:
                for (int q = 0; q < n_; ++q) pi[q] = n_ - 1 - q;
                c = n_ % 2 == 0 ? -1 : 0;
                break;
            case Series::D:
                if (triality) {
                    if (n_ != 4) throw InvalidType("triality needs D_4");
                    // 3 -> 4 -> 1 -> 3, centre fixed
                    pi = {2, 1, 3, 0};
                } else {
                    std::swap(pi[n_ - 2], pi[n_ - 1]);
                }
                break;
            case Series::E: {
                if (n_ != 6) throw InvalidType("phi exists only for E_6 among E types");
                for (const auto& a : graph_automorphisms(rs_))
                    if (a != pi && a[2] == 2 && a[3] == 3) pi = a;
                break;
            }
        }
        return make(pi, c);
    }

    /// The composite the shift functor is isomorphic to.
    QuiverAutomorphism suspension() const {
        const Series s = rs_.delta().series;
        const int n = n_;
        if (s == Series::A && n % 2 == 0) return phi() * tau((h_ - 1) / 2);
        const bool with_phi = (s == Series::A && n >= 3) || (s == Series::D && n % 2 == 1) || (s == Series::E && n == 6);
        return with_phi ? phi() * tau(h_ / 2) : tau(h_ / 2);
    }

    /// S read off the labels: same root, shift + 1.
    Vertex suspension_by_labels(Vertex v) const {
        auto w = vertex_of(root_index(v), shift(v) + 1);
        if (!w) throw NotARoot("no vertex carries the shifted label");
        return *w;
    }

    /// Window used for invariance checks: m in [0, 2h).
    template <class Fn>
    void for_each_window_vertex(Fn&& fn) const {
        for (int m = 0; m < 2 * h_; ++m)
            for (int q = 0; q < n_; ++q) fn(Vertex{m, q});
    }

    bool same_vertex_map(const QuiverAutomorphism& a, const QuiverAutomorphism& b) const {
        bool ok = true;
        for_each_window_vertex([&](Vertex v) { ok = ok && apply(a, v) == apply(b, v); });
        return ok;
    }

    bool is_invariant(const RootSet& roots, const QuiverAutomorphism& g) const {
        for (int m = 0; m < 2 * h_; ++m)
            for (int q = 0; q < n_; ++q) {
                const Vertex v{m, q};
                if (roots.test(root_index(v)) != roots.test(root_index(apply(g, v)))) return false;
            }
        return true;
    }

    /// Root set of g(V) where V is the vertex set carrying `roots`.
    RootSet image_roots(const RootSet& roots, const QuiverAutomorphism& g) const {
        RootSet out;
        for (int m = 0; m < 2 * h_; ++m)
            for (int q = 0; q < n_; ++q) {
                const Vertex v{m, q};
                if (roots.test(root_index(v))) out.set(root_index(apply(g, v)));
            }
        return out;
    }

private:
    const RootSystem& rs_;
    int n_;
    int h_;
    std::vector<int> eps_;
    std::vector<std::vector<int>> root_;   // [q][d mod h]
    std::vector<std::vector<int>> flips_;  // sign changes after d steps, d = 0..h
};

// Everything computed once per Dynkin type.
struct Context {
    explicit Context(const DynkinType& d) : rs(d), nc(rs), zd(rs) {
        roots.reserve(nc.size());
        for (const auto& w : nc.elements()) {
            roots.push_back(roots_below_unchecked(rs, w));
            by_roots.emplace(roots.back(), static_cast<int>(roots.size()) - 1);
        }
        full = roots.back();
        for (std::size_t i = 0; i < nc.size(); ++i)
            if (nc[i] == rs.cox()) cox_index = static_cast<int>(i);
    }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    std::optional<int> index_of_roots(const RootSet& s) const {
        auto it = by_roots.find(s);
        if (it == by_roots.end()) return std::nullopt;
        return it->second;
    }

    RootSystem rs;
    NcInterval nc;
    ZDelta zd;
    std::vector<RootSet> roots;
    std::unordered_map<RootSet, int> by_roots;
    RootSet full;
    int cox_index = -1;
};

inline const Context& context(const DynkinType& d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Context>> cache;
    d.validate();
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{static_cast<int>(d.series), d.rank}];
    if (!slot) slot = std::make_unique<Context>(d);
    return *slot;
}

struct ThickDescriptor {
    CategoryType type;
    int nc_index = -1;
    GroupElement nc_element;
    RootSet roots;
};

inline ThickDescriptor make_descriptor(const Context& ctx, const CategoryType& ct, int idx) {
    return {ct, idx, ctx.nc[idx], ctx.roots[idx]};
}

inline ThickDescriptor thick_from_nc(const Context& ctx, const GroupElement& w, const CategoryType& ct) {
    auto idx = ctx.nc.index_of(w);
    if (!idx) throw NotInInterval("element is not below the Coxeter element");
    return make_descriptor(ctx, ct, *idx);
}

inline std::vector<Vertex> marked_vertices(const Context& ctx, const RootSet& roots, int m_lo, int m_hi) {
    std::vector<Vertex> out;
    for (int m = m_lo; m < m_hi; ++m)
        for (int q = 0; q < ctx.rs.rank(); ++q)
            if (roots.test(ctx.zd.root_index({m, q}))) out.push_back({m, q});
    return out;
}

inline bool is_invariant_vertex_set(const Context& ctx, const RootSet& roots, const QuiverAutomorphism& g) {
    return ctx.zd.is_invariant(roots, g);
}

/// The generator phi^[t>1] tau^r of the group defining the orbit category.
inline QuiverAutomorphism orbit_generator(const Context& ctx, const CategoryType& ct) {
    const ZDelta& zd = ctx.zd;
    if (ct.t == 1) return zd.tau(ct.r);
    return zd.phi(ct.t == 3) * zd.tau(ct.r);
}

inline std::vector<int> brute_force_indices(const Context& ctx, const QuiverAutomorphism& g) {
    std::vector<int> out;
    for (std::size_t i = 0; i < ctx.nc.size(); ++i)
        if (ctx.zd.is_invariant(ctx.roots[i], g)) out.push_back(static_cast<int>(i));
    return out;
}

inline std::vector<ThickDescriptor> brute_force_classify(const CategoryType& ct) {
    ct.validate();
    const Context& ctx = context(ct.delta);
    std::vector<ThickDescriptor> out;
    for (int i : brute_force_indices(ctx, orbit_generator(ctx, ct))) out.push_back(make_descriptor(ctx, ct, i));
    return out;
}

/// phi(S) corresponds to sigma of the D-partition, for every w in NC_{D_n}.
inline VerificationReport phi_fixes_sigma_on_nc(const Context& ctx) {
    if (ctx.rs.delta().series != Series::D) throw WrongSeries("needs series D");
    VerificationReport rep{"phi acts as sigma (" + ctx.rs.delta().name() + ")", 0, {}};
    const QuiverAutomorphism phi = ctx.zd.phi();
    for (std::size_t i = 0; i < ctx.nc.size(); ++i) {
        ++rep.checked;
        const RootSet img = ctx.zd.image_roots(ctx.roots[i], phi);
        const auto j = ctx.index_of_roots(img);
        const DPartition expect = sigma(ar_bijection_f(ctx.rs, ctx.nc[i]));
        if (!j || ar_bijection_f(ctx.rs, ctx.nc[*j]) != expect)
            rep.counterexamples.push_back(ar_bijection_f(ctx.rs, ctx.nc[i]).str());
    }
    return rep;
}

struct ClusterReport {
    DynkinType delta;
    int m = 1;
    std::size_t invariant = 0;
    bool passed() const { return invariant == 2; }
};

/// Orbit category by tau^-1 S^m: only 0 and everything survive.
inline ClusterReport cluster_category_check(const DynkinType& d, int m = 1) {
    const Context& ctx = context(d);
    // S fixes every vertex set, so S^m tau^-1 is applied through its label form.
    const ZDelta& zd = ctx.zd;
    std::size_t count = 0;
    for (std::size_t i = 0; i < ctx.nc.size(); ++i) {
        bool inv = true;
        zd.for_each_window_vertex([&](Vertex v) {
            if (!inv) return;
            Vertex w = zd.apply(zd.tau(-1), v);
            for (int k = 0; k < std::abs(m); ++k) {
                if (m > 0) {
                    w = zd.suspension_by_labels(w);
                } else {
                    auto u = zd.vertex_of(zd.root_index(w), zd.shift(w) - 1);
                    w = *u;
                }
            }
            inv = ctx.roots[i].test(zd.root_index(v)) == ctx.roots[i].test(zd.root_index(w));
        });
        count += inv;
    }
    return {d, m, count};
}

}  // namespace thicket
