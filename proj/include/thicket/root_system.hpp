#pragma once

#include <algorithm>
#include <bitset>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "perm.hpp"

namespace thicket {

enum class Series { A, D, E };

inline char series_char(Series s) { return s == Series::A ? 'A' : s == Series::D ? 'D' : 'E'; }

inline Series parse_series(const std::string& s) {
    if (s == "A" || s == "a") return Series::A;
    if (s == "D" || s == "d") return Series::D;
    if (s == "E" || s == "e") return Series::E;
    throw InvalidDynkin("unknown series '" + s + "'");
}

struct DynkinType {
    Series series = Series::A;
    int rank = 1;

    static DynkinType make(Series s, int n) {
        DynkinType d{s, n};
        d.validate();
        return d;
    }
    void validate() const {
        switch (series) {
            case Series::A:
                if (rank < 1) throw InvalidDynkin("A_n needs n >= 1");
                break;
            case Series::D:
                if (rank < 4) throw InvalidDynkin("D_n needs n >= 4");
                break;
            case Series::E:
                if (rank < 6 || rank > 8) throw InvalidDynkin("E_n needs n in {6,7,8}");
                break;
        }
    }
    int coxeter_number() const {
        switch (series) {
            case Series::A: return rank + 1;
            case Series::D: return 2 * rank - 2;
            case Series::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
        }
        return 0;
    }
    int h() const { return coxeter_number(); }
    int m() const { return coxeter_number() - 1; }
    std::string name() const { return std::string(1, series_char(series)) + std::to_string(rank); }
    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

struct Arrow {
    int from;
    int to;
};

// Fixed orientations, 0-based vertices.
//   A: 1 -> 2 -> ... -> n
//   D: 1 -> ... -> n-2, n-2 -> n-1, n-2 -> n
//   E: 2 -> 1, 3 -> 2, 3 -> 4, 3 -> 5, 5 -> 6, 6 -> 7, 7 -> 8
// (E numbering: 1-2-3-5-6-7-8 is the long chain, 4 hangs off 3.)
inline std::vector<Arrow> fixed_orientation(const DynkinType& d) {
    std::vector<Arrow> out;
    const int n = d.rank;
    switch (d.series) {
        case Series::A:
            for (int i = 0; i + 1 < n; ++i) out.push_back({i, i + 1});
            break;
        case Series::D:
            for (int i = 0; i + 1 < n - 2; ++i) out.push_back({i, i + 1});
            out.push_back({n - 3, n - 2});
            out.push_back({n - 3, n - 1});
            break;
        case Series::E:
            out = {{1, 0}, {2, 1}, {2, 3}, {2, 4}, {4, 5}};
            for (int i = 5; i + 1 < n; ++i) out.push_back({i, i + 1});
            break;
    }
    return out;
}

using RootSet = std::bitset<128>;

class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(IntMatrix m) : m_(std::move(m)) {}
    static GroupElement identity(int n) { return GroupElement(IntMatrix::identity(n)); }

    const IntMatrix& matrix() const { return m_; }
    int rank() const { return m_.size(); }
    Vec operator()(const Vec& v) const { return m_ * v; }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        return GroupElement(a.m_ * b.m_);
    }
    GroupElement inverse() const { return GroupElement(unimodular_inverse(m_)); }
    GroupElement pow(int k) const {
        GroupElement base = k < 0 ? inverse() : *this;
        GroupElement out = identity(rank());
        for (int e = k < 0 ? -k : k; e > 0; e >>= 1) {
            if (e & 1) out = out * base;
            base = base * base;
        }
        return out;
    }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.m_ <=> b.m_; }

private:
    IntMatrix m_;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const { return g.matrix().hash(); }
};

class RootSystem {
public:
    explicit RootSystem(const DynkinType& d) : delta_(d) {
        d.validate();
        const int n = d.rank;
        arrows_ = fixed_orientation(d);
        neighbors_.assign(n, {});
        for (auto [a, b] : arrows_) {
            neighbors_[a].push_back(b);
            neighbors_[b].push_back(a);
        }
        euler_ = IntMatrix::identity(n);
        for (auto [a, b] : arrows_) euler_(a, b) -= 1;
        sym_ = euler_ + euler_.transposed();

        build_positives();
        for (const auto& v : positives_) reflections_.push_back(GroupElement(reflection_matrix(v)));

        // potential: eps(to) = eps(from) + 1 along arrows, min 0
        potential_.assign(n, 0);
        std::vector<bool> done(n, false);
        done[0] = true;
        std::vector<int> stack{0};
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (auto [a, b] : arrows_) {
                if (a == x && !done[b]) { potential_[b] = potential_[a] + 1; done[b] = true; stack.push_back(b); }
                if (b == x && !done[a]) { potential_[a] = potential_[b] - 1; done[a] = true; stack.push_back(a); }
            }
        }
        const int lo = *std::min_element(potential_.begin(), potential_.end());
        for (int& e : potential_) e -= lo;

        // Sources first: i before j for every arrow i -> j, ties by label.
        std::vector<int> indeg(n, 0);
        for (auto [a, b] : arrows_) ++indeg[b];
        std::set<int> ready;
        for (int i = 0; i < n; ++i)
            if (indeg[i] == 0) ready.insert(i);
        while (!ready.empty()) {
            const int x = *ready.begin();
            ready.erase(ready.begin());
            cox_order_.push_back(x);
            for (auto [a, b] : arrows_)
                if (a == x && --indeg[b] == 0) ready.insert(b);
        }
        cox_ = GroupElement::identity(n);
        for (int i : cox_order_) cox_ = cox_ * simple_reflection(i);
        cox_inv_ = cox_.inverse();

        const IntMatrix einv = unimodular_inverse(euler_);
        for (int i = 0; i < n; ++i) {
            projectives_.push_back(einv.row(i));
            injectives_.push_back(einv.column(i));
        }
    }

    const DynkinType& delta() const { return delta_; }
    int rank() const { return delta_.rank; }
    int h() const { return delta_.h(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<std::vector<int>>& neighbors() const { return neighbors_; }
    const IntMatrix& euler_form() const { return euler_; }
    const IntMatrix& sym_form() const { return sym_; }
    const std::vector<Vec>& positives() const { return positives_; }
    int num_positives() const { return static_cast<int>(positives_.size()); }
    const std::vector<int>& potential() const { return potential_; }
    const std::vector<int>& cox_order() const { return cox_order_; }
    const std::vector<Vec>& projectives() const { return projectives_; }
    const std::vector<Vec>& injectives() const { return injectives_; }

    Vec simple(int i) const {
        Vec v(rank(), 0);
        v[i] = 1;
        return v;
    }

    std::optional<int> index_of(const Vec& v) const {
        auto it = std::lower_bound(positives_.begin(), positives_.end(), v);
        if (it == positives_.end() || *it != v) return std::nullopt;
        return static_cast<int>(it - positives_.begin());
    }
    int require_index(const Vec& v) const {
        auto i = index_of(v);
        if (!i) throw NotARoot("vector is not a positive root");
        return *i;
    }

    /// Reflection by the i-th positive root (sorted order).
    const GroupElement& reflection_at(int idx) const { return reflections_.at(idx); }
    const GroupElement& simple_reflection(int i) const { return reflections_.at(*index_of(simple(i))); }
    const GroupElement& cox() const { return cox_; }
    const GroupElement& cox_inverse() const { return cox_inv_; }

    /// Signed root index: +i+1 for positives_[i], -(i+1) for its negative, 0 otherwise.
    int signed_index(const Vec& v) const {
        if (auto i = index_of(v)) return *i + 1;
        Vec neg(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
        if (auto i = index_of(neg)) return -(*i + 1);
        return 0;
    }

private:
    IntMatrix reflection_matrix(const Vec& v) const {
        const int n = rank();
        IntMatrix m = IntMatrix::identity(n);
        // s_v(e_j) = e_j - (v, e_j) v
        const Vec vs = sym_ * v;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) m(i, j) -= vs[j] * v[i];
        return m;
    }

    void build_positives() {
        const int n = rank();
        std::set<Vec> seen;
        std::queue<Vec> todo;
        for (int i = 0; i < n; ++i) {
            seen.insert(simple(i));
            todo.push(simple(i));
        }
        while (!todo.empty()) {
            Vec v = todo.front();
            todo.pop();
            const Vec vs = sym_ * v;
            for (int i = 0; i < n; ++i) {
                Vec w = v;
                w[i] -= vs[i];
                if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; })) continue;
                if (seen.insert(w).second) todo.push(w);
            }
        }
        positives_.assign(seen.begin(), seen.end());
    }

    DynkinType delta_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> neighbors_;
    IntMatrix euler_, sym_;
    std::vector<Vec> positives_;
    std::vector<GroupElement> reflections_;
    std::vector<int> potential_;
    std::vector<int> cox_order_;
    GroupElement cox_, cox_inv_;
    std::vector<Vec> projectives_, injectives_;
};

inline RootSystem build_root_system(const DynkinType& d) { return RootSystem(d); }

inline GroupElement reflection(const RootSystem& rs, const Vec& v) {
    return rs.reflection_at(rs.require_index(v));
}

inline GroupElement coxeter_element(const RootSystem& rs) { return rs.cox(); }

inline int matrix_order(const GroupElement& g, int cap = 1000) {
    const GroupElement id = GroupElement::identity(g.rank());
    GroupElement x = g;
    for (int k = 1; k <= cap; ++k) {
        if (x == id) return k;
        x = x * g;
    }
    return -1;
}

inline int absolute_length(const GroupElement& w) {
    return bareiss_rank(w.matrix() - IntMatrix::identity(w.rank()));
}
inline int absolute_length(const RootSystem&, const GroupElement& w) { return absolute_length(w); }

inline bool leq_absolute(const GroupElement& u, const GroupElement& w) {
    return absolute_length(u) + absolute_length(u.inverse() * w) == absolute_length(w);
}
inline bool leq_absolute(const RootSystem&, const GroupElement& u, const GroupElement& w) {
    return leq_absolute(u, w);
}

/// True when w lies in [id, cox].
inline bool in_nc(const RootSystem& rs, const GroupElement& w) {
    return absolute_length(w) + absolute_length(w.inverse() * rs.cox()) == rs.rank();
}

// The interval [id, cox], ordered by length, then matrix.
class NcInterval {
public:
    explicit NcInterval(const RootSystem& rs) {
        const int n = rs.rank();
        const int np = rs.num_positives();
        struct Node {
            GroupElement w, c;
        };
        std::vector<Node> layer{{GroupElement::identity(n), rs.cox()}};
        std::vector<GroupElement> all{layer[0].w};
        for (int k = 0; k < n; ++k) {
            std::unordered_set<GroupElement, GroupElementHash> seen;
            std::vector<Node> next;
            for (const auto& [w, c] : layer)
                for (int t = 0; t < np; ++t) {
                    const GroupElement& s = rs.reflection_at(t);
                    // w s covers w iff s <= c on the right complement side
                    GroupElement c2 = s * c;
                    if (absolute_length(c2) != n - k - 1) continue;
                    GroupElement w2 = w * s;
                    if (!seen.insert(w2).second) continue;
                    next.push_back({std::move(w2), std::move(c2)});
                }
            std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.w < b.w; });
            for (const auto& node : next) all.push_back(node.w);
            layer = std::move(next);
        }
        elements_ = std::move(all);
        lengths_.reserve(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            index_.emplace(elements_[i], static_cast<int>(i));
            lengths_.push_back(absolute_length(elements_[i]));
        }
    }

    std::size_t size() const { return elements_.size(); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
    int length(std::size_t i) const { return lengths_[i]; }
    std::optional<int> index_of(const GroupElement& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const GroupElement& w) const { return index_.count(w) > 0; }

private:
    std::vector<GroupElement> elements_;
    std::vector<int> lengths_;
    std::unordered_map<GroupElement, int, GroupElementHash> index_;
};

inline std::vector<GroupElement> enumerate_nc(const RootSystem& rs) { return NcInterval(rs).elements(); }

/// Positive roots beta with s_beta <= w; assumes w is in [id, cox].
inline RootSet roots_below_unchecked(const RootSystem& rs, const GroupElement& w) {
    RootSet out;
    const int lw = absolute_length(w);
    if (lw == 0) return out;
    for (int t = 0; t < rs.num_positives(); ++t)
        if (absolute_length(rs.reflection_at(t) * w) == lw - 1) out.set(t);
    return out;
}

inline RootSet roots_below(const RootSystem& rs, const GroupElement& w) {
    if (w.rank() != rs.rank() || !in_nc(rs, w)) throw NotInInterval("element is not below the Coxeter element");
    return roots_below_unchecked(rs, w);
}

inline std::vector<Vec> root_list(const RootSystem& rs, const RootSet& s) {
    std::vector<Vec> out;
    for (int t = 0; t < rs.num_positives(); ++t)
        if (s.test(t)) out.push_back(rs.positives()[t]);
    return out;
}

// ---- type A: simple coordinates <-> e-basis of Z^{n+1}

namespace detail {

inline Vec a_simple_to_e(const Vec& c) {
    const int n = static_cast<int>(c.size());
    Vec x(n + 1, 0);
    for (int k = 0; k <= n; ++k) x[k] = (k < n ? c[k] : 0) - (k > 0 ? c[k - 1] : 0);
    return x;
}
inline Vec a_e_to_simple(const Vec& x) {
    const int n = static_cast<int>(x.size()) - 1;
    Vec c(n, 0);
    int acc = 0;
    for (int k = 0; k < n; ++k) c[k] = acc += x[k];
    return c;
}

inline Vec d_simple_to_e(const Vec& c) {
    const int n = static_cast<int>(c.size());
    Vec x(n, 0);
    for (int k = 0; k < n - 2; ++k) x[k] = c[k] - (k > 0 ? c[k - 1] : 0);
    x[n - 2] = c[n - 2] - c[n - 3] + c[n - 1];
    x[n - 1] = c[n - 1] - c[n - 2];
    return x;
}
inline Vec d_e_to_simple(const Vec& x) {
    const int n = static_cast<int>(x.size());
    Vec c(n, 0);
    int acc = 0;
    for (int k = 0; k < n - 2; ++k) c[k] = acc += x[k];
    const int sum = x[n - 2] + c[n - 3];
    c[n - 1] = (sum + x[n - 1]) / 2;
    c[n - 2] = (sum - x[n - 1]) / 2;
    return c;
}

}  // namespace detail

inline Permutation type_a_as_permutation(const RootSystem& rs, const GroupElement& w) {
    if (rs.delta().series != Series::A) throw WrongSeries("permutation model needs series A");
    const int n = rs.rank();
    std::vector<int> images(n + 1);
    for (int a = 0; a <= n; ++a) {
        const int b = a == 0 ? 1 : 0;
        Vec x(n + 1, 0);
        x[a] = 1;
        x[b] = -1;
        const Vec y = detail::a_simple_to_e(w(detail::a_e_to_simple(x)));
        images[a] = static_cast<int>(std::find(y.begin(), y.end(), 1) - y.begin()) + 1;
    }
    return Permutation::from_images(images);
}

inline GroupElement permutation_to_element(const RootSystem& rs, const Permutation& p) {
    if (rs.delta().series != Series::A) throw WrongSeries("permutation model needs series A");
    const int n = rs.rank();
    if (p.degree() != n + 1) throw InvalidPartition("permutation degree must be n+1");
    IntMatrix m(n);
    for (int j = 0; j < n; ++j) {
        Vec x(n + 1, 0);
        x[p(j + 1) - 1] += 1;
        x[p(j + 2) - 1] -= 1;
        const Vec c = detail::a_e_to_simple(x);
        for (int i = 0; i < n; ++i) m(i, j) = c[i];
    }
    return GroupElement(m);
}

inline SignedPermutation type_d_as_signed_permutation(const RootSystem& rs, const GroupElement& w) {
    if (rs.delta().series != Series::D) throw WrongSeries("signed permutation model needs series D");
    const int n = rs.rank();
    std::vector<int> images(n);
    for (int a = 0; a < n; ++a) {
        const int b = a == 0 ? 1 : 0;
        Vec minus(n, 0), plus(n, 0);
        minus[a] = plus[a] = 1;
        minus[b] = -1;
        plus[b] = 1;
        const Vec y1 = detail::d_simple_to_e(w(detail::d_e_to_simple(minus)));
        const Vec y2 = detail::d_simple_to_e(w(detail::d_e_to_simple(plus)));
        for (int k = 0; k < n; ++k) {
            const int v = (y1[k] + y2[k]) / 2;
            if (v != 0) images[a] = v > 0 ? k + 1 : -(k + 1);
        }
    }
    std::vector<Cycle> cyc;
    // assemble through cycles of the full map on [+-n]
    std::vector<bool> seen(2 * n + 1, false);
    auto img = [&](int x) { return x > 0 ? images[x - 1] : -images[-x - 1]; };
    for (int s = 1; s <= n; ++s)
        for (int x : {s, -s}) {
            if (seen[x + n] || img(x) == x) continue;
            Cycle c;
            for (int y = x; !seen[y + n]; y = img(y)) {
                seen[y + n] = true;
                c.push_back(y);
            }
            cyc.push_back(c);
        }
    return SignedPermutation::from_cycles(n, cyc);
}

inline GroupElement signed_permutation_to_element(const RootSystem& rs, const SignedPermutation& p) {
    if (rs.delta().series != Series::D) throw WrongSeries("signed permutation model needs series D");
    const int n = rs.rank();
    if (p.rank() != n || p.negations() % 2 != 0) throw InvalidPartition("not an even signed permutation of [+-n]");
    auto apply_e = [&](const Vec& x) {
        Vec y(n, 0);
        for (int a = 0; a < n; ++a) {
            if (x[a] == 0) continue;
            const int im = p(a + 1);
            y[std::abs(im) - 1] += im > 0 ? x[a] : -x[a];
        }
        return y;
    };
    IntMatrix m(n);
    for (int j = 0; j < n; ++j) {
        Vec e(n, 0);
        e[j] = 1;
        const Vec c = detail::d_e_to_simple(apply_e(detail::d_simple_to_e(e)));
        for (int i = 0; i < n; ++i) m(i, j) = c[i];
    }
    return GroupElement(m);
}

}  // namespace thicket
