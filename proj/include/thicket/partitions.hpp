#pragma once

// Circular partition models: NC^A(n) on 1..n, NC^B(n) and NC^D(n) on +-n.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "perm.hpp"

namespace thicket {

using Block = std::vector<int>;

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

// ---------------------------------------------------------------- type A

class SetPartitionA {
public:
    SetPartitionA() = default;
    SetPartitionA(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) { canonicalize(); }

    static SetPartitionA singletons(int n) {
        std::vector<Block> b;
        for (int i = 1; i <= n; ++i) b.push_back({i});
        return {n, b};
    }
    static SetPartitionA full(int n) {
        Block b(n);
        std::iota(b.begin(), b.end(), 1);
        return {n, {b}};
    }
    /// labels[i-1] = block id of i; ids are arbitrary.
    static SetPartitionA from_labels(const std::vector<int>& labels) {
        std::map<int, Block> by;
        for (std::size_t i = 0; i < labels.size(); ++i) by[labels[i]].push_back(static_cast<int>(i) + 1);
        std::vector<Block> b;
        for (auto& [k, v] : by) b.push_back(std::move(v));
        return {static_cast<int>(labels.size()), b};
    }

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t num_blocks() const { return blocks_.size(); }

    /// block index of element i (1-based element, index into blocks()).
    std::vector<int> labels() const {
        std::vector<int> lab(n_, -1);
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (int x : blocks_[b]) lab[x - 1] = static_cast<int>(b);
        return lab;
    }

    friend bool operator==(const SetPartitionA&, const SetPartitionA&) = default;
    friend auto operator<=>(const SetPartitionA& a, const SetPartitionA& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            s += b ? ",{" : "{";
            for (std::size_t k = 0; k < blocks_[b].size(); ++k) s += (k ? "," : "") + std::to_string(blocks_[b][k]);
            s += "}";
        }
        return s + "}";
    }

private:
    void canonicalize() {
        std::vector<bool> hit(static_cast<std::size_t>(n_) + 1, false);
        int count = 0;
        for (auto& b : blocks_) {
            if (b.empty()) throw InvalidPartition("empty block");
            std::sort(b.begin(), b.end());
            for (int x : b) {
                if (x < 1 || x > n_ || hit[x]) throw InvalidPartition("blocks must partition [n]");
                hit[x] = true;
                ++count;
            }
        }
        if (count != n_) throw InvalidPartition("blocks must cover [n]");
        std::sort(blocks_.begin(), blocks_.end());
    }
    int n_ = 0;
    std::vector<Block> blocks_;
};

/// Stack scan: a revisited block must be the innermost open one.
inline bool is_noncrossing_labels(const std::vector<int>& lab) {
    const int n = static_cast<int>(lab.size());
    std::map<int, int> remaining;
    for (int l : lab) ++remaining[l];
    std::vector<int> stack;
    std::set<int> open;
    for (int i = 0; i < n; ++i) {
        const int b = lab[i];
        while (!stack.empty() && remaining[stack.back()] == 0) {
            open.erase(stack.back());
            stack.pop_back();
        }
        if (open.count(b)) {
            if (stack.back() != b) return false;
        } else {
            stack.push_back(b);
            open.insert(b);
        }
        --remaining[b];
    }
    return true;
}

inline bool is_noncrossing_a(const SetPartitionA& p) { return is_noncrossing_labels(p.labels()); }

/// Every set partition of [n] (restricted growth strings), for brute-force checks.
inline std::vector<SetPartitionA> enumerate_all_partitions(int n) {
    std::vector<SetPartitionA> out;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == n) {
            out.push_back(SetPartitionA::from_labels(rgs));
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    if (n == 0) return out;
    rec(1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Calls fn(labels) for each noncrossing partition of [n], labels[i] = block id.
template <class Fn>
void for_each_nc_labels(int n, Fn&& fn) {
    std::vector<int> lab(n, -1);
    std::vector<int> stack;
    int next_id = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            fn(static_cast<const std::vector<int>&>(lab));
            return;
        }
        // new block
        stack.push_back(next_id);
        lab[i] = next_id++;
        rec(i + 1);
        --next_id;
        stack.pop_back();
        // join an open block, closing everything above it
        for (int depth = static_cast<int>(stack.size()) - 1; depth >= 0; --depth) {
            std::vector<int> saved(stack.begin() + depth + 1, stack.end());
            stack.resize(depth + 1);
            lab[i] = stack[depth];
            rec(i + 1);
            stack.insert(stack.end(), saved.begin(), saved.end());
        }
    };
    if (n > 0) rec(0);
}

inline std::vector<SetPartitionA> enumerate_nc_a(int n) {
    if (n < 1) throw InvalidPartition("n must be positive");
    std::vector<SetPartitionA> out;
    for_each_nc_labels(n, [&](const std::vector<int>& lab) { out.push_back(SetPartitionA::from_labels(lab)); });
    std::sort(out.begin(), out.end());
    return out;
}

inline int mod_pos(long long a, long long m) { return static_cast<int>(((a % m) + m) % m); }

inline SetPartitionA rotate_a(const SetPartitionA& p, int k) {
    const int n = p.n();
    std::vector<Block> b = p.blocks();
    for (auto& blk : b)
        for (int& x : blk) x = mod_pos(x - 1 + k, n) + 1;
    return {n, b};
}

inline bool rotation_invariant_labels(const std::vector<int>& lab, int k) {
    const int n = static_cast<int>(lab.size());
    for (int i = 0; i < n; ++i) {
        const int j = mod_pos(i + k, n);
        for (int i2 = i + 1; i2 < n; ++i2) {
            if (lab[i] != lab[i2]) continue;
            if (lab[j] != lab[mod_pos(i2 + k, n)]) return false;
        }
    }
    // same-block pairs map to same-block pairs; bijectivity gives equality
    return true;
}

namespace detail {

// Points i' sit between i and i+1. Two primed points i' < j' lie in one face
// iff no block meets both {i+1..j} and its complement.
inline SetPartitionA maximal_complement(const SetPartitionA& p, int offset) {
    const int n = p.n();
    const auto lab = p.labels();
    UnionFind uf(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<char> inside(p.num_blocks(), 0), outside(p.num_blocks(), 0);
            for (int x = 1; x <= n; ++x) {
                const bool in = x >= i + offset && x <= j + offset - 1;
                (in ? inside : outside)[lab[x - 1]] = 1;
            }
            bool sep = true;
            for (std::size_t b = 0; b < p.num_blocks(); ++b)
                if (inside[b] && outside[b]) { sep = false; break; }
            if (sep) uf.unite(i - 1, j - 1);
        }
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = uf.find(i);
    return SetPartitionA::from_labels(out);
}

}  // namespace detail

/// Kreweras complement: primed point i' sits between i and i+1.
inline SetPartitionA kreweras_alpha(const SetPartitionA& p) {
    if (!is_noncrossing_a(p)) throw Crossing("partition " + p.str() + " is crossing");
    return detail::maximal_complement(p, 1);
}

/// Inverse of kreweras_alpha: unprimed i sits between (i-1)' and i'.
inline SetPartitionA kreweras_alpha_inverse(const SetPartitionA& q) {
    if (!is_noncrossing_a(q)) throw Crossing("partition " + q.str() + " is crossing");
    return detail::maximal_complement(q, 0);
}

/// Union of p on 1..n and q on 1'..n', interlaced as 1,1',2,2',...
inline SetPartitionA interlace(const SetPartitionA& p, const SetPartitionA& q) {
    std::vector<Block> b;
    for (const auto& blk : p.blocks()) {
        Block x;
        for (int v : blk) x.push_back(2 * v - 1);
        b.push_back(x);
    }
    for (const auto& blk : q.blocks()) {
        Block x;
        for (int v : blk) x.push_back(2 * v);
        b.push_back(x);
    }
    return {2 * p.n(), b};
}

inline SetPartitionA project_f(const SetPartitionA& p, int s) {
    const int h = p.n();
    if (s <= 0 || h % s != 0 || s >= h) throw BadDivisor("need s | h with s < h");
    if (rotate_a(p, s) != p) throw NotInvariant("partition not invariant under rotation by s");
    std::vector<int> lab(s, -1);
    for (std::size_t b = 0; b < p.num_blocks(); ++b) {
        std::set<int> residues;
        for (int x : p.blocks()[b]) residues.insert((x - 1) % s);
        const int id = *residues.begin();
        for (int r : residues) {
            if (lab[r] != -1 && lab[r] != id) throw NotInvariant("residue images overlap");
            lab[r] = id;
        }
    }
    return SetPartitionA::from_labels(lab);
}

namespace detail {

// Lift w on [s] to [xs], blowing block `big` up and cutting the rest along its gaps.
inline SetPartitionA lift_with_big_block(const SetPartitionA& w, int x, std::size_t big) {
    const int s = w.n();
    const int h = x * s;
    const auto wl = w.labels();
    std::vector<int> lab(h);
    std::vector<bool> in_big(h);
    for (int i = 0; i < h; ++i) in_big[i] = wl[i % s] == static_cast<int>(big);
    int gap = 0;
    for (int i = 0; i < h; ++i) {
        if (in_big[i]) {
            ++gap;
            lab[i] = -1;
        } else {
            lab[i] = gap;
        }
    }
    const int total = gap;
    for (int i = 0; i < h; ++i) {
        if (in_big[i]) continue;
        // points before the first big element wrap into the last gap
        const int g = lab[i] == 0 ? total : lab[i];
        lab[i] = 1 + g * s + wl[i % s];
    }
    for (int i = 0; i < h; ++i)
        if (in_big[i]) lab[i] = 0;
    return SetPartitionA::from_labels(lab);
}

}  // namespace detail

/// The s+1 rotation-invariant noncrossing partitions of [xs] projecting to w.
inline std::vector<SetPartitionA> construct_fiber(const SetPartitionA& w, int x) {
    if (x <= 1) throw BadDivisor("fiber needs x > 1");
    if (!is_noncrossing_a(w)) throw Crossing("partition " + w.str() + " is crossing");
    std::vector<SetPartitionA> out;
    for (std::size_t b = 0; b < w.num_blocks(); ++b) out.push_back(detail::lift_with_big_block(w, x, b));
    const SetPartitionA aw = kreweras_alpha(w);
    for (std::size_t b = 0; b < aw.num_blocks(); ++b)
        out.push_back(kreweras_alpha_inverse(detail::lift_with_big_block(aw, x, b)));
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------ types B, D

class SignedPartition {
public:
    SignedPartition() = default;
    SignedPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) { canonicalize(); }

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    static bool is_zero(const Block& b) {
        return std::any_of(b.begin(), b.end(), [&](int x) { return std::find(b.begin(), b.end(), -x) != b.end(); });
    }
    /// index of the zero block, or -1.
    int zero_block() const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (is_zero(blocks_[i])) return static_cast<int>(i);
        return -1;
    }
    int block_of(int x) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (std::find(blocks_[i].begin(), blocks_[i].end(), x) != blocks_[i].end()) return static_cast<int>(i);
        return -1;
    }
    SignedPartition relabel(const std::function<int(int)>& f) const {
        std::vector<Block> b = blocks_;
        for (auto& blk : b)
            for (int& v : blk) v = f(v);
        return {n_, b};
    }

    friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
    friend auto operator<=>(const SignedPartition& a, const SignedPartition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            s += b ? ",{" : "{";
            for (std::size_t k = 0; k < blocks_[b].size(); ++k) s += (k ? "," : "") + std::to_string(blocks_[b][k]);
            s += "}";
        }
        return s + "}";
    }

protected:
    void canonicalize() {
        std::vector<bool> hit(static_cast<std::size_t>(2 * n_) + 1, false);
        int count = 0;
        for (auto& b : blocks_) {
            if (b.empty()) throw InvalidPartition("empty block");
            std::sort(b.begin(), b.end(), signed_label_less);
            for (int x : b) {
                if (x == 0 || std::abs(x) > n_ || hit[x + n_]) throw InvalidPartition("blocks must partition [+-n]");
                hit[x + n_] = true;
                ++count;
            }
        }
        if (count != 2 * n_) throw InvalidPartition("blocks must cover [+-n]");
        std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), signed_label_less);
        });
        int zeros = 0;
        for (const auto& b : blocks_) {
            Block neg;
            for (int x : b) neg.push_back(-x);
            std::sort(neg.begin(), neg.end(), signed_label_less);
            if (std::find(blocks_.begin(), blocks_.end(), neg) == blocks_.end())
                throw InvalidPartition("block set is not closed under negation");
            zeros += neg == b;
        }
        if (zeros > 1) throw InvalidPartition("more than one zero block");
    }
    int n_ = 0;
    std::vector<Block> blocks_;
};

inline std::ostream& operator<<(std::ostream& os, const SetPartitionA& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const SignedPartition& p) { return os << p.str(); }

class BPartition : public SignedPartition {
public:
    BPartition() = default;
    BPartition(int n, std::vector<Block> blocks) : SignedPartition(n, std::move(blocks)) {}
};

class DPartition : public SignedPartition {
public:
    DPartition() = default;
    DPartition(int n, std::vector<Block> blocks) : SignedPartition(n, std::move(blocks)) {
        if (n < 4) throw InvalidPartition("D-partitions need n >= 4");
        const int z = zero_block();
        if (z >= 0 && blocks_[z].size() == 2) throw InvalidPartition("zero block is a single pair");
    }
    explicit DPartition(const SignedPartition& p) : DPartition(p.n(), p.blocks()) {}

    static DPartition singletons(int n) {
        std::vector<Block> b;
        for (int i = 1; i <= n; ++i) {
            b.push_back({i});
            b.push_back({-i});
        }
        return {n, b};
    }
};

// Circle positions 1..2n carry labels 1..n, -1..-n.
inline int b_label_of_position(int pos, int n) { return pos <= n ? pos : -(pos - n); }

inline std::vector<BPartition> enumerate_nc_b(int n) {
    if (n < 1) throw InvalidPartition("n must be positive");
    std::vector<BPartition> out;
    for_each_nc_labels(2 * n, [&](const std::vector<int>& lab) {
        if (!rotation_invariant_labels(lab, n)) return;
        std::map<int, Block> by;
        for (int pos = 1; pos <= 2 * n; ++pos) by[lab[pos - 1]].push_back(b_label_of_position(pos, n));
        std::vector<Block> b;
        for (auto& [k, v] : by) b.push_back(v);
        out.emplace_back(n, b);
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline long long count_nc_b(int n) { return static_cast<long long>(enumerate_nc_b(n).size()); }

/// One step clockwise on the (2n-2)-gon 1..n-1,-1..-(n-1); +-n fixed.
inline int rho_label(int x, int n) {
    if (std::abs(x) == n) return x;
    const int a = std::abs(x);
    if (a < n - 1) return x > 0 ? x + 1 : x - 1;
    return x > 0 ? -1 : 1;
}

inline DPartition rho(const DPartition& p, int k = 1) {
    const int n = p.n();
    k = mod_pos(k, 2 * n - 2);
    return DPartition(p.relabel([&](int x) {
        for (int i = 0; i < k; ++i) x = rho_label(x, n);
        return x;
    }));
}

inline DPartition sigma(const DPartition& p) {
    const int n = p.n();
    std::vector<Block> b = p.blocks();
    for (auto& blk : b) {
        if (SignedPartition::is_zero(blk)) continue;
        for (int& x : blk)
            if (std::abs(x) == n) x = -x;
    }
    return DPartition(n, b);
}

inline DPartition sigma_rho_power(const DPartition& p, int sigma_exp, int rho_exp) {
    DPartition q = rho(p, rho_exp);
    return mod_pos(sigma_exp, 2) ? sigma(q) : q;
}

/// Mirror image on the polygon of a D-partition, centroid forgotten: 2n-2 points.
inline SetPartitionA forget_centroid(const DPartition& p) {
    const int n = p.n();
    const int m = n - 1;
    std::vector<int> lab(2 * m, -1);
    for (std::size_t b = 0; b < p.blocks().size(); ++b)
        for (int x : p.blocks()[b]) {
            if (std::abs(x) == n) continue;
            lab[x > 0 ? x - 1 : m - x - 1] = static_cast<int>(b);
        }
    return SetPartitionA::from_labels(lab);
}

}  // namespace thicket
