#pragma once

// Permutations of [N] and signed permutations of [+-n], with composition
// read right to left: (a * b)(x) = a(b(x)).

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace thicket {

using Cycle = std::vector<int>;

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : img_(static_cast<std::size_t>(n) + 1) {
        for (int i = 0; i <= n; ++i) img_[i] = i;
    }
    /// images[i-1] is the image of i.
    static Permutation from_images(const std::vector<int>& images) {
        Permutation p(static_cast<int>(images.size()));
        for (std::size_t i = 0; i < images.size(); ++i) p.img_[i + 1] = images[i];
        p.validate();
        return p;
    }
    static Permutation from_cycles(int n, const std::vector<Cycle>& cycles) {
        Permutation p(n);
        for (const auto& c : cycles)
            for (std::size_t k = 0; k < c.size(); ++k) p.img_[c[k]] = c[(k + 1) % c.size()];
        p.validate();
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()) - 1; }
    int operator()(int i) const { return img_.at(i); }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        Permutation out(a.degree());
        for (int i = 1; i <= a.degree(); ++i) out.img_[i] = a(b(i));
        return out;
    }
    Permutation inverse() const {
        Permutation out(degree());
        for (int i = 1; i <= degree(); ++i) out.img_[img_[i]] = i;
        return out;
    }
    friend bool operator==(const Permutation&, const Permutation&) = default;

    /// Non-trivial cycles, each starting at its minimum, sorted by minimum.
    std::vector<Cycle> cycles() const {
        std::vector<Cycle> out;
        std::vector<bool> seen(img_.size(), false);
        for (int i = 1; i <= degree(); ++i) {
            if (seen[i] || img_[i] == i) continue;
            Cycle c;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                c.push_back(j);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

private:
    void validate() const {
        std::vector<bool> hit(img_.size(), false);
        for (int i = 1; i <= degree(); ++i) {
            const int v = img_[i];
            if (v < 1 || v > degree() || hit[v]) throw std::invalid_argument("not a permutation");
            hit[v] = true;
        }
    }
    std::vector<int> img_;
};

// Order on [+-n] used for cycle notation: 1 < -1 < 2 < -2 < ...
inline bool signed_label_less(int a, int b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a > b;
}

class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(int n) : n_(n), img_(static_cast<std::size_t>(n) + 1) {
        for (int i = 0; i <= n; ++i) img_[i] = i;
    }
    static SignedPermutation from_cycles(int n, const std::vector<Cycle>& cycles) {
        SignedPermutation p(n);
        std::vector<int> full(static_cast<std::size_t>(2 * n) + 1, 0);
        auto slot = [n](int x) { return x + n; };
        for (int x = -n; x <= n; ++x) full[slot(x)] = x;
        for (const auto& c : cycles)
            for (std::size_t k = 0; k < c.size(); ++k) full[slot(c[k])] = c[(k + 1) % c.size()];
        for (int i = 1; i <= n; ++i) {
            p.img_[i] = full[slot(i)];
            if (full[slot(-i)] != -p.img_[i])
                throw std::invalid_argument("cycles do not commute with negation");
        }
        p.validate();
        return p;
    }

    int rank() const { return n_; }
    int operator()(int x) const { return x > 0 ? img_.at(x) : -img_.at(-x); }

    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
        SignedPermutation out(a.n_);
        for (int i = 1; i <= a.n_; ++i) out.img_[i] = a(b(i));
        return out;
    }
    SignedPermutation inverse() const {
        SignedPermutation out(n_);
        for (int i = 1; i <= n_; ++i) {
            const int v = img_[i];
            out.img_[std::abs(v)] = v > 0 ? i : -i;
        }
        return out;
    }
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

    int negations() const {
        int k = 0;
        for (int i = 1; i <= n_; ++i) k += img_[i] < 0;
        return k;
    }

    /// Non-trivial cycles on [+-n]; each starts at its least element in the
    /// order 1 < -1 < 2 < ...; cycles sorted by their first element.
    std::vector<Cycle> cycles() const {
        std::vector<Cycle> out;
        std::vector<bool> seen(static_cast<std::size_t>(2 * n_) + 1, false);
        auto slot = [this](int x) { return static_cast<std::size_t>(x + n_); };
        std::vector<int> order;
        for (int i = 1; i <= n_; ++i) {
            order.push_back(i);
            order.push_back(-i);
        }
        for (int x : order) {
            if (seen[slot(x)] || (*this)(x) == x) continue;
            Cycle c;
            for (int y = x; !seen[slot(y)]; y = (*this)(y)) {
                seen[slot(y)] = true;
                c.push_back(y);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

private:
    void validate() const {
        std::vector<bool> hit(img_.size(), false);
        for (int i = 1; i <= n_; ++i) {
            const int v = std::abs(img_[i]);
            if (v < 1 || v > n_ || hit[v]) throw std::invalid_argument("not a signed permutation");
            hit[v] = true;
        }
    }
    int n_ = 0;
    std::vector<int> img_;
};

}  // namespace thicket
