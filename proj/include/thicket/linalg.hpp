#pragma once

// Small dense integer matrices with exact (fraction-free) elimination.
//
// Every Coxeter group element handled by the library is an n x n integer
// matrix with n <= 8, so storage is a flat row-major vector and all
// elimination runs over std::int64_t. Bareiss keeps intermediate entries
// equal to minors of the input, which stay tiny for reflection-group
// matrices; no overflow checking is done beyond that assumption.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace thicket {

using Vec = std::vector<int>;

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<int>> rows) {
        n_ = static_cast<int>(rows.size());
        data_.reserve(static_cast<std::size_t>(n_) * n_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n_)
                throw std::invalid_argument("IntMatrix: rows must be square");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int size() const { return n_; }
    int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
    int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }
    std::span<const int> raw() const { return data_; }

    Vec column(int c) const {
        Vec v(n_);
        for (int r = 0; r < n_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    Vec row(int r) const {
        return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r) * n_,
                   data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * n_);
    }

    IntMatrix transposed() const {
        IntMatrix t(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        const int n = a.n_;
        IntMatrix out(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const int aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Vec operator*(const IntMatrix& a, const Vec& v) {
        Vec out(a.n_, 0);
        for (int i = 0; i < a.n_; ++i) {
            int acc = 0;
            for (int j = 0; j < a.n_; ++j) acc += a(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_);
        for (int x : data_) h = h * 1000003u ^ static_cast<std::size_t>(x + 64);
        return h;
    }

private:
    int n_ = 0;
    std::vector<int> data_;
};

struct IntMatrixHash {
    std::size_t operator()(const IntMatrix& m) const { return m.hash(); }
};

/// Rank over the rationals, computed by Bareiss fraction-free elimination.
inline int bareiss_rank(const IntMatrix& m) {
    const int n = m.size();
    std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r) * n + c] = m(r, c);
    auto at = [&](int r, int c) -> std::int64_t& { return a[static_cast<std::size_t>(r) * n + c]; };

    std::int64_t prev = 1;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < n; ++c) std::swap(at(pivot, c), at(rank, c));
        const std::int64_t p = at(rank, col);
        for (int r = rank + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c)
                at(r, c) = (p * at(r, c) - at(r, col) * at(rank, c)) / prev;
            at(r, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

/// Determinant via Bareiss; exact for integer input.
inline std::int64_t bareiss_det(const IntMatrix& m) {
    const int n = m.size();
    if (n == 0) return 1;
    std::vector<std::int64_t> a(m.raw().begin(), m.raw().end());
    auto at = [&](int r, int c) -> std::int64_t& { return a[static_cast<std::size_t>(r) * n + c]; };
    std::int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) { swap_row = r; break; }
            if (swap_row < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                at(r, c) = (at(k, k) * at(r, c) - at(r, k) * at(k, c)) / prev;
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

/// Inverse of a unimodular integer matrix (det = +-1), by fraction-free
/// Gauss-Jordan on [A | I]. Throws if the matrix is not unimodular.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    const int n = m.size();
    const int w = 2 * n;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n) * w, 0);
    auto at = [&](int r, int c) -> std::int64_t& { return a[static_cast<std::size_t>(r) * w + c]; };
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) at(r, c) = m(r, c);
        at(r, n + r) = 1;
    }
    std::int64_t prev = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (at(r, k) != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("unimodular_inverse: singular matrix");
        if (pivot != k)
            for (int c = 0; c < w; ++c) std::swap(at(pivot, c), at(k, c));
        const std::int64_t p = at(k, k);
        for (int r = 0; r < n; ++r) {
            if (r == k) continue;
            for (int c = 0; c < w; ++c) {
                if (c == k) continue;
                at(r, c) = (p * at(r, c) - at(r, k) * at(k, c)) / prev;
            }
            at(r, k) = 0;
        }
        prev = p;
    }
    // Every diagonal entry now equals det(A).
    const std::int64_t det = prev;
    if (det != 1 && det != -1) throw std::domain_error("unimodular_inverse: det != +-1");
    IntMatrix inv(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv(r, c) = static_cast<int>(at(r, n + c) / det);
    return inv;
}

inline int dot(const Vec& a, const Vec& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

inline int bilinear(const IntMatrix& form, const Vec& a, const Vec& b) { return dot(a, form * b); }

}  // namespace thicket
