#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kostant/error.hpp"

namespace kostant {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
    return r;
}

// Hash-combine over a sequence of integers (boost style).
inline std::size_t hash_ints(const std::vector<Int>& v)
{
    std::size_t h = v.size();
    for (Int x : v) h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

// Dense square integer matrix, row-major, 0-based storage. Public APIs index vertices
// from 1 and convert at the boundary.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    static IntMatrix identity(int n)
    {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int size() const noexcept { return n_; }
    Int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    Int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<Int>& data() const noexcept { return a_; }

    IntMatrix operator*(const IntMatrix& o) const
    {
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                Int x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < n_; ++j)
                    r(i, j) = checked_add(r(i, j), checked_mul(x, o(k, j)));
            }
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const
    {
        std::vector<Int> r(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r[i] = checked_add(r[i], checked_mul((*this)(i, j), v[j]));
        return r;
    }

    IntMatrix transpose() const
    {
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<std::vector<Int>> rows() const
    {
        std::vector<std::vector<Int>> out(n_);
        for (int i = 0; i < n_; ++i) out[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
        return out;
    }

    bool operator==(const IntMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<Int> a_;
};

}  // namespace kostant

template <>
struct std::hash<kostant::IntMatrix> {
    std::size_t operator()(const kostant::IntMatrix& m) const noexcept { return kostant::hash_ints(m.data()); }
};
