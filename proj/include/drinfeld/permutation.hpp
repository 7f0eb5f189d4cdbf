#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/partition.hpp"

namespace drinfeld {

// Permutation of {1..r} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : im_(std::move(images)) {
        std::vector<bool> seen(im_.size(), false);
        for (int x : im_) {
            require(x >= 1 && x <= static_cast<int>(im_.size()) && !seen[static_cast<size_t>(x - 1)],
                    "BadPermutation", "one-line notation is not a bijection");
            seen[static_cast<size_t>(x - 1)] = true;
        }
    }
    static Permutation identity(int r) {
        std::vector<int> v(static_cast<size_t>(r));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }
    static Permutation simple(int r, int i) { // s_i = (i, i+1)
        require(i >= 1 && i < r, "BadGenerator", "simple reflection out of range");
        Permutation p = identity(r);
        std::swap(p.im_[static_cast<size_t>(i - 1)], p.im_[static_cast<size_t>(i)]);
        return p;
    }
    static Permutation transposition(int r, int i, int j) { // (i, j)
        Permutation p = identity(r);
        std::swap(p.im_[static_cast<size_t>(i - 1)], p.im_[static_cast<size_t>(j - 1)]);
        return p;
    }
    static Permutation longest(int r) {
        std::vector<int> v(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) v[static_cast<size_t>(i)] = r - i;
        return Permutation(std::move(v));
    }

    int rank() const { return static_cast<int>(im_.size()); }
    int operator()(int i) const { return im_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return im_; }
    bool is_identity() const {
        for (int i = 1; i <= rank(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        require(a.rank() == b.rank(), "RankMismatch", "composing permutations of unequal rank");
        std::vector<int> v(a.im_.size());
        for (int i = 1; i <= a.rank(); ++i) v[static_cast<size_t>(i - 1)] = a(b(i));
        return Permutation(std::move(v));
    }
    Permutation inverse() const {
        std::vector<int> v(im_.size());
        for (int i = 1; i <= rank(); ++i) v[static_cast<size_t>((*this)(i) - 1)] = i;
        return Permutation(std::move(v));
    }

    long length() const { // number of inversions
        long inv = 0;
        for (size_t i = 0; i < im_.size(); ++i)
            for (size_t j = i + 1; j < im_.size(); ++j)
                if (im_[i] > im_[j]) ++inv;
        return inv;
    }
    int sign() const { return length() % 2 == 0 ? 1 : -1; }

    long cycle_count() const {
        std::vector<bool> seen(im_.size(), false);
        long c = 0;
        for (int i = 1; i <= rank(); ++i) {
            if (seen[static_cast<size_t>(i - 1)]) continue;
            ++c;
            int j = i;
            while (!seen[static_cast<size_t>(j - 1)]) {
                seen[static_cast<size_t>(j - 1)] = true;
                j = (*this)(j);
            }
        }
        return c;
    }

    Partition cycle_type() const {
        std::vector<bool> seen(im_.size(), false);
        std::vector<long> lens;
        for (int i = 1; i <= rank(); ++i) {
            if (seen[static_cast<size_t>(i - 1)]) continue;
            long len = 0;
            int j = i;
            while (!seen[static_cast<size_t>(j - 1)]) {
                seen[static_cast<size_t>(j - 1)] = true;
                j = (*this)(j);
                ++len;
            }
            lens.push_back(len);
        }
        return Partition::from_multiset(std::move(lens));
    }

    // canonical reduced word (selection of descents, lexicographically least
    // in a fixed scheme); returned as simple-reflection indices
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        std::vector<int> v = im_;
        // bubble sort to identity, recording swaps; word read right-to-left
        bool moved = true;
        while (moved) {
            moved = false;
            for (size_t i = 0; i + 1 < v.size(); ++i) {
                if (v[i] > v[i + 1]) {
                    std::swap(v[i], v[i + 1]);
                    word.push_back(static_cast<int>(i + 1));
                    moved = true;
                }
            }
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.im_ == b.im_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.im_ < b.im_; }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < im_.size(); ++i) s += (i ? "," : "") + std::to_string(im_[i]);
        return s + "]";
    }

private:
    std::vector<int> im_;
};

// w * s_i * w^{-1}-free check helpers
inline bool has_right_descent(const Permutation& w, int i) { return w(i) > w(i + 1); }
inline bool has_left_descent(const Permutation& w, int i) {
    return w.inverse()(i) > w.inverse()(i + 1);
}

// Bruhat order by the rank-matrix dominance criterion:
// x <= y iff #{a <= i : x(a) >= j} <= #{a <= i : y(a) >= j} for all i, j.
inline bool bruhat_leq(const Permutation& x, const Permutation& y) {
    require(x.rank() == y.rank(), "RankMismatch", "Bruhat comparison across ranks");
    int r = x.rank();
    Permutation xi = x.inverse(), yi = y.inverse();
    for (int i = 1; i <= r; ++i) {
        int cx = 0, cy = 0;
        for (int j = r; j >= 1; --j) {
            if (xi(j) <= i) ++cx;
            if (yi(j) <= i) ++cy;
            if (cx > cy) return false;
        }
    }
    return true;
}

inline std::vector<Permutation> all_permutations(int r) {
    std::vector<int> v(static_cast<size_t>(r));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace drinfeld
