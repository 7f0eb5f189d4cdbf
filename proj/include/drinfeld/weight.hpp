#pragma once

#include <string>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/partition.hpp"
#include "drinfeld/permutation.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld {

// Weight of gl_r: coordinate vector in the epsilon basis.
class Weight {
public:
    Weight() = default;
    explicit Weight(RatVec entries) : e_(std::move(entries)) {}
    static Weight from_ints(const std::vector<long>& v) {
        RatVec e(v.size());
        for (size_t i = 0; i < v.size(); ++i) e[i] = Rational(v[i]);
        return Weight(std::move(e));
    }

    int rank() const { return static_cast<int>(e_.size()); }
    const RatVec& entries() const { return e_; }
    const Rational& operator[](int i) const { return e_[static_cast<size_t>(i - 1)]; } // 1-based
    Rational sum() const {
        Rational s(0);
        for (const auto& x : e_) s += x;
        return s;
    }

    bool is_integral() const {
        for (const auto& x : e_)
            if (!x.is_integer()) return false;
        return true;
    }

    // dominant: lambda(alpha) not in {-1, -2, ...} for all positive roots
    // alpha = e_i - e_j (i < j); for rational entries this means no pairwise
    // difference is a negative integer.
    bool is_dominant() const {
        for (int i = 1; i <= rank(); ++i)
            for (int j = i + 1; j <= rank(); ++j) {
                Rational d = (*this)[i] - (*this)[j];
                if (d.is_integer() && d.sign() < 0) return false;
            }
        return true;
    }
    bool is_integral_dominant() const {
        if (!is_integral()) return false;
        for (int i = 1; i + 1 <= rank(); ++i)
            if ((*this)[i] < (*this)[i + 1]) return false;
        return true;
    }

    // left action permuting coordinates: (w.mu)(e_{w(i)}) = mu(e_i)
    friend Weight act(const Permutation& w, const Weight& mu) {
        require(w.rank() == mu.rank(), "RankMismatch", "permutation/weight rank mismatch");
        RatVec e(mu.e_.size());
        for (int i = 1; i <= mu.rank(); ++i) e[static_cast<size_t>(w(i) - 1)] = mu[i];
        return Weight(std::move(e));
    }

    friend Weight operator-(const Weight& a, const Weight& b) {
        require(a.rank() == b.rank(), "RankMismatch", "weight subtraction across ranks");
        RatVec e(a.e_.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = a.e_[i] - b.e_[i];
        return Weight(std::move(e));
    }
    friend Weight operator+(const Weight& a, const Weight& b) {
        require(a.rank() == b.rank(), "RankMismatch", "weight addition across ranks");
        RatVec e(a.e_.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = a.e_[i] + b.e_[i];
        return Weight(std::move(e));
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) {
        if (a.e_.size() != b.e_.size()) return a.e_.size() < b.e_.size();
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
        return false;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < e_.size(); ++i) s += (i ? "," : "") + e_[i].str();
        return s + ")";
    }

private:
    RatVec e_;
};

// rho_r = ((r-1)/2, (r-3)/2, ..., -(r-1)/2)
inline Weight rho(int r) {
    RatVec e(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i) e[static_cast<size_t>(i - 1)] = Rational(r - 2 * i + 1, 2);
    return Weight(std::move(e));
}

// nu_{lambda,mu}: the partition of ell obtained from the differences
// (lambda - mu)(e_i), all of which must be nonnegative integers.
inline Partition segment_partition(const Weight& lambda, const Weight& mu) {
    Weight d = lambda - mu;
    std::vector<long> parts;
    for (int i = 1; i <= d.rank(); ++i) {
        auto v = d[i].as_int();
        require(v.has_value() && *v >= 0, "NotAdmissible",
                "lambda - mu must have nonnegative integer entries");
        parts.push_back(*v);
    }
    return Partition::from_multiset(std::move(parts));
}

} // namespace drinfeld
