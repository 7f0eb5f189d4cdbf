#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts) : p_(std::move(parts)) {
        while (!p_.empty() && p_.back() == 0) p_.pop_back();
        for (size_t i = 0; i < p_.size(); ++i) {
            require(p_[i] > 0, "BadPartition", "parts must be positive");
            require(i == 0 || p_[i - 1] >= p_[i], "BadPartition", "parts must weakly decrease");
        }
    }
    // sorts a multiset of nonnegative integers, dropping zeros
    static Partition from_multiset(std::vector<long> v) {
        std::sort(v.rbegin(), v.rend());
        return Partition(std::move(v));
    }

    const std::vector<long>& parts() const { return p_; }
    size_t length() const { return p_.size(); }
    long part(size_t i) const { return i < p_.size() ? p_[i] : 0; }
    long size() const {
        long s = 0;
        for (long x : p_) s += x;
        return s;
    }
    bool empty() const { return p_.empty(); }

    Partition transpose() const {
        std::vector<long> t;
        if (!p_.empty()) {
            t.assign(static_cast<size_t>(p_[0]), 0);
            for (long x : p_)
                for (long j = 0; j < x; ++j) ++t[static_cast<size_t>(j)];
        }
        return Partition(std::move(t));
    }

    // dominance order (only meaningful for equal sizes)
    friend bool dominates(const Partition& a, const Partition& b) {
        long sa = 0, sb = 0;
        size_t n = std::max(a.length(), b.length());
        for (size_t i = 0; i < n; ++i) {
            sa += a.part(i);
            sb += b.part(i);
            if (sa < sb) return false;
        }
        return true;
    }
    friend bool strictly_dominates(const Partition& a, const Partition& b) {
        return a != b && dominates(a, b);
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < p_.size(); ++i)
            s += (i ? "," : "") + std::to_string(p_[i]);
        return s + ")";
    }

private:
    std::vector<long> p_;
};

inline std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n < 1 ? 1 : n);
    return out;
}

// |class of cycle type t| in S_n: n! / prod(i^{m_i} m_i!)
inline Rational conjugacy_class_size(const Partition& t) {
    long n = t.size();
    Rational denom(1);
    std::vector<long> mult(static_cast<size_t>(n) + 1, 0);
    for (long x : t.parts()) ++mult[static_cast<size_t>(x)];
    for (long i = 1; i <= n; ++i) {
        long m = mult[static_cast<size_t>(i)];
        denom *= pow_int(Rational(i), m) * factorial(m);
    }
    return factorial(n) / denom;
}

// number of standard Young tableaux, by the hook length formula
inline Rational syt_count(const Partition& nu) {
    Partition t = nu.transpose();
    Rational hooks(1);
    for (size_t i = 0; i < nu.length(); ++i)
        for (long j = 0; j < nu.part(i); ++j) {
            long arm = nu.part(i) - j - 1;
            long leg = t.part(static_cast<size_t>(j)) - static_cast<long>(i) - 1;
            hooks *= Rational(arm + leg + 1);
        }
    return factorial(nu.size()) / hooks;
}

} // namespace drinfeld
