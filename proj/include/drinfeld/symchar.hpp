#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "drinfeld/partition.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld {

namespace detail {

// Murnaghan-Nakayama recursion on beta-sets: removing a rim hook of size k
// from nu means lowering one beta-number by k into a free slot; the height of
// the hook is the number of beta-numbers jumped over.
inline long mn_rec(const std::vector<long>& nu, const std::vector<long>& rho, size_t ri,
                   std::map<std::pair<std::vector<long>, size_t>, long>& memo) {
    if (ri == rho.size()) return nu.empty() ? 1 : 0;
    auto key = std::make_pair(nu, ri);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    long k = rho[ri];
    size_t L = nu.size();
    std::vector<long> beta(L);
    for (size_t i = 0; i < L; ++i) beta[i] = nu[i] + static_cast<long>(L - 1 - i);
    // beta is strictly decreasing
    long total = 0;
    for (size_t i = 0; i < L; ++i) {
        long target = beta[i] - k;
        if (target < 0) continue;
        bool occupied = false;
        long jumped = 0;
        for (size_t j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] < beta[i] && beta[j] > target) ++jumped;
        }
        if (occupied) continue;
        std::vector<long> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<long> next(L);
        for (size_t j = 0; j < L; ++j) next[j] = nb[j] - static_cast<long>(L - 1 - j);
        while (!next.empty() && next.back() == 0) next.pop_back();
        long sign = (jumped % 2 == 0) ? 1 : -1;
        total += sign * mn_rec(next, rho, ri + 1, memo);
    }
    memo[key] = total;
    return total;
}

} // namespace detail

// Irreducible character chi^nu evaluated on the class of the given cycle type.
inline Rational mn_character(const Partition& nu, const Partition& cycle_type) {
    require(nu.size() == cycle_type.size(), "SizeMismatch",
            "partition and cycle type must have equal size");
    static std::mutex mx;
    static std::map<std::pair<std::vector<long>, std::vector<long>>, long> cache;
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = cache.find({nu.parts(), cycle_type.parts()});
        if (it != cache.end()) return Rational(it->second);
    }
    std::map<std::pair<std::vector<long>, size_t>, long> memo;
    long v = detail::mn_rec(nu.parts(), cycle_type.parts(), 0, memo);
    std::lock_guard<std::mutex> lock(mx);
    cache[{nu.parts(), cycle_type.parts()}] = v;
    return Rational(v);
}

// Full character table of S_ell, keyed by [irreducible][class]; memoized
// write-once per ell.
struct CharacterTable {
    long ell = 0;
    std::vector<Partition> irreducibles; // also indexes classes by cycle type
    std::vector<Rational> class_sizes;
    std::vector<std::vector<Rational>> chi; // chi[i][c]
};

inline const CharacterTable& character_table(long ell) {
    static std::mutex mx;
    static std::map<long, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
    CharacterTable t;
    t.ell = ell;
    t.irreducibles = partitions_of(ell);
    for (const auto& c : t.irreducibles) t.class_sizes.push_back(conjugacy_class_size(c));
    for (const auto& nu : t.irreducibles) {
        std::vector<Rational> row;
        for (const auto& c : t.irreducibles) row.push_back(mn_character(nu, c));
        t.chi.push_back(std::move(row));
    }
    return cache.emplace(ell, std::move(t)).first->second;
}

} // namespace drinfeld
