#pragma once

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/permutation.hpp"
#include "drinfeld/weight.hpp"

namespace drinfeld {

inline constexpr int kDefaultRankBound = 8;

// Stabilizer subgroup W_lambda = {w : w.lambda = lambda}, by enumeration.
inline std::vector<Permutation> stabilizer(const Weight& lambda, int rank_bound = kDefaultRankBound) {
    require(lambda.rank() <= rank_bound, "RankTooLarge", "stabilizer enumeration bound exceeded");
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(lambda.rank()))
        if (act(w, lambda) == lambda) out.push_back(w);
    return out;
}

// Small generating set of a subgroup given by its element list.
inline std::vector<Permutation> subgroup_generators(const std::vector<Permutation>& elems) {
    if (elems.empty()) return {};
    int r = elems[0].rank();
    std::set<Permutation> closure{Permutation::identity(r)};
    std::vector<Permutation> gens;
    for (const auto& g : elems) {
        if (closure.count(g)) continue;
        gens.push_back(g);
        // regenerate closure
        std::vector<Permutation> frontier(closure.begin(), closure.end());
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& x : frontier)
                for (const auto& h : gens) {
                    Permutation y = h * x;
                    if (closure.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

// A W_lambda x W_mu double coset with its distinguished representatives.
// w_min/w_LR are the unique shortest/longest elements; w_R is the longest
// element of w_min W_mu and w_L the longest of W_lambda w_min.
struct DoubleCosetRep {
    std::vector<Permutation> coset_elements; // sorted one-line lex
    Permutation w_min;
    Permutation w_LR;
    Permutation w_R;
    Permutation w_L;
};

namespace detail {
inline Permutation unique_extreme(const std::vector<Permutation>& set, bool longest,
                                  const char* what) {
    const Permutation* best = nullptr;
    bool unique = true;
    for (const auto& w : set) {
        if (!best) {
            best = &w;
            continue;
        }
        long lw = w.length(), lb = best->length();
        if ((longest && lw > lb) || (!longest && lw < lb)) {
            best = &w;
            unique = true;
        } else if (lw == lb) {
            unique = false;
        }
    }
    check_theorem(best && unique, "NonUniqueExtreme", what);
    return *best;
}
} // namespace detail

inline std::vector<DoubleCosetRep> double_cosets(const Weight& lambda, const Weight& mu,
                                                 int rank_bound = kDefaultRankBound) {
    require(lambda.rank() == mu.rank(), "RankMismatch", "double cosets need equal rank");
    require(lambda.rank() <= rank_bound, "RankTooLarge", "double coset enumeration bound exceeded");
    int r = lambda.rank();
    std::vector<Permutation> wl = subgroup_generators(stabilizer(lambda, rank_bound));
    std::vector<Permutation> wm = subgroup_generators(stabilizer(mu, rank_bound));
    std::vector<Permutation> all = all_permutations(r);
    std::set<Permutation> seen;
    std::vector<DoubleCosetRep> out;
    for (const auto& w0 : all) {
        if (seen.count(w0)) continue;
        // orbit closure of W_lambda * w0 * W_mu
        std::set<Permutation> coset{w0};
        std::vector<Permutation> frontier{w0};
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& x : frontier) {
                for (const auto& u : wl) {
                    Permutation y = u * x;
                    if (coset.insert(y).second) next.push_back(y);
                }
                for (const auto& v : wm) {
                    Permutation y = x * v;
                    if (coset.insert(y).second) next.push_back(y);
                }
            }
            frontier = std::move(next);
        }
        DoubleCosetRep rep;
        rep.coset_elements.assign(coset.begin(), coset.end());
        rep.w_min = detail::unique_extreme(rep.coset_elements, false, "shortest double coset rep");
        rep.w_LR = detail::unique_extreme(rep.coset_elements, true, "longest double coset rep");
        // right coset w_min W_mu and left coset W_lambda w_min
        std::set<Permutation> right, left;
        std::vector<Permutation> wm_all = stabilizer(mu, rank_bound);
        std::vector<Permutation> wl_all = stabilizer(lambda, rank_bound);
        for (const auto& v : wm_all) right.insert(rep.w_min * v);
        for (const auto& u : wl_all) left.insert(u * rep.w_min);
        rep.w_R = detail::unique_extreme({right.begin(), right.end()}, true, "longest in wW_mu");
        rep.w_L = detail::unique_extreme({left.begin(), left.end()}, true, "longest in W_lambda w");
        seen.insert(coset.begin(), coset.end());
        out.push_back(std::move(rep));
    }
    return out;
}

// S(lambda; ell) when n is unbounded, S^(n)(lambda; ell) otherwise: all mu
// with (lambda - mu)(e_i) in {0..ell} (and <= n when bounded) summing to ell.
inline std::set<Weight> admissible_weights(const Weight& lambda, long ell,
                                           long n = std::numeric_limits<long>::max()) {
    require(ell >= 0, "BadLength", "ell must be nonnegative");
    int r = lambda.rank();
    long cap = std::min(ell, n);
    std::set<Weight> out;
    std::vector<long> diff(static_cast<size_t>(r), 0);
    auto rec = [&](auto&& self, int i, long rest) -> void {
        if (i == r) {
            if (rest != 0) return;
            RatVec e(static_cast<size_t>(r));
            for (int j = 1; j <= r; ++j)
                e[static_cast<size_t>(j - 1)] = lambda[j] - Rational(diff[static_cast<size_t>(j - 1)]);
            out.insert(Weight(std::move(e)));
            return;
        }
        for (long d = 0; d <= std::min(cap, rest); ++d) {
            diff[static_cast<size_t>(i)] = d;
            self(self, i + 1, rest - d);
        }
    };
    rec(rec, 0, ell);
    return out;
}

inline bool is_admissible(const Weight& lambda, const Weight& mu, long ell, long n) {
    Weight d = lambda - mu;
    Rational total(0);
    for (int i = 1; i <= d.rank(); ++i) {
        if (!d[i].is_integer()) return false;
        auto v = d[i].as_int();
        if (!v || *v < 0 || *v > std::min(ell, n)) return false;
        total += d[i];
    }
    return total == Rational(ell);
}

// W_r^(n)(lambda, mu) = {w : w.mu in S^(n)(lambda; ell)}, ell = sum(lambda - mu),
// together with its image in the double cosets.
struct AdmissibleGroupSet {
    long ell = 0;
    std::vector<Permutation> elements;
    std::vector<DoubleCosetRep> cosets; // those double cosets meeting the set
};

inline AdmissibleGroupSet wset_n(const Weight& lambda, const Weight& mu, long n,
                                 int rank_bound = kDefaultRankBound) {
    require(lambda.is_dominant(), "NotDominant", "lambda must be dominant");
    require(mu.is_dominant(), "NotDominant", "mu must be dominant");
    require(lambda.rank() == mu.rank(), "RankMismatch", "wset_n needs equal rank");
    AdmissibleGroupSet out;
    Rational ellr = (lambda - mu).sum();
    if (!ellr.is_integer() || ellr.sign() < 0) return out; // empty: no w can fix the total
    out.ell = *ellr.as_int();
    for (const auto& w : all_permutations(lambda.rank()))
        if (is_admissible(lambda, act(w, mu), out.ell, n)) out.elements.push_back(w);
    if (out.elements.empty()) return out;
    for (auto& rep : double_cosets(lambda, mu, rank_bound)) {
        bool meets = false;
        for (const auto& w : out.elements)
            if (std::binary_search(rep.coset_elements.begin(), rep.coset_elements.end(), w)) {
                meets = true;
                break;
            }
        if (meets) out.cosets.push_back(std::move(rep));
    }
    return out;
}

} // namespace drinfeld
