#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "drinfeld/permutation.hpp"
#include "drinfeld/polynomial.hpp"
#include "drinfeld/weyl.hpp"

namespace drinfeld {

// Indexed symmetric group with cached lengths, products by simple
// reflections, and the Bruhat order matrix; shared per rank.
class SymmetricGroupTable {
public:
    static const SymmetricGroupTable& get(int r, int rank_bound = 8) {
        require(r >= 1 && r <= rank_bound, "RankTooLarge", "symmetric group table bound");
        static std::mutex mx;
        static std::map<int, SymmetricGroupTable> cache;
        std::lock_guard<std::mutex> lock(mx);
        auto it = cache.find(r);
        if (it != cache.end()) return it->second;
        return cache.emplace(r, SymmetricGroupTable(r)).first->second;
    }

    int rank() const { return r_; }
    size_t size() const { return elems_.size(); }
    const Permutation& at(size_t i) const { return elems_[i]; }
    size_t index(const Permutation& w) const { return index_.at(w); }
    long length(size_t i) const { return len_[i]; }
    size_t smul(int s, size_t i) const { return smul_[static_cast<size_t>(s - 1)][i]; } // s_s * w
    size_t muls(size_t i, int s) const { return muls_[static_cast<size_t>(s - 1)][i]; } // w * s_s
    size_t w0() const { return w0_; }
    size_t mul(size_t i, size_t j) const { return index_.at(elems_[i] * elems_[j]); }
    bool leq(size_t x, size_t y) const { return leq_[x][y]; } // Bruhat

private:
    explicit SymmetricGroupTable(int r) : r_(r) {
        elems_ = all_permutations(r);
        for (size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
        for (const auto& w : elems_) len_.push_back(w.length());
        w0_ = index_.at(Permutation::longest(r));
        for (int s = 1; s < r; ++s) {
            std::vector<size_t> row(elems_.size()), col(elems_.size());
            Permutation sp = Permutation::simple(r, s);
            for (size_t i = 0; i < elems_.size(); ++i) {
                row[i] = index_.at(sp * elems_[i]);
                col[i] = index_.at(elems_[i] * sp);
            }
            smul_.push_back(std::move(row));
            muls_.push_back(std::move(col));
        }
        leq_.assign(elems_.size(), std::vector<bool>(elems_.size(), false));
        for (size_t x = 0; x < elems_.size(); ++x)
            for (size_t y = 0; y < elems_.size(); ++y)
                leq_[x][y] = bruhat_leq(elems_[x], elems_[y]);
    }

    int r_;
    std::vector<Permutation> elems_;
    std::map<Permutation, size_t> index_;
    std::vector<long> len_;
    std::vector<std::vector<size_t>> smul_, muls_;
    size_t w0_ = 0;
    std::vector<std::vector<bool>> leq_;
};

namespace detail {

class KLContext {
public:
    explicit KLContext(int r) : g_(SymmetricGroupTable::get(r)) {}

    const SymmetricGroupTable& group() const { return g_; }

    // classical recursion with mu-correction
    const UniPoly& kl(size_t x, size_t w) {
        auto key = std::make_pair(x, w);
        auto it = pmemo_.find(key);
        if (it != pmemo_.end()) return it->second;
        UniPoly val;
        if (!g_.leq(x, w)) {
            val = UniPoly{};
        } else if (x == w) {
            val = UniPoly::one();
        } else {
            int s = left_descent(w);
            size_t sw = g_.smul(s, w);
            size_t sx = g_.smul(s, x);
            if (g_.length(sx) > g_.length(x)) {
                val = kl(sx, w);
            } else {
                // P_{x,w} = P_{sx,sw} + q P_{x,sw}
                //           - sum_z mu(z, sw) q^{(l(w)-l(z))/2} P_{x,z}
                val = kl(sx, sw) + UniPoly{Rational(0), Rational(1)} * kl(x, sw);
                for (size_t z = 0; z < g_.size(); ++z) {
                    if (!g_.leq(x, z) || !g_.leq(z, sw)) continue;
                    if (g_.length(g_.smul(s, z)) > g_.length(z)) continue; // need sz < z
                    Rational m = mu(z, sw);
                    if (m.is_zero()) continue;
                    long halfpow = (g_.length(w) - g_.length(z)) / 2;
                    RatVec mono(static_cast<size_t>(halfpow) + 1, Rational(0));
                    mono.back() = m;
                    val = val - UniPoly(std::move(mono)) * kl(x, z);
                }
            }
        }
        return pmemo_.emplace(key, std::move(val)).first->second;
    }

    // R-polynomials by their own recursion (independent of kl())
    const UniPoly& rpoly(size_t x, size_t w) {
        auto key = std::make_pair(x, w);
        auto it = rmemo_.find(key);
        if (it != rmemo_.end()) return it->second;
        UniPoly val;
        if (!g_.leq(x, w)) {
            val = UniPoly{};
        } else if (x == w) {
            val = UniPoly::one();
        } else {
            int s = left_descent(w);
            size_t sw = g_.smul(s, w);
            size_t sx = g_.smul(s, x);
            if (g_.length(sx) < g_.length(x)) {
                val = rpoly(sx, sw);
            } else {
                // (q - 1) R_{x, sw} + q R_{sx, sw}
                val = UniPoly{Rational(-1), Rational(1)} * rpoly(x, sw) +
                      UniPoly{Rational(0), Rational(1)} * rpoly(sx, sw);
            }
        }
        return rmemo_.emplace(key, std::move(val)).first->second;
    }

    // independent KL computation: solve the bar-invariance identity
    //   q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w}(q) = sum_{x<z<=w} R_{x,z} P_{z,w}
    // downward in l(x), using the degree bound deg P <= (l(w)-l(x)-1)/2
    const UniPoly& kl_oracle(size_t x, size_t w) {
        auto key = std::make_pair(x, w);
        auto it = omemo_.find(key);
        if (it != omemo_.end()) return it->second;
        UniPoly val;
        if (!g_.leq(x, w)) {
            val = UniPoly{};
        } else if (x == w) {
            val = UniPoly::one();
        } else {
            UniPoly f;
            for (size_t z = 0; z < g_.size(); ++z) {
                if (z == x || !g_.leq(x, z) || !g_.leq(z, w)) continue;
                f = f + rpoly(x, z) * kl_oracle(z, w);
            }
            long bigl = g_.length(w) - g_.length(x);
            long dbound = (bigl - 1) / 2;
            check_theorem(f.degree() <= bigl, "KLOracle", "excess degree in the bar identity");
            RatVec coeffs(static_cast<size_t>(dbound) + 1, Rational(0));
            for (long k = 0; k <= dbound; ++k) coeffs[static_cast<size_t>(k)] = f.coeff(bigl - k);
            val = UniPoly(std::move(coeffs));
            // consistency: the low part must be the negated mirror image
            UniPoly recon;
            {
                RatVec high(static_cast<size_t>(bigl) + 1, Rational(0));
                for (long k = 0; k <= dbound; ++k)
                    high[static_cast<size_t>(bigl - k)] = val.coeff(k);
                recon = UniPoly(std::move(high)) - val;
            }
            check_theorem(recon == f, "KLOracle",
                          "bar-invariance system is inconsistent with the degree bound");
        }
        return omemo_.emplace(key, std::move(val)).first->second;
    }

    Rational mu(size_t z, size_t y) {
        long diff = g_.length(y) - g_.length(z);
        if (diff <= 0 || diff % 2 == 0) return Rational(0);
        return kl(z, y).coeff((diff - 1) / 2);
    }

private:
    int left_descent(size_t w) const {
        for (int s = 1; s < g_.rank(); ++s)
            if (g_.length(g_.smul(s, w)) < g_.length(w)) return s;
        throw theorem_violation("KL", "non-identity element without a left descent");
    }

    const SymmetricGroupTable& g_;
    std::map<std::pair<size_t, size_t>, UniPoly> pmemo_, rmemo_, omemo_;
};

inline KLContext& kl_context(int r) {
    static std::mutex mx;
    static std::map<int, KLContext> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, KLContext(r)).first;
    return it->second;
}
inline std::mutex& kl_mutex() {
    static std::mutex mx;
    return mx;
}

} // namespace detail

// P_{x,w}(q) by the classical recursion (memoized per rank).
inline UniPoly kl_polynomial(const Permutation& x, const Permutation& w,
                             int rank_bound = kDefaultRankBound) {
    require(x.rank() == w.rank(), "RankMismatch", "KL polynomial across ranks");
    require(x.rank() <= rank_bound, "RankTooLarge", "KL rank bound exceeded");
    std::lock_guard<std::mutex> lock(detail::kl_mutex());
    auto& ctx = detail::kl_context(x.rank());
    return ctx.kl(ctx.group().index(x), ctx.group().index(w));
}

// P_{x,w}(q) by the disjoint route: R-polynomial recursion plus the
// bar-invariance triangular solve.
inline UniPoly kl_oracle(const Permutation& x, const Permutation& w,
                         int rank_bound = kDefaultRankBound) {
    require(x.rank() == w.rank(), "RankMismatch", "KL oracle across ranks");
    require(x.rank() <= rank_bound, "RankTooLarge", "KL rank bound exceeded");
    std::lock_guard<std::mutex> lock(detail::kl_mutex());
    auto& ctx = detail::kl_context(x.rank());
    return ctx.kl_oracle(ctx.group().index(x), ctx.group().index(w));
}

inline long kl_at_one(const Permutation& x, const Permutation& w) {
    Rational v = kl_polynomial(x, w).eval(Rational(1));
    check_theorem(v.is_integer(), "KL", "KL value at 1 is not an integer");
    return static_cast<long>(*v.as_int());
}

// Full table for one rank, with the structural invariants enforced:
// support on Bruhat-comparable pairs, P_{w,w} = 1, constant term 1, and the
// degree bound 2 deg P <= l(w) - l(x) - 1 for x < w.
struct KLTable {
    int rank = 0;
    std::map<std::pair<Permutation, Permutation>, UniPoly> values; // comparable pairs
};

inline KLTable kl_table(int rank, int rank_bound = kDefaultRankBound) {
    KLTable t;
    t.rank = rank;
    for (const auto& x : all_permutations(rank))
        for (const auto& w : all_permutations(rank)) {
            UniPoly p = kl_polynomial(x, w, rank_bound);
            if (!bruhat_leq(x, w)) {
                check_theorem(p.is_zero(), "KLTable", "nonzero value off the Bruhat order");
                continue;
            }
            check_theorem(p.coeff(0) == Rational(1), "KLTable", "constant term is not 1");
            if (x == w)
                check_theorem(p.is_one(), "KLTable", "diagonal value is not 1");
            else
                check_theorem(2 * p.degree() <= w.length() - x.length() - 1, "KLTable",
                              "degree bound violated");
            t.values.emplace(std::make_pair(x, w), std::move(p));
        }
    return t;
}

} // namespace drinfeld
