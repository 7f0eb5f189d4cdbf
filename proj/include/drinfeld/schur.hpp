#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/partition.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld {

// gl_n weights as integer coordinate vectors of length n
using GlnWeight = std::vector<long>;

// Weyl dimension of the irreducible with highest weight lambda (<= n parts).
inline Rational weyl_dim(const Partition& lambda, int n) {
    require(static_cast<int>(lambda.length()) <= n, "BadWeight",
            "highest weight needs at most n parts");
    Rational d(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            d *= Rational(lambda.part(static_cast<size_t>(i - 1)) -
                          lambda.part(static_cast<size_t>(j - 1)) + j - i) /
                 Rational(j - i);
    return d;
}

// Weight multiset of the irreducible s_lambda, by semistandard tableau
// enumeration; memoized per (lambda, n).
inline const std::map<GlnWeight, long>& schur_weights(const Partition& lambda, int n) {
    static std::mutex mx;
    static std::map<std::pair<std::vector<long>, int>, std::map<GlnWeight, long>> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_pair(lambda.parts(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::map<GlnWeight, long> weights;
    size_t rows = lambda.length();
    std::vector<std::vector<int>> t(rows);
    for (size_t r = 0; r < rows; ++r) t[r].assign(static_cast<size_t>(lambda.part(r)), 0);
    auto rec = [&](auto&& self, size_t r, size_t c) -> void {
        if (r == rows) {
            GlnWeight w(static_cast<size_t>(n), 0);
            for (const auto& row : t)
                for (int e : row) ++w[static_cast<size_t>(e - 1)];
            ++weights[w];
            return;
        }
        size_t nr = r, nc = c + 1;
        if (nc >= t[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = t[r][c - 1];                       // weakly increase along rows
        if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1); // strictly down columns
        for (int e = lo; e <= n; ++e) {
            t[r][c] = e;
            self(self, nr, nc);
        }
    };
    if (rows == 0)
        weights[GlnWeight(static_cast<size_t>(n), 0)] = 1;
    else
        rec(rec, 0, 0);
    return cache.emplace(key, std::move(weights)).first->second;
}

// Pieri rule for elementary symmetric functions: e_k * s_lambda = sum of
// s_mu over mu = lambda + vertical k-strip with at most n rows.
inline std::vector<Partition> pieri_e(const Partition& lambda, long k, int n) {
    std::vector<Partition> out;
    if (k < 0 || k > n) return out;
    std::vector<long> padded(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < lambda.length(); ++i) padded[i] = lambda.part(i);
    std::vector<int> add(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, size_t row, long rest) -> void {
        if (rest == 0) {
            std::vector<long> mu = padded;
            for (size_t i = 0; i < mu.size(); ++i) mu[i] += add[i];
            for (size_t i = 0; i + 1 < mu.size(); ++i)
                if (mu[i] < mu[i + 1]) return;
            out.push_back(Partition::from_multiset(std::move(mu)));
            return;
        }
        if (row == padded.size()) return;
        // skip this row or add one cell
        self(self, row + 1, rest);
        add[row] = 1;
        // column strictness of the strip: mu must remain a partition, checked at the end
        self(self, row + 1, rest - 1);
        add[row] = 0;
    };
    rec(rec, 0, k);
    // the vertical strip condition (no two added cells in one row) is built in;
    // validity of mu as a partition was filtered above
    return out;
}

// Character of a polynomial gl_n representation in the Schur basis.
struct GlnCharacter {
    int n = 0;
    std::map<Partition, long> schur_mult;

    Rational dimension() const {
        Rational d(0);
        for (const auto& [lam, m] : schur_mult) d += Rational(m) * weyl_dim(lam, n);
        return d;
    }
    long multiplicity(const Partition& lam) const {
        auto it = schur_mult.find(lam);
        return it == schur_mult.end() ? 0 : it->second;
    }
    std::map<GlnWeight, long> weight_multiset() const {
        std::map<GlnWeight, long> out;
        for (const auto& [lam, m] : schur_mult)
            for (const auto& [w, c] : schur_weights(lam, n)) out[w] += m * c;
        return out;
    }
    friend GlnCharacter operator+(GlnCharacter a, const GlnCharacter& b) {
        require(a.n == b.n, "RankMismatch", "character addition across ranks");
        for (const auto& [lam, m] : b.schur_mult) {
            a.schur_mult[lam] += m;
            if (a.schur_mult[lam] == 0) a.schur_mult.erase(lam);
        }
        return a;
    }
    friend GlnCharacter operator*(long s, GlnCharacter a) {
        if (s == 0) return GlnCharacter{a.n, {}};
        for (auto& [lam, m] : a.schur_mult) m *= s;
        return a;
    }
    friend bool operator==(const GlnCharacter& a, const GlnCharacter& b) {
        return a.n == b.n && a.schur_mult == b.schur_mult;
    }
};

// Greedy expansion of a W-symmetric weight multiset into Schur multiplicities.
// The lexicographically largest weight is always a partition and a highest
// weight; all intermediate multiplicities must remain nonnegative.
inline GlnCharacter schur_expand(std::map<GlnWeight, long> weights, int n,
                                 const char* error_code = "NegativeMultiplicity") {
    GlnCharacter ch;
    ch.n = n;
    for (auto it = weights.begin(); it != weights.end();)
        it = it->second == 0 ? weights.erase(it) : std::next(it);
    while (!weights.empty()) {
        auto top = std::prev(weights.end()); // lex-largest
        GlnWeight w = top->first;
        long mult = top->second;
        require(mult > 0, error_code, "weight multiset is not a nonnegative Schur combination");
        for (size_t i = 0; i + 1 < w.size(); ++i)
            require(w[i] >= w[i + 1], error_code, "leading weight is not dominant");
        std::vector<long> parts(w.begin(), w.end());
        Partition lam = Partition::from_multiset(parts);
        ch.schur_mult[lam] += mult;
        for (const auto& [sw, c] : schur_weights(lam, n)) {
            auto jt = weights.find(sw);
            long next = (jt == weights.end() ? 0 : jt->second) - mult * c;
            require(next >= 0, error_code, "negative multiplicity during Schur expansion");
            if (next == 0) {
                if (jt != weights.end()) weights.erase(jt);
            } else {
                weights[sw] = next;
            }
        }
    }
    return ch;
}

// Product of elementary symmetric characters e_{k_1} ... e_{k_m} expanded in
// the Schur basis by the iterated Pieri rule; e_k = 0 for k > n kills the term.
inline GlnCharacter elementary_product(const std::vector<long>& ks, int n) {
    GlnCharacter ch;
    ch.n = n;
    ch.schur_mult[Partition()] = 1;
    for (long k : ks) {
        if (k < 0 || k > n) return GlnCharacter{n, {}};
        GlnCharacter next;
        next.n = n;
        for (const auto& [lam, m] : ch.schur_mult)
            for (const auto& mu : pieri_e(lam, k, n)) next.schur_mult[mu] += m;
        ch = std::move(next);
    }
    return ch;
}

} // namespace drinfeld
