#pragma once

#include <random>
#include <vector>

#include "drinfeld/yangian.hpp"

namespace drinfeld {

// Submodule generated by the given vectors: closure under all stored
// generator matrices (complete for the whole algebra by the recurrence
// certificate). The closure is certified exactly.
inline Subspace spin(const YangianModule& y, const std::vector<Vec>& seeds) {
    std::vector<const Mat*> gens;
    for (int a = 1; a <= y.n; ++a)
        for (int b = 1; b <= y.n; ++b)
            for (long d = 0; d <= y.D; ++d) gens.push_back(&y.t(a, b, d));
    for (int attempt = 0; attempt < 2; ++attempt) {
        RowSpace rs(y.dim, attempt == 0);
        std::vector<Vec> frontier;
        for (const auto& v : seeds)
            if (rs.insert(v)) frontier.push_back(v);
        while (!frontier.empty()) {
            std::vector<Vec> next;
            for (const auto& v : frontier)
                for (const Mat* g : gens) {
                    Vec w = g->apply(v);
                    if (rs.insert(w)) next.push_back(std::move(w));
                }
            frontier = std::move(next);
        }
        // exact closure certificate: the seeds lie in the span and the
        // generators map the echelon basis into it
        bool ok = true;
        for (const auto& v : seeds) ok = ok && rs.contains(v);
        for (const auto& b : rs.rows())
            for (const Mat* g : gens) {
                if (!ok) break;
                ok = rs.contains(g->apply(b));
            }
        if (ok) {
            Subspace s;
            s.basis = rs.rows();
            return s;
        }
        check_theorem(attempt == 0, "SpinClosure", "exact spin failed its own certificate");
    }
    throw theorem_violation("SpinClosure", "unreachable");
}

// Restriction of the module to an invariant subspace (basis must be echelon).
inline YangianModule submodule(const YangianModule& y, const Subspace& s) {
    RowSpace rs = s.rowspace();
    YangianModule out;
    out.n = y.n;
    out.dim = s.dim();
    out.D = y.D;
    out.cert = y.cert;
    for (int a = 1; a <= y.n; ++a)
        for (int b = 1; b <= y.n; ++b)
            for (long d = 0; d <= y.D; ++d) out.T.push_back(restrict_to(y.t(a, b, d), s, rs));
    validate_certificate(out);
    return out;
}

// Quotient of the module by an invariant subspace.
inline YangianModule quotient_module(const YangianModule& y, const Subspace& s) {
    RowSpace rs = s.rowspace();
    std::vector<bool> is_piv(y.dim, false);
    for (size_t p : rs.pivots()) is_piv[p] = true;
    std::vector<size_t> free_coords;
    for (size_t j = 0; j < y.dim; ++j)
        if (!is_piv[j]) free_coords.push_back(j);
    auto project = [&](Vec v) {
        rs.reduce_exact(v);
        Vec out(free_coords.size());
        for (size_t t = 0; t < free_coords.size(); ++t) out[t] = v[free_coords[t]];
        return out;
    };
    YangianModule out;
    out.n = y.n;
    out.dim = free_coords.size();
    out.D = y.D;
    out.cert = y.cert;
    for (int a = 1; a <= y.n; ++a)
        for (int b = 1; b <= y.n; ++b)
            for (long d = 0; d <= y.D; ++d) {
                const Mat& g = y.t(a, b, d);
                Mat q(out.dim, out.dim);
                for (size_t c = 0; c < out.dim; ++c) {
                    Vec col = project(g.col(free_coords[c]));
                    for (size_t r = 0; r < out.dim; ++r) q(r, c) = col[r];
                }
                out.T.push_back(std::move(q));
            }
    validate_certificate(out);
    return out;
}

struct CompositionFactor {
    DrinfeldPolys polys;
    size_t dim = 0;
    long multiplicity = 0;
};

struct CompositionOptions {
    size_t bound = 64;    // refuse larger modules
    unsigned seed = 1;    // drives the secondary meataxe probe only
    bool meataxe_probe = true;
    size_t meataxe_dim_cap = 24;
};

namespace detail {

// Secondary randomized probe in the classical meataxe style: kernels of
// random algebra elements are spun on both the module and its transpose.
// It can only ever find submodules; on a certified-simple module finding one
// is a contradiction.
inline void meataxe_probe_simple(const YangianModule& y, unsigned seed) {
    if (y.dim <= 1) return;
    std::vector<const Mat*> gens;
    for (int a = 1; a <= y.n; ++a)
        for (int b = 1; b <= y.n; ++b)
            for (long d = 0; d <= y.D; ++d) gens.push_back(&y.t(a, b, d));
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    YangianModule yt; // transpose module (right action): same spin machinery
    yt.n = y.n;
    yt.dim = y.dim;
    yt.D = y.D;
    yt.cert = y.cert;
    for (const Mat* g : gens) yt.T.push_back(g->transpose());
    for (int trial = 0; trial < 4; ++trial) {
        Mat theta(y.dim, y.dim);
        for (int parts = 0; parts < 3; ++parts) {
            int c = coef(rng);
            if (c == 0) continue;
            theta = theta + Rational(c) * (*gens[pick(rng)] * *gens[pick(rng)]);
        }
        std::vector<Vec> ker = kernel(theta);
        if (ker.empty() || ker.size() == y.dim) continue;
        Subspace s = spin(y, {ker[0]});
        check_theorem(s.dim() == y.dim, "MeataxeContradiction",
                      "probe found a proper submodule in a certified-simple module");
        std::vector<Vec> kert = kernel(theta.transpose());
        if (!kert.empty() && kert.size() != y.dim) {
            Subspace st = spin(yt, {kert[0]});
            check_theorem(st.dim() == y.dim, "MeataxeContradiction",
                          "dual probe found a proper submodule in a certified-simple module");
        }
    }
}

} // namespace detail

// Full Jordan-Hoelder multiset. Proper submodules are found by spinning
// joint eigenvectors of the t_ii family inside the singular space; when a
// joint eigenspace has dimension > 1 any of its lines generates properly,
// and when all spins fill the module, every proper submodule would have to
// contain one of the (one-dimensional) eigen-lines, so the module is simple.
// The randomized meataxe probe then double-checks small certified-simple
// factors; the factor labels are the Drinfeld polynomials of their unique
// highest weight.
inline std::vector<CompositionFactor> composition_factors(const YangianModule& y,
                                                          const CompositionOptions& opts = {}) {
    require(y.dim <= opts.bound, "OracleBoundExceeded",
            "module exceeds the composition oracle bound");
    std::map<DrinfeldPolys, CompositionFactor> acc;
    std::vector<YangianModule> stack;
    if (y.dim > 0) stack.push_back(y);
    while (!stack.empty()) {
        YangianModule cur = std::move(stack.back());
        stack.pop_back();
        if (cur.dim == 0) continue;

        Subspace sing = singular_space(cur);
        check_theorem(sing.dim() > 0, "CompositionSeries",
                      "nonzero module with empty singular space");
        std::vector<Mat> family;
        for (int i = 1; i <= cur.n; ++i)
            for (long d = 0; d <= cur.D; ++d) family.push_back(cur.t(i, i, d));
        auto pieces = joint_eigenspaces(family, sing, true, "InconclusiveIrreducibility");

        bool split = false;
        bool all_lines = true;
        for (const auto& piece : pieces) {
            // true joint eigenvectors inside the generalized piece
            RowSpace rs = piece.space.rowspace();
            size_t k = piece.space.dim();
            Mat stacked(family.size() * k, k);
            for (size_t o = 0; o < family.size(); ++o) {
                Mat r = restrict_to(family[o], piece.space, rs);
                for (size_t i = 0; i < k; ++i) {
                    r(i, i) -= piece.eigenvalues[o];
                    for (size_t j = 0; j < k; ++j) stacked(o * k + i, j) = r(i, j);
                }
            }
            std::vector<Vec> lines = kernel(stacked, false);
            check_theorem(!lines.empty(), "CompositionSeries",
                          "generalized eigenspace without an eigenvector");
            if (lines.size() > 1) all_lines = false;
            // lift the first eigenvector and spin it
            Vec v(cur.dim, Rational(0));
            for (size_t i = 0; i < k; ++i) {
                if (lines[0][i].is_zero()) continue;
                for (size_t j = 0; j < cur.dim; ++j) v[j] += lines[0][i] * piece.space.basis[i][j];
            }
            Subspace sub = spin(cur, {v});
            if (sub.dim() < cur.dim) {
                stack.push_back(submodule(cur, sub));
                stack.push_back(quotient_module(cur, sub));
                split = true;
                break;
            }
            check_theorem(lines.size() == 1, "CompositionSeries",
                          "a line of a fat eigenspace spun to the whole module");
        }
        if (split) continue;
        check_theorem(all_lines, "CompositionSeries",
                      "unreachable: fat eigenspace without a proper spin");

        // certified simple
        if (opts.meataxe_probe && cur.dim <= opts.meataxe_dim_cap)
            detail::meataxe_probe_simple(cur, opts.seed);
        auto hws = highest_weight_data(cur);
        check_theorem(hws.size() == 1, "CompositionSeries",
                      "simple module with more than one highest-weight line");
        DrinfeldPolys q = drinfeld_polys(hws[0]);
        auto it = acc.find(q);
        if (it == acc.end()) {
            acc.emplace(q, CompositionFactor{q, cur.dim, 1});
        } else {
            check_theorem(it->second.dim == cur.dim, "CompositionSeries",
                          "equal Drinfeld polynomials with different dimensions");
            it->second.multiplicity += 1;
        }
    }
    std::vector<CompositionFactor> out;
    for (auto& [q, f] : acc) out.push_back(f);
    return out;
}

} // namespace drinfeld
