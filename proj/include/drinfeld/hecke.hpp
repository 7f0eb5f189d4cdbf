#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drinfeld/linalg.hpp"
#include "drinfeld/weight.hpp"
#include "drinfeld/wmodule.hpp"

namespace drinfeld {

// Finite-dimensional module of the degenerate affine Hecke algebra H_ell:
// matrices of s_1..s_{ell-1} and of the commuting family eps_1..eps_ell.
struct HeckeModule {
    long ell = 0;
    size_t dim = 0;
    WModule w_action;
    std::vector<Mat> eps_action;
    std::optional<Vec> distinguished;
    std::optional<std::pair<Weight, Weight>> std_params; // (lambda, mu) for standard modules
    std::optional<std::pair<Rational, Rational>> interval; // [a, b] for one-dimensional modules

    const Mat& s(int i) const { return w_action.gen(i); }
    const Mat& eps(int i) const { return eps_action[static_cast<size_t>(i - 1)]; }
    Mat w_matrix(const Permutation& w) const { return w_action.matrix_of(w); }
};

// Validated parameter block of a standard module: dominant lambda, mu with
// nonnegative integer segment lengths summing to ell.
struct StandardParams {
    struct Segment {
        Rational start;  // mu_i
        Rational end;    // lambda_i - 1
        long length = 0; // lambda_i - mu_i
    };
    Weight lambda, mu;
    std::vector<Segment> segments;
    long ell = 0;
};

inline StandardParams standard_params(const Weight& lambda, const Weight& mu) {
    require(lambda.rank() == mu.rank(), "RankMismatch", "parameter ranks differ");
    require(lambda.is_dominant(), "NotDominant", "lambda must be dominant");
    StandardParams p;
    p.lambda = lambda;
    p.mu = mu;
    for (int i = 1; i <= lambda.rank(); ++i) {
        Rational len = lambda[i] - mu[i];
        require(len.is_integer() && len.sign() >= 0, "NotAdmissible",
                "mu must lie in S(lambda; ell)");
        long l = *len.as_int();
        p.segments.push_back({mu[i], lambda[i] - Rational(1), l});
        p.ell += l;
    }
    return p;
}

// One-dimensional module C_[a,b]: s_i act by +1 and eps_i by a+i-1.
inline HeckeModule one_dim(const Rational& a, const Rational& b) {
    Rational len = b - a + Rational(1);
    require(len.is_integer() && len.sign() >= 0, "BadInterval",
            "b - a + 1 must be a nonnegative integer");
    long ell = *len.as_int();
    HeckeModule m;
    m.ell = ell;
    m.dim = 1;
    m.w_action = trivial_wmodule(ell);
    for (long i = 1; i <= ell; ++i) {
        Mat e(1, 1);
        e(0, 0) = a + Rational(i - 1);
        m.eps_action.push_back(std::move(e));
    }
    m.distinguished = Vec{Rational(1)};
    m.interval = std::make_pair(a, b);
    return m;
}

namespace detail {

// Multi-index helpers for the inner tensor space of an induction.
inline Mat lift_factor(const std::vector<size_t>& dims, size_t k, const Mat& a) {
    Mat out = Mat::identity(1);
    for (size_t i = 0; i < dims.size(); ++i)
        out = Mat::kronecker(out, i == k ? a : Mat::identity(dims[i]));
    return out;
}

} // namespace detail

// Induction H_ell (x)_{H_{c_1} x ... x H_{c_k}} (M_1 (x) ... (x) M_k) on the
// basis of minimal-length coset representatives of W_ell / (W_{c_1} x ...).
//
// The W-action permutes cosets with an inner twist; the eps-action moves each
// eps through a reduced word of the representative one simple reflection at a
// time via eps_j s_i = s_i eps_{s_i(j)} - alpha_i(eps_j), terminating in the
// inner module.
inline HeckeModule induce(const std::vector<HeckeModule>& factors) {
    long ell = 0;
    for (const auto& f : factors) ell += f.ell;
    int elli = static_cast<int>(ell);

    // blocks of positions for factors with ell_k >= 1
    struct Block {
        int start; // first position (1-based)
        int len;
        size_t factor;
    };
    std::vector<Block> blocks;
    std::vector<size_t> inner_dims;
    {
        int at = 1;
        for (size_t k = 0; k < factors.size(); ++k) {
            if (factors[k].ell >= 1)
                blocks.push_back({at, static_cast<int>(factors[k].ell), k});
            at += static_cast<int>(factors[k].ell);
            inner_dims.push_back(factors[k].dim);
        }
    }
    size_t dim_v = 1;
    for (size_t d : inner_dims) dim_v *= d;
    std::vector<int> block_of(static_cast<size_t>(ell) + 1, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int p = blocks[b].start; p < blocks[b].start + blocks[b].len; ++p)
            block_of[static_cast<size_t>(p)] = static_cast<int>(b);

    // minimal coset representatives: increasing within each block (lex order)
    std::vector<Permutation> reps;
    std::map<Permutation, size_t> rep_index;
    for (const auto& w : all_permutations(elli)) {
        bool ok = true;
        for (const auto& b : blocks)
            for (int p = b.start; ok && p + 1 < b.start + b.len; ++p)
                if (w(p) > w(p + 1)) ok = false;
        if (ok) {
            rep_index[w] = reps.size();
            reps.push_back(w);
        }
    }

    HeckeModule out;
    out.ell = ell;
    out.dim = reps.size() * dim_v;
    out.w_action.ell = ell;
    out.w_action.dim = out.dim;

    auto basis_index = [&](size_t x, size_t v) { return x * dim_v + v; };
    // straighten y W_J: minimal representative and the inner part u = x'^{-1} y
    auto straighten = [&](const Permutation& y) {
        std::vector<int> img = y.one_line();
        for (const auto& b : blocks)
            std::sort(img.begin() + (b.start - 1), img.begin() + (b.start - 1 + b.len));
        Permutation xp(img);
        Permutation u = xp.inverse() * y;
        return std::make_pair(rep_index.at(xp), u);
    };
    // inner action of u in W_J on the tensor space
    auto inner_matrix = [&](const Permutation& u) {
        Mat m = Mat::identity(1);
        for (size_t k = 0; k < factors.size(); ++k) {
            const auto& f = factors[k];
            if (f.ell < 1) {
                m = Mat::kronecker(m, Mat::identity(f.dim));
                continue;
            }
            // local permutation of this factor's block
            int start = 0;
            {
                long acc = 0;
                for (size_t j = 0; j < k; ++j) acc += factors[j].ell;
                start = static_cast<int>(acc) + 1;
            }
            std::vector<int> local(static_cast<size_t>(f.ell));
            for (int p = 0; p < f.ell; ++p) {
                int image = u(start + p);
                check_theorem(image >= start && image < start + f.ell, "BadStraightening",
                              "inner part leaves its block");
                local[static_cast<size_t>(p)] = image - start + 1;
            }
            m = Mat::kronecker(m, f.w_action.matrix_of(Permutation(local)));
        }
        return m;
    };

    // W-action
    for (int i = 1; i < elli; ++i) {
        Mat g(out.dim, out.dim);
        Permutation si = Permutation::simple(elli, i);
        for (size_t x = 0; x < reps.size(); ++x) {
            auto [xp, u] = straighten(si * reps[x]);
            Mat um = inner_matrix(u);
            for (size_t v = 0; v < dim_v; ++v)
                for (size_t w = 0; w < dim_v; ++w)
                    if (!um(w, v).is_zero()) g(basis_index(xp, w), basis_index(x, v)) = um(w, v);
        }
        out.w_action.gens.push_back(std::move(g));
    }

    // inner eps matrices lifted to the tensor space, one per position
    std::vector<Mat> inner_eps(static_cast<size_t>(ell) + 1, Mat(0, 0));
    for (const auto& b : blocks) {
        for (int p = 0; p < b.len; ++p) {
            const HeckeModule& f = factors[b.factor];
            inner_eps[static_cast<size_t>(b.start + p)] =
                detail::lift_factor(inner_dims, b.factor, f.eps(p + 1));
        }
    }

    // eps-action, column by column
    std::vector<Mat> eps_out(static_cast<size_t>(ell), Mat(out.dim, out.dim));
    for (size_t x = 0; x < reps.size(); ++x) {
        std::vector<int> word = reps[x].reduced_word();
        size_t m = word.size();
        for (size_t v = 0; v < dim_v; ++v) {
            // straight[t] = (s_{i_t} ... s_{i_m}) (x) e_v as a module vector
            std::vector<Vec> straight(m + 2, Vec(out.dim, Rational(0)));
            straight[m + 1][basis_index(rep_index.at(Permutation::identity(elli)), v)] =
                Rational(1);
            for (size_t t = m; t >= 1; --t) {
                straight[t] = out.w_action.gen(word[t - 1]).apply(straight[t + 1]);
                if (t == 1) break;
            }
            for (long k = 1; k <= ell; ++k) {
                // path of indices: j_1 = k, j_{t+1} = s_{i_t}(j_t)
                std::vector<long> jpath(m + 2);
                jpath[1] = k;
                for (size_t t = 1; t <= m; ++t) {
                    long j = jpath[t];
                    int it = word[t - 1];
                    jpath[t + 1] = (j == it) ? it + 1 : (j == it + 1 ? it : j);
                }
                // E_{m+1} = eps_{j_{m+1}} (x) e_v at the identity representative
                Vec e(out.dim, Rational(0));
                {
                    const Mat& em = inner_eps[static_cast<size_t>(jpath[m + 1])];
                    size_t e_rep = rep_index.at(Permutation::identity(elli));
                    for (size_t w = 0; w < dim_v; ++w)
                        if (!em(w, v).is_zero()) e[basis_index(e_rep, w)] = em(w, v);
                }
                for (size_t t = m; t >= 1; --t) {
                    int it = word[t - 1];
                    long j = jpath[t];
                    Vec next = out.w_action.gen(it).apply(e);
                    Rational alpha = Rational((j == it ? 1 : 0) - (j == it + 1 ? 1 : 0));
                    if (!alpha.is_zero())
                        for (size_t q = 0; q < out.dim; ++q)
                            next[q] -= alpha * straight[t + 1][q];
                    e = std::move(next);
                    if (t == 1) break;
                }
                for (size_t q = 0; q < out.dim; ++q)
                    if (!e[q].is_zero()) eps_out[static_cast<size_t>(k - 1)](q, basis_index(x, v)) = e[q];
            }
        }
    }
    out.eps_action = std::move(eps_out);

    // distinguished vector: identity rep tensor the factors' distinguished vectors
    bool have_dist = true;
    for (const auto& f : factors)
        if (!f.distinguished) have_dist = false;
    if (have_dist) {
        Vec inner(dim_v, Rational(0));
        for (size_t flat = 0; flat < dim_v; ++flat) {
            size_t rest = flat;
            Rational coef(1);
            for (size_t k = factors.size(); k-- > 0;) {
                size_t d = inner_dims[k];
                size_t comp = rest % d;
                rest /= d;
                coef *= (*factors[k].distinguished)[comp];
            }
            inner[flat] = coef;
        }
        Vec dist(out.dim, Rational(0));
        size_t e_rep = rep_index.at(Permutation::identity(elli));
        for (size_t v = 0; v < dim_v; ++v) dist[basis_index(e_rep, v)] = inner[v];
        out.distinguished = std::move(dist);
    }
    return out;
}

// Outer tensor induction H_{a+b} (x)_{H_a (x) H_b} (M1 (x) M2).
inline HeckeModule induce_outer(const HeckeModule& m1, const HeckeModule& m2) {
    return induce({m1, m2});
}

// Standard module K(lambda, mu), induced from the one-dimensional modules
// C_[mu_i, lambda_i - 1].
inline HeckeModule standard_module(const Weight& lambda, const Weight& mu) {
    StandardParams p = standard_params(lambda, mu);
    std::vector<HeckeModule> factors;
    for (const auto& seg : p.segments) factors.push_back(one_dim(seg.start, seg.end));
    HeckeModule out = induce(factors);
    out.std_params = std::make_pair(lambda, mu);
    // dim = ell! / prod(ell_i!)
    Rational expect = factorial(p.ell);
    for (const auto& seg : p.segments) expect /= factorial(seg.length);
    check_theorem(Rational(static_cast<long>(out.dim)) == expect, "StandardDim",
                  "standard module dimension mismatch");
    return out;
}

inline HeckeModule direct_sum(const HeckeModule& a, const HeckeModule& b) {
    require(a.ell == b.ell, "SizeMismatch", "direct sum across different H_ell");
    HeckeModule m;
    m.ell = a.ell;
    m.dim = a.dim + b.dim;
    m.w_action = direct_sum(a.w_action, b.w_action);
    for (size_t g = 0; g < a.eps_action.size(); ++g) {
        Mat e(m.dim, m.dim);
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) e(i, j) = a.eps_action[g](i, j);
        for (size_t i = 0; i < b.dim; ++i)
            for (size_t j = 0; j < b.dim; ++j) e(a.dim + i, a.dim + j) = b.eps_action[g](i, j);
        m.eps_action.push_back(std::move(e));
    }
    return m;
}

// y_i = eps_i - sum_{j<i} s_{ji}; the relations w y_i = y_{w(i)} w and
// [y_i, y_j] = -(y_i - y_j) s_{ij} are verified before returning.
inline std::vector<Mat> y_operators(const HeckeModule& m) {
    int elli = static_cast<int>(m.ell);
    std::vector<Mat> ys;
    for (int i = 1; i <= elli; ++i) {
        Mat y = m.eps(i);
        for (int j = 1; j < i; ++j)
            y = y - m.w_matrix(Permutation::transposition(elli, j, i));
        ys.push_back(std::move(y));
    }
    for (int k = 1; k < elli; ++k) {
        Permutation sk = Permutation::simple(elli, k);
        const Mat& skm = m.s(k);
        for (int i = 1; i <= elli; ++i) {
            const Mat& lhs = ys[static_cast<size_t>(i - 1)];
            const Mat& rhs = ys[static_cast<size_t>(sk(i) - 1)];
            check_theorem(skm * lhs == rhs * skm, "RelationViolation",
                          "w y_i = y_{w(i)} w fails at s_" + std::to_string(k) + ", y_" +
                              std::to_string(i));
        }
    }
    for (int i = 1; i <= elli; ++i)
        for (int j = 1; j <= elli; ++j) {
            if (i == j) continue;
            Mat lhs = commutator(ys[static_cast<size_t>(i - 1)], ys[static_cast<size_t>(j - 1)]);
            Mat rhs = Rational(-1) * ((ys[static_cast<size_t>(i - 1)] - ys[static_cast<size_t>(j - 1)]) *
                                      m.w_matrix(Permutation::transposition(elli, i, j)));
            check_theorem(lhs == rhs, "RelationViolation",
                          "[y_i, y_j] = -(y_i - y_j) s_ij fails at i=" + std::to_string(i) +
                              ", j=" + std::to_string(j));
        }
    return ys;
}

struct HeckeReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(const std::string& msg) {
        ok = false;
        violations.push_back(msg);
    }
};

// Checks the defining relations (Coxeter relations, commuting eps family,
// cross relation s_i eps_j - eps_{s_i(j)} s_i = -alpha_i(eps_j)) plus the
// y-relations; reports rather than throws.
inline HeckeReport verify_hecke(const HeckeModule& m) {
    HeckeReport rep;
    std::string why;
    if (!m.w_action.is_representation(&why)) rep.fail("Coxeter relations: " + why);
    int elli = static_cast<int>(m.ell);
    if (m.eps_action.size() != static_cast<size_t>(m.ell)) {
        rep.fail("eps family has wrong arity");
        return rep;
    }
    for (int i = 1; i <= elli; ++i)
        for (int j = i + 1; j <= elli; ++j)
            if (m.eps(i) * m.eps(j) != m.eps(j) * m.eps(i))
                rep.fail("commutativity [eps_" + std::to_string(i) + ", eps_" +
                         std::to_string(j) + "] != 0");
    for (int i = 1; i < elli; ++i) {
        Permutation si = Permutation::simple(elli, i);
        for (int j = 1; j <= elli; ++j) {
            Rational alpha = Rational((j == i ? 1 : 0) - (j == i + 1 ? 1 : 0));
            Mat lhs = m.s(i) * m.eps(j) - m.eps(si(j)) * m.s(i);
            Mat rhs = (-alpha) * Mat::identity(m.dim);
            if (lhs != rhs)
                rep.fail("cross relation s_i eps_j - eps_{s_i(j)} s_i = -alpha_i(eps_j) fails at s_" +
                         std::to_string(i) + ", eps_" + std::to_string(j));
        }
    }
    if (!rep.ok) return rep;
    try {
        y_operators(m);
    } catch (const error& e) {
        rep.fail(e.what());
    }
    return rep;
}

// Unique maximal proper submodule of a standard module: the largest
// H-invariant subspace of the sum of the W-isotypic components of type
// different from nu_{lambda,mu}, by iterating X <- X cap g^{-1} X.
inline HeckeModule simple_quotient(const HeckeModule& k) {
    require(k.std_params.has_value(), "NotAStandardModule",
            "simple quotient needs standard module parameters");
    const auto& [lambda, mu] = *k.std_params;
    require(lambda.is_dominant(), "NotDominant", "lambda must be dominant");
    Partition nu = segment_partition(lambda, mu);

    // X_0 = image of (I - P_nu)
    Mat comp = Mat::identity(k.dim) - isotypic_projector(k.w_action, nu);
    std::vector<Mat> gens;
    for (const auto& g : k.w_action.gens) gens.push_back(g);
    for (const auto& g : k.eps_action) gens.push_back(g);

    std::vector<Vec> basis;
    {
        RowSpace rs(k.dim);
        for (size_t j = 0; j < k.dim; ++j) rs.insert_exact(comp.col(j));
        basis = rs.rows();
    }
    // iterate X <- {v in X : g v in X} until stable
    for (;;) {
        size_t before = basis.size();
        for (const auto& g : gens) {
            if (basis.empty()) break;
            Mat ann = annihilator(basis, k.dim);
            Mat stacked(ann.rows() * 2, k.dim);
            Mat ag = ann * g;
            for (size_t i = 0; i < ann.rows(); ++i)
                for (size_t j = 0; j < k.dim; ++j) {
                    stacked(i, j) = ann(i, j);
                    stacked(ann.rows() + i, j) = ag(i, j);
                }
            basis = kernel(stacked, false);
        }
        if (basis.size() == before) break;
    }

    // quotient by N = span(basis)
    RowSpace n(k.dim);
    for (const auto& v : basis) n.insert_exact(v);
    std::vector<bool> is_piv(k.dim, false);
    for (size_t p : n.pivots()) is_piv[p] = true;
    std::vector<size_t> free_coords;
    for (size_t j = 0; j < k.dim; ++j)
        if (!is_piv[j]) free_coords.push_back(j);
    size_t qdim = free_coords.size();
    auto project = [&](Vec v) {
        n.reduce_exact(v);
        Vec out(qdim);
        for (size_t t = 0; t < qdim; ++t) out[t] = v[free_coords[t]];
        return out;
    };
    auto project_mat = [&](const Mat& g) {
        Mat out(qdim, qdim);
        for (size_t t = 0; t < qdim; ++t) {
            Vec col = project(g.col(free_coords[t]));
            for (size_t rr = 0; rr < qdim; ++rr) out(rr, t) = col[rr];
        }
        return out;
    };

    HeckeModule q;
    q.ell = k.ell;
    q.dim = qdim;
    q.w_action.ell = k.ell;
    q.w_action.dim = qdim;
    for (const auto& g : k.w_action.gens) q.w_action.gens.push_back(project_mat(g));
    for (const auto& g : k.eps_action) q.eps_action.push_back(project_mat(g));
    q.std_params = k.std_params;
    if (k.distinguished) {
        Vec d = project(*k.distinguished);
        check_theorem(!is_zero_vec(d), "SimpleQuotient",
                      "distinguished vector died in the quotient");
        q.distinguished = std::move(d);
    }
    check_theorem(decompose(q.w_action).multiplicity(nu) == 1, "SimpleQuotient",
                  "U(nu_{lambda,mu}) multiplicity in the quotient is not one");
    return q;
}

// scalar of the central element eps_1 + ... + eps_ell on K(lambda, mu)
inline Rational central_eps_sum(const Weight& lambda, const Weight& mu) {
    Rational s(0);
    for (int i = 1; i <= lambda.rank(); ++i) {
        Rational len = lambda[i] - mu[i];
        // mu_i + (mu_i + 1) + ... + (lambda_i - 1)
        s += len * mu[i] + len * (len - Rational(1)) / Rational(2);
    }
    return s;
}

} // namespace drinfeld
