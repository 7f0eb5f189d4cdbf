#pragma once

#include <random>
#include <vector>

#include "drinfeld/coinvariant.hpp"
#include "drinfeld/hecke.hpp"
#include "drinfeld/yangian.hpp"

namespace drinfeld {

// Image of a Hecke module under the functor M -> (M (x) (C^n)^ell)/sum Im(s_i+1),
// with the Yangian generator t_ab^(d) acting as sum_i y_i^d (x) E_ab-on-slot-i.
// The stored degree bound is deg lcm(minpoly(y_1),...,minpoly(y_ell)); beyond
// it every generator matrix satisfies the recurrence of that polynomial, which
// is kept as the certificate.
struct DrinfeldImage {
    YangianModule module;
    CoinvariantSpace space;
    std::vector<Mat> y_powers_flat; // y_i^d, index i * (D+1) + d
    long D = 0;

    DrinfeldImage(const HeckeModule& m, int n) : space(m, n) {
        long ell = m.ell;
        std::vector<Mat> ys = ell > 0 ? y_operators(m) : std::vector<Mat>{};
        UniPoly lcm = UniPoly::one();
        for (const auto& y : ys) lcm = UniPoly::lcm(lcm, minimal_polynomial(y));
        D = lcm.degree();
        module.n = n;
        module.dim = space.basis_dim();
        module.D = D;
        module.cert.assign(static_cast<size_t>(D), Rational(0));
        for (long j = 0; j < D; ++j) module.cert[static_cast<size_t>(j)] = -lcm.coeff(j);

        // powers of the y operators up to D
        for (long i = 0; i < ell; ++i) {
            Mat p = Mat::identity(m.dim);
            for (long d = 0; d <= D; ++d) {
                y_powers_flat.push_back(p);
                if (d < D) p = p * ys[static_cast<size_t>(i)];
            }
        }

        module.T.assign(static_cast<size_t>(n) * static_cast<size_t>(n) *
                            static_cast<size_t>(D + 1),
                        Mat(module.dim, module.dim));
        if (module.dim == 0) {
            validate_certificate(module);
            return;
        }
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (long d = 0; d <= D; ++d) {
                    Mat& out = module.T[module.tindex(a, b, d)];
                    for (size_t col = 0; col < module.dim; ++col) {
                        Vec w = op_on_basis(a, b, d, space.section_coords()[col]);
                        Vec pw = space.project(w);
                        for (size_t r = 0; r < module.dim; ++r) out(r, col) = pw[r];
                    }
                }
        validate_certificate(module);
    }

    // (sum_i y_i^d (x) tau_i(E_ab)) e_idx as a dense ambient vector
    Vec op_on_basis(int a, int b, long d, size_t idx) const {
        Vec out(space.ambient_dim(), Rational(0));
        size_t m0 = space.module_part(idx);
        std::vector<int> t = space.tuple_of(idx);
        for (long i = 1; i <= space.ell(); ++i) {
            if (t[static_cast<size_t>(i - 1)] != b) continue;
            std::vector<int> timg = t;
            timg[static_cast<size_t>(i - 1)] = a;
            const Mat& yp = y_powers_flat[static_cast<size_t>((i - 1) * (D + 1) + d)];
            for (size_t m1 = 0; m1 < space.module_dim(); ++m1) {
                const Rational& v = yp(m1, m0);
                if (!v.is_zero()) out[space.index(m1, timg)] += v;
            }
        }
        return out;
    }

    // Exact well-definedness residue: projection . op . (s_i + 1) = 0 for
    // every generator column of the denominator subspace and every stored op.
    bool well_defined_exact() const {
        for (int i = 1; i < static_cast<int>(space.ell()); ++i)
            for (size_t j = 0; j < space.ambient_dim(); ++j) {
                auto col = space.s_column(i, j);
                col.emplace_back(j, Rational(1));
                // op applied to the sparse kernel generator, then projected
                for (int a = 1; a <= module.n; ++a)
                    for (int b = 1; b <= module.n; ++b)
                        for (long d = 0; d <= D; ++d) {
                            Vec w(space.ambient_dim(), Rational(0));
                            for (const auto& [idx, val] : col) {
                                Vec part = op_on_basis(a, b, d, idx);
                                for (size_t q = 0; q < w.size(); ++q)
                                    if (!part[q].is_zero()) w[q] += val * part[q];
                            }
                            if (!is_zero_vec(space.project(w))) return false;
                        }
            }
        return true;
    }

    // Seeded spot check of the same residue on a few random kernel vectors.
    bool well_defined_spot_check(unsigned seed, int trials = 3) const {
        if (space.ell() <= 1) return true;
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> coef(-2, 2);
        std::uniform_int_distribution<size_t> pick(0, space.ambient_dim() - 1);
        std::uniform_int_distribution<int> gen(1, static_cast<int>(space.ell()) - 1);
        for (int trial = 0; trial < trials; ++trial) {
            // random vector in Im(s_i + 1)
            int i = gen(rng);
            Vec v(space.ambient_dim(), Rational(0));
            for (int parts = 0; parts < 4; ++parts) {
                size_t j = pick(rng);
                int c = coef(rng);
                if (c == 0) continue;
                auto col = space.s_column(i, j);
                col.emplace_back(j, Rational(1));
                for (const auto& [idx, val] : col) v[idx] += Rational(c) * val;
            }
            for (int a = 1; a <= module.n; ++a)
                for (int b = 1; b <= module.n; ++b)
                    for (long d = 0; d <= D; ++d) {
                        Vec w(space.ambient_dim(), Rational(0));
                        for (size_t q = 0; q < v.size(); ++q) {
                            if (v[q].is_zero()) continue;
                            Vec part = op_on_basis(a, b, d, q);
                            for (size_t p = 0; p < w.size(); ++p)
                                if (!part[p].is_zero()) w[p] += v[q] * part[p];
                        }
                        if (!is_zero_vec(space.project(w))) return false;
                    }
        }
        return true;
    }
};

inline YangianModule drinfeld_image(const HeckeModule& m, int n) {
    require(n >= 1, "BadRank", "n must be positive");
    return DrinfeldImage(m, n).module;
}

// Predicted gl_n decomposition: transpose the W-isotypic decomposition of M
// and keep the partitions with first part <= n. Computed independently from
// the actual weight multiset of the image; a mismatch is a bug, not input.
inline GlnCharacter gln_decomposition(const HeckeModule& m, int n) {
    IsotypicDecomposition dec = decompose(m.w_action);
    GlnCharacter predicted;
    predicted.n = n;
    for (const auto& [nu, mult] : dec.multiplicities) {
        if (nu.part(0) > n) continue;
        predicted.schur_mult[nu.transpose()] += mult;
    }
    GlnCharacter actual = gln_character(drinfeld_image(m, n));
    check_theorem(predicted == actual, "DecompositionMismatch",
                  "transposed W-decomposition disagrees with the image character");
    return predicted;
}

struct TensorCompatReport {
    bool ok = true;
    std::vector<std::string> mismatches;
    size_t dim_left = 0, dim_right = 0;
};

// Compares D(M1) (x) D(M2) with D(H (x) (M1 (x) M2)) in dimension, gl_n
// character, and the multiset of highest-weight series.
inline TensorCompatReport verify_tensor_compat(const HeckeModule& m1, const HeckeModule& m2,
                                               int n) {
    TensorCompatReport rep;
    YangianModule left = tensor(drinfeld_image(m1, n), drinfeld_image(m2, n));
    YangianModule right = drinfeld_image(induce_outer(m1, m2), n);
    rep.dim_left = left.dim;
    rep.dim_right = right.dim;
    if (left.dim != right.dim) {
        rep.ok = false;
        rep.mismatches.push_back("dimension");
    }
    if (left.dim == 0 && right.dim == 0) return rep;
    if (rep.ok && gln_character(left) != gln_character(right)) {
        rep.ok = false;
        rep.mismatches.push_back("gl_n character");
    }
    if (rep.ok) {
        auto hl = highest_weight_data(left);
        auto hr = highest_weight_data(right);
        auto zetas = [](const std::vector<HighestWeightData>& hs) {
            std::vector<std::vector<RatFun>> zs;
            for (const auto& h : hs) zs.push_back(h.zeta);
            std::sort(zs.begin(), zs.end());
            return zs;
        };
        if (zetas(hl) != zetas(hr)) {
            rep.ok = false;
            rep.mismatches.push_back("highest-weight series");
        }
    }
    return rep;
}

} // namespace drinfeld
