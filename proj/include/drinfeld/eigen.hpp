#pragma once

#include <vector>

#include "drinfeld/linalg.hpp"

namespace drinfeld {

// A subspace carried as an explicit basis of ambient vectors.
struct Subspace {
    std::vector<Vec> basis;

    size_t dim() const { return basis.size(); }
    size_t ambient() const { return basis.empty() ? 0 : basis[0].size(); }

    RowSpace rowspace() const {
        RowSpace rs(ambient());
        for (const auto& v : basis) rs.insert_exact(v);
        check_theorem(rs.rank() == basis.size(), "SubspaceBasis", "basis is dependent");
        return rs;
    }
};

// Matrix of op restricted to the subspace; throws if the subspace is not
// invariant. The basis must be the echelon basis of rs (coords() coordinates
// are taken relative to the echelon rows), as produced by echelon_subspace.
inline Mat restrict_to(const Mat& op, const Subspace& s, const RowSpace& rs) {
    Mat r(s.dim(), s.dim());
    for (size_t j = 0; j < s.dim(); ++j) {
        Vec w = op.apply(s.basis[j]);
        auto cs = rs.coords(std::move(w));
        check_theorem(cs.has_value(), "NotInvariant", "operator leaves the subspace");
        for (size_t i = 0; i < s.dim(); ++i) r(i, j) = (*cs)[i];
    }
    return r;
}

inline Subspace echelon_subspace(const std::vector<Vec>& span, size_t ambient_dim) {
    RowSpace rs(ambient_dim);
    for (const auto& v : span) rs.insert_exact(v);
    Subspace s;
    s.basis = rs.rows();
    return s;
}

struct JointEigenspace {
    Subspace space;
    RatVec eigenvalues; // one per operator, in the order supplied
};

// Splits the given subspace into joint (generalized) eigenspaces of a
// commuting family. All spectra must be rational; throws `spectrum_code`
// otherwise. With generalized=false every operator must be diagonalizable on
// the space (the kernels of (op - c) must exhaust each piece).
inline std::vector<JointEigenspace> joint_eigenspaces(const std::vector<Mat>& ops,
                                                      const Subspace& start, bool generalized,
                                                      const char* spectrum_code = "NonRationalSpectrum") {
    std::vector<JointEigenspace> current;
    {
        JointEigenspace all;
        all.space = echelon_subspace(start.basis, start.ambient());
        current.push_back(std::move(all));
    }
    if (start.dim() == 0) return {};
    for (const auto& op : ops) {
        std::vector<JointEigenspace> next;
        for (auto& piece : current) {
            if (piece.space.dim() == 0) continue;
            RowSpace rs = piece.space.rowspace();
            Mat r = restrict_to(op, piece.space, rs);
            UniPoly mp = minimal_polynomial(r);
            UniPoly cofactor;
            auto roots = mp.rational_roots(&cofactor);
            require(cofactor.degree() == 0, spectrum_code,
                    "operator has non-rational eigenvalues");
            size_t accounted = 0;
            for (const auto& [c, mult] : roots) {
                Mat shifted = r - c * Mat::identity(r.rows());
                Mat power = generalized ? pow_mat(shifted, mult) : shifted;
                std::vector<Vec> ker = kernel(power, false);
                if (ker.empty()) continue;
                JointEigenspace sub;
                sub.eigenvalues = piece.eigenvalues;
                sub.eigenvalues.push_back(c);
                // lift back to ambient coordinates
                std::vector<Vec> lifted;
                for (const auto& k : ker) {
                    Vec v(start.ambient(), Rational(0));
                    for (size_t i = 0; i < piece.space.dim(); ++i) {
                        if (k[i].is_zero()) continue;
                        for (size_t j = 0; j < start.ambient(); ++j)
                            v[j] += k[i] * piece.space.basis[i][j];
                    }
                    lifted.push_back(std::move(v));
                }
                sub.space = echelon_subspace(lifted, start.ambient());
                accounted += sub.space.dim();
                next.push_back(std::move(sub));
            }
            require(accounted == piece.space.dim(), spectrum_code,
                    generalized ? "generalized eigenspaces do not exhaust the space"
                                : "operator is not diagonalizable on the space");
        }
        current = std::move(next);
    }
    return current;
}

} // namespace drinfeld
