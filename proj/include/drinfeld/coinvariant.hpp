#pragma once

#include <vector>

#include "drinfeld/hecke.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

// Quotient of M (x) (C^n)^{(x) ell} by sum_i Im(s_i + 1), where s_i acts as
// K_i P_i (K on the module factor, P permuting tensor slots).
//
// The quotient equals the image of the sign antisymmetrizer
// A = (1/ell!) sum_w sgn(w) K_w P_w of the combined W-action: A kills every
// Im(s_i + 1), and on any W-module the non-sign isotypic components lie in
// sum_i Im(s_i + 1). A is idempotent, so rank A = tr A, which certifies the
// row-space computation; the containment sum Im(s_i+1) <= ker(projection) is
// checked exactly on every generator column.
class CoinvariantSpace {
public:
    CoinvariantSpace(const HeckeModule& m, int n) : mod_(&m), n_(n) {
        ell_ = m.ell;
        dim_m_ = m.dim;
        pow_n_.assign(static_cast<size_t>(ell_) + 1, 1);
        for (long i = 1; i <= ell_; ++i)
            pow_n_[static_cast<size_t>(i)] = pow_n_[static_cast<size_t>(i - 1)] * static_cast<size_t>(n);
        ambient_ = dim_m_ * pow_n_[static_cast<size_t>(ell_)];
        build();
    }

    size_t ambient_dim() const { return ambient_; }
    size_t basis_dim() const { return basis_dim_; }
    long ell() const { return ell_; }
    int n() const { return n_; }
    size_t module_dim() const { return dim_m_; }

    // ambient index of (module basis m, tensor tuple t), t entries in 1..n
    size_t index(size_t m, const std::vector<int>& t) const {
        size_t code = 0;
        for (int v : t) code = code * static_cast<size_t>(n_) + static_cast<size_t>(v - 1);
        return m * pow_n_[static_cast<size_t>(ell_)] + code;
    }
    std::vector<int> tuple_of(size_t idx) const {
        size_t code = idx % pow_n_[static_cast<size_t>(ell_)];
        std::vector<int> t(static_cast<size_t>(ell_));
        for (long i = ell_; i >= 1; --i) {
            t[static_cast<size_t>(i - 1)] = static_cast<int>(code % static_cast<size_t>(n_)) + 1;
            code /= static_cast<size_t>(n_);
        }
        return t;
    }
    size_t module_part(size_t idx) const { return idx / pow_n_[static_cast<size_t>(ell_)]; }

    // projection applied to an ambient vector
    Vec project(const Vec& v) const {
        Vec out(basis_dim_, Rational(0));
        for (size_t j = 0; j < ambient_; ++j) {
            if (v[j].is_zero()) continue;
            for (size_t r = 0; r < basis_dim_; ++r) {
                const Rational& p = proj_(r, j);
                if (!p.is_zero()) out[r] += p * v[j];
            }
        }
        return out;
    }

    // the section is the coordinate inclusion at the pivot columns
    const std::vector<size_t>& section_coords() const { return pivots_; }
    const Mat& projection() const { return proj_; }

    // combined action of s_i = K_i P_i on a standard basis vector, as a
    // sparse column (index, value) list
    std::vector<std::pair<size_t, Rational>> s_column(int i, size_t idx) const {
        std::vector<std::pair<size_t, Rational>> out;
        size_t m0 = module_part(idx);
        std::vector<int> t = tuple_of(idx);
        std::swap(t[static_cast<size_t>(i - 1)], t[static_cast<size_t>(i)]);
        const Mat& k = mod_->s(i);
        for (size_t m1 = 0; m1 < dim_m_; ++m1)
            if (!k(m1, m0).is_zero()) out.emplace_back(index(m1, t), k(m1, m0));
        return out;
    }

private:
    void build() {
        if (ell_ <= 1) {
            // no reflections: the quotient is the ambient space itself
            basis_dim_ = ambient_;
            proj_ = Mat::identity(ambient_);
            pivots_.resize(ambient_);
            for (size_t i = 0; i < ambient_; ++i) pivots_[i] = i;
            return;
        }
        int elli = static_cast<int>(ell_);
        std::vector<Permutation> group = all_permutations(elli);
        // K_w for the whole group, by BFS over length
        std::map<Permutation, Mat> kmat;
        kmat.emplace(Permutation::identity(elli), Mat::identity(dim_m_));
        std::vector<Permutation> frontier{Permutation::identity(elli)};
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& w : frontier)
                for (int i = 1; i < elli; ++i) {
                    Permutation sw = Permutation::simple(elli, i) * w;
                    if (sw.length() != w.length() + 1 || kmat.count(sw)) continue;
                    kmat.emplace(sw, mod_->s(i) * kmat.at(w));
                    next.push_back(sw);
                }
            frontier = std::move(next);
        }
        Rational order = factorial(ell_);

        // rank of the antisymmetrizer = its trace
        Rational tr(0);
        for (const auto& [w, k] : kmat)
            tr += Rational(w.sign()) * k.trace() *
                  pow_int(Rational(n_), w.cycle_count());
        tr /= order;
        check_theorem(tr.is_integer() && tr.sign() >= 0, "Coinvariant",
                      "antisymmetrizer trace is not a nonnegative integer");
        size_t target = static_cast<size_t>(*tr.as_int());
        basis_dim_ = target;
        if (target == 0) {
            proj_ = Mat(0, ambient_);
            pivots_.clear();
            return;
        }

        // row space of A, inserted row by row until the certified rank
        std::vector<std::pair<Permutation, const Mat*>> elems;
        for (const auto& [w, k] : kmat) elems.emplace_back(w, &k);
        for (int attempt = 0; attempt < 2; ++attempt) {
            RowSpace rs(ambient_, attempt == 0);
            size_t tcount = pow_n_[static_cast<size_t>(ell_)];
            for (size_t mrow = 0; mrow < dim_m_ && rs.rank() < target; ++mrow) {
                for (size_t tcode = 0; tcode < tcount && rs.rank() < target; ++tcode) {
                    std::vector<int> tp = tuple_of(tcode);
                    Vec row(ambient_, Rational(0));
                    for (const auto& [w, k] : elems) {
                        // A[(m',t'),(m,t)] is supported on t = w^{-1} t',
                        // i.e. t_j = t'_{w(j)}
                        std::vector<int> tcol(static_cast<size_t>(ell_));
                        for (int j = 1; j <= elli; ++j)
                            tcol[static_cast<size_t>(j - 1)] = tp[static_cast<size_t>(w(j) - 1)];
                        Rational s = Rational(w.sign()) / order;
                        for (size_t mcol = 0; mcol < dim_m_; ++mcol) {
                            const Rational& kv = (*k)(mrow, mcol);
                            if (!kv.is_zero()) row[index(mcol, tcol)] += s * kv;
                        }
                    }
                    rs.insert(std::move(row));
                }
            }
            if (rs.rank() == target) {
                proj_ = Mat(target, ambient_);
                for (size_t r = 0; r < target; ++r)
                    for (size_t j = 0; j < ambient_; ++j) proj_(r, j) = rs.rows()[r][j];
                pivots_ = rs.pivots();
                break;
            }
            check_theorem(attempt == 0, "Coinvariant",
                          "row space rank disagrees with the antisymmetrizer trace");
        }

        // containment: every column of every (s_i + 1) projects to zero
        for (int i = 1; i < elli; ++i)
            for (size_t j = 0; j < ambient_; ++j) {
                std::vector<std::pair<size_t, Rational>> col = s_column(i, j);
                col.emplace_back(j, Rational(1));
                for (size_t r = 0; r < basis_dim_; ++r) {
                    Rational acc(0);
                    for (const auto& [idx, val] : col) acc += proj_(r, idx) * val;
                    check_theorem(acc.is_zero(), "Coinvariant",
                                  "projection does not kill Im(s_i + 1)");
                }
            }
    }

    const HeckeModule* mod_;
    int n_;
    long ell_ = 0;
    size_t dim_m_ = 0;
    size_t ambient_ = 0;
    size_t basis_dim_ = 0;
    std::vector<size_t> pow_n_;
    Mat proj_;
    std::vector<size_t> pivots_;
};

} // namespace drinfeld
