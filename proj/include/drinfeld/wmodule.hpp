#pragma once

#include <map>
#include <string>
#include <vector>

#include "drinfeld/linalg.hpp"
#include "drinfeld/partition.hpp"
#include "drinfeld/permutation.hpp"
#include "drinfeld/symchar.hpp"

namespace drinfeld {

// Representation of the symmetric group W_ell given by the matrices of the
// simple transpositions s_1..s_{ell-1}, acting on column vectors.
struct WModule {
    long ell = 0;
    size_t dim = 0;
    std::vector<Mat> gens; // ell - 1 matrices

    const Mat& gen(int i) const { return gens[static_cast<size_t>(i - 1)]; } // s_i

    Mat matrix_of(const Permutation& w) const {
        Mat m = Mat::identity(dim);
        for (int i : w.reduced_word()) m = m * gen(i);
        return m;
    }

    // Coxeter presentation check: involutions, braid, distant commutation.
    bool is_representation(std::string* why = nullptr) const {
        auto fail = [&](const std::string& msg) {
            if (why) *why = msg;
            return false;
        };
        Mat id = Mat::identity(dim);
        for (size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].rows() != dim || gens[i].cols() != dim)
                return fail("generator size mismatch");
            if (gens[i] * gens[i] != id)
                return fail("s_" + std::to_string(i + 1) + " is not an involution");
        }
        for (size_t i = 0; i + 1 < gens.size(); ++i) {
            const Mat &a = gens[i], &b = gens[i + 1];
            if (a * b * a != b * a * b)
                return fail("braid relation fails at s_" + std::to_string(i + 1));
        }
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = i + 2; j < gens.size(); ++j)
                if (gens[i] * gens[j] != gens[j] * gens[i])
                    return fail("distant generators s_" + std::to_string(i + 1) + ", s_" +
                                std::to_string(j + 1) + " do not commute");
        return true;
    }
};

inline WModule trivial_wmodule(long ell) {
    WModule m;
    m.ell = ell;
    m.dim = 1;
    for (long i = 1; i < ell; ++i) m.gens.push_back(Mat::identity(1));
    return m;
}

inline WModule sign_wmodule(long ell) {
    WModule m;
    m.ell = ell;
    m.dim = 1;
    for (long i = 1; i < ell; ++i) {
        Mat g(1, 1);
        g(0, 0) = Rational(-1);
        m.gens.push_back(g);
    }
    return m;
}

inline WModule regular_wmodule(long ell) {
    auto elems = all_permutations(static_cast<int>(ell));
    std::map<Permutation, size_t> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
    WModule m;
    m.ell = ell;
    m.dim = elems.size();
    for (int i = 1; i < ell; ++i) {
        Mat g(m.dim, m.dim);
        Permutation s = Permutation::simple(static_cast<int>(ell), i);
        for (size_t j = 0; j < elems.size(); ++j) g(index[s * elems[j]], j) = Rational(1);
        m.gens.push_back(std::move(g));
    }
    return m;
}

inline WModule direct_sum(const WModule& a, const WModule& b) {
    require(a.ell == b.ell, "SizeMismatch", "direct sum across different W_ell");
    WModule m;
    m.ell = a.ell;
    m.dim = a.dim + b.dim;
    for (size_t g = 0; g < a.gens.size(); ++g) {
        Mat s(m.dim, m.dim);
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) s(i, j) = a.gens[g](i, j);
        for (size_t i = 0; i < b.dim; ++i)
            for (size_t j = 0; j < b.dim; ++j) s(a.dim + i, a.dim + j) = b.gens[g](i, j);
        m.gens.push_back(std::move(s));
    }
    return m;
}

namespace detail {

struct Tableau {
    // row[k], col[k] of the entry k+1 (0-based storage, 1-based entries)
    std::vector<int> row, col;
    long content(int k) const { return col[static_cast<size_t>(k - 1)] - row[static_cast<size_t>(k - 1)]; }
};

inline std::vector<Tableau> standard_tableaux(const Partition& nu) {
    long ell = nu.size();
    std::vector<Tableau> out;
    std::vector<long> filled(nu.length(), 0); // cells filled in each row
    Tableau t;
    t.row.resize(static_cast<size_t>(ell));
    t.col.resize(static_cast<size_t>(ell));
    auto rec = [&](auto&& self, int k) -> void {
        if (k > ell) {
            out.push_back(t);
            return;
        }
        for (size_t r = 0; r < nu.length(); ++r) {
            if (filled[r] >= nu.part(r)) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue; // column must grow downward
            t.row[static_cast<size_t>(k - 1)] = static_cast<int>(r);
            t.col[static_cast<size_t>(k - 1)] = static_cast<int>(filled[r]);
            ++filled[r];
            self(self, k + 1);
            --filled[r];
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace detail

// Young's seminormal form of the irreducible U(nu): rational matrix entries
// from axial distances. On the pair {T, s_i T} with d = content(i+1) -
// content(i) in T:  s_i v_T = (1/d) v_T + (1 + 1/d) v_{s_i T}.
inline WModule specht_module(const Partition& nu) {
    long ell = nu.size();
    require(ell >= 1, "BadPartition", "specht module needs |nu| >= 1");
    auto tabs = detail::standard_tableaux(nu);
    std::map<std::pair<std::vector<int>, std::vector<int>>, size_t> index;
    for (size_t i = 0; i < tabs.size(); ++i) index[{tabs[i].row, tabs[i].col}] = i;
    WModule m;
    m.ell = ell;
    m.dim = tabs.size();
    for (int i = 1; i < ell; ++i) {
        Mat g(m.dim, m.dim);
        for (size_t tindex = 0; tindex < tabs.size(); ++tindex) {
            const auto& t = tabs[tindex];
            int ri = t.row[static_cast<size_t>(i - 1)], ci = t.col[static_cast<size_t>(i - 1)];
            int rj = t.row[static_cast<size_t>(i)], cj = t.col[static_cast<size_t>(i)];
            if (ri == rj) {
                g(tindex, tindex) += Rational(1);
            } else if (ci == cj) {
                g(tindex, tindex) -= Rational(1);
            } else {
                Rational d = Rational(t.content(i + 1) - t.content(i));
                detail::Tableau swapped = t;
                std::swap(swapped.row[static_cast<size_t>(i - 1)], swapped.row[static_cast<size_t>(i)]);
                std::swap(swapped.col[static_cast<size_t>(i - 1)], swapped.col[static_cast<size_t>(i)]);
                size_t sindex = index.at({swapped.row, swapped.col});
                g(tindex, tindex) += Rational(1) / d;
                g(sindex, tindex) += Rational(1) + Rational(1) / d;
            }
        }
        m.gens.push_back(std::move(g));
    }
    check_theorem(Rational(static_cast<long>(m.dim)) == syt_count(nu), "SpechtDim",
                  "dimension disagrees with hook length formula");
    std::string why;
    check_theorem(m.is_representation(&why), "SpechtRelations", why);
    return m;
}

// Traces of class representatives, indexed like character_table(ell).
inline std::vector<Rational> class_traces(const WModule& m) {
    const CharacterTable& t = character_table(m.ell);
    std::vector<Rational> out;
    for (const auto& cls : t.irreducibles) {
        // canonical representative: consecutive cycles
        Permutation rep = Permutation::identity(static_cast<int>(m.ell));
        int at = 1;
        for (long part : cls.parts()) {
            for (long j = 0; j + 1 < part; ++j)
                rep = rep * Permutation::simple(static_cast<int>(m.ell), at + static_cast<int>(j));
            at += static_cast<int>(part);
        }
        out.push_back(m.matrix_of(rep).trace());
    }
    return out;
}

struct IsotypicDecomposition {
    std::map<Partition, long> multiplicities;

    long multiplicity(const Partition& nu) const {
        auto it = multiplicities.find(nu);
        return it == multiplicities.end() ? 0 : it->second;
    }
};

// Multiplicities by character inner product: mult(nu) = (1/ell!) sum over
// classes |class| chi^nu trace_M.
inline IsotypicDecomposition decompose(const WModule& m) {
    std::string why;
    require(m.is_representation(&why), "NotARepresentation", why);
    const CharacterTable& t = character_table(m.ell);
    std::vector<Rational> traces = class_traces(m);
    IsotypicDecomposition dec;
    Rational order = factorial(m.ell);
    Rational dimcheck(0);
    for (size_t i = 0; i < t.irreducibles.size(); ++i) {
        Rational mult(0);
        for (size_t c = 0; c < t.irreducibles.size(); ++c)
            mult += t.class_sizes[c] * t.chi[i][c] * traces[c];
        mult /= order;
        check_theorem(mult.is_integer() && mult.sign() >= 0, "NotARepresentation",
                      "character inner product is not a nonnegative integer");
        if (mult.sign() > 0) {
            dec.multiplicities[t.irreducibles[i]] = *mult.as_int();
            dimcheck += mult * syt_count(t.irreducibles[i]);
        }
    }
    check_theorem(dimcheck == Rational(static_cast<long>(m.dim)), "NotARepresentation",
                  "isotypic dimensions do not sum to dim");
    return dec;
}

// Central idempotent image: (dim chi^nu / ell!) sum_w chi^nu(w) M(w).
inline Mat isotypic_projector(const WModule& m, const Partition& nu) {
    std::string why;
    require(m.is_representation(&why), "NotARepresentation", why);
    require(nu.size() == m.ell, "SizeMismatch", "partition size must equal ell");
    Mat p(m.dim, m.dim);
    // accumulate products over the whole group by BFS over length
    std::map<Permutation, Mat> mats;
    mats.emplace(Permutation::identity(static_cast<int>(m.ell)), Mat::identity(m.dim));
    std::vector<Permutation> frontier{Permutation::identity(static_cast<int>(m.ell))};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& w : frontier)
            for (int i = 1; i < m.ell; ++i) {
                Permutation sw = Permutation::simple(static_cast<int>(m.ell), i) * w;
                if (sw.length() != w.length() + 1 || mats.count(sw)) continue;
                mats.emplace(sw, m.gen(i) * mats.at(w));
                next.push_back(sw);
            }
        frontier = std::move(next);
    }
    for (const auto& [w, mat] : mats) {
        Rational chi = mn_character(nu, w.cycle_type());
        if (chi.is_zero()) continue;
        p = p + chi * mat;
    }
    p = (syt_count(nu) / factorial(m.ell)) * p;
    check_theorem(p * p == p, "ProjectorIdempotent", "isotypic projector is not idempotent");
    for (const auto& g : m.gens)
        check_theorem(g * p == p * g, "ProjectorCentral", "projector does not commute with W");
    return p;
}

} // namespace drinfeld
