#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "drinfeld/polynomial.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld {

using Vec = std::vector<Rational>;

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Dense matrix over Rational, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec row(size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    Vec col(size_t j) const {
        Vec v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Rational trace() const {
        Rational t(0);
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }
    friend Mat operator*(const Rational& s, const Mat& a) {
        Mat c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
        return c;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b(k, j);
                    if (!bkj.is_zero()) c(i, j) += aik * bkj;
                }
            }
        return c;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Vec apply(const Vec& v) const {
        Vec out(rows_, Rational(0));
        for (size_t i = 0; i < rows_; ++i) {
            Rational acc(0);
            for (size_t j = 0; j < cols_; ++j) {
                const Rational& m = (*this)(i, j);
                if (!m.is_zero() && !v[j].is_zero()) acc += m * v[j];
            }
            out[i] = acc;
        }
        return out;
    }

    static Mat kronecker(const Mat& a, const Mat& b) {
        Mat c(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j) {
                const Rational& aij = a(i, j);
                if (aij.is_zero()) continue;
                for (size_t k = 0; k < b.rows_; ++k)
                    for (size_t l = 0; l < b.cols_; ++l) {
                        const Rational& bkl = b(k, l);
                        if (!bkl.is_zero()) c(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
                    }
            }
        return c;
    }

    friend Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

inline Mat pow_mat(const Mat& m, long e) {
    Mat acc = Mat::identity(m.rows());
    Mat b = m;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) acc = acc * b;
        if (k > 1) b = b * b;
    }
    return acc;
}

namespace fp {
// Arithmetic mod p = 2^61 - 1, used only as a filter: a nonzero image proves
// the exact value nonzero; a zero image proves nothing and must be certified
// by the caller.
constexpr uint64_t P = (uint64_t(1) << 61) - 1;

inline uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s >= P ? s - P : s;
}
inline uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + P - b; }
inline uint64_t mul(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % P);
}
inline uint64_t pw(uint64_t b, uint64_t e) {
    uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1;
    }
    return acc;
}
inline uint64_t inv(uint64_t a) { return pw(a, P - 2); }

inline std::optional<uint64_t> image(const Rational& r) {
    uint64_t n = mpz_fdiv_ui(r.num().get_mpz_t(), P);
    uint64_t d = mpz_fdiv_ui(r.den().get_mpz_t(), P);
    if (d == 0) return std::nullopt;
    return mul(n, inv(d));
}
inline std::optional<std::vector<uint64_t>> image(const Vec& v) {
    std::vector<uint64_t> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        auto x = image(v[i]);
        if (!x) return std::nullopt;
        out[i] = *x;
    }
    return out;
}
} // namespace fp

// Incrementally built reduced row echelon basis of a subspace of Q^n.
//
// Exact rows are authoritative. When the mod-p shadow is enabled, an incoming
// vector whose shadow reduces to zero is reported dependent without exact
// work; that answer can be wrong with probability ~n/p per insert, so every
// computation built on a shadowed RowSpace carries its own exact certificate
// (rank counts, residual checks) and rebuilds exactly on mismatch.
class RowSpace {
public:
    explicit RowSpace(size_t n, bool use_shadow = false) : n_(n), shadow_ok_(use_shadow) {}

    size_t dim() const { return n_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // Returns true iff the vector was exactly inserted (rank grew). A false
    // from the shadow path is unverified; use contains() when soundness of
    // the negative answer matters.
    bool insert(Vec v) {
        if (shadow_ok_) {
            auto sv = fp::image(v);
            if (sv && shadow_reduce_is_zero(*sv)) return false;
        }
        return insert_exact(std::move(v));
    }

    bool insert_exact(Vec v) {
        reduce_exact(v);
        size_t piv = find_pivot(v);
        if (piv == n_) return false;
        Rational inv = Rational(1) / v[piv];
        for (auto& x : v) x *= inv;
        // eliminate this column from existing rows to keep the basis reduced
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = rows_[r][piv];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < n_; ++j)
                if (!v[j].is_zero()) rows_[r][j] -= c * v[j];
        }
        size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < piv) ++at;
        rows_.insert(rows_.begin() + at, std::move(v));
        pivots_.insert(pivots_.begin() + at, piv);
        if (shadow_ok_) refresh_shadow();
        return true;
    }

    // v minus its projection onto the span (exact).
    void reduce_exact(Vec& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = v[pivots_[r]];
            if (c.is_zero()) continue;
            const Vec& row = rows_[r];
            for (size_t j = 0; j < n_; ++j)
                if (!row[j].is_zero()) v[j] -= c * row[j];
        }
    }

    bool contains(Vec v) const {
        reduce_exact(v);
        return is_zero_vec(v);
    }

    // Coordinates in the echelon basis, if v lies in the span.
    std::optional<RatVec> coords(Vec v) const {
        RatVec cs(rows_.size());
        for (size_t r = 0; r < rows_.size(); ++r) cs[r] = v[pivots_[r]];
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (cs[r].is_zero()) continue;
            const Vec& row = rows_[r];
            for (size_t j = 0; j < n_; ++j)
                if (!row[j].is_zero()) v[j] -= cs[r] * row[j];
        }
        if (!is_zero_vec(v)) return std::nullopt;
        return cs;
    }

    // Kernel basis of the row set viewed as a linear map Q^n -> Q^rank,
    // i.e. solutions of rows * x = 0, one vector per free column.
    std::vector<Vec> kernel_of_rows() const {
        std::vector<bool> is_piv(n_, false);
        for (size_t p : pivots_) is_piv[p] = true;
        std::vector<Vec> out;
        for (size_t f = 0; f < n_; ++f) {
            if (is_piv[f]) continue;
            Vec k(n_, Rational(0));
            k[f] = Rational(1);
            for (size_t r = 0; r < rows_.size(); ++r) k[pivots_[r]] = -rows_[r][f];
            out.push_back(std::move(k));
        }
        return out;
    }

private:
    size_t find_pivot(const Vec& v) const {
        for (size_t j = 0; j < n_; ++j)
            if (!v[j].is_zero()) return j;
        return n_;
    }

    bool shadow_reduce_is_zero(std::vector<uint64_t> sv) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            uint64_t c = sv[shadow_pivots_[r]];
            if (c == 0) continue;
            const auto& row = shadow_rows_[r];
            for (size_t j = 0; j < n_; ++j)
                if (row[j]) sv[j] = fp::sub(sv[j], fp::mul(c, row[j]));
        }
        for (uint64_t x : sv)
            if (x) return false;
        return true;
    }

    void refresh_shadow() {
        shadow_rows_.clear();
        shadow_pivots_.clear();
        for (size_t r = 0; r < rows_.size(); ++r) {
            auto img = fp::image(rows_[r]);
            if (!img) {
                // a denominator hit the prime; disable the filter for safety
                shadow_ok_ = false;
                shadow_rows_.clear();
                shadow_pivots_.clear();
                return;
            }
            shadow_rows_.push_back(std::move(*img));
            shadow_pivots_.push_back(pivots_[r]);
        }
    }

    size_t n_;
    bool shadow_ok_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;
    std::vector<std::vector<uint64_t>> shadow_rows_;
    std::vector<size_t> shadow_pivots_;
};

// Exact kernel of m (solutions of m x = 0). Internally shadow-accelerated;
// the result is certified: every kernel vector is checked against m and the
// rank/nullity count must close, otherwise the computation is redone exactly.
inline std::vector<Vec> kernel(const Mat& m, bool use_shadow = true) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        RowSpace rs(m.cols(), use_shadow && attempt == 0);
        for (size_t i = 0; i < m.rows(); ++i) rs.insert(m.row(i));
        std::vector<Vec> ker = rs.kernel_of_rows();
        bool ok = rs.rank() + ker.size() == m.cols();
        for (const Vec& k : ker) {
            if (!ok) break;
            ok = is_zero_vec(m.apply(k));
        }
        if (ok) return ker;
    }
    throw theorem_violation("ShadowCertification", "kernel certification failed twice");
}

inline size_t rank_of(const Mat& m) {
    // kernel() is certified, so rank via nullity is exact
    return m.cols() - kernel(m).size();
}

// Matrix with rows spanning the annihilator {f : f.x = 0 for all x in span}.
inline Mat annihilator(const std::vector<Vec>& span, size_t n) {
    Mat m(span.size(), n);
    for (size_t i = 0; i < span.size(); ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = span[i][j];
    std::vector<Vec> ann = kernel(m, false);
    Mat out(ann.size(), n);
    for (size_t i = 0; i < ann.size(); ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = ann[i][j];
    return out;
}

// Basis of {v : g v in span(X)}; ann_x must be annihilator(X, n).
inline std::vector<Vec> preimage(const Mat& g, const Mat& ann_x) {
    return kernel(ann_x * g, false);
}

inline Mat inverse(const Mat& m) {
    require(m.rows() == m.cols(), "NotSquare", "inverse of non-square matrix");
    size_t n = m.rows();
    // Gauss-Jordan on [m | I]
    Mat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && aug(piv, c).is_zero()) ++piv;
        require(piv < n, "SingularMatrix", "matrix not invertible");
        if (piv != c)
            for (size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(c, j));
        Rational inv = Rational(1) / aug(c, c);
        for (size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || aug(r, c).is_zero()) continue;
            Rational f = aug(r, c);
            for (size_t j = 0; j < 2 * n; ++j) aug(r, j) -= f * aug(c, j);
        }
    }
    Mat out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

// Monic minimal polynomial: iterate powers of m as vectors in End(V) until
// the first linear dependence; verified to annihilate m.
inline UniPoly minimal_polynomial(const Mat& m) {
    require(m.rows() == m.cols(), "NotSquare", "minimal polynomial of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return UniPoly::one();
    size_t nn = n * n;
    auto flatten = [&](const Mat& x) {
        Vec v(nn);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v[i * n + j] = x(i, j);
        return v;
    };
    std::vector<Vec> powers;
    RowSpace rs(nn, false);
    Mat p = Mat::identity(n);
    for (size_t d = 0;; ++d) {
        Vec flat = flatten(p);
        powers.push_back(flat);
        if (!rs.insert_exact(std::move(flat))) {
            // first dependence: x^d + sum_j (k_j/k_d) x^j annihilates m
            Mat aug(nn, d + 1);
            for (size_t e = 0; e < nn; ++e)
                for (size_t k = 0; k <= d; ++k) aug(e, k) = powers[k][e];
            std::vector<Vec> ker = kernel(aug, false);
            for (const Vec& k : ker) {
                if (k[d].is_zero()) continue;
                Rational s = Rational(1) / k[d];
                RatVec cs(d + 1);
                for (size_t j = 0; j < d; ++j) cs[j] = s * k[j];
                cs[d] = Rational(1);
                UniPoly mp{RatVec(cs)};
                // certify: mp(m) == 0
                Mat acc(n, n);
                Mat pw = Mat::identity(n);
                for (size_t j = 0; j <= d; ++j) {
                    if (!mp.coeff(static_cast<long>(j)).is_zero())
                        acc = acc + mp.coeff(static_cast<long>(j)) * pw;
                    if (j < d) pw = pw * m;
                }
                check_theorem(acc.is_zero(), "MinPoly", "candidate does not annihilate");
                return mp;
            }
            throw theorem_violation("MinPoly", "dependence found but not solvable");
        }
        p = p * m;
    }
}

} // namespace drinfeld
