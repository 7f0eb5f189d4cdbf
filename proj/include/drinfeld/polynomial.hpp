#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "drinfeld/rational.hpp"

namespace drinfeld {

// Dense univariate polynomial over Rational, coefficients in ascending degree
// order. The zero polynomial is the empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    explicit UniPoly(RatVec cs) : c_(std::move(cs)) { trim(); }
    static UniPoly constant(const Rational& r) { return UniPoly(RatVec{r}); }
    static UniPoly one() { return constant(Rational(1)); }
    // u - a
    static UniPoly linear_root(const Rational& a) { return UniPoly(RatVec{-a, Rational(1)}); }

    const RatVec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(k)];
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        RatVec r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        RatVec r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a) { return UniPoly{} - a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly{};
        RatVec r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const Rational& s, UniPoly p) {
        for (auto& x : p.c_) x *= s;
        p.trim();
        return p;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
    friend bool operator<(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    // Euclidean division; the divisor must be nonzero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
        require(!b.is_zero(), "DivisionByZero", "polynomial division by zero");
        RatVec rem = a.c_;
        RatVec quo;
        long db = b.degree();
        if (a.degree() >= db) quo.assign(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
        Rational lb = b.leading();
        for (long d = a.degree(); d >= db; --d) {
            Rational f = rem[static_cast<size_t>(d)] / lb;
            if (!f.is_zero()) {
                quo[static_cast<size_t>(d - db)] = f;
                for (long j = 0; j <= db; ++j)
                    rem[static_cast<size_t>(d - db + j)] -= f * b.c_[static_cast<size_t>(j)];
            }
        }
        q = UniPoly(std::move(quo));
        r = UniPoly(std::move(rem));
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) {
        UniPoly q, r;
        divmod(a, b, q, r);
        require(r.is_zero(), "InexactDivision", "polynomial division left a remainder");
        return q;
    }

    UniPoly monic() const {
        require(!is_zero(), "ZeroPolynomial", "monic() of zero polynomial");
        return (Rational(1) / leading()) * (*this);
    }

    // monic gcd
    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.monic();
    }

    static UniPoly lcm(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly{};
        return ((a * b) / gcd(a, b)).monic();
    }

    // p(u + t)
    UniPoly shift_arg(const Rational& t) const {
        UniPoly res;
        UniPoly base = one();
        UniPoly lin{t, Rational(1)};
        for (size_t i = 0; i < c_.size(); ++i) {
            res = res + c_[i] * base;
            if (i + 1 < c_.size()) base = base * lin;
        }
        return res;
    }

    // Integer roots with multiplicity, found by divisor search on the constant
    // term after clearing denominators; returns the root-free cofactor.
    std::map<long long, long> integer_roots(UniPoly* cofactor = nullptr) const {
        require(!is_zero(), "ZeroPolynomial", "root extraction from zero polynomial");
        std::map<long long, long> roots;
        UniPoly p = *this;
        while (p.degree() >= 1) {
            // strip factors of u
            if (p.coeff(0).is_zero()) {
                roots[0]++;
                RatVec shifted(p.c_.begin() + 1, p.c_.end());
                p = UniPoly(std::move(shifted));
                continue;
            }
            mpz_class den(1);
            for (const auto& c : p.c_) den = den * c.den() / ::gcd(den, c.den());
            mpz_class c0 = p.coeff(0).num() * (den / p.coeff(0).den());
            mpz_class a = ::abs(c0);
            bool found = false;
            for (mpz_class d(1); d * d <= a && !found; ++d) {
                if (a % d != 0) continue;
                mpz_class cands[2] = {d, mpz_class(a / d)};
                for (const mpz_class& cand : cands) {
                    if (!cand.fits_slong_p()) continue;
                    long long z = cand.get_si();
                    for (long long root : {z, -z}) {
                        if (p.eval(Rational(root)).is_zero()) {
                            roots[root]++;
                            p = p / linear_root(Rational(root));
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
            }
            if (!found) break;
        }
        if (cofactor) *cofactor = p;
        return roots;
    }

    // Rational roots with multiplicity by divisor search on the primitive
    // integer form (numerators divide the constant term, denominators the
    // leading coefficient); returns the root-free cofactor.
    std::map<Rational, long> rational_roots(UniPoly* cofactor = nullptr) const {
        require(!is_zero(), "ZeroPolynomial", "root extraction from zero polynomial");
        std::map<Rational, long> roots;
        UniPoly p = *this;
        while (p.degree() >= 1) {
            if (p.coeff(0).is_zero()) {
                roots[Rational(0)]++;
                RatVec shifted(p.c_.begin() + 1, p.c_.end());
                p = UniPoly(std::move(shifted));
                continue;
            }
            mpz_class den(1);
            for (const auto& c : p.c_) den = den * c.den() / ::gcd(den, c.den());
            mpz_class c0 = ::abs(p.coeff(0).num() * (den / p.coeff(0).den()));
            mpz_class lead = ::abs(p.leading().num() * (den / p.leading().den()));
            bool found = false;
            auto divisors = [](const mpz_class& a) {
                std::vector<mpz_class> out;
                for (mpz_class d(1); d * d <= a; ++d) {
                    if (a % d != 0) continue;
                    out.push_back(d);
                    out.push_back(a / d);
                }
                return out;
            };
            for (const mpz_class& pnum : divisors(c0)) {
                for (const mpz_class& pden : divisors(lead)) {
                    Rational cand(mpq_class(pnum) / mpq_class(pden));
                    for (const Rational& r : {cand, -cand}) {
                        if (p.eval(r).is_zero()) {
                            roots[r]++;
                            p = p / linear_root(r);
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (!found) break;
        }
        if (cofactor) *cofactor = p;
        return roots;
    }

    std::string str(const std::string& var = "u") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += c_[i].str();
            } else {
                if (!c_[i].is_one()) s += c_[i].str() + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    RatVec c_;
};

// Truncated power series in u^{-1}: coefficients of u^0, u^{-1}, ..., u^{-order}.
struct SeriesTrunc {
    long order = 0;
    RatVec coeffs; // size order + 1

    static SeriesTrunc zero(long order) {
        return SeriesTrunc{order, RatVec(static_cast<size_t>(order) + 1, Rational(0))};
    }
    Rational at(long k) const { return coeffs[static_cast<size_t>(k)]; }

    friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b) {
        long order = std::min(a.order, b.order);
        SeriesTrunc r = zero(order);
        for (long i = 0; i <= order; ++i)
            for (long j = 0; i + j <= order && j <= b.order; ++j)
                if (i <= a.order) r.coeffs[static_cast<size_t>(i + j)] += a.at(i) * b.at(j);
        return r;
    }
    friend bool operator==(const SeriesTrunc& a, const SeriesTrunc& b) {
        return a.order == b.order && a.coeffs == b.coeffs;
    }
};

// Normalized ratio of polynomials: den monic, gcd(num, den) = 1.
class RatFun {
public:
    RatFun() : num_(UniPoly::one()), den_(UniPoly::one()) {}
    RatFun(UniPoly num, UniPoly den) { assign(std::move(num), std::move(den)); }
    static RatFun one() { return RatFun(); }
    static RatFun constant(const Rational& r) {
        return RatFun(UniPoly::constant(r), UniPoly::one());
    }
    static RatFun of(const UniPoly& p) { return RatFun(p, UniPoly::one()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        require(!b.is_zero(), "DivisionByZero", "rational function division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
    friend bool operator<(const RatFun& a, const RatFun& b) {
        if (a.den_ != b.den_) return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

    // f(u + t)
    RatFun shift_arg(const Rational& t) const {
        return RatFun(num_.shift_arg(t), den_.shift_arg(t));
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void assign(UniPoly num, UniPoly den) {
        require(!den.is_zero(), "ZeroDenominator", "rational function with zero denominator");
        if (num.is_zero()) {
            num_ = UniPoly{};
            den_ = UniPoly::one();
            return;
        }
        UniPoly g = UniPoly::gcd(num, den);
        num = num / g;
        den = den / g;
        Rational lead = den.leading();
        num_ = (Rational(1) / lead) * num;
        den_ = (Rational(1) / lead) * den;
    }

    UniPoly num_, den_;
};

// Expansion of f in powers of u^{-1} up to u^{-order}. Requires f regular at
// u = infinity, i.e. deg(num) <= deg(den).
inline SeriesTrunc series_expand(const RatFun& f, long order) {
    require(order >= 0, "BadOrder", "series order must be nonnegative");
    require(f.num().degree() <= f.den().degree(), "NotRegularAtInfinity",
            "deg(num) > deg(den)");
    long d = f.den().degree();
    // reversed coefficients: num(1/t) t^d and den(1/t) t^d as polynomials in t
    auto reversed = [d](const UniPoly& p) {
        RatVec r(static_cast<size_t>(d) + 1, Rational(0));
        for (long k = 0; k <= p.degree(); ++k)
            r[static_cast<size_t>(d - k)] = p.coeff(k);
        return r;
    };
    RatVec nr = reversed(f.num());
    RatVec dr = reversed(f.den());
    // power series division nr / dr, dr[0] = leading coeff of den != 0
    SeriesTrunc out = SeriesTrunc::zero(order);
    for (long k = 0; k <= order; ++k) {
        Rational acc = k < static_cast<long>(nr.size()) ? nr[static_cast<size_t>(k)] : Rational(0);
        for (long j = 1; j <= k && j < static_cast<long>(dr.size()); ++j)
            acc -= dr[static_cast<size_t>(j)] * out.coeffs[static_cast<size_t>(k - j)];
        out.coeffs[static_cast<size_t>(k)] = acc / dr[0];
    }
    return out;
}

// Solves Q(u+1)/Q(u) = R for the unique monic Q with integer roots.
//
// If Q has root multiplicity function f on the integers, the reduced ratio
// Q(u+1)/Q(u) has numerator multiplicity (f(x+1)-f(x))_+ and denominator
// multiplicity (f(x)-f(x+1))_+ at x, so f is recovered by prefix sums of
// (numerator roots - denominator roots). Nonnegativity and finite support of
// the prefix sums is exactly solvability; the result is verified by
// back-substitution.
inline UniPoly ratfun_ratio_solve(const RatFun& R) {
    require(!R.is_zero(), "NoIntegralSolution", "ratio is zero");
    require(R.num().degree() == R.den().degree(), "NoIntegralSolution",
            "ratio of unequal degrees has no polynomial solution");
    require(R.num().is_monic() && R.den().is_monic(), "NoIntegralSolution",
            "ratio must be a ratio of monic polynomials");
    UniPoly cn, cd;
    std::map<long long, long> nroots = R.num().integer_roots(&cn);
    std::map<long long, long> droots = R.den().integer_roots(&cd);
    require(cn.degree() == 0 && cd.degree() == 0, "NoIntegralSolution",
            "ratio has non-integral roots");

    std::map<long long, long> delta; // n(x) - d(x)
    for (auto& [x, m] : nroots) delta[x] += m;
    for (auto& [x, m] : droots) delta[x] -= m;
    UniPoly Q = UniPoly::one();
    if (!delta.empty()) {
        long long lo = delta.begin()->first;
        long long hi = delta.rbegin()->first;
        long f = 0;
        for (long long x = lo; x <= hi + 1; ++x) {
            auto it = delta.find(x - 1);
            if (it != delta.end()) f += it->second;
            require(f >= 0, "NoIntegralSolution", "no nonnegative multiplicity profile");
            for (long m = 0; m < f; ++m) Q = Q * UniPoly::linear_root(Rational(x));
        }
        require(f == 0, "NoIntegralSolution", "multiplicity profile does not close");
    }
    // back-substitution: Q(u+1) * den == Q(u) * num
    require(Q.shift_arg(Rational(1)) * R.den() == Q * R.num(), "NoIntegralSolution",
            "back-substitution failed");
    return Q;
}

} // namespace drinfeld
