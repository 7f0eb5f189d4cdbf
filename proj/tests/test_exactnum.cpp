#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "drinfeld/polynomial.hpp"
#include "drinfeld/rational.hpp"

using namespace drinfeld;

TEST_CASE("rational canonical form and rendering") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational::parse("-3/2") == a);
    CHECK(Rational(2, 4) + Rational(1, 2) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
}

TEST_CASE("polynomial arithmetic and division") {
    UniPoly p{Rational(2), Rational(-3), Rational(1)}; // u^2 - 3u + 2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(1)).is_zero());
    CHECK(p.eval(Rational(2)).is_zero());
    UniPoly q = p / UniPoly::linear_root(Rational(1));
    CHECK(q == UniPoly::linear_root(Rational(2)));
    CHECK(UniPoly::gcd(p, UniPoly::linear_root(Rational(2))) ==
          UniPoly::linear_root(Rational(2)));
    CHECK(p.shift_arg(Rational(1)) == UniPoly{Rational(0), Rational(-1), Rational(1)});

    auto roots = p.integer_roots();
    CHECK(roots.size() == 2);
    CHECK(roots.at(1) == 1);
    CHECK(roots.at(2) == 1);
}

TEST_CASE("ratfun normalization invariants") {
    // den monic, gcd(num, den) = 1
    RatFun f(UniPoly{Rational(2), Rational(2)}, UniPoly{Rational(-2), Rational(0), Rational(2)});
    CHECK(f.den().is_monic());
    CHECK(UniPoly::gcd(f.num(), f.den()).is_one());
    // (2u+2)/(2u^2-2) = 1/(u-1)
    CHECK(f.num() == UniPoly::constant(Rational(1)));
    CHECK(f.den() == UniPoly::linear_root(Rational(1)));
}

TEST_CASE("ratio solve: stated examples") {
    CHECK(ratfun_ratio_solve(RatFun::one()) == UniPoly::one());

    RatFun r1(UniPoly::linear_root(Rational(2)), UniPoly::linear_root(Rational(3)));
    CHECK(ratfun_ratio_solve(r1) == UniPoly::linear_root(Rational(3)));

    // R = u/(u-2) -> Q = (u-1)(u-2); check the claim by polynomial arithmetic
    RatFun r2(UniPoly::linear_root(Rational(0)), UniPoly::linear_root(Rational(2)));
    UniPoly q = ratfun_ratio_solve(r2);
    UniPoly expect = UniPoly::linear_root(Rational(1)) * UniPoly::linear_root(Rational(2));
    CHECK(q == expect);
    RatFun back(q.shift_arg(Rational(1)), q);
    CHECK(back == r2);

    // non-integral root: (u - 1/2)/(u - 5/2)
    RatFun bad(UniPoly::linear_root(Rational(1, 2)), UniPoly::linear_root(Rational(5, 2)));
    CHECK_THROWS_AS(ratfun_ratio_solve(bad), domain_error);
    // unsolvable profile: (u-3)/(u-1) needs negative multiplicities
    RatFun bad2(UniPoly::linear_root(Rational(3)), UniPoly::linear_root(Rational(1)));
    CHECK_THROWS_AS(ratfun_ratio_solve(bad2), domain_error);
}

TEST_CASE("ratio solve roundtrip on randomized integer-rooted Q") {
    std::mt19937 rng(20240711);
    std::uniform_int_distribution<int> deg(0, 6), root(-10, 10);
    for (int trial = 0; trial < 1000; ++trial) {
        UniPoly q = UniPoly::one();
        int d = deg(rng);
        for (int i = 0; i < d; ++i) q = q * UniPoly::linear_root(Rational(root(rng)));
        RatFun ratio(q.shift_arg(Rational(1)), q);
        UniPoly solved = ratfun_ratio_solve(ratio);
        REQUIRE(solved == q.monic());
    }
}

TEST_CASE("series expansion: stated examples") {
    SeriesTrunc s1 = series_expand(RatFun::one(), 2);
    CHECK(s1.coeffs == RatVec{Rational(1), Rational(0), Rational(0)});

    RatFun f2(UniPoly{Rational(1), Rational(1)}, UniPoly::linear_root(Rational(0)));
    CHECK(series_expand(f2, 2).coeffs == RatVec{Rational(1), Rational(1), Rational(0)});

    // 1 + 1/(u-2): geometric tail sum 2^k u^{-k-1}, derived independently
    RatFun f3 = RatFun::one() + RatFun(UniPoly::one(), UniPoly::linear_root(Rational(2)));
    SeriesTrunc s3 = series_expand(f3, 3);
    RatVec expect{Rational(1)};
    for (int k = 0; k < 3; ++k) expect.push_back(pow_int(Rational(2), k));
    CHECK(s3.coeffs == expect);

    RatFun notreg(UniPoly{Rational(0), Rational(0), Rational(1)}, UniPoly::linear_root(Rational(0)));
    CHECK_THROWS_AS(series_expand(notreg, 2), domain_error);
}

TEST_CASE("ratfun arithmetic keeps the canonical form") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, 3);
    auto random_poly = [&] {
        RatVec c(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : c) x = Rational(coef(rng));
        return UniPoly(std::move(c));
    };
    for (int trial = 0; trial < 300; ++trial) {
        UniPoly n1 = random_poly(), d1 = random_poly(), n2 = random_poly(), d2 = random_poly();
        if (d1.is_zero() || d2.is_zero()) continue;
        RatFun f(n1, d1), g(n2, d2);
        for (const RatFun& h : {f + g, f - g, f * g}) {
            CHECK(h.den().is_monic());
            if (h.is_zero())
                CHECK(h.den().is_one());
            else
                CHECK(UniPoly::gcd(h.num(), h.den()).is_one()); // Euclidean re-check
        }
    }
}

TEST_CASE("series of product equals truncated convolution") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coef(-4, 4);
    auto random_ratfun = [&](int dn, int dd) {
        RatVec n(static_cast<size_t>(dn) + 1), d(static_cast<size_t>(dd) + 1);
        for (auto& x : n) x = Rational(coef(rng));
        for (auto& x : d) x = Rational(coef(rng));
        d.back() = Rational(1); // keep denominator degree exact and monic
        if (n.back().is_zero()) n.back() = Rational(1);
        return RatFun(UniPoly(n), UniPoly(d));
    };
    for (int trial = 0; trial < 200; ++trial) {
        RatFun f = random_ratfun(2, 3), g = random_ratfun(1, 2);
        if (f.is_zero() || g.is_zero()) continue;
        SeriesTrunc lhs = series_expand(f * g, 6);
        SeriesTrunc rhs = series_expand(f, 6) * series_expand(g, 6);
        REQUIRE(lhs == rhs);
    }
}
