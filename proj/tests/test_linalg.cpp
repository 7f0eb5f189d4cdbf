#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "drinfeld/linalg.hpp"

using namespace drinfeld;

namespace {
Mat random_mat(std::mt19937& rng, size_t r, size_t c, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Mat m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng));
    return m;
}
} // namespace

TEST_CASE("matrix basics") {
    Mat a(2, 2);
    a(0, 0) = Rational(1);
    a(0, 1) = Rational(2);
    a(1, 0) = Rational(3);
    a(1, 1) = Rational(4);
    Mat i = Mat::identity(2);
    CHECK(a * i == a);
    CHECK((a - a).is_zero());
    CHECK(a.trace() == Rational(5));
    CHECK(inverse(a) * a == i);
    CHECK(pow_mat(a, 3) == a * a * a);
    Mat k = Mat::kronecker(a, i);
    CHECK(k.rows() == 4);
    CHECK(k(2, 0) == Rational(3));
}

TEST_CASE("rowspace echelon, rank and containment") {
    RowSpace rs(3);
    CHECK(rs.insert({Rational(1), Rational(2), Rational(3)}));
    CHECK(rs.insert({Rational(0), Rational(1), Rational(1)}));
    CHECK_FALSE(rs.insert({Rational(1), Rational(3), Rational(4)}));
    CHECK(rs.rank() == 2);
    CHECK(rs.contains({Rational(2), Rational(5), Rational(7)}));
    CHECK_FALSE(rs.contains({Rational(0), Rational(0), Rational(1)}));
    auto cs = rs.coords({Rational(2), Rational(5), Rational(7)});
    REQUIRE(cs.has_value());
    // reconstruct
    Vec back(3, Rational(0));
    for (size_t r = 0; r < rs.rows().size(); ++r)
        for (size_t j = 0; j < 3; ++j) back[j] += (*cs)[r] * rs.rows()[r][j];
    CHECK(back == Vec{Rational(2), Rational(5), Rational(7)});
}

TEST_CASE("kernel is certified and matches rank-nullity") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 50; ++trial) {
        Mat m = random_mat(rng, 5, 7);
        auto ker = kernel(m);
        for (const auto& k : ker) CHECK(is_zero_vec(m.apply(k)));
        CHECK(rank_of(m) + ker.size() == 7);
        // kernel vectors are independent
        RowSpace rs(7);
        for (const auto& k : ker) CHECK(rs.insert_exact(k));
    }
}

TEST_CASE("shadowed and exact rowspace agree") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Mat m = random_mat(rng, 12, 9, -20, 20);
        RowSpace fast(9, true), slow(9, false);
        for (size_t i = 0; i < m.rows(); ++i) {
            fast.insert(m.row(i));
            slow.insert_exact(m.row(i));
        }
        REQUIRE(fast.rank() == slow.rank());
        REQUIRE(fast.pivots() == slow.pivots());
        for (size_t r = 0; r < fast.rank(); ++r) REQUIRE(fast.rows()[r] == slow.rows()[r]);
    }
}

TEST_CASE("annihilator and preimage") {
    // X = span{(1,1,0)}, g = diag(1,1,0); preimage of X under g
    std::vector<Vec> span{{Rational(1), Rational(1), Rational(0)}};
    Mat ann = annihilator(span, 3);
    CHECK(ann.rows() == 2);
    Mat g(3, 3);
    g(0, 0) = Rational(1);
    g(1, 1) = Rational(1);
    auto pre = preimage(g, ann);
    // {v : g v in X} = {v : v0 = v1} which is 2-dimensional
    CHECK(pre.size() == 2);
    for (const auto& v : pre) CHECK(v[0] == v[1]);
}

TEST_CASE("minimal polynomial") {
    Mat a(3, 3);
    a(0, 0) = Rational(2);
    a(1, 1) = Rational(2);
    a(2, 2) = Rational(5);
    UniPoly mp = minimal_polynomial(a);
    UniPoly expect = UniPoly::linear_root(Rational(2)) * UniPoly::linear_root(Rational(5));
    CHECK(mp == expect);

    Mat nilp(2, 2);
    nilp(0, 1) = Rational(1);
    CHECK(minimal_polynomial(nilp) == UniPoly{Rational(0), Rational(0), Rational(1)});
    CHECK(minimal_polynomial(Mat::identity(4)) == UniPoly::linear_root(Rational(1)));
}
