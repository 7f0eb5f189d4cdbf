#include <catch2/catch_amalgamated.hpp>

#include "drinfeld/wmodule.hpp"

using namespace drinfeld;

TEST_CASE("murnaghan-nakayama: stated examples") {
    // trivial representation: 1 on every class
    for (long ell = 1; ell <= 5; ++ell)
        for (const auto& cls : partitions_of(ell))
            CHECK(mn_character(Partition({ell}), cls) == Rational(1));

    // sign representation on a transposition class: -1
    for (long ell = 2; ell <= 5; ++ell) {
        std::vector<long> tclass{2};
        for (long i = 2; i < ell; ++i) tclass.push_back(1);
        CHECK(mn_character(Partition(std::vector<long>(static_cast<size_t>(ell), 1)),
                           Partition::from_multiset(tclass)) == Rational(-1));
    }

    CHECK_THROWS_AS(mn_character(Partition({2, 1}), Partition({2})), domain_error);
}

TEST_CASE("chi^(2,1) matches traces of the explicit Specht module") {
    WModule m = specht_module(Partition({2, 1}));
    REQUIRE(m.dim == 2);
    // classes (1^3), (2,1), (3)
    CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == Rational(2));
    CHECK(mn_character(Partition({2, 1}), Partition({2, 1})) == Rational(0));
    CHECK(mn_character(Partition({2, 1}), Partition({3})) == Rational(-1));
    CHECK(Mat::identity(m.dim).trace() == Rational(2));
    CHECK(m.gen(1).trace() == Rational(0));
    CHECK((m.gen(1) * m.gen(2)).trace() == Rational(-1));
}

TEST_CASE("specht modules: dimensions and relations") {
    CHECK(specht_module(Partition({4})).dim == 1);
    for (long i = 1; i <= 3; ++i)
        CHECK(specht_module(Partition({4})).gen(static_cast<int>(i)) == Mat::identity(1));
    CHECK(specht_module(Partition({2, 1})).dim == 2); // 3!/(3*1*1)
    // braid and involution invariants are asserted inside specht_module;
    // exercise every shape up to ell = 6
    for (long ell = 1; ell <= 6; ++ell) {
        Rational sumsq(0);
        for (const auto& nu : partitions_of(ell)) {
            WModule m = specht_module(nu);
            CHECK(m.is_representation());
            CHECK(Rational(static_cast<long>(m.dim)) == syt_count(nu));
            sumsq += Rational(static_cast<long>(m.dim)) * Rational(static_cast<long>(m.dim));
        }
        CHECK(sumsq == factorial(ell)); // sum of dim^2 = ell!
    }
}

TEST_CASE("character table column orthogonality for ell <= 6") {
    for (long ell = 1; ell <= 6; ++ell) {
        const CharacterTable& t = character_table(ell);
        size_t n = t.irreducibles.size();
        for (size_t c1 = 0; c1 < n; ++c1)
            for (size_t c2 = 0; c2 < n; ++c2) {
                Rational s(0);
                for (size_t i = 0; i < n; ++i) s += t.chi[i][c1] * t.chi[i][c2];
                if (c1 == c2)
                    CHECK(s == factorial(ell) / t.class_sizes[c1]);
                else
                    CHECK(s.is_zero());
            }
    }
}

TEST_CASE("decompose: stated examples") {
    // regular module of W_3: multiplicities equal dimensions
    auto reg = decompose(regular_wmodule(3));
    CHECK(reg.multiplicity(Partition({3})) == 1);
    CHECK(reg.multiplicity(Partition({2, 1})) == 2);
    CHECK(reg.multiplicity(Partition({1, 1, 1})) == 1);

    // permutation module on W_2/(W_1 x W_1) = regular module of W_2
    auto perm = decompose(regular_wmodule(2));
    CHECK(perm.multiplicity(Partition({2})) == 1);
    CHECK(perm.multiplicity(Partition({1, 1})) == 1);

    auto triv = decompose(trivial_wmodule(5));
    CHECK(triv.multiplicities == std::map<Partition, long>{{Partition({5}), 1}});
}

TEST_CASE("decompose of specht is a single isotypic component, |nu| <= 5") {
    for (long ell = 1; ell <= 5; ++ell)
        for (const auto& nu : partitions_of(ell)) {
            auto dec = decompose(specht_module(nu));
            CHECK(dec.multiplicities == std::map<Partition, long>{{nu, 1}});
        }
}

TEST_CASE("decompose is additive on direct sums") {
    WModule a = specht_module(Partition({2, 1}));
    WModule b = specht_module(Partition({3}));
    auto dec = decompose(direct_sum(direct_sum(a, b), a));
    CHECK(dec.multiplicity(Partition({2, 1})) == 2);
    CHECK(dec.multiplicity(Partition({3})) == 1);
    CHECK(dec.multiplicity(Partition({1, 1, 1})) == 0);
}

TEST_CASE("decompose rejects non-representations") {
    WModule bad = regular_wmodule(3);
    bad.gens[0](0, 0) += Rational(1);
    CHECK_THROWS_AS(decompose(bad), domain_error);
}

TEST_CASE("isotypic projector: stated examples") {
    WModule reg2 = regular_wmodule(2);
    Mat p = isotypic_projector(reg2, Partition({2}));
    CHECK(rank_of(p) == 1); // symmetrizer line
    CHECK(p * p == p);

    // rank = mult * dim on the regular module of W_3 for nu = (2,1): 2*2 = 4
    WModule reg3 = regular_wmodule(3);
    Mat p21 = isotypic_projector(reg3, Partition({2, 1}));
    CHECK(rank_of(p21) == 4);
    CHECK(p21 * p21 == p21);
}
