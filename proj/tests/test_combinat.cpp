#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "drinfeld/weyl.hpp"

using namespace drinfeld;

namespace {

// Brute-force Bruhat oracle: the lower interval [e, y] equals the set of all
// products of subwords of any fixed reduced word of y.
std::set<Permutation> bruhat_lower_by_subwords(const Permutation& y) {
    auto word = y.reduced_word();
    int r = y.rank();
    std::set<Permutation> out;
    size_t m = word.size();
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        Permutation p = Permutation::identity(r);
        for (size_t k = 0; k < m; ++k)
            if (mask & (size_t(1) << k)) p = p * Permutation::simple(r, word[k]);
        out.insert(p);
    }
    return out;
}

} // namespace

TEST_CASE("partition transpose and dominance") {
    Partition p({4, 2, 1});
    CHECK(p.transpose() == Partition({3, 2, 1, 1}));
    CHECK(p.transpose().transpose() == p);
    CHECK(dominates(Partition({3}), Partition({2, 1})));
    CHECK_FALSE(dominates(Partition({2, 1}), Partition({3})));
    CHECK(syt_count(Partition({2, 1})) == Rational(2));
    CHECK(syt_count(Partition({3, 2})) == Rational(5));
    CHECK(conjugacy_class_size(Partition({2, 1})) == Rational(3));
    CHECK(conjugacy_class_size(Partition({3})) == Rational(2));

    for (long n = 1; n <= 8; ++n) {
        for (const auto& nu : partitions_of(n)) {
            CHECK(nu.transpose().transpose() == nu);
            for (const auto& mu : partitions_of(n)) {
                // transpose is an anti-isomorphism of dominance order
                CHECK(dominates(nu, mu) == dominates(mu.transpose(), nu.transpose()));
            }
        }
    }
}

TEST_CASE("permutation basics") {
    Permutation w({3, 1, 2});
    CHECK(w.length() == 2);
    CHECK(w.inverse() * w == Permutation::identity(3));
    CHECK(Permutation::longest(3).length() == 3);
    auto word = w.reduced_word();
    CHECK(word.size() == 2);
    Permutation rebuilt = Permutation::identity(3);
    for (int i : word) rebuilt = rebuilt * Permutation::simple(3, i);
    CHECK(rebuilt == w);
    CHECK(w.cycle_type() == Partition({3}));
    CHECK(w.sign() == 1);
}

TEST_CASE("bruhat order: stated examples and subword oracle") {
    Permutation e = Permutation::identity(3);
    for (const auto& w : all_permutations(3)) CHECK(bruhat_leq(e, w));
    Permutation s1 = Permutation::simple(3, 1);
    CHECK(bruhat_leq(s1, s1 * Permutation::simple(3, 2)));

    // count of comparable pairs in S_3 must match exhaustive subword enumeration
    long count_criterion = 0, count_oracle = 0;
    for (const auto& y : all_permutations(3)) {
        auto lower = bruhat_lower_by_subwords(y);
        count_oracle += static_cast<long>(lower.size());
        for (const auto& x : all_permutations(3)) {
            bool leq = bruhat_leq(x, y);
            CHECK(leq == (lower.count(x) > 0));
            if (leq) ++count_criterion;
        }
    }
    CHECK(count_criterion == count_oracle);
}

TEST_CASE("bruhat order is a partial order for r <= 4") {
    for (int r = 2; r <= 4; ++r) {
        auto all = all_permutations(r);
        for (const auto& x : all)
            for (const auto& y : all) {
                if (bruhat_leq(x, y) && bruhat_leq(y, x)) CHECK(x == y);
                for (const auto& z : all)
                    if (bruhat_leq(x, y) && bruhat_leq(y, z)) CHECK(bruhat_leq(x, z));
            }
    }
}

TEST_CASE("subword oracle agrees in S_4") {
    for (const auto& y : all_permutations(4)) {
        auto lower = bruhat_lower_by_subwords(y);
        for (const auto& x : all_permutations(4)) CHECK(bruhat_leq(x, y) == (lower.count(x) > 0));
    }
}

TEST_CASE("weights: dominance and action") {
    Weight lam = Weight::from_ints({2, 1});
    CHECK(lam.is_dominant());
    CHECK(lam.is_integral_dominant());
    CHECK_FALSE(Weight::from_ints({1, 2}).is_dominant());
    // rational non-integer differences are never "negative integers"
    CHECK(Weight(RatVec{Rational(0), Rational(1, 2)}).is_dominant());
    Permutation s = Permutation::simple(2, 1);
    CHECK(act(s, lam) == Weight::from_ints({1, 2}));
    CHECK(rho(3) == Weight(RatVec{Rational(1), Rational(0), Rational(-1)}));
    CHECK(segment_partition(Weight::from_ints({3, 2}), Weight::from_ints({1, 2})) ==
          Partition({2}));
}

TEST_CASE("double cosets: stated examples") {
    // trivial stabilizers: every element its own coset
    auto dc1 = double_cosets(Weight::from_ints({2, 1}), Weight::from_ints({1, 0}));
    CHECK(dc1.size() == 2);
    for (const auto& rep : dc1) {
        CHECK(rep.coset_elements.size() == 1);
        CHECK(rep.w_LR == rep.w_min);
    }

    // W_lambda = W_2: single coset {e, s1} with w_LR = s1
    auto dc2 = double_cosets(Weight::from_ints({2, 2}), Weight::from_ints({1, 0}));
    REQUIRE(dc2.size() == 1);
    CHECK(dc2[0].coset_elements.size() == 2);
    CHECK(dc2[0].w_LR == Permutation::simple(2, 1));
    CHECK(dc2[0].w_min == Permutation::identity(2));
}

TEST_CASE("double cosets partition the group; w_LR maximal and unique") {
    for (int r = 2; r <= 5; ++r) {
        std::vector<std::pair<Weight, Weight>> cases;
        if (r == 2) {
            cases = {{Weight::from_ints({2, 1}), Weight::from_ints({1, 1})}};
        } else if (r == 3) {
            cases = {{Weight::from_ints({2, 2, 1}), Weight::from_ints({1, 1, 0})},
                     {Weight::from_ints({3, 2, 1}), Weight::from_ints({2, 2, 2})}};
        } else if (r == 4) {
            cases = {{Weight::from_ints({2, 2, 1, 0}), Weight::from_ints({1, 1, 1, 0})}};
        } else {
            cases = {{Weight::from_ints({2, 2, 1, 0, 0}), Weight::from_ints({1, 1, 0, 0, 0})}};
        }
        for (const auto& [lam, mu] : cases) {
            auto dc = double_cosets(lam, mu);
            size_t total = 0;
            std::set<Permutation> seen;
            Rational rfact = factorial(r);
            for (const auto& rep : dc) {
                total += rep.coset_elements.size();
                for (const auto& w : rep.coset_elements) CHECK(seen.insert(w).second);
                for (const auto& x : rep.coset_elements) {
                    if (x != rep.w_LR) CHECK(x.length() < rep.w_LR.length());
                }
            }
            CHECK(Rational(static_cast<long>(total)) == rfact);
        }
    }
}

TEST_CASE("admissible weights: stated examples") {
    Weight lam = Weight::from_ints({2, 1});
    auto s1 = admissible_weights(lam, 2, 2);
    std::set<Weight> expect1{Weight::from_ints({0, 1}), Weight::from_ints({1, 0}),
                             Weight::from_ints({2, -1})};
    CHECK(s1 == expect1);
    auto s2 = admissible_weights(lam, 2, 1);
    CHECK(s2 == std::set<Weight>{Weight::from_ints({1, 0})});
    CHECK(admissible_weights(lam, 0) == std::set<Weight>{lam});
}

TEST_CASE("admissible weight count equals compositions count") {
    // |S(lambda; ell)| = number of weak compositions of ell into r parts each <= ell
    auto count_compositions = [](long ell, int r, long cap) {
        long count = 0;
        std::vector<long> c(static_cast<size_t>(r), 0);
        auto rec = [&](auto&& self, int i, long rest) -> void {
            if (i == r) {
                if (rest == 0) ++count;
                return;
            }
            for (long d = 0; d <= std::min(cap, rest); ++d) self(self, i + 1, rest - d);
        };
        rec(rec, 0, ell);
        return count;
    };
    for (int r = 1; r <= 3; ++r)
        for (long ell = 0; ell <= 5; ++ell) {
            Weight lam(RatVec(static_cast<size_t>(r), Rational(7)));
            CHECK(static_cast<long>(admissible_weights(lam, ell).size()) ==
                  count_compositions(ell, r, ell));
        }
}

TEST_CASE("wset_n: stated examples and W_lambda stability") {
    Weight lam = Weight::from_ints({2, 1}), mu = Weight::from_ints({1, 0});
    auto w2 = wset_n(lam, mu, 2);
    CHECK(w2.elements.size() == 2);
    CHECK(w2.ell == 2);
    auto w1 = wset_n(lam, mu, 1);
    REQUIRE(w1.elements.size() == 1);
    CHECK(w1.elements[0].is_identity());
    CHECK_THROWS_AS(wset_n(Weight::from_ints({1, 2}), mu, 2), domain_error);

    // admissibility is W_lambda-stable, checked exhaustively at small rank
    for (const auto& [l, m, n] : std::vector<std::tuple<Weight, Weight, long>>{
             {Weight::from_ints({2, 2, 1}), Weight::from_ints({1, 1, 0}), 2},
             {Weight::from_ints({3, 1, 1}), Weight::from_ints({1, 1, 0}), 3}}) {
        auto ws = wset_n(l, m, n);
        auto stab = stabilizer(l);
        std::set<Permutation> members(ws.elements.begin(), ws.elements.end());
        for (const auto& w : ws.elements)
            for (const auto& v : stab) CHECK(members.count(v * w) > 0);
    }
}
