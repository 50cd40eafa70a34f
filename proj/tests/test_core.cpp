#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zfseq/core.hpp"
#include "zfseq/enumerate.hpp"

using namespace zfseq;
using zfseq::testing::powerset_sums;
using zfseq::testing::powerset_zero_free;

TEST_CASE("lpr maps the zero class to n") {
    CHECK(lpr(0, 6) == 6);
    CHECK(lpr(3, 6) == 3);
    CHECK(lpr(4, 6) == 4);
    CHECK(lpr(-1, 6) == 5);
}

TEST_CASE("seq_L sums least positive representatives") {
    CHECK(seq_L(GroupSequence(6, {2, 2, 3})) == 7);
    CHECK(seq_L(GroupSequence(7, {1, 1, 2, 2})) == 6);
    CHECK(seq_L(GroupSequence(5, {})) == 0);
    CHECK(seq_L(GroupSequence(5, {0})) == 5);
}

TEST_CASE("sumset examples") {
    CHECK(sumset(GroupSequence(6, {2, 3})).elements() == std::vector<int>{2, 3, 5});
    CHECK(sumset(GroupSequence(7, {3, 3, 6, 6})).elements() ==
          std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(sumset(GroupSequence(6, {2, 2, 3})).elements() ==
          std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("sumset agrees with power-set enumeration") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 30);
        int len = static_cast<int>(rng() % 11);
        std::vector<int> terms(len);
        for (int& t : terms) t = static_cast<int>(rng() % n);
        GroupSequence alpha(n, terms);
        auto want = powerset_sums(alpha);
        auto got = sumset(alpha).elements();
        CHECK(std::set<int>(got.begin(), got.end()) == want);
    }
}

TEST_CASE("sumset handles multi-word moduli") {
    // n = 200 needs four 64-bit words
    GroupSequence alpha(200, {150, 199, 60});
    auto want = powerset_sums(alpha);
    auto got = sumset(alpha).elements();
    CHECK(std::set<int>(got.begin(), got.end()) == want);
    CHECK(is_zero_free(alpha) == powerset_zero_free(alpha));

    // and a large modulus point check
    GroupSequence big(1 << 20, {1, (1 << 20) - 1});
    CHECK_FALSE(is_zero_free(big));
}

TEST_CASE("find_zero_subsequence examples and witness validity") {
    auto w = find_zero_subsequence(GroupSequence(6, {1, 2, 3}));
    REQUIRE(w.has_value());
    CHECK(w->positions == std::vector<int>{0, 1, 2});

    CHECK_FALSE(find_zero_subsequence(GroupSequence(6, {2, 2, 3})).has_value());

    w = find_zero_subsequence(GroupSequence(6, {3, 3}));
    REQUIRE(w.has_value());
    CHECK(w->positions == std::vector<int>{0, 1});
}

TEST_CASE("witnesses always sum to zero and match zero-freeness") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 20);
        int len = static_cast<int>(rng() % 9);
        std::vector<int> terms(len);
        for (int& t : terms) t = static_cast<int>(rng() % n);
        GroupSequence alpha(n, terms);
        auto w = find_zero_subsequence(alpha);
        CHECK(w.has_value() == !powerset_zero_free(alpha));
        if (w) {
            REQUIRE_FALSE(w->positions.empty());
            long long s = 0;
            for (int pos : w->positions) {
                REQUIRE(pos >= 0);
                REQUIRE(pos < len);
                s += alpha.terms[pos];
            }
            CHECK(s % n == 0);
            // positions are distinct
            auto sorted = w->positions;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        }
    }
}

TEST_CASE("multiply_unit examples") {
    CHECK(multiply_unit(GroupSequence(7, {3, 3, 6, 6}), 5).terms ==
          std::vector<int>{1, 1, 2, 2});
    CHECK(multiply_unit(GroupSequence(9, {1, 4}), 1).terms == std::vector<int>{1, 4});
    CHECK(multiply_unit(GroupSequence(6, {2, 2, 3}), 5).terms ==
          std::vector<int>{4, 4, 3});
    CHECK_THROWS_AS(multiply_unit(GroupSequence(6, {1}), 2), std::invalid_argument);
}

TEST_CASE("unit multiplication maps the sumset pointwise") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 16);
        int len = 1 + static_cast<int>(rng() % 7);
        std::vector<int> terms(len);
        for (int& t : terms) t = static_cast<int>(rng() % n);
        GroupSequence alpha(n, terms);
        for (int g : units_mod(n)) {
            auto mapped = sumset(multiply_unit(alpha, g)).elements();
            std::set<int> expect;
            for (int e : sumset(alpha).elements())
                expect.insert(static_cast<int>((static_cast<long long>(g) * e) % n));
            CHECK(std::set<int>(mapped.begin(), mapped.end()) == expect);
        }
    }
}

TEST_CASE("canonical_form examples") {
    CHECK(canonical_form(GroupSequence(7, {3, 3, 6, 6})).terms ==
          std::vector<int>{1, 1, 2, 2});
    CHECK(canonical_form(GroupSequence(7, {1, 1, 2, 2})).terms ==
          std::vector<int>{1, 1, 2, 2});
    CHECK(canonical_form(GroupSequence(6, {4, 4, 3})).terms ==
          std::vector<int>{2, 2, 3});
}

TEST_CASE("canonical_form is idempotent and orbit invariant") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 14);
        int len = 1 + static_cast<int>(rng() % 6);
        std::vector<int> terms(len);
        for (int& t : terms) t = static_cast<int>(rng() % n);
        GroupSequence alpha(n, terms);
        GroupSequence canon = canonical_form(alpha);
        CHECK(canonical_form(canon).terms == canon.terms);
        for (int g : units_mod(n))
            CHECK(canonical_form(multiply_unit(alpha, g)).terms == canon.terms);
        std::shuffle(terms.begin(), terms.end(), rng);
        CHECK(canonical_form(GroupSequence(n, terms)).terms == canon.terms);
    }
}

TEST_CASE("element_order") {
    CHECK(element_order(2, 6) == 3);
    CHECK(element_order(3, 7) == 7);
    CHECK(element_order(8, 12) == 3);
    CHECK_THROWS_AS(element_order(0, 6), std::invalid_argument);
}

TEST_CASE("prefix sumsets of a zero-free sequence grow strictly") {
    // also: the i-th prefix sum lands in the new part of the sumset
    for (int n = 2; n <= 10; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        for (spec.length = 2; spec.length <= std::min(5, n - 1); ++spec.length) {
            for (const GroupSequence& alpha : enumerate_zero_free(spec)) {
                Sumset sig(n);
                sig.add_term(alpha.terms[0]);
                long long prefix_sum = alpha.terms[0];
                for (int i = 2; i <= alpha.length(); ++i) {
                    int before = sig.count();
                    bool in_before;
                    prefix_sum += alpha.terms[i - 1];
                    in_before = sig.test(static_cast<int>(prefix_sum % n));
                    sig.add_term(alpha.terms[i - 1]);
                    CHECK(sig.count() >= before + 1);
                    CHECK_FALSE(in_before);
                    CHECK(sig.test(static_cast<int>(prefix_sum % n)));
                }
            }
        }
    }
}

TEST_CASE("sequence construction reduces negatives mod n") {
    GroupSequence alpha(6, {-1, -4, 7});
    CHECK(alpha.terms == std::vector<int>{5, 2, 1});
    CHECK_THROWS_AS(GroupSequence(1, {0}), std::invalid_argument);
}
