#include <doctest.h>

#include <algorithm>

#include "zfseq/enumerate.hpp"
#include "zfseq/structure.hpp"

using namespace zfseq;

TEST_CASE("is_one_term_at examples") {
    CHECK(is_one_term_at(GroupSequence(6, {2, 2}), 2));
    CHECK_FALSE(is_one_term_at(GroupSequence(6, {2, 3}), 2));
    CHECK(is_one_term_at(GroupSequence(7, {3, 6, 6, 3}), 4));
    CHECK_THROWS_AS(is_one_term_at(GroupSequence(6, {2, 2}), 1), std::invalid_argument);
    CHECK_THROWS_AS(is_one_term_at(GroupSequence(6, {3, 3}), 2), std::invalid_argument);
}

TEST_CASE("progression_coset_structure examples") {
    auto st = progression_coset_structure(GroupSequence(7, {2, 2}), 2);
    CHECK(st.s == 2);
    CHECK(st.cosets.empty());

    st = progression_coset_structure(GroupSequence(9, {1, 1, 3}), 1);
    CHECK(st.s == 5);
    CHECK(st.cosets.empty());

    st = progression_coset_structure(GroupSequence(7, {2}), 2);
    CHECK(st.s == 1);
    CHECK(st.cosets.empty());
}

TEST_CASE("progression_coset_structure rejects hypothesis violations") {
    // appended element is not a 1-term
    CHECK_THROWS_AS(progression_coset_structure(GroupSequence(7, {2, 2}), 3),
                    std::invalid_argument);
    // extension has a zero sum
    CHECK_THROWS_AS(progression_coset_structure(GroupSequence(7, {2, 2}), 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(progression_coset_structure(GroupSequence(7, {}), 2),
                    std::invalid_argument);
}

TEST_CASE("progression/coset decomposition, exhaustively over small groups") {
    // For every zero-free alpha and every b making alpha u {b} zero-free
    // with b a trailing 1-term: the structure validates internally
    // (progression + full proper cosets, sum = s*b), and such b is unique.
    for (int n = 2; n <= 12; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        for (spec.length = 1; spec.length <= std::min(5, n - 1); ++spec.length) {
            for (const GroupSequence& alpha : enumerate_zero_free(spec)) {
                Sumset sig = sumset(alpha);
                std::vector<int> admissible;
                for (int b = 1; b < n; ++b) {
                    Sumset ext = sig;
                    ext.add_term(b);
                    if (ext.contains_zero() || ext.count() != sig.count() + 1)
                        continue;
                    admissible.push_back(b);
                    auto st = progression_coset_structure(alpha, b);
                    CHECK(st.b == b);
                    CHECK(st.s >= 1);
                }
                CHECK(admissible.size() <= 1);
            }
        }
    }
}

TEST_CASE("rearrange_tail_to_one_term examples") {
    CHECK(rearrange_tail_to_one_term(GroupSequence(7, {3, 6, 3, 6}), 1).terms ==
          std::vector<int>{3, 6, 6, 3});
    CHECK(rearrange_tail_to_one_term(GroupSequence(5, {1, 2, 1}), 1).terms ==
          std::vector<int>{1, 2, 1});
    CHECK_THROWS_AS(rearrange_tail_to_one_term(GroupSequence(7, {3, 6, 3, 6}), 3),
                    std::invalid_argument);
}

TEST_CASE("rearrangement keeps the prefix and the multiset") {
    for (int n = 4; n <= 10; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        for (spec.length = n / 2 + 1; spec.length <= n - 1; ++spec.length) {
            for (const GroupSequence& alpha : enumerate_zero_free(spec)) {
                for (int k = 1; k <= alpha.length() - 2; ++k) {
                    Sumset head(n);
                    for (int i = 0; i <= k; ++i) head.add_term(alpha.terms[i]);
                    if (head.count() < 2 * k + 1) continue;
                    GroupSequence out = rearrange_tail_to_one_term(alpha, k);
                    CHECK(std::equal(out.terms.begin(), out.terms.begin() + k + 1,
                                     alpha.terms.begin()));
                    auto a = out.terms, b = alpha.terms;
                    std::sort(a.begin(), a.end());
                    std::sort(b.begin(), b.end());
                    CHECK(a == b);
                    CHECK(is_one_term_at(out, out.length()));
                }
            }
        }
    }
    CHECK(rearrange_fallback_count() == 0);
}

TEST_CASE("extend_to_maximal examples") {
    // sumset {2,3,5} misses {1,4}; the smallest missing residue is 1,
    // so -1 = 5 is appended, giving a maximal sequence in one step
    CHECK(extend_to_maximal(GroupSequence(6, {2, 3})).terms ==
          std::vector<int>{2, 3, 5});
    CHECK(extend_to_maximal(GroupSequence(6, {2, 2, 3})).terms ==
          std::vector<int>{2, 2, 3});
    CHECK(extend_to_maximal(GroupSequence(3, {1})).terms == std::vector<int>{1, 1});
    CHECK_THROWS_AS(extend_to_maximal(GroupSequence(6, {3, 3})), std::invalid_argument);
}

TEST_CASE("maximal extensions cover all nonzero residues") {
    for (int n = 2; n <= 12; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        for (spec.length = 1; spec.length <= std::min(4, n - 1); ++spec.length) {
            for (const GroupSequence& alpha : enumerate_zero_free(spec)) {
                GroupSequence ext = extend_to_maximal(alpha);
                CHECK(sumset(ext).count() == n - 1);
                CHECK(std::equal(alpha.terms.begin(), alpha.terms.end(),
                                 ext.terms.begin()));
            }
        }
    }
}

TEST_CASE("decompose examples") {
    auto d = decompose(GroupSequence(7, {3, 3, 6, 6}));
    CHECK(d.base == 3);
    CHECK(d.s == std::vector<int>{1, 1, 2, 2});
    CHECK(d.S == 6);

    d = decompose(GroupSequence(7, {1, 1, 1, 1}));
    CHECK(d.base == 1);
    CHECK(d.s == std::vector<int>{1, 1, 1, 1});

    d = decompose(GroupSequence(5, {2, 2, 2}));
    CHECK(d.base == 2);
    CHECK(d.s == std::vector<int>{1, 1, 1});

    CHECK_THROWS_AS(decompose(GroupSequence(7, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(decompose(GroupSequence(6, {3, 3, 1, 1})), std::invalid_argument);
}

TEST_CASE("decompose exhibits a unit with L(g*alpha) = S < n") {
    for (int n = 4; n <= 12; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        spec.canonical_only = true;
        for (spec.length = n / 2 + 1; spec.length <= n - 1; ++spec.length) {
            for (const GroupSequence& alpha : enumerate_zero_free(spec)) {
                BehavingDecomposition d = decompose(alpha);
                int g = mod_inverse(d.base, n);
                CHECK(seq_L(multiply_unit(alpha, g)) == d.S);
                CHECK(d.S < n);
            }
        }
    }
}
