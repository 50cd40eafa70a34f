#pragma once

// Test-only brute-force oracles, independent of the bit-vector closure
// used by the library: plain power-set enumeration.

#include <functional>
#include <set>
#include <vector>

#include "zfseq/core.hpp"

namespace zfseq::testing {

// All nonempty subsequence sums mod n, by enumerating all 2^k - 1
// subsets. Only for short sequences.
inline std::set<int> powerset_sums(const GroupSequence& alpha) {
    std::set<int> sums;
    const int k = alpha.length();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        long long s = 0;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) s += alpha.terms[i];
        sums.insert(static_cast<int>(s % alpha.n));
    }
    return sums;
}

// All nonempty subset sums of a positive integer sequence.
inline std::set<long long> powerset_int_sums(const std::vector<int>& vals) {
    std::set<long long> sums;
    const int k = static_cast<int>(vals.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        long long s = 0;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) s += vals[i];
        sums.insert(s);
    }
    return sums;
}

inline bool powerset_zero_free(const GroupSequence& alpha) {
    return powerset_sums(alpha).count(0) == 0;
}

// Definitional behaving test: subset sums are exactly {1, ..., S}.
inline bool definitional_behaving(const std::vector<int>& vals) {
    long long S = 0;
    for (int v : vals) S += v;
    std::set<long long> want;
    for (long long i = 1; i <= S; ++i) want.insert(i);
    return powerset_int_sums(vals) == want;
}

// Nondecreasing multisets over [1, hi] of the given length.
inline void for_each_multiset(int hi, int length,
                              const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int minval) -> void {
        if (static_cast<int>(cur.size()) == length) {
            f(cur);
            return;
        }
        for (int v = minval; v <= hi; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

}  // namespace zfseq::testing
