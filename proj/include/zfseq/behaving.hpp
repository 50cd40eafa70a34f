#pragma once

// Behaving positive integer sequences and the g-behaving decomposition
// test for group sequences. A positive integer sequence with sum S is
// behaving when its subset sums realize exactly {1, ..., S}; the
// nondecreasing-order criterion (s_1 = 1 and s_{i+1} <= 1 + s_1 + ... + s_i)
// is an equivalent description.

#include <optional>
#include <vector>

#include "zfseq/core.hpp"

namespace zfseq {

// Base term a together with the positive integer list witnessing that a
// group sequence equals (s_1 a, ..., s_k a) with (s_i) behaving and
// S = sum s_i < ord(a).
struct BehavingDecomposition {
    int base = 0;
    std::vector<int> s;  // order matches the decomposed sequence
    long long S = 0;
};

// Nondecreasing-order criterion; the input order is immaterial.
// Throws on an empty or nonpositive input.
bool is_behaving_ints(const std::vector<int>& s);

// If every term t of alpha is s*a with 1 <= s < ord(a), and the
// resulting s-list is behaving with sum < ord(a), returns the s-list
// (order matching alpha); otherwise nullopt. a must be nonzero.
std::optional<std::vector<int>> g_behaving_decomposition(
    const GroupSequence& alpha, int a);

}  // namespace zfseq
