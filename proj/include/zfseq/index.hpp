#pragma once

// The index of a sequence (minimum of L(g*alpha) over units g), minimal
// zero sequences, and the threshold ell(Z_n) beyond which every minimal
// zero sequence has index exactly n.

#include <utility>
#include <vector>

#include "zfseq/core.hpp"

namespace zfseq {

struct IndexReport {
    long long index = 0;
    int argmin_g = 1;  // smallest unit realizing the minimum
    std::vector<std::pair<int, long long>> per_unit_L;  // unit -> L(g*alpha)
};

// Exact minimization over all units; alpha must be nonempty.
IndexReport index_of(const GroupSequence& alpha);

// True iff alpha sums to zero and no proper nonempty subsequence does.
bool is_minimal_zero_sequence(const GroupSequence& alpha);

enum class EllMode { formula, brute };

// Least L such that every minimal zero sequence of length >= L has
// index exactly n. Formula mode: 1 for n in {2,3,4,5,7}, floor(n/2)+2
// otherwise. Brute mode derives the threshold from an exhaustive
// enumeration of minimal zero sequences.
int ell_of_zn(int n, EllMode mode);

}  // namespace zfseq
