#pragma once

// Structural operations on zero-free sequences: 1-term analysis,
// progression/coset decomposition of the sumset, rearrangement so that
// a sequence ends in a 1-term, extension to a maximal zero-free
// sequence, and the main decomposition of a long zero-free sequence as
// a behaving multiple of one of its own terms.

#include <atomic>
#include <cstdint>
#include <vector>

#include "zfseq/behaving.hpp"
#include "zfseq/core.hpp"

namespace zfseq {

// Sumset of a sequence admitting a trailing 1-term b: a progression
// {b, 2b, ..., sb} together with complete proper cosets of <b>.
struct OneTermStructure {
    int b = 0;
    int s = 0;
    std::vector<int> cosets;  // representatives in [1, gcd(b,n)-1]
};

// True iff appending the i-th term (1-based, i >= 2) grows the sumset
// of the (i-1)-prefix by exactly one element. alpha must be zero-free.
bool is_one_term_at(const GroupSequence& alpha, int i);

// Decomposes sumset(alpha) given that alpha u {b} is zero-free and b is
// a 1-term when appended last. Validates that the sum of alpha is s*b.
OneTermStructure progression_coset_structure(const GroupSequence& alpha, int b);

// Permutation of alpha fixing the first k+1 terms whose last term is a
// 1-term. Requires alpha zero-free of length > n/2, 1 <= k <= len-2 and
// |sumset(first k+1 terms)| >= 2k+1.
GroupSequence rearrange_tail_to_one_term(const GroupSequence& alpha, int k);

// How many times rearrange_tail_to_one_term had to fall through to the
// full permutation search. Whether the trailing-candidate search ever
// needs it is of interest; the counter makes the answer observable.
std::int64_t rearrange_fallback_count();

// Repeatedly appends -g for the smallest nonzero g missing from the
// sumset until the sumset is all of Z_n \ {0}.
GroupSequence extend_to_maximal(const GroupSequence& alpha);

// Every zero-free sequence of length > n/2 is behaving with respect to
// one of its terms; returns that base and the s-list (the output is
// validated post hoc and a failure raises invariant_violation).
BehavingDecomposition decompose(const GroupSequence& alpha);

}  // namespace zfseq
