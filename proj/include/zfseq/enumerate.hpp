#pragma once

// Exhaustive enumeration of zero-free sequences and minimal zero
// sequences, with canonical-form deduplication, plus the brute-force
// verification harnesses built on top of it. The search runs over
// nondecreasing term lists and prunes a branch the moment its running
// sumset hits zero; zero-freeness is hereditary, so the pruning is
// exact. OpenMP kernels split the tree by its first two terms; serial
// reference implementations are kept alongside for testing.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zfseq/core.hpp"

namespace zfseq {

struct EnumerationSpec {
    int n = 2;
    int length = 1;
    bool canonical_only = false;  // keep only fixed points of canonical_form
    int min_distinct = 0;         // keep only sequences with >= this many distinct terms
};

// Serial reference: every zero-free multiset of the given length,
// exactly once, as nondecreasing term lists in lexicographic order.
std::vector<GroupSequence> enumerate_zero_free(const EnumerationSpec& spec);

// Streaming serial variant; the visitor sees the same order.
void for_each_zero_free(const EnumerationSpec& spec,
                        const std::function<void(const GroupSequence&)>& visit);

std::uint64_t count_zero_free(const EnumerationSpec& spec);

// OpenMP kernels. Both produce exactly the serial order/count: the tree
// is split by the first two terms, workers own disjoint prefixes, and
// the per-prefix results are concatenated in prefix order.
std::vector<GroupSequence> enumerate_zero_free_parallel(const EnumerationSpec& spec);
std::uint64_t count_zero_free_parallel(const EnumerationSpec& spec);

// Minimal zero sequences of the given length, as sorted term lists in
// lexicographic order: each zero-free multiset of length len-1 extended
// by the negation of its sum, deduplicated.
std::vector<GroupSequence> enumerate_minimal_zero(int n, int len);

struct Violation {
    int n = 0;
    std::vector<int> terms;
    std::string reason;
};

struct VerificationReport {
    int n_lo = 0, n_hi = 0;
    std::uint64_t sequences_checked = 0;
    std::vector<Violation> violations;
    double elapsed_seconds = 0;

    bool verified() const { return violations.empty(); }
};

// For each n in [n_lo, n_hi] and each canonical zero-free sequence of
// length > n/2: Index < n, and decompose succeeds with validated
// output. Violations are collected, not thrown.
VerificationReport verify_theorem_major(int n_lo, int n_hi, bool parallel = true);

// The short zero-free families 2^{n/2-1} 3 (even n >= 6) and
// 2^{(n-5)/2} 3^2 (odd n >= 9) with L(g*alpha) > n for every unit g,
// and their minimal-zero variants with one appended -1 and index 2n.
struct FamilyReport {
    int n = 0;
    GroupSequence family;
    bool zero_free = false;
    bool length_ok = false;
    long long min_L_over_units = 0;  // > n expected
    GroupSequence minimal_variant;
    bool variant_minimal_zero = false;
    long long variant_index = 0;  // == 2n expected

    bool ok() const;
};

FamilyReport counterexample_families(int n);

}  // namespace zfseq
