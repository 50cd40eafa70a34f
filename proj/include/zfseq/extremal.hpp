#pragma once

// Extremal statistics over zero-free sequences: sharp multiplicity
// bounds for terms and generators, the function h(n,k), Olson's
// constant, and the classification of long zero-free sequences by the
// multiplicities of 1 and 2 in a sum-minimizing representative.

#include <vector>

#include "zfseq/core.hpp"

namespace zfseq {

struct ExtremalRecord {
    int n = 0;
    int ell = 0;
    int value = 0;             // brute-force extremal value
    GroupSequence witness;     // lexicographically smallest optimum
    int bound_formula = 0;     // closed-form value for the same cell
};

// max(2l-n+1, l - floor((n-1)/3)).
int term_multiplicity_bound(int n, int ell);

// 2l-n+1 for even n; the term bound for odd n.
int generator_multiplicity_bound(int n, int ell);

// Minimum over zero-free sequences of length ell of the maximum term
// multiplicity, by exhaustive search over canonical representatives.
// Requires n/2 < ell < n.
ExtremalRecord min_max_term_multiplicity(int n, int ell);

// Same, restricted to the multiplicity of terms of order n.
ExtremalRecord min_max_generator_multiplicity(int n, int ell);

struct HnkRecord {
    int n = 0;
    int k = 0;
    int value = 0;
    GroupSequence witness;  // zero-free, >= k distinct terms, length value-1
};

// Whether (n, k) lies in the proven range k <= (sqrt(4n-3)+1)/2.
bool h_formula_in_range(int n, int k);

// n - (k^2-k)/2; throws std::domain_error outside the proven range.
int h_of_formula(int n, int k);

// Least length forcing a zero sum on every sequence with >= k distinct
// terms, by searching for the longest zero-free sequence with >= k
// distinct terms.
HnkRecord h_of_brute(int n, int k);

struct ConjectureRow {
    int n = 0, k = 0;
    int brute = 0;
    int formula = 0;
    bool proven_range = false;
    bool match = false;
};

// Compares brute h(n,k) against n - (k^2-k)/2 for every n <= n_max and
// every k up to (sqrt(8n-7)-1)/2. Mismatches beyond the proven range
// are findings, not errors.
std::vector<ConjectureRow> conjecture_scan(int n_max);

// Least t such that every t-element subset of Z_n has a nonempty
// zero-sum subset.
int olson_brute(int n);

// floor((sqrt(8n-7)-1)/2) + 1, from the subset {1, ..., k}.
int olson_lower_bound(int n);

enum class Form { Form1, Form2a, Form2b };

struct ClassificationTag {
    Form form = Form::Form1;
    int u = 0;  // multiplicity of 1 in the sum-minimizing representative
    int v = 0;  // multiplicity of 2
    GroupSequence beta;  // remainder without ones (and twos for Form2b)
};

// The length threshold separating the two classification regimes.
int classification_threshold(int n);

// Classifies a zero-free sequence with n/2 < length < n by the shape of
// its sum-minimizing representative; the asserted inequalities failing
// raises invariant_violation.
ClassificationTag classify_form(const GroupSequence& alpha);

}  // namespace zfseq
