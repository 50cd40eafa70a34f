#pragma once

// Residue arithmetic in Z_n, sequence representation, exact sumset
// computation via bit-vector subset-sum closure, zero-freeness testing
// and canonicalization up to unit multiplication.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zfseq {

// Thrown when a statement backed by a theorem fails on a valid input.
// This is not an input error: it signals either a bug or a genuine
// counterexample and must abort loudly with the attached diagnostics.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

int gcd_int(int a, int b);

// Multiplicative inverse of a unit g modulo n.
int mod_inverse(int g, int n);

// All units of Z_n in increasing order.
std::vector<int> units_mod(int n);

// A finite sequence of residues in Z_n. Insertion order is preserved;
// most operations treat the terms as a multiset, prefix/1-term
// operations are order-sensitive.
struct GroupSequence {
    int n = 2;
    std::vector<int> terms;  // each in [0, n)

    GroupSequence() = default;
    GroupSequence(int modulus, std::vector<int> raw_terms);

    int length() const { return static_cast<int>(terms.size()); }
    int sum_mod() const;
    bool operator==(const GroupSequence&) const = default;
};

// Least positive representative: the unique member of {1,...,n}
// congruent to a. In particular lpr(0) = n.
int lpr(int a, int n);

// L(alpha): sum of least positive representatives over the terms.
long long seq_L(const GroupSequence& alpha);

// n-bit vector; bit j set iff residue j is a nonempty subsequence sum.
class Sumset {
public:
    explicit Sumset(int n);

    int modulus() const { return n_; }
    bool test(int j) const;
    void set(int j);
    int count() const;
    bool contains_zero() const { return test(0); }

    // Closure step: S := S | (S + b) | {b}, with + taken mod n.
    void add_term(int b);

    // Cyclic shift: bit (j + b) mod n of the result equals bit j here.
    Sumset rotated(int b) const;

    void or_with(const Sumset& other);
    Sumset and_not(const Sumset& other) const;

    std::vector<int> elements() const;
    bool operator==(const Sumset&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> w_;
};

Sumset sumset(const GroupSequence& alpha);

// Indices (0-based, increasing) of a nonempty subsequence summing to 0.
struct ZeroSumWitness {
    std::vector<int> positions;
};

// none iff alpha is zero-free. A returned witness is the first one
// reachable in the incremental closure (earliest prefix, then the
// smallest newly added index), which makes it deterministic.
std::optional<ZeroSumWitness> find_zero_subsequence(const GroupSequence& alpha);

bool is_zero_free(const GroupSequence& alpha);

// Term-wise product g*a_i mod n; g must be a unit.
GroupSequence multiply_unit(const GroupSequence& alpha, int g);

// Representative of the equivalence class of alpha: over all units g,
// the multiset whose sorted lpr-vector is lexicographically smallest.
// Ties between units are broken by the smaller g. The returned terms
// are sorted by lpr.
GroupSequence canonical_form(const GroupSequence& alpha);

// Order of a nonzero residue: n / gcd(a, n).
int element_order(int a, int n);

}  // namespace zfseq
