#include "zfseq/index.hpp"

#include <set>

#include "zfseq/enumerate.hpp"

namespace zfseq {

IndexReport index_of(const GroupSequence& alpha) {
    if (alpha.terms.empty())
        throw std::invalid_argument("index_of: empty sequence");
    const int n = alpha.n;
    IndexReport rep;
    bool have = false;
    for (int g : units_mod(n)) {
        long long l = 0;
        for (int t : alpha.terms)
            l += lpr(static_cast<int>((static_cast<long long>(g) * t) % n), n);
        rep.per_unit_L.emplace_back(g, l);
        if (!have || l < rep.index) {
            rep.index = l;
            rep.argmin_g = g;
            have = true;
        }
    }
    return rep;
}

bool is_minimal_zero_sequence(const GroupSequence& alpha) {
    if (alpha.terms.empty())
        throw std::invalid_argument("is_minimal_zero_sequence: empty sequence");
    if (alpha.sum_mod() != 0) return false;
    // No proper nonempty zero subsequence iff every leave-one-out
    // subsequence is zero-free.
    for (size_t i = 0; i < alpha.terms.size(); ++i) {
        GroupSequence rest;
        rest.n = alpha.n;
        rest.terms = alpha.terms;
        rest.terms.erase(rest.terms.begin() + static_cast<long>(i));
        if (!rest.terms.empty() && !is_zero_free(rest)) return false;
    }
    return true;
}

int ell_of_zn(int n, EllMode mode) {
    if (n < 2) throw std::invalid_argument("ell_of_zn: modulus must be at least 2");
    if (mode == EllMode::formula) {
        if (n == 2 || n == 3 || n == 4 || n == 5 || n == 7) return 1;
        return n / 2 + 2;
    }
    // Largest length at which some minimal zero sequence has index != n;
    // the threshold is one more than that. Index is an equivalence
    // invariant, so one representative per unit orbit suffices.
    int worst = 0;
    for (int len = 1; len <= n; ++len) {
        std::set<std::vector<int>> orbit_reps;
        for (const GroupSequence& mz : enumerate_minimal_zero(n, len)) {
            if (!orbit_reps.insert(canonical_form(mz).terms).second) continue;
            if (index_of(mz).index != n) worst = len;
        }
    }
    return worst + 1;
}

}  // namespace zfseq
