#include "zfseq/extremal.hpp"

#include <algorithm>
#include <sstream>

#include "zfseq/enumerate.hpp"
#include "zfseq/index.hpp"
#include "zfseq/structure.hpp"

namespace zfseq {

namespace {

void require_long_range(int n, int ell, const char* who) {
    if (n < 2 || 2 * ell <= n || ell >= n)
        throw std::invalid_argument(std::string(who) +
                                    ": need n/2 < ell < n");
}

int max_multiplicity(const std::vector<int>& sorted_terms) {
    int best = 0, run = 0;
    for (size_t i = 0; i < sorted_terms.size(); ++i) {
        run = (i > 0 && sorted_terms[i] == sorted_terms[i - 1]) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

int max_generator_multiplicity(const GroupSequence& seq) {
    int best = 0, run = 0;
    for (size_t i = 0; i < seq.terms.size(); ++i) {
        run = (i > 0 && seq.terms[i] == seq.terms[i - 1]) ? run + 1 : 1;
        if (gcd_int(seq.terms[i], seq.n) == 1) best = std::max(best, run);
    }
    return best;
}

template <typename Stat>
ExtremalRecord brute_minimum(int n, int ell, const Stat& stat, int formula) {
    ExtremalRecord rec;
    rec.n = n;
    rec.ell = ell;
    rec.bound_formula = formula;
    EnumerationSpec spec;
    spec.n = n;
    spec.length = ell;
    spec.canonical_only = true;  // the statistic is an equivalence invariant
    bool have = false;
    for_each_zero_free(spec, [&](const GroupSequence& s) {
        int v = stat(s);
        if (!have || v < rec.value) {
            rec.value = v;
            rec.witness = s;
            have = true;
        }
    });
    if (!have)
        throw std::invalid_argument("extremal: no zero-free sequence of this length");
    return rec;
}

}  // namespace

int term_multiplicity_bound(int n, int ell) {
    require_long_range(n, ell, "term_multiplicity_bound");
    return std::max(2 * ell - n + 1, ell - (n - 1) / 3);
}

int generator_multiplicity_bound(int n, int ell) {
    require_long_range(n, ell, "generator_multiplicity_bound");
    if (n % 2 == 0) return 2 * ell - n + 1;
    return term_multiplicity_bound(n, ell);
}

ExtremalRecord min_max_term_multiplicity(int n, int ell) {
    require_long_range(n, ell, "min_max_term_multiplicity");
    return brute_minimum(
        n, ell, [](const GroupSequence& s) { return max_multiplicity(s.terms); },
        term_multiplicity_bound(n, ell));
}

ExtremalRecord min_max_generator_multiplicity(int n, int ell) {
    require_long_range(n, ell, "min_max_generator_multiplicity");
    return brute_minimum(
        n, ell, [](const GroupSequence& s) { return max_generator_multiplicity(s); },
        generator_multiplicity_bound(n, ell));
}

bool h_formula_in_range(int n, int k) {
    // k <= (sqrt(4n-3)+1)/2  <=>  k^2 - k + 1 <= n
    return k >= 1 && n >= k && static_cast<long long>(k) * k - k + 1 <= n;
}

int h_of_formula(int n, int k) {
    if (k < 1 || n < k)
        throw std::invalid_argument("h_of_formula: need n >= k >= 1");
    if (!h_formula_in_range(n, k))
        throw std::domain_error("h_of_formula: k out of proven range");
    return n - (k * k - k) / 2;
}

namespace {

// Longest zero-free sequence per minimum distinct-term count, plus the
// lexicographically smallest witness of each maximum length. Found by
// one walk over all zero-free multisets of Z_n.
struct HnkProfile {
    std::vector<int> max_len;             // index k, 1-based
    std::vector<GroupSequence> witness;
};

void profile_dfs(int n, std::vector<int>& cur, const Sumset& sig, int minval,
                 int distinct, HnkProfile& prof) {
    for (int v = minval; v < n; ++v) {
        Sumset next = sig;
        next.add_term(v);
        if (next.contains_zero()) continue;
        cur.push_back(v);
        int d = distinct + ((cur.size() == 1 || cur[cur.size() - 2] != v) ? 1 : 0);
        int len = static_cast<int>(cur.size());
        for (int kk = 1; kk <= d; ++kk) {
            if (len > prof.max_len[kk]) {
                prof.max_len[kk] = len;
                prof.witness[kk] = GroupSequence(n, cur);
            }
        }
        profile_dfs(n, cur, next, v, d, prof);
        cur.pop_back();
    }
}

HnkProfile hnk_profile(int n) {
    HnkProfile prof;
    prof.max_len.assign(n + 1, 0);
    prof.witness.assign(n + 1, GroupSequence());
    std::vector<int> cur;
    profile_dfs(n, cur, Sumset(n), 1, 0, prof);
    return prof;
}

int max_conjecture_k(int n) {
    // largest k with k <= (sqrt(8n-7)-1)/2, i.e. k^2 + k + 2 <= 2n
    int k = 0;
    while (static_cast<long long>(k + 1) * (k + 2) + 2 <= 2LL * n) ++k;
    return k;
}

}  // namespace

HnkRecord h_of_brute(int n, int k) {
    if (k < 1 || n < k)
        throw std::invalid_argument("h_of_brute: need n >= k >= 1");
    HnkProfile prof = hnk_profile(n);
    HnkRecord rec;
    rec.n = n;
    rec.k = k;
    int longest = (k <= n) ? prof.max_len[k] : 0;
    rec.value = std::max(k, longest + 1);
    rec.witness = prof.witness[k];
    return rec;
}

std::vector<ConjectureRow> conjecture_scan(int n_max) {
    std::vector<ConjectureRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        HnkProfile prof = hnk_profile(n);
        const int kmax = max_conjecture_k(n);
        for (int k = 1; k <= kmax && k <= n; ++k) {
            ConjectureRow row;
            row.n = n;
            row.k = k;
            row.brute = std::max(k, prof.max_len[k] + 1);
            row.formula = n - (k * k - k) / 2;
            row.proven_range = h_formula_in_range(n, k);
            row.match = (row.brute == row.formula);
            rows.push_back(row);
        }
    }
    return rows;
}

namespace {

int olson_dfs(int n, int minval, const Sumset& sig, int size) {
    int best = size;
    for (int v = minval; v < n; ++v) {
        Sumset next = sig;
        next.add_term(v);
        if (next.contains_zero()) continue;
        best = std::max(best, olson_dfs(n, v + 1, next, size + 1));
    }
    return best;
}

}  // namespace

int olson_brute(int n) {
    if (n < 2) throw std::invalid_argument("olson_brute: modulus must be at least 2");
    // A subset containing 0 trivially has a zero-sum subset, so the
    // largest zero-free subset lives in the nonzero residues.
    return olson_dfs(n, 1, Sumset(n), 0) + 1;
}

int olson_lower_bound(int n) {
    if (n < 2) throw std::invalid_argument("olson_lower_bound: modulus must be at least 2");
    return max_conjecture_k(n) + 1;
}

int classification_threshold(int n) {
    return n - 1 - (n - 1) / 3;
}

ClassificationTag classify_form(const GroupSequence& alpha) {
    const int n = alpha.n;
    const int ell = alpha.length();
    require_long_range(n, ell, "classify_form");
    if (!is_zero_free(alpha))
        throw std::invalid_argument("classify_form: sequence is not zero-free");

    // Sum-minimizing representative; its lpr-vector sums to Index < n.
    IndexReport idx = index_of(alpha);
    GroupSequence rep = multiply_unit(alpha, idx.argmin_g);
    std::vector<int> vals;
    vals.reserve(rep.terms.size());
    for (int t : rep.terms) vals.push_back(lpr(t, n));
    std::sort(vals.begin(), vals.end());

    std::ostringstream ctx;
    ctx << "n=" << n << " ell=" << ell << " rep_sum=" << idx.index;
    if (idx.index >= n)
        throw invariant_violation("classify_form: representative sum not below n: " +
                                  ctx.str());

    ClassificationTag tag;
    tag.u = static_cast<int>(std::count(vals.begin(), vals.end(), 1));
    tag.v = static_cast<int>(std::count(vals.begin(), vals.end(), 2));
    long long L_rest_1 = 0, L_rest_12 = 0;
    std::vector<int> beta1, beta12;
    for (int v : vals) {
        if (v >= 2) {
            beta1.push_back(v);
            L_rest_1 += v;
        }
        if (v >= 3) {
            beta12.push_back(v);
            L_rest_12 += v;
        }
    }

    if (ell >= classification_threshold(n)) {
        tag.form = Form::Form1;
        tag.beta = GroupSequence(n, beta1);
        if (tag.u < 2 * ell - n + 1 || L_rest_1 > n - 1 - tag.u)
            throw invariant_violation("classify_form: long-range inequalities failed: " +
                                      ctx.str());
    } else if (2 * tag.u > ell) {
        tag.form = Form::Form2a;
        tag.beta = GroupSequence(n, beta1);
        if (L_rest_1 > n - 1 - tag.u)
            throw invariant_violation("classify_form: many-ones inequalities failed: " +
                                      ctx.str());
    } else {
        tag.form = Form::Form2b;
        tag.beta = GroupSequence(n, beta12);
        if (std::min(tag.u, tag.v) < 2 * ell - n + 1 ||
            L_rest_12 > n - 1 - tag.u - 2LL * tag.v)
            throw invariant_violation("classify_form: ones-and-twos inequalities failed: " +
                                      ctx.str());
    }
    return tag;
}

}  // namespace zfseq
