#include "zfseq/structure.hpp"

#include <algorithm>
#include <sstream>

namespace zfseq {

namespace {

std::atomic<std::int64_t> g_fallback_count{0};

std::string dump_sequence(const GroupSequence& alpha) {
    std::ostringstream os;
    os << "n=" << alpha.n << " terms=(";
    for (size_t i = 0; i < alpha.terms.size(); ++i) {
        if (i) os << ",";
        os << alpha.terms[i];
    }
    os << ")";
    return os.str();
}

// Whether the last term of seq is a 1-term for seq.
bool ends_in_one_term(const GroupSequence& seq) {
    Sumset sig(seq.n);
    for (int i = 0; i + 1 < seq.length(); ++i) sig.add_term(seq.terms[i]);
    int before = sig.count();
    sig.add_term(seq.terms.back());
    return !sig.contains_zero() && sig.count() == before + 1;
}

}  // namespace

bool is_one_term_at(const GroupSequence& alpha, int i) {
    if (i < 2 || i > alpha.length())
        throw std::invalid_argument("is_one_term_at: index out of range");
    if (!is_zero_free(alpha))
        throw std::invalid_argument("is_one_term_at: sequence is not zero-free");
    Sumset sig(alpha.n);
    for (int j = 0; j < i - 1; ++j) sig.add_term(alpha.terms[j]);
    int before = sig.count();
    sig.add_term(alpha.terms[i - 1]);
    return sig.count() == before + 1;
}

OneTermStructure progression_coset_structure(const GroupSequence& alpha, int b) {
    const int n = alpha.n;
    int bm = ((b % n) + n) % n;
    if (alpha.terms.empty())
        throw std::invalid_argument("progression_coset_structure: empty sequence");
    if (!is_zero_free(alpha))
        throw std::invalid_argument("progression_coset_structure: sequence is not zero-free");
    GroupSequence extended = alpha;
    extended.terms.push_back(bm);
    Sumset sig = sumset(alpha);
    Sumset sig_ext = sig;
    sig_ext.add_term(bm);
    if (sig_ext.contains_zero())
        throw std::invalid_argument(
            "progression_coset_structure: extended sequence is not zero-free");
    if (sig_ext.count() != sig.count() + 1)
        throw std::invalid_argument(
            "progression_coset_structure: appended element is not a 1-term");

    const int d = gcd_int(bm, n);  // bm != 0 here, else extension had a zero sum
    const int ord = n / d;

    // progression part inside <b>
    int s = 0;
    long long cur = 0;
    while (true) {
        cur = (cur + bm) % n;
        if (cur != 0 && sig.test(static_cast<int>(cur)))
            ++s;
        else
            break;
    }
    int in_subgroup = 0;
    for (int j = d; j < n; j += d)
        if (sig.test(j)) ++in_subgroup;
    if (s < 1 || in_subgroup != s)
        throw invariant_violation(
            "progression_coset_structure: sumset within <b> is not an initial progression: " +
            dump_sequence(alpha) + " b=" + std::to_string(bm));
    if (s >= ord - 1)
        throw invariant_violation(
            "progression_coset_structure: progression length out of range: " +
            dump_sequence(alpha) + " b=" + std::to_string(bm));

    OneTermStructure out;
    out.b = bm;
    out.s = s;
    for (int c = 1; c < d; ++c) {
        int present = 0;
        for (int r = c; r < n; r += d)
            if (sig.test(r)) ++present;
        if (present == 0) continue;
        if (present != ord)
            throw invariant_violation(
                "progression_coset_structure: partial coset in sumset: " +
                dump_sequence(alpha) + " b=" + std::to_string(bm));
        out.cosets.push_back(c);
    }

    if (alpha.sum_mod() != static_cast<int>((static_cast<long long>(s) * bm) % n))
        throw invariant_violation(
            "progression_coset_structure: sum of sequence differs from s*b: " +
            dump_sequence(alpha) + " b=" + std::to_string(bm));
    return out;
}

GroupSequence rearrange_tail_to_one_term(const GroupSequence& alpha, int k) {
    const int n = alpha.n;
    const int len = alpha.length();
    if (!is_zero_free(alpha))
        throw std::invalid_argument("rearrange_tail_to_one_term: sequence is not zero-free");
    if (2 * len <= n)
        throw std::invalid_argument("rearrange_tail_to_one_term: length must exceed n/2");
    if (k < 1 || k > len - 2)
        throw std::invalid_argument("rearrange_tail_to_one_term: k out of range");
    Sumset head(n);
    for (int i = 0; i <= k; ++i) head.add_term(alpha.terms[i]);
    if (head.count() < 2 * k + 1)
        throw std::invalid_argument(
            "rearrange_tail_to_one_term: prefix sumset smaller than 2k+1");

    std::vector<int> tail(alpha.terms.begin() + k + 1, alpha.terms.end());

    // Try each distinct tail value as the final term, keeping the rest
    // in input order. Whether the last term is a 1-term depends only on
    // the multiset of the preceding terms, so this search is complete.
    std::vector<int> tried;
    for (size_t pick = 0; pick < tail.size(); ++pick) {
        if (std::find(tried.begin(), tried.end(), tail[pick]) != tried.end()) continue;
        tried.push_back(tail[pick]);
        GroupSequence cand = alpha;
        cand.terms.resize(k + 1);
        for (size_t i = 0; i < tail.size(); ++i)
            if (i != pick) cand.terms.push_back(tail[i]);
        cand.terms.push_back(tail[pick]);
        if (ends_in_one_term(cand)) return cand;
    }

    // Full permutation search, kept as the guaranteed path.
    g_fallback_count.fetch_add(1, std::memory_order_relaxed);
    std::vector<int> perm = tail;
    std::sort(perm.begin(), perm.end());
    do {
        GroupSequence cand = alpha;
        cand.terms.resize(k + 1);
        cand.terms.insert(cand.terms.end(), perm.begin(), perm.end());
        if (ends_in_one_term(cand)) return cand;
    } while (std::next_permutation(perm.begin(), perm.end()));

    throw invariant_violation(
        "rearrange_tail_to_one_term: no rearrangement ends in a 1-term: " +
        dump_sequence(alpha) + " k=" + std::to_string(k));
}

std::int64_t rearrange_fallback_count() {
    return g_fallback_count.load(std::memory_order_relaxed);
}

GroupSequence extend_to_maximal(const GroupSequence& alpha) {
    if (!is_zero_free(alpha))
        throw std::invalid_argument("extend_to_maximal: sequence is not zero-free");
    GroupSequence out = alpha;
    const int n = alpha.n;
    Sumset sig = sumset(alpha);
    while (sig.count() < n - 1) {
        int missing = -1;
        for (int g = 1; g < n; ++g) {
            if (!sig.test(g)) {
                missing = g;
                break;
            }
        }
        out.terms.push_back(n - missing);
        sig.add_term(n - missing);
        if (sig.contains_zero())
            throw invariant_violation(
                "extend_to_maximal: extension introduced a zero sum: " +
                dump_sequence(out));
    }
    return out;
}

namespace {

void validate_decomposition(const GroupSequence& alpha,
                            const BehavingDecomposition& dec) {
    const int n = alpha.n;
    std::string ctx = dump_sequence(alpha) + " base=" + std::to_string(dec.base);
    if (!is_behaving_ints(dec.s))
        throw invariant_violation("decompose: s-list is not behaving: " + ctx);
    if (dec.S >= n)
        throw invariant_violation("decompose: sum of s-list is not below n: " + ctx);
    if (element_order(dec.base, n) != n)
        throw invariant_violation("decompose: base is not a generator: " + ctx);
    if (std::find(dec.s.begin(), dec.s.end(), 1) == dec.s.end())
        throw invariant_violation("decompose: base is not a term (no s_i = 1): " + ctx);
    std::vector<int> rebuilt;
    rebuilt.reserve(dec.s.size());
    for (int sv : dec.s)
        rebuilt.push_back(static_cast<int>(
            (static_cast<long long>(sv) * dec.base) % n));
    std::sort(rebuilt.begin(), rebuilt.end());
    std::vector<int> original = alpha.terms;
    std::sort(original.begin(), original.end());
    if (rebuilt != original)
        throw invariant_violation("decompose: s-list does not rebuild the sequence: " + ctx);
}

}  // namespace

BehavingDecomposition decompose(const GroupSequence& alpha) {
    const int n = alpha.n;
    if (!is_zero_free(alpha))
        throw std::invalid_argument("decompose: sequence is not zero-free");
    if (2 * alpha.length() <= n)
        throw std::invalid_argument("decompose: length must exceed n/2");

    std::vector<int> candidates = alpha.terms;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (int a : candidates) {
        if (a == 0) continue;  // zero terms never occur in zero-free input
        auto s = g_behaving_decomposition(alpha, a);
        if (!s) continue;
        BehavingDecomposition dec;
        dec.base = a;
        dec.s = std::move(*s);
        dec.S = 0;
        for (int sv : dec.s) dec.S += sv;
        validate_decomposition(alpha, dec);
        return dec;
    }
    throw invariant_violation(
        "decompose: no term admits a behaving decomposition: " +
        dump_sequence(alpha));
}

}  // namespace zfseq
