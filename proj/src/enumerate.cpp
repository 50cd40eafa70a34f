#include "zfseq/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "zfseq/index.hpp"
#include "zfseq/structure.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zfseq {

namespace {

int distinct_count(const std::vector<int>& sorted_terms) {
    int d = 0;
    for (size_t i = 0; i < sorted_terms.size(); ++i)
        if (i == 0 || sorted_terms[i] != sorted_terms[i - 1]) ++d;
    return d;
}

bool keep(const EnumerationSpec& spec, const std::vector<int>& cur) {
    if (spec.min_distinct > 0 && distinct_count(cur) < spec.min_distinct)
        return false;
    if (spec.canonical_only) {
        GroupSequence seq;
        seq.n = spec.n;
        seq.terms = cur;
        if (canonical_form(seq).terms != cur) return false;
    }
    return true;
}

// Nondecreasing lists over [minval, n-1]; a branch dies when its
// running sumset hits zero or can no longer stay below n-1 elements by
// the target length (each appended term grows the sumset).
void dfs(const EnumerationSpec& spec, std::vector<int>& cur, const Sumset& sig,
         int minval, const std::function<void(const GroupSequence&)>& visit) {
    const int n = spec.n;
    if (static_cast<int>(cur.size()) == spec.length) {
        if (keep(spec, cur)) {
            GroupSequence seq;
            seq.n = n;
            seq.terms = cur;
            visit(seq);
        }
        return;
    }
    const int remaining = spec.length - static_cast<int>(cur.size());
    if (sig.count() + remaining > n - 1) return;
    for (int v = minval; v < n; ++v) {
        Sumset next = sig;
        next.add_term(v);
        if (next.contains_zero()) continue;
        cur.push_back(v);
        dfs(spec, cur, next, v, visit);
        cur.pop_back();
    }
}

}  // namespace

void for_each_zero_free(const EnumerationSpec& spec,
                        const std::function<void(const GroupSequence&)>& visit) {
    if (spec.n < 2) throw std::invalid_argument("enumeration: modulus must be at least 2");
    if (spec.length < 0) throw std::invalid_argument("enumeration: negative length");
    if (spec.length == 0) {
        GroupSequence empty;
        empty.n = spec.n;
        if (keep(spec, empty.terms) && spec.min_distinct <= 0) visit(empty);
        return;
    }
    std::vector<int> cur;
    cur.reserve(spec.length);
    dfs(spec, cur, Sumset(spec.n), 1, visit);
}

std::vector<GroupSequence> enumerate_zero_free(const EnumerationSpec& spec) {
    std::vector<GroupSequence> out;
    for_each_zero_free(spec, [&](const GroupSequence& s) { out.push_back(s); });
    return out;
}

std::uint64_t count_zero_free(const EnumerationSpec& spec) {
    std::uint64_t c = 0;
    for_each_zero_free(spec, [&](const GroupSequence&) { ++c; });
    return c;
}

namespace {

// Zero-free nondecreasing two-term prefixes, in lexicographic order.
std::vector<std::pair<int, int>> prefix_jobs(int n) {
    std::vector<std::pair<int, int>> jobs;
    for (int a = 1; a < n; ++a) {
        Sumset sa(n);
        sa.add_term(a);
        if (sa.contains_zero()) continue;
        for (int b = a; b < n; ++b) {
            Sumset sab = sa;
            sab.add_term(b);
            if (sab.contains_zero()) continue;
            jobs.emplace_back(a, b);
        }
    }
    return jobs;
}

template <typename PerLeaf>
void run_prefix_split(const EnumerationSpec& spec, const PerLeaf& per_leaf) {
    const auto jobs = prefix_jobs(spec.n);
    const int J = static_cast<int>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < J; ++j) {
        auto [a, b] = jobs[j];
        Sumset sig(spec.n);
        sig.add_term(a);
        sig.add_term(b);
        std::vector<int> cur{a, b};
        dfs(spec, cur, sig, b,
            [&](const GroupSequence& s) { per_leaf(j, s); });
    }
}

}  // namespace

std::vector<GroupSequence> enumerate_zero_free_parallel(const EnumerationSpec& spec) {
    if (spec.length < 2) return enumerate_zero_free(spec);
    std::vector<std::vector<GroupSequence>> buckets(prefix_jobs(spec.n).size());
    run_prefix_split(spec, [&](int j, const GroupSequence& s) {
        buckets[j].push_back(s);
    });
    std::vector<GroupSequence> out;
    for (auto& b : buckets)
        out.insert(out.end(), std::make_move_iterator(b.begin()),
                   std::make_move_iterator(b.end()));
    return out;
}

std::uint64_t count_zero_free_parallel(const EnumerationSpec& spec) {
    if (spec.length < 2) return count_zero_free(spec);
    const auto jobs = prefix_jobs(spec.n);
    std::vector<std::uint64_t> per_job(jobs.size(), 0);
    run_prefix_split(spec, [&](int j, const GroupSequence&) { ++per_job[j]; });
    std::uint64_t total = 0;
    for (std::uint64_t c : per_job) total += c;
    return total;
}

std::vector<GroupSequence> enumerate_minimal_zero(int n, int len) {
    if (n < 2) throw std::invalid_argument("enumerate_minimal_zero: modulus must be at least 2");
    if (len < 1) throw std::invalid_argument("enumerate_minimal_zero: length must be positive");
    std::vector<GroupSequence> out;
    if (len == 1) {
        // (0) is the only one-term zero sequence
        GroupSequence z;
        z.n = n;
        z.terms = {0};
        out.push_back(z);
        return out;
    }
    // A zero-free multiset of length len-1 plus the negation of its sum
    // is a minimal zero sequence, and all of them arise this way.
    std::set<std::vector<int>> seen;
    EnumerationSpec spec;
    spec.n = n;
    spec.length = len - 1;
    for_each_zero_free(spec, [&](const GroupSequence& s) {
        int t = (n - s.sum_mod()) % n;
        std::vector<int> full = s.terms;
        full.insert(std::lower_bound(full.begin(), full.end(), t), t);
        seen.insert(std::move(full));
    });
    out.reserve(seen.size());
    for (const auto& terms : seen) {
        GroupSequence seq;
        seq.n = n;
        seq.terms = terms;
        out.push_back(seq);
    }
    return out;
}

namespace {

struct Cell {
    int n;
    int length;
};

void check_cell(const Cell& cell, std::uint64_t& checked,
                std::vector<Violation>& violations) {
    EnumerationSpec spec;
    spec.n = cell.n;
    spec.length = cell.length;
    spec.canonical_only = true;
    for_each_zero_free(spec, [&](const GroupSequence& s) {
        ++checked;
        IndexReport rep = index_of(s);
        if (rep.index >= cell.n)
            violations.push_back({cell.n, s.terms,
                                  "index not below n: " + std::to_string(rep.index)});
        try {
            decompose(s);
        } catch (const std::exception& e) {
            violations.push_back({cell.n, s.terms,
                                  std::string("decompose failed: ") + e.what()});
        }
    });
}

}  // namespace

VerificationReport verify_theorem_major(int n_lo, int n_hi, bool parallel) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport report;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    std::vector<Cell> cells;
    for (int n = std::max(2, n_lo); n <= n_hi; ++n)
        for (int len = n / 2 + 1; len <= n - 1; ++len) cells.push_back({n, len});

    const int C = static_cast<int>(cells.size());
    std::vector<std::uint64_t> counts(cells.size(), 0);
    std::vector<std::vector<Violation>> viols(cells.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < C; ++i) check_cell(cells[i], counts[i], viols[i]);
    } else {
        for (int i = 0; i < C; ++i) check_cell(cells[i], counts[i], viols[i]);
    }
    for (int i = 0; i < C; ++i) {
        report.sequences_checked += counts[i];
        report.violations.insert(report.violations.end(), viols[i].begin(),
                                 viols[i].end());
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

bool FamilyReport::ok() const {
    return zero_free && length_ok && min_L_over_units > n &&
           variant_minimal_zero && variant_index == 2LL * n;
}

FamilyReport counterexample_families(int n) {
    const bool even = (n % 2 == 0);
    if ((even && n < 6) || (!even && n < 9))
        throw std::invalid_argument(
            "counterexample_families: need even n >= 6 or odd n >= 9");
    FamilyReport rep;
    rep.n = n;
    std::vector<int> terms;
    int expected_len;
    if (even) {
        terms.assign(n / 2 - 1, 2);
        terms.push_back(3);
        expected_len = n / 2;
    } else {
        terms.assign((n - 5) / 2, 2);
        terms.push_back(3);
        terms.push_back(3);
        expected_len = (n - 1) / 2;
    }
    rep.family = GroupSequence(n, terms);
    rep.zero_free = is_zero_free(rep.family);
    rep.length_ok = (rep.family.length() == expected_len);
    long long min_l = -1;
    for (int g : units_mod(n)) {
        long long l = seq_L(multiply_unit(rep.family, g));
        if (min_l < 0 || l < min_l) min_l = l;
    }
    rep.min_L_over_units = min_l;

    rep.minimal_variant = rep.family;
    rep.minimal_variant.terms.push_back(n - 1);
    rep.variant_minimal_zero = is_minimal_zero_sequence(rep.minimal_variant);
    rep.variant_index = index_of(rep.minimal_variant).index;
    return rep;
}

}  // namespace zfseq
