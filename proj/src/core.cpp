#include "zfseq/core.hpp"

#include <algorithm>
#include <bit>

namespace zfseq {

int gcd_int(int a, int b) {
    while (b != 0) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

int mod_inverse(int g, int n) {
    // extended Euclid
    long long r0 = n, r1 = ((g % n) + n) % n;
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: not a unit mod n");
    return static_cast<int>(((t0 % n) + n) % n);
}

std::vector<int> units_mod(int n) {
    std::vector<int> us;
    for (int g = 1; g < n; ++g)
        if (gcd_int(g, n) == 1) us.push_back(g);
    if (n == 1) us.push_back(0);  // not used; n >= 2 everywhere
    return us;
}

GroupSequence::GroupSequence(int modulus, std::vector<int> raw_terms)
    : n(modulus), terms(std::move(raw_terms)) {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2");
    for (int& t : terms) {
        t %= n;
        if (t < 0) t += n;
    }
}

int GroupSequence::sum_mod() const {
    long long s = 0;
    for (int t : terms) s += t;
    return static_cast<int>(s % n);
}

int lpr(int a, int n) {
    a %= n;
    if (a < 0) a += n;
    return a == 0 ? n : a;
}

long long seq_L(const GroupSequence& alpha) {
    long long s = 0;
    for (int t : alpha.terms) s += lpr(t, alpha.n);
    return s;
}

Sumset::Sumset(int n) : n_(n), w_((n + 63) / 64, 0) {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2");
}

bool Sumset::test(int j) const {
    return (w_[static_cast<size_t>(j) >> 6] >> (j & 63)) & 1u;
}

void Sumset::set(int j) {
    w_[static_cast<size_t>(j) >> 6] |= std::uint64_t{1} << (j & 63);
}

int Sumset::count() const {
    int c = 0;
    for (std::uint64_t x : w_) c += std::popcount(x);
    return c;
}

Sumset Sumset::rotated(int b) const {
    b %= n_;
    if (b < 0) b += n_;
    Sumset r(n_);
    if (b == 0) {
        r.w_ = w_;
        return r;
    }
    const size_t W = w_.size();
    if (W == 1) {
        std::uint64_t x = w_[0];
        std::uint64_t shifted = (x << b) | (b == n_ ? 0 : (x >> (n_ - b)));
        std::uint64_t mask = (n_ == 64) ? ~std::uint64_t{0}
                                        : ((std::uint64_t{1} << n_) - 1);
        r.w_[0] = shifted & mask;
        return r;
    }
    // shift left by b into a scratch of 2n bits, then fold bits >= n back
    const int q = b >> 6, s = b & 63;
    std::vector<std::uint64_t> t(W + q + 1, 0);
    for (size_t i = 0; i < W; ++i) {
        t[i + q] |= (s ? (w_[i] << s) : w_[i]);
        if (s) t[i + q + 1] |= w_[i] >> (64 - s);
    }
    const int q2 = n_ >> 6, s2 = n_ & 63;
    for (size_t i = 0; i < W; ++i) {
        std::uint64_t lo = t[i];
        size_t hi_idx = i + q2;
        std::uint64_t wrapped = 0;
        if (hi_idx < t.size()) {
            wrapped = s2 ? (t[hi_idx] >> s2) : t[hi_idx];
            if (s2 && hi_idx + 1 < t.size()) wrapped |= t[hi_idx + 1] << (64 - s2);
        }
        r.w_[i] = lo | wrapped;
    }
    // mask the top word to n bits
    int top_bits = n_ & 63;
    if (top_bits) r.w_.back() &= (std::uint64_t{1} << top_bits) - 1;
    return r;
}

void Sumset::add_term(int b) {
    Sumset shifted = rotated(b);
    or_with(shifted);
    set(((b % n_) + n_) % n_);
}

void Sumset::or_with(const Sumset& other) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
}

Sumset Sumset::and_not(const Sumset& other) const {
    Sumset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~other.w_[i];
    return r;
}

std::vector<int> Sumset::elements() const {
    std::vector<int> out;
    for (size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t x = w_[i];
        while (x) {
            int bit = std::countr_zero(x);
            out.push_back(static_cast<int>(i * 64) + bit);
            x &= x - 1;
        }
    }
    return out;
}

Sumset sumset(const GroupSequence& alpha) {
    Sumset s(alpha.n);
    for (int t : alpha.terms) s.add_term(t);
    return s;
}

std::optional<ZeroSumWitness> find_zero_subsequence(const GroupSequence& alpha) {
    const int n = alpha.n;
    // parent[j]: term index and previous residue through which j first
    // became reachable (-1 previous residue = singleton {terms[i]})
    std::vector<int> parent_term(n, -1), parent_prev(n, -2);
    Sumset reach(n);
    for (int i = 0; i < alpha.length(); ++i) {
        const int b = alpha.terms[i];
        Sumset next = reach.rotated(b);
        next.set(b);
        Sumset fresh = next.and_not(reach);
        for (int j : fresh.elements()) {
            int prev = (j - b % n + n) % n;
            parent_term[j] = i;
            // j is either the singleton (b) or prev + b with prev already reached
            parent_prev[j] = (j != b && reach.test(prev)) ? prev : -1;
        }
        reach.or_with(fresh);
        if (reach.contains_zero()) {
            ZeroSumWitness w;
            int j = 0;
            while (true) {
                w.positions.push_back(parent_term[j]);
                if (parent_prev[j] < 0) break;
                j = parent_prev[j];
            }
            std::sort(w.positions.begin(), w.positions.end());
            return w;
        }
    }
    return std::nullopt;
}

bool is_zero_free(const GroupSequence& alpha) {
    return !sumset(alpha).contains_zero();
}

GroupSequence multiply_unit(const GroupSequence& alpha, int g) {
    const int n = alpha.n;
    int gm = ((g % n) + n) % n;
    if (gcd_int(gm, n) != 1)
        throw std::invalid_argument("multiply_unit: multiplier is not a unit mod n");
    GroupSequence out;
    out.n = n;
    out.terms.reserve(alpha.terms.size());
    for (int t : alpha.terms)
        out.terms.push_back(static_cast<int>((static_cast<long long>(gm) * t) % n));
    return out;
}

GroupSequence canonical_form(const GroupSequence& alpha) {
    const int n = alpha.n;
    std::vector<int> best;
    bool have = false;
    for (int g : units_mod(n)) {
        std::vector<int> v;
        v.reserve(alpha.terms.size());
        for (int t : alpha.terms)
            v.push_back(lpr(static_cast<int>((static_cast<long long>(g) * t) % n), n));
        std::sort(v.begin(), v.end());
        if (!have || v < best) {
            best = std::move(v);
            have = true;
        }
    }
    GroupSequence out;
    out.n = n;
    out.terms.reserve(best.size());
    for (int v : best) out.terms.push_back(v % n);
    return out;
}

int element_order(int a, int n) {
    int am = ((a % n) + n) % n;
    if (am == 0) throw std::invalid_argument("element_order: zero element");
    return n / gcd_int(am, n);
}

}  // namespace zfseq
